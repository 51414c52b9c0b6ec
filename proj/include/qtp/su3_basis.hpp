#pragma once

/// @file su3_basis.hpp
/// The nine two-qutrit entangled states: one singlet, seven Bell-like states
/// and one octet state. They form an orthonormal basis of the 9-dim space.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtp/qutrit_core.hpp"

namespace qtp {

inline constexpr int kBasisSize = 9;

enum class Family { singlet, bell_like, octet };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::singlet: return "singlet";
        case Family::bell_like: return "bell_like";
        case Family::octet: return "octet";
    }
    return "?";
}

struct EntangledState {
    int index;
    Ket ket;
    Family family;
};

using Matrix9 = std::array<std::array<ExtScalar, 9>, 9>;

namespace detail {

inline void require_state_index(int i) {
    if (i < 0 || i >= kBasisSize) throw std::out_of_range("entangled state index out of range: " + std::to_string(i));
}

inline void require_qutrit_index(int j) {
    if (j < 0 || j > 2) throw std::out_of_range("qutrit basis index out of range: " + std::to_string(j));
}

struct PairTerm {
    int x, y, weight;
};

// scale * sum weight |x>|y>
inline std::vector<ExtScalar> pair_vector(const ExtScalar& scale, std::initializer_list<PairTerm> terms) {
    std::vector<ExtScalar> v(9);
    for (const auto& t : terms) v[3 * t.x + t.y] = ExtScalar(t.weight) * scale;
    return v;
}

inline const std::array<std::vector<ExtScalar>, 9>& basis_amplitudes() {
    static const std::array<std::vector<ExtScalar>, 9> table = [] {
        const ExtScalar r3 = ExtScalar::surd(1, 3, 3);  // 1/sqrt3
        const ExtScalar r2 = ExtScalar::surd(1, 2, 2);  // 1/sqrt2
        const ExtScalar r6 = ExtScalar::surd(1, 6, 6);  // 1/sqrt6
        return std::array<std::vector<ExtScalar>, 9>{
            pair_vector(r3, {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}}),
            pair_vector(r2, {{1, 0, 1}, {0, 1, 1}}),
            pair_vector(r2, {{1, 0, 1}, {0, 1, -1}}),
            pair_vector(r2, {{1, 1, -1}, {2, 2, 1}}),
            pair_vector(r2, {{2, 0, 1}, {0, 2, 1}}),
            pair_vector(r2, {{2, 0, 1}, {0, 2, -1}}),
            pair_vector(r2, {{2, 1, 1}, {1, 2, 1}}),
            pair_vector(r2, {{2, 1, 1}, {1, 2, -1}}),
            pair_vector(r6, {{0, 0, -2}, {1, 1, 1}, {2, 2, 1}}),
        };
    }();
    return table;
}

}  // namespace detail

inline Family family_of(int i) {
    detail::require_state_index(i);
    if (i == 0) return Family::singlet;
    if (i == 8) return Family::octet;
    return Family::bell_like;
}

/// |Psi_i> on the given pair of sites (A2B by default, A1A2 for Alice's side).
inline EntangledState entangled_state(int i, Site site = Site::A2B) {
    detail::require_state_index(i);
    if (site != Site::A2B && site != Site::A1A2) throw std::invalid_argument("entangled states live on A2B or A1A2");
    return {i, Ket::constant(site, detail::basis_amplitudes()[static_cast<std::size_t>(i)]), family_of(i)};
}

/// <a|b> for two constant kets of equal dimension.
inline ExtScalar inner(const Ket& a, const Ket& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    ExtScalar s;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a.value(i) * b.value(i);
    return s;
}

inline Matrix9 gram_matrix() {
    Matrix9 g;
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            g[a][b] = inner(entangled_state(a).ket, entangled_state(b).ket);
    return g;
}

/// sum_i |Psi_i><Psi_i| as a 9x9 matrix.
inline Matrix9 projector_sum() {
    Matrix9 s;
    for (int i = 0; i < 9; ++i) {
        const Ket k = entangled_state(i).ket;
        for (std::size_t r = 0; r < 9; ++r)
            for (std::size_t c = 0; c < 9; ++c) s[r][c] += k.value(r) * k.value(c);
    }
    return s;
}

inline bool is_identity(const Matrix9& m) {
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 9; ++c)
            if (!(m[r][c] == ExtScalar(r == c ? 1 : 0))) return false;
    return true;
}

/// |a2>|b> = sum_i coefficients[i] |Psi_i>.
struct ExpansionRow {
    int a2;
    int b;
    std::array<ExtScalar, 9> coefficients;

    friend bool operator==(const ExpansionRow&, const ExpansionRow&) = default;
};

/// Expansion of a product basis state, computed by projecting onto each |Psi_i>.
inline ExpansionRow expand_product(int a2, int b) {
    detail::require_qutrit_index(a2);
    detail::require_qutrit_index(b);
    const Ket e = Ket::basis(Site::A2B, static_cast<std::size_t>(3 * a2 + b));
    ExpansionRow row{a2, b, {}};
    for (int i = 0; i < 9; ++i) row.coefficients[static_cast<std::size_t>(i)] = inner(entangled_state(i).ket, e);
    return row;
}

/// sum_i coefficients[i] |Psi_i>, as a constant A2B ket.
inline Ket reconstruct(const ExpansionRow& row) {
    Ket out = Ket::zero(Site::A2B, false);
    for (int i = 0; i < 9; ++i) out = out + row.coefficients[static_cast<std::size_t>(i)] * entangled_state(i).ket;
    return out;
}

}  // namespace qtp
