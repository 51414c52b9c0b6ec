#pragma once

/// @file teleport_engine.hpp
/// Derives every pre-measurement state and measurement gate from scratch.
///
/// For channel i the composite |xi_i> = |phi>_A1 (x) |Psi_i>_A2B is expanded in
/// Alice's entangled basis,
///     |xi_i> = sum_k |Psi_k>_A1A2 (x) |s_i^k>_B,
/// and each |s_i^k> is linear in (c0, c1, c2), so |s_i^k> = Lambda_i^k |phi>_B
/// fixes the gate uniquely.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtp/su3_basis.hpp"

namespace qtp {

namespace detail {
inline void require_channel(int i) {
    if (i < 0 || i >= kBasisSize) throw std::out_of_range("channel index out of range: " + std::to_string(i));
}
inline void require_outcome(int k) {
    if (k < 0 || k >= kBasisSize) throw std::out_of_range("outcome index out of range: " + std::to_string(k));
}
}  // namespace detail

/// |xi_i>_{A1A2B} := |phi>_A1 (x) |Psi_i>_A2B with symbolic phi.
inline Ket compose(int channel) {
    detail::require_channel(channel);
    return tensor(Ket::symbolic_input(Site::A1), entangled_state(channel, Site::A2B).ket);
}

/// |s_i^k>_B = (<Psi_k|_{A1A2} (x) 1) |xi_i>.
inline Ket premeasure(int channel, int outcome) {
    detail::require_outcome(outcome);
    return partial_inner(entangled_state(outcome, Site::A1A2).ket, compose(channel));
}

inline Operator3 derive_gate(int channel, int outcome) {
    return extract_gate(premeasure(channel, outcome), Provenance::oracle, channel, outcome);
}

struct OutcomeRow {
    int outcome;
    Ket premeasure;
    Operator3 gate;
};

struct ChannelDecomposition {
    int channel;
    Ket composite;
    std::vector<OutcomeRow> rows;
};

inline ChannelDecomposition derive_channel(int channel) {
    ChannelDecomposition d{channel, compose(channel), {}};
    d.rows.reserve(9);
    for (int k = 0; k < 9; ++k) {
        Ket s = partial_inner(entangled_state(k, Site::A1A2).ket, d.composite);
        Operator3 g = extract_gate(s, Provenance::oracle, channel, k);
        d.rows.push_back({k, std::move(s), std::move(g)});
    }
    return d;
}

/// All nine channels, computed once and shared read-only afterwards.
inline const std::vector<ChannelDecomposition>& derive_all() {
    static const std::vector<ChannelDecomposition> all = [] {
        std::vector<ChannelDecomposition> v;
        v.reserve(9);
        for (int i = 0; i < 9; ++i) v.push_back(derive_channel(i));
        return v;
    }();
    return all;
}

/// Cached oracle gate Lambda_i^k.
inline const Operator3& oracle_gate(int channel, int outcome) {
    detail::require_channel(channel);
    detail::require_outcome(outcome);
    return derive_all()[static_cast<std::size_t>(channel)].rows[static_cast<std::size_t>(outcome)].gate;
}

/// sum_k |Psi_k>_{A1A2} (x) |s_i^k>_B; equals the composite when the rows are right.
inline Ket reassemble(const ChannelDecomposition& d) {
    Ket out = Ket::zero(Site::A1A2B, true);
    for (const auto& row : d.rows) out = out + tensor(entangled_state(row.outcome, Site::A1A2).ket, row.premeasure);
    return out;
}

/// Delta_QT := |s_i^k>_B - gate |phi>_B. Zero exactly when the gate reproduces
/// the pre-measurement state for every input.
inline Ket delta_qt(int channel, int outcome, const Matrix3& gate) {
    return premeasure(channel, outcome) - apply_to_input(gate);
}

/// <xi|xi> as a quadratic form in c: entry (j, l) multiplies c_j c_l.
inline Matrix3 norm_form(const Ket& k) {
    Matrix3 q;
    for (const auto& a : k.amplitudes())
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t l = 0; l < 3; ++l) q(j, l) += a.coef[j] * a.coef[l];
    return q;
}

}  // namespace qtp
