#pragma once

/// @file qutrit_core.hpp
/// Fixed-dimension exact linear algebra for one, two and three qutrits.
///
/// Flat index convention, used everywhere in this library:
///   pair X (x) Y          -> 3*x + y
///   A1 (x) A2 (x) B       -> 9*a1 + 3*a2 + b
/// so for a fixed (a1, a2) the three B amplitudes are contiguous.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtp/exact_scalar.hpp"

namespace qtp {

/// a0*c0 + a1*c1 + a2*c2 in the symbolic input amplitudes (c0, c1, c2).
/// There is no constant term and no product of two c's.
struct LinearForm {
    std::array<ExtScalar, 3> coef{};

    static LinearForm symbol(std::size_t j) {
        LinearForm f;
        f.coef.at(j) = 1;
        return f;
    }

    bool is_zero() const { return coef[0].is_zero() && coef[1].is_zero() && coef[2].is_zero(); }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

    friend LinearForm operator+(const LinearForm& a, const LinearForm& b) {
        return {{a.coef[0] + b.coef[0], a.coef[1] + b.coef[1], a.coef[2] + b.coef[2]}};
    }
    friend LinearForm operator-(const LinearForm& a, const LinearForm& b) {
        return {{a.coef[0] - b.coef[0], a.coef[1] - b.coef[1], a.coef[2] - b.coef[2]}};
    }
    friend LinearForm operator*(const ExtScalar& s, const LinearForm& f) {
        return {{s * f.coef[0], s * f.coef[1], s * f.coef[2]}};
    }
    LinearForm& operator+=(const LinearForm& o) { return *this = *this + o; }
};

/// Which subsystem(s) a ket lives on.
enum class Site { A1, A2, B, A2B, A1A2, A1A2B };

inline std::size_t site_dimension(Site s) {
    switch (s) {
        case Site::A1:
        case Site::A2:
        case Site::B: return 3;
        case Site::A2B:
        case Site::A1A2: return 9;
        case Site::A1A2B: return 27;
    }
    throw std::logic_error("unreachable site");
}

inline const char* site_name(Site s) {
    switch (s) {
        case Site::A1: return "A1";
        case Site::A2: return "A2";
        case Site::B: return "B";
        case Site::A2B: return "A2B";
        case Site::A1A2: return "A1A2";
        case Site::A1A2B: return "A1A2B";
    }
    return "?";
}

/// Site of x (x) y, or nullopt for pairings that are not part of the protocol.
inline std::optional<Site> joint_site(Site x, Site y) {
    if (x == Site::A1 && y == Site::A2) return Site::A1A2;
    if (x == Site::A2 && y == Site::B) return Site::A2B;
    if (x == Site::A1 && y == Site::A2B) return Site::A1A2B;
    if (x == Site::A1A2 && y == Site::B) return Site::A1A2B;
    return std::nullopt;
}

/// Exact ket whose amplitudes are either constants or linear forms in c.
///
/// A constant ket stores its amplitude in coef[0] of each LinearForm with the
/// other two coefficients zero; `depends_on_input()` tells the two cases apart.
class Ket {
public:
    Ket(Site site, std::vector<LinearForm> amplitudes, bool depends_on_input)
        : site_(site), amps_(std::move(amplitudes)), linear_(depends_on_input) {
        if (amps_.size() != site_dimension(site_))
            throw std::invalid_argument("Ket: amplitude count does not match site dimension");
        if (!linear_) {
            for (const auto& a : amps_)
                if (!a.coef[1].is_zero() || !a.coef[2].is_zero())
                    throw std::invalid_argument("Ket: constant ket with c1/c2 coefficients");
        }
    }

    static Ket zero(Site site, bool depends_on_input) {
        return Ket(site, std::vector<LinearForm>(site_dimension(site)), depends_on_input);
    }

    static Ket constant(Site site, const std::vector<ExtScalar>& values) {
        std::vector<LinearForm> amps(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) amps[i].coef[0] = values[i];
        return Ket(site, std::move(amps), false);
    }

    /// Computational basis ket |j>.
    static Ket basis(Site site, std::size_t j) {
        Ket k = zero(site, false);
        k.amps_.at(j).coef[0] = 1;
        return k;
    }

    /// The symbolic input c0|0> + c1|1> + c2|2>.
    static Ket symbolic_input(Site site) {
        if (site_dimension(site) != 3) throw std::invalid_argument("symbolic input lives on a single qutrit");
        return Ket(site, {LinearForm::symbol(0), LinearForm::symbol(1), LinearForm::symbol(2)}, true);
    }

    Site site() const { return site_; }
    std::size_t dim() const { return amps_.size(); }
    bool depends_on_input() const { return linear_; }
    const std::vector<LinearForm>& amplitudes() const { return amps_; }
    const LinearForm& operator[](std::size_t i) const { return amps_.at(i); }

    /// Amplitude of a constant ket.
    const ExtScalar& value(std::size_t i) const {
        if (linear_) throw std::logic_error("Ket::value on an input-dependent ket");
        return amps_.at(i).coef[0];
    }

    bool is_zero() const {
        for (const auto& a : amps_)
            if (!a.is_zero()) return false;
        return true;
    }

    /// Same ket, relabelled onto another site of equal dimension.
    Ket on_site(Site s) const {
        if (site_dimension(s) != dim()) throw std::invalid_argument("Ket::on_site: dimension mismatch");
        return Ket(s, amps_, linear_);
    }

    /// Amplitude-wise equality; site labels are not compared.
    bool same_amplitudes(const Ket& o) const {
        if (dim() != o.dim()) return false;
        if (linear_ != o.linear_) return is_zero() && o.is_zero();
        return amps_ == o.amps_;
    }

    friend bool operator==(const Ket& a, const Ket& b) {
        return a.site_ == b.site_ && a.linear_ == b.linear_ && a.amps_ == b.amps_;
    }

    friend Ket operator+(const Ket& a, const Ket& b) {
        a.require_compatible(b);
        std::vector<LinearForm> out(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.amps_[i] + b.amps_[i];
        return Ket(a.site_, std::move(out), a.linear_ || b.linear_);
    }

    friend Ket operator-(const Ket& a, const Ket& b) {
        a.require_compatible(b);
        std::vector<LinearForm> out(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.amps_[i] - b.amps_[i];
        return Ket(a.site_, std::move(out), a.linear_ || b.linear_);
    }

    friend Ket operator*(const ExtScalar& s, const Ket& k) {
        std::vector<LinearForm> out(k.dim());
        for (std::size_t i = 0; i < k.dim(); ++i) out[i] = s * k.amps_[i];
        return Ket(k.site_, std::move(out), k.linear_);
    }

private:
    void require_compatible(const Ket& o) const {
        if (dim() != o.dim()) throw std::invalid_argument("Ket: dimension mismatch");
        if (site_ != o.site_) throw std::invalid_argument("Ket: site mismatch");
        if (linear_ != o.linear_ && !is_zero() && !o.is_zero())
            throw std::invalid_argument("Ket: cannot add a constant ket to an input-dependent ket");
    }

    Site site_;
    std::vector<LinearForm> amps_;
    bool linear_;
};

/// Dense exact 3x3 matrix, row-major: m(row, col) is <row| M |col>.
class Matrix3 {
public:
    using Rows = std::array<std::array<ExtScalar, 3>, 3>;

    Matrix3() = default;
    explicit Matrix3(Rows rows) : m_(std::move(rows)) {}

    static Matrix3 identity() {
        Matrix3 out;
        for (std::size_t i = 0; i < 3; ++i) out.m_[i][i] = 1;
        return out;
    }

    /// |row><col|
    static Matrix3 outer(std::size_t row, std::size_t col) {
        Matrix3 out;
        out.m_.at(row).at(col) = 1;
        return out;
    }

    ExtScalar& operator()(std::size_t r, std::size_t c) { return m_.at(r).at(c); }
    const ExtScalar& operator()(std::size_t r, std::size_t c) const { return m_.at(r).at(c); }
    const Rows& rows() const { return m_; }

    bool is_zero() const {
        for (const auto& row : m_)
            for (const auto& x : row)
                if (!x.is_zero()) return false;
        return true;
    }

    ExtScalar trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }

    ExtScalar determinant() const {
        const auto& a = m_;
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    }

    friend bool operator==(const Matrix3&, const Matrix3&) = default;

    friend Matrix3 operator+(const Matrix3& a, const Matrix3& b) {
        Matrix3 out;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) out.m_[r][c] = a.m_[r][c] + b.m_[r][c];
        return out;
    }

    friend Matrix3 operator-(const Matrix3& a, const Matrix3& b) {
        Matrix3 out;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) out.m_[r][c] = a.m_[r][c] - b.m_[r][c];
        return out;
    }

    friend Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
        Matrix3 out;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                for (std::size_t j = 0; j < 3; ++j) out.m_[r][c] += a.m_[r][j] * b.m_[j][c];
        return out;
    }

    friend Matrix3 operator*(const ExtScalar& s, const Matrix3& a) {
        Matrix3 out;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) out.m_[r][c] = s * a.m_[r][c];
        return out;
    }

private:
    Rows m_{};
};

/// The coefficient field is real, so the adjoint is the transpose.
inline Matrix3 dagger(const Matrix3& m) {
    Matrix3 out;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) out(r, c) = m(c, r);
    return out;
}

inline Matrix3 mat_mul(const Matrix3& a, const Matrix3& b) { return a * b; }
inline Matrix3 mat_sub(const Matrix3& a, const Matrix3& b) { return a - b; }

/// Squared Frobenius norm, tr(M^T M).
inline ExtScalar frobenius_sq(const Matrix3& m) {
    ExtScalar s;
    for (const auto& row : m.rows())
        for (const auto& x : row) s += x * x;
    return s;
}

enum class Provenance { oracle, paper, derived_recovery };

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::oracle: return "oracle";
        case Provenance::paper: return "paper";
        case Provenance::derived_recovery: return "derived-recovery";
    }
    return "?";
}

/// A 3x3 operator on Bob's qutrit, tagged with where it came from.
struct Operator3 {
    Matrix3 entries;
    Provenance provenance = Provenance::oracle;
    std::optional<int> channel;
    std::optional<int> outcome;

    friend bool operator==(const Operator3&, const Operator3&) = default;
};

/// Tensor product under the flat-index convention. At most one factor may
/// depend on the input amplitudes.
inline Ket tensor(const Ket& x, const Ket& y) {
    if (x.depends_on_input() && y.depends_on_input())
        throw std::invalid_argument("tensor: both factors depend on the input; c*c terms are outside the linear model");
    const auto site = joint_site(x.site(), y.site());
    if (!site) throw std::invalid_argument(std::string("tensor: unsupported site pairing ") + site_name(x.site()) +
                                           " (x) " + site_name(y.site()));
    const std::size_t dy = y.dim();
    std::vector<LinearForm> out(x.dim() * dy);
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < dy; ++j) {
            if (x.depends_on_input())
                out[i * dy + j] = y[j].coef[0] * x[i];
            else
                out[i * dy + j] = x[i].coef[0] * y[j];
        }
    return Ket(*site, std::move(out), x.depends_on_input() || y.depends_on_input());
}

/// (<bra|_{A1A2} (x) 1_B) |composite>_{A1A2B}. No conjugation: the field is real.
inline Ket partial_inner(const Ket& bra, const Ket& composite) {
    if (bra.dim() != 9 || composite.dim() != 27)
        throw std::invalid_argument("partial_inner: expected a 9-dim bra and a 27-dim composite");
    if (bra.depends_on_input()) throw std::invalid_argument("partial_inner: bra must be constant");
    std::vector<LinearForm> out(3);
    for (std::size_t p = 0; p < 9; ++p) {
        const ExtScalar& w = bra.value(p);
        if (w.is_zero()) continue;
        for (std::size_t b = 0; b < 3; ++b) out[b] += w * composite[3 * p + b];
    }
    return Ket(Site::B, std::move(out), composite.depends_on_input());
}

/// The unique M with M(b, j) = coefficient of c_j in amplitude b.
inline Matrix3 extract_matrix(const Ket& s) {
    if (s.dim() != 3) throw std::invalid_argument("extract_gate: expected a single-qutrit ket");
    if (!s.depends_on_input() && !s.is_zero())
        throw std::invalid_argument("extract_gate: ket does not depend on the input amplitudes");
    Matrix3 m;
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t j = 0; j < 3; ++j) m(b, j) = s[b].coef[j];
    return m;
}

inline Operator3 extract_gate(const Ket& s, Provenance provenance = Provenance::oracle,
                              std::optional<int> channel = std::nullopt, std::optional<int> outcome = std::nullopt) {
    return Operator3{extract_matrix(s), provenance, channel, outcome};
}

/// M applied to a single-qutrit ket (constant or linear in c).
inline Ket apply(const Matrix3& m, const Ket& k) {
    if (k.dim() != 3) throw std::invalid_argument("apply: expected a single-qutrit ket");
    std::vector<LinearForm> out(3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            if (!m(r, c).is_zero()) out[r] += m(r, c) * k[c];
    return Ket(k.site(), std::move(out), k.depends_on_input());
}

/// M applied to the symbolic input on Bob's site.
inline Ket apply_to_input(const Matrix3& m) { return apply(m, Ket::symbolic_input(Site::B)); }

}  // namespace qtp
