#pragma once

/// @file analysis.hpp
/// Unitarity, completeness, outcome statistics and recovery for measurement gates.

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtp/paper_tables.hpp"
#include "qtp/teleport_engine.hpp"

namespace qtp {

enum class GateClass { proportional_to_unitary, invertible_not_prop_unitary, singular };

inline const char* gate_class_name(GateClass c) {
    switch (c) {
        case GateClass::proportional_to_unitary: return "proportional_to_unitary";
        case GateClass::invertible_not_prop_unitary: return "invertible_not_prop_unitary";
        case GateClass::singular: return "singular";
    }
    return "?";
}

struct GateProfile {
    std::optional<int> channel;
    std::optional<int> outcome;
    ExtScalar frobenius_norm_sq;              ///< tr(G^T G)
    ExtScalar unitarity_deviation_sq;         ///< ||G^T G - I||_F^2
    ExtScalar scaled_unitarity_deviation_sq;  ///< ||G^T G - (tr/3) I||_F^2
    int rank = 0;
    GateClass classification = GateClass::singular;
};

/// Exact rank from the determinant and the 2x2 minors.
inline int exact_rank(const Matrix3& m) {
    if (m.is_zero()) return 0;
    if (!m.determinant().is_zero()) return 3;
    for (std::size_t r0 = 0; r0 < 3; ++r0)
        for (std::size_t r1 = r0 + 1; r1 < 3; ++r1)
            for (std::size_t c0 = 0; c0 < 3; ++c0)
                for (std::size_t c1 = c0 + 1; c1 < 3; ++c1)
                    if (!(m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)).is_zero()) return 2;
    return 1;
}

inline GateProfile profile_gate(const Operator3& g) {
    const Matrix3 gram = dagger(g.entries) * g.entries;
    const ExtScalar tr = gram.trace();
    GateProfile p;
    p.channel = g.channel;
    p.outcome = g.outcome;
    p.frobenius_norm_sq = tr;
    p.unitarity_deviation_sq = frobenius_sq(gram - Matrix3::identity());
    p.scaled_unitarity_deviation_sq = frobenius_sq(gram - ExtScalar::fraction(1, 3) * tr * Matrix3::identity());
    p.rank = exact_rank(g.entries);
    if (p.rank < 3)
        p.classification = GateClass::singular;
    else if (p.scaled_unitarity_deviation_sq.is_zero())
        p.classification = GateClass::proportional_to_unitary;
    else
        p.classification = GateClass::invertible_not_prop_unitary;
    return p;
}

struct Completeness {
    Matrix3 sum;
    bool is_identity = false;
};

/// sum_k G_k^T G_k for a channel's nine gates.
inline Completeness completeness_of(const std::vector<Matrix3>& gates) {
    Completeness c;
    for (const auto& g : gates) c.sum = c.sum + dagger(g) * g;
    c.is_identity = c.sum == Matrix3::identity();
    return c;
}

inline Completeness completeness(int channel) {
    std::vector<Matrix3> gates;
    for (int k = 0; k < 9; ++k) gates.push_back(oracle_gate(channel, k).entries);
    return completeness_of(gates);
}

/// Exact inverse when the gate is invertible. The overall scale is irrelevant
/// once the output is renormalized.
inline std::optional<Operator3> recovery(const Operator3& g) {
    const Matrix3& m = g.entries;
    const ExtScalar det = m.determinant();
    if (det.is_zero()) return std::nullopt;
    const ExtScalar inv_det = inverse(det);
    Matrix3 adj;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            // cofactor of (c, r)
            const std::size_t r0 = (c + 1) % 3, r1 = (c + 2) % 3;
            const std::size_t c0 = (r + 1) % 3, c1 = (r + 2) % 3;
            adj(r, c) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        }
    return Operator3{inv_det * adj, Provenance::derived_recovery, g.channel, g.outcome};
}

// ---------------------------------------------------------------------------
// Floating-point layer

using Amplitude = std::complex<double>;
using State3 = std::array<Amplitude, 3>;
using RealMatrix3 = std::array<std::array<double, 3>, 3>;

inline constexpr double kNormTolerance = 1e-12;

class NonNormalizedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UndefinedOutcomeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline RealMatrix3 to_real(const Matrix3& m) {
    RealMatrix3 out{};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) out[r][c] = to_double(m(r, c));
    return out;
}

inline double norm_sq(const State3& v) { return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]); }

inline void require_normalized(const State3& phi) {
    const double n = std::sqrt(norm_sq(phi));
    if (!(std::abs(n - 1.0) <= kNormTolerance))
        throw NonNormalizedError("input state is not normalized (norm = " + std::to_string(n) + ")");
}

inline State3 apply_gate(const RealMatrix3& m, const State3& v) {
    State3 out{};
    for (std::size_t r = 0; r < 3; ++r) out[r] = m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2];
    return out;
}

inline State3 normalized(const State3& v) {
    const double n = std::sqrt(norm_sq(v));
    return {v[0] / n, v[1] / n, v[2] / n};
}

/// |<a|b>|^2
inline double overlap_sq(const State3& a, const State3& b) {
    return std::norm(std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2]);
}

/// Floating-point view of one gate and its recovery map.
struct NumericGate {
    RealMatrix3 gate{};
    std::optional<RealMatrix3> recovery;
};

/// All 81 gates from one source, converted to double once.
struct NumericGateTable {
    std::array<std::array<NumericGate, 9>, 9> gates{};

    const NumericGate& at(int channel, int outcome) const {
        detail::require_channel(channel);
        detail::require_outcome(outcome);
        return gates[static_cast<std::size_t>(channel)][static_cast<std::size_t>(outcome)];
    }
};

enum class GateSource { oracle, paper };

inline NumericGateTable build_numeric_table(GateSource source) {
    NumericGateTable t;
    for (int i = 0; i < 9; ++i)
        for (int k = 0; k < 9; ++k) {
            const Operator3 g = source == GateSource::oracle ? oracle_gate(i, k) : paper_gate(i, k).gate();
            auto& slot = t.gates[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            slot.gate = to_real(g.entries);
            if (auto r = recovery(g)) slot.recovery = to_real(r->entries);
        }
    return t;
}

inline const NumericGateTable& numeric_gates(GateSource source) {
    static const NumericGateTable oracle = build_numeric_table(GateSource::oracle);
    static const NumericGateTable paper = build_numeric_table(GateSource::paper);
    return source == GateSource::oracle ? oracle : paper;
}

/// <phi| G^T G |phi> = ||G phi||^2.
inline double outcome_probability(const RealMatrix3& gate, const State3& phi) {
    require_normalized(phi);
    return norm_sq(apply_gate(gate, phi));
}

inline double outcome_probability(int channel, int outcome, const State3& phi) {
    return outcome_probability(numeric_gates(GateSource::oracle).at(channel, outcome).gate, phi);
}

/// |<phi|psi_rec>|^2 after applying the recovery map to the normalized output,
/// or nullopt (no-recovery marker) when the gate is singular.
/// Throws UndefinedOutcomeError when the outcome has probability zero.
inline std::optional<double> fidelity_after_recovery(const NumericGate& g, const State3& phi) {
    require_normalized(phi);
    const State3 out = apply_gate(g.gate, phi);
    if (norm_sq(out) == 0.0) throw UndefinedOutcomeError("outcome has zero probability for this input");
    if (!g.recovery) return std::nullopt;
    const State3 rec = normalized(apply_gate(*g.recovery, normalized(out)));
    return overlap_sq(phi, rec);
}

inline std::optional<double> fidelity_after_recovery(int channel, int outcome, const State3& phi) {
    return fidelity_after_recovery(numeric_gates(GateSource::oracle).at(channel, outcome), phi);
}

/// Fidelity of the bare output state, without recovery.
inline double raw_fidelity(const NumericGate& g, const State3& phi) {
    const State3 out = apply_gate(g.gate, phi);
    if (norm_sq(out) == 0.0) throw UndefinedOutcomeError("outcome has zero probability for this input");
    return overlap_sq(phi, normalized(out));
}

/// Probability-weighted fidelity over all outcomes of a channel. Invertible
/// outcomes are scored after recovery, singular ones on the bare output.
inline double average_fidelity(int channel, const State3& phi, GateSource source = GateSource::oracle) {
    require_normalized(phi);
    const auto& table = numeric_gates(source);
    double total = 0.0;
    for (int k = 0; k < 9; ++k) {
        const auto& g = table.at(channel, k);
        const double p = norm_sq(apply_gate(g.gate, phi));
        if (p == 0.0) continue;
        total += p * (g.recovery ? *fidelity_after_recovery(g, phi) : raw_fidelity(g, phi));
    }
    return total;
}

struct ChannelAnalysis {
    int channel = 0;
    std::vector<GateProfile> profiles;
    Completeness completeness;
    int proportional_to_unitary = 0;
    int invertible_not_prop_unitary = 0;
    int singular = 0;
    int unitary = 0;  ///< gates with G^T G = I exactly
};

inline ChannelAnalysis analyze_channel(int channel) {
    ChannelAnalysis a;
    a.channel = channel;
    for (int k = 0; k < 9; ++k) {
        GateProfile p = profile_gate(oracle_gate(channel, k));
        switch (p.classification) {
            case GateClass::proportional_to_unitary: ++a.proportional_to_unitary; break;
            case GateClass::invertible_not_prop_unitary: ++a.invertible_not_prop_unitary; break;
            case GateClass::singular: ++a.singular; break;
        }
        if (p.unitarity_deviation_sq.is_zero()) ++a.unitary;
        a.profiles.push_back(std::move(p));
    }
    a.completeness = completeness(channel);
    return a;
}

}  // namespace qtp
