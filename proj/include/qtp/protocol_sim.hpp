#pragma once

/// @file protocol_sim.hpp
/// Monte-Carlo simulation of the three-party protocol: Alice's lab (A1), the
/// post office (A2) and Bob (B). Alice and the post office measure jointly in
/// the entangled basis, send the outcome index over a classical channel, and
/// Bob applies the recovery map when one exists.

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "qtp/analysis.hpp"
#include "qtp/rng.hpp"

namespace qtp {

enum class EventKind { prepare, entangle, joint_measure, classical_send, recover };

inline const char* event_kind_name(EventKind e) {
    switch (e) {
        case EventKind::prepare: return "prepare";
        case EventKind::entangle: return "entangle";
        case EventKind::joint_measure: return "joint_measure";
        case EventKind::classical_send: return "classical_send";
        case EventKind::recover: return "recover";
    }
    return "?";
}

struct Event {
    EventKind kind;
    std::string party;
    std::string detail;

    friend bool operator==(const Event&, const Event&) = default;
};

struct TrialRecord {
    int channel = 0;
    State3 input_state{};
    int outcome = 0;
    double outcome_probability = 0.0;
    int classical_message = 0;  ///< the outcome index, as sent to Bob
    bool recovery_applied = false;
    std::optional<double> fidelity;  ///< nullopt: no recovery for this outcome
    std::uint64_t seed = 0;
    std::vector<Event> event_log;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// Events must appear in exactly this order.
inline bool causal_order(const std::vector<Event>& log) {
    static constexpr std::array<EventKind, 5> expected{EventKind::prepare, EventKind::entangle,
                                                       EventKind::joint_measure, EventKind::classical_send,
                                                       EventKind::recover};
    if (log.size() != expected.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (log[i].kind != expected[i]) return false;
    return true;
}

/// Born weights ||G_k phi||^2 of the nine outcomes.
inline std::array<double, 9> born_weights(const NumericGateTable& table, int channel, const State3& phi) {
    std::array<double, 9> w{};
    for (int k = 0; k < 9; ++k) w[static_cast<std::size_t>(k)] = norm_sq(apply_gate(table.at(channel, k).gate, phi));
    return w;
}

/// One run of the protocol. With paper gates the Born weights need not sum to
/// one; they are renormalized before sampling.
inline TrialRecord run_trial(int channel, const State3& phi, std::uint64_t seed,
                             GateSource source = GateSource::oracle) {
    detail::require_channel(channel);
    require_normalized(phi);
    const auto& table = numeric_gates(source);

    TrialRecord rec;
    rec.channel = channel;
    rec.input_state = phi;
    rec.seed = seed;
    rec.event_log.push_back({EventKind::prepare, "A1", "input state prepared"});
    rec.event_log.push_back({EventKind::entangle, "A2-B", "shared |Psi_" + std::to_string(channel) + ">"});

    const auto w = born_weights(table, channel, phi);
    double total = 0.0;
    for (double x : w) total += x;

    Xoshiro256StarStar rng(seed);
    const double u = uniform01(rng) * total;
    int k = -1;
    double cumulative = 0.0;
    for (int j = 0; j < 9; ++j) {
        const double p = w[static_cast<std::size_t>(j)];
        if (p <= 0.0) continue;
        cumulative += p;
        k = j;
        if (u < cumulative) break;
    }
    rec.outcome = k;
    rec.outcome_probability = w[static_cast<std::size_t>(k)] / total;
    rec.event_log.push_back({EventKind::joint_measure, "A1-A2", "outcome |Psi_" + std::to_string(k) + ">"});

    rec.classical_message = k;
    rec.event_log.push_back({EventKind::classical_send, "A1A2->B", std::to_string(k)});

    const NumericGate& g = table.at(channel, k);
    rec.fidelity = fidelity_after_recovery(g, phi);
    rec.recovery_applied = rec.fidelity.has_value();
    rec.event_log.push_back(
        {EventKind::recover, "B", rec.recovery_applied ? "inverse gate applied" : "no recovery: singular gate"});
    return rec;
}

/// Input states: one fixed state for every trial, or Haar-random per trial.
struct FixedState {
    State3 state;
};
struct HaarRandom {};
using StateMode = std::variant<FixedState, HaarRandom>;

/// Uniform on the unit sphere of C^3: a normalized 6-component standard Gaussian.
template <class Gen>
State3 haar_state(Gen& g) {
    State3 v{};
    for (auto& a : v) {
        const auto [re, im] = gaussian_pair(g);
        a = {re, im};
    }
    return normalized(v);
}

struct BatchSummary {
    int channel = 0;
    std::uint64_t master_seed = 0;
    std::size_t trials = 0;
    std::array<std::size_t, 9> outcome_counts{};
    std::array<double, 9> empirical_outcome_frequencies{};
    std::array<double, 9> expected_outcome_frequencies{};  ///< mean Born probability per outcome
    std::optional<double> mean_fidelity_invertible;        ///< after recovery; nullopt if no invertible outcome drawn
    double mean_fidelity_all_outcomes = 0.0;               ///< singular outcomes scored without recovery
    double singular_outcome_rate = 0.0;
    double chi_square_vs_born = 0.0;
    int chi_square_dof = 0;
    std::optional<double> chi_square_critical_0999;
    bool chi_square_flagged = false;  ///< statistic above the 0.999 quantile
    double mean_born_weight_total = 0.0;  ///< 1 for a complete gate set
};

using TrialSink = std::function<void(std::size_t, const TrialRecord&)>;

/// n trials with seeds derived from master_seed by SplitMix64. Fixed-state
/// mode draws one seed per trial; Haar mode draws a state seed, then a trial seed.
inline BatchSummary run_batch(int channel, std::size_t n, std::uint64_t master_seed, const StateMode& mode,
                              GateSource source = GateSource::oracle, const TrialSink& sink = {}) {
    detail::require_channel(channel);
    if (n == 0) throw std::invalid_argument("run_batch: need at least one trial");
    const auto& table = numeric_gates(source);

    BatchSummary s;
    s.channel = channel;
    s.master_seed = master_seed;
    s.trials = n;

    SplitMix64 seeds(master_seed);
    std::array<double, 9> expected{};
    double fid_inv_sum = 0.0;
    double fid_all_sum = 0.0;
    double weight_sum = 0.0;
    std::size_t invertible = 0;
    std::size_t singular = 0;

    for (std::size_t t = 0; t < n; ++t) {
        State3 phi{};
        if (const auto* fixed = std::get_if<FixedState>(&mode)) {
            phi = fixed->state;
        } else {
            Xoshiro256StarStar state_rng(seeds());
            phi = haar_state(state_rng);
        }
        const TrialRecord rec = run_trial(channel, phi, seeds(), source);

        const auto w = born_weights(table, channel, phi);
        double total = 0.0;
        for (double x : w) total += x;
        weight_sum += total;
        for (std::size_t k = 0; k < 9; ++k) expected[k] += w[k] / total;

        ++s.outcome_counts[static_cast<std::size_t>(rec.outcome)];
        if (rec.fidelity) {
            ++invertible;
            fid_inv_sum += *rec.fidelity;
            fid_all_sum += *rec.fidelity;
        } else {
            ++singular;
            fid_all_sum += raw_fidelity(table.at(channel, rec.outcome), phi);
        }
        if (sink) sink(t, rec);
    }

    const double dn = static_cast<double>(n);
    for (std::size_t k = 0; k < 9; ++k) {
        s.empirical_outcome_frequencies[k] = static_cast<double>(s.outcome_counts[k]) / dn;
        s.expected_outcome_frequencies[k] = expected[k] / dn;
    }
    if (invertible > 0) s.mean_fidelity_invertible = fid_inv_sum / static_cast<double>(invertible);
    s.mean_fidelity_all_outcomes = fid_all_sum / dn;
    s.singular_outcome_rate = static_cast<double>(singular) / dn;
    s.mean_born_weight_total = weight_sum / dn;

    int bins = 0;
    for (std::size_t k = 0; k < 9; ++k) {
        if (expected[k] <= 0.0) continue;
        ++bins;
        const double diff = static_cast<double>(s.outcome_counts[k]) - expected[k];
        s.chi_square_vs_born += diff * diff / expected[k];
    }
    s.chi_square_dof = bins - 1;
    if (s.chi_square_dof >= 1) {
        const boost::math::chi_squared dist(s.chi_square_dof);
        s.chi_square_critical_0999 = boost::math::quantile(dist, 0.999);
        s.chi_square_flagged = s.chi_square_vs_born > *s.chi_square_critical_0999;
    }
    return s;
}

}  // namespace qtp
