#pragma once

/// @file json_io.hpp
/// JSON encodings. Exact values travel as rational literals, so every exact
/// document round-trips to equality. Keys are emitted in a fixed order.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtp/analysis.hpp"
#include "qtp/errata.hpp"
#include "qtp/protocol_sim.hpp"

namespace qtp {

using Json = nlohmann::ordered_json;

inline constexpr const char* kGateTableFormat = "qutrit-gate-table";
inline constexpr int kGateTableVersion = 1;

/// Malformed or inconsistent input document.
class JsonFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Exact values

inline Json to_json(const ExtScalar& s) {
    return Json{{"q1", rational_literal(s.q1())},
                {"q2", rational_literal(s.q2())},
                {"q3", rational_literal(s.q3())},
                {"q6", rational_literal(s.q6())}};
}

namespace detail {

inline const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw JsonFormatError(where + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw JsonFormatError(where + ": missing field '" + key + "'");
    return *it;
}

inline const Json& array_of(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n)
        throw JsonFormatError(where + ": expected an array of " + std::to_string(n));
    return j;
}

inline int small_int(const Json& j, int lo, int hi, const std::string& where) {
    if (!j.is_number_integer()) throw JsonFormatError(where + ": expected an integer");
    const auto v = j.get<long long>();
    if (v < lo || v > hi)
        throw JsonFormatError(where + ": " + std::to_string(v) + " outside " + std::to_string(lo) + ".." +
                              std::to_string(hi));
    return static_cast<int>(v);
}

inline std::optional<int> optional_index(const Json& j, const std::string& where) {
    if (j.is_null()) return std::nullopt;
    return small_int(j, 0, 8, where);
}

inline Json optional_index_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace detail

inline ExtScalar ext_scalar_from_json(const Json& j, const std::string& where = "scalar") {
    if (!j.is_object() || j.size() != 4) throw JsonFormatError(where + ": expected {q1,q2,q3,q6}");
    auto get = [&](const char* key) {
        const Json& v = detail::member(j, key, where);
        if (!v.is_string()) throw JsonFormatError(where + "." + key + ": expected a rational literal string");
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw JsonFormatError(where + "." + key + ": " + e.what());
        }
    };
    return ExtScalar(get("q1"), get("q2"), get("q3"), get("q6"));
}

inline Json to_json(const LinearForm& f) {
    return Json{{"c0", to_json(f.coef[0])}, {"c1", to_json(f.coef[1])}, {"c2", to_json(f.coef[2])}};
}

inline LinearForm linear_form_from_json(const Json& j, const std::string& where = "form") {
    LinearForm f;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::string key = "c" + std::to_string(i);
        f.coef[i] = ext_scalar_from_json(detail::member(j, key.c_str(), where), where + "." + key);
    }
    return f;
}

inline Json to_json(const Ket& k) {
    Json amps = Json::array();
    for (const auto& a : k.amplitudes()) amps.push_back(to_json(a));
    return Json{{"site", site_name(k.site())}, {"depends_on_input", k.depends_on_input()}, {"amplitudes", amps}};
}

inline Site site_from_name(const std::string& name) {
    for (Site s : {Site::A1, Site::A2, Site::B, Site::A2B, Site::A1A2, Site::A1A2B})
        if (name == site_name(s)) return s;
    throw JsonFormatError("unknown site '" + name + "'");
}

inline Ket ket_from_json(const Json& j, const std::string& where = "ket") {
    const Json& site = detail::member(j, "site", where);
    const Json& dep = detail::member(j, "depends_on_input", where);
    const Json& amps = detail::member(j, "amplitudes", where);
    if (!site.is_string() || !dep.is_boolean() || !amps.is_array()) throw JsonFormatError(where + ": bad field types");
    std::vector<LinearForm> forms;
    for (std::size_t i = 0; i < amps.size(); ++i)
        forms.push_back(linear_form_from_json(amps[i], where + ".amplitudes[" + std::to_string(i) + "]"));
    try {
        return Ket(site_from_name(site.get<std::string>()), std::move(forms), dep.get<bool>());
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(where + ": " + e.what());
    }
}

inline Json to_json(const Matrix3& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < 3; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < 3; ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

inline Matrix3 matrix_from_json(const Json& j, const std::string& where = "matrix") {
    detail::array_of(j, 3, where);
    Matrix3 m;
    for (std::size_t r = 0; r < 3; ++r) {
        const std::string rw = where + "[" + std::to_string(r) + "]";
        detail::array_of(j[r], 3, rw);
        for (std::size_t c = 0; c < 3; ++c)
            m(r, c) = ext_scalar_from_json(j[r][c], rw + "[" + std::to_string(c) + "]");
    }
    return m;
}

inline Json to_json(const Operator3& g) {
    return Json{{"channel", detail::optional_index_json(g.channel)},
                {"outcome", detail::optional_index_json(g.outcome)},
                {"provenance", provenance_name(g.provenance)},
                {"entries", to_json(g.entries)}};
}

inline Provenance provenance_from_name(const std::string& name) {
    for (Provenance p : {Provenance::oracle, Provenance::paper, Provenance::derived_recovery})
        if (name == provenance_name(p)) return p;
    throw JsonFormatError("unknown provenance '" + name + "'");
}

inline Operator3 operator_from_json(const Json& j, const std::string& where = "gate") {
    Operator3 g;
    g.channel = detail::optional_index(detail::member(j, "channel", where), where + ".channel");
    g.outcome = detail::optional_index(detail::member(j, "outcome", where), where + ".outcome");
    const Json& prov = detail::member(j, "provenance", where);
    if (!prov.is_string()) throw JsonFormatError(where + ".provenance: expected a string");
    g.provenance = provenance_from_name(prov.get<std::string>());
    g.entries = matrix_from_json(detail::member(j, "entries", where), where + ".entries");
    return g;
}

inline Json to_json(const ExpansionRow& row) {
    Json coeffs = Json::array();
    for (const auto& c : row.coefficients) coeffs.push_back(to_json(c));
    return Json{{"a2", row.a2}, {"b", row.b}, {"coefficients", coeffs}};
}

// ---------------------------------------------------------------------------
// Gate table

/// 81 gates indexed [channel][outcome].
struct GateTable {
    std::string source;
    std::array<std::array<Operator3, 9>, 9> gates;

    const Operator3& at(int channel, int outcome) const {
        detail::require_channel(channel);
        detail::require_outcome(outcome);
        return gates[static_cast<std::size_t>(channel)][static_cast<std::size_t>(outcome)];
    }

    friend bool operator==(const GateTable&, const GateTable&) = default;
};

inline GateTable oracle_gate_table() {
    GateTable t;
    t.source = "oracle";
    for (int i = 0; i < 9; ++i)
        for (int k = 0; k < 9; ++k)
            t.gates[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = oracle_gate(i, k);
    return t;
}

inline GateTable paper_gate_table() {
    GateTable t;
    t.source = "paper";
    for (int i = 0; i < 9; ++i)
        for (int k = 0; k < 9; ++k)
            t.gates[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = paper_gate(i, k).gate();
    return t;
}

inline Json to_json(const GateTable& t) {
    Json gates = Json::array();
    for (const auto& row : t.gates)
        for (const auto& g : row) gates.push_back(to_json(g));
    return Json{{"format", kGateTableFormat}, {"version", kGateTableVersion}, {"source", t.source}, {"gates", gates}};
}

/// Every (channel, outcome) pair must appear exactly once, with matching tags.
inline GateTable gate_table_from_json(const Json& j) {
    const std::string where = "gate table";
    const Json& fmt = detail::member(j, "format", where);
    if (fmt != kGateTableFormat) throw JsonFormatError(where + ": format is not '" + kGateTableFormat + "'");
    if (detail::member(j, "version", where) != kGateTableVersion)
        throw JsonFormatError(where + ": unsupported version");
    const Json& source = detail::member(j, "source", where);
    if (!source.is_string()) throw JsonFormatError(where + ".source: expected a string");
    const Json& gates = detail::array_of(detail::member(j, "gates", where), 81, where + ".gates");

    GateTable t;
    t.source = source.get<std::string>();
    std::array<std::array<bool, 9>, 9> seen{};
    for (std::size_t n = 0; n < gates.size(); ++n) {
        const std::string gw = where + ".gates[" + std::to_string(n) + "]";
        Operator3 g = operator_from_json(gates[n], gw);
        if (!g.channel || !g.outcome) throw JsonFormatError(gw + ": channel and outcome are required");
        auto& flag = seen[static_cast<std::size_t>(*g.channel)][static_cast<std::size_t>(*g.outcome)];
        if (flag)
            throw JsonFormatError(gw + ": duplicate gate (" + std::to_string(*g.channel) + "," +
                                  std::to_string(*g.outcome) + ")");
        flag = true;
        t.gates[static_cast<std::size_t>(*g.channel)][static_cast<std::size_t>(*g.outcome)] = std::move(g);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Reports

inline Json to_json(const ErrataValue& v) {
    return std::visit([](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>)
            return Json{{"type", "label"}, {"value", x}};
        else if constexpr (std::is_same_v<T, Ket>)
            return Json{{"type", "ket"}, {"value", to_json(x)}};
        else if constexpr (std::is_same_v<T, Operator3>)
            return Json{{"type", "operator"}, {"value", to_json(x)}};
        else
            return Json{{"type", "expansion_row"}, {"value", to_json(x)}};
    }, v);
}

inline Json to_json(const ErrataReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"location", e.location},
                               {"channel", e.channel < 0 ? Json(nullptr) : Json(e.channel)},
                               {"outcome", e.outcome < 0 ? Json(nullptr) : Json(e.outcome)},
                               {"kind", e.kind},
                               {"discrepancy", discrepancy_name(e.discrepancy)},
                               {"printed_label", e.printed_label},
                               {"notes", e.notes},
                               {"paper_value", to_json(e.paper_value)},
                               {"oracle_value", to_json(e.oracle_value)}});
    Json summary = Json::object();
    for (auto d : kAllDiscrepancies) summary[discrepancy_name(d)] = r.summary.count(d) ? r.summary.at(d) : 0;
    return Json{{"entries", entries}, {"summary", summary}, {"ambiguities", r.ambiguities}};
}

inline Json to_json(const GateProfile& p) {
    return Json{{"channel", detail::optional_index_json(p.channel)},
                {"outcome", detail::optional_index_json(p.outcome)},
                {"frobenius_norm_sq", to_json(p.frobenius_norm_sq)},
                {"unitarity_deviation_sq", to_json(p.unitarity_deviation_sq)},
                {"scaled_unitarity_deviation_sq", to_json(p.scaled_unitarity_deviation_sq)},
                {"rank", p.rank},
                {"classification", gate_class_name(p.classification)}};
}

inline Json to_json(const ChannelAnalysis& a) {
    Json profiles = Json::array();
    for (const auto& p : a.profiles) profiles.push_back(to_json(p));
    return Json{{"channel", a.channel},
                {"completeness_sum", to_json(a.completeness.sum)},
                {"completeness_is_identity", a.completeness.is_identity},
                {"unitary", a.unitary},
                {"proportional_to_unitary", a.proportional_to_unitary},
                {"invertible_not_prop_unitary", a.invertible_not_prop_unitary},
                {"singular", a.singular},
                {"profiles", profiles}};
}

// ---------------------------------------------------------------------------
// Simulation

inline Json to_json(const State3& v) {
    Json out = Json::array();
    for (const auto& a : v) out.push_back(Json::array({a.real(), a.imag()}));
    return out;
}

inline Json to_json(const TrialRecord& t, std::size_t index, bool with_events) {
    Json j{{"trial_index", index},
           {"seed", t.seed},
           {"input_state", to_json(t.input_state)},
           {"outcome", t.outcome},
           {"probability", t.outcome_probability},
           {"classical_message", t.classical_message},
           {"recovery_applied", t.recovery_applied},
           {"fidelity", t.fidelity ? Json(*t.fidelity) : Json(nullptr)}};
    if (with_events) {
        Json events = Json::array();
        for (const auto& e : t.event_log)
            events.push_back(Json{{"event", event_kind_name(e.kind)}, {"party", e.party}, {"detail", e.detail}});
        j["events"] = events;
    }
    return j;
}

inline Json to_json(const BatchSummary& s) {
    auto optional_number = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
    return Json{{"channel", s.channel},
                {"master_seed", s.master_seed},
                {"trials", s.trials},
                {"outcome_counts", s.outcome_counts},
                {"empirical_outcome_frequencies", s.empirical_outcome_frequencies},
                {"expected_outcome_frequencies", s.expected_outcome_frequencies},
                {"mean_fidelity_invertible", optional_number(s.mean_fidelity_invertible)},
                {"mean_fidelity_all_outcomes_unrecovered_singular", s.mean_fidelity_all_outcomes},
                {"singular_outcome_rate", s.singular_outcome_rate},
                {"chi_square_vs_born", s.chi_square_vs_born},
                {"chi_square_dof", s.chi_square_dof},
                {"chi_square_critical_0999", optional_number(s.chi_square_critical_0999)},
                {"chi_square_flagged", s.chi_square_flagged},
                {"mean_born_weight_total", s.mean_born_weight_total}};
}

}  // namespace qtp
