#pragma once

/// @file errata.hpp
/// Exact diff of the transcribed tables against the derived ones.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "qtp/paper_tables.hpp"
#include "qtp/teleport_engine.hpp"

namespace qtp {

enum class Discrepancy { match, sign, coefficient, index_swap, missing_term, extra_term, label_anomaly };

inline constexpr std::array<Discrepancy, 7> kAllDiscrepancies{
    Discrepancy::match,        Discrepancy::sign,       Discrepancy::coefficient,  Discrepancy::index_swap,
    Discrepancy::missing_term, Discrepancy::extra_term, Discrepancy::label_anomaly};

inline const char* discrepancy_name(Discrepancy d) {
    switch (d) {
        case Discrepancy::match: return "match";
        case Discrepancy::sign: return "sign";
        case Discrepancy::coefficient: return "coefficient";
        case Discrepancy::index_swap: return "index_swap";
        case Discrepancy::missing_term: return "missing_term";
        case Discrepancy::extra_term: return "extra_term";
        case Discrepancy::label_anomaly: return "label_anomaly";
    }
    return "?";
}

using ErrataValue = std::variant<Ket, Operator3, ExpansionRow, std::string>;

struct ErrataEntry {
    std::string location;
    int channel = -1;
    int outcome = -1;
    std::string kind;  ///< premeasure | gate | expansion_row | *_label
    ErrataValue paper_value;
    ErrataValue oracle_value;
    Discrepancy discrepancy = Discrepancy::match;
    std::string printed_label;
    std::string notes;
};

struct ErrataReport {
    std::vector<ErrataEntry> entries;
    std::map<Discrepancy, int> summary;
    std::vector<std::string> ambiguities;

    /// Entries whose numeric value differs from the derived one.
    int numeric_mismatches() const {
        int n = 0;
        for (const auto& e : entries)
            if (e.discrepancy != Discrepancy::match && e.discrepancy != Discrepancy::label_anomaly) ++n;
        return n;
    }

    bool has_discrepancies() const {
        return std::any_of(entries.begin(), entries.end(),
                           [](const ErrataEntry& e) { return e.discrepancy != Discrepancy::match; });
    }

    const ErrataEntry* find(int channel, int outcome, std::string_view kind) const {
        for (const auto& e : entries)
            if (e.channel == channel && e.outcome == outcome && e.kind == kind) return &e;
        return nullptr;
    }
};

namespace detail {

inline bool equal_under_permutation(const Matrix3& paper, const Matrix3& oracle) {
    std::array<std::size_t, 3> rows{0, 1, 2};
    do {
        std::array<std::size_t, 3> cols{0, 1, 2};
        do {
            bool same = true;
            for (std::size_t r = 0; r < 3 && same; ++r)
                for (std::size_t c = 0; c < 3 && same; ++c) same = paper(rows[r], cols[c]) == oracle(r, c);
            if (same) return true;
        } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
    return false;
}

template <std::size_t N>
Discrepancy classify_support(const std::array<const ExtScalar*, N>& paper, const std::array<const ExtScalar*, N>& oracle) {
    bool missing = false;
    bool extra = false;
    for (std::size_t i = 0; i < N; ++i) {
        missing = missing || (paper[i]->is_zero() && !oracle[i]->is_zero());
        extra = extra || (!paper[i]->is_zero() && oracle[i]->is_zero());
    }
    if (missing) return Discrepancy::missing_term;
    if (extra) return Discrepancy::extra_term;
    return Discrepancy::coefficient;
}

}  // namespace detail

/// Heuristic classification of a printed matrix against the derived one:
/// exact equality, global sign flip, transpose or basis relabelling, then
/// support differences, else coefficient.
inline Discrepancy classify(const Matrix3& paper, const Matrix3& oracle) {
    if ((paper - oracle).is_zero()) return Discrepancy::match;
    if ((paper + oracle).is_zero()) return Discrepancy::sign;
    if (paper == dagger(oracle) || detail::equal_under_permutation(paper, oracle)) return Discrepancy::index_swap;
    std::array<const ExtScalar*, 9> p{};
    std::array<const ExtScalar*, 9> o{};
    for (std::size_t i = 0; i < 9; ++i) {
        p[i] = &paper(i / 3, i % 3);
        o[i] = &oracle(i / 3, i % 3);
    }
    return detail::classify_support(p, o);
}

inline Discrepancy classify(const ExpansionRow& paper, const ExpansionRow& oracle) {
    bool same = true;
    bool negated = true;
    std::array<const ExtScalar*, 9> p{};
    std::array<const ExtScalar*, 9> o{};
    for (std::size_t i = 0; i < 9; ++i) {
        same = same && paper.coefficients[i] == oracle.coefficients[i];
        negated = negated && (paper.coefficients[i] + oracle.coefficients[i]).is_zero();
        p[i] = &paper.coefficients[i];
        o[i] = &oracle.coefficients[i];
    }
    if (same) return Discrepancy::match;
    if (negated) return Discrepancy::sign;
    return detail::classify_support(p, o);
}

/// Every transcribed entry against the engine, in a fixed order:
/// expansion rows, then per channel and outcome the state and the gate,
/// then label anomalies.
inline ErrataReport compare_tables() {
    ErrataReport report;
    for (const auto& p : transcription::kExpansions) {
        const PaperEntry e = paper_expansion(p.a2, p.b);
        const ExpansionRow oracle = expand_product(p.a2, p.b);
        report.entries.push_back({e.location, -1, -1, "expansion_row", e.expansion(), oracle,
                                  classify(e.expansion(), oracle), e.printed_label, e.notes});
    }
    const auto& derived = derive_all();
    for (int i = 0; i < 9; ++i)
        for (int k = 0; k < 9; ++k) {
            const auto& row = derived[static_cast<std::size_t>(i)].rows[static_cast<std::size_t>(k)];
            const PaperEntry s = paper_premeasure(i, k);
            report.entries.push_back({s.location, i, k, "premeasure", s.ket(), row.premeasure,
                                      classify(extract_matrix(s.ket()), row.gate.entries), s.printed_label, s.notes});
            const PaperEntry g = paper_gate(i, k);
            report.entries.push_back({g.location, i, k, "gate", g.gate(), row.gate,
                                      classify(g.gate().entries, row.gate.entries), g.printed_label, g.notes});
        }
    for (const auto& a : label_anomalies())
        report.entries.push_back({std::string(a.location), a.channel, a.outcome, std::string(a.kind),
                                  std::string(a.printed), std::string(a.expected), Discrepancy::label_anomaly,
                                  std::string(a.printed), std::string(a.notes)});

    for (auto d : kAllDiscrepancies) report.summary[d] = 0;
    for (const auto& e : report.entries) ++report.summary[e.discrepancy];

    report.ambiguities.emplace_back(
        "Appendix (viii): pre-measurement labels run s_8^0..s_8^3, s_8^8, s_8^4, s_8^5, s_8^7, s_8^8; "
        "s_8^8 appears twice and s_8^6 never. Entries are keyed by printed position.");
    report.ambiguities.emplace_back(
        "Appendix (viii): gate labels print as Lambda_k^8 (channel and outcome swapped). Entries are keyed by "
        "printed position.");
    return report;
}

}  // namespace qtp
