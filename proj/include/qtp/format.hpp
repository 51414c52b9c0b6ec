#pragma once

/// @file format.hpp
/// Human-readable renderings: plain text, LaTeX and Markdown.

#include <array>
#include <charconv>
#include <string>
#include <system_error>
#include <vector>

#include "qtp/analysis.hpp"
#include "qtp/errata.hpp"
#include "qtp/su3_basis.hpp"

namespace qtp {

enum class Style { text, latex };

/// Upper-case Roman numeral, 1..3999.
inline std::string roman(int n) {
    if (n < 1 || n > 3999) throw std::out_of_range("roman: value outside 1..3999");
    static constexpr std::array<std::pair<int, const char*>, 13> table{{{1000, "M"},
                                                                        {900, "CM"},
                                                                        {500, "D"},
                                                                        {400, "CD"},
                                                                        {100, "C"},
                                                                        {90, "XC"},
                                                                        {50, "L"},
                                                                        {40, "XL"},
                                                                        {10, "X"},
                                                                        {9, "IX"},
                                                                        {5, "V"},
                                                                        {4, "IV"},
                                                                        {1, "I"}}};
    std::string out;
    for (const auto& [value, glyph] : table)
        while (n >= value) {
            out += glyph;
            n -= value;
        }
    return out;
}

/// "3", or "3 (IV)" with the Roman display on. Channel i is the (i+1)-th channel.
inline std::string channel_label(int channel, bool with_roman) {
    std::string s = std::to_string(channel);
    if (with_roman) s += " (" + roman(channel + 1) + ")";
    return s;
}

/// Shortest round-trip decimal form of a double.
inline std::string format_double(double x) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf.data(), end);
}

namespace detail {

struct SignedTerm {
    bool negative = false;
    std::string body;  ///< magnitude; empty means a bare unit
};

inline std::string join_terms(const std::vector<SignedTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        const std::string body = t.body.empty() ? "1" : t.body;
        if (i == 0)
            out += (t.negative ? "-" : "") + body;
        else
            out += (t.negative ? " - " : " + ") + body;
    }
    return out;
}

/// |q| * sqrt(radicand) as text or LaTeX. Empty when the magnitude is 1.
inline std::string surd_magnitude(const Rational& q, int radicand, Style style, bool omit_unit) {
    const BigInt num = abs(boost::multiprecision::numerator(q));
    const BigInt den = boost::multiprecision::denominator(q);
    std::string top;
    if (radicand == 1) {
        top = num.str();
    } else {
        const std::string root =
            style == Style::latex ? "\\sqrt{" + std::to_string(radicand) + "}" : "sqrt(" + std::to_string(radicand) + ")";
        top = num == 1 ? root : num.str() + (style == Style::latex ? "" : "*") + root;
    }
    if (den == 1) return (omit_unit && radicand == 1 && num == 1) ? "" : top;
    if (style == Style::latex) return "\\frac{" + top + "}{" + den.str() + "}";
    return top + "/" + den.str();
}

inline std::vector<SignedTerm> scalar_terms(const ExtScalar& s, Style style, bool omit_unit) {
    static constexpr std::array<int, 4> radicands{1, 2, 3, 6};
    std::vector<SignedTerm> terms;
    for (std::size_t i = 0; i < 4; ++i) {
        const Rational& q = s.component(static_cast<ExtScalar::Slot>(i));
        if (q == 0) continue;
        terms.push_back({q < 0, surd_magnitude(q, radicands[i], style, omit_unit)});
    }
    return terms;
}

/// Coefficient in front of a symbol. Multi-term scalars are parenthesized.
inline SignedTerm coefficient(const ExtScalar& s, Style style) {
    auto terms = scalar_terms(s, style, true);
    if (terms.size() == 1) return terms.front();
    auto full = scalar_terms(s, style, false);
    return {false, style == Style::latex ? "\\left(" + join_terms(full) + "\\right)" : "(" + join_terms(full) + ")"};
}

inline SignedTerm times(const SignedTerm& c, const std::string& symbol, Style style) {
    if (c.body.empty()) return {c.negative, symbol};
    return {c.negative, c.body + (style == Style::text ? " " : "") + symbol};
}

inline std::string basis_label(std::size_t index, std::size_t dim) {
    if (dim == 3) return std::to_string(index);
    if (dim == 9) return std::to_string(index / 3) + std::to_string(index % 3);
    return std::to_string(index / 9) + std::to_string(index / 3 % 3) + std::to_string(index % 3);
}

inline std::string ket_symbol(const std::string& label, Style style) {
    return style == Style::latex ? "|" + label + "\\rangle" : "|" + label + ">";
}

inline std::string outer_symbol(std::size_t r, std::size_t c, Style style) {
    if (style == Style::latex) return "|" + std::to_string(r) + "\\rangle\\langle " + std::to_string(c) + "|";
    return "|" + std::to_string(r) + "><" + std::to_string(c) + "|";
}

}  // namespace detail

inline std::string render(const ExtScalar& s, Style style = Style::text) {
    return detail::join_terms(detail::scalar_terms(s, style, false));
}

/// Sum over basis kets; c-dependent amplitudes are expanded per input symbol.
inline std::string render(const Ket& k, Style style = Style::text) {
    std::vector<detail::SignedTerm> terms;
    for (std::size_t j = 0; j < k.dim(); ++j) {
        const std::string ket = detail::ket_symbol(detail::basis_label(j, k.dim()), style);
        const LinearForm& f = k[j];
        for (std::size_t m = 0; m < 3; ++m) {
            if (f.coef[m].is_zero()) continue;
            std::string symbol = ket;
            if (k.depends_on_input()) symbol = (style == Style::latex ? "c_" : "c") + std::to_string(m) + symbol;
            terms.push_back(detail::times(detail::coefficient(f.coef[m], style), symbol, style));
        }
    }
    return detail::join_terms(terms);
}

/// Operator notation: sum of coefficient |r><c|.
inline std::string render(const Matrix3& m, Style style = Style::text) {
    std::vector<detail::SignedTerm> terms;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            if (!m(r, c).is_zero())
                terms.push_back(detail::times(detail::coefficient(m(r, c), style), detail::outer_symbol(r, c, style), style));
    return detail::join_terms(terms);
}

/// Row-by-row grid, one line per row.
inline std::string render_grid(const Matrix3& m) {
    std::string out;
    for (std::size_t r = 0; r < 3; ++r) {
        out += "[";
        for (std::size_t c = 0; c < 3; ++c) out += (c ? ", " : "") + render(m(r, c));
        out += "]\n";
    }
    return out;
}

inline std::string render(const ExpansionRow& row, Style style = Style::text) {
    std::vector<detail::SignedTerm> terms;
    for (std::size_t i = 0; i < 9; ++i) {
        if (row.coefficients[i].is_zero()) continue;
        const std::string psi = style == Style::latex ? "|\\Psi_" + std::to_string(i) + "\\rangle"
                                                      : "|Psi_" + std::to_string(i) + ">";
        terms.push_back(detail::times(detail::coefficient(row.coefficients[i], style), psi, style));
    }
    return detail::join_terms(terms);
}

inline std::string render(const ErrataValue& v, Style style = Style::text) {
    return std::visit([&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>)
            return x;
        else if constexpr (std::is_same_v<T, Operator3>)
            return render(x.entries, style);
        else
            return render(x, style);
    }, v);
}

// ---------------------------------------------------------------------------
// Escaping

inline std::string latex_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '_': out += "\\_"; break;
            case '^': out += "\\^{}"; break;
            case '&': out += "\\&"; break;
            case '%': out += "\\%"; break;
            case '#': out += "\\#"; break;
            case '{': out += "\\{"; break;
            case '}': out += "\\}"; break;
            case '\\': out += "\\textbackslash{}"; break;
            default: out += ch;
        }
    }
    return out;
}

inline std::string markdown_cell(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += "\\|";
        else if (ch == '\n') out += ' ';
        else out += ch;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Documents

/// The nine entangled states and their Gram matrix.
inline std::string basis_text(Style style) {
    std::string out;
    const Matrix9 g = gram_matrix();
    if (style == Style::latex) {
        out += "\\begin{align*}\n";
        for (int i = 0; i < 9; ++i) {
            const auto s = entangled_state(i);
            out += "|\\Psi_" + std::to_string(i) + "\\rangle &= " + render(s.ket, Style::latex) +
                   (i < 8 ? " \\\\\n" : "\n");
        }
        out += "\\end{align*}\n\\[\nG = \\begin{pmatrix}\n";
        for (std::size_t r = 0; r < 9; ++r) {
            for (std::size_t c = 0; c < 9; ++c) out += (c ? " & " : "") + render(g[r][c], Style::latex);
            out += r < 8 ? " \\\\\n" : "\n";
        }
        out += "\\end{pmatrix}\n\\]\n";
        return out;
    }
    for (int i = 0; i < 9; ++i) {
        const auto s = entangled_state(i);
        out += "Psi_" + std::to_string(i) + " [" + family_name(s.family) + "] = " + render(s.ket) + "\n";
    }
    out += "\nGram matrix:\n";
    for (std::size_t r = 0; r < 9; ++r) {
        for (std::size_t c = 0; c < 9; ++c) out += (c ? " " : "") + render(g[r][c]);
        out += "\n";
    }
    out += std::string("Gram matrix is identity: ") + (is_identity(g) ? "yes" : "no") + "\n";
    return out;
}

/// One channel laid out as the published teleportation table: outcome state,
/// pre-measurement state, gate, residual and a remark (the gate class).
inline std::string channel_table_latex(int channel, bool with_roman) {
    const auto& d = derive_all().at(static_cast<std::size_t>(channel));
    std::string out;
    out += "\\begin{table}[h]\n\\centering\n";
    out += "\\caption{Channel " + channel_label(channel, with_roman) + ": $|\\Psi_" + std::to_string(channel) +
           "\\rangle_{A_2B}$}\n";
    out += "\\begin{tabular}{ccccc}\n\\hline\n";
    out += "Alice's channel & Pre-measurement & Measurement & Difference & Remarks \\\\\n";
    out += "($|\\Psi_k\\rangle_{A_1A_2}$) & State ($|s^k_" + std::to_string(channel) + "\\rangle_B$) & Gate ($\\Lambda_" +
           std::to_string(channel) + "^k$) & ($\\Delta_{QT}$) & \\\\\n\\hline\n";
    for (const auto& row : d.rows) {
        const Ket delta = delta_qt(channel, row.outcome, row.gate.entries);
        out += "$|\\Psi_" + std::to_string(row.outcome) + "\\rangle_{A_1A_2}$ & $" + render(row.premeasure, Style::latex) +
               "$ & $" + render(row.gate.entries, Style::latex) + "$ & $" + render(delta, Style::latex) + "$ & " +
               latex_escape(gate_class_name(profile_gate(row.gate).classification)) + " \\\\\n";
    }
    out += "\\hline\n\\end{tabular}\n\\end{table}\n";
    return out;
}

inline std::string errata_markdown(const ErrataReport& r, bool with_roman) {
    std::string out = "# Errata\n\n## Summary\n\n| discrepancy | count |\n|---|---|\n";
    for (auto d : kAllDiscrepancies)
        out += std::string("| ") + discrepancy_name(d) + " | " + std::to_string(r.summary.count(d) ? r.summary.at(d) : 0) +
               " |\n";

    auto header = [] {
        return std::string("| location | outcome | kind | discrepancy | printed | derived | notes |\n"
                           "|---|---|---|---|---|---|---|\n");
    };
    auto line = [](const ErrataEntry& e) {
        return "| " + markdown_cell(e.location) + " | " + (e.outcome < 0 ? std::string("-") : std::to_string(e.outcome)) +
               " | " + e.kind + " | " + discrepancy_name(e.discrepancy) + " | " + markdown_cell(render(e.paper_value)) +
               " | " + markdown_cell(render(e.oracle_value)) + " | " + markdown_cell(e.notes) + " |\n";
    };

    out += "\n## Product-basis expansions\n\n" + header();
    for (const auto& e : r.entries)
        if (e.kind == "expansion_row") out += line(e);
    for (int i = 0; i < 9; ++i) {
        out += "\n## Channel " + channel_label(i, with_roman) + "\n\n" + header();
        for (const auto& e : r.entries)
            if (e.channel == i && e.kind != "expansion_row") out += line(e);
    }
    if (!r.ambiguities.empty()) {
        out += "\n## Ambiguities\n\n";
        for (const auto& a : r.ambiguities) out += "- " + a + "\n";
    }
    return out;
}

inline std::string errata_latex(const ErrataReport& r) {
    std::string out = "\\begin{longtable}{llllp{0.3\\textwidth}}\n\\hline\n";
    out += "Location & Channel & Outcome & Kind & Discrepancy \\\\\n\\hline\n";
    for (const auto& e : r.entries) {
        if (e.discrepancy == Discrepancy::match) continue;
        out += latex_escape(e.location) + " & " + (e.channel < 0 ? std::string("--") : std::to_string(e.channel)) + " & " +
               (e.outcome < 0 ? std::string("--") : std::to_string(e.outcome)) + " & " + latex_escape(e.kind) + " & " +
               latex_escape(discrepancy_name(e.discrepancy)) + " \\\\\n";
    }
    out += "\\hline\n\\end{longtable}\n";
    return out;
}

inline std::string analysis_markdown(const std::vector<ChannelAnalysis>& channels, bool with_roman) {
    std::string out = "# Gate analysis\n\n## Per channel\n\n"
                      "| channel | completeness | unitary | proportional_to_unitary | invertible_not_prop_unitary | singular |\n"
                      "|---|---|---|---|---|---|\n";
    for (const auto& a : channels)
        out += "| " + channel_label(a.channel, with_roman) + " | " + (a.completeness.is_identity ? "identity" : "VIOLATED") +
               " | " + std::to_string(a.unitary) + " | " + std::to_string(a.proportional_to_unitary) + " | " +
               std::to_string(a.invertible_not_prop_unitary) + " | " + std::to_string(a.singular) + " |\n";
    out += "\n## Gate profiles\n\n"
           "| channel | outcome | rank | class | tr(G^T G) | \\|G^T G - I\\|^2 | \\|G^T G - (tr/3) I\\|^2 |\n"
           "|---|---|---|---|---|---|---|\n";
    for (const auto& a : channels)
        for (const auto& p : a.profiles)
            out += "| " + channel_label(a.channel, with_roman) + " | " + std::to_string(p.outcome.value_or(-1)) + " | " +
                   std::to_string(p.rank) + " | " + gate_class_name(p.classification) + " | " +
                   render(p.frobenius_norm_sq) + " | " + render(p.unitarity_deviation_sq) + " | " +
                   render(p.scaled_unitarity_deviation_sq) + " |\n";
    return out;
}

}  // namespace qtp
