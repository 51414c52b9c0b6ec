#pragma once

/// @file paper_tables.hpp
/// Frozen transcription of the published pre-measurement states, measurement
/// gates and product-basis expansions.
///
/// Each entry is stored as printed: a prefactor times a signed sum of terms,
/// the verbatim LaTeX source, and the label exactly as typeset. Nothing here
/// is computed from the engine, and nothing is corrected toward it.
///
/// Reading rules for damaged expressions:
///  - a prefactor followed by an unbracketed sum multiplies the whole printed
///    signed sum ("-\frac{1}{2}|0><0| + |1><1|" reads as (1/2)(-|0><0| + |1><1|));
///  - an unmatched bracket is taken to enclose everything after the prefactor;
///  - "\ket{1}_B\ket{2}" inside an operator is read as |1><2|.
/// Every entry where a rule applied says so in its notes.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qtp/su3_basis.hpp"

namespace qtp {

enum class EntryKind { premeasure, gate, expansion_row };

inline const char* entry_kind_name(EntryKind k) {
    switch (k) {
        case EntryKind::premeasure: return "premeasure";
        case EntryKind::gate: return "gate";
        case EntryKind::expansion_row: return "expansion_row";
    }
    return "?";
}

/// Slot has no printed value.
class MissingEntryError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Several printed values claim the same slot.
class AmbiguousEntryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A transcribed value, materialized as exact data.
struct PaperEntry {
    std::string location;
    int channel = -1;  ///< -1 for expansion rows
    int outcome = -1;  ///< -1 for expansion rows
    EntryKind kind = EntryKind::gate;
    std::variant<Ket, Operator3, ExpansionRow> value{ExpansionRow{}};
    std::string printed_label;
    std::string latex;
    std::string notes;
    int position = 0;  ///< 0-based position in the printed list

    const Operator3& gate() const { return std::get<Operator3>(value); }
    const Ket& ket() const { return std::get<Ket>(value); }
    const ExpansionRow& expansion() const { return std::get<ExpansionRow>(value); }
};

/// A printed label that is not the label the slot should carry.
struct LabelAnomaly {
    std::string_view location;
    int channel;
    int outcome;
    std::string_view kind;  ///< gate_label | premeasure_label | decomposition_label
    std::string_view printed;
    std::string_view expected;
    std::string_view notes;
};

namespace transcription {

/// (num/den) * sqrt(radicand)
struct Surd {
    std::int64_t num = 0;
    std::int64_t den = 1;
    int radicand = 1;

    ExtScalar value() const { return ExtScalar::surd(num, den, radicand); }
};

/// weight * |row><col| for gates, weight * c_col |row> for states,
/// weight * |Psi_col> for expansion rows. row < 0 marks an unused slot.
struct Term {
    Surd weight;
    int row = -1;
    int col = -1;
};

struct Printed {
    std::string_view location;
    int channel;
    int position;
    int label_outcome;  ///< outcome index as it appears in the printed label
    std::string_view label;
    std::string_view latex;
    Surd prefactor;
    std::array<Term, 3> terms;
    std::string_view notes = {};
};

struct PrintedExpansion {
    std::string_view location;
    int a2;
    int b;
    std::string_view latex;
    Surd prefactor;
    std::array<Term, 3> terms;
};

/// w * c_j |b>
constexpr Term amp(std::int64_t w, int j, int b) { return {{w, 1, 1}, b, j}; }
/// w * |r><c|
constexpr Term op(std::int64_t w, int r, int c) { return {{w, 1, 1}, r, c}; }
/// w * |Psi_i>
constexpr Term psi(Surd w, int i) { return {w, 0, i}; }

constexpr Surd kOne{1, 1, 1};
constexpr Surd kThird{1, 3, 1};
constexpr Surd kHalf{1, 2, 1};
constexpr Surd kNegHalf{-1, 2, 1};
constexpr Surd kSixth{1, 6, 1};
constexpr Surd kInvRoot2{1, 2, 2};     // 1/sqrt2
constexpr Surd kInvRoot3{1, 3, 3};     // 1/sqrt3
constexpr Surd kInvRoot6{1, 6, 6};     // 1/sqrt6
constexpr Surd kNegInvRoot6{-1, 6, 6};
constexpr Surd kInv3Root2{1, 6, 2};    // 1/(3 sqrt2)
constexpr Surd kInv2Root3{1, 6, 3};    // 1/(2 sqrt3)
constexpr Surd kNegInv2Root3{-1, 6, 3};

constexpr std::string_view kNoBrackets =
    "printed without brackets; prefactor read as multiplying the whole printed signed sum";
constexpr std::string_view kUnclosed = "opening bracket never closed; read as enclosing the remaining terms";
constexpr std::string_view kUnopened = "closing bracket without an opening one; read as enclosing the terms after the prefactor";

// clang-format off
inline constexpr std::array<Printed, 81> kPremeasure{{
    // Channel 0, pre-measurement states
    {"Eq. (10a)", 0, 0, 0, "s_0^0", R"tex(\ket{s_{0}^0}_B&:=\frac{1}{3}\big[c_0\ket{0_B}+c_1\ket{1_B}+c_2\ket{2_B}\big])tex", kThird, {amp(1, 0, 0), amp(1, 1, 1), amp(1, 2, 2)}},
    {"Eq. (10b)", 0, 1, 1, "s_0^1", R"tex(\ket{s_{0}^1}_B&=\frac{1}{\sqrt{6}}\big[c_1 \ket{0_B} + c_0\ket{1_B}\big])tex", kInvRoot6, {amp(1, 1, 0), amp(1, 0, 1)}},
    {"Eq. (10c)", 0, 2, 2, "s_0^2", R"tex(\ket{s_{0}^2}_B&=\frac{1}{\sqrt{6}}\big[c_1 \ket{0_B}-c_0\ket{1_B}\big])tex", kInvRoot6, {amp(1, 1, 0), amp(-1, 0, 1)}},
    {"Eq. (10d)", 0, 3, 3, "s_0^3", R"tex(\ket{s_{0}^3}_B&=\frac{1}{\sqrt{6}}\big[-c_1 \ket{1_B}+c_2\ket{2_B}\big])tex", kInvRoot6, {amp(-1, 1, 1), amp(1, 2, 2)}},
    {"Eq. (10e)", 0, 4, 4, "s_0^4", R"tex(\ket{s_{0}^4}_B &=\frac{1}{\sqrt{6}}\big[c_2  \ket{0_B}+c_0\ket{2_B}\big])tex", kInvRoot6, {amp(1, 2, 0), amp(1, 0, 2)}},
    {"Eq. (10f)", 0, 5, 5, "s_0^5", R"tex(\ket{s_{0}^5}_B&=\frac{1}{\sqrt{6}}\big[c_2\ket{0_B}-c_0\ket{2_B}\big])tex", kInvRoot6, {amp(1, 2, 0), amp(-1, 0, 2)}},
    {"Eq. (10g)", 0, 6, 6, "s_0^6", R"tex(\ket{s_{0}^6}_B&=\frac{1}{\sqrt{6}}\big[c_2 \ket{1_B}+c_1\ket{2_B}\big])tex", kInvRoot6, {amp(1, 2, 1), amp(1, 1, 2)}},
    {"Eq. (10h)", 0, 7, 7, "s_0^7", R"tex(\ket{s_{0}^7}_B&=\frac{1}{\sqrt{6}}\big[c_2 \ket{1_B}- c_1\ket{2_B}\big])tex", kInvRoot6, {amp(1, 2, 1), amp(-1, 1, 2)}},
    {"Eq. (10i)", 0, 8, 8, "s_0^8", R"tex(\ket{s_{0}^8}_B&:=\frac{1}{3\sqrt{2}}\big[-2c_0 \ket{0_B}+c_1\ket{1_B}+c_2\ket{2_B}\big])tex", kInv3Root2, {amp(-2, 0, 0), amp(1, 1, 1), amp(1, 2, 2)}},

    // Appendix (i), channel 1
    {"Appendix (i), s_1^0", 1, 0, 0, "s_1^0", R"tex(\ket{s_{1}^0}_B&:=\frac{1}{\sqrt{6}}\big[c_0\ket{1_B}+c_1\ket{0_B}\big])tex", kInvRoot6, {amp(1, 0, 1), amp(1, 1, 0)}},
    {"Appendix (i), s_1^1", 1, 1, 1, "s_1^1", R"tex(\ket{s_{1}^1}_B&=\frac{1}{2}\big[c_0 \ket{0_B} + c_1\ket{1_B}\big])tex", kHalf, {amp(1, 0, 0), amp(1, 1, 1)}},
    {"Appendix (i), s_1^2", 1, 2, 2, "s_1^2", R"tex(\ket{s_{1}^2}_B&=\frac{1}{2}\big[-c_0 \ket{0_B} + c_1\ket{1_B}\big])tex", kHalf, {amp(-1, 0, 0), amp(1, 1, 1)}},
    {"Appendix (i), s_1^3", 1, 3, 3, "s_1^3", R"tex(\ket{s_{1}^3}_B&=-\frac{1}{2}c_1\ket{0_B})tex", kNegHalf, {amp(1, 1, 0)}},
    {"Appendix (i), s_1^4", 1, 4, 4, "s_1^4", R"tex(\ket{s_{1}^4}_B &=\frac{1}{2}c_2\ket{1_B})tex", kHalf, {amp(1, 2, 1)}},
    {"Appendix (i), s_1^5", 1, 5, 5, "s_1^5", R"tex(\ket{s_{1}^5}_B&=\frac{1}{2}c_2\ket{1_B})tex", kHalf, {amp(1, 2, 1)}},
    {"Appendix (i), s_1^6", 1, 6, 6, "s_1^6", R"tex(\ket{s_{1}^6}_B&=\frac{1}{2}c_2\ket{0_B})tex", kHalf, {amp(1, 2, 0)}},
    {"Appendix (i), s_1^7", 1, 7, 7, "s_1^7", R"tex(\ket{s_{1}^7}_B&=\frac{1}{2}c_2\ket{0_B})tex", kHalf, {amp(1, 2, 0)}},
    {"Appendix (i), s_1^8", 1, 8, 8, "s_1^8", R"tex(\ket{s_{1}^8}_B&:=\frac{1}{2\sqrt{3}}\big[c_1 \ket{0_B}-2c_0\ket{1_B}\big])tex", kInv2Root3, {amp(1, 1, 0), amp(-2, 0, 1)}},

    // Appendix (ii), channel 2
    {"Appendix (ii), s_2^0", 2, 0, 0, "s_2^0", R"tex(\ket{s_{2}^0}_B&:=\frac{1}{\sqrt{6}}\big[c_1 \ket{0_B}-c_0\ket{1_B}\big])tex", kInvRoot6, {amp(1, 1, 0), amp(-1, 0, 1)}},
    {"Appendix (ii), s_2^1", 2, 1, 1, "s_2^1", R"tex(\ket{s_{2}^1}_B&:=\frac{1}{2}\big[c_0\ket{0_B}-c_1\ket{1_B}\big])tex", kHalf, {amp(1, 0, 0), amp(-1, 1, 1)}},
    {"Appendix (ii), s_2^2", 2, 2, 2, "s_2^2", R"tex(\ket{s_{2}^2}_B&:=-\frac{1}{2}\big[c_0\ket{0_B}+c_1\ket{1_B}\big])tex", kNegHalf, {amp(1, 0, 0), amp(1, 1, 1)}},
    {"Appendix (ii), s_2^3", 2, 3, 3, "s_2^3", R"tex(\ket{s_{2}^3}_B&:=-\frac{1}{2}c_1\ket{0_B})tex", kNegHalf, {amp(1, 1, 0)}},
    {"Appendix (ii), s_2^4", 2, 4, 4, "s_2^4", R"tex(\ket{s_{2}^4}_B&:=-\frac{1}{2}c_2\ket{1_B})tex", kNegHalf, {amp(1, 2, 1)}},
    {"Appendix (ii), s_2^5", 2, 5, 5, "s_2^5", R"tex(\ket{s_{2}^5}_B&:=-\frac{1}{2}c_2\ket{1_B})tex", kNegHalf, {amp(1, 2, 1)}},
    {"Appendix (ii), s_2^6", 2, 6, 6, "s_2^6", R"tex(\ket{s_{2}^6}_B&:= \frac{1}{2}c_2\ket{0_B})tex", kHalf, {amp(1, 2, 0)}},
    {"Appendix (ii), s_2^7", 2, 7, 7, "s_2^7", R"tex(\ket{s_{2}^7}_B&:= \frac{1}{2}c_2\ket{0_B})tex", kHalf, {amp(1, 2, 0)}},
    {"Appendix (ii), s_2^8", 2, 8, 8, "s_2^8", R"tex(\ket{s_{2}^8}_B&:=\frac{1}{2\sqrt{3}}\big[2c_0\ket{1_B}+c_1\ket{0_B}\big])tex", kInv2Root3, {amp(2, 0, 1), amp(1, 1, 0)}},

    // Appendix (iii), channel 3
    {"Appendix (iii), s_3^0", 3, 0, 0, "s_3^0", R"tex(\ket{s_{3}^0}_B&:=\frac{1}{\sqrt{6}}\big[-c_1\ket{1_B}+c_2\ket{2_B}\big])tex", kInvRoot6, {amp(-1, 1, 1), amp(1, 2, 2)}},
    {"Appendix (iii), s_3^1", 3, 1, 1, "s_3^1", R"tex(\ket{s_{3}^1}_B&:= -\frac{1}{2}c_0\ket{1_B})tex", kNegHalf, {amp(1, 0, 1)}},
    {"Appendix (iii), s_3^2", 3, 2, 2, "s_3^2", R"tex(\ket{s_{3}^2}_B&:= \frac{1}{2}c_0\ket{1_B})tex", kHalf, {amp(1, 0, 1)}},
    {"Appendix (iii), s_3^3", 3, 3, 3, "s_3^3", R"tex(\ket{s_{3}^3}_B&:=\frac{1}{2}\big[c_1\ket{1_B}+c_2\ket{2_B}\big])tex", kHalf, {amp(1, 1, 1), amp(1, 2, 2)}},
    {"Appendix (iii), s_3^4", 3, 4, 4, "s_3^4", R"tex(\ket{s_{3}^4}_B&:=\frac{1}{2}c_0\ket{2_B})tex", kHalf, {amp(1, 0, 2)}},
    {"Appendix (iii), s_3^5", 3, 5, 5, "s_3^5", R"tex(\ket{s_{3}^5}_B&:=-\frac{1}{2}c_0\ket{2_B})tex", kNegHalf, {amp(1, 0, 2)}},
    {"Appendix (iii), s_3^6", 3, 6, 6, "s_3^6", R"tex(\ket{s_{3}^6}_B&:=\frac{1}{2}\big[c_1 \ket{2_B}-c_2\ket{1}_B\big])tex", kHalf, {amp(1, 1, 2), amp(-1, 2, 1)}},
    {"Appendix (iii), s_3^7", 3, 7, 7, "s_3^7", R"tex(\ket{s_{3}^7}_B&:=-\frac{1}{2}\big[c_1 \ket{2}_B+c_2\ket{1_B}_B\big])tex", kNegHalf, {amp(1, 1, 2), amp(1, 2, 1)}, "doubled site subscript on |1_B>_B ignored"},
    {"Appendix (iii), s_3^8", 3, 8, 8, "s_3^8", R"tex(\ket{s_{3}^8}_B&:=\frac{1}{2\sqrt{3}}\big[-c_1 \ket{1_B}+c_2\ket{2_B}\big])tex", kInv2Root3, {amp(-1, 1, 1), amp(1, 2, 2)}},

    // Appendix (iv), channel 4
    {"Appendix (iv), s_4^0", 4, 0, 0, "s_4^0", R"tex(\ket{s_{4}^0}_B&:=\frac{1}{\sqrt{6}}\big[ c_0 \ket{2_B}+c_2\ket{0_B}\big])tex", kInvRoot6, {amp(1, 0, 2), amp(1, 2, 0)}},
    {"Appendix (iv), s_4^1", 4, 1, 1, "s_4^1", R"tex(\ket{s_{4}^1}_B&:=\frac{1}{2}c_1\ket{2_B})tex", kHalf, {amp(1, 1, 2)}},
    {"Appendix (iv), s_4^2", 4, 2, 2, "s_4^2", R"tex(\ket{s_{4}^2}_B&:=\frac{1}{2}c_1\ket{2_B})tex", kHalf, {amp(1, 1, 2)}},
    {"Appendix (iv), s_4^3", 4, 3, 3, "s_4^3", R"tex(\ket{s_{4}^3}_B&:=\frac{1}{2}c_2\ket{0_B})tex", kHalf, {amp(1, 2, 0)}},
    {"Appendix (iv), s_4^4", 4, 4, 4, "s_4^4", R"tex(\ket{s_{4}^4}_B&:=\frac{1}{2}\big[c_2\ket{2}_B+c_0\ket{0_B}\big])tex", kHalf, {amp(1, 2, 2), amp(1, 0, 0)}},
    {"Appendix (iv), s_4^5", 4, 5, 5, "s_4^5", R"tex(\ket{s_{4}^5}_B&:=\frac{1}{2}\big[c_2\ket{2_B}-c_0\ket{0_B}\big])tex", kHalf, {amp(1, 2, 2), amp(-1, 0, 0)}},
    {"Appendix (iv), s_4^6", 4, 6, 6, "s_4^6", R"tex(\ket{s_{4}^6}_B&:=\frac{1}{2}c_1\ket{0_B})tex", kHalf, {amp(1, 1, 0)}},
    {"Appendix (iv), s_4^7", 4, 7, 7, "s_4^7", R"tex(\ket{s_{4}^7}_B&:=-\frac{1}{2}c_1\ket{0_B})tex", kNegHalf, {amp(1, 1, 0)}},
    {"Appendix (iv), s_4^8", 4, 8, 8, "s_4^8", R"tex(\ket{s_{4}^8}_B&:=\frac{1}{2\sqrt{3}}\big[c_2\ket{0_B}-2c_0\ket{2_B}\big])tex", kInv2Root3, {amp(1, 2, 0), amp(-2, 0, 2)}},

    // Appendix (v), channel 5
    {"Appendix (v), s_5^0", 5, 0, 0, "s_5^0", R"tex(\ket{s_{5}^0}_B&=\frac{1}{\sqrt{6}}\big[c_2 \ket{0_B}-c_0\ket{2_B}\big])tex", kInvRoot6, {amp(1, 2, 0), amp(-1, 0, 2)}},
    {"Appendix (v), s_5^1", 5, 1, 1, "s_5^1", R"tex(\ket{s_{5}^1}_B&=-\frac{1}{2}c_1 \ket{2_B})tex", kNegHalf, {amp(1, 1, 2)}},
    {"Appendix (v), s_5^2", 5, 2, 2, "s_5^2", R"tex(\ket{s_{5}^2}_B&=-\frac{1}{2}c_1 \ket{2_B})tex", kNegHalf, {amp(1, 1, 2)}},
    {"Appendix (v), s_5^3", 5, 3, 3, "s_5^3", R"tex(\ket{s_{5}^3}_B&=\frac{1}{2}c_2 \ket{0_B})tex", kHalf, {amp(1, 2, 0)}},
    {"Appendix (v), s_5^4", 5, 4, 4, "s_5^4", R"tex(\ket{s_{5}^4}_B&=\frac{1}{2}\big[c_0\ket{0_B}-c_2\ket{2_B}\big])tex", kHalf, {amp(1, 0, 0), amp(-1, 2, 2)}},
    {"Appendix (v), s_5^5", 5, 5, 5, "s_5^5", R"tex(\ket{s_{5}^5}_B&=-\frac{1}{2}\big[c_0\ket{0_B}+c_2\ket{2_B}\big])tex", kNegHalf, {amp(1, 0, 0), amp(1, 2, 2)}},
    {"Appendix (v), s_5^6", 5, 6, 6, "s_5^6", R"tex(\ket{s_{5}^6}_B&=\frac{1}{2}c_1 \ket{0_B})tex", kHalf, {amp(1, 1, 0)}},
    {"Appendix (v), s_5^7", 5, 7, 7, "s_5^7", R"tex(\ket{s_{5}^7}_B&=-\frac{1}{2}c_1 \ket{0_B})tex", kNegHalf, {amp(1, 1, 0)}},
    {"Appendix (v), s_5^8", 5, 8, 8, "s_5^8", R"tex(\ket{s_{5}^8}_B&:=\frac{1}{2\sqrt{3}}\big[2 c_0 \ket{2_B}+c_2\ket{0_B}\big])tex", kInv2Root3, {amp(2, 0, 2), amp(1, 2, 0)}},

    // Appendix (vi), channel 6
    {"Appendix (vi), s_6^0", 6, 0, 0, "s_6^0", R"tex(\ket{s_{6}^0}_B&=\frac{1}{\sqrt{6}}\big[c_1 \ket{0}_B+c_2\ket{1}_B\big])tex", kInvRoot6, {amp(1, 1, 0), amp(1, 2, 1)}},
    {"Appendix (vi), s_6^1", 6, 1, 1, "s_6^1", R"tex(\ket{s_{6}^1}_B&=\frac{1}{2}c_0 \ket{0_B})tex", kHalf, {amp(1, 0, 0)}},
    {"Appendix (vi), s_6^2", 6, 2, 2, "s_6^2", R"tex(\ket{s_{6}^2}_B&=-\frac{1}{2}c_0 \ket{0_B})tex", kNegHalf, {amp(1, 0, 0)}},
    {"Appendix (vi), s_6^3", 6, 3, 3, "s_6^3", R"tex(\ket{s_{6}^3}_B&=\frac{1}{2}\big[c_2 \ket{1_B} - c_1\ket{0_B}\big])tex", kHalf, {amp(1, 2, 1), amp(-1, 1, 0)}},
    {"Appendix (vi), s_6^4", 6, 4, 4, "s_6^4", R"tex(\ket{s_{6}^4}_B&=\frac{1}{2}c_0\ket{1_B})tex", kHalf, {amp(1, 0, 1)}},
    {"Appendix (vi), s_6^5", 6, 5, 5, "s_6^5", R"tex(\ket{s_{6}^5}_B&=-\frac{1}{2}c_0\ket{1_B})tex", kNegHalf, {amp(1, 0, 1)}},
    {"Appendix (vi), s_6^6", 6, 6, 6, "s_6^6", R"tex(\ket{s_{6}^6}_B&=\frac{1}{2}\big[c_2\ket{0_B}+c_1 \ket{1_B}\big])tex", kHalf, {amp(1, 2, 0), amp(1, 1, 1)}},
    {"Appendix (vi), s_6^7", 6, 7, 7, "s_6^7", R"tex(\ket{s_{6}^7}_B&=-\frac{1}{2}\big[c_2\ket{0_B}-c_1 \ket{1_B}\big])tex", kNegHalf, {amp(1, 2, 0), amp(-1, 1, 1)}},
    {"Appendix (vi), s_6^8", 6, 8, 8, "s_6^8", R"tex(\ket{s_{6}^8}_B&:=\frac{1}{2\sqrt{3}}\big[c_2 \ket{1_B}+c_1\ket{0_B}\big])tex", kInv2Root3, {amp(1, 2, 1), amp(1, 1, 0)}},

    // Appendix (vii), channel 7
    {"Appendix (vii), s_7^0", 7, 0, 0, "s_7^0", R"tex(\ket{s_{7}^0}_B&=\frac{1}{\sqrt{6}}\big[c_2 \ket{1_B}-c_1\ket{0_B}\big])tex", kInvRoot6, {amp(1, 2, 1), amp(-1, 1, 0)}},
    {"Appendix (vii), s_7^1", 7, 1, 1, "s_7^1", R"tex(\ket{s_{7}^1}_B&=-\frac{1}{2}c_0 \ket{0_B})tex", kNegHalf, {amp(1, 0, 0)}},
    {"Appendix (vii), s_7^2", 7, 2, 2, "s_7^2", R"tex(\ket{s_{7}^2}_B&=\frac{1}{2}c_0 \ket{0_B})tex", kHalf, {amp(1, 0, 0)}},
    {"Appendix (vii), s_7^3", 7, 3, 3, "s_7^3", R"tex(\ket{s_{7}^3}_B&=\frac{1}{2}c_1 \ket{0_B} + c_2\ket{1_B}\big])tex", kHalf, {amp(1, 1, 0), amp(1, 2, 1)}, kUnopened},
    {"Appendix (vii), s_7^4", 7, 4, 4, "s_7^4", R"tex(\ket{s_{7}^4}_B&=\frac{1}{2}c_0\ket{1_B})tex", kHalf, {amp(1, 0, 1)}},
    {"Appendix (vii), s_7^5", 7, 5, 5, "s_7^5", R"tex(\ket{s_{7}^5}_B&=-\frac{1}{2}c_0\ket{1_B})tex", kNegHalf, {amp(1, 0, 1)}},
    {"Appendix (vii), s_7^6", 7, 6, 6, "s_7^6", R"tex(\ket{s_{7}^6}_B&=\frac{1}{2}\big[c_1 \ket{1_B}-c_2\ket{0_B}\big])tex", kHalf, {amp(1, 1, 1), amp(-1, 2, 0)}},
    {"Appendix (vii), s_7^7", 7, 7, 7, "s_7^7", R"tex(\ket{s_{7}^7}_B&=-\frac{1}{2}\big[c_1 \ket{1_B}+c_2\ket{0_B}\big])tex", kNegHalf, {amp(1, 1, 1), amp(1, 2, 0)}},
    {"Appendix (vii), s_7^8", 7, 8, 8, "s_7^8", R"tex(\ket{s_{7}^8}_B&:=\frac{1}{2\sqrt{3}}\big[c_2 \ket{1_B}-c_1\ket{0_B}\big])tex", kInv2Root3, {amp(1, 2, 1), amp(-1, 1, 0)}},

    // Appendix (viii), channel 8. Keyed by printed position; the labels are
    // out of order (s_8^8 appears at positions 4 and 8, s_8^6 never appears).
    {"Appendix (viii), position 0", 8, 0, 0, "s_8^0", R"tex(\ket{s_{8}^0}_B&:=\frac{1}{3\sqrt{2}}\big[c_1\ket{1_B} - 2c_0\ket{2_B}\big])tex", kInv3Root2, {amp(1, 1, 1), amp(-2, 0, 2)}},
    {"Appendix (viii), position 1", 8, 1, 1, "s_8^1", R"tex(\ket{s_{8}^1}_B&:=\frac{1}{2\sqrt{3}}\big[c_0 \ket{1_B}-2c_1\ket{0_B})tex", kInv2Root3, {amp(1, 0, 1), amp(-2, 1, 0)}, kUnclosed},
    {"Appendix (viii), position 2", 8, 2, 2, "s_8^2", R"tex(\ket{s_{8}^2}_B&:=-\frac{1}{2\sqrt{3}}\big[c_0 \ket{1_B}+2c_1\ket{0_B}\big])tex", kNegInv2Root3, {amp(1, 0, 1), amp(2, 1, 0)}},
    {"Appendix (viii), position 3", 8, 3, 3, "s_8^3", R"tex(\ket{s_{8}^3}_B&:=-\frac{1}{2\sqrt{3}}\big[c_1 \ket{1_B}\big])tex", kNegInv2Root3, {amp(1, 1, 1)}},
    {"Appendix (viii), position 4", 8, 4, 8, "s_8^8", R"tex(\ket{s_{8}^8}_B&:=\frac{1}{2\sqrt{3}}\big[c_0\ket{2_B} - 2c_2\ket{0_B}\big])tex", kInv2Root3, {amp(1, 0, 2), amp(-2, 2, 0)}, "printed label s_8^8 at position 4; label-keyed lookup is ambiguous"},
    {"Appendix (viii), position 5", 8, 5, 4, "s_8^4", R"tex(\ket{s_{8}^4}_B&:=-\frac{1}{2\sqrt{3}}\big[c_0\ket{2_B} +2c_2\ket{0_B}\big])tex", kNegInv2Root3, {amp(1, 0, 2), amp(2, 2, 0)}, "printed label s_8^4 at position 5"},
    {"Appendix (viii), position 6", 8, 6, 5, "s_8^5", R"tex(\ket{s_{8}^5}_B&:=\frac{1}{2\sqrt{3}}\big[c_2\ket{1_B} +c_1\ket{2_B}\big])tex", kInv2Root3, {amp(1, 2, 1), amp(1, 1, 2)}, "printed label s_8^5 at position 6"},
    {"Appendix (viii), position 7", 8, 7, 7, "s_8^7", R"tex(\ket{s_{8}^7}_B&:=\frac{1}{2\sqrt{3}}\big[c_2\ket{1_B} -c_1\ket{2_B}\big])tex", kInv2Root3, {amp(1, 2, 1), amp(-1, 1, 2)}},
    {"Appendix (viii), position 8", 8, 8, 8, "s_8^8", R"tex(\ket{s_{8}^8}_B&:=\frac{1}{6}\big[4 c_0 \ket{0_B}+c_1\ket{1_B}\big])tex", kSixth, {amp(4, 0, 0), amp(1, 1, 1)}},
}};

inline constexpr std::array<Printed, 81> kGates{{
    // Channel 0, measurement gates
    {"Eq. (11a)", 0, 0, 0, "Lambda_0^0", R"tex(\Lambda_0^0& :=\frac{1}{3}\big[\ket{0}_B\bra{0}+\ket{1}_B\bra{1}+\ket{2}_B\bra{2}\big])tex", kThird, {op(1, 0, 0), op(1, 1, 1), op(1, 2, 2)}},
    {"Eq. (11b)", 0, 1, 1, "Lambda_0^1", R"tex(\Lambda_0^1&:=\frac{1}{\sqrt{6}}\big[\ket{0}_B\bra{1}+\ket{1}_B\bra{0}\big])tex", kInvRoot6, {op(1, 0, 1), op(1, 1, 0)}},
    {"Eq. (11c)", 0, 2, 2, "Lambda_0^2", R"tex(\Lambda_0^2&:=\frac{1}{\sqrt{6}}\big[\ket{0}_B\bra{1}-\ket{1}_B\bra{0}\big])tex", kInvRoot6, {op(1, 0, 1), op(-1, 1, 0)}},
    {"Eq. (11d)", 0, 3, 3, "Lambda_0^3", R"tex(\Lambda_0^3&:=-\frac{1}{\sqrt{6}}\big[\ket{1}_B\bra{1}+\ket{2}_B\bra{2}\big])tex", kNegInvRoot6, {op(1, 1, 1), op(1, 2, 2)}},
    {"Eq. (11e)", 0, 4, 4, "Lambda_0^4", R"tex(\Lambda_0^4&:=\frac{1}{\sqrt{6}}\big[\ket{0}_B\bra{2}+\ket{2}_B\bra{0}\big])tex", kInvRoot6, {op(1, 0, 2), op(1, 2, 0)}},
    {"Eq. (11f)", 0, 5, 5, "Lambda_0^5", R"tex(\Lambda_0^5&:=\frac{1}{\sqrt{6}}\big[\ket{0}_B\bra{2}-\ket{2}_B\bra{0}\big])tex", kInvRoot6, {op(1, 0, 2), op(-1, 2, 0)}},
    {"Eq. (11g)", 0, 6, 6, "lambda_0^6", R"tex(\lambda_0^6&:=\frac{1}{\sqrt{6}}\big[\ket{1}_B\ket{2}+\ket{2}_B\bra{1}\big])tex", kInvRoot6, {op(1, 1, 2), op(1, 2, 1)}, "first term printed as a ket-ket product |1>_B|2>; read as |1><2|"},
    {"Eq. (11h)", 0, 7, 7, "Lambda_0^7", R"tex(\Lambda_0^7&:=\frac{1}{\sqrt{6}}\big[\ket{1}_B\bra{2}-\ket{2}_B\bra{1}\big])tex", kInvRoot6, {op(1, 1, 2), op(-1, 2, 1)}},
    {"Eq. (11i)", 0, 8, 8, "Lambda_0^8", R"tex(\Lambda_{0}^8 &:=\frac{1}{3\sqrt{2}}\big[\ket{1}_B\bra{1}+\ket{2}_B\bra{2}-2\big(\ket{0}_B\bra{0}\big])tex", kInv3Root2, {op(1, 1, 1), op(1, 2, 2), op(-2, 0, 0)}, "unbalanced '\\big(' before |0><0|; read as -2|0><0|"},

    // Appendix (i), channel 1
    {"Appendix (i), Lambda_1^0", 1, 0, 0, "hat Lambda_1^0", R"tex(\hat{\Lambda}_1^0& := \frac{1}{\sqrt{6}}\ket{0}\bra{1}+\ket{1}\bra{0})tex", kInvRoot6, {op(1, 0, 1), op(1, 1, 0)}, kNoBrackets},
    {"Appendix (i), Lambda_1^1", 1, 1, 1, "hat Lambda_1^1", R"tex(\hat{\Lambda}_1^1&:= \frac{1}{2}\ket{0}\bra{0}+\ket{1}\bra{1})tex", kHalf, {op(1, 0, 0), op(1, 1, 1)}, kNoBrackets},
    {"Appendix (i), Lambda_1^2", 1, 2, 2, "hat Lambda_1^2", R"tex(\hat{\Lambda}_1^2&:=-\frac{1}{2}\ket{0}\bra{0}+\ket{1}\bra{1})tex", kHalf, {op(-1, 0, 0), op(1, 1, 1)}, kNoBrackets},
    {"Appendix (i), Lambda_1^3", 1, 3, 3, "hat Lambda_1^3", R"tex(\hat{\Lambda}_1^3&:= -\frac{1}{2}\ket{0}\bra{1})tex", kNegHalf, {op(1, 0, 1)}},
    {"Appendix (i), Lambda_1^4", 1, 4, 4, "hat Lambda_1^4", R"tex(\hat{\Lambda}_1^4&:=\frac{1}{2}\ket{1}\bra{2})tex", kHalf, {op(1, 1, 2)}},
    {"Appendix (i), Lambda_1^5", 1, 5, 5, "hat Lambda_1^5", R"tex(\hat{\Lambda}_1^5&:=\frac{1}{2}\ket{1}\bra{2})tex", kHalf, {op(1, 1, 2)}},
    {"Appendix (i), Lambda_1^6", 1, 6, 6, "hat Lambda_1^6", R"tex(\hat{\Lambda}_1^6&:=\frac{1}{2}\ket{0}\bra{2})tex", kHalf, {op(1, 0, 2)}},
    {"Appendix (i), Lambda_1^7", 1, 7, 7, "hat Lambda_1^7", R"tex(\hat{\Lambda}_1^7&:=\frac{1}{2}\ket{0}\bra{2})tex", kHalf, {op(1, 0, 2)}},
    {"Appendix (i), Lambda_1^8", 1, 8, 8, "hat Lambda_1^8", R"tex(\hat{\Lambda}_{1}^8&:=\frac{1}{2\sqrt{3}}\big[\ket{0}\bra{1}-2\ket{1}\bra{0}.)tex", kInv2Root3, {op(1, 0, 1), op(-2, 1, 0)}, kUnclosed},

    // Appendix (ii), channel 2
    {"Appendix (ii), Lambda_2^0", 2, 0, 0, "Lambda_2^0", R"tex(\Lambda_2^0& := \frac{1}{\sqrt{6}}\big[\ket{0}\bra{1}-\ket{1}\bra{0}\big])tex", kInvRoot6, {op(1, 0, 1), op(-1, 1, 0)}},
    {"Appendix (ii), Lambda_2^1", 2, 1, 1, "Lambda_2^1", R"tex(\Lambda_2^1&:=\frac{1}{2}\ket{0}\bra{0}-\ket{1}\bra{1})tex", kHalf, {op(1, 0, 0), op(-1, 1, 1)}, kNoBrackets},
    {"Appendix (ii), Lambda_2^2", 2, 2, 2, "Lambda_2^2", R"tex(\Lambda_2^2&:=-\frac{1}{2}\ket{0}\bra{0}-\ket{1}\bra{1})tex", kHalf, {op(-1, 0, 0), op(-1, 1, 1)}, kNoBrackets},
    {"Appendix (ii), Lambda_2^3", 2, 3, 3, "Lambda_2^3", R"tex(\Lambda_2^3&:= -\frac{1}{2}\ket{0}\bra{1})tex", kNegHalf, {op(1, 0, 1)}},
    {"Appendix (ii), Lambda_2^4", 2, 4, 4, "Lambda_2^4", R"tex(\Lambda_2^4&:=-\frac{1}{2}\ket{1}\bra{2})tex", kNegHalf, {op(1, 1, 2)}},
    {"Appendix (ii), Lambda_2^5", 2, 5, 5, "Lambda_2^5", R"tex(\Lambda_2^5&:=-\frac{1}{2}\ket{1}\bra{2})tex", kNegHalf, {op(1, 1, 2)}},
    {"Appendix (ii), Lambda_2^6", 2, 6, 6, "Lambda_2^6", R"tex(\Lambda_2^6&:=\frac{1}{2}\ket{0}\bra{2})tex", kHalf, {op(1, 0, 2)}},
    {"Appendix (ii), Lambda_2^7", 2, 7, 7, "Lambda_2^7", R"tex(\Lambda_2^7&:=\frac{1}{2}\ket{0}\bra{2})tex", kHalf, {op(1, 0, 2)}},
    {"Appendix (ii), Lambda_2^8", 2, 8, 8, "Lambda_2^8", R"tex(\Lambda_{2}^8&:=\frac{1}{2\sqrt{3}}\big[2\ket{1}\bra{0}+\ket{0}\bra{1}\big])tex", kInv2Root3, {op(2, 1, 0), op(1, 0, 1)}},

    // Appendix (iii), channel 3
    {"Appendix (iii), Lambda_3^0", 3, 0, 0, "Lambda_3^0", R"tex(\Lambda_3^0& :=\frac{1}{\sqrt{6}}\big[-\ket{1}\bra{1}+\ket{2}\bra{2}\big])tex", kInvRoot6, {op(-1, 1, 1), op(1, 2, 2)}},
    {"Appendix (iii), Lambda_3^1", 3, 1, 1, "Lambda_3^1", R"tex(\Lambda_3^1&:=-\frac{1}{2}\ket{1}\bra{0})tex", kNegHalf, {op(1, 1, 0)}},
    {"Appendix (iii), Lambda_3^2", 3, 2, 2, "Lambda_3^2", R"tex(\Lambda_3^2&:=\frac{1}{2}\ket{1}\bra{0})tex", kHalf, {op(1, 1, 0)}},
    {"Appendix (iii), Lambda_3^3", 3, 3, 3, "Lambda_3^3", R"tex(\Lambda_3^3&:=\frac{1}{2}\big[\ket{1}\bra{1}+\ket{2}\bra{2}\big])tex", kHalf, {op(1, 1, 1), op(1, 2, 2)}},
    {"Appendix (iii), Lambda_3^4", 3, 4, 4, "Lambda_3^4", R"tex(\Lambda_3^4&:=\frac{1}{2}\ket{2}\bra{0})tex", kHalf, {op(1, 2, 0)}},
    {"Appendix (iii), Lambda_3^5", 3, 5, 5, "Lambda_3^5", R"tex(\Lambda_3^5&:= -\frac{1}{2}\ket{2}\bra{0})tex", kNegHalf, {op(1, 2, 0)}},
    {"Appendix (iii), Lambda_3^6", 3, 6, 6, "Lambda_3^6", R"tex(\Lambda_3^6&:=\frac{1}{2}\big[-\ket{1}\bra{2}+\ket{2}\bra{1}\big])tex", kHalf, {op(-1, 1, 2), op(1, 2, 1)}},
    {"Appendix (iii), Lambda_3^7", 3, 7, 7, "Lambda_3^7", R"tex(\Lambda_3^7&:=-\frac{1}{2}\big[\ket{1}\bra{2}+\ket{2}\bra{1}\big])tex", kNegHalf, {op(1, 1, 2), op(1, 2, 1)}},
    {"Appendix (iii), Lambda_3^8", 3, 8, 8, "Lambda_3^8", R"tex(\Lambda_{3}^8&:=\frac{1}{2\sqrt{3}}\big[-\ket{1}\bra{1}+\ket{2}\bra{2}\big])tex", kInv2Root3, {op(-1, 1, 1), op(1, 2, 2)}},

    // Appendix (iv), channel 4
    {"Appendix (iv), Lambda_4^0", 4, 0, 0, "Lambda_4^0", R"tex(\Lambda_4^0& := \frac{1}{\sqrt{6}}\big[\ket{0}\bra{2}+\ket{2}\bra{0}\big])tex", kInvRoot6, {op(1, 0, 2), op(1, 2, 0)}},
    {"Appendix (iv), Lambda_4^1", 4, 1, 1, "Lambda_4^1", R"tex(\Lambda_4^1&:=\frac{1}{2}\ket{2}\bra{1})tex", kHalf, {op(1, 2, 1)}},
    {"Appendix (iv), Lambda_4^2", 4, 2, 2, "Lambda_4^2", R"tex(\Lambda_4^2&:=\frac{1}{2}\ket{2}\bra{1})tex", kHalf, {op(1, 2, 1)}},
    {"Appendix (iv), Lambda_4^3", 4, 3, 3, "Lambda_4^3", R"tex(\Lambda_4^3&:=\frac{1}{2}\ket{0}\bra{2})tex", kHalf, {op(1, 0, 2)}},
    {"Appendix (iv), Lambda_4^4", 4, 4, 4, "Lambda_4^4", R"tex(\Lambda_4^4&:=\frac{1}{2}\big[\ket{2}\bra{2}+\ket{0}\bra{0}\big])tex", kHalf, {op(1, 2, 2), op(1, 0, 0)}},
    {"Appendix (iv), Lambda_4^5", 4, 5, 5, "Lambda_4^5", R"tex(\Lambda_4^5&:=\frac{1}{2}\big[\ket{2}\bra{2}-\ket{0}\bra{0}\big])tex", kHalf, {op(1, 2, 2), op(-1, 0, 0)}},
    {"Appendix (iv), Lambda_4^6", 4, 6, 6, "Lambda_4^6", R"tex(\Lambda_4^6&:=\frac{1}{2}\ket{0}\bra{1})tex", kHalf, {op(1, 0, 1)}},
    {"Appendix (iv), Lambda_4^7", 4, 7, 7, "Lambda_4^7", R"tex(\Lambda_4^7&:=-\frac{1}{2}\ket{0}\bra{1})tex", kNegHalf, {op(1, 0, 1)}},
    {"Appendix (iv), Lambda_4^8", 4, 8, 8, "Lambda_4^8", R"tex(\Lambda_{4}^8&:=\frac{1}{2\sqrt{3}}\big[\ket{0}\bra{2}-2\ket{2}\bra{0}\big])tex", kInv2Root3, {op(1, 0, 2), op(-2, 2, 0)}},

    // Appendix (v), channel 5
    {"Appendix (v), Lambda_5^0", 5, 0, 0, "Lambda_5^0", R"tex(\Lambda_5^0& :=\frac{1}{\sqrt{6}}\big[\ket{0}\bra{2}-\ket{2}\bra{0}\bigg])tex", kInvRoot6, {op(1, 0, 2), op(-1, 2, 0)}, "mismatched \\big[ ... \\bigg] delimiters"},
    {"Appendix (v), Lambda_5^1", 5, 1, 1, "Lambda_5^1", R"tex(\Lambda_5^1&:=-\frac{1}{2}\ket{2}\bra{1})tex", kNegHalf, {op(1, 2, 1)}},
    {"Appendix (v), Lambda_5^2", 5, 2, 2, "Lambda_5^2", R"tex(\Lambda_5^2&:=-\frac{1}{2}\ket{2}\bra{1})tex", kNegHalf, {op(1, 2, 1)}},
    {"Appendix (v), Lambda_5^3", 5, 3, 3, "Lambda_5^3", R"tex(\Lambda_5^3&:=\frac{1}{2}\big[\ket{0}\bra{2})tex", kHalf, {op(1, 0, 2)}, kUnclosed},
    {"Appendix (v), Lambda_5^4", 5, 4, 4, "Lambda_5^4", R"tex(\Lambda_5^4&:=\frac{1}{2}\big[\ket{0}\bra{0} - \ket{2}\bra{2} \big])tex", kHalf, {op(1, 0, 0), op(-1, 2, 2)}},
    {"Appendix (v), Lambda_5^5", 5, 5, 5, "Lambda_5^5", R"tex(\Lambda_5^5&:=-\frac{1}{2}\big[\ket{0}\bra{0} + \ket{2}\bra{2} \big])tex", kNegHalf, {op(1, 0, 0), op(1, 2, 2)}},
    {"Appendix (v), Lambda_5^6", 5, 6, 6, "Lambda_5^6", R"tex(\Lambda_5^6&:=\frac{1}{2}\ket{0}\bra{1})tex", kHalf, {op(1, 0, 1)}},
    {"Appendix (v), Lambda_5^7", 5, 7, 7, "Lambda_5^7", R"tex(\Lambda_5^7&:=-\frac{1}{2}\ket{0}\bra{1})tex", kNegHalf, {op(1, 0, 1)}},
    {"Appendix (v), Lambda_5^8", 5, 8, 8, "Lambda_5^8", R"tex(\Lambda_{5}^8&:=\frac{1}{2\sqrt{3}}\big[\ket{0}\bra{2}+2\ket{2}\bra{0}\big])tex", kInv2Root3, {op(1, 0, 2), op(2, 2, 0)}},

    // Appendix (vi), channel 6
    {"Appendix (vi), Lambda_6^0", 6, 0, 0, "Lambda_6^0", R"tex(\Lambda_6^0& := \frac{1}{\sqrt{6}}\big[\ket{0}\bra{1}+\ket{1}\bra{2}\big])tex", kInvRoot6, {op(1, 0, 1), op(1, 1, 2)}},
    {"Appendix (vi), Lambda_6^1", 6, 1, 1, "Lambda_6^1", R"tex(\Lambda_6^1&:=\frac{1}{2}\ket{0}\bra{0})tex", kHalf, {op(1, 0, 0)}},
    {"Appendix (vi), Lambda_6^2", 6, 2, 2, "Lambda_6^2", R"tex(\Lambda_6^2&:=-\frac{1}{2}\ket{0}\bra{0})tex", kNegHalf, {op(1, 0, 0)}},
    {"Appendix (vi), Lambda_6^3", 6, 3, 3, "Lambda_6^3", R"tex(\Lambda_6^3&:=\frac{1}{2}\big[-\ket{0}\bra{1}+\ket{1}\bra{2}\big])tex", kHalf, {op(-1, 0, 1), op(1, 1, 2)}},
    {"Appendix (vi), Lambda_6^4", 6, 4, 4, "Lambda_6^4", R"tex(\Lambda_6^4&:=\frac{1}{2}\big[-\ket{0}\bra{1} + \ket{1}\bra{2}\big])tex", kHalf, {op(-1, 0, 1), op(1, 1, 2)}},
    {"Appendix (vi), Lambda_6^5", 6, 5, 5, "Lambda_6^5", R"tex(\Lambda_6^5&:=-\frac{1}{2}\ket{1}\bra{0})tex", kNegHalf, {op(1, 1, 0)}},
    {"Appendix (vi), Lambda_6^6", 6, 6, 6, "Lambda_6^6", R"tex(\Lambda_6^6&:=\frac{1}{2}\big[\ket{0}\bra{2}+\ket{1}\bra{1}\big])tex", kHalf, {op(1, 0, 2), op(1, 1, 1)}},
    {"Appendix (vi), Lambda_6^7", 6, 7, 7, "Lambda_6^7", R"tex(\Lambda_6^7 &:=\frac{1}{2}\big[\ket{0}\bra{2}-\ket{1}\bra{1}\big])tex", kHalf, {op(1, 0, 2), op(-1, 1, 1)}},
    {"Appendix (vi), Lambda_6^8", 6, 8, 8, "Lambda_6^8", R"tex(\Lambda_{6}^8&:=\frac{1}{2\sqrt{3}}\big[\ket{0}\bra{1}+\ket{1}\bra{2}\big])tex", kInv2Root3, {op(1, 0, 1), op(1, 1, 2)}},

    // Appendix (vii), channel 7
    {"Appendix (vii), Lambda_7^0", 7, 0, 0, "Lambda_7^0", R"tex(\Lambda_7^0& := \frac{1}{\sqrt{6}}\big[-\ket{0}\bra{1}+\ket{1}\bra{2}\big])tex", kInvRoot6, {op(-1, 0, 1), op(1, 1, 2)}},
    {"Appendix (vii), Lambda_7^1", 7, 1, 1, "Lambda_7^1", R"tex(\Lambda_7^1&:=-\frac{1}{2}\ket{0}\bra{0})tex", kNegHalf, {op(1, 0, 0)}},
    {"Appendix (vii), Lambda_7^2", 7, 2, 2, "Lambda_7^2", R"tex(\Lambda_7^2&:=\frac{1}{2}\ket{0}\bra{0})tex", kHalf, {op(1, 0, 0)}},
    {"Appendix (vii), Lambda_7^3", 7, 3, 3, "Lambda_7^3", R"tex(\Lambda_7^3&:=\frac{1}{2}\big[\ket{0}\bra{1}+\ket{1}\bra{2}\big])tex", kHalf, {op(1, 0, 1), op(1, 1, 2)}},
    {"Appendix (vii), Lambda_7^4", 7, 4, 4, "Lambda_7^4", R"tex(\Lambda_7^4&:=\frac{1}{2}\ket{1}\bra{0})tex", kHalf, {op(1, 1, 0)}},
    {"Appendix (vii), Lambda_7^5", 7, 5, 5, "Lambda_7^5", R"tex(\Lambda_7^5&:=-\frac{1}{2}\ket{1}\bra{0})tex", kNegHalf, {op(1, 1, 0)}},
    {"Appendix (vii), Lambda_7^6", 7, 6, 6, "Lambda_7^6", R"tex(\Lambda_7^6&:=\frac{1}{2}\big[\ket{1}\bra{1} - \ket{0}\bra{2}\big])tex", kHalf, {op(1, 1, 1), op(-1, 0, 2)}},
    {"Appendix (vii), Lambda_7^7", 7, 7, 7, "Lambda_7^7", R"tex(\Lambda_7^7&:=-\frac{1}{2}\big[\ket{1}\bra{1}+\ket{0}\bra{2}\big])tex", kNegHalf, {op(1, 1, 1), op(1, 0, 2)}},
    {"Appendix (vii), Lambda_7^8", 7, 8, 8, "Lambda_7^8", R"tex(\Lambda_{7}^8&:=\frac{1}{2\sqrt{3}}\big[-\ket{0}\bra{1}+\ket{1}\bra{2}\big])tex", kInv2Root3, {op(-1, 0, 1), op(1, 1, 2)}},

    // Appendix (viii), channel 8. Labels print as Lambda_k^8 (indices swapped);
    // keyed by position.
    {"Appendix (viii), position 0", 8, 0, 0, "Lambda_0^8", R"tex(\Lambda_0^8& := \frac{1}{3\sqrt{2}}\big[-2\ket{0}\bra{0}+\ket{1}\bra{1}\big])tex", kInv3Root2, {op(-2, 0, 0), op(1, 1, 1)}},
    {"Appendix (viii), position 1", 8, 1, 1, "Lambda_1^8", R"tex(\Lambda_1^8&:=\frac{1}{2\sqrt{3}}\big[-2\ket{0}\bra{1}+\ket{1}\bra{0}\big])tex", kInv2Root3, {op(-2, 0, 1), op(1, 1, 0)}},
    {"Appendix (viii), position 2", 8, 2, 2, "Lambda_2^8", R"tex(\Lambda_2^8&:=-\frac{1}{2\sqrt{3}}\big[2\ket{0}\bra{1}+\ket{1}\bra{0}\big])tex", kNegInv2Root3, {op(2, 0, 1), op(1, 1, 0)}},
    {"Appendix (viii), position 3", 8, 3, 3, "Lambda_3^8", R"tex(\Lambda_3^8&:=-\frac{1}{2\sqrt{3}}\ket{1}\bra{1})tex", kNegInv2Root3, {op(1, 1, 1)}},
    {"Appendix (viii), position 4", 8, 4, 4, "Lambda_4^8", R"tex(\Lambda_4^8&:=-\frac{1}{2\sqrt{3}}\big[-2\ket{0}\bra{2}+\ket{2}\bra{0}\big])tex", kNegInv2Root3, {op(-2, 0, 2), op(1, 2, 0)}},
    {"Appendix (viii), position 5", 8, 5, 5, "Lambda_5^8", R"tex(\Lambda_5^8&:=-\frac{1}{2\sqrt{3}}\big[2\ket{0}\bra{2}+\ket{2}\bra{0}\big])tex", kNegInv2Root3, {op(2, 0, 2), op(1, 2, 0)}},
    {"Appendix (viii), position 6", 8, 6, 6, "Lambda_6^8", R"tex(\Lambda_6^8&:=\frac{1}{2\sqrt{3}}\big[\ket{1}\bra{2}+\ket{2}\bra{1}\big])tex", kInv2Root3, {op(1, 1, 2), op(1, 2, 1)}},
    {"Appendix (viii), position 7", 8, 7, 7, "Lambda_7^8", R"tex(\Lambda_7^8&:=\frac{1}{2\sqrt{3}}\big[\ket{1}\bra{2}-\ket{2}\bra{1}\big])tex", kInv2Root3, {op(1, 1, 2), op(-1, 2, 1)}},
    {"Appendix (viii), position 8", 8, 8, 8, "Lambda_8^8", R"tex(\Lambda_{8}^8&:=\frac{1}{6}\big[4\ket{0}\bra{0}+\ket{1}\bra{1}\big])tex", kSixth, {op(4, 0, 0), op(1, 1, 1)}},
}};

inline constexpr std::array<PrintedExpansion, 9> kExpansions{{
    {"Eq. (4a)", 0, 0, R"tex(\ket{0_{A_2}}\ket{0_B} &= \frac{1}{{\sqrt 3 }}\big[{{\ket{ {{\Psi_{0}}} } }_{A_2B}} - \sqrt 2  {{\ket{ {{\Psi _{8}}} } }_{A_2B}}\big])tex", kInvRoot3, {psi(kOne, 0), psi({-1, 1, 2}, 8)}},
    {"Eq. (4b)", 1, 1, R"tex(\ket{1_{A_2}}\ket{1_B} &= \frac{1}{{\sqrt 3 }}\big[\ket{ {{\Psi_{0}}} } _{A_2B} - \sqrt{\frac{3}{2}}\ket{ {{\Psi _{3}}} } _{A_2B} + \frac{1}{{\sqrt 2 }}\ket{ {{\Psi_{8}}} }_{A_2B}\big])tex", kInvRoot3, {psi(kOne, 0), psi({-1, 2, 6}, 3), psi(kInvRoot2, 8)}},
    {"Eq. (4c)", 1, 0, R"tex(\ket{1_{A_2}}\ket{0_B} &= \frac{1}{{\sqrt 2 }}\big[{{\ket{ {\Psi _{1}} } }_{A_2B}} + {\ket{ {\Psi _{2}} } }_{A_2B} \big])tex", kInvRoot2, {psi(kOne, 1), psi(kOne, 2)}},
    {"Eq. (4d)", 0, 1, R"tex(\ket{0_{A_2}}\ket{1_B} &= \frac{1}{{\sqrt 2 }}\big[{{\ket{{\Psi_{1}} } }_{A_2B}} - {\ket{ {\Psi _{2}} } }_{A_2B} \big])tex", kInvRoot2, {psi(kOne, 1), psi({-1, 1, 1}, 2)}},
    {"Eq. (4e)", 2, 0, R"tex(\ket{2_{A_2}}\ket{0_B} &= \frac{1}{{\sqrt 2 }}\big[ {{\ket{ {\Psi _{4} } } }_{A_2B}} + {\ket{ {\Psi_{5}} } }_{A_2B} \big])tex", kInvRoot2, {psi(kOne, 4), psi(kOne, 5)}},
    {"Eq. (4f)", 0, 2, R"tex(\ket{0_{A_2}}\ket{2_B} &= \frac{1}{{\sqrt 2 }}\big[{{\ket{ {\Psi _{4} } } }_{A_2B}} - {\ket{ {\Psi _{5} } } }_{A_2B} \big])tex", kInvRoot2, {psi(kOne, 4), psi({-1, 1, 1}, 5)}},
    {"Eq. (4g)", 2, 1, R"tex(\ket{2_{A_2}}\ket{1_B} &= \frac{1}{{\sqrt 2 }}\big[{{\ket{ {\Psi _{6}} } }_{A_2B}} + {\ket{ {\Psi _{7}} } }_{A_2B} \big])tex", kInvRoot2, {psi(kOne, 6), psi(kOne, 7)}},
    {"Eq. (4h)", 1, 2, R"tex(\ket{1_{A_2}}\ket{2_B} &= \frac{1}{{\sqrt 2 }}\big[{{\ket{ {\Psi _{6}} } }_{A_2B}} - {\ket{ {\Psi_{7} } } }_{A_2B} \big])tex", kInvRoot2, {psi(kOne, 6), psi({-1, 1, 1}, 7)}},
    {"Eq. (4i)", 2, 2, R"tex(\ket{2_{A_2}}\ket{2_B} &= \frac{1}{{\sqrt 3 }}\big[\ket{ {{\Psi_{0}}} }_{A_2B} +  \sqrt{\frac{3}{2}}\ket{ {{\Psi_{3}}} } _{A_2B} + \frac{1}{{\sqrt 2 }}\ket{ {{\Psi_{8}}} }_{A_2B}\big])tex", kInvRoot3, {psi(kOne, 0), psi({1, 2, 6}, 3), psi(kInvRoot2, 8)}},
}};

inline constexpr std::array<LabelAnomaly, 15> kLabelAnomalies{{
    {"Eq. (9)", 0, 5, "decomposition_label", "|Psi_5^0>_{A1A2}", "|Psi_5>_{A1A2}", "stray superscript 0"},
    {"Eq. (9)", 0, 7, "decomposition_label", "|Psi_7>_{TA}", "|Psi_7>_{A1A2}", "stray site subscript TA"},
    {"Eq. (11g)", 0, 6, "gate_label", "lambda_0^6", "Lambda_0^6", "lowercase lambda"},
    {"Table 1, row Psi_3", 0, 3, "premeasure_label", "|s_0^3>_0", "|s_0^3>_B", "site subscript 0 instead of B"},
    {"Appendix (viii), position 4", 8, 4, "premeasure_label", "s_8^8", "s_8^4", "s_8^8 printed twice (positions 4 and 8); label-keyed lookup of outcome 8 is ambiguous"},
    {"Appendix (viii), position 5", 8, 5, "premeasure_label", "s_8^4", "s_8^5", "labels shifted by one position"},
    {"Appendix (viii), position 6", 8, 6, "premeasure_label", "s_8^5", "s_8^6", "s_8^6 never printed; label-keyed lookup of outcome 6 has no entry"},
    {"Appendix (viii), position 0", 8, 0, "gate_label", "Lambda_0^8", "Lambda_8^0", "channel and outcome indices swapped"},
    {"Appendix (viii), position 1", 8, 1, "gate_label", "Lambda_1^8", "Lambda_8^1", "channel and outcome indices swapped"},
    {"Appendix (viii), position 2", 8, 2, "gate_label", "Lambda_2^8", "Lambda_8^2", "channel and outcome indices swapped"},
    {"Appendix (viii), position 3", 8, 3, "gate_label", "Lambda_3^8", "Lambda_8^3", "channel and outcome indices swapped"},
    {"Appendix (viii), position 4", 8, 4, "gate_label", "Lambda_4^8", "Lambda_8^4", "channel and outcome indices swapped"},
    {"Appendix (viii), position 5", 8, 5, "gate_label", "Lambda_5^8", "Lambda_8^5", "channel and outcome indices swapped"},
    {"Appendix (viii), position 6", 8, 6, "gate_label", "Lambda_6^8", "Lambda_8^6", "channel and outcome indices swapped"},
    {"Appendix (viii), position 7", 8, 7, "gate_label", "Lambda_7^8", "Lambda_8^7", "channel and outcome indices swapped"},
}};
// clang-format on

inline Matrix3 to_matrix(const Surd& prefactor, const std::array<Term, 3>& terms) {
    Matrix3 m;
    const ExtScalar p = prefactor.value();
    for (const auto& t : terms)
        if (t.row >= 0) m(static_cast<std::size_t>(t.row), static_cast<std::size_t>(t.col)) += p * t.weight.value();
    return m;
}

inline const Printed& find(const std::array<Printed, 81>& table, int channel, int position, const char* what) {
    for (const auto& e : table)
        if (e.channel == channel && e.position == position) return e;
    throw MissingEntryError(std::string("no printed ") + what + " for channel " + std::to_string(channel) +
                            ", outcome " + std::to_string(position));
}

inline PaperEntry materialize(const Printed& p, EntryKind kind) {
    const Matrix3 m = to_matrix(p.prefactor, p.terms);
    PaperEntry e;
    e.location = std::string(p.location);
    e.channel = p.channel;
    e.outcome = p.position;
    e.kind = kind;
    if (kind == EntryKind::gate)
        e.value = Operator3{m, Provenance::paper, p.channel, p.position};
    else
        e.value = apply_to_input(m);
    e.printed_label = std::string(p.label);
    e.latex = std::string(p.latex);
    e.notes = std::string(p.notes);
    e.position = p.position;
    return e;
}

}  // namespace transcription

/// Printed gate for (channel, outcome), keyed by position in the printed list.
inline PaperEntry paper_gate(int channel, int outcome) {
    return transcription::materialize(transcription::find(transcription::kGates, channel, outcome, "gate"),
                                      EntryKind::gate);
}

/// Printed pre-measurement state for (channel, outcome), keyed by position.
inline PaperEntry paper_premeasure(int channel, int outcome) {
    return transcription::materialize(
        transcription::find(transcription::kPremeasure, channel, outcome, "pre-measurement state"),
        EntryKind::premeasure);
}

/// Printed pre-measurement state looked up by the outcome index in its label.
/// Throws MissingEntryError when no label carries that index and
/// AmbiguousEntryError when more than one does.
inline PaperEntry paper_premeasure_by_label(int channel, int outcome) {
    const transcription::Printed* hit = nullptr;
    int hits = 0;
    for (const auto& e : transcription::kPremeasure)
        if (e.channel == channel && e.label_outcome == outcome) {
            hit = &e;
            ++hits;
        }
    const std::string slot = "s_" + std::to_string(channel) + "^" + std::to_string(outcome);
    if (hits == 0) throw MissingEntryError("no printed state is labelled " + slot);
    if (hits > 1) throw AmbiguousEntryError(std::to_string(hits) + " printed states are labelled " + slot);
    return transcription::materialize(*hit, EntryKind::premeasure);
}

/// Printed expansion of |a2>|b> in the entangled basis.
inline PaperEntry paper_expansion(int a2, int b) {
    for (const auto& p : transcription::kExpansions) {
        if (p.a2 != a2 || p.b != b) continue;
        ExpansionRow row{a2, b, {}};
        const ExtScalar pre = p.prefactor.value();
        for (const auto& t : p.terms)
            if (t.row >= 0) row.coefficients[static_cast<std::size_t>(t.col)] += pre * t.weight.value();
        PaperEntry e;
        e.location = std::string(p.location);
        e.kind = EntryKind::expansion_row;
        e.value = row;
        e.printed_label = "|" + std::to_string(a2) + "_{A2}>|" + std::to_string(b) + "_B>";
        e.latex = std::string(p.latex);
        e.position = static_cast<int>(&p - transcription::kExpansions.data());
        return e;
    }
    throw MissingEntryError("no printed expansion for |" + std::to_string(a2) + ">|" + std::to_string(b) + ">");
}

inline const std::array<LabelAnomaly, 15>& label_anomalies() { return transcription::kLabelAnomalies; }

}  // namespace qtp
