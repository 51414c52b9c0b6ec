#pragma once

/// @file exact_scalar.hpp
/// Exact arithmetic in the number field Q(sqrt2, sqrt3).
///
/// Every element is stored in the fixed basis {1, sqrt2, sqrt3, sqrt6} with
/// arbitrary-precision rational coordinates. Coordinates are canonical after
/// every operation, so structural equality is value equality.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" literal; the denominator is always printed.
inline std::string rational_literal(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

/// Parses "p/q" or "p". The result is canonicalized.
inline Rational parse_rational(std::string_view text) {
    auto is_integer = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    BigInt n(std::string(num[0] == '+' ? num.substr(1) : num));
    BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument("rational literal with zero denominator: '" + std::string(text) + "'");
    return Rational(n, d);
}

/// Element q1 + q2*sqrt2 + q3*sqrt3 + q6*sqrt6 of Q(sqrt2, sqrt3).
class ExtScalar {
public:
    /// Basis slot of each coordinate.
    enum Slot : std::size_t { one = 0, root2 = 1, root3 = 2, root6 = 3 };

    ExtScalar() = default;

    ExtScalar(Rational q1, Rational q2, Rational q3, Rational q6)
        : c_{std::move(q1), std::move(q2), std::move(q3), std::move(q6)} {}

    /// Integers convert implicitly so that literals like `2 * x` read naturally.
    ExtScalar(int value) : c_{Rational(value), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)

    static ExtScalar rational(Rational value) { return {std::move(value), 0, 0, 0}; }

    static ExtScalar fraction(std::int64_t num, std::int64_t den) { return rational(Rational(num, den)); }

    /// (num/den) * sqrt(radicand) with radicand in {1, 2, 3, 6}.
    static ExtScalar surd(std::int64_t num, std::int64_t den, int radicand) {
        if (den == 0) throw std::domain_error("surd with zero denominator");
        ExtScalar out;
        out.c_[slot_of(radicand)] = Rational(num, den);
        return out;
    }

    static ExtScalar sqrt2() { return surd(1, 1, 2); }
    static ExtScalar sqrt3() { return surd(1, 1, 3); }
    static ExtScalar sqrt6() { return surd(1, 1, 6); }

    const Rational& q1() const { return c_[one]; }
    const Rational& q2() const { return c_[root2]; }
    const Rational& q3() const { return c_[root3]; }
    const Rational& q6() const { return c_[root6]; }
    const Rational& component(Slot s) const { return c_[s]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    /// True when only the rational coordinate is nonzero.
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    /// Galois conjugate sending sqrt2 -> -sqrt2 (so sqrt6 -> -sqrt6).
    ExtScalar conjugate_root2() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }

    /// Galois conjugate sending sqrt3 -> -sqrt3 (so sqrt6 -> -sqrt6).
    ExtScalar conjugate_root3() const { return {c_[0], c_[1], -c_[2], -c_[3]}; }

    friend bool operator==(const ExtScalar& a, const ExtScalar& b) { return a.c_ == b.c_; }

    friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
        return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
    }

    friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) {
        return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]};
    }

    friend ExtScalar operator-(const ExtScalar& a) { return {-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]}; }

    // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2, sqrt6*sqrt6 = 6.
    friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
        const auto& [a1, a2, a3, a6] = a.c_;
        const auto& [b1, b2, b3, b6] = b.c_;
        return {a1 * b1 + 2 * a2 * b2 + 3 * a3 * b3 + 6 * a6 * b6,
                a1 * b2 + a2 * b1 + 3 * (a3 * b6 + a6 * b3),
                a1 * b3 + a3 * b1 + 2 * (a2 * b6 + a6 * b2),
                a1 * b6 + a6 * b1 + a2 * b3 + a3 * b2};
    }

    friend ExtScalar operator/(const ExtScalar& a, const ExtScalar& b) { return a * inverse(b); }

    ExtScalar& operator+=(const ExtScalar& o) { return *this = *this + o; }
    ExtScalar& operator-=(const ExtScalar& o) { return *this = *this - o; }
    ExtScalar& operator*=(const ExtScalar& o) { return *this = *this * o; }

    /// Multiplicative inverse, rationalized through the Galois conjugates.
    /// Throws std::domain_error on zero.
    friend ExtScalar inverse(const ExtScalar& a) {
        if (a.is_zero()) throw std::domain_error("ExtScalar: division by zero");
        // a * conj3(a) lies in Q(sqrt2); times its sqrt2-conjugate it is rational.
        const ExtScalar c3 = a.conjugate_root3();
        const ExtScalar n = a * c3;
        const ExtScalar c2 = n.conjugate_root2();
        const Rational norm = (n * c2).q1();
        const ExtScalar num = c3 * c2;
        return {num.c_[0] / norm, num.c_[1] / norm, num.c_[2] / norm, num.c_[3] / norm};
    }

    /// Nearest-double evaluation q1 + q2*1.414.. + q3*1.732.. + q6*2.449..
    friend double to_double(const ExtScalar& a) {
        constexpr double kRoot2 = 1.41421356237309504880168872420969808;
        constexpr double kRoot3 = 1.73205080756887729352744634150587237;
        constexpr double kRoot6 = 2.44948974278317809819728407470589139;
        return a.c_[0].convert_to<double>() + a.c_[1].convert_to<double>() * kRoot2 +
               a.c_[2].convert_to<double>() * kRoot3 + a.c_[3].convert_to<double>() * kRoot6;
    }

private:
    static std::size_t slot_of(int radicand) {
        switch (radicand) {
            case 1: return one;
            case 2: return root2;
            case 3: return root3;
            case 6: return root6;
            default: throw std::invalid_argument("radicand must be one of 1, 2, 3, 6");
        }
    }

    std::array<Rational, 4> c_{};
};

}  // namespace qtp
