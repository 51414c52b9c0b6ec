#pragma once

#include <cstdint>
#include <random>

#include "oracle/frozen_gates.hpp"
#include "qtp/qtp.hpp"

namespace support {

inline qtp::ExtScalar from_frozen(const frozen::Entry& e) {
    return {qtp::parse_rational(e.q1), qtp::parse_rational(e.q2), qtp::parse_rational(e.q3),
            qtp::parse_rational(e.q6)};
}

inline const frozen::Gate& frozen_record(int channel, int outcome) { return frozen::kGates[9 * channel + outcome]; }

inline qtp::Matrix3 frozen_gate(int channel, int outcome) {
    const auto& g = frozen_record(channel, outcome);
    qtp::Matrix3 m;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = from_frozen(g.m[r][c]);
    return m;
}

/// Component p/q with |p| <= max_num, 1 <= q <= max_den.
inline qtp::Rational random_rational(std::mt19937_64& g, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return qtp::Rational(num(g), den(g));
}

inline qtp::ExtScalar random_scalar(std::mt19937_64& g, int max_num = 20, int max_den = 12) {
    return {random_rational(g, max_num, max_den), random_rational(g, max_num, max_den),
            random_rational(g, max_num, max_den), random_rational(g, max_num, max_den)};
}

inline qtp::Matrix3 random_matrix(std::mt19937_64& g, int max_num = 5, int max_den = 4) {
    qtp::Matrix3 m;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = random_scalar(g, max_num, max_den);
    return m;
}

inline qtp::Ket random_constant_ket(std::mt19937_64& g, qtp::Site site) {
    std::vector<qtp::ExtScalar> v(qtp::site_dimension(site));
    for (auto& x : v) x = random_scalar(g, 4, 3);
    return qtp::Ket::constant(site, v);
}

/// Haar-like state from the standard library, independent of the simulator's generator.
inline qtp::State3 random_state(std::mt19937_64& g) {
    std::normal_distribution<double> n(0.0, 1.0);
    qtp::State3 v{};
    double s = 0.0;
    for (auto& a : v) {
        a = {n(g), n(g)};
        s += std::norm(a);
    }
    s = std::sqrt(s);
    for (auto& a : v) a /= s;
    return v;
}

}  // namespace support
