#pragma once

#include "gtprobe/gt_polytope.hpp"
#include "gtprobe/rational.hpp"

#include <initializer_list>
#include <string>

namespace fixtures {

inline gtprobe::OrbitSpec orbit(std::initializer_list<long> lambda)
{
    std::vector<gtprobe::Rational> v;
    for (long x : lambda) v.emplace_back(x);
    return gtprobe::OrbitSpec(std::move(v));
}

inline gtprobe::Rational q(const std::string& s)
{
    return gtprobe::Rational::parse(s);
}

inline gtprobe::RationalVector pt(const std::string& s)
{
    return gtprobe::parse_rational_list(s);
}

inline gtprobe::OrbitSpec b_neg() { return orbit({3, -1, -2}); }
inline gtprobe::OrbitSpec b_pos() { return orbit({3, 1, -4}); }
inline gtprobe::OrbitSpec monotone() { return orbit({2, 0, -2}); }

} // namespace fixtures
