#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace realhur {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
    auto s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

}  // namespace realhur
