#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hoffman {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Accepts integers ("-2"), fractions ("5/2", "-7/3") and finite decimals ("0.25").
Rational parse_rational(const std::string& s);

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& r);

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace hoffman
