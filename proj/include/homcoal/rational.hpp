#ifndef HOMCOAL_RATIONAL_HPP
#define HOMCOAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>
#include <string_view>

#include <homcoal/errors.hpp>

namespace homcoal {

// All arithmetic in the library is exact. cpp_rational keeps values canonical:
// gcd(|num|, den) = 1 and den > 0, so equality is plain comparison.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string rational_to_string(const Rational& x) {
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Accepts "p" or "p/q" with optional leading '-' on p; q must be a positive
// integer literal. Anything else (including "1/0") is a parse_error.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&] {
        throw parse_error("malformed rational '" + std::string(text) + "'");
    };
    const auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text, den;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!digits(den)) fail();
    }
    std::string_view mag = num;
    if (!mag.empty() && mag.front() == '-') mag.remove_prefix(1);
    if (!digits(mag)) fail();
    Int p{std::string(num)};
    if (den.empty()) return Rational(p);
    Int q{std::string(den)};
    if (q == 0) fail();
    return Rational(p, q);
}

} // namespace homcoal

#endif // HOMCOAL_RATIONAL_HPP
