#ifndef MODOP_RATIONAL_HPP
#define MODOP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace modop {

// Exact rational scalar. All coefficient arithmetic in the whole library goes
// through this type; there is no floating point anywhere. cpp_rational keeps
// values in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline bool is_zero(const Rat& r) { return r.is_zero(); }

inline Rat factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rat(f);
}

inline Rat binomial(int n, int k) {
    if (k < 0 || k > n) return Rat(0);
    Int b = 1;
    for (int i = 0; i < k; ++i) { b *= (n - i); b /= (i + 1); }
    return Rat(b);
}

// Serialized form used in every JSON interface: "num" or "num/den".
inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

// (-1)^k for possibly negative k.
inline int sign_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace modop

#endif
