#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace dimerlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int pow_int(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

struct IsqrtResult {
    Int root;     // floor(sqrt(n))
    bool exact;   // root*root == n
};

// Exact floor square root by Newton iteration on big integers.
inline IsqrtResult integer_sqrt(const Int& n) {
    if (n < 0) throw std::domain_error("integer_sqrt: negative input");
    if (n == 0) return {0, true};
    Int x = Int(1) << (unsigned)((boost::multiprecision::msb(n) / 2) + 1);
    while (true) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return {x, x * x == n};
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// "p/q" or "p"; q defaults to 1. Throws on malformed input or q == 0.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        if (q < 0) { p = -p; q = -q; }
        return Rat(p, q);
    } catch (const std::exception&) {
        throw std::runtime_error("malformed rational: '" + s + "'");
    }
}

inline std::string rat_str(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// Fixed-point decimal rendering of a rational in [0,1]-ish range, paper style (".7").
inline std::string rat_decimal(const Rat& q, int digits = 2) {
    Rat a = q < 0 ? -q : q;
    Int scale = pow_int(10, digits);
    Int r = (num(a) * scale * 2 + den(a)) / (den(a) * 2);  // round half up
    std::string frac = r.str();
    if ((Int)frac.size() <= (Int)digits)
        frac = std::string(digits + 1 - frac.size(), '0') + frac;
    std::string out = frac.substr(0, frac.size() - digits) + "." + frac.substr(frac.size() - digits);
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return (q < 0 ? "-" : "") + out;
}

}  // namespace dimerlab
