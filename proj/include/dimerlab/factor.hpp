#pragma once

#include "dimerlab/numeric.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimerlab {

namespace detail {

inline Int mulmod(const Int& a, const Int& b, const Int& m) { return a * b % m; }

inline Int powmod(Int base, Int e, const Int& m) {
    Int r = 1;
    base %= m;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return r;
}

inline bool miller_rabin_witness(const Int& n, const Int& a) {
    if (a % n == 0) return false;
    Int d = n - 1;
    unsigned s = 0;
    while (!boost::multiprecision::bit_test(d, 0)) { d >>= 1; ++s; }
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

}  // namespace detail

// Deterministic below 2^64 (the 12 smallest primes suffice there);
// 40 fixed pseudo-random rounds above.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    static const Int two64 = Int(1) << 64;
    if (n < two64) {
        for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
            if (detail::miller_rabin_witness(n, a)) return false;
        return true;
    }
    Int a = 2;
    for (int round = 0; round < 40; ++round) {
        if (detail::miller_rabin_witness(n, a)) return false;
        a = a * 0x5deece66dull + 11;  // fixed schedule, reproducible runs
        a %= (n - 3);
        if (a < 2) a += 2;
    }
    return true;
}

namespace detail {

// Brent's cycle variant of Pollard rho, deterministically seeded.
inline Int pollard_brent(const Int& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        Int y = 2 + (long)(c % 7), g = 1, q = 1, x = 0, ys = 0;
        unsigned long r = 1, m = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    Int d = x - y;
                    if (d < 0) d = -d;
                    q = q * d % n;
                }
                g = boost::multiprecision::gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            do {
                ys = (ys * ys + c) % n;
                Int d = x - ys;
                if (d < 0) d = -d;
                g = boost::multiprecision::gcd(d, n);
            } while (g == 1);
        }
        if (g != n) return g;
        // cycle degenerated; retry with the next polynomial increment
    }
}

inline void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    // perfect powers first: rho stalls on squares of large primes, and the
    // squarish counts in this domain hit exactly that case
    unsigned bits = boost::multiprecision::msb(n) + 1;
    for (unsigned k = 2; k <= bits; ++k) {
        Int lo = 2, hi = (Int(1) << (bits / k + 1)) + 1;
        while (lo <= hi) {  // integer k-th root by bisection
            Int mid = (lo + hi) / 2;
            Int pw = 1;
            bool over = false;
            for (unsigned i = 0; i < k && !over; ++i) {
                pw *= mid;
                if (pw > n) over = true;
            }
            if (!over && pw == n) {
                std::map<Int, unsigned> sub;
                factor_into(mid, sub);
                for (auto& [p, e] : sub) out[p] += e * k;
                return;
            }
            if (over || pw > n) hi = mid - 1;
            else lo = mid + 1;
        }
    }
    Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

enum class CountStructure { SQUARE, TWO_TIMES_SQUARE, POW2_TIMES_ODD_SQUARE, SQUARE_TIMES_SMALL, NONE };

struct FactoredCount {
    Int value;
    std::vector<std::pair<Int, unsigned>> factors;  // (prime, exponent), primes ascending
    CountStructure structure = CountStructure::NONE;
    unsigned pow2 = 0;          // k of POW2_TIMES_ODD_SQUARE
    Int small_multiplier = 0;   // s of SQUARE_TIMES_SMALL (the square-free part)
    Int largest_prime = 0;

    std::string factored_str() const {
        if (value == 1) return "1";
        std::ostringstream os;
        bool first = true;
        for (auto& [p, e] : factors) {
            if (!first) os << " * ";
            first = false;
            os << p.str();
            if (e > 1) os << "^" << e;
        }
        return os.str();
    }

    std::string structure_str() const {
        switch (structure) {
            case CountStructure::SQUARE: return "square";
            case CountStructure::TWO_TIMES_SQUARE: return "2*square";
            case CountStructure::POW2_TIMES_ODD_SQUARE:
                return "2^" + std::to_string(pow2) + "*odd-square";
            case CountStructure::SQUARE_TIMES_SMALL:
                return "square*" + small_multiplier.str();
            case CountStructure::NONE: return "-";
        }
        return "-";
    }
};

// Full factorization: trial division to 10^6, then Pollard rho.
inline FactoredCount factorize(const Int& v) {
    if (v < 1) throw std::invalid_argument("factorize: input must be >= 1");
    FactoredCount fc;
    fc.value = v;
    Int n = v;
    std::map<Int, unsigned> fs;
    for (long p = 2; p < 1000000 && Int(p) * p <= n; p = p == 2 ? 3 : p + 2)
        while (n % p == 0) { ++fs[p]; n /= p; }
    if (n > 1) detail::factor_into(n, fs);
    for (auto& [p, e] : fs) {
        fc.factors.push_back({p, e});
        fc.largest_prime = std::max(fc.largest_prime, p);
    }
    // structure classification
    unsigned k = 0;
    Int odd = v, sqfree = 1;
    for (auto& [p, e] : fc.factors) {
        if (p == 2) k = e;
        if (e % 2) sqfree *= p;
    }
    while (odd % 2 == 0) odd /= 2;
    bool odd_is_square = true;
    for (auto& [p, e] : fc.factors)
        if (p != 2 && e % 2) { odd_is_square = false; break; }
    if (sqfree == 1) fc.structure = CountStructure::SQUARE;
    else if (odd_is_square && k >= 1) {
        fc.structure = CountStructure::POW2_TIMES_ODD_SQUARE;
        fc.pow2 = k;
    } else if (sqfree <= 100) {
        fc.structure = CountStructure::SQUARE_TIMES_SMALL;
        fc.small_multiplier = sqfree;
    } else {
        fc.structure = CountStructure::NONE;
        fc.small_multiplier = sqfree;
    }
    return fc;
}

struct RoundnessReport {
    Int largest_prime;
    Rat prime_over_n;       // largestPrime / n
    std::string structure;
    bool outlier = false;   // prime factor large relative to the family parameter
};

inline RoundnessReport roundness_report(const FactoredCount& fc, long n) {
    RoundnessReport r;
    r.largest_prime = fc.largest_prime;
    r.prime_over_n = n > 0 ? Rat(fc.largest_prime, n) : Rat(0);
    r.structure = fc.structure_str();
    r.outlier = n > 0 && fc.largest_prime > 8 * n;
    return r;
}

}  // namespace dimerlab
