#pragma once

#include "dimerlab/matrix.hpp"
#include "dimerlab/numeric.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimerlab {

// Dense univariate polynomial with big-integer coefficients, coefficient of x^k at [k].
class IntPolynomial {
public:
    IntPolynomial() {}
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial monomial(const Int& coeff, std::size_t deg) {
        std::vector<Int> c(deg + 1);
        c[deg] = coeff;
        return IntPolynomial(std::move(c));
    }

    bool zero() const { return c_.empty(); }
    long degree() const { return (long)c_.size() - 1; }  // -1 for zero polynomial
    Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }

    Int eval(const Int& x) const {
        Int r = 0;
        for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
        return r;
    }

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<Int> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
        return IntPolynomial(std::move(r));
    }
    IntPolynomial operator-(const IntPolynomial& o) const {
        std::vector<Int> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) - o.coeff(k);
        return IntPolynomial(std::move(r));
    }
    IntPolynomial operator*(const IntPolynomial& o) const {
        if (zero() || o.zero()) return {};
        std::vector<Int> r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return IntPolynomial(std::move(r));
    }
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    std::string str(const std::string& var = "t") const {
        if (zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k] == 0) continue;
            Int a = c_[k];
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            first = false;
            Int mag = a < 0 ? -a : a;
            if (mag != 1 || k == 0) os << mag.str();
            if (k > 0) {
                if (mag != 1) os << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

// Dense rational-coefficient polynomial; used by the fitting instruments.
class RatPolynomial {
public:
    RatPolynomial() {}
    explicit RatPolynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    bool zero() const { return c_.empty(); }
    long degree() const { return (long)c_.size() - 1; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
        return r;
    }

    RatPolynomial operator*(const RatPolynomial& o) const {
        if (zero() || o.zero()) return {};
        std::vector<Rat> r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return RatPolynomial(std::move(r));
    }
    RatPolynomial operator+(const RatPolynomial& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
        return RatPolynomial(std::move(r));
    }

    // p(x) -> p(x + s)
    RatPolynomial shift(const Rat& s) const {
        RatPolynomial out, pw(std::vector<Rat>{1});
        RatPolynomial lin(std::vector<Rat>{s, 1});
        for (std::size_t k = 0; k < c_.size(); ++k) {
            RatPolynomial term = pw;
            for (Rat& a : term.c_) a *= c_[k];
            term.trim();
            out = out + term;
            pw = pw * lin;
        }
        return out;
    }

    std::string str(const std::string& var = "x") const {
        if (zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k] == 0) continue;
            Rat a = c_[k];
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            first = false;
            Rat mag = a < 0 ? Rat(-a) : a;
            if (mag != 1 || k == 0) os << rat_str(mag);
            if (k > 0) {
                if (mag != 1) os << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

    bool operator==(const RatPolynomial& o) const { return c_ == o.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// First `count` Taylor coefficients of numerator/denominator.
// Integer output guaranteed when the constant term of the denominator is +-1;
// otherwise the division must stay exact or we throw.
inline std::vector<Rat> series_coefficients_rat(const IntPolynomial& numerator,
                                                const IntPolynomial& denominator,
                                                std::size_t count) {
    if (denominator.coeff(0) == 0)
        throw std::domain_error("series_coefficients: zero constant term in denominator");
    std::vector<Rat> out(count);
    std::vector<Rat> rem(count);
    for (std::size_t k = 0; k < count; ++k) rem[k] = Rat(numerator.coeff(k));
    Rat d0 = Rat(denominator.coeff(0));
    for (std::size_t k = 0; k < count; ++k) {
        Rat a = rem[k] / d0;
        out[k] = a;
        for (std::size_t j = 0; k + j < count; ++j) {
            if (denominator.coeff(j) == 0) continue;
            rem[k + j] -= a * Rat(denominator.coeff(j));
        }
    }
    return out;
}

inline std::vector<Int> series_coefficients(const IntPolynomial& numerator,
                                            const IntPolynomial& denominator,
                                            std::size_t count) {
    auto rs = series_coefficients_rat(numerator, denominator, count);
    std::vector<Int> out;
    out.reserve(rs.size());
    for (const Rat& r : rs) {
        if (den(r) != 1) throw std::domain_error("series_coefficients: non-integer coefficient");
        out.push_back(num(r));
    }
    return out;
}

// Characteristic polynomial of K*K^T by the Faddeev-LeVerrier recurrence.
// All divisions are exact over the integers. Returns det(t*I - K*K^T).
inline IntPolynomial char_poly_gram(const IntMatrix& k) {
    IntMatrix a = k * k.transpose();
    const std::size_t n = a.rows();
    std::vector<Int> c(n + 1);
    c[n] = 1;
    IntMatrix m(n, n);  // M_0 = 0
    for (std::size_t i = 1; i <= n; ++i) {
        // M_i = A*M_{i-1} + c_{n-i+1} I
        IntMatrix am = (i == 1) ? IntMatrix(n, n) : a * m;
        for (std::size_t d = 0; d < n; ++d) am.at(d, d) += c[n - i + 1];
        m = std::move(am);
        IntMatrix prod = a * m;
        Int tr = 0;
        for (std::size_t d = 0; d < n; ++d) tr += prod.at(d, d);
        c[n - i] = -tr / Int(i);
    }
    return IntPolynomial(std::move(c));
}

}  // namespace dimerlab
