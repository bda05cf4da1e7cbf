#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace parab {

// Exact rational scalar, kept in canonical form (lowest terms, positive
// denominator) at every construction point. Thin wrapper over GMP mpq.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(int n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat parse(const std::string& s) {
        mpq_class q;
        if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw std::domain_error("Rat: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rat(q);
    }

    // "p/q", or just "p" when the denominator is 1
    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    Rat pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("Rat: 0^negative");
            return (Rat(1) / *this).pow(-e);
        }
        Rat r(1), b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

private:
    mpq_class v_;
};

inline Rat binom(long n, long k) {
    if (k < 0) return Rat(0);
    mpz_class r(1);
    for (long i = 0; i < k; ++i) r *= (n - i);
    for (long i = 2; i <= k; ++i) r /= i;
    return Rat(mpq_class(r));
}

// binom(z+k choose k) style product for rational z: prod_{i=1..k} (z+i)/i
inline Rat binom_shift(const Rat& z, long k) {
    Rat r(1);
    for (long i = 1; i <= k; ++i) r *= (z + Rat(i)) / Rat(i);
    return r;
}

// Gamma(z+k)/Gamma(z) for integer k via the recurrence Gamma(z+1) = z Gamma(z).
// Every argument touched along the chain must stay positive; anything else is
// an internal consistency failure, not a user error.
inline Rat gamma_ratio(const Rat& z, long k) {
    if (z.sign() <= 0) throw std::domain_error("gamma_ratio: nonpositive argument");
    Rat r(1);
    if (k >= 0) {
        for (long i = 0; i < k; ++i) r *= z + Rat(i);
    } else {
        for (long i = 1; i <= -k; ++i) {
            Rat f = z - Rat(i);
            if (f.sign() <= 0) throw std::domain_error("gamma_ratio: chain crosses a pole");
            r /= f;
        }
    }
    return r;
}

}  // namespace parab
