#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "parab/rational.hpp"

namespace parab {

// t-exponents live in (1/2)Z, stored as the numerator over denominator 2.
// The module-wide floor: no term may have t-exponent below -2.
constexpr int kTFloor2 = -4;

struct texp_underflow : std::domain_error {
    explicit texp_underflow(const std::string& m) : std::domain_error(m) {}
};

inline int ceil_half(int j2) { return (j2 % 2 == 0) ? j2 / 2 : (j2 + 1) / 2; }

// Exponent in (1/2)Z.
struct HalfExp {
    int j2 = 0;
    HalfExp() = default;
    explicit HalfExp(int numerator_over_2) : j2(numerator_over_2) {}
    static HalfExp whole(int j) { return HalfExp(2 * j); }
    bool is_integer() const { return j2 % 2 == 0; }
    int ceil() const { return ceil_half(j2); }
    std::string str() const {
        if (is_integer()) return std::to_string(j2 / 2);
        return std::to_string(j2) + "/2";
    }
    friend bool operator==(HalfExp a, HalfExp b) { return a.j2 == b.j2; }
    friend bool operator<(HalfExp a, HalfExp b) { return a.j2 < b.j2; }
};

struct Mono {
    std::vector<int> a;  // x exponents, size dim
    int j2 = 0;          // t exponent (over 2)

    int degx() const {
        int s = 0;
        for (int e : a) s += e;
        return s;
    }
    // graded: |alpha| + ceil(j)
    int grade() const { return degx() + ceil_half(j2); }
    friend bool operator==(const Mono& x, const Mono& y) { return x.j2 == y.j2 && x.a == y.a; }
};

// graded lexicographic on (|alpha|+ceil(j), alpha, j)
struct MonoLess {
    bool operator()(const Mono& x, const Mono& y) const {
        int gx = x.grade(), gy = y.grade();
        if (gx != gy) return gx < gy;
        if (x.a != y.a) return x.a < y.a;
        return x.j2 < y.j2;
    }
};

// Sparse polynomial in x1..xd and t, coefficients exact rationals,
// t-exponents in (1/2)Z bounded below by -2. No zero coefficients stored.
class GPoly {
public:
    explicit GPoly(int dim) : dim_(dim) {
        if (dim < 1) throw std::invalid_argument("GPoly: dim must be >= 1");
    }

    static GPoly constant(int dim, const Rat& c) {
        GPoly p(dim);
        p.add_term(Mono{std::vector<int>(dim, 0), 0}, c);
        return p;
    }
    static GPoly var(int dim, int i) {  // x_{i+1}, 0-based index
        GPoly p(dim);
        std::vector<int> a(dim, 0);
        a.at(i) = 1;
        p.add_term(Mono{a, 0}, Rat(1));
        return p;
    }
    static GPoly tpow(int dim, int j2) {
        GPoly p(dim);
        p.add_term(Mono{std::vector<int>(dim, 0), j2}, Rat(1));
        return p;
    }
    static GPoly monomial(int dim, std::vector<int> a, int j2, const Rat& c) {
        if ((int)a.size() != dim) throw std::invalid_argument("GPoly: alpha size mismatch");
        GPoly p(dim);
        p.add_term(Mono{std::move(a), j2}, c);
        return p;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Rat, MonoLess>& terms() const { return terms_; }

    Rat coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Mono& m, const Rat& c) {
        if ((int)m.a.size() != dim_) throw std::invalid_argument("GPoly: alpha size mismatch");
        for (int e : m.a)
            if (e < 0) throw std::invalid_argument("GPoly: negative x exponent");
        if (m.j2 < kTFloor2)
            throw texp_underflow("GPoly: t-exponent " + HalfExp(m.j2).str() + " below floor -2");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GPoly& operator+=(const GPoly& o) {
        check_dim(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    GPoly& operator-=(const GPoly& o) {
        check_dim(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend GPoly operator+(GPoly a, const GPoly& b) { a += b; return a; }
    friend GPoly operator-(GPoly a, const GPoly& b) { a -= b; return a; }

    friend GPoly operator*(const GPoly& a, const GPoly& b) {
        a.check_dim(b);
        GPoly r(a.dim_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m;
                m.a.resize(a.dim_);
                for (int i = 0; i < a.dim_; ++i) m.a[i] = ma.a[i] + mb.a[i];
                m.j2 = ma.j2 + mb.j2;
                r.add_term(m, ca * cb);
            }
        return r;
    }

    GPoly scaled(const Rat& c) const {
        GPoly r(dim_);
        if (c.is_zero()) return r;
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
        return r;
    }
    GPoly operator-() const { return scaled(Rat(-1)); }

    friend bool operator==(const GPoly& a, const GPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    // d/dx_i
    GPoly diff_x(int i) const {
        GPoly r(dim_);
        for (const auto& [m, c] : terms_) {
            if (m.a[i] == 0) continue;
            Mono n = m;
            n.a[i] -= 1;
            r.add_term(n, c * Rat(m.a[i]));
        }
        return r;
    }

    // d/dt with the power rule on half-integer exponents
    GPoly diff_t() const {
        GPoly r(dim_);
        for (const auto& [m, c] : terms_) {
            if (m.j2 == 0) continue;
            Mono n = m;
            n.j2 -= 2;
            r.add_term(n, c * Rat(m.j2, 2));
        }
        return r;
    }

    // <x, grad>: scales each term by |alpha|
    GPoly euler() const {
        GPoly r(dim_);
        for (const auto& [m, c] : terms_) r.add_term(m, c * Rat(m.degx()));
        return r;
    }

    // D_{i,j} = x_i d_j - x_j d_i
    GPoly angular(int i, int j) const {
        return GPoly::var(dim_, i) * diff_x(j) - GPoly::var(dim_, j) * diff_x(i);
    }

    GPoly laplace_x() const {
        GPoly r(dim_);
        for (const auto& [m, c] : terms_)
            for (int i = 0; i < dim_; ++i) {
                if (m.a[i] < 2) continue;
                Mono n = m;
                n.a[i] -= 2;
                r.add_term(n, c * Rat((long)m.a[i] * (m.a[i] - 1)));
            }
        return r;
    }

    GPoly mul_tpow(int j2) const {
        GPoly r(dim_);
        for (const auto& [m, c] : terms_) {
            Mono n = m;
            n.j2 += j2;
            r.add_term(n, c);
        }
        return r;
    }

    // x^a t^j -> x^a t^{j+|a|/2}; substitution x = sqrt(t) y with the result
    // read as a polynomial in (y, t)
    GPoly subst_sqrt_t() const {
        GPoly r(dim_);
        for (const auto& [m, c] : terms_) {
            Mono n = m;
            n.j2 += m.degx();
            r.add_term(n, c);
        }
        return r;
    }

    GPoly embed(int newdim) const {
        if (newdim < dim_) throw std::invalid_argument("GPoly: embed into smaller dim");
        GPoly r(newdim);
        for (const auto& [m, c] : terms_) {
            Mono n = m;
            n.a.resize(newdim, 0);
            r.add_term(n, c);
        }
        return r;
    }

    int max_grade() const {
        int g = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            g = first ? m.grade() : std::max(g, m.grade());
            first = false;
        }
        return g;
    }
    int min_j2() const {
        int j = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            (void)c;
            j = first ? m.j2 : std::min(j, m.j2);
            first = false;
        }
        return j;
    }
    bool is_x_only() const {
        for (const auto& [m, c] : terms_) {
            (void)c;
            if (m.j2 != 0) return false;
        }
        return true;
    }

    double eval(const std::vector<double>& x, double t) const;

    std::string str() const;
    static GPoly parse(const std::string& s, int dim);

private:
    void check_dim(const GPoly& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("GPoly: dimension mismatch");
    }
    int dim_;
    std::map<Mono, Rat, MonoLess> terms_;
};

// P(x) -> t^{m/2} P(x / sqrt t) for P with every monomial of total degree <= m
// and congruent to m mod 2; the image is again a polynomial.
GPoly parabolic_lift(const GPoly& p, int m);

}  // namespace parab
