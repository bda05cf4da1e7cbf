#include "parab/gpoly.hpp"

#include <cmath>
#include <sstream>

namespace parab {

double GPoly::eval(const std::vector<double>& x, double t) const {
    if ((int)x.size() != dim_) throw std::invalid_argument("GPoly::eval: point size mismatch");
    if (t <= 0.0) {
        for (const auto& [m, c] : terms_) {
            (void)c;
            if (m.j2 < 0 || m.j2 % 2 != 0)
                throw std::domain_error("GPoly::eval: t must be positive for fractional or negative t-powers");
        }
    }
    double s = 0.0;
    for (const auto& [m, c] : terms_) {
        double v = c.to_double();
        for (int i = 0; i < dim_; ++i)
            for (int e = 0; e < m.a[i]; ++e) v *= x[i];
        if (m.j2 != 0) v *= std::pow(t, 0.5 * m.j2);
        s += v;
    }
    return s;
}

std::string GPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int i = 0; i < dim_; ++i) {
            if (m.a[i] == 0) continue;
            os << " * x" << (i + 1);
            if (m.a[i] > 1) os << "^" << m.a[i];
        }
        if (m.j2 != 0) {
            os << " * t";
            if (m.j2 != 2) os << "^" << HalfExp(m.j2).str();
        }
    }
    return os.str();
}

namespace {

// token forms: "t", "t^3", "t^-1", "t^1/2", "t^-3/2", "x12", "x12^4"
void parse_factor(const std::string& tok, Mono& m, int dim) {
    if (tok.empty()) throw std::invalid_argument("GPoly::parse: empty factor");
    auto parse_int = [](const std::string& s) {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("GPoly::parse: bad integer '" + s + "'");
        return v;
    };
    if (tok[0] == 't') {
        int j2 = 2;
        if (tok.size() > 1) {
            if (tok[1] != '^') throw std::invalid_argument("GPoly::parse: bad factor '" + tok + "'");
            std::string e = tok.substr(2);
            auto slash = e.find('/');
            if (slash == std::string::npos) {
                j2 = 2 * parse_int(e);
            } else {
                if (e.substr(slash + 1) != "2")
                    throw std::invalid_argument("GPoly::parse: t-exponent denominator must be 2");
                j2 = parse_int(e.substr(0, slash));
                if (j2 % 2 == 0)
                    throw std::invalid_argument("GPoly::parse: non-canonical half exponent");
            }
        }
        m.j2 += j2;
        return;
    }
    if (tok[0] == 'x') {
        auto caret = tok.find('^');
        std::string idx = caret == std::string::npos ? tok.substr(1) : tok.substr(1, caret - 1);
        int i = parse_int(idx);
        if (i < 1 || i > dim) throw std::invalid_argument("GPoly::parse: variable x" + idx + " out of range");
        int e = 1;
        if (caret != std::string::npos) e = parse_int(tok.substr(caret + 1));
        if (e < 1) throw std::invalid_argument("GPoly::parse: bad exponent in '" + tok + "'");
        m.a[i - 1] += e;
        return;
    }
    throw std::invalid_argument("GPoly::parse: bad factor '" + tok + "'");
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        auto nxt = s.find(sep, pos);
        if (nxt == std::string::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, nxt - pos));
        pos = nxt + sep.size();
    }
}

}  // namespace

GPoly GPoly::parse(const std::string& s, int dim) {
    GPoly p(dim);
    if (s == "0") return p;
    for (const std::string& term : split(s, " + ")) {
        auto factors = split(term, " * ");
        if (factors.empty()) throw std::invalid_argument("GPoly::parse: empty term");
        Rat c = Rat::parse(factors[0]);
        Mono m{std::vector<int>(dim, 0), 0};
        for (std::size_t i = 1; i < factors.size(); ++i) parse_factor(factors[i], m, dim);
        p.add_term(m, c);
    }
    return p;
}

GPoly parabolic_lift(const GPoly& p, int m) {
    if (m < 0) throw std::invalid_argument("parabolic_lift: negative degree");
    GPoly r(p.dim());
    for (const auto& [mo, c] : p.terms()) {
        if (mo.j2 != 0) throw std::invalid_argument("parabolic_lift: input must be a polynomial in x alone");
        int b = mo.degx();
        if (b > m || (m - b) % 2 != 0)
            throw std::invalid_argument("parabolic_lift: monomial degree " + std::to_string(b) +
                                        " incompatible with m=" + std::to_string(m));
        Mono n = mo;
        n.j2 = m - b;  // t^{(m-b)/2}
        r.add_term(n, c);
    }
    return r;
}

}  // namespace parab
