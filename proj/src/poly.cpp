#include "ydn/poly.hpp"

#include <sstream>

namespace ydn {

Monomial Monomial::merged(const Monomial& other) const {
    Monomial out;
    out.u_exp = u_exp + other.u_exp;
    out.z_exp = z_exp + other.z_exp;
    out.x_exps = x_exps;
    for (const auto& [k, e] : other.x_exps) {
        int ne = (out.x_exps[k] += e);
        if (ne == 0) out.x_exps.erase(k);
    }
    return out;
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::u_power(int e) {
    Monomial m;
    m.u_exp = e;
    return term(m, 1);
}

Poly Poly::z_var() {
    Monomial m;
    m.z_exp = 1;
    return term(m, 1);
}

Poly Poly::x_var(int k, int e) {
    if (k < 0) throw IndexError("x-variable index must be nonnegative");
    Monomial m;
    if (k > 0 && e != 0) m.x_exps[k] = e;   // x_0 == 1
    return term(m, 1);
}

Poly Poly::term(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Poly operator-(const Poly& a) {
    Poly out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma.merged(mb), ca * cb);
    return out;
}

Poly& Poly::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, q] : terms_) q *= c;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly out{Rational(1)};
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) out *= base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

Poly Poly::remap_x(const std::function<int(int)>& f) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        Monomial nm;
        nm.u_exp = m.u_exp;
        nm.z_exp = m.z_exp;
        for (const auto& [k, e] : m.x_exps) {
            int nk = f(k);
            if (nk < 0) throw IndexError("x-remap produced a negative index");
            if (nk == 0) continue;   // x_0 = 1
            int ne = (nm.x_exps[nk] += e);
            if (ne == 0) nm.x_exps.erase(nk);
        }
        out.add_term(nm, c);
    }
    return out;
}

namespace {

ComplexVal int_pow(ComplexVal base, int e) {
    if (e == 0) return {1.0, 0.0};
    bool neg = e < 0;
    unsigned k = neg ? static_cast<unsigned>(-(long long)e) : static_cast<unsigned>(e);
    ComplexVal acc{1.0, 0.0};
    ComplexVal b = base;
    while (k > 0) {
        if (k & 1u) acc *= b;
        b *= b;
        k >>= 1u;
    }
    return neg ? ComplexVal{1.0, 0.0} / acc : acc;
}

} // namespace

ComplexVal Poly::eval(ComplexVal u, ComplexVal z,
                      const std::vector<ComplexVal>& x) const {
    ComplexVal sum{0.0, 0.0};
    for (const auto& [m, c] : terms_) {
        if (m.u_exp < 0 && u == ComplexVal{0.0, 0.0})
            throw DivisionByZero("negative power of u evaluated at u = 0");
        ComplexVal v = int_pow(u, m.u_exp) * int_pow(z, m.z_exp);
        for (const auto& [k, e] : m.x_exps) {
            if (k >= static_cast<int>(x.size()))
                throw IndexError("no value supplied for x_" + std::to_string(k));
            v *= int_pow(x[static_cast<std::size_t>(k)], e);
        }
        sum += v * to_double(c);
    }
    return sum;
}

int Poly::max_x_index() const {
    int mx = 0;
    for (const auto& [m, c] : terms_)
        if (!m.x_exps.empty()) mx = std::max(mx, m.x_exps.rbegin()->first);
    return mx;
}

namespace {

void append_var(std::ostringstream& os, bool& first, const std::string& name, int e) {
    if (e == 0) return;
    if (!first) os << " ";
    first = false;
    os << name;
    if (e != 1) os << "^" << e;
}

} // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (lead) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        lead = false;
        bool unit_monomial = m.u_exp == 0 && m.z_exp == 0 && m.x_exps.empty();
        bool printed_coeff = false;
        if (a != 1 || unit_monomial) {
            os << rational_to_string(a);
            printed_coeff = true;
        }
        std::ostringstream vars;
        bool first = true;
        append_var(vars, first, "u", m.u_exp);
        append_var(vars, first, "z", m.z_exp);
        for (const auto& [k, e] : m.x_exps)
            append_var(vars, first, "x" + std::to_string(k), e);
        std::string v = vars.str();
        if (!v.empty()) {
            if (printed_coeff) os << " ";
            os << v;
        }
    }
    return os.str();
}

} // namespace ydn
