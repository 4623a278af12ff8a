#include "schroq/poly.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "schroq/errors.hpp"

namespace schroq {

Poly Poly::var(int idx, int exp) {
    Poly p;
    if (exp == 0) return Poly(1);
    Exponents m;
    m.e[idx] = exp;
    p.terms_[m] = 1;
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_constant();
}

mpq_class Poly::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

int Poly::degree(int var) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.e[var]);
    return d;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
}

void Poly::add_term(const Exponents& m, const mpq_class& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.terms_) {
        for (auto& [mb, cb] : b.terms_) {
            Exponents m;
            for (int i = 0; i < kNumVars; ++i) m.e[i] = ma.e[i] + mb.e[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly r(1);
    Poly base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

mpq_class Poly::content() const {
    if (terms_.empty()) return 0;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& [m, c] : terms_) {
        mpz_class n = c.get_num(), d = c.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpq_class c(num_gcd, den_lcm);
    c.canonicalize();
    // sign from the lex-leading coefficient
    if (terms_.rbegin()->second < 0) c = -c;
    return c;
}

Poly Poly::primitive_part() const {
    if (terms_.empty()) return Poly();
    mpq_class c = content();
    Poly r;
    for (auto& [m, coef] : terms_) r.terms_.emplace(m, mpq_class(coef / c));
    return r;
}

Poly Poly::coeff_of(int var, int deg) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        if (m.e[var] == deg) {
            Exponents m2 = m;
            m2.e[var] = 0;
            r.terms_.emplace(m2, c);
        }
    }
    return r;
}

bool Poly::try_divide(const Poly& a, const Poly& b, Poly& quotient) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly q, r = a;
    const auto& [lm, lc] = *b.terms_.rbegin();
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms_.rbegin();
        Exponents m;
        for (int i = 0; i < kNumVars; ++i) {
            m.e[i] = rm.e[i] - lm.e[i];
            if (m.e[i] < 0) return false;
        }
        mpq_class c = rc / lc;
        Poly t(c, m);
        q += t;
        r -= t * b;
    }
    quotient = std::move(q);
    return true;
}

Poly Poly::divide_exact(const Poly& b) const {
    Poly q;
    if (!try_divide(*this, b, q))
        throw std::logic_error("inexact polynomial division");
    return q;
}

namespace {

// Highest-index variable occurring in p, or -1.
int main_var(const Poly& p) {
    int v = -1;
    for (auto& [m, c] : p.terms())
        for (int i = kNumVars - 1; i > v; --i)
            if (m.e[i] > 0) v = i;
    return v;
}

// gcd of the coefficients of p viewed as univariate in x.
Poly poly_content(const Poly& p, int x) {
    Poly g;
    int d = p.degree(x);
    for (int j = 0; j <= d; ++j) {
        Poly c = p.coeff_of(x, j);
        if (!c.is_zero()) g = Poly::gcd(g, c);
        if (g.is_constant() && !g.is_zero()) return Poly(1);
    }
    return g;
}

// Exact pseudo-remainder lc(b)^{delta+1} * a mod b in variable x.
Poly pseudo_rem(Poly a, const Poly& b, int x) {
    int db = b.degree(x);
    int delta = a.degree(x) - db;
    Poly lb = b.leading_coeff(x);
    int muls = 0;
    while (!a.is_zero() && a.degree(x) >= db) {
        int da = a.degree(x);
        Poly la = a.leading_coeff(x);
        Poly shift = Poly::var(x, da - db);
        a = lb * a - la * shift * b;
        ++muls;
    }
    for (int i = muls; i < delta + 1; ++i) a = lb * a;
    return a;
}

// Common monomial factor of all terms of p.
Exponents monomial_content(const Poly& p) {
    Exponents m = p.terms().begin()->first;
    for (auto& [mm, c] : p.terms())
        for (int i = 0; i < kNumVars; ++i) m.e[i] = std::min(m.e[i], mm.e[i]);
    return m;
}

// Univariate image in x of p at a point for the other variables, or nullopt
// if the leading coefficient in x vanishes there.
std::optional<std::vector<mpq_class>> univariate_image(
    const Poly& p, int x, const std::array<mpq_class, kNumVars>& pt) {
    int d = p.degree(x);
    std::vector<mpq_class> img(static_cast<size_t>(d) + 1, 0);
    for (auto& [m, c] : p.terms()) {
        mpq_class v = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (i == x) continue;
            for (int j = 0; j < m.e[i]; ++j) v *= pt[i];
        }
        img[static_cast<size_t>(m.e[x])] += v;
    }
    if (img.back() == 0) return std::nullopt;
    return img;
}

int univariate_gcd_degree(std::vector<mpq_class> a, std::vector<mpq_class> b) {
    auto trim = [](std::vector<mpq_class>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size()) {
            mpq_class f = a.back() / b.back();
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// Certifies gcd(p, q) is free of x: if at a point where both leading
// coefficients survive the univariate images are coprime, any common factor
// with positive x-degree would map to a positive-degree common factor.
bool coprime_in_var_by_evaluation(const Poly& p, const Poly& q, int x) {
    static const std::array<std::array<long, 3>, 4> points = {{
        {2, 3, 5}, {3, -2, 7}, {-5, 4, 3}, {7, 11, -2}}};
    for (auto& raw : points) {
        std::array<mpq_class, kNumVars> pt = {mpq_class(raw[0]), mpq_class(raw[1]),
                                              mpq_class(raw[2])};
        auto ip = univariate_image(p, x, pt);
        auto iq = univariate_image(q, x, pt);
        if (!ip || !iq) continue;
        return univariate_gcd_degree(*ip, *iq) == 0;
    }
    return false;  // inconclusive
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? Poly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    Poly pa = a.primitive_part(), pb = b.primitive_part();
    if (pa == pb) return pa;

    // split off common monomial factor
    Exponents ma = monomial_content(pa), mb = monomial_content(pb), mg;
    for (int i = 0; i < kNumVars; ++i) mg.e[i] = std::min(ma.e[i], mb.e[i]);
    if (!ma.is_constant()) pa = pa.divide_exact(Poly(1, ma));
    if (!mb.is_constant()) pb = pb.divide_exact(Poly(1, mb));
    Poly mono(1, mg);

    int x = std::max(main_var(pa), main_var(pb));
    if (x < 0) return mono;
    if (pa.is_constant() || pb.is_constant()) return mono;

    Poly ca = poly_content(pa, x), cb = poly_content(pb, x);
    Poly cg = gcd(ca, cb) * mono;
    Poly p = pa.divide_exact(ca), q = pb.divide_exact(cb);
    if (p.degree(x) < q.degree(x)) std::swap(p, q);
    if (q.degree(x) == 0) return cg;

    if (coprime_in_var_by_evaluation(p, q, x)) return cg;

    Poly tmp;
    if (try_divide(p, q, tmp)) return (cg * q).primitive_part();

    // subresultant PRS
    Poly g(1), h(1);
    while (true) {
        int delta = p.degree(x) - q.degree(x);
        Poly r = pseudo_rem(p, q, x);
        if (r.is_zero()) break;
        if (r.degree(x) == 0) return cg;  // coprime in x
        p = q;
        Poly divisor = g * h.pow(static_cast<unsigned>(delta));
        q = r.divide_exact(divisor);
        g = p.leading_coeff(x);
        if (delta > 0)
            h = g.pow(static_cast<unsigned>(delta))
                    .divide_exact(h.pow(static_cast<unsigned>(delta - 1)));
    }
    return (cg * q.divide_exact(poly_content(q, x))).primitive_part();
}

mpq_class Poly::eval(const std::array<mpq_class, kNumVars>& vals) const {
    mpq_class total = 0;
    for (auto& [m, c] : terms_) {
        mpq_class term = c;
        for (int i = 0; i < kNumVars; ++i) {
            for (int j = 0; j < m.e[i]; ++j) term *= vals[i];
        }
        total += term;
    }
    return total;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // descending lex order for a stable, human-friendly form
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        mpq_class ac = c < 0 ? mpq_class(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (ac != 1 || m.is_constant()) {
            out << ac.get_str();
            printed = true;
        }
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            if (printed) out << "*";
            int e = m.e[i];
            // even powers of t are powers of q
            if (i == 0 && e % 2 == 0) {
                out << "q";
                e /= 2;
            } else {
                out << kVarNames[i];
            }
            if (e != 1) out << "^" << e;
            printed = true;
        }
    }
    return out.str();
}

} // namespace schroq
