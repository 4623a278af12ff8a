#include "schroq/scalar.hpp"

#include <cctype>
#include <sstream>

#include "schroq/errors.hpp"

namespace schroq {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!(g == Poly(1))) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    mpq_class c = den_.content();
    if (c != 1) {
        Poly inv(mpq_class(1 / c));
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Scalar Scalar::t(int k) {
    if (k >= 0) return Scalar(Poly::var(0, k), Poly(1));
    return Scalar(Poly(1), Poly::var(0, -k));
}

Scalar Scalar::q(int k) { return t(2 * k); }
Scalar Scalar::z() { return Scalar(Poly::var(1), Poly(1)); }
Scalar Scalar::w() { return Scalar(Poly::var(2), Poly(1)); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Poly g = Poly::gcd(a.den_, b.den_);
    Poly da = a.den_.divide_exact(g), db = b.den_.divide_exact(g);
    return Scalar(a.num_ * db + b.num_ * da, a.den_ * db);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    Poly g1 = Poly::gcd(a.num_, b.den_);
    Poly g2 = Poly::gcd(b.num_, a.den_);
    return Scalar(a.num_.divide_exact(g1) * b.num_.divide_exact(g2),
                  a.den_.divide_exact(g2) * b.den_.divide_exact(g1));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero("scalar division by zero");
    return a * b.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar r(1), base = *this;
    unsigned k = static_cast<unsigned>(n);
    while (k) {
        if (k & 1) r *= base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

int Scalar::complexity() const {
    return static_cast<int>(num_.num_terms() + den_.num_terms()) +
           std::max(num_.total_degree(), 0) + std::max(den_.total_degree(), 0);
}

std::optional<Scalar::Monomial> Scalar::as_t_monomial() const {
    if (num_.num_terms() != 1 || den_.num_terms() != 1) return std::nullopt;
    auto& [mn, cn] = *num_.terms().begin();
    auto& [md, cd] = *den_.terms().begin();
    if (mn.e[1] != 0 || mn.e[2] != 0 || md.e[1] != 0 || md.e[2] != 0)
        return std::nullopt;
    mpq_class c = cn / cd;
    if (c != 1 && c != -1) return std::nullopt;
    return Monomial{c == 1 ? 1 : -1, mn.e[0] - md.e[0]};
}

std::optional<Scalar::Monomial> Scalar::as_w_monomial() const {
    Scalar r = *this / Scalar::w();
    return r.as_t_monomial();
}

mpq_class Scalar::eval_t(const mpq_class& t0, const mpq_class& z0,
                         const mpq_class& w0) const {
    std::array<mpq_class, kNumVars> vals = {t0, z0, w0};
    mpq_class d = den_.eval(vals);
    if (d == 0) throw DenominatorVanishes("denominator vanishes at evaluation point");
    return num_.eval(vals) / d;
}

namespace {

mpq_class rational_sqrt(const mpq_class& x) {
    if (x < 0) throw NonRationalRoot("negative q has no rational square root");
    mpz_class n = x.get_num(), d = x.get_den(), sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    if (sn * sn != n || sd * sd != d)
        throw NonRationalRoot("q is not a rational square");
    return mpq_class(sn, sd);
}

} // namespace

mpq_class Scalar::eval(const mpq_class& q0, const mpq_class& z0,
                       const mpq_class& w0) const {
    return eval_t(rational_sqrt(q0), z0, w0);
}

std::string Scalar::str() const {
    if (den_ == Poly(1)) {
        if (num_.num_terms() <= 1) return num_.str();
        return "(" + num_.str() + ")";
    }
    auto factor_count = [](const Poly& p) {
        // number of '*'-joined factors when printed as a single term
        auto& [m, c] = *p.terms().begin();
        int k = (c != 1 && c != -1) || m.is_constant() ? 1 : 0;
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i] != 0) ++k;
        return k;
    };
    std::string n = num_.num_terms() == 1 ? num_.str() : "(" + num_.str() + ")";
    std::string d = den_.num_terms() == 1 && factor_count(den_) == 1
                        ? den_.str()
                        : "(" + den_.str() + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------------------
// parser: integers, t, q, z, w, + - * / ^, parentheses

namespace {

class ScalarParser {
public:
    explicit ScalarParser(const std::string& text) : s_(text) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return v;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Scalar expr() {
        Scalar v = eat('-') ? -term() : term();
        while (true) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        while (true) {
            if (eat('*')) v *= factor();
            else if (eat('/')) {
                Scalar d = factor();
                if (d.is_zero()) throw SyntaxError("division by zero", pos_);
                v /= d;
            } else return v;
        }
    }

    Scalar factor() {
        if (eat('-')) return -factor();
        Scalar base = atom();
        if (eat('^')) {
            auto [num, den] = exponent();
            if (den == 1) return base.pow(num);
            // fractional powers are only meaningful on pure powers of t
            auto mono = base.as_t_monomial();
            size_t here = pos_;
            if (!mono || mono->sign != 1 || (mono->t_exp * num) % den != 0)
                throw SyntaxError("fractional exponent requires a power of q", here);
            return Scalar::t(mono->t_exp * num / den);
        }
        return base;
    }

    // integer or small fraction like (-1/2)
    std::pair<int, int> exponent() {
        skip_ws();
        bool paren = eat('(');
        int num = raw_int();
        int den = 1;
        if (paren && eat('/')) den = raw_int();
        if (den <= 0) throw SyntaxError("bad exponent denominator", pos_);
        if (paren && !eat(')')) throw SyntaxError("expected ')'", pos_);
        return {num, den};
    }

    int raw_int() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        size_t start = pos_;
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        if (pos_ == start) throw SyntaxError("expected integer", pos_);
        return static_cast<int>(neg ? -v : v);
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = v * 10 + (s_[pos_++] - '0');
            return Scalar(mpq_class(v));
        }
        ++pos_;
        switch (c) {
            case 't': return Scalar::t();
            case 'q': return Scalar::q();
            case 'z': return Scalar::z();
            case 'w': return Scalar::w();
            default: throw SyntaxError(std::string("unexpected character '") + c + "'", pos_ - 1);
        }
    }
};

} // namespace

Scalar Scalar::parse(const std::string& text) {
    return ScalarParser(text).parse();
}

Scalar qint(long n) {
    return (Scalar::q(static_cast<int>(n)) - Scalar::q(static_cast<int>(-n))) /
           (Scalar::q(1) - Scalar::q(-1));
}

// ---------------------------------------------------------------------------

Weight::Weight(Scalar v) : value_(std::move(v)) {
    if (value_.is_zero()) throw InvalidWeight("weight must be nonzero");
}

Weight Weight::generic() { return Weight(Scalar::w()); }

Weight Weight::q_half_power(int m, int sign) {
    Scalar v = Scalar::t(m);
    return Weight(sign < 0 ? -v : v);
}

Weight Weight::shifted(int half_steps) const {
    return Weight(value_ * Scalar::t(half_steps));
}

} // namespace schroq
