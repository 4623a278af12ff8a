#pragma once

#include <array>
#include <map>
#include <string>

#include <gmpxx.h>

namespace schroq {

// Variables of the coefficient ring: t (with q = t^2), z (central charge),
// w (generic weight parameter).
inline constexpr int kNumVars = 3;
inline constexpr std::array<const char*, kNumVars> kVarNames = {"t", "z", "w"};

struct Exponents {
    std::array<int, kNumVars> e{0, 0, 0};

    auto operator<=>(const Exponents&) const = default;

    bool is_constant() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }
    int total() const { return e[0] + e[1] + e[2]; }
};

/// Sparse multivariate polynomial in t, z, w over the rationals.
/// Zero coefficients are never stored.
class Poly {
public:
    Poly() = default;
    Poly(long n) { if (n != 0) terms_[Exponents{}] = mpq_class(n); }
    explicit Poly(const mpq_class& c) { if (c != 0) terms_[Exponents{}] = c; }
    Poly(const mpq_class& c, const Exponents& m) { if (c != 0) terms_[m] = c; }

    static Poly var(int idx, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Requires is_constant(); zero polynomial evaluates to 0.
    mpq_class constant_value() const;

    int degree(int var) const;   // -1 for the zero polynomial
    int total_degree() const;    // -1 for the zero polynomial
    size_t num_terms() const { return terms_.size(); }

    const std::map<Exponents, mpq_class>& terms() const { return terms_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    bool operator==(const Poly&) const = default;

    Poly pow(unsigned n) const;

    // Rational c with *this == c * primitive_part(); primitive_part has
    // coprime integer coefficients and positive leading (lex) coefficient.
    // content of zero is 0.
    mpq_class content() const;
    Poly primitive_part() const;

    Poly coeff_of(int var, int deg) const;
    Poly leading_coeff(int var) const { return coeff_of(var, degree(var)); }

    // Exact division; returns false if b does not divide a.
    static bool try_divide(const Poly& a, const Poly& b, Poly& quotient);
    Poly divide_exact(const Poly& b) const;

    // Primitive gcd (content 1, positive leading coefficient).
    static Poly gcd(const Poly& a, const Poly& b);

    mpq_class eval(const std::array<mpq_class, kNumVars>& vals) const;

    std::string str() const;

private:
    std::map<Exponents, mpq_class> terms_;

    void add_term(const Exponents& m, const mpq_class& c);
    friend class Scalar;
};

} // namespace schroq
