#pragma once

#include <optional>
#include <string>

#include "schroq/poly.hpp"

namespace schroq {

/// Element of the fraction field Q(t, z, w), with q = t^2.
///
/// Canonical form: gcd(num, den) = 1 and den primitive with positive
/// leading coefficient, so operator== is syntactic equality.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long n) : num_(n), den_(1) {}
    Scalar(const mpq_class& c) : num_(c), den_(1) {}
    Scalar(Poly num, Poly den);

    static Scalar t(int k = 1);  // t^k, k may be negative
    static Scalar q(int k = 1);  // q^k = t^{2k}
    static Scalar z();
    static Scalar w();

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly(1) && den_ == Poly(1); }
    bool operator==(const Scalar&) const = default;

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(int n) const;

    // Rough size measure for pivot selection.
    int complexity() const;

    /// If *this is sign * t^m (unit coefficient), return {sign, m}.
    struct Monomial { int sign; int t_exp; };
    std::optional<Monomial> as_t_monomial() const;
    /// If *this is sign * w * t^m, return {sign, m}.
    std::optional<Monomial> as_w_monomial() const;

    // Exact evaluation at t = t0, z = z0, w = w0.
    mpq_class eval_t(const mpq_class& t0, const mpq_class& z0,
                     const mpq_class& w0) const;
    // Evaluation at q = q0 (demands a rational square root for t).
    mpq_class eval(const mpq_class& q0, const mpq_class& z0,
                   const mpq_class& w0) const;

    std::string str() const;
    static Scalar parse(const std::string& text);

private:
    Poly num_, den_;
    void normalize();
};

/// Quantum integer [n] = (q^n - q^{-n}) / (q - q^{-1}).
Scalar qint(long n);

/// Nonzero element of the coefficient field used as a K-eigenvalue.
class Weight {
public:
    explicit Weight(Scalar v);
    static Weight generic();           // the formal weight w
    static Weight q_half_power(int m, int sign = 1);  // sign * q^{m/2} = sign * t^m

    const Scalar& value() const { return value_; }
    bool operator==(const Weight&) const = default;

    Weight shifted(int half_steps) const;  // multiply by t^{half_steps}
    Weight q_shifted(int steps) const { return shifted(2 * steps); }

    // sign * t^m family, i.e. sign * q^{m/2}
    std::optional<Scalar::Monomial> as_t_monomial() const { return value_.as_t_monomial(); }
    // sign * w * t^m family (generic weight, possibly shifted)
    std::optional<Scalar::Monomial> as_w_monomial() const { return value_.as_w_monomial(); }

    std::string str() const { return value_.str(); }

private:
    Scalar value_;
};

} // namespace schroq
