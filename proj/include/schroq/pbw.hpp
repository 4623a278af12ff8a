#pragma once

#include <map>
#include <string>
#include <vector>

#include "schroq/scalar.hpp"

namespace schroq {

enum class Gen { Y, F, K, Kinv, Z, X, E };

inline constexpr std::array<Gen, 7> kAllGens = {Gen::Y, Gen::F, Gen::K, Gen::Kinv,
                                                Gen::Z, Gen::X, Gen::E};

const char* gen_name(Gen g);

/// Depth shift of a generator: the K-eigenvalue of g.v is q^{deg} times that
/// of v, and g maps depth n to n - deg.
int gen_deg(Gen g);

/// Exponents of an ordered monomial Y^y F^f K^k Z^z X^x E^e.
/// All exponents are nonnegative except k, which is signed.
struct PBWExp {
    int y = 0, f = 0, k = 0, z = 0, x = 0, e = 0;
    auto operator<=>(const PBWExp&) const = default;
    bool is_unit() const { return y == 0 && f == 0 && k == 0 && z == 0 && x == 0 && e == 0; }
    int depth_shift() const { return -y - 2 * f + x + 2 * e; }
    std::string str() const;
};

/// Element of U_q(s) in PBW normal form: a finite Scalar-linear combination
/// of ordered monomials. Zero coefficients are never stored.
class PBWElement {
public:
    PBWElement() = default;
    PBWElement(const Scalar& c) { if (!c.is_zero()) terms_[PBWExp{}] = c; }
    PBWElement(const Scalar& c, const PBWExp& m) { if (!c.is_zero()) terms_[m] = c; }
    static PBWElement one() { return PBWElement(Scalar(1)); }
    static PBWElement gen(Gen g);

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    Scalar scalar_part() const;  // coefficient of the unit monomial
    const std::map<PBWExp, Scalar>& terms() const { return terms_; }

    bool operator==(const PBWElement&) const = default;
    PBWElement operator-() const;
    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { a += b; return a; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { a -= b; return a; }
    friend PBWElement operator*(const PBWElement& a, const PBWElement& b);
    friend PBWElement operator*(const Scalar& c, const PBWElement& a);

    std::string str() const;

private:
    std::map<PBWExp, Scalar> terms_;
    void add_term(const PBWExp& m, const Scalar& c);
    friend PBWElement lmul_gen(Gen g, const PBWElement& a);
};

/// Left-multiply by a single generator, rewriting back to normal form via
/// the defining relations.
PBWElement lmul_gen(Gen g, const PBWElement& a);

/// Normal form of a free word in the generators.
PBWElement normal_form(const std::vector<Gen>& word);

PBWElement multiply(const PBWElement& a, const PBWElement& b);

/// Commutator ab - ba.
PBWElement commutator(const PBWElement& a, const PBWElement& b);

/// Expression grammar: generators E F K Kinv X Y Z, scalar literals,
/// ^ integer powers (negative only on K and scalars), * + -, parentheses.
PBWElement parse_expr(const std::string& text);

/// One defining relation, stated as lhs = rhs with both sides free
/// expressions (so module actions can evaluate each side independently).
struct Relation {
    std::string name;
    // sum of coeff * word
    std::vector<std::pair<Scalar, std::vector<Gen>>> lhs, rhs;
};

/// The ten defining relations plus K Kinv = 1 and centrality of Z.
const std::vector<Relation>& defining_relations();

} // namespace schroq
