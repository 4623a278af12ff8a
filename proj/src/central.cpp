#include "schroq/central.hpp"

#include "schroq/errors.hpp"

namespace schroq {

PBWElement casimir_sl2() {
    static const PBWElement c =
        parse_expr("F*E + (q*K + q^-1*Kinv)/(q - q^-1)^2");
    return c;
}

PBWElement tilde_C() {
    static const PBWElement ct = [] {
        PBWElement C = casimir_sl2();
        Scalar q = Scalar::q(1);
        PBWElement hpart =
            (Scalar(1) + Scalar::q(-1)) * C +
            (q * q - Scalar(1)).inverse() * PBWElement::gen(Gen::Kinv);
        PBWElement r = PBWElement::gen(Gen::Z) * hpart;
        r += parse_expr("X^2*F - Y^2*E*Kinv");
        r += parse_expr("X*Y") * parse_expr("q^-1*F*E - q*E*F");
        return r;
    }();
    return ct;
}

Scalar c_sl2(const Scalar& lambda) {
    Scalar d = Scalar::q(1) - Scalar::q(-1);
    return (Scalar::q(1) * lambda + Scalar::q(-1) * lambda.inverse()) / (d * d);
}

Scalar hw_eigenvalue(const Weight& lambda, const Scalar& zdot) {
    const Scalar& l = lambda.value();
    Scalar d = Scalar::q(1) - Scalar::q(-1);
    return zdot / (d * d) *
           ((Scalar::q(1) + Scalar::q(2)) * l +
            (Scalar::q(-1) + Scalar::q(-2)) * l.inverse());
}

bool tie_partner(const Weight& lambda, int k) {
    Scalar z = Scalar::z();
    return hw_eigenvalue(lambda, z) == hw_eigenvalue(lambda.q_shifted(-k), z);
}

const char* block_kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::SemisimpleOneSimple: return "SemisimpleOneSimple";
        case BlockKind::TwoSimplesQuiverAB0: return "TwoSimplesQuiverAB0";
        case BlockKind::TwoSimplesSplit: return "TwoSimplesSplit";
    }
    return "?";
}

BlockLabel block_of(const Weight& lambda, const Scalar& zdot) {
    return {lambda, hw_eigenvalue(lambda, zdot), zdot};
}

namespace {

// Search the coset rep * q^Z for a weight attaining the C~ eigenvalue.
std::optional<Weight> realize(const BlockLabel& label) {
    // generous window: tie classes live within a few q-steps of each other
    for (int j = -40; j <= 40; ++j) {
        Weight cand = label.coset_rep.q_shifted(j);
        if (hw_eigenvalue(cand, label.zdot) == label.c_tilde) return cand;
    }
    return std::nullopt;
}

} // namespace

BlockDescriptor classify_block(const BlockLabel& label) {
    if (label.zdot.is_zero())
        throw ZeroCentralCharge("block classification assumes nonzero central charge");
    auto lam = realize(label);
    if (!lam)
        throw UnrealizableCTilde(
            "no weight in the coset attains the given central eigenvalue");

    BlockDescriptor out;
    auto mono = lam->as_t_monomial();
    if (!mono) {
        // generic coset: semisimple, the Verma is simple
        out.kind = BlockKind::SemisimpleOneSimple;
        out.simples.emplace_back(*lam, SimpleKind::Verma);
        return out;
    }
    int s = mono->sign, u = mono->t_exp;
    if (u % 2 != 0) {
        // half family: lambda = s*q^{u/2} with u odd
        if (u == -3) {
            out.kind = BlockKind::SemisimpleOneSimple;
            out.simples.emplace_back(Weight::q_half_power(-3, s), SimpleKind::Verma);
            return out;
        }
        int n = u >= -1 ? (u + 1) / 2 : (-u - 5) / 2;
        out.kind = BlockKind::TwoSimplesQuiverAB0;
        out.simples.emplace_back(Weight::q_half_power(-2 * n - 5, s), SimpleKind::Verma);
        out.simples.emplace_back(Weight::q_half_power(2 * n - 1, s),
                                 SimpleKind::SimpleQuotient);
        return out;
    }
    // integral family: the tie class of s*q^n is {s*q^n, s*q^{-n-3}}
    int n = u >= -3 ? u / 2 : (-u - 6) / 2;
    out.kind = BlockKind::TwoSimplesSplit;
    out.simples.emplace_back(Weight::q_half_power(2 * n, s), SimpleKind::Verma);
    out.simples.emplace_back(Weight::q_half_power(-2 * n - 6, s), SimpleKind::Verma);
    out.warning =
        "partner weight q^{-n-3} follows from the eigenvalue tie law; the "
        "source text lists q^{2n+3}, which does not satisfy it";
    return out;
}

} // namespace schroq
