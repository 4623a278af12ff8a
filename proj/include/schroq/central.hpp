#pragma once

#include "schroq/pbw.hpp"

namespace schroq {

/// Casimir element of the E,F,K subalgebra:
/// C = FE + (qK + q^{-1}K^{-1})/(q - q^{-1})^2.
PBWElement casimir_sl2();

/// Central element of the whole algebra, in PBW normal form:
/// C~ = Z((1+q^{-1})C + K^{-1}/(q^2-1)) + X^2 F - Y^2 E K^{-1}
///      + XY(q^{-1}FE - qEF).
PBWElement tilde_C();

/// Eigenvalue of C on an sl2 highest-weight vector of weight lambda.
Scalar c_sl2(const Scalar& lambda);

/// Eigenvalue of C~ on the highest-weight vector of Delta(lambda, zdot):
/// zdot/(q-q^{-1})^2 ((q+q^2)lambda + (q^{-1}+q^{-2})lambda^{-1}).
Scalar hw_eigenvalue(const Weight& lambda, const Scalar& zdot);

/// Whether C~ takes the same value on lambda and lambda q^{-k} (with a
/// symbolic nonzero central charge); equivalent to lambda^2 = q^{k-3}.
bool tie_partner(const Weight& lambda, int k);

enum class BlockKind { SemisimpleOneSimple, TwoSimplesQuiverAB0, TwoSimplesSplit };
enum class SimpleKind { Verma, SimpleQuotient };

const char* block_kind_name(BlockKind k);

/// A block is labeled by a weight coset (any representative), a C~
/// eigenvalue, and the central charge.
struct BlockLabel {
    Weight coset_rep;
    Scalar c_tilde;
    Scalar zdot;
};

struct BlockDescriptor {
    BlockKind kind;
    std::vector<std::pair<Weight, SimpleKind>> simples;
    std::string warning;  // nonempty when a source discrepancy is surfaced
};

/// Classify the block: which simple objects it has and its quiver shape.
/// Throws UnrealizableCTilde when no weight in the coset attains c_tilde,
/// ZeroCentralCharge when zdot = 0.
BlockDescriptor classify_block(const BlockLabel& label);

/// Convenience: the label of the block containing Delta(lambda, zdot).
BlockLabel block_of(const Weight& lambda, const Scalar& zdot);

} // namespace schroq
