#pragma once

#include "schroq/wmod.hpp"

namespace schroq {

/// The two comultiplications in play: the one for the full algebra
/// (E -> 1(x)E + E(x)K, F -> Kinv(x)F + F(x)1, K -> K(x)K, X -> 1(x)X,
/// Y -> 1(x)Y, Z -> 1(x)Z) and the sl2 one used for finite-dimensional
/// tensor products (E -> E(x)1 + K(x)E, F -> F(x)Kinv + 1(x)F, K -> K(x)K,
/// with X, Y, Z acting as zero).
enum class DeltaVariant { Schrodinger, Sl2Prime };

/// A pure tensor of generators (nullopt = identity factor).
using TensorTerm = std::pair<std::optional<Gen>, std::optional<Gen>>;

const std::map<Gen, std::vector<TensorTerm>>& delta_table(DeltaVariant v);

/// Graded tensor product a (x) b under the chosen comultiplication. The
/// result is truncated at min of the input truncations minus 2, so every
/// component action it needs is available. Basis at depth m: blocks
/// (a-depth, b-depth = m - a-depth) in increasing a-depth, row-major within
/// a block.
GradedModule tensor_modules(const GradedModule& a, const GradedModule& b,
                            DeltaVariant v);

/// n_sl2 (x) B~ under the full comultiplication; n_sl2 must be an sl2 lift
/// (X = Y = Z = 0) and b_tilde a lift built with nonzero central charge.
GradedModule tensor_with_B(const GradedModule& n_sl2, const GradedModule& b_tilde);

/// Finite-dimensional sl2 tensor product under the sl2 comultiplication.
GradedModule sl2_tensor(const GradedModule& m, const GradedModule& n);

/// Multiplicities of the simple summands of a completely reducible
/// finite-dimensional sl2 module: highest-weight exponent d -> number of
/// copies of the simple with highest weight q^d.
std::map<int, int> sl2_hw_multiplicities(const GradedModule& t);

struct HomBijectionReport {
    size_t dim_sl2 = 0;       // dim Hom before tensoring
    size_t dim_tensored = 0;  // dim Hom between the tensored modules
    bool dims_match = false;
    bool correspondence_ok = false;  // every f (x) 1 lies in the solved basis
};

/// Instance check that - (x) B~ preserves Hom spaces between two sl2 lifts.
HomBijectionReport hom_bijection_check(const GradedModule& m, const GradedModule& n,
                                       const Scalar& zdot);

} // namespace schroq
