#pragma once

#include "schroq/wmod.hpp"

namespace schroq {

/// Basis conventions for Verma-type modules: the vector Y^k F^l v sits at
/// depth k + 2l; within depth n the index is l = 0..floor(n/2), k = n - 2l.
inline int verma_dim(int n) { return n < 0 ? 0 : n / 2 + 1; }
inline size_t verma_index(int l) { return static_cast<size_t>(l); }

/// Expand u * v for a highest-weight vector v (E v = X v = 0, K v = lambda v,
/// Z v = zdot v) into coefficients of the basis Y^k F^l v, keyed by (k, l).
std::map<std::pair<int, int>, Scalar> hw_expand(const PBWElement& u,
                                                const Scalar& lambda,
                                                const Scalar& zdot);

/// Verma module with all actions generated from the PBW rewriting oracle.
GradedModule build_verma(const Weight& lambda, const Scalar& zdot, int N);

/// The quantum Weyl algebra module B_z (basis v_i = Y^i image at depth i);
/// only X, Y, Z, K carry the structure here, E and F are left zero.
GradedModule build_B(const Scalar& zdot, int N);

/// The lift of B_z to the whole algebra; zdot must be nonzero since the
/// F-action divides by it.
GradedModule build_B_tilde(const Scalar& zdot, int N);

/// sl2 Verma with highest weight lambda, lifted by X = Y = Z = 0; basis F^l
/// at depth 2l (odd depth slices are zero).
GradedModule build_verma_sl2(const Weight& lambda, int N);

/// Finite-dimensional simple sl2 module with highest weight sign * q^d,
/// lifted by X = Y = Z = 0; needs N >= 2d + 2 so the zero slice above the
/// lowest weight exists.
GradedModule build_Lsl2_graded(int d, int sign, int N);

/// Quotient by the sum of submodules generated by all singular vectors at
/// depths 1..N; returns m itself when none exist.
GradedModule simple_quotient(const GradedModule& m);

struct ReducibilityVerdict {
    bool reducible = false;
    int singular_depth = -1;               // depth of the singular line
    std::optional<Weight> singular_weight; // its K-eigenvalue
};

/// Search for singular vectors in Delta(lambda, zdot) up to depth N.
ReducibilityVerdict reducibility_verdict(const Weight& lambda, const Scalar& zdot,
                                         int N);

} // namespace schroq
