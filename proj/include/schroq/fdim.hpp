#pragma once

#include <random>

#include "schroq/wmod.hpp"

namespace schroq {

/// Weight-exponent shift of a generator on type-1 modules: acting by g
/// multiplies the K-eigenvalue q^m by q^{fd_shift(g)}.
int fd_shift(Gen g);

/// Finite-dimensional weight module with support in q^Z and Z acting as
/// zero. Weight spaces are indexed by the integer K-exponent m (eigenvalue
/// q^m); E, F, X, Y matrices connect adjacent spaces, K acts by the scalar
/// q^m on each space.
struct FdModule {
    std::map<int, int> dims;                      // only nonzero entries stored
    std::map<std::pair<Gen, int>, Mat> maps;      // (generator, source exponent)

    int dim(int m) const;
    int total_dim() const;
    int min_exp() const;  // 0 for the zero module
    int max_exp() const;
    /// Full action matrix dim(m + shift) x dim(m); K, Kinv, Z and absent
    /// E/F/X/Y slots are materialized on demand.
    Mat action(Gen g, int m) const;
    void set_action(Gen g, int m, Mat mat);  // validates the shape
};

/// Vector with weight components; zero components never stored.
using FdVec = std::map<int, Vec>;

FdVec fd_basis(int m, size_t index, size_t dim);
void fd_add(FdVec& v, int m, const Vec& x);
FdVec fd_scale(const Scalar& c, const FdVec& v);
FdVec fd_sub(const FdVec& a, const FdVec& b);

FdVec fd_act_gen(const FdModule& V, Gen g, const FdVec& v);
FdVec fd_act(const FdModule& V, const PBWElement& u, const FdVec& v);

/// Every defining relation as a matrix identity on every weight space.
std::vector<RelationCheck> fd_check_relations(const FdModule& V);
bool fd_relations_ok(const FdModule& V);

/// Simple U_q(sl2)-module with highest weight q^i on the basis F^s v_i,
/// s = 0..i: E F^s v_i = [s][i+1-s] F^{s-1} v_i, F^i+1 v_i = 0. X and Y
/// act as zero.
FdModule build_L(int i);

/// The same two-dimensional module realized on span{X, Y} inside the
/// quantum plane: K X = qX, E Y = X, F X = Y.
FdModule quantum_plane_L1();

/// Tensor product a (x) b of finite-dimensional sl2 modules under the
/// primed comultiplication E -> E(x)1 + K(x)E, F -> F(x)Kinv + 1(x)F,
/// K -> K(x)K. Basis at weight m: blocks by decreasing a-exponent,
/// row-major within a block.
FdModule fd_tensor(const FdModule& a, const FdModule& b);

/// Offset of the block with a-exponent ma inside weight space m of
/// fd_tensor(a, b).
size_t fd_tensor_offset(const FdModule& a, const FdModule& b, int m, int ma);

/// Weight-preserving linear map between weight modules.
struct FdMap {
    std::map<int, Mat> maps;  // weight m of source -> weight m of target
    FdVec apply(const FdVec& v) const;
    Vec column(int m, size_t j, size_t target_dim) const;
};

/// Extend a vector w0 of weight j killed by E to the module map L(j) -> T
/// sending the s-th basis vector to F^s w0.
FdMap hw_embedding(const FdModule& T, int j, const Vec& w0);

/// f commutes with the actions of E, F, X, Y (weights match by shape).
bool fd_intertwines(const FdModule& src, const FdModule& dst, const FdMap& f);
/// Same, restricted to the sl2 actions E and F (K is automatic because the
/// map is weight-preserving).
bool fd_intertwines_sl2(const FdModule& src, const FdModule& dst, const FdMap& f);

/// The two sl2 embeddings into L(1) (x) L(i): up sends the top of L(i+1)
/// to X (x) v_i; down (present for i >= 1) sends the top of L(i-1) to
/// [i] Y (x) v_i - q^{-1} X (x) F v_i.
struct CgEmbeddings {
    FdModule tensor;  // L(1) (x) L(i)
    FdMap up;         // from L(i+1)
    FdMap down;       // from L(i-1); empty maps when i = 0
};
CgEmbeddings cg_embeddings(int i);

/// Pairing map of a hom: theta in Hom_sl2(L(i), V) induces
/// L(1) (x) L(i) -> V, (aX + bY) (x) v -> (aX + bY) theta(v).
FdMap pair_with_quantum_plane(const FdMap& theta, const FdModule& Li,
                              const FdModule& V);

/// Basis of Hom_sl2(L(i), V): highest weight vectors of weight q^i extended
/// down the F-string.
std::vector<FdMap> hom_basis(const FdModule& V, int i);

/// Representation of the two-cycle quiver on vertices 0,1,2,...: forward
/// maps a[i]: d_i -> d_i+1 and backward maps b[i]: d_i+1 -> d_i, subject
/// to b_0 a_0 = 0 and a_i b_i = b_i+1 a_i+1. Vertices beyond the stored
/// range carry the zero space.
struct QuiverRep {
    std::vector<int> dims;
    std::vector<Mat> a, b;  // both of size dims.size() - 1
    bool operator==(const QuiverRep&) const = default;
};

std::vector<RelationCheck> quiver_relation_check(const QuiverRep& rep);
bool quiver_rep_ok(const QuiverRep& rep);

/// Module -> quiver representation: vertex space i is Hom_sl2(L(i), V) in
/// the hom_basis coordinates; a sends theta (with top value w) to the hom
/// with top value X w, b sends theta' at vertex i+1 to the hom with top
/// value [i+1] Y w' - q^{-1} X F w'.
QuiverRep module_to_quiver(const FdModule& V);

/// Quiver representation -> module on sum_i V_i (x) L(i), with X and Y
/// gluing adjacent summands through the a and b maps. Throws
/// RelationViolation if the rep fails its relations.
FdModule quiver_to_module(const QuiverRep& rep);

/// Vertex maps g_i induce a module map quiver_to_module(src) ->
/// quiver_to_module(dst), block-diagonal on each summand.
FdMap quiver_map_to_module_map(const QuiverRep& src, const QuiverRep& dst,
                               const std::vector<Mat>& g);

/// Vertex matrices of a module map in the hom_basis coordinates.
std::vector<Mat> module_map_to_quiver_map(const FdModule& src, const FdModule& dst,
                                          const FdMap& f);

/// Explicit vertex isomorphisms rep -> module_to_quiver(quiver_to_module(rep)),
/// commuting with the a and b maps. Throws NoIsoFound if none exists.
std::vector<Mat> roundtrip_iso(const QuiverRep& rep);

/// Random rep with <= max_vertices vertices and dims <= max_dim: forward
/// maps sampled with small integer entries, backward maps solved from the
/// relations.
QuiverRep random_quiver_rep(std::mt19937& rng, int max_vertices = 5,
                            int max_dim = 3);

/// Random vertex-wise endomorphism of the rep (solved from the commuting
/// conditions; always contains the identity).
std::vector<Mat> random_quiver_endomorphism(const QuiverRep& rep, std::mt19937& rng);

/// The five operator identities XY = qYX, EX = qXE, EY = X + q^{-1}YE,
/// FX = YK^{-1} + XF, FY = YF checked symbolically on the glued basis
/// theta_i (x) F^s v_i for i <= max_i, s <= i, with the vertex maps kept
/// as formal symbols reduced only by the quiver relations.
std::vector<RelationCheck> formal_action_identities(int max_i);

/// JSON round trips. Quiver schema:
/// { "schema": 1, "dims": [...], "a": [[row...]...], "b": [...],
///   "field": "Q" | "Q(t)" } with entries as canonical scalar strings
/// (plain numbers accepted on input).
std::string quiver_to_json(const QuiverRep& rep);
QuiverRep quiver_from_json(const std::string& text);
std::string fd_module_to_json(const FdModule& V);
FdModule fd_module_from_json(const std::string& text);

} // namespace schroq
