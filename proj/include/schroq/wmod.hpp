#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schroq/matrix.hpp"
#include "schroq/pbw.hpp"

namespace schroq {

/// Vector in a depth-graded module: components indexed by depth.
struct GradedVec {
    std::map<int, Vec> comps;  // zero components never stored

    static GradedVec basis(int depth, size_t index, size_t dim);
    void add(int depth, const Vec& v);
    bool is_zero() const { return comps.empty(); }
    bool operator==(const GradedVec&) const = default;
    GradedVec operator-() const;
    friend GradedVec operator+(GradedVec a, const GradedVec& b);
    friend GradedVec operator-(GradedVec a, const GradedVec& b);
    friend GradedVec operator*(const Scalar& c, const GradedVec& v);
    std::string str() const;
};

/// Weight module truncated at depth N, graded so that the K-eigenvalue at
/// depth n is topWeight * q^{-n}. Generator g maps depth n to n - deg(g)
/// with deg(E,X,Y,F) = (2,1,-1,-2); depths below 0 are the zero space and
/// depths above N are unavailable (TruncationOverflow when reached).
class GradedModule {
public:
    GradedModule(Weight top_weight, Scalar central_charge, std::vector<int> dims);

    const Weight& top_weight() const { return top_weight_; }
    const Scalar& central_charge() const { return central_charge_; }
    int truncation() const { return static_cast<int>(dims_.size()) - 1; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int n) const { return n >= 0 && n <= truncation() ? dims_[static_cast<size_t>(n)] : 0; }
    Scalar weight_at(int n) const { return top_weight_.value() * Scalar::q(-n); }

    /// Action matrix of g on depth n (target n - deg(g)); nullopt when the
    /// target depth lies beyond the truncation.
    const std::optional<Mat>& action(Gen g, int n) const;
    void set_action(Gen g, int n, Mat m);  // validates the shape

    /// Fill K, Kinv, Z with their forced scalar actions on every depth.
    void install_scalar_actions();

    bool operator==(const GradedModule&) const = default;

private:
    Weight top_weight_;
    Scalar central_charge_;
    std::vector<int> dims_;
    std::array<std::vector<std::optional<Mat>>, 7> act_;
};

/// Apply one generator. Components pushed below depth 0 vanish; components
/// pushed past the truncation throw TruncationOverflow (or are dropped when
/// drop_overflow is set, for closure computations).
GradedVec act_gen(const GradedModule& m, Gen g, const GradedVec& v,
                  bool drop_overflow = false);

/// Apply a PBW element (each monomial right factor first).
GradedVec act(const GradedModule& m, const PBWElement& u, const GradedVec& v);

struct RelationCheck {
    std::string relation;
    bool pass;
    std::string detail;  // first counterexample, if any
};

/// Evaluate every defining relation as a matrix identity on each depth where
/// no intermediate depth escapes [0, N].
std::vector<RelationCheck> check_relations(const GradedModule& m);
bool relations_ok(const GradedModule& m);

/// Basis of the joint kernel of E and X on depth n.
std::vector<Vec> highest_weight_vectors(const GradedModule& m, int n);

/// Per-depth dimensions of the Y,F-closure of the given vectors (graded
/// components of the seeds are closed separately; components pushed past the
/// truncation are dropped).
std::vector<int> submodule_generated(const GradedModule& m,
                                     const std::vector<GradedVec>& seeds);

/// Per-depth row bases of the same closure (submodule_generated reports their
/// sizes).
std::vector<std::vector<Vec>> submodule_span(const GradedModule& m,
                                             const std::vector<GradedVec>& seeds);

/// Weight-respecting module map: depth n of the source goes to depth
/// n + shift of the target.
struct Intertwiner {
    int shift = 0;
    std::map<int, Mat> maps;  // keyed by source depth
    GradedVec apply(const GradedVec& v) const;
    /// Invertible on every depth where both source and target slices exist.
    bool invertible_interior(const GradedModule& src, const GradedModule& dst) const;
};

/// Basis of all intertwiners from a to b, solved exactly as a linear system.
std::vector<Intertwiner> find_intertwiners(const GradedModule& a, const GradedModule& b);

/// JSON round trip (schema: topWeight/centralCharge/depth/dims/actions).
std::string module_to_json(const GradedModule& m);
GradedModule module_from_json(const std::string& text);

} // namespace schroq
