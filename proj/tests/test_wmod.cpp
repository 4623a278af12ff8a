#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schroq/errors.hpp"
#include "schroq/verma.hpp"
#include "schroq/wmod.hpp"

using namespace schroq;

namespace {

GradedModule generic_verma(int N) {
    return build_verma(Weight::generic(), Scalar::z(), N);
}

GradedVec top(const GradedModule& m) { return GradedVec::basis(0, 0, 1); }

} // namespace

TEST_CASE("act basics on a Verma module") {
    GradedModule m = generic_verma(8);
    GradedVec v = top(m);
    CHECK(act(m, PBWElement::one(), v) == v);
    CHECK(act(m, PBWElement::gen(Gen::Z), v) == Scalar::z() * v);
    CHECK(act(m, PBWElement::gen(Gen::K), v) == Scalar::w() * v);
    CHECK(act(m, PBWElement::gen(Gen::E), v).is_zero());
    CHECK(act(m, PBWElement::gen(Gen::X), v).is_zero());

    // X(Y v) = qY(Xv) - Zv = -z v, straight from the qYX - XY = Z relation
    GradedVec yv = act(m, PBWElement::gen(Gen::Y), v);
    CHECK(act(m, PBWElement::gen(Gen::X), yv) == -Scalar::z() * v);
    CHECK(act(m, parse_expr("X*Y"), v) == act(m, parse_expr("q*Y*X - Z"), v));
}

TEST_CASE("truncation semantics") {
    GradedModule m = generic_verma(4);
    GradedVec bottom = GradedVec::basis(4, 0, static_cast<size_t>(m.dim(4)));
    CHECK_THROWS_AS(act(m, PBWElement::gen(Gen::Y), bottom), TruncationOverflow);
    CHECK(act_gen(m, Gen::Y, bottom, /*drop_overflow=*/true).is_zero());
    // E on the top goes to the zero space below depth 0
    CHECK(act(m, PBWElement::gen(Gen::E), top(m)).is_zero());
}

TEST_CASE("relation checks pass on sound modules and flag corrupted ones") {
    GradedModule m = generic_verma(10);
    for (auto& rc : check_relations(m)) {
        INFO(rc.relation << " " << rc.detail);
        CHECK(rc.pass);
    }

    // zero out the E-action: EY = X + q^-1 YE must now fail
    GradedModule bad = m;
    for (int n = 2; n <= 10; ++n)
        bad.set_action(Gen::E, n,
                       Mat(static_cast<size_t>(bad.dim(n - 2)),
                           static_cast<size_t>(bad.dim(n))));
    bool ey_failed = false;
    for (auto& rc : check_relations(bad))
        if (!rc.pass && rc.relation.starts_with("EY")) ey_failed = true;
    CHECK(ey_failed);
    CHECK(!relations_ok(bad));
}

TEST_CASE("act factors through normal_form") {
    GradedModule m = generic_verma(10);
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> pick(0, 6), len(1, 4);
    GradedVec v = act(m, parse_expr("Y*Y*F"), top(m));  // interior vector, depth 4
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Gen> word;
        int n = len(rng);
        for (int i = 0; i < n; ++i) word.push_back(kAllGens[static_cast<size_t>(pick(rng))]);
        int depth = 4;
        bool interior = true;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            depth -= gen_deg(*it);
            if (depth > m.truncation()) { interior = false; break; }
        }
        if (!interior) continue;
        GradedVec direct = v;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            direct = act_gen(m, *it, direct);
        CHECK(direct == act(m, normal_form(word), v));
    }
}

TEST_CASE("weight compatibility of actions") {
    GradedModule m = generic_verma(8);
    for (Gen g : {Gen::E, Gen::X, Gen::Y, Gen::F}) {
        int d = gen_deg(g);
        for (int n = 0; n <= 8; ++n) {
            int t = n - d;
            if (t < 0 || t > 8) continue;
            Mat lhs = *m.action(Gen::K, t) * *m.action(g, n);
            Mat rhs = Scalar::q(d) * (*m.action(g, n) * *m.action(Gen::K, n));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("highest weight vector search") {
    GradedModule m = generic_verma(10);
    CHECK(highest_weight_vectors(m, 0).size() == 1);
    for (int n = 1; n <= 8; ++n) CHECK(highest_weight_vectors(m, n).empty());

    GradedModule red = build_verma(Weight::q_half_power(-1), Scalar::z(), 10);
    CHECK(highest_weight_vectors(red, 2).size() == 1);  // weight q^{-5/2}
    CHECK(red.weight_at(2) == Scalar::t(-5));
    for (int n : {1, 3, 4, 5, 6, 7, 8}) CHECK(highest_weight_vectors(red, n).empty());
}

TEST_CASE("submodule generation") {
    GradedModule m = generic_verma(8);
    CHECK(submodule_generated(m, {top(m)}) == m.dims());
    CHECK(submodule_generated(m, {}) == std::vector<int>(9, 0));

    GradedModule red = build_verma(Weight::q_half_power(-1), Scalar::z(), 10);
    Vec sv = highest_weight_vectors(red, 2).at(0);
    GradedVec seed;
    seed.comps[2] = sv;
    std::vector<int> dims = submodule_generated(red, {seed});
    for (int n = 0; n <= 10; ++n) {
        int expect = n >= 2 ? verma_dim(n - 2) : 0;
        CHECK(dims[static_cast<size_t>(n)] == expect);
    }
}

TEST_CASE("intertwiners from a module to itself") {
    GradedModule m = generic_verma(5);
    auto basis = find_intertwiners(m, m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].shift == 0);
    // the one-dimensional space is spanned by (a multiple of) the identity
    const Mat& top_block = basis[0].maps.at(0);
    Scalar c = top_block.at(0, 0);
    REQUIRE(!c.is_zero());
    for (auto& [n, blk] : basis[0].maps)
        CHECK(blk == c * Mat::identity(static_cast<size_t>(m.dim(n))));
    CHECK(basis[0].invertible_interior(m, m));
}

TEST_CASE("no intertwiners between incompatible weights") {
    GradedModule a = generic_verma(4);
    GradedModule b = build_verma(Weight::q_half_power(-1), Scalar::z(), 4);
    CHECK(find_intertwiners(a, b).empty());
    // different central charges force the zero map
    GradedModule c = build_verma(Weight::generic(), Scalar::z() + Scalar(1), 4);
    CHECK(find_intertwiners(a, c).empty());
}

TEST_CASE("embedding of the shifted Verma module") {
    // the singular vector of Delta(q^{-1/2}) generates a copy of Delta(q^{-5/2})
    GradedModule big = build_verma(Weight::q_half_power(-1), Scalar::z(), 8);
    GradedModule sub = build_verma(Weight::q_half_power(-5), Scalar::z(), 8);
    auto maps = find_intertwiners(sub, big);
    REQUIRE(maps.size() == 1);
    CHECK(maps[0].shift == 2);
    CHECK(!maps[0].maps.at(0).is_zero());
    // ...and nothing maps the other way
    CHECK(find_intertwiners(big, sub).empty());
}

TEST_CASE("module JSON round trip") {
    GradedModule m = build_verma(Weight::q_half_power(-1), Scalar::z(), 6);
    std::string text = module_to_json(m);
    GradedModule back = module_from_json(text);
    CHECK(back == m);
    CHECK(module_to_json(back) == text);
    CHECK_THROWS(module_from_json("{\"schema\":1}"));
}
