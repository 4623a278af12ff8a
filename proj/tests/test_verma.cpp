#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schroq/errors.hpp"
#include "schroq/verma.hpp"

using namespace schroq;

namespace {

GradedVec top() { return GradedVec::basis(0, 0, 1); }

Scalar one_entry(const GradedVec& v, int depth, size_t idx) {
    auto it = v.comps.find(depth);
    if (it == v.comps.end()) return Scalar();
    return it->second.at(idx);
}

} // namespace

TEST_CASE("Verma construction basics") {
    CHECK_THROWS_AS(Weight{Scalar()}, InvalidWeight);
    GradedModule m = build_verma(Weight::generic(), Scalar::z(), 12);
    for (int n = 0; n <= 12; ++n) CHECK(m.dim(n) == n / 2 + 1);

    // F v = basis (k,l) = (0,1) at depth 2
    GradedVec fv = act(m, PBWElement::gen(Gen::F), top());
    CHECK(fv == GradedVec::basis(2, 1, 2));

    // E(F v) = ((K - K^-1)/(q - q^-1)) v = ((w - w^-1)/(q - q^-1)) v
    GradedVec efv = act(m, PBWElement::gen(Gen::E), fv);
    Scalar expect = (Scalar::w() - Scalar::w().inverse()) /
                    (Scalar::q(1) - Scalar::q(-1));
    CHECK(efv == expect * top());

    // X(Y v) = -z v
    GradedVec yv = act(m, PBWElement::gen(Gen::Y), top());
    CHECK(act(m, PBWElement::gen(Gen::X), yv) == -Scalar::z() * top());
}

TEST_CASE("Verma relation suite at depth 12, symbolic weight and charge") {
    GradedModule m = build_verma(Weight::generic(), Scalar::z(), 12);
    for (auto& rc : check_relations(m)) {
        INFO(rc.relation << " " << rc.detail);
        CHECK(rc.pass);
    }
}

TEST_CASE("Verma with zero central charge is allowed") {
    GradedModule m = build_verma(Weight::generic(), Scalar(), 8);
    CHECK(relations_ok(m));
    CHECK(act(m, PBWElement::gen(Gen::Z), top()).is_zero());
}

TEST_CASE("B module actions") {
    GradedModule b = build_B(Scalar::z(), 10);
    // X v_1 = -z v_0;  X v_0 = 0;  Y v_i = v_{i+1};  Z v_i = z v_i
    CHECK(one_entry(act(b, PBWElement::gen(Gen::X), GradedVec::basis(1, 0, 1)), 0, 0) ==
          -Scalar::z());
    CHECK(act(b, PBWElement::gen(Gen::X), GradedVec::basis(0, 0, 1)).is_zero());
    CHECK(act(b, PBWElement::gen(Gen::Y), GradedVec::basis(3, 0, 1)) ==
          GradedVec::basis(4, 0, 1));
    CHECK(act(b, PBWElement::gen(Gen::Z), GradedVec::basis(2, 0, 1)) ==
          Scalar::z() * GradedVec::basis(2, 0, 1));
    // X v_i = -z(q^i - 1)/(q - 1) v_{i-1} = -z(q^{i-1} + ... + 1) v_{i-1}
    Scalar geom = -Scalar::z() * (Scalar::q(2) + Scalar::q(1) + Scalar(1));
    CHECK(one_entry(act(b, PBWElement::gen(Gen::X), GradedVec::basis(3, 0, 1)), 2, 0) ==
          geom);
}

TEST_CASE("B tilde lift") {
    CHECK_THROWS_AS(build_B_tilde(Scalar(), 6), ZeroCentralCharge);
    GradedModule bt = build_B_tilde(Scalar::z(), 12);
    CHECK(one_entry(act(bt, PBWElement::gen(Gen::K), GradedVec::basis(0, 0, 1)), 0, 0) ==
          Scalar::t(-1));
    CHECK(act(bt, PBWElement::gen(Gen::E), GradedVec::basis(1, 0, 1)).is_zero());
    CHECK(one_entry(act(bt, PBWElement::gen(Gen::F), GradedVec::basis(0, 0, 1)), 2, 0) ==
          Scalar::t(1) / (Scalar::z() * (Scalar::q(1) + Scalar(1))));
    // full relation suite
    for (auto& rc : check_relations(bt)) {
        INFO(rc.relation << " " << rc.detail);
        CHECK(rc.pass);
    }
}

TEST_CASE("B tilde identity triple on v_0..v_10") {
    GradedModule bt = build_B_tilde(Scalar::z(), 12);
    PBWElement lhs1 = parse_expr("E*F - F*E"), rhs1 = parse_expr("(K - Kinv)/(q - q^-1)");
    PBWElement lhs2 = parse_expr("E*Y"), rhs2 = parse_expr("X + q^-1*Y*E");
    PBWElement lhs3 = parse_expr("F*X"), rhs3 = parse_expr("Y*Kinv + X*F");
    for (int i = 0; i <= 10; ++i) {
        GradedVec vi = GradedVec::basis(i, 0, 1);
        CHECK(act(bt, lhs1, vi) == act(bt, rhs1, vi));
        CHECK(act(bt, lhs2, vi) == act(bt, rhs2, vi));
        CHECK(act(bt, lhs3, vi) == act(bt, rhs3, vi));
    }
}

TEST_CASE("sl2 lifts satisfy every relation with X = Y = Z = 0") {
    GradedModule dv = build_verma_sl2(Weight::generic(), 10);
    CHECK(relations_ok(dv));
    CHECK(act(dv, PBWElement::gen(Gen::X), top()).is_zero());
    CHECK(act(dv, PBWElement::gen(Gen::Y), top()).is_zero());

    GradedModule l2 = build_Lsl2_graded(2, 1, 10);
    CHECK(relations_ok(l2));
    std::vector<int> dims(11, 0);
    dims[0] = dims[2] = dims[4] = 1;
    CHECK(l2.dims() == dims);
    // E F^s v = [s][d+1-s] F^{s-1} v on L(q^d)
    GradedVec f2 = act(l2, parse_expr("F*F"), top());
    CHECK(act(l2, PBWElement::gen(Gen::E), f2) ==
          (qint(2) * qint(1)) * act(l2, PBWElement::gen(Gen::F), top()));
    // F kills the lowest weight vector
    CHECK(act(l2, PBWElement::gen(Gen::F), f2).is_zero());

    GradedModule l2neg = build_Lsl2_graded(1, -1, 8);
    CHECK(relations_ok(l2neg));
    CHECK(one_entry(act(l2neg, PBWElement::gen(Gen::K), top()), 0, 0) == -Scalar::q(1));
}

TEST_CASE("reducibility verdicts") {
    // half family: lambda = ±q^{d-1/2} has its singular line at depth 2d+2
    for (int d = 0; d <= 3; ++d) {
        for (int sign : {1, -1}) {
            auto v = reducibility_verdict(Weight::q_half_power(2 * d - 1, sign),
                                          Scalar::z(), 12);
            INFO("d=" << d << " sign=" << sign);
            REQUIRE(v.reducible);
            CHECK(v.singular_depth == 2 * d + 2);
            CHECK(*v.singular_weight == Weight::q_half_power(-2 * d - 5, sign));
        }
    }
    // integral family and generic weights stay simple
    for (int n = 0; n <= 3; ++n)
        CHECK(!reducibility_verdict(Weight::q_half_power(2 * n), Scalar::z(), 12).reducible);
    CHECK(!reducibility_verdict(Weight::generic(), Scalar::z(), 12).reducible);
    CHECK_THROWS_AS(reducibility_verdict(Weight::generic(), Scalar(), 6),
                    ZeroCentralCharge);
}

TEST_CASE("simple quotient") {
    GradedModule generic = build_verma(Weight::generic(), Scalar::z(), 8);
    CHECK(simple_quotient(generic) == generic);

    GradedModule red = build_verma(Weight::q_half_power(-1), Scalar::z(), 10);
    GradedModule l = simple_quotient(red);
    CHECK(l.dims() == std::vector<int>(11, 1));
    CHECK(relations_ok(l));
    // no singular vectors remain in the quotient
    for (int n = 1; n <= 10; ++n) CHECK(highest_weight_vectors(l, n).empty());
}

TEST_CASE("B tilde is the simple quotient at weight q^{-1/2}") {
    GradedModule bt = build_B_tilde(Scalar::z(), 10);
    GradedModule l = simple_quotient(build_verma(Weight::q_half_power(-1), Scalar::z(), 10));
    auto maps = find_intertwiners(bt, l);
    REQUIRE(maps.size() == 1);
    CHECK(maps[0].shift == 0);
    CHECK(maps[0].invertible_interior(bt, l));
}
