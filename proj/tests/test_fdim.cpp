#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schroq/errors.hpp"
#include "schroq/fdim.hpp"

using namespace schroq;

namespace {

QuiverRep two_vertex_rep() {
    QuiverRep rep;
    rep.dims = {1, 1};
    rep.a = {Mat(1, 1)};
    rep.a[0].at(0, 0) = Scalar(1);
    rep.b = {Mat(1, 1)};
    return rep;
}

// dims (1,2,1) with entries in z and w: b0 a0 = 0 and a1 b1 = 0 = b2 a2.
QuiverRep symbolic_rep() {
    QuiverRep rep;
    rep.dims = {1, 2, 1};
    Mat a0(2, 1), a1(1, 2), b0(1, 2), b1(2, 1);
    a0.at(0, 0) = Scalar(1);
    b0.at(0, 1) = Scalar::z();
    a1.at(0, 1) = Scalar::w();
    b1.at(0, 0) = Scalar::z() / Scalar::w();
    rep.a = {a0, a1};
    rep.b = {b0, b1};
    return rep;
}

int total(const FdModule& V) { return V.total_dim(); }

} // namespace

TEST_CASE("simple modules on the F-string basis") {
    FdModule l0 = build_L(0);
    CHECK(total(l0) == 1);
    CHECK(l0.action(Gen::E, 0).is_zero());
    CHECK(l0.action(Gen::F, 0).is_zero());
    CHECK(l0.action(Gen::K, 0).at(0, 0) == Scalar(1));

    // E F v_1 = [1][1] v_1 = v_1
    FdModule l1 = build_L(1);
    FdVec v = fd_basis(1, 0, 1);
    CHECK(fd_act(l1, parse_expr("E*F"), v) == v);

    // E F^s v_i = [s][i+1-s] F^{s-1} v_i, F^{i+1} v_i = 0
    FdModule l3 = build_L(3);
    FdVec top = fd_basis(3, 0, 1);
    FdVec f2 = fd_act(l3, parse_expr("F*F"), top);
    CHECK(fd_act_gen(l3, Gen::E, f2) ==
          fd_scale(qint(2) * qint(2), fd_act_gen(l3, Gen::F, top)));
    CHECK(fd_act(l3, parse_expr("F*F*F*F"), top).empty());

    // dimensions symmetric under m <-> -m, full relation suite (X = Y = 0)
    for (int i = 0; i <= 4; ++i) {
        FdModule li = build_L(i);
        CHECK(total(li) == i + 1);
        for (auto& [m, d] : li.dims) CHECK(li.dim(-m) == d);
        CHECK(fd_relations_ok(li));
    }
}

TEST_CASE("the quantum plane realizes L(1)") {
    FdModule qp = quantum_plane_L1();
    FdVec x = fd_basis(1, 0, 1), y = fd_basis(-1, 0, 1);
    CHECK(fd_act_gen(qp, Gen::K, x) == fd_scale(Scalar::q(1), x));
    CHECK(fd_act_gen(qp, Gen::K, y) == fd_scale(Scalar::q(-1), y));
    CHECK(fd_act_gen(qp, Gen::E, x).empty());
    CHECK(fd_act_gen(qp, Gen::E, y) == x);
    CHECK(fd_act_gen(qp, Gen::F, x) == y);
    CHECK(fd_act_gen(qp, Gen::F, y).empty());

    FdModule l1 = build_L(1);
    CHECK(qp.dims == l1.dims);
    for (Gen g : {Gen::E, Gen::F})
        for (int m : {-1, 1}) CHECK(qp.action(g, m) == l1.action(g, m));
}

TEST_CASE("the two embeddings into the tensor with the quantum plane") {
    for (int i = 1; i <= 6; ++i) {
        INFO("i = " << i);
        CgEmbeddings cg = cg_embeddings(i);
        FdModule up_src = build_L(i + 1), dn_src = build_L(i - 1);

        // both highest weight vectors are E-killed at the stated weights
        Vec wu(static_cast<size_t>(cg.tensor.dim(i + 1)));
        for (size_t r = 0; r < wu.size(); ++r) wu[r] = cg.up.maps.at(i + 1).at(r, 0);
        CHECK(cg.tensor.action(Gen::E, i + 1).apply(wu) == Vec(static_cast<size_t>(cg.tensor.dim(i + 3))));
        Vec wd(static_cast<size_t>(cg.tensor.dim(i - 1)));
        for (size_t r = 0; r < wd.size(); ++r) wd[r] = cg.down.maps.at(i - 1).at(r, 0);
        CHECK(cg.tensor.action(Gen::E, i - 1).apply(wd) == Vec(static_cast<size_t>(cg.tensor.dim(i + 1))));

        // both are module maps and the images are complementary
        CHECK(fd_intertwines(up_src, cg.tensor, cg.up));
        CHECK(fd_intertwines(dn_src, cg.tensor, cg.down));
        for (auto& [m, d] : cg.tensor.dims) {
            std::vector<Vec> cols;
            size_t dd = static_cast<size_t>(d);
            auto push = [&](const FdMap& f) {
                auto it = f.maps.find(m);
                if (it == f.maps.end()) return;
                for (size_t j = 0; j < it->second.cols(); ++j) {
                    Vec c(dd);
                    for (size_t r = 0; r < dd; ++r) c[r] = it->second.at(r, j);
                    cols.push_back(std::move(c));
                }
            };
            push(cg.up);
            push(cg.down);
            CHECK(cols.size() == dd);          // dims sum to 2(i+1) weightwise
            CHECK(span_rank(cols) == dd);      // zero intersection
        }
    }

    // i = 1: the lower vector is Y (x) v_1 - q^{-1} X (x) F v_1
    CgEmbeddings cg1 = cg_embeddings(1);
    const Mat& col = cg1.down.maps.at(0);
    FdModule l1 = build_L(1);
    CHECK(col.at(fd_tensor_offset(l1, l1, 0, -1), 0) == Scalar(1));
    CHECK(col.at(fd_tensor_offset(l1, l1, 0, 1), 0) == -Scalar::q(-1));
}

TEST_CASE("triple tensor highest weight vectors") {
    FdModule l1 = build_L(1);
    for (int i = 1; i <= 4; ++i) {
        INFO("i = " << i);
        FdModule li = build_L(i);
        FdModule inner = fd_tensor(l1, li);
        FdModule t3 = fd_tensor(l1, inner);
        // coordinates of u (x) (w (x) F^s v_i) with u, w in {X, Y}
        auto coord = [&](int ua, int wa, int s) {
            int mi = i - 2 * s;                 // L(i) weight
            int m_in = wa + mi;                 // inner weight
            int m = ua + m_in;                  // full weight
            size_t off =
                fd_tensor_offset(l1, inner, m, ua) + fd_tensor_offset(l1, li, m_in, wa);
            return std::pair{m, off};
        };
        // [i+1] Y(x)X(x)v_i - q^{-1} X(x)X(x)Fv_i - q^{-i-1} X(x)Y(x)v_i
        {
            auto [m1, o1] = coord(-1, 1, 0);
            auto [m2, o2] = coord(1, 1, 1);
            auto [m3, o3] = coord(1, -1, 0);
            REQUIRE(m1 == i);
            REQUIRE(m2 == i);
            REQUIRE(m3 == i);
            Vec v(static_cast<size_t>(t3.dim(i)));
            v[o1] += qint(i + 1);
            v[o2] += -Scalar::q(-1);
            v[o3] += -Scalar::q(-i - 1);
            CHECK(t3.action(Gen::E, i).apply(v) == Vec(static_cast<size_t>(t3.dim(i + 2))));
        }
        // [i] X(x)Y(x)v_i - q^{-1} X(x)X(x)Fv_i
        {
            auto [m1, o1] = coord(1, -1, 0);
            auto [m2, o2] = coord(1, 1, 1);
            Vec v(static_cast<size_t>(t3.dim(i)));
            v[o1] += qint(i);
            v[o2] += -Scalar::q(-1);
            CHECK(t3.action(Gen::E, i).apply(v) == Vec(static_cast<size_t>(t3.dim(i + 2))));
        }
    }
}

TEST_CASE("pairing a hom with the quantum plane factor") {
    FdModule V = quiver_to_module(symbolic_rep());
    REQUIRE(fd_relations_ok(V));
    for (int i = 0; i <= 2; ++i) {
        FdModule li = build_L(i);
        FdModule t = fd_tensor(build_L(1), li);
        for (const FdMap& theta : hom_basis(V, i)) {
            CHECK(fd_intertwines_sl2(li, V, theta));
            FdMap tau = pair_with_quantum_plane(theta, li, V);
            CHECK(fd_intertwines_sl2(t, V, tau));
            // tau(X (x) v_i) = X theta(v_i)
            if (t.dim(i + 1) > 0 && V.dim(i + 1) > 0) {
                size_t off = fd_tensor_offset(build_L(1), li, i + 1, 1);
                Vec lhs = tau.column(i + 1, off, static_cast<size_t>(V.dim(i + 1)));
                Vec rhs = V.action(Gen::X, i)
                              .apply(theta.column(i, 0, static_cast<size_t>(V.dim(i))));
                CHECK(lhs == rhs);
            }
        }
        // the zero hom pairs to the zero map
        FdMap zero;
        for (auto& [m, d] : li.dims)
            zero.maps[m] = Mat(static_cast<size_t>(V.dim(m)), static_cast<size_t>(d));
        FdMap tz = pair_with_quantum_plane(zero, li, V);
        for (auto& [m, mat] : tz.maps) CHECK(mat.is_zero());
    }
}

TEST_CASE("quiver relation checking") {
    QuiverRep good = two_vertex_rep();
    CHECK(quiver_rep_ok(good));

    QuiverRep bad = good;
    bad.b[0].at(0, 0) = Scalar(1);
    auto checks = quiver_relation_check(bad);
    CHECK(!checks[0].pass);
    CHECK(checks[0].relation == "b0 a0 = 0");
    CHECK(!checks[0].detail.empty());

    QuiverRep chain;
    chain.dims = {1, 1, 1};
    chain.a = {Mat(1, 1), Mat(1, 1)};
    chain.a[0].at(0, 0) = chain.a[1].at(0, 0) = Scalar(1);
    chain.b = {Mat(1, 1), Mat(1, 1)};
    CHECK(quiver_rep_ok(chain));

    CHECK_THROWS_AS(quiver_to_module(bad), RelationViolation);
}

TEST_CASE("gluing a quiver representation into a module") {
    // dims (1,1), a = [1], b = [0]
    QuiverRep rep = two_vertex_rep();
    FdModule V = quiver_to_module(rep);
    CHECK(V.dims == std::map<int, int>{{-1, 1}, {0, 1}, {1, 1}});
    CHECK(fd_relations_ok(V));

    // X(theta_0 (x) v_0) = theta_1 (x) v_1 and Y(theta_0 (x) v_0) = theta_1 (x) F v_1
    FdVec v0 = fd_basis(0, 0, 1);
    CHECK(fd_act_gen(V, Gen::X, v0) == fd_basis(1, 0, 1));
    CHECK(fd_act_gen(V, Gen::Y, v0) == fd_basis(-1, 0, 1));

    // one-vertex rep glues to the trivial module
    QuiverRep triv;
    triv.dims = {1};
    FdModule T = quiver_to_module(triv);
    CHECK(total(T) == 1);
    CHECK(T.action(Gen::X, 0).is_zero());
    CHECK(T.action(Gen::Y, 0).is_zero());

    // trivial module maps back to dims (1, 0)
    QuiverRep back = module_to_quiver(T);
    CHECK(back.dims == std::vector<int>{1});
}

TEST_CASE("random representations: relations, multiplicities, round trips") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 12; ++trial) {
        INFO("trial " << trial);
        QuiverRep rep = random_quiver_rep(rng);
        REQUIRE(quiver_rep_ok(rep));
        FdModule V = quiver_to_module(rep);
        CHECK(fd_relations_ok(V));

        // multiplicity law: dim Hom(L(i), V) = d_i
        for (int i = 0; i < static_cast<int>(rep.dims.size()); ++i)
            CHECK(hom_basis(V, i).size() ==
                  static_cast<size_t>(rep.dims[static_cast<size_t>(i)]));

        QuiverRep back = module_to_quiver(V);
        CHECK(quiver_rep_ok(back));
        std::vector<Mat> phi = roundtrip_iso(rep);
        REQUIRE(phi.size() >= rep.dims.size());
        for (size_t i = 0; i < rep.dims.size(); ++i)
            CHECK(phi[i].rank() == static_cast<size_t>(rep.dims[i]));
    }
}

TEST_CASE("functoriality on a random endomorphism") {
    std::mt19937 rng(99);
    QuiverRep rep = random_quiver_rep(rng);
    std::vector<Mat> g = random_quiver_endomorphism(rep, rng);
    FdModule V = quiver_to_module(rep);
    FdMap f = quiver_map_to_module_map(rep, rep, g);
    CHECK(fd_intertwines(V, V, f));
    std::vector<Mat> back = module_map_to_quiver_map(V, V, f);
    for (size_t i = 0; i < rep.dims.size(); ++i) CHECK(back[i] == g[i]);
}

TEST_CASE("the symbolic representation exercises the identities over Q(t,z,w)") {
    QuiverRep rep = symbolic_rep();
    REQUIRE(quiver_rep_ok(rep));
    FdModule V = quiver_to_module(rep);
    for (auto& rc : fd_check_relations(V)) {
        INFO(rc.relation << " " << rc.detail);
        CHECK(rc.pass);
    }
    std::vector<Mat> phi = roundtrip_iso(rep);
    CHECK(phi.size() == 3);
}

TEST_CASE("formal identities on the glued basis") {
    for (auto& rc : formal_action_identities(4)) {
        INFO(rc.relation << " " << rc.detail);
        CHECK(rc.pass);
    }
}

TEST_CASE("json round trips") {
    QuiverRep rep = symbolic_rep();
    std::string text = quiver_to_json(rep);
    CHECK(text.find("\"field\": \"Q(t)\"") != std::string::npos);
    CHECK(quiver_from_json(text) == rep);

    QuiverRep plain = two_vertex_rep();
    CHECK(quiver_to_json(plain).find("\"field\": \"Q\"") != std::string::npos);
    CHECK(quiver_from_json(quiver_to_json(plain)) == plain);

    FdModule V = quiver_to_module(rep);
    FdModule W = fd_module_from_json(fd_module_to_json(V));
    CHECK(W.dims == V.dims);
    for (Gen ggen : {Gen::E, Gen::F, Gen::X, Gen::Y})
        for (auto& [m, d] : V.dims) CHECK(W.action(ggen, m) == V.action(ggen, m));
}
