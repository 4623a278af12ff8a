#include "schroq/tensorfun.hpp"

#include "schroq/errors.hpp"
#include "schroq/verma.hpp"

namespace schroq {

const std::map<Gen, std::vector<TensorTerm>>& delta_table(DeltaVariant v) {
    static const std::map<Gen, std::vector<TensorTerm>> schrodinger = {
        {Gen::E, {{std::nullopt, Gen::E}, {Gen::E, Gen::K}}},
        {Gen::F, {{Gen::Kinv, Gen::F}, {Gen::F, std::nullopt}}},
        {Gen::K, {{Gen::K, Gen::K}}},
        {Gen::Kinv, {{Gen::Kinv, Gen::Kinv}}},
        {Gen::X, {{std::nullopt, Gen::X}}},
        {Gen::Y, {{std::nullopt, Gen::Y}}},
        {Gen::Z, {{std::nullopt, Gen::Z}}},
    };
    static const std::map<Gen, std::vector<TensorTerm>> sl2prime = {
        {Gen::E, {{Gen::E, std::nullopt}, {Gen::K, Gen::E}}},
        {Gen::F, {{Gen::F, Gen::Kinv}, {std::nullopt, Gen::F}}},
        {Gen::K, {{Gen::K, Gen::K}}},
        {Gen::Kinv, {{Gen::Kinv, Gen::Kinv}}},
        {Gen::X, {}},
        {Gen::Y, {}},
        {Gen::Z, {}},
    };
    return v == DeltaVariant::Schrodinger ? schrodinger : sl2prime;
}

namespace {

// Block offsets of the depth-m slice of the tensor module.
struct Blocks {
    std::vector<std::pair<int, size_t>> offs;  // (a-depth, offset)
    size_t total = 0;
};

Blocks blocks_at(const GradedModule& a, const GradedModule& b, int m) {
    Blocks out;
    for (int ad = 0; ad <= m; ++ad) {
        size_t sz = static_cast<size_t>(a.dim(ad)) * static_cast<size_t>(b.dim(m - ad));
        if (sz == 0) continue;
        out.offs.emplace_back(ad, out.total);
        out.total += sz;
    }
    return out;
}

size_t block_offset(const Blocks& blk, int ad) {
    for (auto& [d, off] : blk.offs)
        if (d == ad) return off;
    throw std::logic_error("missing tensor block");
}

} // namespace

GradedModule tensor_modules(const GradedModule& a, const GradedModule& b,
                            DeltaVariant v) {
    int NT = std::min(a.truncation(), b.truncation()) - 2;
    if (NT < 0) throw std::logic_error("inputs too shallow to tensor");
    Weight top{a.top_weight().value() * b.top_weight().value()};
    Scalar charge = v == DeltaVariant::Schrodinger
                        ? a.central_charge() + b.central_charge()
                        : Scalar();
    std::vector<Blocks> blk(static_cast<size_t>(NT) + 1);
    std::vector<int> dims(static_cast<size_t>(NT) + 1);
    for (int m = 0; m <= NT; ++m) {
        blk[static_cast<size_t>(m)] = blocks_at(a, b, m);
        dims[static_cast<size_t>(m)] = static_cast<int>(blk[static_cast<size_t>(m)].total);
    }
    GradedModule t(top, charge, dims);
    const auto& table = delta_table(v);
    for (Gen g : {Gen::E, Gen::X, Gen::Y, Gen::F}) {
        int dg = gen_deg(g);
        for (int m = 0; m <= NT; ++m) {
            int tm = m - dg;
            if (tm > NT) continue;
            const Blocks& src = blk[static_cast<size_t>(m)];
            Mat mat(static_cast<size_t>(t.dim(tm)), src.total);
            if (tm >= 0) {
                const Blocks& dst = blk[static_cast<size_t>(tm)];
                for (auto& [u, w] : table.at(g)) {
                    int du = u ? gen_deg(*u) : 0;
                    for (auto& [ad, off] : src.offs) {
                        int bd = m - ad;
                        int ad2 = ad - du, bd2 = tm - ad2;
                        if (ad2 < 0 || bd2 < 0) continue;
                        size_t ra = static_cast<size_t>(a.dim(ad2));
                        size_t rb = static_cast<size_t>(b.dim(bd2));
                        if (ra == 0 || rb == 0) continue;
                        const Mat Au = u ? *a.action(*u, ad)
                                         : Mat::identity(static_cast<size_t>(a.dim(ad)));
                        const Mat Bw = w ? *b.action(*w, bd)
                                         : Mat::identity(static_cast<size_t>(b.dim(bd)));
                        size_t doff = block_offset(dst, ad2);
                        size_t ca = static_cast<size_t>(a.dim(ad));
                        size_t cb = static_cast<size_t>(b.dim(bd));
                        for (size_t i = 0; i < ra; ++i)
                            for (size_t ii = 0; ii < ca; ++ii) {
                                if (Au.at(i, ii).is_zero()) continue;
                                for (size_t j = 0; j < rb; ++j)
                                    for (size_t jj = 0; jj < cb; ++jj) {
                                        if (Bw.at(j, jj).is_zero()) continue;
                                        mat.at(doff + i * rb + j, off + ii * cb + jj) +=
                                            Au.at(i, ii) * Bw.at(j, jj);
                                    }
                            }
                    }
                }
            }
            t.set_action(g, m, std::move(mat));
        }
    }
    return t;
}

GradedModule tensor_with_B(const GradedModule& n_sl2, const GradedModule& b_tilde) {
    if (b_tilde.central_charge().is_zero())
        throw ZeroCentralCharge("the B-factor requires nonzero central charge");
    return tensor_modules(n_sl2, b_tilde, DeltaVariant::Schrodinger);
}

GradedModule sl2_tensor(const GradedModule& m, const GradedModule& n) {
    return tensor_modules(m, n, DeltaVariant::Sl2Prime);
}

std::map<int, int> sl2_hw_multiplicities(const GradedModule& t) {
    std::map<int, int> mult;
    auto topm = t.top_weight().as_t_monomial();
    if (!topm || topm->t_exp % 2 != 0)
        throw std::logic_error("expected an integral-weight sl2 module");
    for (int n = 0; n <= t.truncation(); ++n) {
        if (t.dim(n) == 0) continue;
        auto& e = t.action(Gen::E, n);
        if (!e) continue;
        size_t hw = e->kernel().size();
        if (hw) mult[topm->t_exp / 2 - n] += static_cast<int>(hw);
    }
    return mult;
}

HomBijectionReport hom_bijection_check(const GradedModule& m, const GradedModule& n,
                                       const Scalar& zdot) {
    HomBijectionReport rep;
    auto before = find_intertwiners(m, n);
    rep.dim_sl2 = before.size();

    GradedModule bt = build_B_tilde(zdot, std::min(m.truncation(), n.truncation()));
    GradedModule tm = tensor_with_B(m, bt), tn = tensor_with_B(n, bt);
    auto after = find_intertwiners(tm, tn);
    rep.dim_tensored = after.size();
    rep.dims_match = rep.dim_sl2 == rep.dim_tensored;

    // f (x) 1 must lie in the span of the solved basis
    rep.correspondence_ok = true;
    auto flatten = [&](const Intertwiner& phi) {
        Vec v;
        for (int d = 0; d <= tm.truncation(); ++d) {
            size_t rows = static_cast<size_t>(tn.dim(d + phi.shift));
            size_t cols = static_cast<size_t>(tm.dim(d));
            auto it = phi.maps.find(d);
            for (size_t i = 0; i < rows; ++i)
                for (size_t j = 0; j < cols; ++j)
                    v.push_back(it == phi.maps.end() ? Scalar() : it->second.at(i, j));
        }
        return v;
    };
    std::vector<Vec> span;
    for (auto& phi : after) span.push_back(flatten(phi));
    for (auto& f : before) {
        // build f (x) id_B blockwise on each tensor depth
        Intertwiner g;
        g.shift = f.shift;
        for (int d = 0; d <= tm.truncation(); ++d) {
            int td = d + g.shift;
            if (td < 0 || td > tn.truncation()) continue;
            Mat blockmap(static_cast<size_t>(tn.dim(td)), static_cast<size_t>(tm.dim(d)));
            Blocks src = blocks_at(m, bt, d), dst = blocks_at(n, bt, td);
            for (auto& [ad, off] : src.offs) {
                int bd = d - ad;
                int ad2 = ad + g.shift;  // f maps m-depth ad to n-depth ad+shift
                if (ad2 < 0 || n.dim(ad2) == 0) continue;
                auto fit = f.maps.find(ad);
                if (fit == f.maps.end()) continue;
                size_t doff = block_offset(dst, ad2);
                size_t rb = static_cast<size_t>(bt.dim(bd));
                size_t ca = static_cast<size_t>(m.dim(ad));
                size_t ra = static_cast<size_t>(n.dim(ad2));
                for (size_t i = 0; i < ra; ++i)
                    for (size_t ii = 0; ii < ca; ++ii)
                        for (size_t j = 0; j < rb; ++j)
                            blockmap.at(doff + i * rb + j, off + ii * rb + j) =
                                fit->second.at(i, ii);
            }
            g.maps[d] = std::move(blockmap);
        }
        if (!in_span(span, flatten(g))) rep.correspondence_ok = false;
    }
    return rep;
}

} // namespace schroq
