#include "schroq/verma.hpp"

#include "schroq/errors.hpp"

namespace schroq {

std::map<std::pair<int, int>, Scalar> hw_expand(const PBWElement& u,
                                                const Scalar& lambda,
                                                const Scalar& zdot) {
    std::map<std::pair<int, int>, Scalar> out;
    for (auto& [m, c] : u.terms()) {
        if (m.e > 0 || m.x > 0) continue;  // E v = X v = 0
        Scalar coef = c * lambda.pow(m.k) * zdot.pow(m.z);
        if (coef.is_zero()) continue;
        auto& slot = out[{m.y, m.f}];
        slot += coef;
        if (slot.is_zero()) out.erase({m.y, m.f});
    }
    return out;
}

GradedModule build_verma(const Weight& lambda, const Scalar& zdot, int N) {
    std::vector<int> dims(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) dims[static_cast<size_t>(n)] = verma_dim(n);
    GradedModule m(lambda, zdot, dims);
    for (Gen g : {Gen::E, Gen::X, Gen::Y, Gen::F}) {
        for (int n = 0; n <= N; ++n) {
            int t = n - gen_deg(g);
            if (t > N) continue;
            Mat mat(static_cast<size_t>(verma_dim(t)), static_cast<size_t>(verma_dim(n)));
            for (int l = 0; 2 * l <= n; ++l) {
                PBWExp basis;
                basis.y = n - 2 * l;
                basis.f = l;
                PBWElement img = lmul_gen(g, PBWElement(Scalar(1), basis));
                for (auto& [kl, coef] : hw_expand(img, lambda.value(), zdot)) {
                    auto [k2, l2] = kl;
                    if (k2 + 2 * l2 != t)
                        throw std::logic_error("graded action left its depth slice");
                    mat.at(verma_index(l2), verma_index(l)) = coef;
                }
            }
            m.set_action(g, n, std::move(mat));
        }
    }
    return m;
}

namespace {

// Eq-by-eq coefficient tables for the B-family, basis v_i at depth i.
Scalar b_coeff_X(const Scalar& zdot, int i) {
    // X v_i = -zdot (q^i - 1)/(q - 1) v_{i-1}
    return -zdot * (Scalar::q(i) - Scalar(1)) / (Scalar::q(1) - Scalar(1));
}

Scalar b_coeff_E(const Scalar& zdot, int i) {
    // E v_i = -zdot (q^i - 1)(q^{i-1} - 1) / (q^{i-2}(q^2 - 1)(q - 1)) v_{i-2}
    return -zdot * (Scalar::q(i) - Scalar(1)) * (Scalar::q(i - 1) - Scalar(1)) /
           (Scalar::q(i - 2) * (Scalar::q(2) - Scalar(1)) * (Scalar::q(1) - Scalar(1)));
}

GradedModule build_B_family(const Scalar& zdot, int N, bool with_sl2) {
    std::vector<int> dims(static_cast<size_t>(N) + 1, 1);
    GradedModule m(Weight::q_half_power(-1), zdot, dims);  // K v_0 = q^{-1/2} v_0
    auto one_by_one = [](const Scalar& s) {
        Mat mat(1, 1);
        mat.at(0, 0) = s;
        return mat;
    };
    for (int i = 0; i <= N; ++i) {
        if (i + 1 <= N) m.set_action(Gen::Y, i, one_by_one(Scalar(1)));  // Y v_i = v_{i+1}
        if (i >= 1) m.set_action(Gen::X, i, one_by_one(b_coeff_X(zdot, i)));
        else m.set_action(Gen::X, i, Mat(0, 1));  // X v_0 = 0 into the zero space
    }
    if (with_sl2) {
        Scalar fc = Scalar::t(1) / (zdot * (Scalar::q(1) + Scalar(1)));
        for (int i = 0; i <= N; ++i) {
            if (i + 2 <= N) m.set_action(Gen::F, i, one_by_one(fc));
            if (i >= 2) m.set_action(Gen::E, i, one_by_one(b_coeff_E(zdot, i)));
        }
    }
    return m;
}

} // namespace

GradedModule build_B(const Scalar& zdot, int N) {
    return build_B_family(zdot, N, /*with_sl2=*/false);
}

GradedModule build_B_tilde(const Scalar& zdot, int N) {
    if (zdot.is_zero())
        throw ZeroCentralCharge("the F-action on the lift divides by the central charge");
    return build_B_family(zdot, N, /*with_sl2=*/true);
}

GradedModule build_verma_sl2(const Weight& lambda, int N) {
    std::vector<int> dims(static_cast<size_t>(N) + 1, 0);
    for (int n = 0; n <= N; n += 2) dims[static_cast<size_t>(n)] = 1;
    GradedModule m(lambda, Scalar(), dims);  // lifted with Z = 0
    for (int n = 0; n <= N; n += 2) {
        int l = n / 2;
        if (n + 2 <= N) {
            Mat f(1, 1);
            f.at(0, 0) = Scalar(1);  // F: F^l v -> F^{l+1} v
            m.set_action(Gen::F, n, f);
        }
        if (l >= 1) {
            PBWExp basis;
            basis.f = l;
            PBWElement img = lmul_gen(Gen::E, PBWElement(Scalar(1), basis));
            Mat e(1, 1);
            for (auto& [kl, coef] : hw_expand(img, lambda.value(), Scalar())) {
                if (kl != std::pair<int, int>{0, l - 1})
                    throw std::logic_error("unexpected sl2 E-action term");
                e.at(0, 0) = coef;
            }
            m.set_action(Gen::E, n, e);
        }
    }
    return m;
}

GradedModule build_Lsl2_graded(int d, int sign, int N) {
    if (N < 2 * d + 2)
        throw std::logic_error("truncation too small for the finite-dimensional module");
    GradedModule verma = build_verma_sl2(Weight::q_half_power(2 * d, sign), N);
    std::vector<int> dims(static_cast<size_t>(N) + 1, 0);
    for (int n = 0; n <= 2 * d; n += 2) dims[static_cast<size_t>(n)] = 1;
    GradedModule m(Weight::q_half_power(2 * d, sign), Scalar(), dims);
    for (int n = 0; n <= 2 * d; n += 2) {
        if (n < 2 * d) m.set_action(Gen::F, n, *verma.action(Gen::F, n));
        else m.set_action(Gen::F, n, Mat(0, 1));  // F kills the lowest weight
        if (n >= 2) m.set_action(Gen::E, n, *verma.action(Gen::E, n));
    }
    return m;
}

GradedModule simple_quotient(const GradedModule& m) {
    int N = m.truncation();
    std::vector<GradedVec> singular;
    for (int n = 1; n <= N; ++n) {
        for (auto& v : highest_weight_vectors(m, n)) {
            GradedVec gv;
            gv.comps[n] = v;
            singular.push_back(std::move(gv));
        }
    }
    if (singular.empty()) return m;
    auto span = submodule_span(m, singular);

    // quotient coordinates: standard basis positions away from the pivots
    std::vector<std::vector<size_t>> keep(static_cast<size_t>(N) + 1);
    std::vector<Mat> red(static_cast<size_t>(N) + 1);  // rref of the span rows
    std::vector<std::vector<size_t>> piv(static_cast<size_t>(N) + 1);
    std::vector<int> qdims(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        size_t dim = static_cast<size_t>(m.dim(n));
        auto& rows = span[static_cast<size_t>(n)];
        Mat s(rows.size(), dim);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < dim; ++j) s.at(i, j) = rows[i][j];
        piv[static_cast<size_t>(n)] = s.rref();
        red[static_cast<size_t>(n)] = s;
        std::vector<bool> is_piv(dim, false);
        for (size_t c : piv[static_cast<size_t>(n)]) is_piv[c] = true;
        for (size_t j = 0; j < dim; ++j)
            if (!is_piv[j]) keep[static_cast<size_t>(n)].push_back(j);
        qdims[static_cast<size_t>(n)] = static_cast<int>(keep[static_cast<size_t>(n)].size());
    }
    auto project = [&](int n, Vec v) {
        // eliminate the pivot coordinates, then read off the kept ones
        auto& s = red[static_cast<size_t>(n)];
        auto& p = piv[static_cast<size_t>(n)];
        for (size_t r = 0; r < p.size(); ++r) {
            Scalar f = v[p[r]];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * s.at(r, j);
        }
        Vec out;
        for (size_t j : keep[static_cast<size_t>(n)]) out.push_back(v[j]);
        return out;
    };

    GradedModule q(m.top_weight(), m.central_charge(), qdims);
    for (Gen g : {Gen::E, Gen::X, Gen::Y, Gen::F}) {
        for (int n = 0; n <= N; ++n) {
            int t = n - gen_deg(g);
            if (t > N) continue;
            size_t rows = static_cast<size_t>(q.dim(t)), cols = static_cast<size_t>(q.dim(n));
            Mat mat(rows, cols);
            const Mat& big = *m.action(g, n);
            for (size_t jc = 0; jc < cols; ++jc) {
                size_t j = keep[static_cast<size_t>(n)][jc];
                Vec col(static_cast<size_t>(m.dim(n)));
                col[j] = Scalar(1);
                Vec img = big.apply(col);
                if (t < 0) continue;
                Vec pr = project(t, img);
                for (size_t i = 0; i < rows; ++i) mat.at(i, jc) = pr[i];
            }
            q.set_action(g, n, std::move(mat));
        }
    }
    return q;
}

ReducibilityVerdict reducibility_verdict(const Weight& lambda, const Scalar& zdot,
                                         int N) {
    if (zdot.is_zero())
        throw ZeroCentralCharge("reducibility analysis assumes nonzero central charge");
    GradedModule m = build_verma(lambda, zdot, N);
    for (int n = 1; n <= N; ++n) {
        if (!highest_weight_vectors(m, n).empty()) {
            ReducibilityVerdict v;
            v.reducible = true;
            v.singular_depth = n;
            v.singular_weight = Weight(m.weight_at(n));
            return v;
        }
    }
    return {};
}

} // namespace schroq
