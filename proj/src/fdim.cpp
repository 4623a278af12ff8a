#include "schroq/fdim.hpp"

#include <json.hpp>

#include "schroq/errors.hpp"
#include "schroq/tensorfun.hpp"

namespace schroq {

int fd_shift(Gen g) {
    switch (g) {
        case Gen::E: return 2;
        case Gen::F: return -2;
        case Gen::X: return 1;
        case Gen::Y: return -1;
        default: return 0;
    }
}

int FdModule::dim(int m) const {
    auto it = dims.find(m);
    return it == dims.end() ? 0 : it->second;
}

int FdModule::total_dim() const {
    int s = 0;
    for (auto& [m, d] : dims) s += d;
    return s;
}

int FdModule::min_exp() const { return dims.empty() ? 0 : dims.begin()->first; }
int FdModule::max_exp() const { return dims.empty() ? 0 : dims.rbegin()->first; }

Mat FdModule::action(Gen g, int m) const {
    size_t rows = static_cast<size_t>(dim(m + fd_shift(g)));
    size_t cols = static_cast<size_t>(dim(m));
    if (g == Gen::K || g == Gen::Kinv) {
        Scalar c = Scalar::q(g == Gen::K ? m : -m);
        Mat d(rows, cols);
        for (size_t i = 0; i < cols; ++i) d.at(i, i) = c;
        return d;
    }
    if (g == Gen::Z) return Mat(rows, cols);
    auto it = maps.find({g, m});
    return it == maps.end() ? Mat(rows, cols) : it->second;
}

void FdModule::set_action(Gen g, int m, Mat mat) {
    if (mat.rows() != static_cast<size_t>(dim(m + fd_shift(g))) ||
        mat.cols() != static_cast<size_t>(dim(m)))
        throw std::logic_error("action matrix shape mismatch");
    maps[{g, m}] = std::move(mat);
}

FdVec fd_basis(int m, size_t index, size_t dim) {
    FdVec v;
    Vec x(dim);
    x[index] = Scalar(1);
    v[m] = std::move(x);
    return v;
}

void fd_add(FdVec& v, int m, const Vec& x) {
    auto it = v.find(m);
    if (it == v.end()) {
        bool nz = false;
        for (auto& c : x)
            if (!c.is_zero()) { nz = true; break; }
        if (nz) v[m] = x;
        return;
    }
    bool nz = false;
    for (size_t i = 0; i < x.size(); ++i) {
        it->second[i] += x[i];
        if (!it->second[i].is_zero()) nz = true;
    }
    if (!nz) v.erase(it);
}

FdVec fd_scale(const Scalar& c, const FdVec& v) {
    FdVec out;
    if (c.is_zero()) return out;
    for (auto& [m, x] : v) {
        Vec y(x.size());
        for (size_t i = 0; i < x.size(); ++i) y[i] = c * x[i];
        out[m] = std::move(y);
    }
    return out;
}

FdVec fd_sub(const FdVec& a, const FdVec& b) {
    FdVec out = a;
    for (auto& [m, x] : b) {
        Vec y(x.size());
        for (size_t i = 0; i < x.size(); ++i) y[i] = -x[i];
        fd_add(out, m, y);
    }
    return out;
}

FdVec fd_act_gen(const FdModule& V, Gen g, const FdVec& v) {
    FdVec out;
    for (auto& [m, x] : v) {
        int tm = m + fd_shift(g);
        if (V.dim(tm) == 0) continue;
        fd_add(out, tm, V.action(g, m).apply(x));
    }
    return out;
}

FdVec fd_act(const FdModule& V, const PBWElement& u, const FdVec& v) {
    FdVec out;
    for (auto& [mono, c] : u.terms()) {
        if (mono.z > 0) continue;  // Z acts as zero
        FdVec cur = v;
        for (int i = 0; i < mono.e; ++i) cur = fd_act_gen(V, Gen::E, cur);
        for (int i = 0; i < mono.x; ++i) cur = fd_act_gen(V, Gen::X, cur);
        for (int i = 0; i < std::abs(mono.k); ++i)
            cur = fd_act_gen(V, mono.k > 0 ? Gen::K : Gen::Kinv, cur);
        for (int i = 0; i < mono.f; ++i) cur = fd_act_gen(V, Gen::F, cur);
        for (int i = 0; i < mono.y; ++i) cur = fd_act_gen(V, Gen::Y, cur);
        for (auto& [m, x] : fd_scale(c, cur)) fd_add(out, m, x);
    }
    return out;
}

namespace {

Mat fd_side_matrix(const FdModule& V,
                   const std::vector<std::pair<Scalar, std::vector<Gen>>>& side,
                   int m, int shift) {
    Mat out(static_cast<size_t>(V.dim(m + shift)), static_cast<size_t>(V.dim(m)));
    for (auto& [c, word] : side) {
        Mat cur = Mat::identity(static_cast<size_t>(V.dim(m)));
        int cm = m;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            cur = V.action(*it, cm) * cur;
            cm += fd_shift(*it);
        }
        out = out + c * cur;
    }
    return out;
}

int word_shift(const std::vector<std::pair<Scalar, std::vector<Gen>>>& side) {
    if (side.empty() || side[0].second.empty()) return 0;
    int s = 0;
    for (Gen g : side[0].second) s += fd_shift(g);
    return s;
}

} // namespace

std::vector<RelationCheck> fd_check_relations(const FdModule& V) {
    std::vector<RelationCheck> out;
    for (const Relation& rel : defining_relations()) {
        RelationCheck rc{rel.name, true, ""};
        int shift = word_shift(rel.lhs.empty() ? rel.rhs : rel.lhs);
        for (int m = V.min_exp(); m <= V.max_exp(); ++m) {
            if (V.dim(m) == 0) continue;
            Mat l = fd_side_matrix(V, rel.lhs, m, shift);
            Mat r = fd_side_matrix(V, rel.rhs, m, shift);
            if (!(l == r)) {
                rc.pass = false;
                rc.detail = "mismatch on weight q^" + std::to_string(m);
                break;
            }
        }
        out.push_back(std::move(rc));
    }
    return out;
}

bool fd_relations_ok(const FdModule& V) {
    for (auto& rc : fd_check_relations(V))
        if (!rc.pass) return false;
    return true;
}

FdModule build_L(int i) {
    FdModule V;
    for (int s = 0; s <= i; ++s) V.dims[i - 2 * s] = 1;
    for (int s = 0; s < i; ++s) {
        Mat f(1, 1);
        f.at(0, 0) = Scalar(1);
        V.set_action(Gen::F, i - 2 * s, std::move(f));
        Mat e(1, 1);
        e.at(0, 0) = qint(s + 1) * qint(i - s);
        V.set_action(Gen::E, i - 2 * (s + 1), std::move(e));
    }
    return V;
}

FdModule quantum_plane_L1() {
    FdModule V;
    V.dims[1] = V.dims[-1] = 1;
    Mat f(1, 1);
    f.at(0, 0) = Scalar(1);  // F X = Y
    V.set_action(Gen::F, 1, std::move(f));
    Mat e(1, 1);
    e.at(0, 0) = Scalar(1);  // E Y = X
    V.set_action(Gen::E, -1, std::move(e));
    return V;
}

namespace {

// Block layout of weight space m in a tensor product: (a-exponent, offset,
// a-dim, b-dim), ordered by decreasing a-exponent, row-major within a block.
struct FdBlocks {
    std::vector<std::tuple<int, size_t, size_t, size_t>> offs;
    size_t total = 0;
};

FdBlocks fd_blocks(const FdModule& a, const FdModule& b, int m) {
    FdBlocks out;
    for (int ma = a.max_exp(); ma >= a.min_exp(); --ma) {
        size_t da = static_cast<size_t>(a.dim(ma));
        size_t db = static_cast<size_t>(b.dim(m - ma));
        if (da == 0 || db == 0) continue;
        out.offs.emplace_back(ma, out.total, da, db);
        out.total += da * db;
    }
    return out;
}

} // namespace

size_t fd_tensor_offset(const FdModule& a, const FdModule& b, int m, int ma) {
    for (auto& [x, off, da, db] : fd_blocks(a, b, m).offs)
        if (x == ma) return off;
    throw std::logic_error("missing tensor block");
}

FdModule fd_tensor(const FdModule& a, const FdModule& b) {
    FdModule t;
    int lo = a.min_exp() + b.min_exp(), hi = a.max_exp() + b.max_exp();
    for (int m = lo; m <= hi; ++m) {
        size_t d = fd_blocks(a, b, m).total;
        if (d) t.dims[m] = static_cast<int>(d);
    }
    const auto& table = delta_table(DeltaVariant::Sl2Prime);
    for (Gen g : {Gen::E, Gen::F}) {
        int shift = fd_shift(g);
        for (int m = lo; m <= hi; ++m) {
            if (t.dim(m) == 0 || t.dim(m + shift) == 0) continue;
            FdBlocks src = fd_blocks(a, b, m), dst = fd_blocks(a, b, m + shift);
            Mat mat(dst.total, src.total);
            for (auto& [u, w] : table.at(g)) {
                int su = u ? fd_shift(*u) : 0, sw = shift - su;
                for (auto& [ma, off, da, db] : src.offs) {
                    int mb = m - ma, ma2 = ma + su, mb2 = mb + sw;
                    size_t ra = static_cast<size_t>(a.dim(ma2));
                    size_t rb = static_cast<size_t>(b.dim(mb2));
                    if (ra == 0 || rb == 0) continue;
                    Mat Au = u ? a.action(*u, ma) : Mat::identity(da);
                    Mat Bw = w ? b.action(*w, mb) : Mat::identity(db);
                    size_t doff = fd_tensor_offset(a, b, m + shift, ma2);
                    for (size_t i = 0; i < ra; ++i)
                        for (size_t ii = 0; ii < da; ++ii) {
                            if (Au.at(i, ii).is_zero()) continue;
                            for (size_t j = 0; j < rb; ++j)
                                for (size_t jj = 0; jj < db; ++jj) {
                                    if (Bw.at(j, jj).is_zero()) continue;
                                    mat.at(doff + i * rb + j, off + ii * db + jj) +=
                                        Au.at(i, ii) * Bw.at(j, jj);
                                }
                        }
                }
            }
            t.set_action(g, m, std::move(mat));
        }
    }
    return t;
}

FdVec FdMap::apply(const FdVec& v) const {
    FdVec out;
    for (auto& [m, x] : v) {
        auto it = maps.find(m);
        if (it == maps.end()) continue;
        fd_add(out, m, it->second.apply(x));
    }
    return out;
}

Vec FdMap::column(int m, size_t j, size_t target_dim) const {
    auto it = maps.find(m);
    if (it == maps.end()) return Vec(target_dim);
    Vec out(target_dim);
    for (size_t i = 0; i < target_dim; ++i) out[i] = it->second.at(i, j);
    return out;
}

FdMap hw_embedding(const FdModule& T, int j, const Vec& w0) {
    FdMap phi;
    Vec w = w0;
    for (int s = 0; s <= j; ++s) {
        int m = j - 2 * s;
        Mat col(static_cast<size_t>(T.dim(m)), 1);
        for (size_t i = 0; i < w.size(); ++i) col.at(i, 0) = w[i];
        phi.maps[m] = std::move(col);
        if (s < j) w = T.action(Gen::F, m).apply(w);
    }
    return phi;
}

namespace {

Mat fd_map_at(const FdMap& f, int m, const FdModule& src, const FdModule& dst) {
    auto it = f.maps.find(m);
    if (it != f.maps.end()) return it->second;
    return Mat(static_cast<size_t>(dst.dim(m)), static_cast<size_t>(src.dim(m)));
}

} // namespace

namespace {

bool fd_intertwines_gens(const FdModule& src, const FdModule& dst, const FdMap& f,
                         std::initializer_list<Gen> gens) {
    int lo = std::min(src.min_exp(), dst.min_exp());
    int hi = std::max(src.max_exp(), dst.max_exp());
    for (Gen g : gens) {
        int s = fd_shift(g);
        for (int m = lo; m <= hi; ++m) {
            Mat lhs = fd_map_at(f, m + s, src, dst) * src.action(g, m);
            Mat rhs = dst.action(g, m) * fd_map_at(f, m, src, dst);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

} // namespace

bool fd_intertwines(const FdModule& src, const FdModule& dst, const FdMap& f) {
    return fd_intertwines_gens(src, dst, f, {Gen::E, Gen::F, Gen::X, Gen::Y});
}

bool fd_intertwines_sl2(const FdModule& src, const FdModule& dst, const FdMap& f) {
    return fd_intertwines_gens(src, dst, f, {Gen::E, Gen::F});
}

CgEmbeddings cg_embeddings(int i) {
    CgEmbeddings out;
    FdModule l1 = build_L(1), li = build_L(i);
    out.tensor = fd_tensor(l1, li);
    {
        Vec w0(static_cast<size_t>(out.tensor.dim(i + 1)));
        w0[fd_tensor_offset(l1, li, i + 1, 1)] = Scalar(1);  // X (x) v_i
        out.up = hw_embedding(out.tensor, i + 1, w0);
    }
    if (i >= 1) {
        Vec w0(static_cast<size_t>(out.tensor.dim(i - 1)));
        w0[fd_tensor_offset(l1, li, i - 1, 1)] = -Scalar::q(-1);  // X (x) F v_i
        w0[fd_tensor_offset(l1, li, i - 1, -1)] = qint(i);        // Y (x) v_i
        out.down = hw_embedding(out.tensor, i - 1, w0);
    }
    return out;
}

FdMap pair_with_quantum_plane(const FdMap& theta, const FdModule& Li,
                              const FdModule& V) {
    FdModule l1 = build_L(1);
    FdMap out;
    int lo = Li.min_exp() - 1, hi = Li.max_exp() + 1;
    for (int m = lo; m <= hi; ++m) {
        FdBlocks blk = fd_blocks(l1, Li, m);
        if (blk.total == 0) continue;
        Mat mat(static_cast<size_t>(V.dim(m)), blk.total);
        for (auto& [ma, off, da, db] : blk.offs) {
            int mb = m - ma;
            // the a-factor is X for exponent +1 and Y for exponent -1
            Mat img = V.action(ma == 1 ? Gen::X : Gen::Y, mb) *
                      fd_map_at(theta, mb, Li, V);
            for (size_t r = 0; r < img.rows(); ++r)
                for (size_t c = 0; c < db; ++c) mat.at(r, off + c) = img.at(r, c);
        }
        out.maps[m] = std::move(mat);
    }
    return out;
}

std::vector<FdMap> hom_basis(const FdModule& V, int i) {
    std::vector<FdMap> out;
    for (const Vec& w : V.action(Gen::E, i).kernel())
        out.push_back(hw_embedding(V, i, w));
    return out;
}

namespace {

int qdim(const QuiverRep& rep, int i) {
    return i >= 0 && i < static_cast<int>(rep.dims.size())
               ? rep.dims[static_cast<size_t>(i)]
               : 0;
}

Mat qa(const QuiverRep& rep, int i) {
    if (i >= 0 && i < static_cast<int>(rep.a.size())) return rep.a[static_cast<size_t>(i)];
    return Mat(static_cast<size_t>(qdim(rep, i + 1)), static_cast<size_t>(qdim(rep, i)));
}

Mat qb(const QuiverRep& rep, int i) {
    if (i >= 0 && i < static_cast<int>(rep.b.size())) return rep.b[static_cast<size_t>(i)];
    return Mat(static_cast<size_t>(qdim(rep, i)), static_cast<size_t>(qdim(rep, i + 1)));
}

std::string first_entry(const Mat& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero())
                return "entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") = " + m.at(i, j).str();
    return "";
}

} // namespace

std::vector<RelationCheck> quiver_relation_check(const QuiverRep& rep) {
    std::vector<RelationCheck> out;
    int nv = static_cast<int>(rep.dims.size());
    {
        Mat d = qb(rep, 0) * qa(rep, 0);
        out.push_back({"b0 a0 = 0", d.is_zero(), d.is_zero() ? "" : first_entry(d)});
    }
    // the last case uses the zero maps beyond the stored vertices
    for (int i = 0; i + 1 < nv; ++i) {
        Mat d = qa(rep, i) * qb(rep, i) - qb(rep, i + 1) * qa(rep, i + 1);
        std::string name = "a" + std::to_string(i) + " b" + std::to_string(i) +
                           " = b" + std::to_string(i + 1) + " a" + std::to_string(i + 1);
        out.push_back({std::move(name), d.is_zero(), d.is_zero() ? "" : first_entry(d)});
    }
    return out;
}

bool quiver_rep_ok(const QuiverRep& rep) {
    for (auto& rc : quiver_relation_check(rep))
        if (!rc.pass) return false;
    return true;
}

namespace {

// Block layout of weight space m in the glued module: (vertex i, offset),
// increasing i with i >= |m| and i = m mod 2.
std::vector<std::pair<int, size_t>> glue_blocks(const std::vector<int>& dims, int m) {
    std::vector<std::pair<int, size_t>> out;
    size_t off = 0;
    for (int i = std::abs(m); i < static_cast<int>(dims.size()); i += 2) {
        if (dims[static_cast<size_t>(i)] == 0) continue;
        out.emplace_back(i, off);
        off += static_cast<size_t>(dims[static_cast<size_t>(i)]);
    }
    return out;
}

size_t glue_offset(const std::vector<int>& dims, int m, int i) {
    for (auto& [v, off] : glue_blocks(dims, m))
        if (v == i) return off;
    throw std::logic_error("missing glue block");
}

void put_block(Mat& mat, size_t r0, size_t c0, const Scalar& coeff, const Mat& g) {
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = 0; j < g.cols(); ++j)
            if (!g.at(i, j).is_zero()) mat.at(r0 + i, c0 + j) += coeff * g.at(i, j);
}

} // namespace

FdModule quiver_to_module(const QuiverRep& rep) {
    for (auto& rc : quiver_relation_check(rep))
        if (!rc.pass)
            throw RelationViolation("quiver relation fails: " + rc.relation +
                                    (rc.detail.empty() ? "" : " (" + rc.detail + ")"));
    FdModule V;
    int top = static_cast<int>(rep.dims.size()) - 1;
    for (int m = -top; m <= top; ++m) {
        size_t d = 0;
        for (auto& [i, off] : glue_blocks(rep.dims, m))
            d = off + static_cast<size_t>(qdim(rep, i));
        if (d) V.dims[m] = static_cast<int>(d);
    }
    for (Gen g : {Gen::E, Gen::F, Gen::X, Gen::Y}) {
        int shift = fd_shift(g);
        for (int m = -top; m <= top; ++m) {
            if (V.dim(m) == 0 || V.dim(m + shift) == 0) continue;
            Mat mat(static_cast<size_t>(V.dim(m + shift)), static_cast<size_t>(V.dim(m)));
            for (auto& [i, off] : glue_blocks(rep.dims, m)) {
                int s = (i - m) / 2;
                size_t di = static_cast<size_t>(qdim(rep, i));
                Mat id = Mat::identity(di);
                switch (g) {
                    case Gen::E:
                        if (s > 0)
                            put_block(mat, glue_offset(rep.dims, m + 2, i), off,
                                      qint(s) * qint(i + 1 - s), id);
                        break;
                    case Gen::F:
                        if (s < i)
                            put_block(mat, glue_offset(rep.dims, m - 2, i), off,
                                      Scalar(1), id);
                        break;
                    case Gen::X:
                        if (qdim(rep, i + 1) > 0)
                            put_block(mat, glue_offset(rep.dims, m + 1, i + 1), off,
                                      Scalar::q(s) * qint(i + 1 - s) / qint(i + 1),
                                      qa(rep, i));
                        if (s > 0 && qdim(rep, i - 1) > 0)
                            put_block(mat, glue_offset(rep.dims, m + 1, i - 1), off,
                                      -Scalar::q(s - i) * qint(s) / qint(i + 1),
                                      qb(rep, i - 1));
                        break;
                    case Gen::Y:
                        if (s < i && qdim(rep, i - 1) > 0)
                            put_block(mat, glue_offset(rep.dims, m - 1, i - 1), off,
                                      Scalar::q(1) / qint(i + 1), qb(rep, i - 1));
                        if (qdim(rep, i + 1) > 0)
                            put_block(mat, glue_offset(rep.dims, m - 1, i + 1), off,
                                      qint(i + 1).inverse(), qa(rep, i));
                        break;
                    default: break;
                }
            }
            V.set_action(g, m, std::move(mat));
        }
    }
    return V;
}

namespace {

// Highest weight vectors of each integer weight, as column matrices.
std::vector<Mat> hom_kernels(const FdModule& V, int imax) {
    std::vector<Mat> out;
    for (int i = 0; i <= imax; ++i) {
        std::vector<Vec> ker = V.action(Gen::E, i).kernel();
        Mat cols(static_cast<size_t>(V.dim(i)), ker.size());
        for (size_t j = 0; j < ker.size(); ++j)
            for (size_t r = 0; r < ker[j].size(); ++r) cols.at(r, j) = ker[j][r];
        out.push_back(std::move(cols));
    }
    return out;
}

// Coordinates of the columns of u in the column span of basis.
Mat coords_in(const Mat& basis, const Mat& u) {
    Mat out(basis.cols(), u.cols());
    for (size_t j = 0; j < u.cols(); ++j) {
        Vec col(u.rows());
        for (size_t i = 0; i < u.rows(); ++i) col[i] = u.at(i, j);
        auto x = basis.solve(col);
        if (!x) throw std::logic_error("vector outside the highest weight span");
        for (size_t i = 0; i < x->size(); ++i) out.at(i, j) = (*x)[i];
    }
    return out;
}

} // namespace

QuiverRep module_to_quiver(const FdModule& V) {
    QuiverRep rep;
    int imax = std::max(0, V.max_exp());
    std::vector<Mat> ker = hom_kernels(V, imax);
    for (int i = 0; i <= imax; ++i)
        rep.dims.push_back(static_cast<int>(ker[static_cast<size_t>(i)].cols()));
    for (int i = 0; i < imax; ++i) {
        const Mat& w = ker[static_cast<size_t>(i)];
        const Mat& wn = ker[static_cast<size_t>(i + 1)];
        rep.a.push_back(coords_in(wn, V.action(Gen::X, i) * w));
        Mat img = qint(i + 1) * (V.action(Gen::Y, i + 1) * wn) -
                  Scalar::q(-1) * (V.action(Gen::X, i - 1) * (V.action(Gen::F, i + 1) * wn));
        rep.b.push_back(coords_in(w, img));
    }
    return rep;
}

FdMap quiver_map_to_module_map(const QuiverRep& src, const QuiverRep& dst,
                               const std::vector<Mat>& g) {
    FdModule Vs = quiver_to_module(src), Vd = quiver_to_module(dst);
    FdMap out;
    int top = std::max(static_cast<int>(src.dims.size()),
                       static_cast<int>(dst.dims.size())) - 1;
    for (int m = -top; m <= top; ++m) {
        if (Vs.dim(m) == 0 && Vd.dim(m) == 0) continue;
        Mat mat(static_cast<size_t>(Vd.dim(m)), static_cast<size_t>(Vs.dim(m)));
        for (auto& [i, off] : glue_blocks(src.dims, m)) {
            if (qdim(dst, i) == 0) continue;
            put_block(mat, glue_offset(dst.dims, m, i), off, Scalar(1),
                      g[static_cast<size_t>(i)]);
        }
        out.maps[m] = std::move(mat);
    }
    return out;
}

std::vector<Mat> module_map_to_quiver_map(const FdModule& src, const FdModule& dst,
                                          const FdMap& f) {
    int imax = std::max(0, std::max(src.max_exp(), dst.max_exp()));
    std::vector<Mat> ks = hom_kernels(src, imax), kd = hom_kernels(dst, imax);
    std::vector<Mat> out;
    for (int i = 0; i <= imax; ++i)
        out.push_back(coords_in(kd[static_cast<size_t>(i)],
                                fd_map_at(f, i, src, dst) * ks[static_cast<size_t>(i)]));
    return out;
}

namespace {

// Solution basis of the vertex-map system phi_{i+1} A_i = A'_i phi_i,
// phi_i B_i = B'_i phi_{i+1} over padded dims d (shared by both reps).
std::vector<Vec> morphism_space(const QuiverRep& src, const QuiverRep& dst,
                                const std::vector<int>& d) {
    int n = static_cast<int>(d.size());
    std::vector<size_t> base(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        base[static_cast<size_t>(i) + 1] =
            base[static_cast<size_t>(i)] +
            static_cast<size_t>(d[static_cast<size_t>(i)]) *
                static_cast<size_t>(d[static_cast<size_t>(i)]);
    size_t unknowns = base.back();
    auto idx = [&](int i, size_t r, size_t c) {
        return base[static_cast<size_t>(i)] +
               r * static_cast<size_t>(d[static_cast<size_t>(i)]) + c;
    };
    std::vector<Vec> rows;
    for (int i = 0; i + 1 < n; ++i) {
        size_t di = static_cast<size_t>(d[static_cast<size_t>(i)]);
        size_t dn = static_cast<size_t>(d[static_cast<size_t>(i) + 1]);
        Mat A = qa(src, i), Ap = qa(dst, i), B = qb(src, i), Bp = qb(dst, i);
        // phi_{i+1} A_i - A'_i phi_i = 0
        for (size_t r = 0; r < dn; ++r)
            for (size_t c = 0; c < di; ++c) {
                Vec row(unknowns);
                for (size_t k = 0; k < dn; ++k) row[idx(i + 1, r, k)] += A.at(k, c);
                for (size_t k = 0; k < di; ++k) row[idx(i, k, c)] -= Ap.at(r, k);
                rows.push_back(std::move(row));
            }
        // phi_i B_i - B'_i phi_{i+1} = 0
        for (size_t r = 0; r < di; ++r)
            for (size_t c = 0; c < dn; ++c) {
                Vec row(unknowns);
                for (size_t k = 0; k < di; ++k) row[idx(i, r, k)] += B.at(k, c);
                for (size_t k = 0; k < dn; ++k) row[idx(i + 1, k, c)] -= Bp.at(r, k);
                rows.push_back(std::move(row));
            }
    }
    if (rows.empty()) {
        std::vector<Vec> all;
        for (size_t j = 0; j < unknowns; ++j) {
            Vec v(unknowns);
            v[j] = Scalar(1);
            all.push_back(std::move(v));
        }
        return all;
    }
    Mat M(rows.size(), unknowns);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < unknowns; ++j) M.at(i, j) = rows[i][j];
    return M.kernel();
}

std::vector<Mat> unpack_vertex_maps(const Vec& x, const std::vector<int>& d) {
    std::vector<Mat> out;
    size_t pos = 0;
    for (int di : d) {
        Mat m(static_cast<size_t>(di), static_cast<size_t>(di));
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = x[pos++];
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace

std::vector<Mat> roundtrip_iso(const QuiverRep& rep) {
    QuiverRep back = module_to_quiver(quiver_to_module(rep));
    int n = std::max(static_cast<int>(rep.dims.size()),
                     static_cast<int>(back.dims.size()));
    std::vector<int> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (qdim(rep, i) != qdim(back, i))
            throw NoIsoFound("vertex dimensions differ at vertex " + std::to_string(i));
        d[static_cast<size_t>(i)] = qdim(rep, i);
    }
    // fast path: the canonical bases usually reproduce the rep on the nose
    bool equal = true;
    for (int i = 0; equal && i + 1 < n; ++i)
        equal = qa(rep, i) == qa(back, i) && qb(rep, i) == qb(back, i);
    if (equal) {
        std::vector<Mat> id;
        for (int di : d) id.push_back(Mat::identity(static_cast<size_t>(di)));
        return id;
    }
    std::vector<Vec> sol = morphism_space(rep, back, d);
    auto invertible = [&](const std::vector<Mat>& phi) {
        for (size_t i = 0; i < phi.size(); ++i)
            if (phi[i].rank() != phi[i].rows()) return false;
        return true;
    };
    for (const Vec& x : sol) {
        auto phi = unpack_vertex_maps(x, d);
        if (invertible(phi)) return phi;
    }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int attempt = 0; attempt < 200 && !sol.empty(); ++attempt) {
        Vec x(sol[0].size());
        for (const Vec& s : sol) {
            Scalar c(coeff(rng));
            for (size_t j = 0; j < x.size(); ++j) x[j] += c * s[j];
        }
        auto phi = unpack_vertex_maps(x, d);
        if (invertible(phi)) return phi;
    }
    throw NoIsoFound("no invertible vertex maps in the morphism space");
}

QuiverRep random_quiver_rep(std::mt19937& rng, int max_vertices, int max_dim) {
    std::uniform_int_distribution<int> dimdist(0, max_dim);
    std::uniform_int_distribution<int> entry(-2, 2);
    QuiverRep rep;
    do {
        rep.dims.clear();
        int nv = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_vertices));
        for (int i = 0; i < nv; ++i) rep.dims.push_back(dimdist(rng));
    } while (std::all_of(rep.dims.begin(), rep.dims.end(), [](int d) { return d == 0; }));
    int nv = static_cast<int>(rep.dims.size());
    rep.a.clear();
    for (int i = 0; i + 1 < nv; ++i) {
        Mat A(static_cast<size_t>(qdim(rep, i + 1)), static_cast<size_t>(qdim(rep, i)));
        for (size_t r = 0; r < A.rows(); ++r)
            for (size_t c = 0; c < A.cols(); ++c) A.at(r, c) = Scalar(entry(rng));
        rep.a.push_back(std::move(A));
    }
    // the backward maps solve a linear system: b0 a0 = 0 and
    // a_i b_i = b_{i+1} a_{i+1} with zero maps beyond the last vertex
    std::vector<size_t> base(static_cast<size_t>(nv), 0);
    size_t unknowns = 0;
    for (int i = 0; i + 1 < nv; ++i) {
        base[static_cast<size_t>(i)] = unknowns;
        unknowns += static_cast<size_t>(qdim(rep, i)) * static_cast<size_t>(qdim(rep, i + 1));
    }
    auto idx = [&](int i, size_t r, size_t c) {
        return base[static_cast<size_t>(i)] + r * static_cast<size_t>(qdim(rep, i + 1)) + c;
    };
    std::vector<Vec> rows;
    {
        // b0 a0 = 0
        size_t d0 = static_cast<size_t>(qdim(rep, 0));
        size_t d1 = static_cast<size_t>(qdim(rep, 1));
        for (size_t r = 0; r < d0 && nv > 1; ++r)
            for (size_t c = 0; c < d0; ++c) {
                Vec row(unknowns);
                for (size_t k = 0; k < d1; ++k) row[idx(0, r, k)] += qa(rep, 0).at(k, c);
                rows.push_back(std::move(row));
            }
    }
    for (int i = 0; i + 1 < nv; ++i) {
        size_t dn = static_cast<size_t>(qdim(rep, i + 1));
        size_t di = static_cast<size_t>(qdim(rep, i));
        size_t dn2 = static_cast<size_t>(qdim(rep, i + 2));
        for (size_t r = 0; r < dn; ++r)
            for (size_t c = 0; c < dn; ++c) {
                Vec row(unknowns);
                for (size_t k = 0; k < di; ++k)
                    row[idx(i, k, c)] += qa(rep, i).at(r, k);
                for (size_t k = 0; k < dn2; ++k)
                    row[idx(i + 1, r, k)] -= qa(rep, i + 1).at(k, c);
                bool nz = false;
                for (auto& s : row)
                    if (!s.is_zero()) { nz = true; break; }
                if (nz) rows.push_back(std::move(row));
            }
    }
    Vec x(unknowns);
    if (unknowns > 0) {
        std::vector<Vec> sol;
        if (rows.empty()) {
            for (size_t j = 0; j < unknowns; ++j) {
                Vec v(unknowns);
                v[j] = Scalar(1);
                sol.push_back(std::move(v));
            }
        } else {
            Mat M(rows.size(), unknowns);
            for (size_t i = 0; i < rows.size(); ++i)
                for (size_t j = 0; j < unknowns; ++j) M.at(i, j) = rows[i][j];
            sol = M.kernel();
        }
        for (const Vec& s : sol) {
            Scalar c(entry(rng));
            for (size_t j = 0; j < unknowns; ++j) x[j] += c * s[j];
        }
    }
    rep.b.clear();
    for (int i = 0; i + 1 < nv; ++i) {
        Mat B(static_cast<size_t>(qdim(rep, i)), static_cast<size_t>(qdim(rep, i + 1)));
        for (size_t r = 0; r < B.rows(); ++r)
            for (size_t c = 0; c < B.cols(); ++c) B.at(r, c) = x[idx(i, r, c)];
        rep.b.push_back(std::move(B));
    }
    return rep;
}

std::vector<Mat> random_quiver_endomorphism(const QuiverRep& rep, std::mt19937& rng) {
    std::vector<int> d(rep.dims.begin(), rep.dims.end());
    std::vector<Vec> sol = morphism_space(rep, rep, d);
    std::uniform_int_distribution<int> coeff(-2, 2);
    Vec x;
    if (!sol.empty()) {
        x = Vec(sol[0].size());
        for (const Vec& s : sol) {
            Scalar c(coeff(rng));
            for (size_t j = 0; j < x.size(); ++j) x[j] += c * s[j];
        }
    }
    return unpack_vertex_maps(x, d);
}

namespace {

// Formal calculus on the glued basis: a state is a linear combination of
// (vertex j, power s, word of arrows applied to the hom symbol), with words
// reduced by the quiver relations. Arrows: ('a', p): p -> p+1, ('b', p):
// p+1 -> p; a word lists arrows in application order.
using FWord = std::vector<std::pair<char, int>>;
using FKey = std::tuple<int, int, FWord>;
using FState = std::map<FKey, Scalar>;

void f_add(FState& st, int j, int s, FWord w, const Scalar& c) {
    if (c.is_zero()) return;
    if (w.size() == 2) {
        if (w[0].first == 'b' && w[1].first == 'a' && w[0].second == w[1].second) {
            int p = w[0].second;  // a_p b_p = b_{p+1} a_{p+1}
            w = {{'a', p + 1}, {'b', p + 1}};
        }
        if (w[0] == std::pair{'a', 0} && w[1] == std::pair{'b', 0}) return;  // b0 a0 = 0
    }
    FKey k{j, s, std::move(w)};
    auto& slot = st[k];
    slot += c;
    if (slot.is_zero()) st.erase(k);
}

FState f_apply_gen(char op, const FState& st) {
    FState out;
    for (auto& [k, c] : st) {
        auto& [j, s, w] = k;
        switch (op) {
            case 'E':
                if (s > 0) f_add(out, j, s - 1, w, c * qint(s) * qint(j + 1 - s));
                break;
            case 'F':
                if (s < j) f_add(out, j, s + 1, w, c);
                break;
            case 'K': f_add(out, j, s, w, c * Scalar::q(j - 2 * s)); break;
            case 'k': f_add(out, j, s, w, c * Scalar::q(2 * s - j)); break;
            case 'X': {
                FWord up = w;
                up.emplace_back('a', j);
                f_add(out, j + 1, s, std::move(up),
                      c * Scalar::q(s) * qint(j + 1 - s) / qint(j + 1));
                if (s > 0) {
                    FWord dn = w;
                    dn.emplace_back('b', j - 1);
                    f_add(out, j - 1, s - 1, std::move(dn),
                          -c * Scalar::q(s - j) * qint(s) / qint(j + 1));
                }
                break;
            }
            case 'Y': {
                if (s < j) {
                    FWord dn = w;
                    dn.emplace_back('b', j - 1);
                    f_add(out, j - 1, s, std::move(dn), c * Scalar::q(1) / qint(j + 1));
                }
                FWord up = w;
                up.emplace_back('a', j);
                f_add(out, j + 1, s + 1, std::move(up), c / qint(j + 1));
                break;
            }
        }
    }
    return out;
}

FState f_apply(const std::string& ops, int j, int s, const Scalar& c) {
    FState st;
    st[{j, s, {}}] = c;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) st = f_apply_gen(*it, st);
    return st;
}

void f_accumulate(FState& acc, const FState& st, const Scalar& c) {
    for (auto& [k, v] : st) {
        auto& [j, s, w] = k;
        f_add(acc, j, s, w, c * v);
    }
}

} // namespace

std::vector<RelationCheck> formal_action_identities(int max_i) {
    struct Identity {
        std::string name;
        std::vector<std::pair<Scalar, std::string>> lhs, rhs;
    };
    const std::vector<Identity> ids = {
        {"X Y = q Y X", {{Scalar(1), "XY"}}, {{Scalar::q(1), "YX"}}},
        {"E X = q X E", {{Scalar(1), "EX"}}, {{Scalar::q(1), "XE"}}},
        {"E Y = X + q^-1 Y E",
         {{Scalar(1), "EY"}},
         {{Scalar(1), "X"}, {Scalar::q(-1), "YE"}}},
        {"F X = Y Kinv + X F",
         {{Scalar(1), "FX"}},
         {{Scalar(1), "Yk"}, {Scalar(1), "XF"}}},
        {"F Y = Y F", {{Scalar(1), "FY"}}, {{Scalar(1), "YF"}}},
    };
    std::vector<RelationCheck> out;
    for (const Identity& id : ids) {
        RelationCheck rc{id.name, true, ""};
        for (int i = 0; i <= max_i && rc.pass; ++i)
            for (int s = 0; s <= i && rc.pass; ++s) {
                FState l, r;
                for (auto& [c, ops] : id.lhs) f_accumulate(l, f_apply(ops, i, s, Scalar(1)), c);
                for (auto& [c, ops] : id.rhs) f_accumulate(r, f_apply(ops, i, s, Scalar(1)), c);
                if (!(l == r)) {
                    rc.pass = false;
                    rc.detail = "mismatch at vertex " + std::to_string(i) + ", power " +
                                std::to_string(s);
                }
            }
        out.push_back(std::move(rc));
    }
    return out;
}

namespace {

nlohmann::json mat_to_json(const Mat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Scalar scalar_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Scalar(v.get<long>());
    return Scalar::parse(v.get<std::string>());
}

Mat mat_from_json(const nlohmann::json& rows, size_t nr, size_t nc) {
    Mat m(nr, nc);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = scalar_from_json(rows[i][j]);
    return m;
}

bool scalar_is_rational(const Scalar& s) {
    return s.num().is_constant() && s.den().is_constant();
}

} // namespace

std::string quiver_to_json(const QuiverRep& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["dims"] = rep.dims;
    nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
    bool rational = true;
    for (const Mat& m : rep.a) {
        a.push_back(mat_to_json(m));
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t c = 0; c < m.cols(); ++c)
                rational = rational && scalar_is_rational(m.at(i, c));
    }
    for (const Mat& m : rep.b) {
        b.push_back(mat_to_json(m));
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t c = 0; c < m.cols(); ++c)
                rational = rational && scalar_is_rational(m.at(i, c));
    }
    j["a"] = std::move(a);
    j["b"] = std::move(b);
    j["field"] = rational ? "Q" : "Q(t)";
    return j.dump(2);
}

QuiverRep quiver_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    QuiverRep rep;
    rep.dims = j.at("dims").get<std::vector<int>>();
    for (size_t i = 0; i + 1 < rep.dims.size(); ++i) {
        size_t di = static_cast<size_t>(rep.dims[i]);
        size_t dn = static_cast<size_t>(rep.dims[i + 1]);
        rep.a.push_back(i < j.at("a").size() ? mat_from_json(j["a"][i], dn, di)
                                             : Mat(dn, di));
        rep.b.push_back(i < j.at("b").size() ? mat_from_json(j["b"][i], di, dn)
                                             : Mat(di, dn));
    }
    return rep;
}

std::string fd_module_to_json(const FdModule& V) {
    nlohmann::json j;
    j["schema"] = 1;
    nlohmann::json wts = nlohmann::json::array();
    for (auto& [m, d] : V.dims) wts.push_back({m, d});
    j["weights"] = std::move(wts);
    nlohmann::json acts = nlohmann::json::array();
    for (auto& [key, mat] : V.maps) {
        auto& [g, m] = key;
        nlohmann::json entries = nlohmann::json::array();
        for (size_t r = 0; r < mat.rows(); ++r)
            for (size_t c = 0; c < mat.cols(); ++c)
                if (!mat.at(r, c).is_zero())
                    entries.push_back({r, c, mat.at(r, c).str()});
        acts.push_back({{"gen", gen_name(g)}, {"from", m}, {"entries", std::move(entries)}});
    }
    j["actions"] = std::move(acts);
    return j.dump(2);
}

FdModule fd_module_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FdModule V;
    for (auto& wd : j.at("weights")) V.dims[wd[0].get<int>()] = wd[1].get<int>();
    for (auto& act : j.at("actions")) {
        Gen g = Gen::E;
        bool found = false;
        for (Gen cand : kAllGens)
            if (act.at("gen").get<std::string>() == gen_name(cand)) {
                g = cand;
                found = true;
            }
        if (!found) throw SyntaxError("unknown generator in module file", 0);
        int m = act.at("from").get<int>();
        Mat mat(static_cast<size_t>(V.dim(m + fd_shift(g))),
                static_cast<size_t>(V.dim(m)));
        for (auto& e : act.at("entries"))
            mat.at(e[0].get<size_t>(), e[1].get<size_t>()) = scalar_from_json(e[2]);
        V.set_action(g, m, std::move(mat));
    }
    return V;
}

} // namespace schroq
