#include "schroq/wmod.hpp"

#include <sstream>

#include <json.hpp>

#include "schroq/errors.hpp"

namespace schroq {

GradedVec GradedVec::basis(int depth, size_t index, size_t dim) {
    GradedVec v;
    Vec c(dim);
    c[index] = Scalar(1);
    v.comps[depth] = std::move(c);
    return v;
}

void GradedVec::add(int depth, const Vec& v) {
    auto it = comps.find(depth);
    if (it == comps.end()) {
        for (auto& s : v)
            if (!s.is_zero()) { comps[depth] = v; return; }
        return;
    }
    bool nonzero = false;
    for (size_t i = 0; i < v.size(); ++i) {
        it->second[i] += v[i];
        if (!it->second[i].is_zero()) nonzero = true;
    }
    if (!nonzero) comps.erase(it);
}

GradedVec GradedVec::operator-() const {
    GradedVec r = *this;
    for (auto& [d, c] : r.comps)
        for (auto& s : c) s = -s;
    return r;
}

GradedVec operator+(GradedVec a, const GradedVec& b) {
    for (auto& [d, c] : b.comps) a.add(d, c);
    return a;
}

GradedVec operator-(GradedVec a, const GradedVec& b) {
    for (auto& [d, c] : b.comps) {
        Vec neg = c;
        for (auto& s : neg) s = -s;
        a.add(d, neg);
    }
    return a;
}

GradedVec operator*(const Scalar& c, const GradedVec& v) {
    GradedVec r;
    if (c.is_zero()) return r;
    for (auto& [d, comp] : v.comps) {
        Vec s = comp;
        for (auto& x : s) x = c * x;
        r.comps[d] = std::move(s);
    }
    return r;
}

std::string GradedVec::str() const {
    if (comps.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [d, c] : comps) {
        if (!first) out << " ; ";
        first = false;
        out << "depth " << d << ": [";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out << ", ";
            out << c[i].str();
        }
        out << "]";
    }
    return out.str();
}

// ---------------------------------------------------------------------------

GradedModule::GradedModule(Weight top_weight, Scalar central_charge,
                           std::vector<int> dims)
    : top_weight_(std::move(top_weight)),
      central_charge_(std::move(central_charge)),
      dims_(std::move(dims)) {
    if (dims_.empty()) throw std::logic_error("module needs at least depth 0");
    int N = truncation();
    for (Gen g : kAllGens) {
        auto& slots = act_[static_cast<size_t>(g)];
        slots.resize(static_cast<size_t>(N) + 1);
        for (int n = 0; n <= N; ++n) {
            int t = n - gen_deg(g);
            if (t > N) continue;  // unavailable past the truncation
            slots[static_cast<size_t>(n)] =
                Mat(static_cast<size_t>(dim(t)), static_cast<size_t>(dim(n)));
        }
    }
    install_scalar_actions();
}

void GradedModule::install_scalar_actions() {
    int N = truncation();
    for (int n = 0; n <= N; ++n) {
        size_t d = static_cast<size_t>(dim(n));
        set_action(Gen::K, n, weight_at(n) * Mat::identity(d));
        set_action(Gen::Kinv, n, weight_at(n).inverse() * Mat::identity(d));
        set_action(Gen::Z, n, central_charge_ * Mat::identity(d));
    }
}

const std::optional<Mat>& GradedModule::action(Gen g, int n) const {
    return act_[static_cast<size_t>(g)][static_cast<size_t>(n)];
}

void GradedModule::set_action(Gen g, int n, Mat m) {
    int t = n - gen_deg(g);
    if (n < 0 || n > truncation() || t > truncation())
        throw std::logic_error("action slot outside the truncation");
    size_t rows = static_cast<size_t>(dim(t)), cols = static_cast<size_t>(dim(n));
    if (m.rows() != rows || m.cols() != cols)
        throw std::logic_error("action matrix shape mismatch");
    act_[static_cast<size_t>(g)][static_cast<size_t>(n)] = std::move(m);
}

GradedVec act_gen(const GradedModule& m, Gen g, const GradedVec& v,
                  bool drop_overflow) {
    GradedVec out;
    for (auto& [n, comp] : v.comps) {
        int t = n - gen_deg(g);
        if (t < 0) continue;  // the zero space
        if (t > m.truncation()) {
            if (drop_overflow) continue;
            throw TruncationOverflow("action of " + std::string(gen_name(g)) +
                                     " leaves the truncated range at depth " +
                                     std::to_string(n));
        }
        out.add(t, m.action(g, n)->apply(comp));
    }
    return out;
}

GradedVec act(const GradedModule& m, const PBWElement& u, const GradedVec& v) {
    GradedVec out;
    for (auto& [mono, c] : u.terms()) {
        GradedVec w = v;
        for (int i = 0; i < mono.e && !w.is_zero(); ++i) w = act_gen(m, Gen::E, w);
        for (int i = 0; i < mono.x && !w.is_zero(); ++i) w = act_gen(m, Gen::X, w);
        for (int i = 0; i < mono.z && !w.is_zero(); ++i) w = act_gen(m, Gen::Z, w);
        for (int i = 0; i < std::abs(mono.k) && !w.is_zero(); ++i)
            w = act_gen(m, mono.k > 0 ? Gen::K : Gen::Kinv, w);
        for (int i = 0; i < mono.f && !w.is_zero(); ++i) w = act_gen(m, Gen::F, w);
        for (int i = 0; i < mono.y && !w.is_zero(); ++i) w = act_gen(m, Gen::Y, w);
        out = out + c * w;
    }
    return out;
}

namespace {

int word_deg(const std::vector<Gen>& word) {
    int d = 0;
    for (Gen g : word) d += gen_deg(g);
    return d;
}

// Matrix of the word on depth n, or nullopt when an intermediate depth
// exceeds the truncation. Intermediate depths below 0 give the zero map.
std::optional<Mat> word_matrix(const GradedModule& m, const std::vector<Gen>& word,
                               int n) {
    int fd = n - word_deg(word);
    Mat cur = Mat::identity(static_cast<size_t>(m.dim(n)));
    int d = n;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int t = d - gen_deg(*it);
        if (t > m.truncation()) return std::nullopt;
        if (t < 0)
            return Mat(static_cast<size_t>(m.dim(fd)), static_cast<size_t>(m.dim(n)));
        cur = *m.action(*it, d) * cur;
        d = t;
    }
    return cur;
}

std::optional<Mat> side_matrix(const GradedModule& m,
                               const std::vector<std::pair<Scalar, std::vector<Gen>>>& side,
                               int n, int fd) {
    Mat sum(static_cast<size_t>(m.dim(fd)), static_cast<size_t>(m.dim(n)));
    for (auto& [c, word] : side) {
        auto wm = word_matrix(m, word, n);
        if (!wm) return std::nullopt;
        sum = sum + c * *wm;
    }
    return sum;
}

} // namespace

std::vector<RelationCheck> check_relations(const GradedModule& m) {
    std::vector<RelationCheck> out;
    for (const Relation& rel : defining_relations()) {
        RelationCheck rc{rel.name, true, ""};
        int deg = word_deg(rel.lhs.front().second);
        for (int n = 0; n <= m.truncation() && rc.pass; ++n) {
            int fd = n - deg;
            if (fd < 0 || fd > m.truncation()) continue;
            auto lhs = side_matrix(m, rel.lhs, n, fd);
            auto rhs = side_matrix(m, rel.rhs, n, fd);
            if (!lhs || !rhs) continue;  // not checkable at this depth
            if (*lhs == *rhs) continue;
            for (size_t i = 0; i < lhs->rows() && rc.pass; ++i)
                for (size_t j = 0; j < lhs->cols(); ++j)
                    if (!(lhs->at(i, j) == rhs->at(i, j))) {
                        rc.pass = false;
                        rc.detail = "depth " + std::to_string(n) + " entry (" +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    "): lhs = " + lhs->at(i, j).str() +
                                    ", rhs = " + rhs->at(i, j).str();
                        break;
                    }
        }
        out.push_back(std::move(rc));
    }
    return out;
}

bool relations_ok(const GradedModule& m) {
    for (auto& rc : check_relations(m))
        if (!rc.pass) return false;
    return true;
}

std::vector<Vec> highest_weight_vectors(const GradedModule& m, int n) {
    auto& e = m.action(Gen::E, n);
    auto& x = m.action(Gen::X, n);
    if (!e || !x)
        throw TruncationOverflow("E/X actions unavailable at depth " + std::to_string(n));
    return e->vstack(*x).kernel();
}

std::vector<std::vector<Vec>> submodule_span(const GradedModule& m,
                                             const std::vector<GradedVec>& seeds) {
    int N = m.truncation();
    std::vector<std::vector<Vec>> span(static_cast<size_t>(N) + 1);
    std::vector<std::pair<int, Vec>> work;
    auto insert = [&](int depth, const Vec& v) {
        auto& s = span[static_cast<size_t>(depth)];
        if (in_span(s, v)) return;
        s.push_back(v);
        s = row_basis(std::move(s));
        work.emplace_back(depth, v);
    };
    for (auto& seed : seeds)
        for (auto& [d, c] : seed.comps) insert(d, c);
    while (!work.empty()) {
        auto [d, v] = std::move(work.back());
        work.pop_back();
        GradedVec gv;
        gv.comps[d] = v;
        for (Gen g : {Gen::Y, Gen::F}) {
            GradedVec w = act_gen(m, g, gv, /*drop_overflow=*/true);
            for (auto& [t, c] : w.comps) insert(t, c);
        }
    }
    return span;
}

std::vector<int> submodule_generated(const GradedModule& m,
                                     const std::vector<GradedVec>& seeds) {
    auto span = submodule_span(m, seeds);
    std::vector<int> dims(span.size());
    for (size_t n = 0; n < span.size(); ++n) dims[n] = static_cast<int>(span[n].size());
    return dims;
}

// ---------------------------------------------------------------------------

GradedVec Intertwiner::apply(const GradedVec& v) const {
    GradedVec out;
    for (auto& [n, comp] : v.comps) {
        auto it = maps.find(n);
        if (it == maps.end()) continue;
        out.add(n + shift, it->second.apply(comp));
    }
    return out;
}

bool Intertwiner::invertible_interior(const GradedModule& src,
                                      const GradedModule& dst) const {
    for (int n = 0; n <= src.truncation(); ++n) {
        int t = n + shift;
        if (t < 0 || t > dst.truncation()) continue;
        size_t ds = static_cast<size_t>(src.dim(n)), dt = static_cast<size_t>(dst.dim(t));
        if (ds == 0 && dt == 0) continue;
        if (ds != dt) return false;
        auto it = maps.find(n);
        if (it == maps.end() || it->second.rank() != ds) return false;
    }
    return true;
}

std::vector<Intertwiner> find_intertwiners(const GradedModule& a, const GradedModule& b) {
    auto ratio = (a.top_weight().value() / b.top_weight().value()).as_t_monomial();
    if (!ratio || ratio->sign != 1 || ratio->t_exp % 2 != 0) return {};
    const int shift = -ratio->t_exp / 2;  // weight_a(n) = weight_b(n + shift)
    const int N = a.truncation();
    const int Nb = b.truncation();

    // unknown blocks phi_n : a_n -> b_{n+shift}
    std::map<int, size_t> offset;
    size_t total = 0;
    for (int n = 0; n <= N; ++n) {
        int t = n + shift;
        if (t < 0 || t > Nb || a.dim(n) == 0 || b.dim(t) == 0) continue;
        offset[n] = total;
        total += static_cast<size_t>(a.dim(n)) * static_cast<size_t>(b.dim(t));
    }
    if (total == 0) return {};
    auto col = [&](int n, size_t i, size_t j) {
        return offset.at(n) + i * static_cast<size_t>(a.dim(n)) + j;
    };

    std::vector<Vec> eqs;
    for (Gen g : kAllGens) {
        int dg = gen_deg(g);
        for (int n = 0; n <= N; ++n) {
            int np = n - dg;
            if (np > N) continue;  // source action unavailable
            // phi_n is unknown (not zero) when its target depth is truncated away
            if (n + shift > Nb && a.dim(n) > 0) continue;
            int tr = np + shift;  // target depth of both sides
            if (tr > Nb) continue;  // phi_np or the target action is unknown
            if (tr < 0 || b.dim(tr) == 0 || a.dim(n) == 0) continue;
            bool phi_n = offset.contains(n);
            bool phi_np = offset.contains(np);
            if (!phi_n && !phi_np) continue;
            size_t rows = static_cast<size_t>(b.dim(tr));
            for (size_t i = 0; i < rows; ++i) {
                for (size_t j = 0; j < static_cast<size_t>(a.dim(n)); ++j) {
                    Vec row(total);
                    bool nonzero = false;
                    if (phi_np && np >= 0) {
                        const Mat& A1 = *a.action(g, n);
                        for (size_t k = 0; k < A1.rows(); ++k) {
                            if (A1.at(k, j).is_zero()) continue;
                            row[col(np, i, k)] += A1.at(k, j);
                            nonzero = true;
                        }
                    }
                    if (phi_n) {
                        const Mat& A2 = *b.action(g, n + shift);
                        for (size_t k = 0; k < A2.cols(); ++k) {
                            if (A2.at(i, k).is_zero()) continue;
                            row[col(n, k, j)] -= A2.at(i, k);
                            nonzero = true;
                        }
                    }
                    if (nonzero) eqs.push_back(std::move(row));
                }
            }
        }
    }

    Mat sys(eqs.size(), total);
    for (size_t i = 0; i < eqs.size(); ++i)
        for (size_t j = 0; j < total; ++j) sys.at(i, j) = eqs[i][j];
    std::vector<Vec> null = eqs.empty() ? [&] {
        std::vector<Vec> full;
        for (size_t j = 0; j < total; ++j) {
            Vec v(total);
            v[j] = Scalar(1);
            full.push_back(std::move(v));
        }
        return full;
    }() : sys.kernel();

    std::vector<Intertwiner> out;
    for (auto& v : null) {
        Intertwiner phi;
        phi.shift = shift;
        for (auto& [n, off] : offset) {
            size_t rows = static_cast<size_t>(b.dim(n + shift));
            size_t cols = static_cast<size_t>(a.dim(n));
            Mat m(rows, cols);
            for (size_t i = 0; i < rows; ++i)
                for (size_t j = 0; j < cols; ++j) m.at(i, j) = v[off + i * cols + j];
            phi.maps[n] = std::move(m);
        }
        out.push_back(std::move(phi));
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

std::string module_to_json(const GradedModule& m) {
    nlohmann::json j;
    j["schema"] = 1;
    j["topWeight"] = m.top_weight().str();
    j["centralCharge"] = m.central_charge().str();
    j["depth"] = m.truncation();
    j["dims"] = m.dims();
    nlohmann::json acts;
    for (Gen g : kAllGens) {
        nlohmann::json slices = nlohmann::json::array();
        for (int n = 0; n <= m.truncation(); ++n) {
            auto& slot = m.action(g, n);
            if (!slot) {
                slices.push_back(nullptr);
                continue;
            }
            nlohmann::json triples = nlohmann::json::array();
            for (size_t i = 0; i < slot->rows(); ++i)
                for (size_t j2 = 0; j2 < slot->cols(); ++j2)
                    if (!slot->at(i, j2).is_zero())
                        triples.push_back({i, j2, slot->at(i, j2).str()});
            slices.push_back(std::move(triples));
        }
        acts[gen_name(g)] = std::move(slices);
    }
    j["actions"] = std::move(acts);
    return j.dump(2);
}

GradedModule module_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Weight top{Scalar::parse(j.at("topWeight").get<std::string>())};
    Scalar charge = Scalar::parse(j.at("centralCharge").get<std::string>());
    int N = j.at("depth").get<int>();
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    if (static_cast<int>(dims.size()) != N + 1)
        throw std::runtime_error("dims length must be depth + 1");
    GradedModule m(top, charge, dims);
    const auto& acts = j.at("actions");
    for (Gen g : kAllGens) {
        if (!acts.contains(gen_name(g))) continue;
        const auto& slices = acts.at(gen_name(g));
        for (int n = 0; n <= N; ++n) {
            const auto& s = slices.at(static_cast<size_t>(n));
            if (s.is_null()) continue;
            int t = n - gen_deg(g);
            if (t > N) throw std::runtime_error("action given past the truncation");
            Mat mat(static_cast<size_t>(m.dim(t)), static_cast<size_t>(m.dim(n)));
            for (const auto& triple : s)
                mat.at(triple.at(0).get<size_t>(), triple.at(1).get<size_t>()) =
                    Scalar::parse(triple.at(2).get<std::string>());
            m.set_action(g, n, std::move(mat));
        }
    }
    return m;
}

} // namespace schroq
