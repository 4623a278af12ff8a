#include "schroq/pbw.hpp"

#include <cctype>
#include <sstream>

#include "schroq/errors.hpp"

namespace schroq {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::Y: return "Y";
        case Gen::F: return "F";
        case Gen::K: return "K";
        case Gen::Kinv: return "Kinv";
        case Gen::Z: return "Z";
        case Gen::X: return "X";
        case Gen::E: return "E";
    }
    return "?";
}

int gen_deg(Gen g) {
    switch (g) {
        case Gen::E: return 2;
        case Gen::X: return 1;
        case Gen::K: case Gen::Kinv: case Gen::Z: return 0;
        case Gen::Y: return -1;
        case Gen::F: return -2;
    }
    return 0;
}

std::string PBWExp::str() const {
    std::ostringstream out;
    bool first = true;
    auto put = [&](const char* name, int exp) {
        if (exp == 0) return;
        if (!first) out << "*";
        out << name;
        if (exp != 1) out << "^" << exp;
        first = false;
    };
    put("Y", y);
    put("F", f);
    put("K", k);
    put("Z", z);
    put("X", x);
    put("E", e);
    if (first) out << "1";
    return out.str();
}

PBWElement PBWElement::gen(Gen g) {
    PBWExp m;
    switch (g) {
        case Gen::Y: m.y = 1; break;
        case Gen::F: m.f = 1; break;
        case Gen::K: m.k = 1; break;
        case Gen::Kinv: m.k = -1; break;
        case Gen::Z: m.z = 1; break;
        case Gen::X: m.x = 1; break;
        case Gen::E: m.e = 1; break;
    }
    return PBWElement(Scalar(1), m);
}

bool PBWElement::is_scalar() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

Scalar PBWElement::scalar_part() const {
    auto it = terms_.find(PBWExp{});
    return it == terms_.end() ? Scalar() : it->second;
}

void PBWElement::add_term(const PBWExp& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PBWElement PBWElement::operator-() const {
    PBWElement r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

PBWElement operator*(const Scalar& c, const PBWElement& a) {
    PBWElement r;
    if (c.is_zero()) return r;
    for (auto& [m, ac] : a.terms()) r += PBWElement(c * ac, m);
    return r;
}

namespace {

// Single-monomial rewriting kernel: g * (Y^y F^f K^k Z^z X^x E^e), using the
// defining relations to push g to its slot. Y, F, Z, K, Kinv only pick up a
// power of q; X and E recurse through
//   XY = qYX - Z,           EY = X + q^{-1}YE,
//   XF = FX - Y Kinv,       EF = FE + (K - Kinv)/(q - q^{-1}),
//   XK = q^{-1}KX,          EK = q^{-2}KE,  EX = qXE.
PBWElement lmul_mono(Gen g, const PBWExp& m) {
    switch (g) {
        case Gen::Y: {
            PBWExp r = m; ++r.y;
            return PBWElement(Scalar(1), r);
        }
        case Gen::F: {
            PBWExp r = m; ++r.f;
            return PBWElement(Scalar(1), r);
        }
        case Gen::Z: {
            PBWExp r = m; ++r.z;
            return PBWElement(Scalar(1), r);
        }
        case Gen::K: {
            PBWExp r = m; ++r.k;
            return PBWElement(Scalar::q(-m.y - 2 * m.f), r);
        }
        case Gen::Kinv: {
            PBWExp r = m; --r.k;
            return PBWElement(Scalar::q(m.y + 2 * m.f), r);
        }
        case Gen::X: {
            if (m.y > 0) {
                PBWExp rest = m; --rest.y;
                PBWElement xr = lmul_mono(Gen::X, rest);
                PBWElement out;
                for (auto& [mm, c] : xr.terms()) {
                    PBWExp t = mm; ++t.y;
                    out += PBWElement(Scalar::q(1) * c, t);
                }
                PBWExp zt = rest; ++zt.z;
                out -= PBWElement(Scalar(1), zt);
                return out;
            }
            if (m.f > 0) {
                PBWExp rest = m; --rest.f;
                PBWElement xr = lmul_mono(Gen::X, rest);
                PBWElement out;
                for (auto& [mm, c] : xr.terms()) {
                    PBWExp t = mm; ++t.f;
                    out += PBWElement(c, t);
                }
                PBWElement kr = lmul_mono(Gen::Kinv, rest);
                for (auto& [mm, c] : kr.terms()) {
                    PBWExp t = mm; ++t.y;
                    out -= PBWElement(c, t);
                }
                return out;
            }
            PBWExp r = m; ++r.x;
            return PBWElement(Scalar::q(-m.k), r);
        }
        case Gen::E: {
            if (m.y > 0) {
                PBWExp rest = m; --rest.y;
                PBWElement out = lmul_mono(Gen::X, rest);
                PBWElement er = lmul_mono(Gen::E, rest);
                for (auto& [mm, c] : er.terms()) {
                    PBWExp t = mm; ++t.y;
                    out += PBWElement(Scalar::q(-1) * c, t);
                }
                return out;
            }
            if (m.f > 0) {
                PBWExp rest = m; --rest.f;
                PBWElement er = lmul_mono(Gen::E, rest);
                PBWElement out;
                for (auto& [mm, c] : er.terms()) {
                    PBWExp t = mm; ++t.f;
                    out += PBWElement(c, t);
                }
                Scalar d = (Scalar::q(1) - Scalar::q(-1)).inverse();
                out += d * lmul_mono(Gen::K, rest);
                out -= d * lmul_mono(Gen::Kinv, rest);
                return out;
            }
            PBWExp r = m; ++r.e;
            return PBWElement(Scalar::q(-2 * m.k + m.x), r);
        }
    }
    return PBWElement();
}

} // namespace

PBWElement lmul_gen(Gen g, const PBWElement& a) {
    PBWElement r;
    for (auto& [m, c] : a.terms_) r += c * lmul_mono(g, m);
    return r;
}

PBWElement normal_form(const std::vector<Gen>& word) {
    PBWElement r = PBWElement::one();
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = lmul_gen(*it, r);
    return r;
}

PBWElement operator*(const PBWElement& a, const PBWElement& b) {
    PBWElement out;
    for (auto& [m, c] : a.terms()) {
        PBWElement r = b;
        for (int i = 0; i < m.e; ++i) r = lmul_gen(Gen::E, r);
        for (int i = 0; i < m.x; ++i) r = lmul_gen(Gen::X, r);
        for (int i = 0; i < m.z; ++i) r = lmul_gen(Gen::Z, r);
        for (int i = 0; i < std::abs(m.k); ++i)
            r = lmul_gen(m.k > 0 ? Gen::K : Gen::Kinv, r);
        for (int i = 0; i < m.f; ++i) r = lmul_gen(Gen::F, r);
        for (int i = 0; i < m.y; ++i) r = lmul_gen(Gen::Y, r);
        out += c * r;
    }
    return out;
}

PBWElement multiply(const PBWElement& a, const PBWElement& b) { return a * b; }

PBWElement commutator(const PBWElement& a, const PBWElement& b) {
    return a * b - b * a;
}

std::string PBWElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        bool neg = cs.size() > 0 && cs[0] == '-';
        if (first) {
            if (neg) { out << "-"; cs = cs.substr(1); }
            first = false;
        } else {
            out << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        if (m.is_unit()) {
            out << cs;
        } else if (cs == "1") {
            out << m.str();
        } else {
            out << cs << "*" << m.str();
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// parser

namespace {

class PBWParser {
public:
    explicit PBWParser(const std::string& text) : s_(text) {}

    PBWElement parse() {
        PBWElement v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return v;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    PBWElement expr() {
        PBWElement v = eat('-') ? -term() : term();
        while (true) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    PBWElement term() {
        PBWElement v = factor();
        while (true) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) {
                size_t here = pos_;
                PBWElement d = factor();
                if (!d.is_scalar())
                    throw SyntaxError("division requires a scalar divisor", here);
                Scalar s = d.scalar_part();
                if (s.is_zero()) throw SyntaxError("division by zero", here);
                v = s.inverse() * v;
            } else return v;
        }
    }

    PBWElement factor() {
        if (eat('-')) return -factor();
        PBWElement base = atom();
        if (eat('^')) {
            size_t here = pos_;
            auto [num, den] = exponent();
            if (den != 1) {
                if (!base.is_scalar())
                    throw SyntaxError("fractional exponent requires a power of q", here);
                auto mono = base.scalar_part().as_t_monomial();
                if (!mono || mono->sign != 1 || (mono->t_exp * num) % den != 0)
                    throw SyntaxError("fractional exponent requires a power of q", here);
                return PBWElement(Scalar::t(mono->t_exp * num / den));
            }
            return power(base, num, here);
        }
        return base;
    }

    static PBWElement power(const PBWElement& base, int n, size_t here) {
        if (n >= 0) {
            PBWElement r = PBWElement::one();
            for (int i = 0; i < n; ++i) r = r * base;
            return r;
        }
        // only scalars and K-powers are invertible
        if (base.is_scalar()) {
            Scalar s = base.scalar_part();
            if (s.is_zero()) throw SyntaxError("zero has no negative power", here);
            return PBWElement(s.pow(n));
        }
        if (base.terms().size() == 1) {
            const auto& [m, c] = *base.terms().begin();
            if (m.y == 0 && m.f == 0 && m.z == 0 && m.x == 0 && m.e == 0) {
                PBWExp r;
                r.k = m.k * n;
                return PBWElement(c.pow(n), r);
            }
        }
        throw SyntaxError("negative power of a non-invertible element", here);
    }

    std::pair<int, int> exponent() {
        skip_ws();
        bool paren = eat('(');
        int num = raw_int();
        int den = 1;
        if (paren && eat('/')) den = raw_int();
        if (den <= 0) throw SyntaxError("bad exponent denominator", pos_);
        if (paren && !eat(')')) throw SyntaxError("expected ')'", pos_);
        return {num, den};
    }

    int raw_int() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        size_t start = pos_;
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        if (pos_ == start) throw SyntaxError("expected integer", pos_);
        return static_cast<int>(neg ? -v : v);
    }

    PBWElement atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            PBWElement v = expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = v * 10 + (s_[pos_++] - '0');
            return PBWElement(Scalar(mpq_class(v)));
        }
        ++pos_;
        switch (c) {
            case 't': return PBWElement(Scalar::t());
            case 'q': return PBWElement(Scalar::q());
            case 'z': return PBWElement(Scalar::z());
            case 'w': return PBWElement(Scalar::w());
            case 'Y': return PBWElement::gen(Gen::Y);
            case 'F': return PBWElement::gen(Gen::F);
            case 'Z': return PBWElement::gen(Gen::Z);
            case 'X': return PBWElement::gen(Gen::X);
            case 'E': return PBWElement::gen(Gen::E);
            case 'K':
                if (s_.compare(pos_, 3, "inv") == 0) {
                    pos_ += 3;
                    return PBWElement::gen(Gen::Kinv);
                }
                return PBWElement::gen(Gen::K);
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", pos_ - 1);
        }
    }
};

} // namespace

PBWElement parse_expr(const std::string& text) { return PBWParser(text).parse(); }

// ---------------------------------------------------------------------------

const std::vector<Relation>& defining_relations() {
    static const std::vector<Relation> rels = [] {
        using W = std::vector<Gen>;
        const Scalar one(1);
        const Scalar q = Scalar::q(1);
        const Scalar d = (Scalar::q(1) - Scalar::q(-1)).inverse();
        std::vector<Relation> r;
        r.push_back({"EF - FE = (K - Kinv)/(q - q^-1)",
                     {{one, W{Gen::E, Gen::F}}, {-one, W{Gen::F, Gen::E}}},
                     {{d, W{Gen::K}}, {-d, W{Gen::Kinv}}}});
        r.push_back({"KX = q XK", {{one, W{Gen::K, Gen::X}}}, {{q, W{Gen::X, Gen::K}}}});
        r.push_back({"KE = q^2 EK",
                     {{one, W{Gen::K, Gen::E}}},
                     {{Scalar::q(2), W{Gen::E, Gen::K}}}});
        r.push_back({"KF = q^-2 FK",
                     {{one, W{Gen::K, Gen::F}}},
                     {{Scalar::q(-2), W{Gen::F, Gen::K}}}});
        r.push_back({"KY = q^-1 YK",
                     {{one, W{Gen::K, Gen::Y}}},
                     {{Scalar::q(-1), W{Gen::Y, Gen::K}}}});
        r.push_back({"qYX - XY = Z",
                     {{q, W{Gen::Y, Gen::X}}, {-one, W{Gen::X, Gen::Y}}},
                     {{one, W{Gen::Z}}}});
        r.push_back({"EX = q XE", {{one, W{Gen::E, Gen::X}}}, {{q, W{Gen::X, Gen::E}}}});
        r.push_back({"EY = X + q^-1 YE",
                     {{one, W{Gen::E, Gen::Y}}},
                     {{one, W{Gen::X}}, {Scalar::q(-1), W{Gen::Y, Gen::E}}}});
        r.push_back({"FX = Y Kinv + XF",
                     {{one, W{Gen::F, Gen::X}}},
                     {{one, W{Gen::Y, Gen::Kinv}}, {one, W{Gen::X, Gen::F}}}});
        r.push_back({"FY = YF", {{one, W{Gen::F, Gen::Y}}}, {{one, W{Gen::Y, Gen::F}}}});
        r.push_back({"K Kinv = 1", {{one, W{Gen::K, Gen::Kinv}}}, {{one, W{}}}});
        r.push_back({"Kinv K = 1", {{one, W{Gen::Kinv, Gen::K}}}, {{one, W{}}}});
        for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kinv, Gen::X, Gen::Y}) {
            r.push_back({std::string("Z") + gen_name(g) + " = " + gen_name(g) + "Z",
                         {{one, W{Gen::Z, g}}},
                         {{one, W{g, Gen::Z}}}});
        }
        return r;
    }();
    return rels;
}

} // namespace schroq
