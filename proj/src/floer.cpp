#include "mck/floer.hpp"

#include <algorithm>
#include <stdexcept>

namespace mck {

void Scenario::validate() const {
    if (genus < 2) throw std::invalid_argument("genus must be >= 2");
    if (circles < 1) throw std::invalid_argument("need at least one twist circle");
    if (circles > genus) throw std::invalid_argument("circles must satisfy l <= g");
    if (punctures < 0) throw std::invalid_argument("punctures must be >= 0");
    if (punctures > 0 && circles != 1)
        throw std::invalid_argument("punctured scenarios are implemented for a single twist circle");
    if (max_stage < 1) throw std::invalid_argument("max_stage must be >= 1");
    if (punctures > 0 && index_cutoff < 1)
        throw std::invalid_argument("index cutoff must be >= 1 for punctured scenarios");
}

std::string Scenario::label() const {
    std::string s = "g=" + std::to_string(genus);
    if (punctures > 0) s += ",k=" + std::to_string(punctures);
    if (circles > 1) s += ",l=" + std::to_string(circles);
    return s;
}

int gen_parity(GenKind k) {
    switch (k) {
        case GenKind::F:
        case GenKind::E:
        case GenKind::U:
        case GenKind::K:
            return 0;
        default:
            return 1;
    }
}

FloerClass& FloerClass::add(const Gen& g, const Rat& c) {
    Rat nv = (coeffs.count(g) ? coeffs[g] : Rat(0)) + c;
    if (nv == 0)
        coeffs.erase(g);
    else
        coeffs[g] = nv;
    return *this;
}

FloerClass fc_add(const FloerClass& a, const FloerClass& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.stage != b.stage || a.parity != b.parity)
        throw std::invalid_argument("cannot add classes of different stage or parity");
    FloerClass r = a;
    for (const auto& [g, c] : b.coeffs) r.add(g, c);
    return r;
}

FloerClass fc_scale(const FloerClass& a, const Rat& c) {
    FloerClass r;
    r.stage = a.stage;
    r.parity = a.parity;
    if (c == 0) return r;
    for (const auto& [g, v] : a.coeffs) r.coeffs[g] = v * c;
    return r;
}

FloerAlgebra::FloerAlgebra(Scenario s) : s_(s) { s_.validate(); }

std::vector<Gen> FloerAlgebra::basis(int d, int parity) const {
    if (d < 0 || d > s_.max_stage) throw StageOverflow("stage out of range: " + std::to_string(d));
    if (d == 0 && !s_.closed_single())
        throw std::invalid_argument("stage 0 exists only for the closed single-twist table");
    std::vector<Gen> out;
    if (d == 0) {
        if (parity == 0) {
            out.push_back({GenKind::F, 0, 0, 0, 0});
            out.push_back({GenKind::K, 0, 0, 0, 0});
        } else {
            out.push_back({GenKind::G, 1, 0, 0, 0});
            out.push_back({GenKind::CVan, 0, 0, 0, 0});
            for (int r = 1; r <= s_.morse_odd_count(); ++r)
                out.push_back({GenKind::MorseOdd, 0, 0, r, 0});
        }
        return out;
    }
    if (parity == 0) {
        out.push_back({GenKind::F, 0, 0, 0, d});
        for (int c = 1; c <= s_.circles; ++c)
            for (int i = 1; i <= d - 1; ++i) out.push_back({GenKind::E, c, 0, i, d});
        for (int j = 1; j <= s_.punctures; ++j)
            for (int i = 1; i <= s_.index_cutoff; ++i) out.push_back({GenKind::U, 0, j, i, d});
    } else {
        for (int c = 1; c <= s_.circles; ++c) out.push_back({GenKind::G, c, 0, 0, d});
        for (int j = 1; j <= s_.punctures; ++j) out.push_back({GenKind::Varphi, 0, j, 0, d});
        for (int c = 1; c <= s_.circles; ++c)
            for (int i = 1; i <= d - 1; ++i) out.push_back({GenKind::H, c, 0, i, d});
        for (int j = 1; j <= s_.punctures; ++j)
            for (int i = 1; i <= s_.index_cutoff; ++i) out.push_back({GenKind::V, 0, j, i, d});
        for (int r = 1; r <= s_.morse_odd_count(); ++r)
            out.push_back({GenKind::MorseOdd, 0, 0, r, d});
    }
    return out;
}

std::pair<int, int> FloerAlgebra::graded_dims(int stage) const {
    return {static_cast<int>(basis(stage, 0).size()), static_cast<int>(basis(stage, 1).size())};
}

FloerClass FloerAlgebra::seidel_class() const {
    FloerClass c;
    c.stage = 1;
    c.parity = 0;
    c.coeffs[{GenKind::F, 0, 0, 0, 1}] = 1;
    return c;
}

FloerClass FloerAlgebra::unit() const {
    if (!s_.closed_single()) throw std::invalid_argument("f^0 exists only in the closed table");
    FloerClass c;
    c.stage = 0;
    c.parity = 0;
    c.coeffs[{GenKind::F, 0, 0, 0, 0}] = 1;
    return c;
}

FloerClass FloerAlgebra::single(const Gen& g) const {
    check_gen(g);
    FloerClass c;
    c.stage = g.stage;
    c.parity = gen_parity(g.kind);
    c.coeffs[g] = 1;
    return c;
}

void FloerAlgebra::check_gen(const Gen& g) const {
    auto b = basis(g.stage, gen_parity(g.kind));
    if (std::find(b.begin(), b.end(), g) == b.end())
        throw std::invalid_argument("generator not in basis: " + gen_str(g));
}

namespace {

Gen mkF(int d) { return {GenKind::F, 0, 0, 0, d}; }
Gen mkE(int c, int i, int d) { return {GenKind::E, c, 0, i, d}; }
Gen mkH(int c, int i, int d) { return {GenKind::H, c, 0, i, d}; }
Gen mkG(int c, int d) { return {GenKind::G, c, 0, 0, d}; }
Gen mkU(int j, int i, int d) { return {GenKind::U, 0, j, i, d}; }
Gen mkV(int j, int i, int d) { return {GenKind::V, 0, j, i, d}; }
Gen mkPhi(int j, int d) { return {GenKind::Varphi, 0, j, 0, d}; }
Gen mkMorse(int r, int d) { return {GenKind::MorseOdd, 0, 0, r, d}; }
Gen mkK() { return {GenKind::K, 0, 0, 0, 0}; }

void acc(std::map<Gen, Rat>& out, const Gen& g, const Rat& c) {
    Rat nv = (out.count(g) ? out[g] : Rat(0)) + c;
    if (nv == 0)
        out.erase(g);
    else
        out[g] = nv;
}

}  // namespace

// Product of two basis generators per the twist-region relations, their
// puncture-sector extension, and the stage-0 cup products.
std::map<Gen, Rat> FloerAlgebra::gen_product(const Gen& a0, const Gen& b0) const {
    std::map<Gen, Rat> out;
    const int s = a0.stage + b0.stage;
    const int pa = gen_parity(a0.kind), pb = gen_parity(b0.kind);

    // Unit of the closed table.
    if (a0.kind == GenKind::F && a0.stage == 0) {
        acc(out, b0, 1);
        return out;
    }
    if (b0.kind == GenKind::F && b0.stage == 0) {
        acc(out, a0, 1);
        return out;
    }

    // Odd * odd: zero above stage 0, cup products of the closed surface at 0.
    if (pa == 1 && pb == 1) {
        if (s > 0) return out;
        auto pair_sign = [&](const Gen& x, const Gen& y) -> Rat {
            if (x.kind == GenKind::G && y.kind == GenKind::CVan) return 1;
            if (x.kind == GenKind::CVan && y.kind == GenKind::G) return -1;
            if (x.kind == GenKind::MorseOdd && y.kind == GenKind::MorseOdd) {
                if (x.index % 2 == 1 && y.index == x.index + 1) return 1;
                if (y.index % 2 == 1 && x.index == y.index + 1) return -1;
            }
            return 0;
        };
        Rat sign = pair_sign(a0, b0);
        if (sign != 0) acc(out, mkK(), sign);
        return out;
    }

    // Arrange even first.
    const Gen& a = (pa == 0) ? a0 : b0;
    const Gen& b = (pa == 0) ? b0 : a0;
    const int m = a.stage, n = b.stage;

    if (a.kind == GenKind::K) return out;  // K times anything non-unit is 0
    if (b.kind == GenKind::K) return out;

    auto uv_index = [&](int i) {
        if (i > s_.index_cutoff)
            throw IndexOverflow("puncture index " + std::to_string(i) + " exceeds cutoff M=" +
                                std::to_string(s_.index_cutoff));
        return i;
    };

    switch (a.kind) {
        case GenKind::F:
            switch (b.kind) {
                case GenKind::F:  // m, n >= 1 here
                    for (int c = 1; c <= s_.circles; ++c) {
                        acc(out, mkE(c, m, s), 1);
                        acc(out, mkE(c, n, s), 1);
                    }
                    acc(out, mkF(s), 1);
                    return out;
                case GenKind::E:
                    acc(out, mkE(b.circle, b.index, s), 1);
                    acc(out, mkE(b.circle, b.index + m, s), 1);
                    return out;
                case GenKind::U:
                    acc(out, mkU(b.punct, b.index, s), 1);
                    return out;
                case GenKind::G:
                    if (n == 0) {
                        acc(out, mkG(b.circle, s), 1);
                    } else {
                        acc(out, mkH(b.circle, m, s), 1);
                        acc(out, mkH(b.circle, n, s), 1);
                        acc(out, mkG(b.circle, s), 1);
                    }
                    return out;
                case GenKind::Varphi:
                    acc(out, mkPhi(b.punct, s), 1);
                    acc(out, mkH(1, m, s), 1);
                    return out;
                case GenKind::H:
                    acc(out, mkH(b.circle, b.index, s), 1);
                    acc(out, mkH(b.circle, b.index + m, s), 1);
                    return out;
                case GenKind::V:
                    acc(out, mkV(b.punct, b.index, s), 1);
                    return out;
                case GenKind::MorseOdd:
                    acc(out, mkMorse(b.index, s), 1);
                    return out;
                case GenKind::CVan:
                    return out;  // the connecting class annihilates c_van
                default:
                    return out;
            }
        case GenKind::E:
            switch (b.kind) {
                case GenKind::E:
                    if (a.circle == b.circle) acc(out, mkE(a.circle, a.index + b.index, s), 1);
                    return out;
                case GenKind::U:
                    return out;
                case GenKind::G:
                    if (n == 0) {
                        acc(out, mkH(a.circle, a.index, s), 1);  // g^0 action
                    } else if (a.circle == b.circle) {
                        acc(out, mkH(a.circle, a.index, s), 1);
                        acc(out, mkH(a.circle, a.index + n, s), 1);
                    }
                    return out;
                case GenKind::Varphi:
                    acc(out, mkH(a.circle, a.index, s), 1);
                    return out;
                case GenKind::H:
                    if (a.circle == b.circle) acc(out, mkH(a.circle, a.index + b.index, s), 1);
                    return out;
                default:
                    return out;  // E kills V, MorseOdd, CVan
            }
        case GenKind::U:
            switch (b.kind) {
                case GenKind::U:
                    if (a.punct == b.punct) acc(out, mkU(a.punct, uv_index(a.index + b.index), s), 1);
                    return out;
                case GenKind::V:
                    if (a.punct == b.punct) acc(out, mkV(a.punct, uv_index(a.index + b.index), s), 1);
                    return out;
                case GenKind::Varphi:
                    if (a.punct == b.punct) acc(out, mkV(a.punct, a.index, s), -1);
                    return out;
                case GenKind::G:
                case GenKind::H:
                case GenKind::MorseOdd:
                case GenKind::CVan:
                    return out;  // no crossing between puncture and Morse/twist sectors
                default:
                    return out;
            }
        default:
            return out;
    }
}

FloerClass FloerAlgebra::product(const FloerClass& a, const FloerClass& b) const {
    const int s = a.stage + b.stage;
    if (s > s_.max_stage)
        throw StageOverflow("product stage " + std::to_string(s) + " exceeds D=" +
                            std::to_string(s_.max_stage));
    FloerClass r;
    r.stage = s;
    r.parity = (a.parity + b.parity) % 2;
    for (const auto& [ga, ca] : a.coeffs)
        for (const auto& [gb, cb] : b.coeffs) {
            for (const auto& [g, c] : gen_product(ga, gb)) r.add(g, ca * cb * c);
        }
    return r;
}

SparseVec FloerAlgebra::to_vec(const FloerClass& c) const {
    auto b = basis(c.stage, c.parity);
    std::map<Gen, int> idx;
    for (int i = 0; i < static_cast<int>(b.size()); ++i) idx[b[i]] = i;
    SparseVec v;
    for (const auto& [g, q] : c.coeffs) {
        auto it = idx.find(g);
        if (it == idx.end()) throw std::invalid_argument("class uses generator outside basis");
        v[it->second] = q;
    }
    return v;
}

std::string FloerAlgebra::gen_str(const Gen& g) const {
    auto sub = [&](const Gen& x) {
        std::string s;
        if (s_.circles > 1 && (x.kind == GenKind::E || x.kind == GenKind::H || x.kind == GenKind::G))
            s += "{c" + std::to_string(x.circle) + "}";
        if (s_.punctures > 1 &&
            (x.kind == GenKind::U || x.kind == GenKind::V || x.kind == GenKind::Varphi))
            s += "{p" + std::to_string(x.punct) + "}";
        return s;
    };
    switch (g.kind) {
        case GenKind::F:
            return "f^" + std::to_string(g.stage);
        case GenKind::E:
            return "e_" + std::to_string(g.index) + "^" + std::to_string(g.stage) + sub(g);
        case GenKind::U:
            return "u_" + std::to_string(g.index) + "^" + std::to_string(g.stage) + sub(g);
        case GenKind::K:
            return "K";
        case GenKind::G:
            return "g^" + std::to_string(g.stage) + sub(g);
        case GenKind::Varphi:
            return "phi^" + std::to_string(g.stage) + sub(g);
        case GenKind::H:
            return "h_" + std::to_string(g.index) + "^" + std::to_string(g.stage) + sub(g);
        case GenKind::V:
            return "v_" + std::to_string(g.index) + "^" + std::to_string(g.stage) + sub(g);
        case GenKind::MorseOdd:
            return "m_" + std::to_string(g.index) + "^" + std::to_string(g.stage);
        case GenKind::CVan:
            return "c_van";
    }
    return "?";
}

std::string FloerAlgebra::render(const FloerClass& c) const {
    if (c.is_zero()) return "0";
    std::string s;
    for (const auto& [g, q] : c.coeffs) {
        std::string cs = rat_str(q < 0 ? -q : q);
        if (s.empty())
            s += (q < 0 ? "-" : "");
        else
            s += (q < 0 ? " - " : " + ");
        if (cs == "1")
            s += gen_str(g);
        else
            s += cs + "*" + gen_str(g);
    }
    return s;
}

}  // namespace mck
