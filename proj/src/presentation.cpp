#include "mck/presentation.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace mck {

bool Presentation::all_relations_homogeneous() const {
    for (const auto& r : relations)
        if (!r.is_homogeneous(vars)) return false;
    return true;
}

MonoIndex::MonoIndex(const VarTable& v, int max_weight, const std::vector<int>& expo_caps)
    : vars(v) {
    auto caps = expo_caps.empty() ? std::vector<int>(v.arity(), -1) : expo_caps;
    list = monomials_up_to(v, max_weight, caps);
    for (int i = 0; i < static_cast<int>(list.size()); ++i) index[list[i]] = i;
}

SparseVec MonoIndex::to_vec(const Poly& p) const {
    SparseVec v;
    for (const auto& [e, c] : p.terms()) {
        auto it = index.find(e);
        if (it == index.end()) throw std::out_of_range("monomial outside truncation: " + mono_str(vars, e));
        v[it->second] = c;
    }
    return v;
}

Poly MonoIndex::to_poly(const SparseVec& v) const {
    Poly p(vars.arity());
    for (const auto& [i, c] : v) p.add_term(list[i], c);
    return p;
}

std::map<int, std::vector<Poly>> ideal_truncation(const Presentation& p, int max_weight) {
    MonoIndex idx(p.vars, max_weight);
    std::map<int, RowSpan> spans;
    std::map<int, std::vector<Poly>> out;
    for (const auto& r : p.relations) {
        if (r.is_zero() || !r.is_homogeneous(p.vars)) continue;
        int wr = *r.top_weight(p.vars);
        for (const auto& m : monomials_up_to(p.vars, max_weight - wr)) {
            Poly prod = Poly::monomial(m) * r;
            int w = wr + mono_weight(p.vars, m);
            if (spans[w].insert(idx.to_vec(prod))) out[w].push_back(prod);
        }
    }
    return out;
}

std::vector<int> quotient_dims(const Presentation& p, int max_weight) {
    auto ideal = ideal_truncation(p, max_weight);
    std::vector<int> mono_count(max_weight + 1, 0);
    for (const auto& m : monomials_up_to(p.vars, max_weight)) ++mono_count[mono_weight(p.vars, m)];
    std::vector<int> dims(max_weight + 1, 0);
    for (int w = 0; w <= max_weight; ++w) {
        int ideal_dim = ideal.count(w) ? static_cast<int>(ideal[w].size()) : 0;
        dims[w] = mono_count[w] - ideal_dim;
    }
    return dims;
}

std::vector<RowSpan> ideal_filtration(const Presentation& p, const MonoIndex& idx, int max_weight) {
    // Collect generators m*r sorted by top weight, then grow one span per w.
    std::vector<std::pair<int, SparseVec>> gens;
    for (const auto& r : p.relations) {
        if (r.is_zero()) continue;
        std::vector<int> caps(p.vars.arity(), -1);
        for (const auto& m : idx.list) {
            Poly prod = Poly::monomial(m) * r;
            auto tw = prod.top_weight(p.vars);
            if (!tw || *tw > max_weight) continue;
            bool inside = true;
            for (const auto& [e, c] : prod.terms())
                if (!idx.index.count(e)) inside = false;
            if (!inside) continue;
            gens.emplace_back(*tw, idx.to_vec(prod));
        }
    }
    std::stable_sort(gens.begin(), gens.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RowSpan> spans(max_weight + 1);
    RowSpan cur;
    size_t gi = 0;
    for (int w = 0; w <= max_weight; ++w) {
        while (gi < gens.size() && gens[gi].first <= w) cur.insert(gens[gi++].second);
        spans[w] = cur;
    }
    return spans;
}

std::vector<int> filtration_dims(const Presentation& p, int max_weight) {
    MonoIndex idx(p.vars, max_weight);
    auto spans = ideal_filtration(p, idx, max_weight);
    std::vector<int> mono_cum(max_weight + 1, 0);
    for (const auto& m : idx.list) {
        int w = mono_weight(p.vars, m);
        for (int u = w; u <= max_weight; ++u) ++mono_cum[u];
    }
    std::vector<int> dims(max_weight + 1, 0);
    int prev = 0;
    for (int w = 0; w <= max_weight; ++w) {
        int cur = mono_cum[w] - spans[w].dim();
        dims[w] = cur - prev;
        prev = cur;
    }
    return dims;
}

int TruncatedAlgebra::filtration_dim(int w) const {
    int n = 0;
    for (int i = 0; i < dim(); ++i)
        if (coord_weight(i) <= w) ++n;
    return n;
}

int TruncatedAlgebra::element_weight(const SparseVec& a) const {
    int w = 0;
    for (const auto& [i, c] : a) w = std::max(w, coord_weight(i));
    return w;
}

TruncatedQuotient::TruncatedQuotient(Presentation pres, int max_weight,
                                     const std::vector<int>& expo_caps)
    : pres_(std::move(pres)), max_weight_(max_weight), idx_(pres_.vars, max_weight, expo_caps) {
    // Echelonize { m*r } with leading term = largest monomial in MonoOrder.
    // Keys are reversed so RowSpan's smallest-leading convention applies.
    const int n = idx_.size();
    RowSpan span;
    for (const auto& r : pres_.relations) {
        if (r.is_zero()) continue;
        for (const auto& m : idx_.list) {
            Poly prod = Poly::monomial(m) * r;
            bool inside = true;
            for (const auto& [e, c] : prod.terms())
                if (!idx_.index.count(e)) inside = false;
            if (!inside) continue;
            SparseVec rev;
            for (const auto& [e, c] : prod.terms()) rev[n - 1 - idx_.index.at(e)] = c;
            span.insert(rev);
        }
    }
    ideal_echelon_ = span.rows();
    std::vector<bool> leading(n, false);
    for (const auto& [lead, row] : ideal_echelon_) leading[n - 1 - lead] = true;
    for (int i = 0; i < n; ++i) {
        if (leading[i]) continue;
        coord_of_mono_[i] = static_cast<int>(basis_.size());
        basis_.push_back(i);
    }
}

int TruncatedQuotient::coord_weight(int i) const { return idx_.weight_of(basis_[i]); }

std::string TruncatedQuotient::coord_label(int i) const {
    return mono_str(pres_.vars, idx_.list[basis_[i]]);
}

SparseVec TruncatedQuotient::one() const { return reduce(Poly::constant(pres_.vars.arity(), Rat(1))); }

SparseVec TruncatedQuotient::gen_image(const std::string& name) const {
    int i = pres_.vars.index_of(name);
    if (i < 0) throw std::invalid_argument("unknown generator " + name);
    Expo e(pres_.vars.arity(), 0);
    e[i] = 1;
    return reduce(Poly::monomial(e));
}

SparseVec TruncatedQuotient::reduce_vec(SparseVec rev) const {
    RowSpan tmp;
    // Reduce against the stored echelon (shares RowSpan reduction semantics).
    while (!rev.empty()) {
        auto it = ideal_echelon_.find(rev.begin()->first);
        if (it == ideal_echelon_.end()) break;
        rev = sv_axpy(rev, -rev.begin()->second / it->second.begin()->second, it->second);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [i, q] : rev) {
            auto it = ideal_echelon_.find(i);
            if (it != ideal_echelon_.end()) {
                rev = sv_axpy(rev, -q / it->second.begin()->second, it->second);
                changed = true;
                break;
            }
        }
    }
    return rev;
}

SparseVec TruncatedQuotient::reduce(const Poly& p) const {
    const int n = idx_.size();
    SparseVec rev;
    for (const auto& [e, c] : p.terms()) {
        auto it = idx_.index.find(e);
        if (it == idx_.index.end())
            throw std::out_of_range("quotient truncation exceeded: " + mono_str(pres_.vars, e));
        rev[n - 1 - it->second] = c;
    }
    rev = reduce_vec(rev);
    SparseVec out;
    for (const auto& [k, c] : rev) out[coord_of_mono_.at(n - 1 - k)] = c;
    return out;
}

Poly TruncatedQuotient::coords_to_poly(const SparseVec& v) const {
    Poly p(pres_.vars.arity());
    for (const auto& [i, c] : v) p.add_term(idx_.list[basis_[i]], c);
    return p;
}

SparseVec TruncatedQuotient::mul(const SparseVec& a, const SparseVec& b) const {
    return reduce(coords_to_poly(a) * coords_to_poly(b));
}

IsoReport presentations_isomorphic_via(const Presentation& source, const TruncatedAlgebra& target,
                                       const std::map<std::string, std::string>& gen_map_names,
                                       int max_weight, const std::vector<int>& source_expo_caps) {
    IsoReport rep;
    std::vector<SparseVec> gen_images(source.vars.arity());
    for (int i = 0; i < source.vars.arity(); ++i) {
        auto it = gen_map_names.find(source.vars.names[i]);
        if (it == gen_map_names.end())
            throw std::invalid_argument("gen_map misses " + source.vars.names[i]);
        gen_images[i] = target.gen_image(it->second);
    }

    MonoIndex idx(source.vars, max_weight, source_expo_caps);

    // Monomial images via memoized products along the sorted monomial list.
    std::map<Expo, SparseVec> image;
    image[Expo(source.vars.arity(), 0)] = target.one();
    for (const auto& m : idx.list) {
        if (image.count(m)) continue;
        int v = 0;
        while (m[v] == 0) ++v;
        Expo prev = m;
        --prev[v];
        image[m] = target.mul(image.at(prev), gen_images[v]);
    }

    // Relations must die in the target.
    rep.relations_vanish = true;
    for (const auto& r : source.relations) {
        SparseVec acc;
        for (const auto& [e, c] : r.terms()) acc = sv_axpy(acc, c, image.at(e));
        if (!sv_is_zero(acc)) {
            rep.relations_vanish = false;
            rep.witness = "relation does not vanish: " + r.str(source.vars);
            rep.pass = false;
            return rep;
        }
    }

    auto ideal = ideal_filtration(source, idx, max_weight);

    bool all_ok = true;
    for (int w = 0; w <= max_weight; ++w) {
        IsoWeightRecord rec;
        rec.weight = w;
        RowSpan kernel_span;   // kernel of monomials -> target, coords = source monomials
        RowSpan image_span;    // image inside target coords
        // Build via elimination: reduce each (target-image | mono-e_i) pair.
        // Standard trick: track combinations while echelonizing images.
        std::vector<std::pair<SparseVec, SparseVec>> rows;  // (target image, source combo)
        for (int i = 0; i < idx.size(); ++i) {
            if (idx.weight_of(i) > w) continue;
            SparseVec img = image.at(idx.list[i]);
            SparseVec combo;
            combo[i] = 1;
            // reduce against accumulated rows
            bool reduced = true;
            while (reduced) {
                reduced = false;
                if (img.empty()) break;
                for (auto& [rimg, rcombo] : rows) {
                    if (rimg.empty()) continue;
                    if (rimg.begin()->first == img.begin()->first) {
                        Rat f = -img.begin()->second / rimg.begin()->second;
                        img = sv_axpy(img, f, rimg);
                        combo = sv_axpy(combo, f, rcombo);
                        reduced = true;
                        break;
                    }
                }
            }
            if (img.empty())
                kernel_span.insert(combo);
            else {
                image_span.insert(img);
                rows.emplace_back(img, combo);
            }
        }
        rec.image_dim = image_span.dim();
        rec.target_dim = target.filtration_dim(w);
        int mono_cum = 0;
        for (int i = 0; i < idx.size(); ++i)
            if (idx.weight_of(i) <= w) ++mono_cum;
        rec.source_dim = mono_cum - ideal[w].dim();

        // Injectivity: kernel == ideal filtration at w.
        rec.injective = kernel_span.same_span(ideal[w]);
        if (!rec.injective && rep.witness.empty()) {
            // kernel element outside the ideal (or vice versa)
            for (const auto& [l, row] : kernel_span.rows()) {
                if (!ideal[w].contains(row)) {
                    rep.witness = "weight " + std::to_string(w) +
                                  ", kernel element outside ideal: " + idx.to_poly(row).str(source.vars);
                    break;
                }
            }
            if (rep.witness.empty())
                rep.witness = "weight " + std::to_string(w) + ": ideal not contained in kernel";
        }
        rec.surjective = rec.image_dim == rec.target_dim;
        if (!rec.surjective && rep.witness.empty())
            rep.witness = "weight " + std::to_string(w) + ": image dim " +
                          std::to_string(rec.image_dim) + " < target dim " +
                          std::to_string(rec.target_dim);
        all_ok = all_ok && rec.injective && rec.surjective;
        rep.weights.push_back(rec);
    }
    rep.pass = all_ok && rep.relations_vanish;
    return rep;
}

std::string presentation_to_json(const Presentation& p) {
    nlohmann::json j;
    j["kind"] = "quotient";
    j["generators"] = nlohmann::json::array();
    for (int i = 0; i < p.vars.arity(); ++i)
        j["generators"].push_back({{"name", p.vars.names[i]}, {"weight", p.vars.weights[i]}});
    j["relations"] = nlohmann::json::array();
    for (const auto& r : p.relations) j["relations"].push_back(r.str(p.vars));
    return j.dump(2);
}

Presentation presentation_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Presentation p;
    for (const auto& g : j.at("generators")) {
        p.vars.names.push_back(g.at("name").get<std::string>());
        p.vars.weights.push_back(g.at("weight").get<int>());
    }
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) p.relations.push_back(parse_poly(p.vars, r.get<std::string>()));
    if (j.contains("kind") && j.at("kind").get<std::string>() != "quotient")
        throw std::invalid_argument("only quotient presentations are JSON-loadable; fiber products are built in-engine");
    return p;
}

Presentation nodal_cubic_affine() {
    Presentation p;
    p.vars = {{"Y", "Z"}, {2, 3}};
    p.relations.push_back(parse_poly(p.vars, "Y*Z - Y^3 - Z^2"));
    return p;
}

Presentation nodal_cubic_homogeneous() {
    Presentation p;
    p.vars = {{"X", "Y", "Z"}, {1, 2, 3}};
    p.relations.push_back(parse_poly(p.vars, "X*Y*Z - Y^3 - Z^2"));
    return p;
}

Presentation nodal_quartic_twisted() {
    Presentation p;
    p.vars = {{"X", "Y", "Z"}, {1, 1, 2}};
    p.relations.push_back(parse_poly(p.vars, "X*Y*Z - Y^4 - Z^2"));
    return p;
}

Presentation nodal_quartic_p112() {
    Presentation p;
    p.vars = {{"X", "Y", "Z"}, {1, 2, 1}};
    p.relations.push_back(parse_poly(p.vars, "X*Y*Z - Y^2 - Z^4"));
    return p;
}

Presentation punctured_limit_ring(int k) {
    Presentation p;
    p.vars.names = {"Y", "Z"};
    p.vars.weights = {2, 3};
    for (int j = 1; j <= k; ++j) {
        p.vars.names.push_back(k == 1 ? "T" : "T" + std::to_string(j));
        p.vars.weights.push_back(1);
    }
    p.relations.push_back(parse_poly(p.vars, "Y*Z - Y^3 - Z^2"));
    for (int j = 0; j < k; ++j) {
        const std::string& t = p.vars.names[2 + j];
        p.relations.push_back(parse_poly(p.vars, "Y*" + t));
        p.relations.push_back(parse_poly(p.vars, "Z*" + t));
        for (int i = j + 1; i < k; ++i)
            p.relations.push_back(parse_poly(p.vars, t + "*" + p.vars.names[2 + i]));
    }
    return p;
}

Presentation multitwist_limit_ring(int l) {
    Presentation p;
    for (int c = 1; c <= l; ++c) {
        p.vars.names.push_back("Y" + std::to_string(c));
        p.vars.weights.push_back(2);
        p.vars.names.push_back("Z" + std::to_string(c));
        p.vars.weights.push_back(3);
    }
    for (int c = 1; c <= l; ++c) {
        std::string Y = "Y" + std::to_string(c), Z = "Z" + std::to_string(c);
        p.relations.push_back(parse_poly(p.vars, Y + "*" + Z + " - " + Y + "^3 - " + Z + "^2"));
        for (int c2 = c + 1; c2 <= l; ++c2) {
            std::string Y2 = "Y" + std::to_string(c2), Z2 = "Z" + std::to_string(c2);
            for (const auto& a : {Y, Z})
                for (const auto& b : {Y2, Z2}) p.relations.push_back(parse_poly(p.vars, a + "*" + b));
        }
    }
    return p;
}

}  // namespace mck
