#include "mck/fiber_product.hpp"

#include <algorithm>
#include <stdexcept>

namespace mck {

Rat EvalFunctional::apply(const Poly& p) const {
    Rat s(0);
    for (const auto& [c, point] : terms) s += c * p.evaluate(point);
    return s;
}

EvalFunctional EvalFunctional::at_zero(int arity) {
    return {{{Rat(1), std::vector<Rat>(arity, Rat(0))}}};
}

EvalFunctional EvalFunctional::zero_minus_one() {
    return {{{Rat(1), {Rat(0)}}, {Rat(-1), {Rat(1)}}}};
}

FiberProductSpec FiberProductSpec::chain_equal(std::vector<FiberFactor> factors) {
    FiberProductSpec spec;
    spec.factors = std::move(factors);
    for (size_t i = 0; i + 1 < spec.factors.size(); ++i) {
        GluingCondition cond;
        cond.terms.emplace_back(static_cast<int>(i), Rat(1));
        cond.terms.emplace_back(static_cast<int>(i + 1), Rat(-1));
        spec.conditions.push_back(cond);
    }
    return spec;
}

FiberProductAlgebra::FiberProductAlgebra(FiberProductSpec spec, int max_weight)
    : spec_(std::move(spec)), max_weight_(max_weight) {
    if (spec_.factors.empty()) throw std::invalid_argument("fiber product needs at least one factor");
    for (const auto& f : spec_.factors) {
        // The gluing functionals must make sense on constants (weight 0).
        for (const auto& [c, point] : f.eval.terms)
            if (static_cast<int>(point.size()) != f.pres.vars.arity())
                throw std::invalid_argument("evaluation functional not defined in weight 0");
        atom_offset_.push_back(atom_count_);
        factors_.push_back(std::make_unique<TruncatedQuotient>(f.pres, max_weight, f.expo_caps));
        atom_count_ += factors_.back()->dim();
    }

    // Evaluation of each atom under its factor's functional.
    std::vector<Rat> atom_eval(atom_count_);
    for (int f = 0; f < factor_count(); ++f)
        for (int i = 0; i < factors_[f]->dim(); ++i) {
            SparseVec e;
            e[i] = 1;
            atom_eval[atom_offset_[f] + i] =
                spec_.factors[f].eval.apply(factors_[f]->coords_to_poly(e));
        }

    // Grow the basis weight by weight: kernel of the gluing conditions on the
    // atoms of weight <= w, keeping vectors independent of lower weights.
    RowSpan chosen;
    for (int w = 0; w <= max_weight_; ++w) {
        std::vector<int> atoms;
        for (int a = 0; a < atom_count_; ++a)
            if (atom_weight(a) <= w) atoms.push_back(a);
        Mat constraints(static_cast<int>(spec_.conditions.size()), static_cast<int>(atoms.size()));
        for (size_t ci = 0; ci < spec_.conditions.size(); ++ci)
            for (size_t ai = 0; ai < atoms.size(); ++ai) {
                int a = atoms[ai];
                int f = static_cast<int>(std::upper_bound(atom_offset_.begin(), atom_offset_.end(), a) -
                                         atom_offset_.begin()) - 1;
                for (const auto& [cf, coeff] : spec_.conditions[ci].terms)
                    if (cf == f) constraints.add_to(static_cast<int>(ci), static_cast<int>(ai),
                                                    coeff * atom_eval[a]);
            }
        for (const auto& k : kernel_basis(constraints)) {
            SparseVec atom_vec;
            for (const auto& [ai, c] : k) atom_vec[atoms[ai]] = c;
            if (chosen.insert(atom_vec)) {
                basis_.push_back(atom_vec);
                basis_weight_.push_back(w);
            }
        }
    }

    // Echelon with basis-combo tracking for express().
    for (size_t b = 0; b < basis_.size(); ++b) {
        SparseVec vec = basis_[b], combo;
        combo[static_cast<int>(b)] = 1;
        while (!vec.empty()) {
            auto it = echelon_.find(vec.begin()->first);
            if (it == echelon_.end()) break;
            Rat f = -vec.begin()->second / it->second.first.begin()->second;
            vec = sv_axpy(vec, f, it->second.first);
            combo = sv_axpy(combo, f, it->second.second);
        }
        if (!vec.empty()) echelon_[vec.begin()->first] = {vec, combo};
    }
}

int FiberProductAlgebra::atom_weight(int atom) const {
    int f = static_cast<int>(std::upper_bound(atom_offset_.begin(), atom_offset_.end(), atom) -
                             atom_offset_.begin()) - 1;
    return factors_[f]->coord_weight(atom - atom_offset_[f]);
}

std::string FiberProductAlgebra::coord_label(int i) const {
    std::string s = "(";
    auto tuple = to_tuple([&] {
        SparseVec v;
        v[i] = 1;
        return v;
    }());
    for (int f = 0; f < factor_count(); ++f) {
        if (f) s += ", ";
        s += factors_[f]->coords_to_poly(tuple[f]).str(spec_.factors[f].pres.vars);
    }
    return s + ")";
}

SparseVec FiberProductAlgebra::express(const SparseVec& atom_vec) const {
    SparseVec vec = atom_vec, combo;
    while (!vec.empty()) {
        auto it = echelon_.find(vec.begin()->first);
        if (it == echelon_.end())
            throw std::invalid_argument("tuple outside the fiber product span");
        Rat f = -vec.begin()->second / it->second.first.begin()->second;
        vec = sv_axpy(vec, f, it->second.first);
        combo = sv_axpy(combo, f, it->second.second);
    }
    return sv_scale(combo, Rat(-1));
}

SparseVec FiberProductAlgebra::from_tuple(const std::vector<SparseVec>& components) const {
    if (static_cast<int>(components.size()) != factor_count())
        throw std::invalid_argument("tuple arity mismatch");
    SparseVec atoms;
    for (int f = 0; f < factor_count(); ++f)
        for (const auto& [i, c] : components[f]) atoms[atom_offset_[f] + i] = c;
    return express(atoms);
}

std::vector<SparseVec> FiberProductAlgebra::to_tuple(const SparseVec& v) const {
    std::vector<SparseVec> tuple(factor_count());
    for (const auto& [bi, c] : v)
        for (const auto& [a, av] : basis_[bi]) {
            int f = static_cast<int>(std::upper_bound(atom_offset_.begin(), atom_offset_.end(), a) -
                                     atom_offset_.begin()) - 1;
            Rat nv = (tuple[f].count(a - atom_offset_[f]) ? tuple[f][a - atom_offset_[f]] : Rat(0)) +
                     c * av;
            if (nv == 0)
                tuple[f].erase(a - atom_offset_[f]);
            else
                tuple[f][a - atom_offset_[f]] = nv;
        }
    return tuple;
}

SparseVec FiberProductAlgebra::one() const {
    std::vector<SparseVec> tuple;
    for (int f = 0; f < factor_count(); ++f) tuple.push_back(factors_[f]->one());
    return from_tuple(tuple);
}

SparseVec FiberProductAlgebra::gen_image(const std::string& name) const {
    for (int f = 0; f < factor_count(); ++f) {
        if (spec_.factors[f].pres.vars.index_of(name) < 0) continue;
        std::vector<SparseVec> tuple(factor_count());
        tuple[f] = factors_[f]->gen_image(name);
        return from_tuple(tuple);
    }
    throw std::invalid_argument("unknown fiber-product generator " + name);
}

SparseVec FiberProductAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
    auto ta = to_tuple(a), tb = to_tuple(b);
    std::vector<SparseVec> prod(factor_count());
    for (int f = 0; f < factor_count(); ++f) prod[f] = factors_[f]->mul(ta[f], tb[f]);
    return from_tuple(prod);
}

std::vector<int> FiberProductAlgebra::weight_dims() const {
    std::vector<int> dims(max_weight_ + 1, 0);
    for (int w : basis_weight_) ++dims[w];
    return dims;
}

}  // namespace mck
