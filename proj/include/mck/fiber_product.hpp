#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mck/presentation.hpp"

namespace mck {

// Linear functional f -> sum coeff * f(point), point given per variable.
struct EvalFunctional {
    std::vector<std::pair<Rat, std::vector<Rat>>> terms;

    Rat apply(const Poly& p) const;
    static EvalFunctional at_zero(int arity);
    // F -> F(0) - F(1), one variable.
    static EvalFunctional zero_minus_one();
};

struct FiberFactor {
    Presentation pres;
    EvalFunctional eval;
    std::vector<int> expo_caps;  // optional truncation caps per variable
};

// sum over (factor, coeff) of coeff * eval_factor(component) = 0
struct GluingCondition {
    std::vector<std::pair<int, Rat>> terms;
};

struct FiberProductSpec {
    std::vector<FiberFactor> factors;
    std::vector<GluingCondition> conditions;

    // phi_0(f_0) = phi_1(f_1) = ... = phi_{m-1}(f_{m-1})
    static FiberProductSpec chain_equal(std::vector<FiberFactor> factors);
};

// Concrete truncated tuple model of a fiber product of quotient algebras:
// basis of tuples whose evaluation functionals agree, filtered by weight,
// with componentwise multiplication. Generator names must be unique across
// factors.
class FiberProductAlgebra : public TruncatedAlgebra {
public:
    FiberProductAlgebra(FiberProductSpec spec, int max_weight);

    int max_weight() const override { return max_weight_; }
    int dim() const override { return static_cast<int>(basis_.size()); }
    int coord_weight(int i) const override { return basis_weight_[i]; }
    std::string coord_label(int i) const override;
    SparseVec one() const override;
    SparseVec gen_image(const std::string& name) const override;
    SparseVec mul(const SparseVec& a, const SparseVec& b) const override;

    const FiberProductSpec& spec() const { return spec_; }
    int factor_count() const { return static_cast<int>(factors_.size()); }
    const TruncatedQuotient& factor(int i) const { return *factors_[i]; }

    // Tuple of factor elements -> coordinates in the fiber-product basis;
    // throws std::invalid_argument if the tuple violates the gluing.
    SparseVec from_tuple(const std::vector<SparseVec>& components) const;
    std::vector<SparseVec> to_tuple(const SparseVec& v) const;

    // Per-weight dimension increments (dim F_w - dim F_{w-1}).
    std::vector<int> weight_dims() const;

private:
    FiberProductSpec spec_;
    int max_weight_;
    std::vector<std::unique_ptr<TruncatedQuotient>> factors_;
    std::vector<int> atom_offset_;  // atom index = offset[f] + factor coord
    int atom_count_ = 0;
    std::vector<SparseVec> basis_;      // atom vectors
    std::vector<int> basis_weight_;
    std::map<int, std::pair<SparseVec, SparseVec>> echelon_;  // lead atom -> (atom vec, basis combo)

    int atom_weight(int atom) const;
    SparseVec express(const SparseVec& atom_vec) const;  // -> basis coords, throws if outside
};

}  // namespace mck
