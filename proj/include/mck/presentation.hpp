#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mck/matrix.hpp"
#include "mck/poly.hpp"

namespace mck {

// Finitely presented weighted-graded commutative algebra (quotient kind).
// Fiber-product descriptions live in fiber_product.hpp.
struct Presentation {
    VarTable vars;
    std::vector<Poly> relations;

    bool all_relations_homogeneous() const;
};

// Index of the monomials of weight <= max_weight (optionally exponent-capped),
// in canonical MonoOrder. Shared coordinate system for ideal spans.
struct MonoIndex {
    VarTable vars;
    std::vector<Expo> list;
    std::map<Expo, int> index;

    MonoIndex() = default;
    MonoIndex(const VarTable& v, int max_weight,
              const std::vector<int>& expo_caps = {});
    int size() const { return static_cast<int>(list.size()); }
    int weight_of(int i) const { return mono_weight(vars, list[i]); }
    SparseVec to_vec(const Poly& p) const;      // throws if p leaves the index
    Poly to_poly(const SparseVec& v) const;
};

// Graded ideal span: for each weight w <= max_weight an echelon basis of
// span{ m*r : weight(m*r) = w }. Products with inhomogeneous r have no single
// weight and contribute nothing here (see ideal_filtration for those).
std::map<int, std::vector<Poly>> ideal_truncation(const Presentation& p, int max_weight);

// dim_w = #monomials of weight w - dim graded ideal span at w.
std::vector<int> quotient_dims(const Presentation& p, int max_weight);

// Filtered ideal span inside F_w = span of monomials of weight <= w:
// span{ m*r : top_weight(m*r) <= w }, one RowSpan per w over `idx` coordinates.
std::vector<RowSpan> ideal_filtration(const Presentation& p, const MonoIndex& idx, int max_weight);

// Increments dim(F_w / I cap F_w) - dim(F_{w-1} / I cap F_{w-1}).
std::vector<int> filtration_dims(const Presentation& p, int max_weight);

// ---------------------------------------------------------------------------

// Truncated algebra interface: elements are coordinate vectors over a finite
// basis, each basis coordinate carrying a filtration weight.
class TruncatedAlgebra {
public:
    virtual ~TruncatedAlgebra() = default;
    virtual int max_weight() const = 0;
    virtual int dim() const = 0;
    virtual int coord_weight(int i) const = 0;
    virtual std::string coord_label(int i) const = 0;
    virtual SparseVec one() const = 0;
    // Image of a named generator; throws if unknown.
    virtual SparseVec gen_image(const std::string& name) const = 0;
    virtual SparseVec mul(const SparseVec& a, const SparseVec& b) const = 0;

    int filtration_dim(int w) const;  // #coords of weight <= w
    int element_weight(const SparseVec& a) const;
};

// Quotient-presentation arithmetic truncated at max_weight: basis = standard
// monomials (non-leading under the filtered ideal echelon), normal-form
// reduction rewrites leading monomials downward.
class TruncatedQuotient : public TruncatedAlgebra {
public:
    TruncatedQuotient(Presentation pres, int max_weight,
                      const std::vector<int>& expo_caps = {});

    int max_weight() const override { return max_weight_; }
    int dim() const override { return static_cast<int>(basis_.size()); }
    int coord_weight(int i) const override;
    std::string coord_label(int i) const override;
    SparseVec one() const override;
    SparseVec gen_image(const std::string& name) const override;
    SparseVec mul(const SparseVec& a, const SparseVec& b) const override;

    const Presentation& presentation() const { return pres_; }
    const MonoIndex& mono_index() const { return idx_; }
    // Normal form in quotient coordinates; throws std::out_of_range if the
    // polynomial leaves the truncated monomial space.
    SparseVec reduce(const Poly& p) const;
    Poly coords_to_poly(const SparseVec& v) const;

private:
    Presentation pres_;
    int max_weight_;
    MonoIndex idx_;
    std::map<int, SparseVec> ideal_echelon_;  // reversed-key echelon, leading = largest monomial
    std::vector<int> basis_;                  // monomial indices of standard monomials
    std::map<int, int> coord_of_mono_;

    SparseVec reduce_vec(SparseVec rev) const;
};

// ---------------------------------------------------------------------------

struct IsoWeightRecord {
    int weight = 0;
    int source_dim = 0;  // dim F_w(source quotient)
    int image_dim = 0;   // rank of the monomial-image matrix
    int target_dim = 0;  // dim F_w(target)
    bool injective = false;
    bool surjective = false;
};

struct IsoReport {
    bool pass = false;
    bool relations_vanish = false;
    std::string witness;  // first failure, rendered
    std::vector<IsoWeightRecord> weights;
};

// Checks that gen_map induces an isomorphism of source (a quotient
// presentation) onto target, weight by weight up to max_weight, by exhaustive
// linear algebra: relations map to zero, kernel of the monomial evaluation
// equals the source ideal filtration, and images span each target piece.
IsoReport presentations_isomorphic_via(const Presentation& source, const TruncatedAlgebra& target,
                                       const std::map<std::string, std::string>& gen_map,
                                       int max_weight,
                                       const std::vector<int>& source_expo_caps = {});

// JSON round trip, schema:
// {"generators":[{"name":"Y","weight":2},...],"relations":["Y*Z - Y^3 - Z^2"],
//  "kind":"quotient"}
std::string presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const std::string& text);

// Canonical rings used by the verification targets.
Presentation nodal_cubic_affine();        // C[Y,Z]/(YZ - Y^3 - Z^2), |Y|=2,|Z|=3
Presentation nodal_cubic_homogeneous();   // C[X,Y,Z]/(XYZ - Y^3 - Z^2), |X|=1,|Y|=2,|Z|=3
Presentation nodal_quartic_twisted();     // C[X,Y,Z]/(XYZ - Y^4 - Z^2), |X|=1,|Y|=1,|Z|=2
Presentation nodal_quartic_p112();        // C[X,Y,Z]/(XYZ - Y^2 - Z^4), |X|=1,|Y|=2,|Z|=1
Presentation punctured_limit_ring(int k); // {Y,Z,T_j | YZ-Y^3-Z^2, Y T_j, Z T_j, T_i T_j}
Presentation multitwist_limit_ring(int l);// {Y_c,Z_c | per-circle cubic, cross products}

}  // namespace mck
