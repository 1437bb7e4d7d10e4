#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mck/fiber_product.hpp"
#include "mck/floer.hpp"
#include "mck/presentation.hpp"

namespace mck {

// Element of the colimit along multiplication by the stage-1 connecting class,
// represented at a finite stage.
struct LimitElement {
    int rep_stage = 0;
    FloerClass cls;
};

LimitElement limit_of(const FloerAlgebra& fa, const FloerClass& c);

LimitElement push(const FloerAlgebra& fa, const LimitElement& x, int t);
// True iff the pushed representatives agree at at_stage. A true answer
// certifies equality in the limit; false means "not yet equal at this stage".
bool limit_eq(const FloerAlgebra& fa, const LimitElement& x, const LimitElement& y, int at_stage);
LimitElement limit_product(const FloerAlgebra& fa, const LimitElement& x, const LimitElement& y);

// ---------------------------------------------------------------------------

struct RingCheckOptions {
    int max_weight = 8;
    int slack = 4;
    int surj_depth = 4;                 // per-basis-vector push-depth search bound
    std::vector<int> gen_expo_caps;     // optional caps on target-presentation exponents
};

struct WeightDims {
    int weight = 0;
    int dim_limit = 0;
    int dim_presentation = 0;
    int dim_oracle = -1;  // -1 when no oracle supplied
    bool kernels_match = false;
};

struct SurjFinding {
    int stage = 0;
    std::string gen;
    int depth = -1;  // push depth at which membership was certified
};

struct RingCheckResult {
    bool pass = false;
    bool relations_vanish = false;
    // Set when the check ran out of stage headroom rather than finding a
    // mathematical contradiction (exit code 3 territory).
    std::optional<std::string> headroom_failure;
    std::string witness;
    int certified_stage = 0;
    std::vector<WeightDims> weights;
    std::vector<SurjFinding> surjectivity;
    bool stable_kernels = false;  // kernel dims agree at top stage and top-1
};

// Verifies that gens presents the even limit as `target` (and that the
// optional concrete oracle agrees), weight by weight.
RingCheckResult verify_ring_presentation(const FloerAlgebra& fa,
                                         const std::map<std::string, LimitElement>& gens,
                                         const Presentation& target,
                                         const TruncatedAlgebra* oracle,
                                         const RingCheckOptions& opt);

// ---------------------------------------------------------------------------

// Odd module model: a glued product of polynomial factors plus a trivially
// acted summand. The even ring acts componentwise through `action`
// (per even generator, one multiplier polynomial per factor).
struct OddModuleModel {
    FiberProductSpec space;
    std::map<std::string, std::vector<Poly>> action;
    int morse_rank = 0;
};

struct SpanningEntry {
    std::vector<Poly> tuple;  // one polynomial per factor
    int model_weight = 0;     // stage filtration weight it claims
    LimitElement image;
    std::string label;
};

struct ModuleCheckResult {
    bool pass = false;
    std::optional<std::string> headroom_failure;
    std::string witness;
    std::vector<std::string> action_failures;
    std::vector<WeightDims> weights;  // dim_limit vs dim_presentation(=model)
    int actions_checked = 0;
    int actions_skipped = 0;  // beyond truncation on both sides
};

ModuleCheckResult verify_module_structure(const FloerAlgebra& fa, const OddModuleModel& model,
                                          const std::vector<SpanningEntry>& spanning,
                                          const std::vector<LimitElement>& morse_images,
                                          const std::map<std::string, LimitElement>& even_gens,
                                          const RingCheckOptions& opt);

// ---------------------------------------------------------------------------
// Canonical scenario -> target dictionaries.

struct LimitSetup {
    Presentation target;                          // even limit presentation
    std::optional<FiberProductSpec> oracle_spec;  // concrete even model, when distinct
    std::map<std::string, LimitElement> even_gens;
    OddModuleModel odd_model;
    std::vector<SpanningEntry> odd_spanning;      // model part, without morse
    std::vector<LimitElement> morse_images;
    std::vector<int> gen_expo_caps;               // T-exponent caps aligned with target vars
};

LimitSetup canonical_limit_setup(const FloerAlgebra& fa, int max_weight);

// Connecting-map injectivity on both parities through stage D (the property
// that makes finite-stage equality checks definitive).
bool connecting_maps_injective(const FloerAlgebra& fa);

}  // namespace mck
