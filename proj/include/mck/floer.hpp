#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mck/errors.hpp"
#include "mck/matrix.hpp"
#include "mck/rational.hpp"

namespace mck {

// Surface/twist data selecting a product table. Punctured scenarios are
// single-twist; multi-twist circles are assumed disjoint and homologically
// independent (recorded in reports).
struct Scenario {
    int genus = 2;        // g >= 2
    int punctures = 0;    // k
    int circles = 1;      // l
    int max_stage = 12;   // D
    int index_cutoff = 6; // M, puncture-sector index cutoff

    bool closed_single() const { return punctures == 0 && circles == 1; }
    int morse_odd_count() const { return 2 * genus - 1 - circles; }
    void validate() const;
    std::string label() const;
};

enum class GenKind : int {
    F = 0,
    E = 1,
    U = 2,
    K = 3,
    G = 10,
    Varphi = 11,
    H = 12,
    V = 13,
    MorseOdd = 14,
    CVan = 15,
};

struct Gen {
    GenKind kind = GenKind::F;
    int circle = 0;   // for E/H/G (1-based), 0 otherwise
    int punct = 0;    // for U/V/Varphi (1-based), 0 otherwise
    int index = 0;    // i for E/H/U/V, r for MorseOdd
    int stage = 0;    // d

    auto operator<=>(const Gen&) const = default;
};

int gen_parity(GenKind k);  // 0 even, 1 odd

// Finite rational linear combination of same-stage, same-parity generators.
struct FloerClass {
    int stage = 0;
    int parity = 0;
    std::map<Gen, Rat> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    FloerClass& add(const Gen& g, const Rat& c);
};

FloerClass fc_add(const FloerClass& a, const FloerClass& b);
FloerClass fc_scale(const FloerClass& a, const Rat& c);

// Product tables for HF*(phi^d) of powers of (multi-)Dehn twists, with the
// distinguished stage-1 class f^1 acting as the colimit connecting map.
class FloerAlgebra {
public:
    explicit FloerAlgebra(Scenario s);

    const Scenario& scenario() const { return s_; }

    std::vector<Gen> basis(int stage, int parity) const;
    std::pair<int, int> graded_dims(int stage) const;

    FloerClass product(const FloerClass& a, const FloerClass& b) const;
    FloerClass seidel_class() const;  // f^1
    FloerClass unit() const;          // f^0 for the closed single-twist table
    FloerClass single(const Gen& g) const;

    SparseVec to_vec(const FloerClass& c) const;  // coords in basis(stage, parity)
    std::string render(const FloerClass& c) const;
    std::string gen_str(const Gen& g) const;

private:
    Scenario s_;

    void check_gen(const Gen& g) const;
    std::map<Gen, Rat> gen_product(const Gen& a, const Gen& b) const;
};

}  // namespace mck
