#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mck/rational.hpp"

namespace mck {

// Named generators with positive integer weights; fixed per ring context.
struct VarTable {
    std::vector<std::string> names;
    std::vector<int> weights;

    int arity() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& name) const;  // -1 if absent
    bool operator==(const VarTable&) const = default;
};

using Expo = std::vector<int>;

int mono_weight(const VarTable& vars, const Expo& e);
Expo mono_mul(const Expo& a, const Expo& b);
std::string mono_str(const VarTable& vars, const Expo& e);

// Display/canonical order: weight ascending, then exponent vector
// lexicographically descending (so X^6 comes before X^4 Y at equal weight).
struct MonoOrder {
    const VarTable* vars;
    bool operator()(const Expo& a, const Expo& b) const;
};

// All monomials of total weight <= max_weight, in MonoOrder.
std::vector<Expo> monomials_up_to(const VarTable& vars, int max_weight);
// Optional per-variable exponent caps (entry <0 means uncapped).
std::vector<Expo> monomials_up_to(const VarTable& vars, int max_weight,
                                  const std::vector<int>& expo_caps);

// Multivariate polynomial over Q. No zero coefficients stored; every exponent
// vector has length = arity of the variable table it is used with.
class Poly {
public:
    Poly() = default;
    explicit Poly(int arity) : arity_(arity) {}
    static Poly zero(int arity) { return Poly(arity); }
    static Poly constant(int arity, const Rat& c);
    static Poly monomial(const Expo& e, const Rat& c = Rat(1));

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }
    Rat coeff(const Expo& e) const;
    void add_term(const Expo& e, const Rat& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rat& c) const;
    bool operator==(const Poly&) const = default;

    // Top weight of any monomial (filtration degree); nullopt for 0.
    std::optional<int> top_weight(const VarTable& vars) const;
    bool is_homogeneous(const VarTable& vars) const;
    // Splits into weight-homogeneous parts, ascending weight.
    std::map<int, Poly> weight_parts(const VarTable& vars) const;

    Rat evaluate(const std::vector<Rat>& point) const;
    std::string str(const VarTable& vars) const;

private:
    int arity_ = 0;
    std::map<Expo, Rat> terms_;
};

// Polynomial syntax: integer coefficients, `*`, `^`, `+`, `-`, parentheses
// not required by the spec but accepted. Example: "Y*Z - Y^3 - Z^2".
Poly parse_poly(const VarTable& vars, const std::string& text);

}  // namespace mck
