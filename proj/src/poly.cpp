#include "mck/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace mck {

int VarTable::index_of(const std::string& name) const {
    for (int i = 0; i < arity(); ++i)
        if (names[i] == name) return i;
    return -1;
}

int mono_weight(const VarTable& vars, const Expo& e) {
    int w = 0;
    for (size_t i = 0; i < e.size(); ++i) w += vars.weights[i] * e[i];
    return w;
}

Expo mono_mul(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::string mono_str(const VarTable& vars, const Expo& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

bool MonoOrder::operator()(const Expo& a, const Expo& b) const {
    int wa = mono_weight(*vars, a), wb = mono_weight(*vars, b);
    if (wa != wb) return wa < wb;
    return a > b;  // lexicographically descending within a weight
}

std::vector<Expo> monomials_up_to(const VarTable& vars, int max_weight) {
    return monomials_up_to(vars, max_weight, std::vector<int>(vars.arity(), -1));
}

std::vector<Expo> monomials_up_to(const VarTable& vars, int max_weight,
                                  const std::vector<int>& expo_caps) {
    std::vector<Expo> out;
    Expo cur(vars.arity(), 0);
    auto rec = [&](auto&& self, int var, int budget) -> void {
        if (var == vars.arity()) {
            out.push_back(cur);
            return;
        }
        int maxe = vars.weights[var] > 0 ? budget / vars.weights[var] : 0;
        if (expo_caps[var] >= 0) maxe = std::min(maxe, expo_caps[var]);
        for (int e = 0; e <= maxe; ++e) {
            cur[var] = e;
            self(self, var + 1, budget - e * vars.weights[var]);
        }
        cur[var] = 0;
    };
    rec(rec, 0, max_weight);
    std::sort(out.begin(), out.end(), MonoOrder{&vars});
    return out;
}

Poly Poly::constant(int arity, const Rat& c) {
    Poly p(arity);
    p.add_term(Expo(arity, 0), c);
    return p;
}

Poly Poly::monomial(const Expo& e, const Rat& c) {
    Poly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Rat Poly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Expo& e, const Rat& c) {
    if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("arity mismatch");
    Rat nv = coeff(e) + c;
    if (nv == 0)
        terms_.erase(e);
    else
        terms_[e] = nv;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const { return scaled(Rat(-1)); }

Poly Poly::scaled(const Rat& c) const {
    Poly r(arity_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(arity_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(mono_mul(ea, eb), ca * cb);
    return r;
}

std::optional<int> Poly::top_weight(const VarTable& vars) const {
    std::optional<int> w;
    for (const auto& [e, c] : terms_) {
        int we = mono_weight(vars, e);
        if (!w || we > *w) w = we;
    }
    return w;
}

bool Poly::is_homogeneous(const VarTable& vars) const {
    return weight_parts(vars).size() <= 1;
}

std::map<int, Poly> Poly::weight_parts(const VarTable& vars) const {
    std::map<int, Poly> parts;
    for (const auto& [e, c] : terms_) {
        int w = mono_weight(vars, e);
        auto it = parts.find(w);
        if (it == parts.end()) it = parts.emplace(w, Poly(arity_)).first;
        it->second.add_term(e, c);
    }
    return parts;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
    Rat s(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        s += t;
    }
    return s;
}

std::string Poly::str(const VarTable& vars) const {
    if (terms_.empty()) return "0";
    std::vector<Expo> keys;
    for (const auto& [e, c] : terms_) keys.push_back(e);
    std::sort(keys.begin(), keys.end(), MonoOrder{&vars});
    std::string s;
    for (const auto& e : keys) {
        Rat c = coeff(e);
        std::string m = mono_str(vars, e);
        std::string cs = rat_str(c < 0 ? -c : c);
        if (s.empty())
            s += (c < 0 ? "-" : "");
        else
            s += (c < 0 ? " - " : " + ");
        if (m == "1")
            s += cs;
        else if (cs == "1")
            s += m;
        else
            s += cs + "*" + m;
    }
    return s;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    char next() {
        skip_ws();
        return s[pos++];
    }
};

Poly parse_sum(const VarTable& vars, Lexer& lx);

Poly parse_atom(const VarTable& vars, Lexer& lx) {
    if (lx.eof()) throw std::invalid_argument("unexpected end of polynomial");
    char c = lx.peek();
    if (c == '(') {
        lx.next();
        Poly p = parse_sum(vars, lx);
        if (lx.eof() || lx.next() != ')') throw std::invalid_argument("missing ')'");
        return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek()))) num += lx.next();
        return Poly::constant(vars.arity(), Rat(Int(num)));
    }
    // variable name: letters, digits after the first char, underscores
    std::string name;
    while (!lx.eof()) {
        char ch = lx.peek();
        if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')
            name += lx.next();
        else
            break;
    }
    int idx = vars.index_of(name);
    if (idx < 0) throw std::invalid_argument("unknown generator '" + name + "'");
    Expo e(vars.arity(), 0);
    e[idx] = 1;
    return Poly::monomial(e);
}

Poly parse_power(const VarTable& vars, Lexer& lx) {
    Poly base = parse_atom(vars, lx);
    if (!lx.eof() && lx.peek() == '^') {
        lx.next();
        std::string num;
        while (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek()))) num += lx.next();
        if (num.empty()) throw std::invalid_argument("missing exponent");
        int k = std::stoi(num);
        Poly r = Poly::constant(vars.arity(), Rat(1));
        for (int i = 0; i < k; ++i) r = r * base;
        return r;
    }
    return base;
}

Poly parse_product(const VarTable& vars, Lexer& lx) {
    Poly p = parse_power(vars, lx);
    while (!lx.eof()) {
        char c = lx.peek();
        if (c == '*') {
            lx.next();
            p = p * parse_power(vars, lx);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
            p = p * parse_power(vars, lx);  // implicit multiplication
        } else {
            break;
        }
    }
    return p;
}

Poly parse_sum(const VarTable& vars, Lexer& lx) {
    bool neg = false;
    if (!lx.eof() && (lx.peek() == '-' || lx.peek() == '+')) neg = lx.next() == '-';
    Poly p = parse_product(vars, lx);
    if (neg) p = -p;
    while (!lx.eof()) {
        char c = lx.peek();
        if (c != '+' && c != '-') break;
        lx.next();
        Poly q = parse_product(vars, lx);
        p = (c == '+') ? p + q : p - q;
    }
    return p;
}

}  // namespace

Poly parse_poly(const VarTable& vars, const std::string& text) {
    Lexer lx{text};
    Poly p = parse_sum(vars, lx);
    if (!lx.eof()) throw std::invalid_argument("trailing characters in polynomial: " + text);
    return p;
}

}  // namespace mck
