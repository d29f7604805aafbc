#include "zdbox/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "zdbox/graph.hpp"

namespace zdbox {

const char* to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::prime: return "prime";
        case CaseLabel::prime_square: return "prime-square";
        case CaseLabel::prime_power_cube_plus: return "prime-power-cube+";
        case CaseLabel::case_2mod4_small_exponents: return "case-2mod4-small-exponents";
        case CaseLabel::general: return "general";
        case CaseLabel::boolean: return "boolean";
    }
    return "?";
}

const char* describe(CaseLabel c) {
    switch (c) {
        case CaseLabel::prime: return "prime, empty graph";
        case CaseLabel::prime_square: return "prime square, complete graph";
        case CaseLabel::prime_power_cube_plus: return "prime power, exponent ≥ 3";
        case CaseLabel::case_2mod4_small_exponents: return "2 mod 4, exponents ≤ 2";
        case CaseLabel::general: return "general";
        case CaseLabel::boolean: return "boolean ring";
    }
    return "?";
}

CaseLabel parse_case_label(const std::string& s) {
    for (auto c : {CaseLabel::prime, CaseLabel::prime_square, CaseLabel::prime_power_cube_plus,
                   CaseLabel::case_2mod4_small_exponents, CaseLabel::general, CaseLabel::boolean})
        if (s == to_string(c)) return c;
    throw InvalidInput("unknown case label \"" + s + "\"");
}

TheoremValue theorem_box_value(const Factorization& fact) {
    const Nat a = fact.size();
    if (a == 1) {
        const unsigned n = fact[0].n;
        if (n == 1) return {0, CaseLabel::prime};
        if (n == 2) return {0, CaseLabel::prime_square};
        return {1, CaseLabel::prime_power_cube_plus};
    }
    if (fact.N % 4 == 2 && std::all_of(fact.factors.begin() + 1, fact.factors.end(),
                                       [](const PrimePower& pp) { return pp.n <= 2; }))
        return {a - 1, CaseLabel::case_2mod4_small_exponents};
    return {a, CaseLabel::general};
}

Bounds threshold_dim_bounds(const Factorization& fact) {
    const Nat a = fact.size();
    if (a < 2) return {0, 1, "degenerate: fewer than two prime factors"};
    return {a - 1, a, {}};
}

CubicityBounds cubicity_bounds(const Factorization& fact) {
    CubicityBounds out;
    const Nat p = fact[0].p;
    const Nat s = isqrt(fact.N / (p * p));
    out.upper = static_cast<Nat>(fact.size()) * ceil_log2(fact.N);
    if (s >= 2) {
        out.lower = std::log2(static_cast<double>(s - 1)) / 2.0;
        out.lower_expr = "log2(" + std::to_string(s - 1) + ")/2";
    } else {
        out.lower = 0.0;
        out.lower_clamped = true;
        out.lower_expr = "clamped: floor(sqrt(N/p1^2)) - 1 = " + std::to_string(static_cast<long long>(s) - 1);
    }
    return out;
}

Bounds boolean_bounds(unsigned k) {
    if (k < 2) throw InvalidInput("boolean bounds need k >= 2");
    return {k / 2, k, {}};
}

Nat cograph_dim_upper(const Factorization& fact) { return fact.size(); }

Nat cograph_dim_upper_boolean(unsigned k) { return k; }

std::size_t ClassSizeTable::total() const {
    std::size_t t = 0;
    for (const auto& r : rows) t += r.size();
    return t;
}

const ClassRow* ClassSizeTable::row_containing(Label l) const {
    for (const auto& r : rows)
        if (std::find(r.members.begin(), r.members.end(), l) != r.members.end()) return &r;
    return nullptr;
}

ClassSizeTable class_size_table(Nat N) {
    const ReducedGraph reduced = reduce_graph(build_zn_graph(N));
    ClassSizeTable table;
    table.N = N;
    for (std::size_t c = 0; c < reduced.members.size(); ++c)
        table.rows.push_back({reduced.graph.label(c), reduced.members[c]});
    return table;
}

bool BoxicityReport::all_verdicts_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.ok(); });
}

}  // namespace zdbox
