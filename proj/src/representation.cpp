#include "zdbox/representation.hpp"

#include <numeric>

namespace zdbox {
namespace {

std::string dim_label(std::size_t one_based) { return "I_" + std::to_string(one_based); }

/// g(v) = v / 2N
Rational perturbation(Nat v, Nat N) { return Rational::of_fraction(v, 2 * N); }

Interval improved_interval_single(const ClassIndex& c, const Rational& g) {
    // n_i = 1
    if (c.j == 0) return Interval::point(c.kbit == 0 ? g : Rational(1) + g);
    return c.kbit == 1 ? Interval{0, 2} : Interval{1, 2};
}

Interval improved_interval_square(const ClassIndex& c, const Rational& g) {
    // n_i = 2
    if (c.j == 0) return Interval::point(c.kbit == 0 ? g : Rational(1) + g);
    if (c.j == 1) return c.kbit == 0 ? Interval::point(Rational(2) + g) : Interval{Rational(3, 2), 3};
    return c.kbit == 0 ? Interval{1, 2} : Interval{0, 3};
}

}  // namespace

ClassIndex class_of(const Factorization& fact, std::size_t factor, Nat u) {
    if (factor >= fact.size()) throw InvalidInput("class_of: factor index out of range");
    if (u == 0 || u >= fact.N) throw InvalidInput("class_of: vertex must lie in [1, N)");
    const Nat g = std::gcd(u, fact.N);
    ClassIndex c;
    c.j = prime_valuation(fact[factor].p, g);
    c.kbit = prime_valuation(2, g) > 0 ? 1 : 0;
    return c;
}

const char* to_string(Method m) {
    switch (m) {
        case Method::none: return "none";
        case Method::general: return "general";
        case Method::improved: return "improved";
        case Method::boolean: return "boolean";
    }
    return "?";
}

Construction build_general_rep(const Factorization& fact) {
    const Nat N = fact.N;
    Construction out;
    out.method = Method::general;
    out.rep.vertices = zero_divisors(N);
    if (out.rep.vertices.empty()) return out;
    for (std::size_t i = 0; i < fact.size(); ++i) {
        const unsigned n = fact[i].n;
        const unsigned half = (n + 1) / 2;
        IntervalAssignment dim{dim_label(i + 1), {}};
        ThresholdCertificate cert{dim.label, {}, Rational(n)};
        for (Label v : out.rep.vertices) {
            const unsigned j = class_of(fact, i, v).j;
            if (j < half)
                dim.intervals.push_back(Interval::point(Rational(j) + perturbation(v, N)));
            else
                dim.intervals.push_back({Rational(n - j), Rational(n)});
            cert.weights.emplace_back(j);
        }
        out.rep.dims.push_back(std::move(dim));
        out.thresholds.push_back(std::move(cert));
    }
    return out;
}

Construction build_general_rep(Nat N) { return build_general_rep(factorize(N)); }

std::string improved_rep_obstruction(const Factorization& fact) {
    if (fact.N % 4 != 2) return "N = " + std::to_string(fact.N) + " is not 2 mod 4";
    if (fact.size() < 2) return "N has fewer than two prime factors";
    for (std::size_t i = 1; i < fact.size(); ++i)
        if (fact[i].n > 2)
            return "exponent of " + std::to_string(fact[i].p) + " is " + std::to_string(fact[i].n) + " > 2";
    return {};
}

Construction build_improved_rep(const Factorization& fact) {
    if (auto why = improved_rep_obstruction(fact); !why.empty())
        throw CaseMismatch("improved representation does not apply: " + why);
    const Nat N = fact.N;
    Construction out;
    out.method = Method::improved;
    out.rep.vertices = zero_divisors(N);
    // factor 0 is the prime 2; dimensions are I_2 .. I_a
    for (std::size_t i = 1; i < fact.size(); ++i) {
        IntervalAssignment dim{dim_label(i + 1), {}};
        for (Label v : out.rep.vertices) {
            const ClassIndex c = class_of(fact, i, v);
            const Rational g = perturbation(v, N);
            dim.intervals.push_back(fact[i].n == 1 ? improved_interval_single(c, g) : improved_interval_square(c, g));
        }
        out.rep.dims.push_back(std::move(dim));
    }
    return out;
}

Construction build_improved_rep(Nat N) { return build_improved_rep(factorize(N)); }

Construction build_boolean_rep(unsigned k) {
    const ZdGraph g = build_boolean_graph(k);
    const Nat n = g.size();
    Construction out;
    out.method = Method::boolean;
    out.rep.vertices.assign(g.labels().begin(), g.labels().end());
    out.rep.label_bits = k;
    for (unsigned i = 1; i <= k; ++i) {
        IntervalAssignment dim{dim_label(i), {}};
        ThresholdCertificate cert{dim.label, {}, Rational(1)};
        for (VertexId v = 0; v < n; ++v) {
            if (coordinate(g.label(v), k, i)) {
                dim.intervals.push_back(Interval::point(Rational::of_fraction(v + 1, n + 2)));
                cert.weights.emplace_back(0);
            } else {
                dim.intervals.push_back({0, 1});
                cert.weights.emplace_back(1);
            }
        }
        out.rep.dims.push_back(std::move(dim));
        out.thresholds.push_back(std::move(cert));
    }
    return out;
}

Construction build_representation(Nat N) {
    const Factorization fact = factorize(N);
    if (fact.size() == 1 && fact[0].n <= 2) {
        Construction out;
        out.rep.vertices = zero_divisors(N);
        return out;
    }
    if (improved_rep_obstruction(fact).empty()) return build_improved_rep(fact);
    return build_general_rep(fact);
}

}  // namespace zdbox
