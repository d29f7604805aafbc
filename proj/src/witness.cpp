#include "zdbox/witness.hpp"

namespace zdbox {
namespace {

Nat power(Nat p, unsigned e) {
    Nat r = 1;
    while (e--) r *= p;
    return r;
}

}  // namespace

std::size_t large_exponent_index(const Factorization& fact) {
    for (std::size_t i = 1; i < fact.size(); ++i)
        if (fact[i].n >= 3) return i;
    return fact.size();
}

int lower_bound_case(const Factorization& fact) {
    if (fact.size() < 2) throw InvalidInput("lower-bound witness needs at least two prime factors");
    if (fact.N % 4 != 2) return 1;
    return large_exponent_index(fact) < fact.size() ? 2 : 3;
}

std::pair<Label, Label> prime_power_pair(const Factorization& fact, std::size_t factor) {
    const Nat q = power(fact[factor].p, fact[factor].n);
    return {fact.N / q, 2 * (fact.N / q)};
}

RobertsWitness roberts_witness_zn(const Factorization& fact) {
    const Nat N = fact.N;
    RobertsWitness w;
    switch (lower_bound_case(fact)) {
        case 1:
            for (std::size_t i = 0; i < fact.size(); ++i) w.pairs.push_back(prime_power_pair(fact, i));
            break;
        case 2: {
            const std::size_t kappa = large_exponent_index(fact);
            const Nat p = fact[kappa].p;
            const Nat q = power(p, fact[kappa].n - 1);
            w.pairs.emplace_back(N / 2, N / (2 * p));
            w.pairs.emplace_back(N / q, 2 * (N / q));
            for (std::size_t i = 1; i < fact.size(); ++i)
                if (i != kappa) w.pairs.push_back(prime_power_pair(fact, i));
            break;
        }
        default:
            for (std::size_t i = 1; i < fact.size(); ++i) w.pairs.push_back(prime_power_pair(fact, i));
    }
    return w;
}

RobertsWitness roberts_witness_boolean(unsigned k) {
    if (k < 2) throw InvalidInput("Gamma(Z_2^k) needs k >= 2");
    RobertsWitness w;
    if (k == 2) return w;
    for (unsigned i = 1; i <= k / 2; ++i) {
        const Label first = basis_vector(k, 2 * i - 1);
        w.pairs.emplace_back(first, first | basis_vector(k, 2 * i));
    }
    return w;
}

RobertsWitness small_lower_bound(const ZdGraph& g) {
    for (VertexId a = 0; a < g.size(); ++a)
        for (VertexId b = a + 1; b < g.size(); ++b)
            if (!g.adjacent(a, b)) return {{{g.label(a), g.label(b)}}};
    return {};
}

IndependenceWitness independence_witness_zn(const Factorization& fact) {
    IndependenceWitness w;
    if (fact.size() == 0) return w;
    const Nat p = fact[0].p;
    for (Nat u = 1; (p * u) * (p * u) < fact.N; ++u) w.vertices.push_back(p * u);
    return w;
}

}  // namespace zdbox
