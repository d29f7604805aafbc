#pragma once

#include <set>
#include <utility>
#include <vector>

#include "zdbox/arith.hpp"
#include "zdbox/graph.hpp"
#include "zdbox/verdict.hpp"

namespace zdbox {

/// t vertex pairs claimed to induce the complement of a perfect matching on 2t vertices.
struct RobertsWitness {
    std::vector<std::pair<Label, Label>> pairs;

    std::size_t size() const { return pairs.size(); }
    friend bool operator==(const RobertsWitness&, const RobertsWitness&) = default;
};

/// Vertices claimed pairwise non-adjacent.
struct IndependenceWitness {
    std::vector<Label> vertices;

    friend bool operator==(const IndependenceWitness&, const IndependenceWitness&) = default;
};

/// Which of the three lower-bound situations N falls into (requires a >= 2):
///   1: N not 2 mod 4;  2: N = 2 mod 4 with some odd exponent >= 3;  3: N = 2 mod 4, odd exponents <= 2.
int lower_bound_case(const Factorization& fact);

/// Index (0-based) of the smallest odd prime with exponent >= 3, or fact.size() if none.
std::size_t large_exponent_index(const Factorization& fact);

/// {N / p_i^{n_i}, 2N / p_i^{n_i}}
std::pair<Label, Label> prime_power_pair(const Factorization& fact, std::size_t factor);

/// The induced Roberts graph for Gamma(Z_N), a >= 2. Size a in cases 1 and 2, a - 1 in case 3.
/// Case 2 uses T' = {N/2, N/(2 p)} for the large-exponent prime p. Throws InvalidInput for a < 2.
RobertsWitness roberts_witness_zn(const Factorization& fact);

/// Pairs (e_{2i-1}, e_{2i-1} + e_{2i}) for i = 1..floor(k/2); empty for k = 2 where
/// e_1 + e_2 is the all-ones vector and not a vertex.
RobertsWitness roberts_witness_boolean(unsigned k);

/// A single non-adjacent pair when g is incomplete, else empty.
RobertsWitness small_lower_bound(const ZdGraph& g);

/// {p_1 u : (p_1 u)^2 < N}, pairwise products below N.
IndependenceWitness independence_witness_zn(const Factorization& fact);

struct WitnessCheck {
    Verdict verdict;
    std::size_t lower_bound = 0;  ///< t when the witness verifies, else 0
};

/// Distinct vertices, non-adjacent pairs, every cross pair adjacent.
/// Throws InvalidInput when a witness vertex is not in g.
template <AdjacencyView G>
WitnessCheck verify_roberts_witness(const G& g, const RobertsWitness& w) {
    WitnessCheck out;
    out.verdict.check = "roberts-witness";
    std::vector<VertexId> ids;
    std::vector<Label> labels;
    for (auto [x, y] : w.pairs) {
        for (Label l : {x, y}) {
            auto id = g.find(l);
            if (!id) throw InvalidInput("witness vertex " + g.format_label(l) + " is not in the graph");
            ids.push_back(*id);
            labels.push_back(l);
        }
    }
    std::set<Label> seen;
    for (Label l : labels)
        if (!seen.insert(l).second)
            out.verdict.fail({g.format_label(l), g.format_label(l), "witness", false, false, "repeated vertex"});
    for (std::size_t a = 0; a < ids.size(); ++a) {
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
            if (ids[a] == ids[b]) continue;
            const bool same_pair = a / 2 == b / 2;
            const bool adjacent = g.adjacent(ids[a], ids[b]);
            if (adjacent == same_pair)
                out.verdict.fail({g.format_label(labels[a]), g.format_label(labels[b]), "witness", !same_pair, adjacent,
                                  same_pair ? "pair is adjacent" : "cross pair is not adjacent"});
        }
    }
    if (out.verdict.ok()) out.lower_bound = w.size();
    return out;
}

template <AdjacencyView G>
Verdict verify_independence(const G& g, const IndependenceWitness& w) {
    Verdict out;
    out.check = "independence-witness";
    std::vector<VertexId> ids;
    for (Label l : w.vertices) {
        auto id = g.find(l);
        if (!id) throw InvalidInput("witness vertex " + g.format_label(l) + " is not in the graph");
        ids.push_back(*id);
    }
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
            if (ids[a] == ids[b])
                out.fail({g.format_label(w.vertices[a]), g.format_label(w.vertices[b]), "independence", false, false,
                          "repeated vertex"});
            else if (g.adjacent(ids[a], ids[b]))
                out.fail({g.format_label(w.vertices[a]), g.format_label(w.vertices[b]), "independence", false, true,
                          "vertices are adjacent"});
        }
    return out;
}

}  // namespace zdbox
