#pragma once

#include <string>
#include <vector>

#include "zdbox/arith.hpp"
#include "zdbox/graph.hpp"
#include "zdbox/rational.hpp"

namespace zdbox {

/// Closed interval [lo, hi]; a point interval has lo == hi exactly.
struct Interval {
    Rational lo;
    Rational hi;

    static Interval point(const Rational& x) { return {x, x}; }
    bool is_point() const { return lo == hi; }
    bool valid() const { return lo <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// One interval supergraph: an interval per vertex, indexed like BoxRepresentation::vertices.
struct IntervalAssignment {
    std::string label;
    std::vector<Interval> intervals;

    friend bool operator==(const IntervalAssignment&, const IntervalAssignment&) = default;
};

/// A d-box representation candidate. Zero dimensions claims the target is complete.
struct BoxRepresentation {
    std::vector<Label> vertices;
    std::vector<IntervalAssignment> dims;
    unsigned label_bits = 0;  ///< see format_label

    std::size_t dimension() const { return dims.size(); }

    friend bool operator==(const BoxRepresentation&, const BoxRepresentation&) = default;
};

/// Weights and threshold S for one dimension: u ~ v iff w(u) + w(v) >= S.
struct ThresholdCertificate {
    std::string label;
    std::vector<Rational> weights;
    Rational threshold;

    friend bool operator==(const ThresholdCertificate&, const ThresholdCertificate&) = default;
};

/// Class of a residue u for one prime factor: j = f(p_i, gcd(u, N)), kbit = min(f(2, gcd(u, N)), 1).
struct ClassIndex {
    unsigned j = 0;
    unsigned kbit = 0;

    friend bool operator==(const ClassIndex&, const ClassIndex&) = default;
};

/// `factor` is a 0-based index into fact.factors. Requires 1 <= u < N.
ClassIndex class_of(const Factorization& fact, std::size_t factor, Nat u);

enum class Method { none, general, improved, boolean };
const char* to_string(Method m);

/// A built representation plus whatever threshold certificates come with it.
struct Construction {
    Method method = Method::none;
    BoxRepresentation rep;
    std::vector<ThresholdCertificate> thresholds;  ///< parallel to rep.dims, or empty

    friend bool operator==(const Construction&, const Construction&) = default;
};

/// The a-dimensional threshold representation, one dimension I_i per prime factor.
Construction build_general_rep(const Factorization& fact);
Construction build_general_rep(Nat N);

/// Returns an empty string when the (a-1)-dimensional construction applies, else the failed condition.
std::string improved_rep_obstruction(const Factorization& fact);

/// The (a-1)-dimensional representation I_2..I_a for N = 2 * prod p_i^{n_i}, n_i <= 2.
/// Throws CaseMismatch naming the failed precondition.
Construction build_improved_rep(const Factorization& fact);
Construction build_improved_rep(Nat N);

/// k threshold dimensions for Gamma(Z_2^k): coordinate i set -> point g(v), otherwise [0, 1].
Construction build_boolean_rep(unsigned k);

/// Dispatch: prime or prime square -> 0 dims; improved case -> a-1 dims; otherwise a dims.
Construction build_representation(Nat N);

}  // namespace zdbox
