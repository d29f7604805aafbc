#pragma once

#include <vector>

#include "zdbox/bounds.hpp"
#include "zdbox/graph.hpp"
#include "zdbox/representation.hpp"
#include "zdbox/verdict.hpp"

namespace zdbox {

/// max(lo) <= min(hi), exact.
inline bool intersects(const Interval& x, const Interval& y) { return x.lo <= y.hi && y.lo <= x.hi; }

/// Intersection graph of one dimension, indexed like the assignment's intervals.
AdjacencyMatrix edges_of_assignment(const IntervalAssignment& a);

/// Every interval valid (lo <= hi). Throws InvalidInput if the assignment does not cover
/// every vertex of `rep`.
Verdict verify_intervals(const BoxRepresentation& rep, std::size_t dim);

/// E(G) is contained in the edges of dimension `dim`. Throws InvalidInput on vertex mismatch.
Verdict verify_supergraph(const ZdGraph& g, const BoxRepresentation& rep, std::size_t dim);

/// For every u != v: uv in E(G) iff the intervals meet in every dimension. A zero-dimensional
/// representation verifies exactly when G is complete. Throws InvalidInput on vertex mismatch.
Verdict verify_intersection(const ZdGraph& g, const BoxRepresentation& rep);

/// Edges of dimension `dim` equal {uv : w(u) + w(v) >= S}.
Verdict verify_threshold(const BoxRepresentation& rep, std::size_t dim, const ThresholdCertificate& cert);

/// All checks for a construction: interval validity, intersection, supergraph and threshold per dimension.
std::vector<Verdict> verify_construction(const ZdGraph& g, const Construction& c);

/// Builds Gamma(Z_N), its representation and witnesses, and verifies all of them.
/// `ok` requires every verdict to pass and the verified bounds to meet at the predicted value.
BoxicityReport certify_zn(Nat N);

/// Same pipeline for Gamma(Z_2^k); the verified interval is [floor(k/2), k] for k >= 3.
BoxicityReport certify_boolean(unsigned k);

}  // namespace zdbox
