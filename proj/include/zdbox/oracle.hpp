#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdbox/graph.hpp"

namespace zdbox {

/// Limits on the exhaustive searches. Exceeding one raises ResourceError.
struct OracleGuard {
    std::size_t max_vertices = 16;
    std::size_t max_nonedges = 16;
    unsigned max_dim = 3;

    /// Hard ceiling: the search works on 64-bit vertex and non-edge masks.
    static constexpr std::size_t kAbsoluteLimit = 62;
    /// Guards raised to the absolute limit (used when ZDBOX_GUARD_OVERRIDE is set).
    static OracleGuard lifted();
};

/// A guard stopped the search. Carries whatever bounds were established before stopping.
class ResourceError : public std::runtime_error {
public:
    ResourceError(std::string guard, const std::string& what, std::optional<std::size_t> lower = std::nullopt,
                  std::optional<std::size_t> upper = std::nullopt)
        : std::runtime_error(what), guard_(std::move(guard)), lower_(lower), upper_(upper) {}

    const std::string& guard() const { return guard_; }
    std::optional<std::size_t> lower() const { return lower_; }
    std::optional<std::size_t> upper() const { return upper_; }

private:
    std::string guard_;
    std::optional<std::size_t> lower_;
    std::optional<std::size_t> upper_;
};

/// Vertex subsets as bitmasks over VertexId.
using VertexSet = std::uint64_t;

struct CliqueList {
    std::vector<VertexSet> cliques;

    std::size_t size() const { return cliques.size(); }
    /// Cliques as sorted label lists, for display and comparison.
    std::vector<std::vector<Label>> labelled(const ZdGraph& g) const;
};

/// All maximal cliques (Bron-Kerbosch with pivoting). Isolated vertices form singleton cliques.
CliqueList maximal_cliques(const ZdGraph& g, const OracleGuard& guard = {});

/// Interval recognition: chordality, then a search for an ordering of the maximal cliques
/// in which the cliques containing each vertex are consecutive.
bool is_interval(const ZdGraph& g, const OracleGuard& guard = {});

/// Whether the non-edges can be covered by d sets S_1..S_d with every K_n - S_c interval.
/// d = 0 tests completeness; d = 1 is interval recognition; d >= 2 searches exhaustively over
/// non-edge subsets with memoized intervality.
bool boxicity_at_most(const ZdGraph& g, unsigned d, const OracleGuard& guard = {});

/// Least d with boxicity_at_most(g, d). ResourceError carries the bounds reached.
std::size_t brute_force_boxicity(const ZdGraph& g, const OracleGuard& guard = {});

}  // namespace zdbox
