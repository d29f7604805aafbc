#pragma once

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "zdbox/arith.hpp"

namespace zdbox {

/// Vertex label: a residue for Z_N, a coordinate bitmask for Z_2^k, a plain id otherwise.
using Label = std::uint64_t;
/// Position in a graph's vertex list.
using VertexId = std::size_t;

enum class Origin { zn, boolean, reduced, induced, external };

const char* to_string(Origin o);

/// Decimal text, or a `bit_width`-character coordinate string when bit_width > 0.
std::string format_label(Label l, unsigned bit_width);

/// Dense symmetric bit matrix.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(std::size_t n);

    std::size_t size() const { return n_; }
    bool test(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j) {
        bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }
    void reset(std::size_t i, std::size_t j) {
        bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
        bits_[j * words_ + i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
    std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }
    std::span<std::uint64_t> row(std::size_t i) { return {bits_.data() + i * words_, words_}; }
    std::size_t edge_count() const;

    /// this &= other, row by row.
    void intersect_with(const AdjacencyMatrix& other);

    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Finite simple graph with an explicit, duplicate-free label list.
class ZdGraph {
public:
    ZdGraph() = default;
    /// `bit_width` > 0 means labels are printed as k-bit coordinate strings.
    ZdGraph(Origin origin, Nat parameter, std::vector<Label> labels, unsigned bit_width = 0);

    std::size_t size() const { return labels_.size(); }
    Label label(VertexId v) const { return labels_[v]; }
    std::span<const Label> labels() const { return labels_; }
    std::optional<VertexId> find(Label l) const;
    /// find() that throws InvalidInput for labels outside the graph.
    VertexId id_of(Label l) const;

    bool adjacent(VertexId u, VertexId v) const { return adj_.test(u, v); }
    void add_edge(VertexId u, VertexId v);
    const AdjacencyMatrix& adjacency() const { return adj_; }
    std::size_t edge_count() const { return adj_.edge_count(); }
    bool is_complete() const;

    Origin origin() const { return origin_; }
    /// N for Z_N graphs, k for Z_2^k graphs (inherited by derived graphs), 0 for external.
    Nat parameter() const { return parameter_; }
    unsigned bit_width() const { return bit_width_; }

    std::string format_label(Label l) const;
    /// Inverse of format_label. Throws InvalidInput.
    Label parse_label(std::string_view text) const;

private:
    Origin origin_ = Origin::external;
    Nat parameter_ = 0;
    unsigned bit_width_ = 0;
    std::vector<Label> labels_;
    std::unordered_map<Label, VertexId> index_;
    AdjacencyMatrix adj_;
};

/// Largest N accepted by build_zn_graph (dense storage).
inline constexpr Nat kMaxZnOrder = 65536;
/// Largest k accepted by build_boolean_graph.
inline constexpr unsigned kMaxBooleanRank = 16;

/// Nonzero zero divisors of Z_N in ascending order.
std::vector<Label> zero_divisors(Nat N);

/// Gamma(Z_N): vertices u in [1, N) with gcd(u, N) > 1, u ~ v iff N | uv.
ZdGraph build_zn_graph(Nat N);

/// Coordinate j (1-based) of a Z_2^k label; coordinate 1 is the most significant bit.
inline bool coordinate(Label x, unsigned k, unsigned j) { return (x >> (k - j)) & 1u; }
/// The standard basis vector e_j of Z_2^k.
inline Label basis_vector(unsigned k, unsigned j) { return Label{1} << (k - j); }

/// Gamma(Z_2^k): nonzero, non-identity 0/1 vectors, adjacent iff supports are disjoint.
ZdGraph build_boolean_graph(unsigned k);

struct ReducedGraph {
    ZdGraph graph;                              ///< one vertex per class, labelled by its representative
    std::vector<std::size_t> class_of;          ///< original VertexId -> class index
    std::vector<std::vector<Label>> members;    ///< class index -> original labels, ascending
};

/// Quotient by equal open neighbourhoods. Classes are ordered by representative (minimum label).
ReducedGraph reduce_graph(const ZdGraph& g);

/// Subgraph induced by `subset`, keeping the given order. Throws InvalidInput on unknown
/// or repeated labels.
ZdGraph induced_subgraph(const ZdGraph& g, std::span<const Label> subset);

/// Edge-list text: "n m", then m lines "u v" (0-based); blank lines and '#' comments ignored.
/// Errors carry the offending line number.
ZdGraph parse_edge_list(std::istream& in);
ZdGraph parse_edge_list_file(const std::string& path);
void write_edge_list(const ZdGraph& g, std::ostream& out);

/// Anything exposing label lookup and pairwise adjacency.
template <class G>
concept AdjacencyView = requires(const G& g, Label l, VertexId v) {
    { g.find(l) } -> std::same_as<std::optional<VertexId>>;
    { g.adjacent(v, v) } -> std::convertible_to<bool>;
    { g.format_label(l) } -> std::convertible_to<std::string>;
};

/// Gamma(Z_N) evaluated on demand, without storing adjacency. VertexId equals the residue.
class ZnAdjacency {
public:
    explicit ZnAdjacency(Nat N);
    std::optional<VertexId> find(Label l) const;
    bool adjacent(VertexId u, VertexId v) const;
    std::string format_label(Label l) const { return std::to_string(l); }

private:
    Nat N_;
};

static_assert(AdjacencyView<ZdGraph>);
static_assert(AdjacencyView<ZnAdjacency>);

}  // namespace zdbox
