#include "zdbox/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace zdbox {
namespace {

/// Graph on at most 62 vertices as neighbourhood masks.
struct MaskGraph {
    std::size_t n = 0;
    std::vector<VertexSet> adj;

    VertexSet all() const { return n == 0 ? 0 : (VertexSet{1} << n) - 1; }
};

VertexSet bit(std::size_t i) { return VertexSet{1} << i; }

MaskGraph to_masks(const ZdGraph& g) {
    MaskGraph m;
    m.n = g.size();
    m.adj.assign(m.n, 0);
    for (VertexId u = 0; u < m.n; ++u)
        for (VertexId v = 0; v < m.n; ++v)
            if (u != v && g.adjacent(u, v)) m.adj[u] |= bit(v);
    return m;
}

void check_vertices(const ZdGraph& g, const OracleGuard& guard) {
    const std::size_t limit = std::min(guard.max_vertices, OracleGuard::kAbsoluteLimit);
    if (g.size() > limit)
        throw ResourceError("max_vertices", "oracle guard max_vertices = " + std::to_string(limit) + " exceeded: graph has " +
                                                std::to_string(g.size()) + " vertices");
}

/// Maximum cardinality search; chordal iff the reverse visit order is a perfect elimination order.
bool is_chordal(const MaskGraph& g) {
    std::vector<std::size_t> weight(g.n, 0);
    std::vector<std::size_t> position(g.n, 0);
    VertexSet visited = 0;
    for (std::size_t step = 0; step < g.n; ++step) {
        std::size_t best = g.n;
        for (std::size_t v = 0; v < g.n; ++v)
            if (!(visited & bit(v)) && (best == g.n || weight[v] > weight[best])) best = v;
        position[best] = step;
        const VertexSet earlier = g.adj[best] & visited;
        if (earlier) {
            std::size_t latest = g.n;
            for (VertexSet s = earlier; s; s &= s - 1) {
                const auto u = static_cast<std::size_t>(std::countr_zero(s));
                if (latest == g.n || position[u] > position[latest]) latest = u;
            }
            const VertexSet rest = earlier & ~bit(latest);
            if ((rest & ~g.adj[latest]) != 0) return false;
        }
        visited |= bit(best);
        for (VertexSet s = g.adj[best] & ~visited; s; s &= s - 1) ++weight[std::countr_zero(s)];
    }
    return true;
}

void bron_kerbosch(const MaskGraph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::size_t pivot = 0;
    int best = -1;
    for (VertexSet s = p | x; s; s &= s - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(s));
        const int c = std::popcount(p & g.adj[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (VertexSet s = p & ~g.adj[pivot]; s; s &= s - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(s));
        bron_kerbosch(g, r | bit(v), p & g.adj[v], x & g.adj[v], out);
        p &= ~bit(v);
        x |= bit(v);
    }
}

std::vector<VertexSet> cliques_of(const MaskGraph& g) {
    std::vector<VertexSet> out;
    if (g.n == 0) return out;
    bron_kerbosch(g, 0, g.all(), 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Search for a consecutive arrangement. A state is (placed cliques, last clique); every vertex
/// of a placed clique outside the last one is closed and may not reappear.
class Arrangement {
public:
    explicit Arrangement(std::vector<VertexSet> cliques) : cliques_(std::move(cliques)) {}

    bool exists() {
        if (cliques_.empty()) return true;
        full_ = cliques_.size() == 64 ? ~VertexSet{0} : (VertexSet{1} << cliques_.size()) - 1;
        for (std::size_t c = 0; c < cliques_.size(); ++c)
            if (extend(bit(c), c, 0)) return true;
        return false;
    }

private:
    struct Key {
        VertexSet placed;
        std::size_t last;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return std::hash<VertexSet>{}(k.placed * 131 + k.last); }
    };

    bool extend(VertexSet placed, std::size_t last, VertexSet closed) {
        if (placed == full_) return true;
        if (failed_.count({placed, last})) return false;
        for (std::size_t c = 0; c < cliques_.size(); ++c) {
            if (placed & bit(c)) continue;
            if (cliques_[c] & closed) continue;
            if (extend(placed | bit(c), c, closed | (cliques_[last] & ~cliques_[c]))) return true;
        }
        failed_.insert({placed, last});
        return false;
    }

    std::vector<VertexSet> cliques_;
    VertexSet full_ = 0;
    std::unordered_set<Key, KeyHash> failed_;
};

bool interval_masks(const MaskGraph& g) {
    if (!is_chordal(g)) return false;
    // chordal: at most n maximal cliques
    return Arrangement(cliques_of(g)).exists();
}

struct NonEdges {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

NonEdges non_edges(const MaskGraph& g) {
    NonEdges out;
    for (std::size_t u = 0; u < g.n; ++u)
        for (std::size_t v = u + 1; v < g.n; ++v)
            if (!(g.adj[u] & bit(v))) out.pairs.emplace_back(u, v);
    return out;
}

/// K_n minus the non-edges selected by `subset`.
MaskGraph complete_minus(std::size_t n, const NonEdges& ne, VertexSet subset) {
    MaskGraph h;
    h.n = n;
    h.adj.resize(n);
    for (std::size_t u = 0; u < n; ++u) h.adj[u] = h.all() & ~bit(u);
    for (VertexSet s = subset; s; s &= s - 1) {
        auto [u, v] = ne.pairs[static_cast<std::size_t>(std::countr_zero(s))];
        h.adj[u] &= ~bit(v);
        h.adj[v] &= ~bit(u);
    }
    return h;
}

bool cover(const std::vector<VertexSet>& options, VertexSet uncovered, unsigned colours_left) {
    if (uncovered == 0) return true;
    if (colours_left == 0) return false;
    const VertexSet first = uncovered & (~uncovered + 1);
    for (VertexSet s : options)
        if ((s & first) && cover(options, uncovered & ~s, colours_left - 1)) return true;
    return false;
}

}  // namespace

OracleGuard OracleGuard::lifted() {
    OracleGuard g;
    g.max_vertices = kAbsoluteLimit;
    g.max_nonedges = 24;
    g.max_dim = 8;
    return g;
}

std::vector<std::vector<Label>> CliqueList::labelled(const ZdGraph& g) const {
    std::vector<std::vector<Label>> out;
    for (VertexSet c : cliques) {
        std::vector<Label> ls;
        for (VertexSet s = c; s; s &= s - 1) ls.push_back(g.label(static_cast<std::size_t>(std::countr_zero(s))));
        std::sort(ls.begin(), ls.end());
        out.push_back(std::move(ls));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CliqueList maximal_cliques(const ZdGraph& g, const OracleGuard& guard) {
    check_vertices(g, guard);
    return {cliques_of(to_masks(g))};
}

bool is_interval(const ZdGraph& g, const OracleGuard& guard) {
    check_vertices(g, guard);
    return interval_masks(to_masks(g));
}

bool boxicity_at_most(const ZdGraph& g, unsigned d, const OracleGuard& guard) {
    if (d > guard.max_dim)
        throw ResourceError("max_dim", "oracle guard max_dim = " + std::to_string(guard.max_dim) + " exceeded (d = " +
                                           std::to_string(d) + ")");
    check_vertices(g, guard);
    const MaskGraph m = to_masks(g);
    if (d == 0) return g.is_complete();
    if (d == 1) return interval_masks(m);

    const NonEdges ne = non_edges(m);
    const std::size_t count = ne.pairs.size();
    const std::size_t limit = std::min(guard.max_nonedges, OracleGuard::kAbsoluteLimit);
    if (count > limit)
        throw ResourceError("max_nonedges", "oracle guard max_nonedges = " + std::to_string(limit) +
                                                " exceeded: graph has " + std::to_string(count) + " non-edges");
    if (count == 0) return true;

    // good[S]: K_n - S is interval, one check per subset.
    const std::size_t subsets = std::size_t{1} << count;
    std::vector<char> good(subsets);
    for (std::size_t s = 0; s < subsets; ++s) good[s] = interval_masks(complete_minus(m.n, ne, s));

    // A colour class can always be enlarged to an inclusion-maximal good subset.
    std::vector<char> above(good);
    for (std::size_t b = 0; b < count; ++b)
        for (std::size_t s = 0; s < subsets; ++s)
            if (!(s & (std::size_t{1} << b))) above[s] |= above[s | (std::size_t{1} << b)];
    std::vector<VertexSet> maximal;
    for (std::size_t s = 0; s < subsets; ++s) {
        if (!good[s]) continue;
        bool strictly_below = false;
        for (std::size_t b = 0; b < count && !strictly_below; ++b)
            if (!(s & (std::size_t{1} << b)) && above[s | (std::size_t{1} << b)]) strictly_below = true;
        if (!strictly_below) maximal.push_back(s);
    }
    return cover(maximal, subsets - 1, d);
}

std::size_t brute_force_boxicity(const ZdGraph& g, const OracleGuard& guard) {
    for (unsigned d = 0; d <= guard.max_dim; ++d) {
        try {
            if (boxicity_at_most(g, d, guard)) return d;
        } catch (const ResourceError& e) {
            throw ResourceError(e.guard(), std::string(e.what()) + "; boxicity >= " + std::to_string(d), d);
        }
    }
    throw ResourceError("max_dim",
                        "boxicity exceeds oracle guard max_dim = " + std::to_string(guard.max_dim),
                        guard.max_dim + 1);
}

}  // namespace zdbox
