#include "zdbox/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace zdbox {

const char* to_string(Origin o) {
    switch (o) {
        case Origin::zn: return "zn";
        case Origin::boolean: return "boolean";
        case Origin::reduced: return "reduced";
        case Origin::induced: return "induced";
        case Origin::external: return "external";
    }
    return "?";
}

AdjacencyMatrix::AdjacencyMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

std::size_t AdjacencyMatrix::edge_count() const {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
}

void AdjacencyMatrix::intersect_with(const AdjacencyMatrix& other) {
    if (other.n_ != n_) throw InvalidInput("adjacency size mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
}

ZdGraph::ZdGraph(Origin origin, Nat parameter, std::vector<Label> labels, unsigned bit_width)
    : origin_(origin), parameter_(parameter), bit_width_(bit_width), labels_(std::move(labels)), adj_(labels_.size()) {
    index_.reserve(labels_.size());
    for (VertexId v = 0; v < labels_.size(); ++v) {
        if (!index_.emplace(labels_[v], v).second)
            throw InvalidInput("duplicate vertex label " + format_label(labels_[v]));
    }
}

std::optional<VertexId> ZdGraph::find(Label l) const {
    auto it = index_.find(l);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId ZdGraph::id_of(Label l) const {
    auto v = find(l);
    if (!v) throw InvalidInput("vertex " + format_label(l) + " is not in the graph");
    return *v;
}

void ZdGraph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw InvalidInput("self-loop at vertex " + format_label(labels_[u]));
    if (u >= size() || v >= size()) throw InvalidInput("edge endpoint out of range");
    adj_.set(u, v);
}

bool ZdGraph::is_complete() const {
    const std::size_t n = size();
    return edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::string format_label(Label l, unsigned bit_width) {
    if (bit_width == 0) return std::to_string(l);
    std::string s(bit_width, '0');
    for (unsigned j = 1; j <= bit_width; ++j)
        if (coordinate(l, bit_width, j)) s[j - 1] = '1';
    return s;
}

std::string ZdGraph::format_label(Label l) const { return zdbox::format_label(l, bit_width_); }

Label ZdGraph::parse_label(std::string_view text) const {
    if (bit_width_ == 0) {
        Label l = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), l);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
            throw InvalidInput("malformed vertex label \"" + std::string(text) + "\"");
        return l;
    }
    if (text.size() != bit_width_ || text.find_first_not_of("01") != std::string_view::npos)
        throw InvalidInput("malformed " + std::to_string(bit_width_) + "-bit vertex label \"" + std::string(text) + "\"");
    Label l = 0;
    for (char c : text) l = (l << 1) | static_cast<Label>(c == '1');
    return l;
}

std::vector<Label> zero_divisors(Nat N) {
    if (N < 2) throw InvalidInput("Gamma(Z_N) needs N >= 2, got " + std::to_string(N));
    std::vector<Label> out;
    for (Nat u = 2; u < N; ++u)
        if (std::gcd(u, N) > 1) out.push_back(u);
    return out;
}

ZdGraph build_zn_graph(Nat N) {
    if (N > kMaxZnOrder)
        throw InvalidInput("build_zn_graph: N = " + std::to_string(N) + " exceeds " + std::to_string(kMaxZnOrder));
    ZdGraph g(Origin::zn, N, zero_divisors(N));
    const std::size_t n = g.size();
    // u ~ v iff (N / gcd(u, N)) | v.
    for (VertexId a = 0; a < n; ++a) {
        const Nat u = g.label(a);
        const Nat m = N / std::gcd(u, N);
        for (Nat v = m; v < N; v += m) {
            if (v == u) continue;
            g.add_edge(a, *g.find(v));
        }
    }
    return g;
}

ZdGraph build_boolean_graph(unsigned k) {
    if (k < 2) throw InvalidInput("Gamma(Z_2^k) needs k >= 2, got " + std::to_string(k));
    if (k > kMaxBooleanRank) throw InvalidInput("Gamma(Z_2^k): k = " + std::to_string(k) + " is too large");
    const Label all = (Label{1} << k) - 1;
    std::vector<Label> labels;
    for (Label x = 1; x < all; ++x) labels.push_back(x);
    ZdGraph g(Origin::boolean, k, std::move(labels), k);
    for (VertexId a = 0; a < g.size(); ++a)
        for (VertexId b = a + 1; b < g.size(); ++b)
            if ((g.label(a) & g.label(b)) == 0) g.add_edge(a, b);
    return g;
}

ReducedGraph reduce_graph(const ZdGraph& g) {
    const std::size_t n = g.size();
    std::map<std::vector<std::uint64_t>, std::size_t> by_row;
    std::vector<std::size_t> provisional(n);
    std::vector<std::vector<VertexId>> groups;
    for (VertexId v = 0; v < n; ++v) {
        auto row = g.adjacency().row(v);
        std::vector<std::uint64_t> key(row.begin(), row.end());
        auto [it, fresh] = by_row.emplace(std::move(key), groups.size());
        if (fresh) groups.emplace_back();
        groups[it->second].push_back(v);
        provisional[v] = it->second;
    }
    for (auto& grp : groups)
        std::sort(grp.begin(), grp.end(), [&](VertexId a, VertexId b) { return g.label(a) < g.label(b); });
    std::vector<std::size_t> order(groups.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return g.label(groups[a].front()) < g.label(groups[b].front()); });
    std::vector<std::size_t> rank(groups.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

    ReducedGraph out;
    std::vector<Label> reps;
    out.members.resize(groups.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        const auto& grp = groups[order[r]];
        reps.push_back(g.label(grp.front()));
        for (VertexId v : grp) out.members[r].push_back(g.label(v));
    }
    out.graph = ZdGraph(Origin::reduced, g.parameter(), std::move(reps), g.bit_width());
    out.class_of.resize(n);
    for (VertexId v = 0; v < n; ++v) out.class_of[v] = rank[provisional[v]];
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
            if (g.adjacent(groups[order[a]].front(), groups[order[b]].front())) out.graph.add_edge(a, b);
    return out;
}

ZdGraph induced_subgraph(const ZdGraph& g, std::span<const Label> subset) {
    std::vector<VertexId> ids;
    ids.reserve(subset.size());
    for (Label l : subset) ids.push_back(g.id_of(l));
    ZdGraph h(Origin::induced, g.parameter(), {subset.begin(), subset.end()}, g.bit_width());
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            if (g.adjacent(ids[a], ids[b])) h.add_edge(a, b);
    return h;
}

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next non-blank, comment-stripped line.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
            out = raw;
            return true;
        }
        return false;
    }
    std::size_t line() const { return line_; }
    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidInput("edge list line " + std::to_string(line_) + ": " + what);
    }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

std::pair<std::uint64_t, std::uint64_t> two_numbers(const std::string& text, const LineReader& r) {
    std::istringstream ss(text);
    long long a = -1, b = -1;
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra)) r.fail("expected two integers, got \"" + text + "\"");
    if (a < 0 || b < 0) r.fail("negative value in \"" + text + "\"");
    return {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)};
}

}  // namespace

ZdGraph parse_edge_list(std::istream& in) {
    LineReader reader(in);
    std::string text;
    if (!reader.next(text)) throw InvalidInput("edge list: missing \"n m\" header");
    auto [n, m] = two_numbers(text, reader);
    if (n > kMaxZnOrder) reader.fail("vertex count " + std::to_string(n) + " is too large");
    std::vector<Label> labels(n);
    std::iota(labels.begin(), labels.end(), Label{0});
    ZdGraph g(Origin::external, 0, std::move(labels));
    for (std::uint64_t e = 0; e < m; ++e) {
        if (!reader.next(text))
            throw InvalidInput("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(e));
        auto [u, v] = two_numbers(text, reader);
        if (u >= n || v >= n) reader.fail("vertex id out of range [0, " + std::to_string(n) + ")");
        if (u == v) reader.fail("self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    if (reader.next(text)) reader.fail("unexpected trailing content \"" + text + "\"");
    return g;
}

ZdGraph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open edge list \"" + path + "\"");
    return parse_edge_list(in);
}

void write_edge_list(const ZdGraph& g, std::ostream& out) {
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (VertexId a = 0; a < g.size(); ++a)
        for (VertexId b = a + 1; b < g.size(); ++b)
            if (g.adjacent(a, b)) out << a << ' ' << b << '\n';
}

ZnAdjacency::ZnAdjacency(Nat N) : N_(N) {
    if (N < 2) throw InvalidInput("Gamma(Z_N) needs N >= 2");
}

std::optional<VertexId> ZnAdjacency::find(Label l) const {
    if (l == 0 || l >= N_ || std::gcd(l, N_) == 1) return std::nullopt;
    return static_cast<VertexId>(l);
}

bool ZnAdjacency::adjacent(VertexId u, VertexId v) const {
    if (u == v) return false;
    return static_cast<unsigned __int128>(u) * v % N_ == 0;
}

}  // namespace zdbox
