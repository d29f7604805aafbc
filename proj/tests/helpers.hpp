#pragma once
// Conversions between the test oracles' plain graphs and library graphs.

#include <numeric>

#include "oracles.hpp"
#include "zdbox/graph.hpp"

namespace test_helpers {

inline zdbox::ZdGraph to_zd(const test_oracle::Graph& g) {
    std::vector<zdbox::Label> labels(g.n);
    std::iota(labels.begin(), labels.end(), zdbox::Label{0});
    zdbox::ZdGraph out(zdbox::Origin::external, 0, labels);
    for (std::size_t a = 0; a < g.n; ++a)
        for (std::size_t b = a + 1; b < g.n; ++b)
            if (g.adj[a][b]) out.add_edge(a, b);
    return out;
}

inline test_oracle::Graph from_zd(const zdbox::ZdGraph& g) {
    test_oracle::Graph out(g.size());
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b)
            if (g.adjacent(a, b)) out.add(a, b);
    return out;
}

}  // namespace test_helpers
