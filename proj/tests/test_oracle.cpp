#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "zdbox/certify.hpp"
#include "zdbox/oracle.hpp"

using namespace zdbox;
namespace to = test_oracle;
using test_helpers::from_zd;
using test_helpers::to_zd;

namespace {

// maximal cliques by checking every vertex subset
std::set<std::vector<Label>> cliques_by_subsets(const ZdGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::uint32_t> cliques;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        bool clique = true;
        for (std::size_t a = 0; a < n && clique; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if ((s >> a & 1) && (s >> b & 1) && !g.adjacent(a, b)) {
                    clique = false;
                    break;
                }
        if (clique) cliques.push_back(s);
    }
    std::set<std::vector<Label>> out;
    for (auto s : cliques) {
        bool maximal = true;
        for (auto t : cliques)
            if (t != s && (t & s) == s) maximal = false;
        if (!maximal) continue;
        std::vector<Label> c;
        for (std::size_t v = 0; v < n; ++v)
            if (s >> v & 1) c.push_back(g.label(v));
        out.insert(c);
    }
    return out;
}

to::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    to::Graph g(n);
    std::bernoulli_distribution edge(p);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (edge(rng)) g.add(a, b);
    return g;
}

}  // namespace

TEST_CASE("maximal cliques") {
    CHECK(maximal_cliques(to_zd(to::cycle(4))).size() == 4);
    CHECK(maximal_cliques(to_zd(to::complete(4))).size() == 1);
    const auto g12 = build_zn_graph(12);
    const auto got = maximal_cliques(g12).labelled(g12);
    const std::set<std::vector<Label>> expect{{2, 6}, {3, 4}, {3, 8}, {4, 6}, {4, 9}, {6, 8}, {6, 10}, {8, 9}};
    CHECK(std::set<std::vector<Label>>(got.begin(), got.end()) == expect);
    CHECK(got.size() == expect.size());
    // isolated vertices are singleton cliques
    CHECK(maximal_cliques(to_zd(to::Graph(3))).size() == 3);

    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; ++t) {
        const auto g = to_zd(random_graph(rng, 2 + t % 10, 0.5));
        const auto lab = maximal_cliques(g).labelled(g);
        REQUIRE(std::set<std::vector<Label>>(lab.begin(), lab.end()) == cliques_by_subsets(g));
        REQUIRE(lab.size() == cliques_by_subsets(g).size());
    }
}

TEST_CASE("interval recognition") {
    CHECK(is_interval(to_zd(to::path(4))));
    CHECK_FALSE(is_interval(to_zd(to::cycle(4))));
    CHECK_FALSE(is_interval(to_zd(to::cycle(5))));
    CHECK(is_interval(to_zd(to::complete(5))));
    CHECK(is_interval(to_zd(to::Graph(0))));
    CHECK(is_interval(build_zn_graph(18)));
    CHECK_FALSE(is_interval(build_zn_graph(12)));

    // the claw's subdivision (an asteroidal triple, but chordal) is not interval
    to::Graph star(7);
    star.add(0, 1), star.add(1, 2), star.add(0, 3), star.add(3, 4), star.add(0, 5), star.add(5, 6);
    CHECK(to::chordal(star));
    CHECK_FALSE(is_interval(to_zd(star)));
}

TEST_CASE("interval recognition agrees with chordal + AT-free on random graphs") {
    std::mt19937_64 rng(2024);
    std::size_t yes = 0;
    for (int t = 0; t < 4000; ++t) {
        const std::size_t n = 3 + t % 9;
        const double p = 0.2 + 0.6 * static_cast<double>(t % 7) / 6.0;
        const auto g = random_graph(rng, n, p);
        const bool expect = to::interval(g);
        yes += expect;
        REQUIRE(is_interval(to_zd(g)) == expect);
    }
    CHECK(yes > 500);
    CHECK(yes < 3500);
}

TEST_CASE("is_interval agrees with one-dimensional certified representations") {
    for (Nat N = 4; N <= 60; ++N) {
        const auto g = build_zn_graph(N);
        if (g.size() > OracleGuard{}.max_vertices) continue;
        const auto r = certify_zn(N);
        if (r.ok && r.box_hi <= 1) CHECK(is_interval(g));
        if (r.ok && r.box_lo >= 2) CHECK_FALSE(is_interval(g));
    }
}

TEST_CASE("boxicity_at_most on canonical graphs") {
    const auto c4 = to_zd(to::cycle(4));
    CHECK_FALSE(boxicity_at_most(c4, 1));
    CHECK(boxicity_at_most(c4, 2));
    const auto r3 = to_zd(to::roberts(3));
    CHECK_FALSE(boxicity_at_most(r3, 2));
    CHECK(boxicity_at_most(r3, 3));
    CHECK(boxicity_at_most(to_zd(to::complete(4)), 0));
    CHECK_FALSE(boxicity_at_most(c4, 0));
}

TEST_CASE("brute_force_boxicity on canonical graphs") {
    CHECK(brute_force_boxicity(to_zd(to::cycle(4))) == 2);
    CHECK(brute_force_boxicity(to_zd(to::path(4))) == 1);
    CHECK(brute_force_boxicity(to_zd(to::complete(4))) == 0);
    CHECK(brute_force_boxicity(to_zd(to::roberts(2))) == 2);
    CHECK(brute_force_boxicity(to_zd(to::roberts(3))) == 3);
    CHECK(brute_force_boxicity(to_zd(to::Graph(0))) == 0);
    const std::vector<Label> s{3, 6, 4, 8};
    CHECK(brute_force_boxicity(induced_subgraph(build_zn_graph(12), s)) == 2);
}

TEST_CASE("oracle agrees with the certified value on small Gamma(Z_N)") {
    for (Nat N : {6, 8, 9, 10, 12, 14, 15, 16, 18, 25, 27}) {
        const auto r = certify_zn(N);
        REQUIRE(r.ok);
        CHECK_MESSAGE(brute_force_boxicity(build_zn_graph(N)) == r.box_lo, "N = " << N);
    }
}

TEST_CASE("oracle on Gamma(Z_2^3) lies in the certified interval") {
    const auto g = build_boolean_graph(3);
    const auto b = brute_force_boxicity(g);
    CHECK(b >= 1);
    CHECK(b <= 3);
    const auto r = certify_boolean(3);
    CHECK(b >= r.box_lo);
    CHECK(b <= r.box_hi);
}

TEST_CASE("brute force agrees with the supergraph-enumeration oracle on random small graphs") {
    std::mt19937_64 rng(99);
    std::size_t checked = 0, two_or_more = 0;
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 4 + t % 4;
        const auto g = random_graph(rng, n, 0.55 + 0.1 * (t % 3));
        if (to::non_edges(g).size() > 9) continue;
        const auto expect = to::boxicity(g);
        const auto got = brute_force_boxicity(to_zd(g));
        REQUIRE(got == expect);
        ++checked;
        two_or_more += expect >= 2;
    }
    CHECK(checked > 150);
    CHECK(two_or_more > 10);
}

TEST_CASE("monotone in d and under induced subgraphs") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 150; ++t) {
        const auto tg = random_graph(rng, 5 + t % 4, 0.6);
        if (to::non_edges(tg).size() > 10) continue;
        const auto g = to_zd(tg);
        bool prev = false;
        for (unsigned d = 0; d <= 3; ++d) {
            const bool now = boxicity_at_most(g, d);
            if (prev) REQUIRE(now);
            prev = now;
        }
        const auto box = brute_force_boxicity(g);
        for (int s = 0; s < 5; ++s) {
            std::vector<Label> subset;
            for (Label l : g.labels())
                if (rng() & 1) subset.push_back(l);
            REQUIRE(brute_force_boxicity(induced_subgraph(g, subset)) <= box);
        }
    }
}

TEST_CASE("guards") {
    const auto big = to_zd(to::path(20));
    try {
        is_interval(big);
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(e.guard() == "max_vertices");
    }
    CHECK(is_interval(big, OracleGuard::lifted()));

    try {
        brute_force_boxicity(to_zd(to::roberts(3)), OracleGuard{16, 16, 2});
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(e.guard() == "max_dim");
        REQUIRE(e.lower().has_value());
        CHECK(*e.lower() == 3);
    }

    try {
        boxicity_at_most(to_zd(to::cycle(8)), 2, OracleGuard{16, 4, 3});
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(e.guard() == "max_nonedges");
    }

    CHECK_THROWS_AS(boxicity_at_most(to_zd(to::cycle(4)), 5), ResourceError);
    const auto lifted = OracleGuard::lifted();
    CHECK(lifted.max_vertices == OracleGuard::kAbsoluteLimit);
    CHECK(lifted.max_dim > OracleGuard{}.max_dim);
}
