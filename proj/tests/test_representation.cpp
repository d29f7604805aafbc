#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "zdbox/representation.hpp"

using namespace zdbox;
namespace to = test_oracle;

namespace {

std::size_t pos(const BoxRepresentation& r, Label l) {
    return static_cast<std::size_t>(std::find(r.vertices.begin(), r.vertices.end(), l) - r.vertices.begin());
}

const Interval& at(const Construction& c, std::size_t dim, Label l) { return c.rep.dims[dim].intervals[pos(c.rep, l)]; }

bool meet(const Interval& x, const Interval& y) { return !(x.hi < y.lo) && !(y.hi < x.lo); }

Interval pt(const Rational& r) { return Interval::point(r); }

// 2 mod 4 and every odd exponent at most 2
bool improved_applies(Nat N) {
    if (N % 4 != 2) return false;
    const auto pp = to::prime_powers(N);
    if (pp.size() < 2) return false;
    for (auto [p, e] : pp)
        if (p != 2 && e > 2) return false;
    return true;
}

}  // namespace

TEST_CASE("class_of") {
    CHECK(class_of(factorize(12), 0, 8).j == 2);
    CHECK(class_of(factorize(18), 1, 9) == ClassIndex{2, 0});
    CHECK(class_of(factorize(18), 1, 6) == ClassIndex{1, 1});
    // valuation is taken of gcd(u, N), so it never exceeds the exponent of N
    CHECK(class_of(factorize(12), 0, 8).j == 2);
    CHECK(class_of(factorize(24), 1, 9).j == 1);
    CHECK_THROWS_AS(class_of(factorize(12), 0, 0), InvalidInput);
    CHECK_THROWS_AS(class_of(factorize(12), 0, 12), InvalidInput);
    CHECK_THROWS_AS(class_of(factorize(12), 2, 3), InvalidInput);
}

TEST_CASE("general representation examples") {
    const auto c12 = build_general_rep(12);
    CHECK(c12.method == Method::general);
    REQUIRE(c12.rep.dimension() == 2);
    CHECK(c12.rep.dims[0].label == "I_1");
    CHECK(c12.rep.dims[1].label == "I_2");
    CHECK(at(c12, 0, 3) == pt(Rational(3, 24)));
    CHECK(at(c12, 0, 6) == Interval{1, 2});
    CHECK(at(c12, 0, 8) == Interval{0, 2});
    CHECK(at(c12, 1, 2) == pt(Rational(2, 24)));
    CHECK(at(c12, 1, 3) == Interval{0, 1});
    REQUIRE(c12.thresholds.size() == 2);
    CHECK(c12.thresholds[0].threshold == Rational(2));
    CHECK(c12.thresholds[0].weights[pos(c12.rep, 8)] == Rational(2));
    CHECK(c12.thresholds[1].threshold == Rational(1));

    const auto c8 = build_general_rep(8);
    REQUIRE(c8.rep.dimension() == 1);
    CHECK(at(c8, 0, 2) == pt(Rational(1) + Rational(2, 16)));
    CHECK(at(c8, 0, 4) == Interval{1, 3});

    const auto c7 = build_general_rep(7);
    CHECK(c7.rep.vertices.empty());
}

TEST_CASE("improved representation examples") {
    const auto c18 = build_improved_rep(18);
    CHECK(c18.method == Method::improved);
    REQUIRE(c18.rep.dimension() == 1);
    CHECK(c18.rep.dims[0].label == "I_2");
    CHECK(at(c18, 0, 9) == Interval{1, 2});
    CHECK(at(c18, 0, 6) == Interval{Rational(3, 2), 3});
    CHECK(at(c18, 0, 3) == pt(Rational(2) + Rational(3, 36)));
    CHECK(at(c18, 0, 2) == pt(Rational(1) + Rational(2, 36)));
    CHECK(c18.thresholds.empty());

    const auto c30 = build_improved_rep(30);
    REQUIRE(c30.rep.dimension() == 2);
    CHECK(c30.rep.dims[0].label == "I_2");
    CHECK(c30.rep.dims[1].label == "I_3");
    CHECK(at(c30, 0, 15) == Interval{1, 2});
    CHECK(at(c30, 0, 6) == Interval{0, 2});

    CHECK_THROWS_AS(build_improved_rep(12), CaseMismatch);
    CHECK_THROWS_AS(build_improved_rep(54), CaseMismatch);
    CHECK_THROWS_AS(build_improved_rep(2), CaseMismatch);
    CHECK(improved_rep_obstruction(factorize(12)).find("mod 4") != std::string::npos);
    CHECK(improved_rep_obstruction(factorize(54)).find("exponent of 3 is 3") != std::string::npos);
    CHECK(improved_rep_obstruction(factorize(18)).empty());
}

TEST_CASE("boolean representation examples") {
    const auto c2 = build_boolean_rep(2);
    REQUIRE(c2.rep.dimension() == 2);
    CHECK(c2.rep.label_bits == 2);
    CHECK(at(c2, 0, 0b10).is_point());
    CHECK(at(c2, 0, 0b01) == Interval{0, 1});

    const auto c3 = build_boolean_rep(3);
    REQUIRE(c3.rep.dimension() == 3);
    CHECK(at(c3, 0, 0b110).is_point());
    CHECK(at(c3, 1, 0b110).is_point());
    CHECK(at(c3, 2, 0b110) == Interval{0, 1});
    for (const auto& cert : c3.thresholds) {
        CHECK(cert.threshold == Rational(1));
        for (const auto& w : cert.weights) CHECK((w == Rational(0) || w == Rational(1)));
    }
    // g is injective and strictly inside (0, 1)
    std::set<Rational> points;
    for (std::size_t v = 0; v < c3.rep.vertices.size(); ++v) {
        const auto& iv = c3.rep.dims[0].intervals[v];
        if (!iv.is_point()) continue;
        CHECK(Rational(0) < iv.lo);
        CHECK(iv.lo < Rational(1));
        points.insert(iv.lo);
    }
    CHECK(points.size() == 3);
    CHECK_THROWS_AS(build_boolean_rep(1), InvalidInput);
}

TEST_CASE("dispatch") {
    CHECK(build_representation(9).rep.dimension() == 0);
    CHECK(build_representation(9).method == Method::none);
    CHECK(build_representation(7).rep.dimension() == 0);
    CHECK(build_representation(4).rep.dimension() == 0);
    CHECK(build_representation(18).rep.dimension() == 1);
    CHECK(build_representation(18).method == Method::improved);
    CHECK(build_representation(12).rep.dimension() == 2);
    CHECK(build_representation(12).method == Method::general);
    CHECK(build_representation(27).rep.dimension() == 1);
    CHECK(build_representation(54).rep.dimension() == 2);
    CHECK(build_representation(2310).rep.dimension() == 4);
}

TEST_CASE("point intervals from the low rows are pairwise distinct, for all N <= 500") {
    for (Nat N = 4; N <= 500; ++N) {
        const auto c = build_general_rep(N);
        const auto pp = to::prime_powers(N);
        for (std::size_t i = 0; i < c.rep.dims.size(); ++i) {
            const unsigned half = (pp[i].second + 1) / 2;
            std::set<Rational> seen;
            for (std::size_t v = 0; v < c.rep.vertices.size(); ++v) {
                const unsigned j = to::valuation(pp[i].first, std::gcd(c.rep.vertices[v], N));
                if (j >= half) continue;
                const auto& iv = c.rep.dims[i].intervals[v];
                REQUIRE(iv.is_point());
                REQUIRE(seen.insert(iv.lo).second);
            }
        }
    }
}

TEST_CASE("general dimension i: intervals meet iff j_u + j_v >= n_i, for all N <= 500") {
    std::size_t pairs = 0;
    for (Nat N = 4; N <= 500; ++N) {
        const auto c = build_general_rep(N);
        const auto pp = to::prime_powers(N);
        REQUIRE(c.rep.dims.size() == (c.rep.vertices.empty() ? 0 : pp.size()));
        for (std::size_t i = 0; i < c.rep.dims.size(); ++i) {
            const auto& dim = c.rep.dims[i];
            std::vector<unsigned> j;
            for (Label u : c.rep.vertices) j.push_back(to::valuation(pp[i].first, std::gcd(u, N)));
            for (std::size_t a = 0; a < j.size(); ++a) {
                REQUIRE(dim.intervals[a].valid());
                for (std::size_t b = a + 1; b < j.size(); ++b, ++pairs)
                    REQUIRE(meet(dim.intervals[a], dim.intervals[b]) == (j[a] + j[b] >= pp[i].second));
            }
        }
    }
    CHECK(pairs > 1'000'000);
}

TEST_CASE("improved dimensions satisfy the single and square exponent rules, for all valid N <= 2000") {
    std::size_t instances = 0;
    for (Nat N = 6; N <= 2000; ++N) {
        if (!improved_applies(N)) {
            if (N % 2 == 0) CHECK_THROWS_AS(build_improved_rep(N), CaseMismatch);
            continue;
        }
        ++instances;
        const auto c = build_improved_rep(N);
        const auto pp = to::prime_powers(N);
        REQUIRE(c.rep.dims.size() == pp.size() - 1);
        for (std::size_t d = 0; d < c.rep.dims.size(); ++d) {
            const auto [p, n] = pp[d + 1];
            REQUIRE(c.rep.dims[d].label == "I_" + std::to_string(d + 2));
            std::vector<unsigned> j, k;
            for (Label u : c.rep.vertices) {
                const Nat g = std::gcd(u, N);
                j.push_back(to::valuation(p, g));
                k.push_back(to::valuation(2, g));
            }
            for (std::size_t a = 0; a < j.size(); ++a)
                for (std::size_t b = a + 1; b < j.size(); ++b) {
                    const bool both_top = j[a] == n && j[b] == n && k[a] == 0 && k[b] == 0;
                    const bool expect = (j[a] + j[b] >= n && k[a] + k[b] >= 1) || both_top;
                    REQUIRE(meet(c.rep.dims[d].intervals[a], c.rep.dims[d].intervals[b]) == expect);
                }
        }
    }
    CHECK(instances > 200);
}

TEST_CASE("threshold certificates describe their interval graphs exactly") {
    auto check = [](const Construction& c) {
        REQUIRE(c.thresholds.size() == c.rep.dims.size());
        for (std::size_t d = 0; d < c.rep.dims.size(); ++d) {
            const auto& iv = c.rep.dims[d].intervals;
            const auto& w = c.thresholds[d].weights;
            for (std::size_t a = 0; a < iv.size(); ++a)
                for (std::size_t b = a + 1; b < iv.size(); ++b)
                    REQUIRE(meet(iv[a], iv[b]) == (w[a] + w[b] >= c.thresholds[d].threshold));
        }
    };
    for (Nat N = 4; N <= 500; ++N) check(build_general_rep(N));
    for (unsigned k = 2; k <= 10; ++k) check(build_boolean_rep(k));
}

TEST_CASE("every general dimension is a supergraph of Gamma(Z_N)") {
    for (Nat N = 4; N <= 500; ++N) {
        const auto c = build_general_rep(N);
        for (const auto& dim : c.rep.dims)
            for (std::size_t a = 0; a < c.rep.vertices.size(); ++a)
                for (std::size_t b = a + 1; b < c.rep.vertices.size(); ++b)
                    if (to::zn_adjacent(N, c.rep.vertices[a], c.rep.vertices[b]))
                        REQUIRE(meet(dim.intervals[a], dim.intervals[b]));
    }
}

TEST_CASE("construction is deterministic") {
    for (Nat N : {12, 18, 30, 54, 360, 2310}) CHECK(build_representation(N) == build_representation(N));
    CHECK(build_boolean_rep(6).rep == build_boolean_rep(6).rep);
}
