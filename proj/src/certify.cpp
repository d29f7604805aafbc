#include "zdbox/certify.hpp"

#include <algorithm>

#include "zdbox/witness.hpp"

namespace zdbox {
namespace {

/// rep index -> graph id; throws on any mismatch of vertex sets.
std::vector<VertexId> align(const ZdGraph& g, const BoxRepresentation& rep) {
    if (rep.vertices.size() != g.size())
        throw InvalidInput("representation has " + std::to_string(rep.vertices.size()) + " vertices, graph has " +
                           std::to_string(g.size()));
    std::vector<VertexId> ids(rep.vertices.size());
    std::vector<bool> used(g.size(), false);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        ids[i] = g.id_of(rep.vertices[i]);
        if (used[ids[i]]) throw InvalidInput("representation repeats vertex " + g.format_label(rep.vertices[i]));
        used[ids[i]] = true;
    }
    return ids;
}

void require_coverage(const BoxRepresentation& rep, std::size_t dim) {
    if (dim >= rep.dims.size()) throw InvalidInput("no dimension " + std::to_string(dim));
    if (rep.dims[dim].intervals.size() != rep.vertices.size())
        throw InvalidInput("dimension " + rep.dims[dim].label + " assigns " +
                           std::to_string(rep.dims[dim].intervals.size()) + " intervals to " +
                           std::to_string(rep.vertices.size()) + " vertices");
}

std::string name(const BoxRepresentation& rep, std::size_t i) { return format_label(rep.vertices[i], rep.label_bits); }

}  // namespace

AdjacencyMatrix edges_of_assignment(const IntervalAssignment& a) {
    const std::size_t n = a.intervals.size();
    AdjacencyMatrix m(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (intersects(a.intervals[u], a.intervals[v])) m.set(u, v);
    return m;
}

Verdict verify_intervals(const BoxRepresentation& rep, std::size_t dim) {
    require_coverage(rep, dim);
    Verdict out;
    out.check = "intervals " + rep.dims[dim].label;
    const auto& ivs = rep.dims[dim].intervals;
    for (std::size_t i = 0; i < ivs.size(); ++i)
        if (!ivs[i].valid())
            out.fail({name(rep, i), name(rep, i), rep.dims[dim].label, true, false,
                      "empty interval [" + ivs[i].lo.str() + ", " + ivs[i].hi.str() + "]"});
    return out;
}

Verdict verify_supergraph(const ZdGraph& g, const BoxRepresentation& rep, std::size_t dim) {
    const auto ids = align(g, rep);
    require_coverage(rep, dim);
    Verdict out;
    out.check = "supergraph " + rep.dims[dim].label;
    const auto& ivs = rep.dims[dim].intervals;
    for (std::size_t u = 0; u < ids.size(); ++u)
        for (std::size_t v = u + 1; v < ids.size(); ++v)
            if (g.adjacent(ids[u], ids[v]) && !intersects(ivs[u], ivs[v]))
                out.fail({name(rep, u), name(rep, v), rep.dims[dim].label, true, false, "edge missing from dimension"});
    return out;
}

Verdict verify_intersection(const ZdGraph& g, const BoxRepresentation& rep) {
    const auto ids = align(g, rep);
    const std::size_t n = ids.size();
    Verdict out;
    out.check = "intersection";
    AdjacencyMatrix meet(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) meet.set(u, v);
    for (std::size_t d = 0; d < rep.dims.size(); ++d) {
        require_coverage(rep, d);
        meet.intersect_with(edges_of_assignment(rep.dims[d]));
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const bool expected = g.adjacent(ids[u], ids[v]);
            const bool got = meet.test(u, v);
            if (expected != got)
                out.fail({name(rep, u), name(rep, v), "all", expected, got,
                          expected ? "edge not represented" : "non-edge represented as edge"});
        }
    return out;
}

Verdict verify_threshold(const BoxRepresentation& rep, std::size_t dim, const ThresholdCertificate& cert) {
    require_coverage(rep, dim);
    if (cert.weights.size() != rep.vertices.size())
        throw InvalidInput("threshold certificate " + cert.label + " has " + std::to_string(cert.weights.size()) +
                           " weights for " + std::to_string(rep.vertices.size()) + " vertices");
    Verdict out;
    out.check = "threshold " + rep.dims[dim].label;
    const auto& ivs = rep.dims[dim].intervals;
    for (std::size_t u = 0; u < ivs.size(); ++u)
        for (std::size_t v = u + 1; v < ivs.size(); ++v) {
            const bool by_weight = cert.weights[u] + cert.weights[v] >= cert.threshold;
            const bool by_interval = intersects(ivs[u], ivs[v]);
            if (by_weight != by_interval)
                out.fail({name(rep, u), name(rep, v), rep.dims[dim].label, by_weight, by_interval,
                          "interval graph disagrees with weights"});
        }
    return out;
}

std::vector<Verdict> verify_construction(const ZdGraph& g, const Construction& c) {
    std::vector<Verdict> out;
    for (std::size_t d = 0; d < c.rep.dims.size(); ++d) out.push_back(verify_intervals(c.rep, d));
    out.push_back(verify_intersection(g, c.rep));
    for (std::size_t d = 0; d < c.rep.dims.size(); ++d) out.push_back(verify_supergraph(g, c.rep, d));
    if (!c.thresholds.empty() && c.thresholds.size() != c.rep.dims.size())
        throw InvalidInput("threshold certificates do not match the dimensions");
    for (std::size_t d = 0; d < c.thresholds.size(); ++d) out.push_back(verify_threshold(c.rep, d, c.thresholds[d]));
    return out;
}

namespace {

bool all_ok(const std::vector<Verdict>& vs) {
    return std::all_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.ok(); });
}

}  // namespace

BoxicityReport certify_zn(Nat N) {
    BoxicityReport r;
    r.kind = BoxicityReport::Kind::zn;
    r.parameter = N;
    r.factorization = factorize(N);
    const Factorization& fact = r.factorization;
    const TheoremValue predicted = theorem_box_value(fact);
    r.case_label = predicted.label;
    r.theorem_box = predicted.box;
    r.dim_th = threshold_dim_bounds(fact);
    r.dim_cog_upper = cograph_dim_upper(fact);
    r.cubicity = cubicity_bounds(fact);
    if (r.cubicity->lower_clamped) r.notes.push_back("cubicity lower bound clamped to 0");

    const ZdGraph g = build_zn_graph(N);
    r.construction = build_representation(N);
    auto upper = verify_construction(g, r.construction);
    const bool upper_ok = all_ok(upper);
    r.verdicts = upper;

    r.roberts = fact.size() >= 2 ? roberts_witness_zn(fact) : small_lower_bound(g);
    const WitnessCheck lower = verify_roberts_witness(g, r.roberts);
    r.verdicts.push_back(lower.verdict);

    r.independence = independence_witness_zn(fact);
    r.verdicts.push_back(verify_independence(g, r.independence));

    r.box_lo = lower.lower_bound;
    if (upper_ok) {
        r.box_hi = r.construction.rep.dimension();
    } else {
        r.notes.push_back(std::string(to_string(r.construction.method)) + " representation failed verification");
        Construction fallback = build_general_rep(fact);
        if (r.construction.method != Method::general && all_ok(verify_construction(g, fallback))) {
            r.box_hi = fallback.rep.dimension();
            r.notes.push_back("upper bound taken from the general representation");
        } else {
            r.box_hi = g.size() / 2;
            r.notes.push_back("upper bound falls back to floor(n/2)");
        }
    }
    r.box_hi = std::max(r.box_hi, r.box_lo);
    r.ok = r.all_verdicts_pass() && r.exact() && r.box_lo == predicted.box;
    if (r.all_verdicts_pass() && !r.exact())
        r.notes.push_back("verified bounds do not meet: witness " + std::to_string(r.box_lo) + ", representation " +
                          std::to_string(r.box_hi));
    return r;
}

BoxicityReport certify_boolean(unsigned k) {
    BoxicityReport r;
    r.kind = BoxicityReport::Kind::boolean;
    r.parameter = k;
    r.case_label = CaseLabel::boolean;
    r.dim_th = boolean_bounds(k);
    r.dim_cog_upper = cograph_dim_upper_boolean(k);

    const ZdGraph g = build_boolean_graph(k);
    r.construction = build_boolean_rep(k);
    r.verdicts = verify_construction(g, r.construction);
    const bool upper_ok = all_ok(r.verdicts);

    r.roberts = roberts_witness_boolean(k);
    const WitnessCheck lower = verify_roberts_witness(g, r.roberts);
    r.verdicts.push_back(lower.verdict);

    r.box_lo = lower.lower_bound;
    r.box_hi = upper_ok ? r.construction.rep.dimension() : std::max<Nat>(r.box_lo, g.size() / 2);
    if (k == 2)
        r.notes.push_back("k = 2: the graph is K2 and the pair e_1, e_1 + e_2 needs the all-ones vector; "
                          "no lower-bound witness emitted");
    const bool witness_complete = k == 2 || r.box_lo == k / 2;
    r.ok = r.all_verdicts_pass() && witness_complete;
    return r;
}

}  // namespace zdbox
