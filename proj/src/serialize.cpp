#include "zdbox/serialize.hpp"

#include <cstdio>
#include <cstdlib>

namespace zdbox {

using nlohmann::ordered_json;

namespace {

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

Label parse_vertex(const std::string& s, unsigned bits) {
    ZdGraph probe(Origin::external, 0, {}, bits);
    return probe.parse_label(s);
}

template <class T>
T field(const ordered_json& j, const char* key) {
    if (!j.contains(key)) throw InvalidInput(std::string("bundle: missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bundle: field \"") + key + "\": " + e.what());
    }
}

ordered_json verdict_json(const Verdict& v) {
    ordered_json failures = ordered_json::array();
    for (const auto& f : v.failures)
        failures.push_back({{"u", f.u}, {"v", f.v}, {"dimension", f.dimension}, {"expected", f.expected},
                            {"got", f.got}, {"reason", f.reason}});
    return {{"check", v.check}, {"ok", v.ok()}, {"failure_count", v.failure_count}, {"failures", failures}};
}

Verdict verdict_from(const ordered_json& j) {
    Verdict v;
    v.check = field<std::string>(j, "check");
    v.failure_count = field<std::size_t>(j, "failure_count");
    for (const auto& f : field<ordered_json>(j, "failures"))
        v.failures.push_back({field<std::string>(f, "u"), field<std::string>(f, "v"), field<std::string>(f, "dimension"),
                              field<bool>(f, "expected"), field<bool>(f, "got"), field<std::string>(f, "reason")});
    if (field<bool>(j, "ok") != v.ok()) throw InvalidInput("bundle: verdict \"" + v.check + "\" ok flag inconsistent");
    return v;
}

Method method_from(const std::string& s) {
    for (auto m : {Method::none, Method::general, Method::improved, Method::boolean})
        if (s == to_string(m)) return m;
    throw InvalidInput("bundle: unknown representation method \"" + s + "\"");
}

}  // namespace

ordered_json to_json(const BoxicityReport& r) {
    const unsigned bits = r.label_bits();
    auto name = [bits](Label l) { return format_label(l, bits); };

    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = r.kind == BoxicityReport::Kind::zn ? "zn" : "boolean";
    j["parameter"] = r.parameter;
    ordered_json fact = ordered_json::array();
    for (const auto& pp : r.factorization.factors) fact.push_back({{"p", pp.p}, {"n", pp.n}});
    j["factorization"] = fact;
    j["case"] = to_string(r.case_label);
    j["box"] = {{"lo", r.box_lo}, {"hi", r.box_hi}, {"exact", r.exact()}};
    j["theorem_box"] = r.theorem_box ? ordered_json(*r.theorem_box) : ordered_json(nullptr);
    j["dim_th"] = {{"lo", r.dim_th.lo}, {"hi", r.dim_th.hi}, {"note", r.dim_th.note}};
    j["dim_cog_upper"] = r.dim_cog_upper;
    if (r.cubicity)
        j["cubicity"] = {{"log_base", 2},
                         {"lower", fixed6(r.cubicity->lower)},
                         {"lower_expr", r.cubicity->lower_expr},
                         {"lower_clamped", r.cubicity->lower_clamped},
                         {"upper", r.cubicity->upper}};
    else
        j["cubicity"] = nullptr;

    const auto& rep = r.construction.rep;
    ordered_json dims = ordered_json::array();
    for (const auto& d : rep.dims) {
        ordered_json intervals = ordered_json::object();
        for (std::size_t i = 0; i < rep.vertices.size(); ++i)
            intervals[name(rep.vertices[i])] = {d.intervals[i].lo.str(), d.intervals[i].hi.str()};
        dims.push_back({{"label", d.label}, {"intervals", intervals}});
    }
    ordered_json vertices = ordered_json::array();
    for (Label l : rep.vertices) vertices.push_back(name(l));
    j["representation"] = {{"method", to_string(r.construction.method)}, {"vertices", vertices}, {"dimensions", dims}};

    ordered_json certs = ordered_json::array();
    for (const auto& c : r.construction.thresholds) {
        ordered_json weights = ordered_json::object();
        for (std::size_t i = 0; i < rep.vertices.size(); ++i) weights[name(rep.vertices[i])] = c.weights[i].str();
        certs.push_back({{"label", c.label}, {"threshold", c.threshold.str()}, {"weights", weights}});
    }
    j["threshold_certificates"] = certs;

    ordered_json pairs = ordered_json::array();
    for (auto [x, y] : r.roberts.pairs) pairs.push_back({name(x), name(y)});
    j["roberts_witness"] = pairs;
    ordered_json indep = ordered_json::array();
    for (Label l : r.independence.vertices) indep.push_back(name(l));
    j["independence_witness"] = indep;

    ordered_json verdicts = ordered_json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(v));
    j["verdicts"] = verdicts;
    j["notes"] = r.notes;
    j["ok"] = r.ok;
    return j;
}

BoxicityReport report_from_json(const ordered_json& j) {
    if (field<std::string>(j, "schema_version") != kSchemaVersion)
        throw InvalidInput("bundle: unsupported schema_version \"" + field<std::string>(j, "schema_version") + "\"");
    BoxicityReport r;
    const auto kind = field<std::string>(j, "kind");
    if (kind == "zn")
        r.kind = BoxicityReport::Kind::zn;
    else if (kind == "boolean")
        r.kind = BoxicityReport::Kind::boolean;
    else
        throw InvalidInput("bundle: unknown kind \"" + kind + "\"");
    r.parameter = field<Nat>(j, "parameter");
    const unsigned bits = r.label_bits();

    for (const auto& pp : field<ordered_json>(j, "factorization"))
        r.factorization.factors.push_back({field<Nat>(pp, "p"), field<unsigned>(pp, "n")});
    if (!r.factorization.factors.empty()) r.factorization.N = r.parameter;
    r.case_label = parse_case_label(field<std::string>(j, "case"));

    const auto box = field<ordered_json>(j, "box");
    r.box_lo = field<Nat>(box, "lo");
    r.box_hi = field<Nat>(box, "hi");
    if (!j.at("theorem_box").is_null()) r.theorem_box = field<Nat>(j, "theorem_box");
    const auto th = field<ordered_json>(j, "dim_th");
    r.dim_th = {field<Nat>(th, "lo"), field<Nat>(th, "hi"), field<std::string>(th, "note")};
    r.dim_cog_upper = field<Nat>(j, "dim_cog_upper");
    if (!j.at("cubicity").is_null()) {
        const auto& c = j.at("cubicity");
        CubicityBounds cb;
        cb.lower = std::strtod(field<std::string>(c, "lower").c_str(), nullptr);
        cb.lower_expr = field<std::string>(c, "lower_expr");
        cb.lower_clamped = field<bool>(c, "lower_clamped");
        cb.upper = field<Nat>(c, "upper");
        r.cubicity = cb;
    }

    const auto rep = field<ordered_json>(j, "representation");
    r.construction.method = method_from(field<std::string>(rep, "method"));
    r.construction.rep.label_bits = bits;
    std::vector<std::string> names;
    for (const auto& v : field<ordered_json>(rep, "vertices")) {
        names.push_back(v.get<std::string>());
        r.construction.rep.vertices.push_back(parse_vertex(names.back(), bits));
    }
    for (const auto& d : field<ordered_json>(rep, "dimensions")) {
        IntervalAssignment a;
        a.label = field<std::string>(d, "label");
        const auto intervals = field<ordered_json>(d, "intervals");
        for (const auto& n : names) {
            if (!intervals.contains(n)) throw InvalidInput("bundle: dimension " + a.label + " has no interval for " + n);
            const auto& iv = intervals.at(n);
            if (!iv.is_array() || iv.size() != 2) throw InvalidInput("bundle: malformed interval for " + n);
            a.intervals.push_back({Rational::parse(iv[0].get<std::string>()), Rational::parse(iv[1].get<std::string>())});
        }
        if (intervals.size() != names.size()) throw InvalidInput("bundle: dimension " + a.label + " has extra vertices");
        r.construction.rep.dims.push_back(std::move(a));
    }
    for (const auto& c : field<ordered_json>(j, "threshold_certificates")) {
        ThresholdCertificate cert;
        cert.label = field<std::string>(c, "label");
        cert.threshold = Rational::parse(field<std::string>(c, "threshold"));
        const auto weights = field<ordered_json>(c, "weights");
        for (const auto& n : names) {
            if (!weights.contains(n)) throw InvalidInput("bundle: certificate " + cert.label + " has no weight for " + n);
            cert.weights.push_back(Rational::parse(weights.at(n).get<std::string>()));
        }
        r.construction.thresholds.push_back(std::move(cert));
    }

    for (const auto& p : field<ordered_json>(j, "roberts_witness")) {
        if (!p.is_array() || p.size() != 2) throw InvalidInput("bundle: malformed witness pair");
        r.roberts.pairs.emplace_back(parse_vertex(p[0].get<std::string>(), bits), parse_vertex(p[1].get<std::string>(), bits));
    }
    for (const auto& v : field<ordered_json>(j, "independence_witness"))
        r.independence.vertices.push_back(parse_vertex(v.get<std::string>(), bits));
    for (const auto& v : field<ordered_json>(j, "verdicts")) r.verdicts.push_back(verdict_from(v));
    r.notes = field<std::vector<std::string>>(j, "notes");
    r.ok = field<bool>(j, "ok");
    return r;
}

std::string emit_bundle(const BoxicityReport& r) { return to_json(r).dump(2) + "\n"; }

BoxicityReport parse_bundle(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("bundle: ") + e.what());
    }
    return report_from_json(j);
}

}  // namespace zdbox
