#include "zdbox/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "zdbox/certify.hpp"
#include "zdbox/oracle.hpp"
#include "zdbox/serialize.hpp"

namespace zdbox::cli {
namespace {

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string box_text(const BoxicityReport& r) {
    if (r.exact()) return std::to_string(r.box_lo);
    return "[" + std::to_string(r.box_lo) + ", " + std::to_string(r.box_hi) + "]";
}

std::string witness_text(const RobertsWitness& w, unsigned bits) {
    if (w.pairs.empty()) return "none";
    std::string s;
    for (auto [x, y] : w.pairs) {
        if (!s.empty()) s += ", ";
        s += "{" + format_label(x, bits) + ", " + format_label(y, bits) + "}";
    }
    return s;
}

std::size_t passed(const BoxicityReport& r) {
    return static_cast<std::size_t>(std::count_if(r.verdicts.begin(), r.verdicts.end(), [](const Verdict& v) { return v.ok(); }));
}

void print_failures(const BoxicityReport& r, std::ostream& out) {
    for (const auto& v : r.verdicts) {
        if (v.ok()) continue;
        out << "FAILED " << v.check << ": " << v.failure_count << " disagreement(s)\n";
        for (const auto& f : v.failures)
            out << "  " << f.u << " " << f.v << " [" << f.dimension << "] expected " << f.expected << ", got " << f.got
                << " (" << f.reason << ")\n";
    }
}

int write_bundle(const BoxicityReport& r, const std::string& path, std::ostream& out, std::ostream& err) {
    const std::string text = emit_bundle(r);
    if (path.empty() || path == "-") {
        out << text;
    } else {
        std::ofstream f(path, std::ios::binary);
        if (!f || !(f << text) || !f.flush()) {
            err << "error: cannot write " << path << "\n";
            return usage_error;
        }
        out << "wrote " << path << " (" << (r.ok ? "verified" : "NOT verified") << ")\n";
    }
    return r.ok ? ok : verification_failed;
}

OracleGuard guard_from_env(std::ostream& err) {
    if (std::getenv("ZDBOX_GUARD_OVERRIDE")) {
        err << "warning: ZDBOX_GUARD_OVERRIDE is set; oracle guards lifted, the search may take exponential time\n";
        return OracleGuard::lifted();
    }
    return {};
}

}  // namespace

std::string format_analysis(const BoxicityReport& r) {
    std::ostringstream os;
    const unsigned bits = r.label_bits();
    if (r.kind == BoxicityReport::Kind::zn) {
        os << "Gamma(Z_" << r.parameter << "): " << r.parameter << " = " << to_string(r.factorization)
           << ", a = " << r.factorization.size() << "\n";
    } else {
        os << "Gamma(Z_2^" << r.parameter << ")\n";
    }
    const auto& rep = r.construction.rep;
    os << "vertices: " << rep.vertices.size() << "\n";
    os << "representation: " << to_string(r.construction.method) << ", " << rep.dimension() << " dimension(s)";
    if (!rep.dims.empty()) {
        os << " (";
        for (std::size_t d = 0; d < rep.dims.size(); ++d) os << (d ? ", " : "") << rep.dims[d].label;
        os << ")";
    }
    os << "\n";
    os << "threshold certificates: " << r.construction.thresholds.size() << "\n";
    os << "Roberts witness: " << witness_text(r.roberts, bits) << "\n";
    if (r.kind == BoxicityReport::Kind::zn) {
        os << "independence witness: " << r.independence.vertices.size() << " vertices\n";
        os << "dim_TH in [" << r.dim_th.lo << ", " << r.dim_th.hi << "]";
        if (!r.dim_th.note.empty()) os << " (" << r.dim_th.note << ")";
        os << "\n";
        os << "dim_COG <= " << r.dim_cog_upper << "\n";
        if (r.cubicity)
            os << "cub in [" << fixed6(r.cubicity->lower) << " (" << r.cubicity->lower_expr << "), " << r.cubicity->upper
               << "] (log base 2)\n";
    } else {
        os << "box, dim_TH in [" << r.dim_th.lo << ", " << r.dim_th.hi << "]\n";
        os << "dim_COG <= " << r.dim_cog_upper << "\n";
    }
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    os << "checks passed: " << passed(r) << "/" << r.verdicts.size() << "\n";
    if (r.kind == BoxicityReport::Kind::zn) {
        if (r.ok && r.exact())
            os << "box = " << box_text(r) << " (case: " << describe(r.case_label) << ") — VERIFIED\n";
        else
            os << "box in [" << r.box_lo << ", " << r.box_hi << "] — " << (r.ok ? "VERIFIED" : "NOT VERIFIED") << "\n";
    } else {
        os << "box in [" << r.box_lo << ", " << r.box_hi << "] — " << (r.ok ? "VERIFIED" : "NOT VERIFIED") << "\n";
    }
    return os.str();
}

std::vector<ScanRow> scan(Nat from, Nat to, unsigned jobs) {
    if (from < 2 || from > to) throw InvalidInput("scan needs 2 <= from <= to");
    const std::size_t count = static_cast<std::size_t>(to - from + 1);
    std::vector<ScanRow> rows(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            const Nat N = from + i;
            const BoxicityReport r = certify_zn(N);
            rows[i] = {N, r.case_label, r.box_lo, r.box_hi, r.ok};
        }
    };
    jobs = std::max(1u, jobs);
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified boxicity of zero-divisor graphs", "zdbox"};
    app.require_subcommand(1);

    Nat analyze_n = 0;
    auto* analyze = app.add_subcommand("analyze", "Certify box(Gamma(Z_N)) and print a summary");
    analyze->add_option("N", analyze_n, "modulus")->required()->check(CLI::Range(Nat{2}, kMaxZnOrder));

    Nat certify_n = 0;
    std::string certify_json;
    auto* certify = app.add_subcommand("certify", "Write the certificate bundle for Gamma(Z_N)");
    certify->add_option("N", certify_n, "modulus")->required()->check(CLI::Range(Nat{2}, kMaxZnOrder));
    certify->add_option("--json", certify_json, "output path (stdout if omitted)");

    unsigned boolean_k = 0;
    std::string boolean_json;
    auto* boolean = app.add_subcommand("boolean", "Certify the bounds for Gamma(Z_2^k)");
    boolean->add_option("k", boolean_k, "number of Z_2 factors")->required()->check(CLI::Range(2u, kMaxBooleanRank));
    boolean->add_option("--json", boolean_json, "write the certificate bundle here");

    std::string edges_path;
    OracleGuard guard;
    auto* oracle = app.add_subcommand("oracle", "Brute-force boxicity of a small graph given as an edge list");
    oracle->add_option("--edges", edges_path, "edge-list file")->required();
    oracle->add_option("--max-dim", guard.max_dim, "largest dimension to search");
    oracle->add_option("--max-nonedges", guard.max_nonedges, "largest non-edge count for d >= 2");
    oracle->add_option("--max-vertices", guard.max_vertices, "largest vertex count");

    Nat scan_from = 0, scan_to = 0;
    unsigned scan_jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* scan_cmd = app.add_subcommand("scan", "Certify every N in a range");
    scan_cmd->add_option("--from", scan_from, "first N")->required()->check(CLI::Range(Nat{2}, kMaxZnOrder));
    scan_cmd->add_option("--to", scan_to, "last N")->required()->check(CLI::Range(Nat{2}, kMaxZnOrder));
    scan_cmd->add_option("--jobs", scan_jobs, "worker threads");

    Nat classes_n = 0;
    auto* classes = app.add_subcommand("classes", "Equal-neighbourhood classes of Gamma(Z_N)");
    classes->add_option("N", classes_n, "modulus")->required()->check(CLI::Range(Nat{2}, kMaxZnOrder));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage_error;
    }

    try {
        if (*analyze) {
            const auto r = certify_zn(analyze_n);
            out << format_analysis(r);
            print_failures(r, out);
            return r.ok ? ok : verification_failed;
        }
        if (*certify) return write_bundle(certify_zn(certify_n), certify_json, out, err);
        if (*boolean) {
            const auto r = certify_boolean(boolean_k);
            if (!boolean_json.empty()) {
                const int status = write_bundle(r, boolean_json, out, err);
                if (status == usage_error) return status;
            }
            out << format_analysis(r);
            print_failures(r, out);
            return r.ok ? ok : verification_failed;
        }
        if (*oracle) {
            if (std::getenv("ZDBOX_GUARD_OVERRIDE")) {
                const OracleGuard lifted = guard_from_env(err);
                guard.max_vertices = std::max(guard.max_vertices, lifted.max_vertices);
                guard.max_nonedges = std::max(guard.max_nonedges, lifted.max_nonedges);
                guard.max_dim = std::max(guard.max_dim, lifted.max_dim);
            }
            const ZdGraph g = parse_edge_list_file(edges_path);
            out << "graph: " << g.size() << " vertices, " << g.edge_count() << " edges\n";
            try {
                const std::size_t box = brute_force_boxicity(g, guard);
                out << "boxicity = " << box << "\n";
                return ok;
            } catch (const ResourceError& e) {
                out << "resource limit (" << e.guard() << "): " << e.what() << "\n";
                if (e.lower()) out << "known: boxicity >= " << *e.lower() << "\n";
                return resource_limit;
            }
        }
        if (*scan_cmd) {
            if (scan_from > scan_to) {
                err << "error: --from must not exceed --to\n";
                return usage_error;
            }
            const auto rows = scan(scan_from, scan_to, scan_jobs);
            std::size_t good = 0;
            out << std::left << std::setw(8) << "N" << std::setw(30) << "case" << std::setw(10) << "box" << "verified\n";
            for (const auto& row : rows) {
                const std::string box = row.box_lo == row.box_hi
                                            ? std::to_string(row.box_lo)
                                            : "[" + std::to_string(row.box_lo) + "," + std::to_string(row.box_hi) + "]";
                out << std::setw(8) << row.N << std::setw(30) << to_string(row.case_label) << std::setw(10) << box
                    << (row.verified ? "yes" : "NO") << "\n";
                good += row.verified;
            }
            out << "rows: " << rows.size() << ", verified: " << good << ", failed: " << rows.size() - good << "\n";
            return good == rows.size() ? ok : verification_failed;
        }
        if (*classes) {
            const auto table = class_size_table(classes_n);
            const Factorization fact = factorize(classes_n);
            const bool squarefree_even =
                classes_n % 2 == 0 &&
                std::all_of(fact.factors.begin(), fact.factors.end(), [](const PrimePower& pp) { return pp.n == 1; });
            out << "Gamma(Z_" << classes_n << "): " << table.total() << " vertices in " << table.rows.size()
                << " equal-neighbourhood classes\n";
            out << std::left << std::setw(16) << "representative" << std::setw(8) << "size" << "members\n";
            for (const auto& row : table.rows) {
                std::string members;
                for (Label l : row.members) members += (members.empty() ? "" : " ") + std::to_string(l);
                out << std::setw(16) << row.representative << std::setw(8) << row.size() << members;
                if (squarefree_even && row.size() == 1 && row.representative == classes_n / 2)
                    out << "   <- singleton class of N/2";
                out << "\n";
            }
            return ok;
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const CaseMismatch& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}

}  // namespace zdbox::cli
