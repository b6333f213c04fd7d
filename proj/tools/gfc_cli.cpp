#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gfc/barriers.hpp"
#include "gfc/criticality.hpp"
#include "gfc/enumeration.hpp"
#include "gfc/extremal.hpp"
#include "gfc/graph.hpp"
#include "gfc/harness.hpp"
#include "gfc/matchings.hpp"
#include "gfc/spectral.hpp"

namespace {

struct GraphInput {
    std::string g6;
    std::string g6_file;
    std::string edges_file;
    std::string family;

    void attach(CLI::App* cmd) {
        cmd->add_option("--g6", g6, "graph6 string");
        cmd->add_option("--g6-file", g6_file, "file with one graph6 string");
        cmd->add_option("--edges", edges_file, "edge-list file: first line 'n m', then 'u v' lines");
        cmd->add_option("--family", family, "family DSL, e.g. \"K1 v (K6 + 1*K1)\"");
    }

    gfc::Graph resolve() const {
        int given = !g6.empty() + !g6_file.empty() + !edges_file.empty() + !family.empty();
        if (given != 1)
            throw CLI::ValidationError("graph input",
                                       "exactly one of --g6/--g6-file/--edges/--family required");
        if (!g6.empty()) return gfc::from_graph6(g6);
        if (!g6_file.empty()) {
            std::ifstream in(g6_file);
            std::string line;
            if (!in || !std::getline(in, line))
                throw CLI::ValidationError("--g6-file", "cannot read " + g6_file);
            return gfc::from_graph6(line);
        }
        if (!edges_file.empty()) {
            std::ifstream in(edges_file);
            if (!in) throw CLI::ValidationError("--edges", "cannot read " + edges_file);
            std::stringstream ss;
            ss << in.rdbuf();
            return gfc::from_edge_list_text(ss.str());
        }
        return gfc::build(gfc::parse_family(family));
    }
};

const char* verdict_str(bool holds) { return holds ? "yes" : "no"; }

int run_analyze(const GraphInput& in, int k, std::optional<int> d) {
    gfc::Graph g = in.resolve();
    std::cout << "n: " << g.n << "\nm: " << g.m << "\ngraph6: " << gfc::to_graph6(g)
              << "\nconnected: " << verdict_str(gfc::is_connected(g)) << "\n";
    gfc::SpectralResult sp = gfc::spectral_radius(g);
    std::cout << "rho: " << std::setprecision(10) << sp.rho << " (+/- " << sp.error_bound
              << ", " << sp.iterations << " iterations)\n";
    if (gfc::is_connected(g)) std::cout << "hong_bound: " << gfc::hong_bound(g) << "\n";
    gfc::BarrierReport br = gfc::deficiency_k(g, k);
    std::cout << "k: " << k << "\ndeficiency: " << br.deficiency
              << "\nbarrier_count: " << br.barrier_count
              << "\nempty_is_unique_barrier: " << verdict_str(br.empty_is_unique) << "\n";
    if (g.n >= 3 && gfc::is_connected(g)) {
        if (g.n % 2 == 1)
            std::cout << "gfc: " << verdict_str(gfc::classify_gfc(g, k).holds) << "\n";
        else
            std::cout << "gbc: " << verdict_str(gfc::classify_gbc(g, k).holds) << "\n";
        if (d) std::cout << "kd_critical: " << verdict_str(gfc::classify_kd(g, k, *d).holds) << "\n";
    }
    return 0;
}

int run_classify(const GraphInput& in, int k, std::optional<int> d, const std::string& property) {
    gfc::Graph g = in.resolve();
    gfc::CriticalityVerdict v;
    std::string name = property;
    if (name.empty()) name = d ? "kd" : (g.n % 2 == 1 ? "gfc" : "gbc");
    if (name == "gfc")
        v = gfc::classify_gfc(g, k);
    else if (name == "gbc")
        v = gfc::classify_gbc(g, k);
    else if (name == "kd") {
        if (!d) throw CLI::ValidationError("--property kd", "--d required");
        v = gfc::classify_kd(g, k, *d);
    } else
        throw CLI::ValidationError("--property", "must be gfc, gbc or kd");
    std::cout << name << "_" << k;
    if (d && name == "kd") std::cout << "_" << *d;
    std::cout << ": " << verdict_str(v.holds) << "\n";
    if (!v.holds && v.witness)
        std::cout << "violating_subset_mask: 0x" << std::hex << *v.witness << std::dec << "\n";
    return 0;
}

int run_spectral(const GraphInput& in, double tol) {
    if (!in.family.empty()) {
        gfc::FamilySpec f = gfc::parse_family(in.family);
        if (f.kind == gfc::FamilyKind::JoinCliquePlusIsolated ||
            f.kind == gfc::FamilyKind::SplitLike) {
            int a = f.kind == gfc::FamilyKind::JoinCliquePlusIsolated ? f.a : 0;
            std::cout << std::fixed << std::setprecision(4)
                      << gfc::quotient_radius_join_family(f.s, a, f.b) << "\n";
            return 0;
        }
    }
    gfc::SpectralResult sp = gfc::spectral_radius(in.resolve(), tol);
    std::cout << std::fixed << std::setprecision(4) << sp.rho << "\n";
    return 0;
}

int run_factor(const GraphInput& in, bool odd_cycles_only) {
    gfc::Graph g = in.resolve();
    gfc::HalfIntegralMatching fm = gfc::fractional_matching(g);
    if (fm.total_doubled != g.n) {
        std::cout << "no fractional perfect matching (mu_f = " << fm.total_doubled / 2.0 << ")\n";
        return 1;
    }
    gfc::FactorDecomposition fd = gfc::factor_from_fractional(g, fm);
    if (odd_cycles_only && !fd.odd_cycles_only) {
        std::cout << "factor exists but uses an even cycle\n";
        return 1;
    }
    for (auto [u, v] : fd.k2_edges) std::cout << "K2: " << u << " " << v << "\n";
    for (const auto& cyc : fd.cycles) {
        std::cout << "C" << cyc.size() << ":";
        for (int v : cyc) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int run_enumerate(int n, const std::string& mode, int max_cedges, double rho, bool dedup,
                  const std::string& dump_path) {
    gfc::EnumerationTask task;
    task.n = n;
    task.dedup = dedup;
    if (mode == "labeled")
        task.mode = gfc::EnumerationMode::AllLabeledConnected;
    else if (mode == "dense") {
        task.mode = gfc::EnumerationMode::DenseByComplement;
        task.max_complement_edges = max_cedges;
    } else if (mode == "spectral") {
        task.mode = gfc::EnumerationMode::SpectralFiltered;
        task.rho_threshold = rho;
    } else
        throw CLI::ValidationError("--mode", "must be labeled, dense or spectral");
    std::ofstream dump;
    if (!dump_path.empty()) {
        dump.open(dump_path);
        if (!dump) throw CLI::ValidationError("--dump-g6", "cannot write " + dump_path);
    }
    gfc::EnumerationStats stats = gfc::enumerate(task, [&](const gfc::Graph& g) {
        if (dump.is_open()) dump << gfc::to_graph6(g) << "\n";
    });
    std::cout << "yielded: " << stats.yielded
              << "\nskipped_disconnected: " << stats.skipped_disconnected << "\n";
    return 0;
}

int run_verify(const std::string& theorem, int n, int k, std::optional<int> d,
               const std::string& json_path, int workers) {
    gfc::TheoremId id = gfc::theorem_from_name(theorem);
    gfc::VerificationReport r;
    switch (id) {
        case gfc::TheoremId::T1:
        case gfc::TheoremId::T3:
        case gfc::TheoremId::T5:
        case gfc::TheoremId::T7: r = gfc::verify_size_theorem(id, n, k, d, workers); break;
        case gfc::TheoremId::T2:
        case gfc::TheoremId::T4:
        case gfc::TheoremId::T6:
        case gfc::TheoremId::T8: r = gfc::verify_spectral_theorem(id, n, k, d, workers); break;
        case gfc::TheoremId::T9: r = gfc::verify_theorem9(n, k); break;
        case gfc::TheoremId::C10:
        case gfc::TheoremId::C11: r = gfc::verify_corollary_factor_deletion(id, n, workers); break;
    }
    std::string json = gfc::report_to_json(r);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw CLI::ValidationError("--json", "cannot write " + json_path);
        out << json << "\n";
    }
    std::cout << theorem << " n=" << r.n << " domain=" << r.domain_size
              << " exceptions=" << r.exceptions_found.size() << " "
              << (r.passed ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(2)
              << r.runtime_s << "s)\n";
    return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-matching criticality toolkit"};
    app.require_subcommand(1);

    GraphInput gin_analyze, gin_classify, gin_spectral, gin_factor;
    int k = 3;
    std::optional<int> d;
    std::string property;
    double tol = 1e-10;
    bool odd_cycles_only = false;

    auto* analyze = app.add_subcommand("analyze", "full report for one graph");
    gin_analyze.attach(analyze);
    analyze->add_option("--k", k, "matching parameter");
    analyze->add_option("--d", d, "criticality defect");

    auto* classify = app.add_subcommand("classify", "criticality verdict");
    gin_classify.attach(classify);
    classify->add_option("--k", k, "matching parameter")->required();
    classify->add_option("--d", d, "criticality defect");
    classify->add_option("--property", property, "gfc, gbc or kd");

    auto* spectral = app.add_subcommand("spectral", "adjacency spectral radius");
    gin_spectral.attach(spectral);
    spectral->add_option("--tol", tol, "power-iteration bracket tolerance");

    auto* family = app.add_subcommand("family", "build a named family");
    std::string family_dsl;
    family->add_option("--family", family_dsl, "family DSL")->required();

    auto* factor = app.add_subcommand("factor", "emit a {K2, cycles}-factor");
    gin_factor.attach(factor);
    factor->add_flag("--odd-cycles-only", odd_cycles_only, "require odd cycles");

    auto* enumerate = app.add_subcommand("enumerate", "stream graph domains");
    int enum_n = 0, max_cedges = 0, workers = 1;
    double rho = 0.0;
    bool dedup = false;
    std::string mode = "labeled", dump_path;
    enumerate->add_option("--n", enum_n, "order")->required();
    enumerate->add_option("--mode", mode, "labeled, dense or spectral");
    enumerate->add_option("--max-cedges", max_cedges, "complement edge budget (dense)");
    enumerate->add_option("--rho", rho, "radius threshold (spectral)");
    enumerate->add_flag("--dedup", dedup, "deduplicate up to isomorphism");
    enumerate->add_option("--dump-g6", dump_path, "write graph6 lines to file");

    auto* verify = app.add_subcommand("verify", "exhaustive theorem check");
    std::string theorem, json_path;
    int verify_n = 0;
    verify->add_option("--theorem", theorem, "T1..T9, C10, C11")->required();
    verify->add_option("--n", verify_n, "order (n_max for T9)")->required();
    verify->add_option("--k", k, "matching parameter");
    verify->add_option("--d", d, "criticality defect");
    verify->add_option("--json", json_path, "write JSON report to file");
    verify->add_option("--workers", workers, "partition count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return run_analyze(gin_analyze, k, d);
        if (*classify) return run_classify(gin_classify, k, d, property);
        if (*spectral) return run_spectral(gin_spectral, tol);
        if (*family) {
            gfc::Graph g = gfc::build(gfc::parse_family(family_dsl));
            std::cout << "n: " << g.n << "\nm: " << g.m << "\ngraph6: " << gfc::to_graph6(g)
                      << "\n";
            return 0;
        }
        if (*factor) return run_factor(gin_factor, odd_cycles_only);
        if (*enumerate) return run_enumerate(enum_n, mode, max_cedges, rho, dedup, dump_path);
        if (*verify) return run_verify(theorem, verify_n, k, d, json_path, workers);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
