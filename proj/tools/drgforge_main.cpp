// drgforge: construct bilinear forms graphs, check distance-regularity,
// analyze local spectra, and screen intersection arrays for feasibility.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "drgforge/bilform.hpp"
#include "drgforge/drg_params.hpp"
#include "drgforge/incidence_geometry.hpp"
#include "drgforge/local_spectra.hpp"
#include "drgforge/parallel.hpp"
#include "drgforge/spectrum.hpp"
#include "drgforge/verify_suite.hpp"

namespace {

using drgforge::Rat;
using json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.1.0";

struct GlobalConfig {
    std::uint64_t seed = 0;
    std::uint64_t vertex_cap = drgforge::kDefaultEnumerationCap;
    int walk_lmax = 12;
    int threads = 0;
    bool timings = false;
    std::string out_path;
};

json base_report(const std::string& command, const GlobalConfig& cfg) {
    json j;
    j["schema"] = 1;
    j["tool"] = "drgforge";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["config"] = {{"seed", cfg.seed},
                   {"vertex_cap", cfg.vertex_cap},
                   {"walk_lmax", cfg.walk_lmax},
                   {"threads", drgforge::thread_count()}};
    return j;
}

void emit(const json& j, const GlobalConfig& cfg) {
    if (cfg.out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(cfg.out_path);
        out << j.dump(2) << "\n";
    }
}

json rat_json(const Rat& r) { return drgforge::rat_to_string(r); }

json array_json(const drgforge::IntersectionArray& arr) {
    json j;
    j["array"] = arr.to_string();
    j["b"] = arr.b;
    j["c"] = arr.c;
    j["diameter"] = arr.diameter();
    return j;
}

json classical_json(const drgforge::ClassicalParameters& p) {
    return {{"D", p.diameter}, {"b", p.b}, {"alpha", rat_json(p.alpha)},
            {"beta", rat_json(p.beta)}};
}

json spectrum_check_json(const drgforge::SpectrumCheck& check) {
    json spec = json::array();
    for (const auto& [eta, f] : check.spectrum.entries)
        spec.push_back({{"eigenvalue", rat_json(eta)}, {"multiplicity", f}});
    json walks = json::array();
    for (const auto& [l, value] : check.walk_values)
        walks.push_back({{"l", l},
                         {"count", rat_json(value)},
                         {"integral", drgforge::rat_is_integer(value)}});
    return {{"spectrum", spec},
            {"walk_checks", walks},
            {"triangle_total", rat_json(check.triangle_total)},
            {"triangle_total_integral", check.triangle_total_integral},
            {"all_ell_certified", check.certificate.certified_all_ell},
            {"first_violation_l",
             check.certificate.first_violation ? json(*check.certificate.first_violation)
                                               : json(nullptr)},
            {"survives", check.survives}};
}

json verdict_json(const drgforge::Verdict& verdict) {
    json j;
    j["array"] = verdict.array.to_string();
    j["status"] = drgforge::to_string(verdict.status);
    j["reasons"] = verdict.reasons;
    j["classical_params"] =
        verdict.classical ? classical_json(*verdict.classical) : json(nullptr);
    if (verdict.constraint) {
        json roots = json::array();
        for (const auto& r : verdict.constraint->roots) roots.push_back(rat_json(r));
        j["roots"] = roots;
        j["leading_sign"] = verdict.constraint->leading_sign;
        json admissible = json::array();
        for (const auto& iv : verdict.constraint->admissible)
            admissible.push_back({rat_json(iv.lo), rat_json(iv.hi)});
        j["admissible"] = admissible;
    } else {
        j["roots"] = json(nullptr);
        j["leading_sign"] = json(nullptr);
        j["admissible"] = json(nullptr);
    }
    j["clique_bound"] = verdict.bound ? rat_json(*verdict.bound) : json(nullptr);
    j["candidates"] = verdict.candidates;
    j["irrational_possible"] = verdict.irrational_possible;
    j["enumeration_complete"] = verdict.enumeration_complete;
    json spectra = json::array();
    for (const auto& check : verdict.spectra) spectra.push_back(spectrum_check_json(check));
    j["spectra"] = spectra;
    j["witness"] = verdict.witness ? json(*verdict.witness) : json(nullptr);
    return j;
}

json report_json(const drgforge::CheckReport& report) {
    json checks = json::array();
    for (const auto& item : report.items)
        checks.push_back(
            {{"id", item.id}, {"status", item.pass ? "pass" : "fail"}, {"details", item.details}});
    return checks;
}

/// Parses "6", "6..133".
std::pair<long long, long long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long long v = std::stoll(text);
        return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bilinear forms graphs, distance-regularity checks, and intersection-array "
                 "feasibility screening"};
    app.require_subcommand(1);

    GlobalConfig cfg;
    app.add_option("--seed", cfg.seed, "seed for randomized self-tests");
    app.add_option("--vertex-cap", cfg.vertex_cap, "enumeration cap on vertex counts");
    app.add_option("--walk-lmax", cfg.walk_lmax, "largest walk length reported explicitly");
    app.add_option("--threads", cfg.threads, "worker threads (default: DRGFORGE_THREADS or all)");
    app.add_flag("--timings", cfg.timings, "include wall-clock timings in the report");
    app.add_option("--report-out", cfg.out_path, "write the JSON report here instead of stdout");

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "build Bil_q(e x d) and write it out");
    long long q = 2;
    int e = 3, d = 3;
    std::string graph_out;
    cmd_construct->add_option("--q", q, "field order")->required();
    cmd_construct->add_option("--e", e, "matrix rows")->required();
    cmd_construct->add_option("--d", d, "matrix columns")->required();
    cmd_construct->add_option("--out", graph_out, "edge list output path")->required();

    // check-drg
    auto* cmd_check = app.add_subcommand("check-drg", "verify distance-regularity of a graph");
    std::string in_path;
    int depth = -1;
    cmd_check->add_option("--in", in_path, "edge list input")->required();
    cmd_check->add_option("--depth", depth, "check only b_0..b_r and c_1..c_r");

    // local-analyze
    auto* cmd_local = app.add_subcommand("local-analyze", "local graph spectrum and grid shape");
    std::string local_in;
    int base_vertex = 0;
    std::string expect_array;
    cmd_local->add_option("--in", local_in, "edge list input")->required();
    cmd_local->add_option("--vertex", base_vertex, "base vertex");
    cmd_local->add_option("--array", expect_array,
                          "intersection array whose admissible window the local eigenvalues "
                          "must hit");

    // feasibility
    auto* cmd_feas = app.add_subcommand("feasibility", "screen intersection arrays");
    std::vector<std::string> arrays;
    std::string family_range;
    cmd_feas->add_option("--array", arrays, "intersection array string, repeatable");
    cmd_feas->add_option("--family-M", family_range,
                         "M or A..B over the family {7(M-1),6(M-2),4(M-4);1,6,28}");

    // spg-extract
    auto* cmd_spg = app.add_subcommand("spg-extract", "semi-partial geometry from clique lines");
    std::string spg_in;
    int line_size = 4;
    cmd_spg->add_option("--in", spg_in, "edge list input")->required();
    cmd_spg->add_option("--line-size", line_size, "line size (clique size)")->required();

    // verify-paper
    auto* cmd_verify = app.add_subcommand(
        "verify-paper", "run the full verification suite on a constructed graph");
    std::string target = "bil";
    long long vq = 2;
    int ve = 3, vd = 3, trials = 2;
    cmd_verify->add_option("--target", target, "target family (bil)");
    cmd_verify->add_option("--q", vq, "field order")->required();
    cmd_verify->add_option("--e", ve, "matrix rows")->required();
    cmd_verify->add_option("--d", vd, "matrix columns")->required();
    cmd_verify->add_option("--ball2-trials", trials, "random base pairs for the ball-2 self-test");

    CLI11_PARSE(app, argc, argv);
    if (cfg.threads > 0) drgforge::set_thread_count_override(cfg.threads);

    const auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - started)
            .count();
    };

    try {
        if (cmd_construct->parsed()) {
            json j = base_report("construct", cfg);
            const auto bil = drgforge::construct_bilinear_forms_graph(q, e, d, cfg.vertex_cap);
            drgforge::write_edge_list_file(bil.graph, graph_out);
            json sidecar;
            sidecar["schema"] = 1;
            sidecar["parameters"] = {{"q", bil.q}, {"e", bil.e}, {"d", bil.d}};
            sidecar["vertices"] = bil.graph.vertex_count();
            sidecar["edges"] = bil.graph.edge_count();
            sidecar["expected_array"] = array_json(bil.expected_array);
            if (d == 2) {
                const auto srg = drgforge::pseudo_latin_square_parameters(q, e);
                sidecar["srg"] = {{"v", srg.v}, {"k", srg.k}, {"lambda", srg.lambda},
                                  {"mu", srg.mu}};
            }
            const auto classical = drgforge::detect_classical_parameters(bil.expected_array);
            sidecar["classical_params"] =
                classical ? classical_json(*classical) : json(nullptr);
            std::ofstream side(graph_out + ".json");
            side << sidecar.dump(2) << "\n";
            j["files"] = {graph_out, graph_out + ".json"};
            j["vertices"] = bil.graph.vertex_count();
            j["edges"] = bil.graph.edge_count();
            j["expected_array"] = bil.expected_array.to_string();
            if (cfg.timings) j["timings_ms"] = elapsed_ms();
            emit(j, cfg);
            return 0;
        }

        if (cmd_check->parsed()) {
            json j = base_report("check-drg", cfg);
            const auto graph = drgforge::read_edge_list_file(in_path);
            const auto check = drgforge::check_distance_regular(
                graph, depth >= 0 ? std::optional<int>(depth) : std::nullopt);
            j["distance_regular"] = check.ok;
            if (check.array) j["array"] = check.array->to_string();
            if (!check.partial_b.empty()) {
                j["partial_b"] = check.partial_b;
                j["partial_c"] = check.partial_c;
            }
            if (check.witness) j["witness"] = check.witness->to_string();
            if (cfg.timings) j["timings_ms"] = elapsed_ms();
            emit(j, cfg);
            return 0;
        }

        if (cmd_local->parsed()) {
            json j = base_report("local-analyze", cfg);
            const auto graph = drgforge::read_edge_list_file(local_in);
            graph.check_vertex(base_vertex);
            const auto local = drgforge::local_graph(graph, base_vertex);
            j["vertex"] = base_vertex;
            j["local_vertices"] = local.graph.vertex_count();
            j["local_edges"] = local.graph.edge_count();
            const auto spec = drgforge::spectrum_small(local.graph);
            json spec_json = json::array();
            for (const auto& entry : spec.entries) {
                json item;
                item["multiplicity"] = entry.multiplicity;
                if (entry.exact)
                    item["eigenvalue"] = *entry.exact;
                else
                    item["bracket"] = {entry.lo, entry.hi};
                spec_json.push_back(item);
            }
            j["local_spectrum"] = spec_json;
            j["certified"] = spec.certified;
            const auto grid = drgforge::grid_recognize(local.graph);
            j["grid"] = grid ? json({grid->first, grid->second}) : json(nullptr);
            if (!expect_array.empty()) {
                const auto arr = drgforge::IntersectionArray::parse(expect_array);
                const auto classical = drgforge::detect_classical_parameters(arr);
                if (classical && classical->diameter >= 3) {
                    const auto constraint = drgforge::terwilliger_constraint(*classical);
                    bool contained = true;
                    for (const auto& entry : spec.entries) {
                        if (!entry.exact) {
                            contained = false;
                            continue;
                        }
                        if (*entry.exact == arr.a(1)) continue;
                        bool hit = false;
                        for (const auto& iv : constraint.admissible)
                            hit |= iv.contains(Rat(*entry.exact));
                        contained &= hit;
                    }
                    j["window_containment"] = contained;
                } else {
                    j["window_containment"] = json(nullptr);
                }
            }
            if (cfg.timings) j["timings_ms"] = elapsed_ms();
            emit(j, cfg);
            return 0;
        }

        if (cmd_feas->parsed()) {
            json j = base_report("feasibility", cfg);
            std::vector<drgforge::IntersectionArray> work;
            for (const auto& text : arrays)
                work.push_back(drgforge::IntersectionArray::parse(text));
            if (!family_range.empty()) {
                const auto [lo, hi] = parse_range(family_range);
                if (lo < 6 || hi < lo) throw drgforge::BadParameters("bad --family-M range");
                for (long long m = lo; m <= hi; ++m) work.push_back(drgforge::family_array(m));
            }
            if (work.empty())
                throw drgforge::BadParameters("feasibility needs --array or --family-M");
            std::vector<drgforge::Verdict> verdicts(work.size());
            drgforge::parallel_for(static_cast<std::int64_t>(work.size()), [&](std::int64_t i) {
                verdicts[i] = drgforge::feasibility_verdict(work[i], cfg.walk_lmax);
            });
            json list = json::array();
            for (const auto& verdict : verdicts) list.push_back(verdict_json(verdict));
            j["verdicts"] = list;
            if (cfg.timings) j["timings_ms"] = elapsed_ms();
            emit(j, cfg);
            return 0;
        }

        if (cmd_spg->parsed()) {
            json j = base_report("spg-extract", cfg);
            const auto graph = drgforge::read_edge_list_file(spg_in);
            int exit_code = 0;
            try {
                const auto spg = drgforge::extract_spg(graph, line_size);
                j["points"] = spg.point_count;
                j["lines"] = spg.lines.size();
                j["parameters"] = {{"s", spg.s}, {"t", spg.t}, {"alpha", spg.alpha},
                                   {"mu", spg.mu}};
                j["is_partial"] = spg.is_partial;
                j["diagonal_axiom"] = spg.diagonal_axiom;
                j["collinearity_matches_graph"] = spg.collinearity_matches_graph;
                j["axioms"] = "verified";
            } catch (const drgforge::AxiomViolation& violation) {
                j["axioms"] = "violated";
                j["violation"] = violation.what();
                exit_code = 1;
            }
            if (cfg.timings) j["timings_ms"] = elapsed_ms();
            emit(j, cfg);
            return exit_code;
        }

        if (cmd_verify->parsed()) {
            if (target != "bil")
                throw drgforge::BadParameters("unknown verification target: " + target);
            json j = base_report("verify-paper", cfg);
            drgforge::VerifySuiteOptions opts;
            opts.seed = cfg.seed;
            opts.ball2_trials = trials;
            opts.vertex_cap = cfg.vertex_cap;
            const auto report = drgforge::run_verification_suite(vq, ve, vd, opts);
            j["target"] = {{"family", "bil"}, {"q", vq}, {"e", ve}, {"d", vd}};
            j["checks"] = report_json(report);
            j["all_pass"] = report.all_pass();
            if (cfg.timings) j["timings_ms"] = elapsed_ms();
            emit(j, cfg);
            return report.all_pass() ? 0 : 1;
        }
    } catch (const drgforge::Error& err) {
        json j;
        j["schema"] = 1;
        j["error"] = err.what();
        std::cerr << j.dump(2) << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
