#include "rcw/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rcw/constructions.hpp"
#include "rcw/decompose.hpp"
#include "rcw/detect.hpp"
#include "rcw/errors.hpp"
#include "rcw/json_io.hpp"
#include "rcw/ramsey.hpp"
#include "rcw/rng.hpp"

namespace rcw::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw malformed_input_error("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(std::ostream& out, json report, std::chrono::steady_clock::time_point start) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    report["millis"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    out << report.dump(2) << "\n";
}

void write_or_print(const std::string& out_path, const std::string& payload, std::ostream& out) {
    if (out_path.empty()) {
        out << payload << "\n";
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw malformed_input_error("cannot write \"" + out_path + "\"");
    f << payload << "\n";
}

json mono_witness_json(const decompose::MonoWitness& w) {
    json doc = json::object();
    if (w.red_cycle) doc["red_cycle"] = io::cycle_to_json(*w.red_cycle);
    if (w.blue_wheel) doc["blue_wheel"] = io::wheel_to_json(*w.blue_wheel);
    return doc;
}

json scan_report_json(const ramsey::ScanReport& report) {
    json sizes = json::array();
    for (const auto& s : report.sizes)
        sizes.push_back({{"n", s.n},
                         {"degree_bound", s.degree_bound},
                         {"vacuous", s.vacuous},
                         {"samples_accepted", s.samples_accepted},
                         {"samples_tried", s.samples_tried}});
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"n", v.n},
                              {"sample_index", v.sample_index},
                              {"missing_length", v.missing_length},
                              {"edges", v.edges}});
    return json{{"sizes", std::move(sizes)},
                {"violations", std::move(violations)},
                {"seed", report.seed},
                {"generator", report.generator},
                {"all_ok", report.all_ok()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();

    CLI::App app{"exact red/blue coloring toolkit: constructions, detection, "
                 "stability decomposition and bounded Ramsey search"};
    app.require_subcommand(1);

    // Shared option storage; each subcommand binds the pieces it uses.
    std::string file, out_path, red_target = "cycle:3", blue_target = "cycle:3";
    std::string alpha = "1/3", beta = "2/3", color = "red";
    std::uint64_t max_nodes = UINT64_MAX, seed = 0;
    int n = 6, k = 6, m = 3, s1 = 1, s2 = 1, s3 = 1, flips = 0, threads = 1;
    int j_min = 4, j_max = 4, n_min = 7, n_max = 12, samples = 100;
    bool no_symmetry = false;

    std::function<int()> action;

    // construct ------------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "emit a generator's coloring or graph");
    construct->require_subcommand(1);
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("-o,--output", out_path, "output file"); };

    auto* two = construct->add_subcommand("two-clique", "K_{2m}: red K_{m,m}, blue 2 K_m");
    two->add_option("--m", m, "clique size")->required();
    add_out(two);
    two->callback([&] {
        action = [&] {
            write_or_print(out_path, io::serialize_coloring(constructions::two_clique_coloring(m)),
                           out);
            return kExitOk;
        };
    });

    auto* three = construct->add_subcommand("three-clique", "red cliques s1,s2,s3, blue between");
    three->add_option("--s1", s1)->required();
    three->add_option("--s2", s2)->required();
    three->add_option("--s3", s3)->required();
    add_out(three);
    three->callback([&] {
        action = [&] {
            write_or_print(out_path,
                           io::serialize_coloring(constructions::three_clique_coloring(s1, s2, s3)),
                           out);
            return kExitOk;
        };
    });

    auto* brandt = construct->add_subcommand("brandt-gadget",
                                             "two K_{m,m} sharing a vertex plus one edge");
    brandt->add_option("--m", m, "block side size")->required();
    add_out(brandt);
    brandt->callback([&] {
        action = [&] {
            write_or_print(out_path, io::serialize_graph(constructions::brandt_gadget(m)), out);
            return kExitOk;
        };
    });

    auto* ns = construct->add_subcommand("ns-two-clique", "K_{4k}: red 2 K_{2k}, blue K_{2k,2k}");
    ns->add_option("--k", k)->required();
    add_out(ns);
    ns->callback([&] {
        action = [&] {
            write_or_print(out_path, io::serialize_coloring(constructions::nikiforov_two_clique(k)),
                           out);
            return kExitOk;
        };
    });

    auto* mut = construct->add_subcommand("mutate", "avoidance-preserving random recolorings");
    mut->add_option("file", file, "input coloring document")->required();
    mut->add_option("--k", k, "forbidden C_{2k+1} / W_{2k+1} parameter")->required();
    mut->add_option("--flips", flips, "number of flip attempts")->required();
    mut->add_option("--seed", seed, "random seed (mandatory, printed in the report)")->required();
    mut->add_option("--max-nodes", max_nodes, "search node budget");
    add_out(mut);
    mut->callback([&] {
        action = [&] {
            auto c = io::parse_coloring(read_file(file));
            auto mutated = constructions::mutate_preserving_avoidance(c, k, flips, seed,
                                                                      Budget::nodes(max_nodes));
            json report = {{"command", "construct mutate"},
                           {"seed", seed},
                           {"generator", SeededRng::name()},
                           {"flips", flips},
                           {"coloring", io::coloring_to_json(mutated)}};
            if (!out_path.empty()) {
                write_or_print(out_path, io::serialize_coloring(mutated), out);
                report.erase("coloring");
            }
            emit(out, std::move(report), start);
            return kExitOk;
        };
    });

    // check ------------------------------------------------------------------
    auto* check = app.add_subcommand("check", "avoidance check: red C_t and blue W_m");
    int red_cycle = 0, blue_wheel = 0;
    check->add_option("file", file, "coloring document")->required();
    check->add_option("--red-cycle", red_cycle, "forbidden red cycle length")->required();
    check->add_option("--blue-wheel", blue_wheel, "forbidden blue wheel rim")->required();
    check->add_option("--max-nodes", max_nodes, "search node budget");
    check->callback([&] {
        action = [&] {
            auto c = io::parse_coloring(read_file(file));
            auto res = detect::avoidance_check(c, red_cycle, blue_wheel, Budget::nodes(max_nodes));
            json report = {{"command", "check"},
                           {"red_cycle", red_cycle},
                           {"blue_wheel", blue_wheel},
                           {"nodes", res.nodes}};
            using K = detect::AvoidanceResult::Kind;
            switch (res.kind) {
                case K::Ok:
                    report["outcome"] = "ok";
                    emit(out, std::move(report), start);
                    return kExitOk;
                case K::RedCycle:
                    report["outcome"] = "red_cycle";
                    report["witness"] = io::cycle_to_json(*res.red_cycle);
                    emit(out, std::move(report), start);
                    return kExitNegative;
                case K::BlueWheel:
                    report["outcome"] = "blue_wheel";
                    report["witness"] = io::wheel_to_json(*res.blue_wheel);
                    emit(out, std::move(report), start);
                    return kExitNegative;
                default:
                    report["outcome"] = "unknown";
                    emit(out, std::move(report), start);
                    return kExitUnknown;
            }
        };
    });

    // spectrum -----------------------------------------------------------------
    auto* spectrum = app.add_subcommand("spectrum", "cycle spectrum, girth and circumference");
    spectrum->add_option("file", file, "graph document, or coloring with --color")->required();
    spectrum->add_option("--color", color, "red|blue: take this class of a coloring document");
    spectrum->add_option("--max-nodes", max_nodes, "search node budget");
    spectrum->callback([&] {
        action = [&] {
            json doc = json::parse(read_file(file));
            Graph g = doc.contains("edges")
                          ? io::graph_from_json(doc)
                          : io::coloring_from_json(doc).monochromatic_graph(
                                color == "blue" ? Color::Blue : Color::Red);
            auto rep = detect::cycle_spectrum(g, Budget::nodes(max_nodes));
            json report = {{"command", "spectrum"},
                           {"lengths", rep.present_lengths},
                           {"exhaustive", rep.exhaustive}};
            report["girth"] = rep.girth ? json(*rep.girth) : json();
            report["circumference"] = rep.circumference ? json(*rep.circumference) : json();
            emit(out, std::move(report), start);
            return rep.exhaustive ? kExitOk : kExitUnknown;
        };
    });

    // decompose ------------------------------------------------------------------
    std::string trace_path;
    auto* dec = app.add_subcommand("decompose", "stability partition with verification");
    dec->add_option("file", file, "coloring document")->required();
    dec->add_option("--k", k, "cycle/wheel parameter")->required();
    dec->add_option("--trace", trace_path, "write the decomposition trace to this file");
    dec->add_option("--max-nodes", max_nodes, "search node budget");
    dec->callback([&] {
        action = [&] {
            auto c = io::parse_coloring(read_file(file));
            decompose::StabilityInput in{std::move(c), k};
            try {
                auto [part, trace] = decompose::stability_partition(in, Budget::nodes(max_nodes));
                auto verify = decompose::verify_stability_partition(in.coloring, part, k);
                json report = {{"command", "decompose"},
                               {"k", k},
                               {"branch", decompose::branch_name(trace.branch)},
                               {"partition", io::partition_to_json(part)},
                               {"verification", decompose::verify_report_to_json(verify)}};
                if (!trace_path.empty())
                    write_or_print(trace_path, decompose::trace_to_json(trace).dump(2), out);
                emit(out, std::move(report), start);
                return verify.passed() ? kExitOk : kExitNegative;
            } catch (const decompose::precondition_violated& e) {
                json report = {{"command", "decompose"},
                               {"k", k},
                               {"outcome", "precondition_violated"},
                               {"error", e.what()},
                               {"witness", mono_witness_json(e.witness)}};
                emit(out, std::move(report), start);
                return kExitNegative;
            } catch (const decompose::internal_contradiction& e) {
                json report = {{"command", "decompose"},
                               {"k", k},
                               {"outcome", "internal_contradiction"},
                               {"error", e.what()},
                               {"witness", mono_witness_json(e.witness)}};
                emit(out, std::move(report), start);
                return kExitNegative;
            }
        };
    });

    // audit ------------------------------------------------------------------
    auto* audit = app.add_subcommand("audit", "decompose and re-check the intermediate lemmas");
    audit->add_option("file", file, "coloring document")->required();
    audit->add_option("--k", k, "cycle/wheel parameter")->required();
    audit->add_option("--max-nodes", max_nodes, "search node budget");
    audit->callback([&] {
        action = [&] {
            auto c = io::parse_coloring(read_file(file));
            decompose::StabilityInput in{std::move(c), k};
            try {
                auto [part, trace] = decompose::stability_partition(in, Budget::nodes(max_nodes));
                auto audit_rep = decompose::lemma_audit(in, trace);
                json report = {{"command", "audit"},
                               {"k", k},
                               {"branch", decompose::branch_name(trace.branch)},
                               {"audit", decompose::audit_report_to_json(audit_rep)}};
                emit(out, std::move(report), start);
                return audit_rep.all_pass() ? kExitOk : kExitNegative;
            } catch (const decompose::precondition_violated& e) {
                json report = {{"command", "audit"},
                               {"outcome", "precondition_violated"},
                               {"error", e.what()},
                               {"witness", mono_witness_json(e.witness)}};
                emit(out, std::move(report), start);
                return kExitNegative;
            }
        };
    });

    // arrows ------------------------------------------------------------------
    auto* arr = app.add_subcommand("arrows", "exhaustive arrowing search on K_n");
    arr->add_option("--n", n, "order of the complete graph")->required();
    arr->add_option("--red", red_target, "red target, cycle:<t> or wheel:<m>")->required();
    arr->add_option("--blue", blue_target, "blue target")->required();
    arr->add_option("--max-nodes", max_nodes, "search node budget");
    arr->add_option("--threads", threads, "parallel workers (deterministic merge)");
    arr->add_flag("--no-symmetry", no_symmetry, "disable symmetry breaking (debug)");
    arr->callback([&] {
        action = [&] {
            auto red = ramsey::TargetSpec::parse(red_target);
            auto blue = ramsey::TargetSpec::parse(blue_target);
            ramsey::ArrowsOptions opt;
            opt.budget = Budget::nodes(max_nodes);
            opt.threads = threads;
            opt.symmetry_breaking = !no_symmetry;
            auto verdict = ramsey::arrows(n, red, blue, opt);
            json report = {{"command", "arrows"},
                           {"n", n},
                           {"red", red.str()},
                           {"blue", blue.str()},
                           {"nodes", verdict.nodes}};
            using K = ramsey::Verdict::Kind;
            report["verdict"] = verdict.kind == K::Arrows        ? "arrows"
                                : verdict.kind == K::Counterexample ? "counterexample"
                                                                    : "unknown";
            report["coloring"] =
                verdict.coloring ? io::coloring_to_json(*verdict.coloring) : json();
            emit(out, std::move(report), start);
            return verdict.kind == K::Arrows        ? kExitOk
                   : verdict.kind == K::Counterexample ? kExitNegative
                                                       : kExitUnknown;
        };
    });

    // bound ------------------------------------------------------------------
    auto* bound = app.add_subcommand("bound", "admissible-pair upper bound table");
    bound->add_option("--alpha", alpha, "exact rational, e.g. 1/3")->required();
    bound->add_option("--beta", beta, "exact rational")->required();
    bound->add_option("--j-min", j_min, "first j");
    bound->add_option("--j-max", j_max, "last j");
    bound->callback([&] {
        action = [&] {
            ramsey::AdmissiblePair p(Rational::parse(alpha), Rational::parse(beta));
            if (j_max < j_min) throw precondition_error("--j-max below --j-min");
            json table = json::array();
            for (int j = j_min; j <= j_max; ++j)
                table.push_back({{"j", j}, {"bound", ramsey::admissible_bound(p, j)}});
            json report = {{"command", "bound"},
                           {"alpha", p.alpha.str()},
                           {"beta", p.beta.str()},
                           {"table", std::move(table)}};
            emit(out, std::move(report), start);
            return kExitOk;
        };
    });

    // scan ------------------------------------------------------------------
    auto* scan = app.add_subcommand("scan", "empirical admissible-pair cycle-condition scan");
    scan->add_option("--alpha", alpha)->required();
    scan->add_option("--beta", beta)->required();
    scan->add_option("--n-min", n_min)->required();
    scan->add_option("--n-max", n_max)->required();
    scan->add_option("--samples", samples, "samples per size")->required();
    scan->add_option("--seed", seed, "random seed (mandatory, printed in the report)")->required();
    scan->add_option("--max-nodes", max_nodes, "search node budget");
    scan->callback([&] {
        action = [&] {
            ramsey::AdmissiblePair p(Rational::parse(alpha), Rational::parse(beta));
            auto rep = ramsey::admissible_pair_scan(p, n_min, n_max, samples, seed,
                                                    Budget::nodes(max_nodes));
            json report = scan_report_json(rep);
            report["command"] = "scan";
            bool ok = rep.all_ok();
            emit(out, std::move(report), start);
            return ok ? kExitOk : kExitNegative;
        };
    });

    // witness ------------------------------------------------------------------
    auto* wit = app.add_subcommand("witness", "lower-bound witness coloring for a target pair");
    wit->add_option("--red", red_target, "red target")->required();
    wit->add_option("--blue", blue_target, "blue target")->required();
    wit->add_option("--max-nodes", max_nodes, "verification node budget");
    wit->add_option("-o,--output", out_path, "write the coloring document here");
    wit->callback([&] {
        action = [&] {
            auto red = ramsey::TargetSpec::parse(red_target);
            auto blue = ramsey::TargetSpec::parse(blue_target);
            auto w = ramsey::ramsey_lower_bound_witness(red, blue, Budget::nodes(max_nodes));
            if (!w) {
                json report = {{"command", "witness"},
                               {"red", red.str()},
                               {"blue", blue.str()},
                               {"outcome", "not_covered"}};
                emit(out, std::move(report), start);
                return kExitUnknown;
            }
            json report = {{"command", "witness"},
                           {"red", red.str()},
                           {"blue", blue.str()},
                           {"n", w->n},
                           {"certifies", "r >= " + std::to_string(w->n + 1)},
                           {"coloring", io::coloring_to_json(w->coloring)}};
            if (!out_path.empty()) {
                write_or_print(out_path, io::serialize_coloring(w->coloring), out);
                report.erase("coloring");
            }
            emit(out, std::move(report), start);
            return kExitOk;
        };
    });

    // ------------------------------------------------------------------------
    std::vector<const char*> argv;
    argv.push_back("rcw");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const malformed_input_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitData;
    } catch (const out_of_range_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitData;
    } catch (const self_loop_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitData;
    } catch (const budget_exceeded_error& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const precondition_error& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    }
}

}  // namespace rcw::cli
