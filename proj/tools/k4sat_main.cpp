// k4sat command-line front end.
//
// Subcommands:
//   construct {f|star-matching|complete-bipartite}   emit a generator graph
//   check <graph6|file|->                            saturation verdict
//   spectrum {formula|coverage|enumerate}            size sets and censuses
//   verify {lemma1|lemma2|lemma3|overlap|theorem-a|proof-bound|checker-equiv}
//
// Exit codes: 0 verified/success, 1 verification failed or not saturated,
// 2 usage error, 3 malformed input. Output is deterministic for identical
// invocations regardless of --jobs; --timing adds a wall-clock field.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "k4sat/k4sat.hpp"
#include "k4sat/parallel.hpp"

using nlohmann::json;
using namespace k4sat;

namespace {

struct GlobalOptions {
    int jobs = 1;
    bool timing = false;
};

int jobs_from_environment() {
    const char* raw = std::getenv("K4SAT_JOBS");
    if (!raw) return 1;
    try {
        const int parsed = std::stoi(raw);
        return parsed >= 1 ? parsed : 1;
    } catch (...) {
        return 1;
    }
}

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

json with_timing(json payload, const GlobalOptions& global, std::chrono::steady_clock::time_point start) {
    if (global.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        payload["wall_time_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    return payload;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
    std::string family;
    int n = 0;
    int a = 0;
    int b = 0;
    int i = -1;
    std::string format = "json";
};

int run_construct(const ConstructArgs& args, const GlobalOptions& global) {
    const auto start = std::chrono::steady_clock::now();
    Graph graph;
    std::optional<PartLabels> parts;
    json params{{"n", args.n}};
    if (args.family == "f") {
        FamilyGraph built = construct_f({args.n, args.a, args.b});
        graph = std::move(built.graph);
        parts = std::move(built.parts);
        params["a"] = args.a;
        params["b"] = args.b;
    } else if (args.family == "star-matching") {
        graph = construct_star_matching(args.n);
    } else {
        if (args.i < 0) throw std::invalid_argument("complete-bipartite requires --i");
        graph = construct_complete_bipartite(args.n, args.i);
        params["i"] = args.i;
    }

    if (args.format == "graph6") {
        std::cout << graph6_encode(graph) << "\n";
    } else if (args.format == "edges") {
        std::cout << to_edge_list(graph);
    } else {
        json out{{"family", args.family},
                 {"params", params},
                 {"n", graph.order()},
                 {"edge_count", graph.size()},
                 {"graph6", graph6_encode(graph)}};
        if (parts) out["parts"] = *parts;
        emit(with_timing(std::move(out), global, start));
    }
    return 0;
}

// -------------------------------------------------------------------- check

std::vector<std::string> read_graph_lines(const std::string& input) {
    std::string text;
    if (input == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else if (std::ifstream file(input); file.good()) {
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    } else {
        text = input;  // literal graph6
    }
    std::vector<std::string> lines;
    std::istringstream stream(text);
    for (std::string line; std::getline(stream, line);) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw FormatError("check: no graph6 input found");
    return lines;
}

int run_check(const std::string& input, const std::string& mode, const GlobalOptions& global) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::string> lines = read_graph_lines(input);

    bool all_saturated = true;
    bool disagreement = false;
    json results = json::array();
    for (const std::string& line : lines) {
        const Graph g = graph6_decode(line);
        json entry;
        if (mode == "fast") {
            const SaturationVerdict verdict = is_k4_minus_saturated(g);
            all_saturated = all_saturated && verdict.saturated;
            entry = verdict;
        } else if (mode == "naive") {
            const SaturationVerdict verdict = naive_is_saturated(g);
            all_saturated = all_saturated && verdict.saturated;
            entry = verdict;
        } else {
            const SaturationVerdict fast = is_k4_minus_saturated(g);
            const SaturationVerdict naive = naive_is_saturated(g);
            if (fast == naive) {
                all_saturated = all_saturated && fast.saturated;
                entry = fast;
                entry["modes_agree"] = true;
            } else {
                disagreement = true;
                entry = json{{"disagreement", true}, {"fast", fast}, {"naive", naive}};
            }
        }
        entry["input"] = line;
        results.push_back(std::move(entry));
    }

    json out = results.size() == 1 ? results.front() : json{{"graphs", results}};
    emit(with_timing(std::move(out), global, start));
    if (disagreement) return 1;
    return all_saturated ? 0 : 1;
}

// ----------------------------------------------------------------- spectrum

struct SpectrumArgs {
    std::string sub;
    int n = 0;
    bool dedup = true;
    int cert_cap = 100;
};

int run_spectrum(const SpectrumArgs& args, const GlobalOptions& global) {
    const auto start = std::chrono::steady_clock::now();
    if (args.sub == "formula") {
        const SpectrumSet set = spectrum_formula(args.n);
        json out = set;
        if (set.formula_out_of_range)
            out["warning"] = "closed form is stated for n >= 10; values below are not authoritative";
        emit(with_timing(std::move(out), global, start));
        return 0;
    }
    if (args.sub == "coverage") {
        emit(with_timing(json(family_size_set(args.n)), global, start));
        return 0;
    }
    EnumerateOptions opts;
    opts.dedup = args.dedup;
    opts.cert_cap = args.cert_cap;
    opts.workers = global.jobs;
    emit(with_timing(json(enumerate_saturated(args.n, opts)), global, start));
    return 0;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
    std::string target;
    int n = -1;
    int n_min = -1;
    int n_max = -1;
    int random_count = 10000;
    unsigned seed = 20240811;
};

struct RangeOutcome {
    bool pass = true;
    long long checked = 0;
    json counterexamples = json::array();
};

// Per-n work fanned out across jobs; results merged in n order.
template <typename PerN>
RangeOutcome sweep_range(int n_min, int n_max, int jobs, PerN&& per_n) {
    if (n_max < n_min) throw std::invalid_argument("empty sweep range: n-max below n-min");
    const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
    std::vector<RangeOutcome> slots(count);
    detail::parallel_for_index(count, jobs, [&](std::size_t index, int) {
        slots[index] = per_n(n_min + static_cast<int>(index));
    });
    RangeOutcome merged;
    for (const RangeOutcome& slot : slots) {
        merged.pass = merged.pass && slot.pass;
        merged.checked += slot.checked;
        for (const auto& c : slot.counterexamples) merged.counterexamples.push_back(c);
    }
    return merged;
}

RangeOutcome verify_edge_formula(int n_min, int n_max, int jobs) {
    return sweep_range(n_min, n_max, jobs, [](int n) {
        RangeOutcome out;
        for (int b = 0; b + 5 <= n; ++b)
            for (int a = 0; a + b + 5 <= n; ++a) {
                ++out.checked;
                const long long built = construct_f({n, a, b}).graph.size();
                const long long formula = f_edge_count(n, a, b);
                if (built != formula) {
                    out.pass = false;
                    out.counterexamples.push_back(
                        json{{"n", n}, {"a", a}, {"b", b}, {"built", built}, {"formula", formula}});
                }
            }
        return out;
    });
}

RangeOutcome verify_family_saturation(int n_min, int n_max, int jobs) {
    return sweep_range(n_min, n_max, jobs, [](int n) {
        RangeOutcome out;
        for (int b = 2; b + 5 <= n; ++b)
            for (int a = 0; a + b + 5 <= n; ++a) {
                ++out.checked;
                const Graph g = construct_f({n, a, b}).graph;
                const SaturationVerdict verdict = is_k4_minus_saturated(g);
                if (!verdict.saturated) {
                    out.pass = false;
                    out.counterexamples.push_back(json{{"n", n}, {"a", a}, {"b", b}, {"verdict", verdict}});
                }
            }
        return out;
    });
}

RangeOutcome verify_interval_coverage(int n_min, int n_max, int jobs) {
    return sweep_range(n_min, n_max, jobs, [](int n) {
        RangeOutcome out;
        ++out.checked;
        const CoverageResult cov = family_covers_interval(n);
        if (!cov.covered) {
            out.pass = false;
            out.counterexamples.push_back(json{{"n", n}, {"coverage", cov}});
        }
        return out;
    });
}

RangeOutcome verify_band_overlap(int n_min, int n_max, int jobs) {
    return sweep_range(n_min, n_max, jobs, [](int n) {
        RangeOutcome out;
        ++out.checked;
        if (!band_overlap_holds(n)) {
            out.pass = false;
            out.counterexamples.push_back(json{{"n", n}});
        }
        return out;
    });
}

RangeOutcome verify_checker_equivalence(int exhaustive_n, int random_count, int n_min, int n_max, unsigned seed,
                                        int jobs) {
    RangeOutcome out;
    if (exhaustive_n > 6) throw std::invalid_argument("checker-equiv: exhaustive sweep capped at n <= 6");

    const int slots = exhaustive_n * (exhaustive_n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << slots;
    const std::uint64_t chunk = 1024;
    const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
    std::vector<RangeOutcome> partials(chunks);
    detail::parallel_for_index(chunks, jobs, [&](std::size_t index, int) {
        RangeOutcome& part = partials[index];
        const std::uint64_t lo = static_cast<std::uint64_t>(index) * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            std::vector<std::pair<int, int>> edges;
            int k = 0;
            for (int c = 1; c < exhaustive_n; ++c)
                for (int r = 0; r < c; ++r) {
                    if (mask & (std::uint64_t{1} << k)) edges.emplace_back(r, c);
                    ++k;
                }
            const Graph g = Graph::from_edges(exhaustive_n, edges);
            ++part.checked;
            if (!(is_k4_minus_saturated(g) == naive_is_saturated(g))) {
                part.pass = false;
                part.counterexamples.push_back(graph6_encode(g));
            }
        }
    });
    for (const RangeOutcome& part : partials) {
        out.pass = out.pass && part.pass;
        out.checked += part.checked;
        for (const auto& c : part.counterexamples) out.counterexamples.push_back(c);
    }

    // Random phase: graphs are drawn up front so results do not depend on
    // the worker count.
    std::mt19937 rng(seed);
    std::vector<Graph> samples;
    samples.reserve(static_cast<std::size_t>(random_count));
    const double densities[5] = {0.15, 0.3, 0.5, 0.7, 0.85};
    const int span = n_max - n_min + 1;
    for (int i = 0; i < random_count; ++i) {
        const int n = n_min + i % span;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((rng() >> 8) / static_cast<double>(1 << 24) < densities[i % 5]) edges.emplace_back(u, v);
        samples.push_back(Graph::from_edges(n, edges));
    }
    std::vector<RangeOutcome> random_partials(samples.size());
    detail::parallel_for_index(samples.size(), jobs, [&](std::size_t index, int) {
        RangeOutcome& part = random_partials[index];
        ++part.checked;
        if (!(is_k4_minus_saturated(samples[index]) == naive_is_saturated(samples[index]))) {
            part.pass = false;
            part.counterexamples.push_back(graph6_encode(samples[index]));
        }
    });
    for (const RangeOutcome& part : random_partials) {
        out.pass = out.pass && part.pass;
        out.checked += part.checked;
        for (const auto& c : part.counterexamples) out.counterexamples.push_back(c);
    }
    return out;
}

int run_verify(const VerifyArgs& args, const GlobalOptions& global) {
    const auto start = std::chrono::steady_clock::now();
    json payload;
    bool pass = false;

    auto fill = [&](const RangeOutcome& outcome, json extra = json::object()) {
        pass = outcome.pass;
        payload = std::move(extra);
        payload["checked"] = outcome.checked;
        if (!outcome.counterexamples.empty()) payload["counterexamples"] = outcome.counterexamples;
    };

    if (args.target == "lemma1") {
        const int lo = args.n_min > 0 ? args.n_min : 10;
        const int hi = args.n_max > 0 ? args.n_max : 60;
        if (hi > kMaxVertices) throw std::invalid_argument("lemma1: n-max exceeds 62");
        fill(verify_edge_formula(lo, hi, global.jobs), json{{"n_min", lo}, {"n_max", hi}});
    } else if (args.target == "lemma2") {
        const int lo = args.n_min > 0 ? args.n_min : 10;
        const int hi = args.n_max > 0 ? args.n_max : 60;
        if (hi > kMaxVertices) throw std::invalid_argument("lemma2: n-max exceeds 62");
        fill(verify_family_saturation(lo, hi, global.jobs), json{{"n_min", lo}, {"n_max", hi}});
    } else if (args.target == "lemma3") {
        const int lo = args.n_min > 0 ? args.n_min : 10;
        const int hi = args.n_max > 0 ? args.n_max : 500;
        fill(verify_interval_coverage(lo, hi, global.jobs), json{{"n_min", lo}, {"n_max", hi}});
    } else if (args.target == "overlap") {
        const int lo = args.n_min > 0 ? args.n_min : 11;
        const int hi = args.n_max > 0 ? args.n_max : 500;
        fill(verify_band_overlap(lo, hi, global.jobs), json{{"n_min", lo}, {"n_max", hi}});
    } else if (args.target == "theorem-a") {
        const int n = args.n > 0 ? args.n : 8;
        const SweepOutcome outcome = check_dense_saturated_bipartite(n, global.jobs);
        pass = outcome.ok;
        payload = json{{"n", n}, {"sweep", outcome}};
    } else if (args.target == "proof-bound") {
        const int n = args.n > 0 ? args.n : 8;
        const SweepOutcome outcome = check_odd_cycle_bounds(n, global.jobs, true);
        pass = outcome.ok;
        payload = json{{"n", n}, {"sweep", outcome}};
    } else {  // checker-equiv
        const int n = args.n > 0 ? args.n : 6;
        const int lo = args.n_min > 0 ? args.n_min : 7;
        const int hi = args.n_max > 0 ? args.n_max : 12;
        fill(verify_checker_equivalence(n, args.random_count, lo, hi, args.seed, global.jobs),
             json{{"exhaustive_n", n}, {"random", args.random_count}, {"n_min", lo}, {"n_max", hi},
                  {"seed", args.seed}});
    }

    json report{{"command", "verify"}, {"target", args.target}, {"outcome", pass ? "pass" : "fail"},
                {"payload", std::move(payload)}};
    emit(with_timing(std::move(report), global, start));
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for K4^- (diamond) saturated graphs: generators, checkers, edge spectra, enumeration"};
    app.require_subcommand(1);

    GlobalOptions global;
    global.jobs = jobs_from_environment();
    app.add_option("--jobs", global.jobs, "worker threads for sweeps and enumeration")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timing", global.timing, "include wall-clock time in reports");

    ConstructArgs construct_args;
    CLI::App* construct = app.add_subcommand("construct", "emit a saturated-family graph");
    construct->fallthrough();
    construct->add_option("family", construct_args.family, "f | star-matching | complete-bipartite")
        ->required()
        ->check(CLI::IsMember({"f", "star-matching", "complete-bipartite"}));
    construct->add_option("--n", construct_args.n, "vertex count")->required();
    construct->add_option("--a", construct_args.a, "size of part A2 (family f)");
    construct->add_option("--b", construct_args.b, "size of part B2 (family f)");
    construct->add_option("--i", construct_args.i, "left part size (complete-bipartite)");
    construct->add_option("--format", construct_args.format, "graph6 | edges | json")
        ->check(CLI::IsMember({"graph6", "edges", "json"}));

    std::string check_input;
    std::string check_mode = "fast";
    CLI::App* check = app.add_subcommand("check", "K4^- saturation verdict for graph6 input");
    check->fallthrough();
    check->add_option("input", check_input, "graph6 string, path to a graph6 file, or - for stdin")->required();
    check->add_option("--mode", check_mode, "fast | naive | both")
        ->check(CLI::IsMember({"fast", "naive", "both"}));

    SpectrumArgs spectrum_args;
    CLI::App* spectrum = app.add_subcommand("spectrum", "edge spectrum sets and censuses");
    spectrum->fallthrough();
    spectrum->add_option("sub", spectrum_args.sub, "formula | coverage | enumerate")
        ->required()
        ->check(CLI::IsMember({"formula", "coverage", "enumerate"}));
    spectrum->add_option("--n", spectrum_args.n, "vertex count")->required();
    spectrum->add_flag("--dedup,!--no-dedup", spectrum_args.dedup, "group enumerated graphs by isomorphism class");
    spectrum->add_option("--cert-cap", spectrum_args.cert_cap, "certificates kept per size (negative: unlimited)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "sweep checks with counterexample reporting");
    verify->fallthrough();
    verify->add_option("target", verify_args.target,
                       "lemma1 | lemma2 | lemma3 | overlap | theorem-a | proof-bound | checker-equiv")
        ->required()
        ->check(CLI::IsMember({"lemma1", "lemma2", "lemma3", "overlap", "theorem-a", "proof-bound",
                               "checker-equiv"}));
    verify->add_option("--n", verify_args.n, "single order (theorem-a, proof-bound, checker-equiv exhaustive part)");
    verify->add_option("--n-min", verify_args.n_min, "sweep lower bound");
    verify->add_option("--n-max", verify_args.n_max, "sweep upper bound");
    verify->add_option("--random", verify_args.random_count, "random-graph count (checker-equiv)");
    verify->add_option("--seed", verify_args.seed, "random seed (checker-equiv)");

    try {
        app.parse(argc, argv);
        if (construct->parsed()) return run_construct(construct_args, global);
        if (check->parsed()) return run_check(check_input, check_mode, global);
        if (spectrum->parsed()) {
            if (spectrum_args.sub == "enumerate" && spectrum_args.n > 8)
                throw std::invalid_argument("spectrum enumerate: exhaustive search is capped at n <= 8");
            return run_spectrum(spectrum_args, global);
        }
        return run_verify(verify_args, global);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
