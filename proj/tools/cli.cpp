// Copyright 2026 The qssr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qssr/analysis.hpp"
#include "qssr/circuits.hpp"
#include "qssr/error.hpp"
#include "qssr/problem.hpp"
#include "qssr/search.hpp"

namespace qssr::cli {
namespace {

struct RunConfig {
    std::string instance_path;
    std::string mode = "reduced";
    std::size_t rounds = 8;
    double delta = 0.1;
    std::uint64_t seed = 0;
    std::uint64_t shots = 10000;
    std::string out_path;
    std::string format = "csv";
    bool grover = false;
    std::string oracle = "auto";
    bool no_coin_reuse = false;

    // analyze
    std::uint64_t window = 4;
    std::vector<std::size_t> machines{2};
    std::size_t k_min = 1;
    std::size_t k_max = 4;

    // resources sweep
    std::size_t sweep_min = 0;
    std::size_t sweep_max = 0;
    std::size_t jobs = 4;
    std::uint64_t max_offset = 0;
    bool no_gates = false;
    bool list = false;
};

void emit(const RunConfig& cfg, std::string text, std::ostream& out) {
    if (!text.empty() && text.back() != '\n') text += '\n';
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out_path);
    if (!f) throw ValidationError("cannot write '" + cfg.out_path + "'");
    f << text;
}

SearchOptions search_options(const RunConfig& cfg) {
    if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) throw ParameterError("--delta must lie in (0, 1)");
    SearchOptions opt;
    opt.mode = parse_mode(cfg.mode);
    opt.delta = cfg.delta;
    opt.oracle = parse_oracle_mode(cfg.oracle);
    opt.coin_reuse = !cfg.no_coin_reuse;
    opt.seed = cfg.seed;
    return opt;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    const Instance inst = load_instance(cfg.instance_path);
    const SearchOptions opt = search_options(cfg);
    const SearchTrace trace = cfg.grover ? run_grover(inst, opt, cfg.rounds) : run_fixed_point(inst, opt, cfg.rounds);
    emit(cfg, cfg.format == "json" ? trace_to_json(trace) : trace_to_csv(trace), out);
    return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const RatioCurves curves = ratio_curves(cfg.window, cfg.machines, cfg.k_min, cfg.k_max);
    for (const std::string& s : curves.skipped) err << "skipped: " << s << "\n";
    if (cfg.format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const RatioRow& r : curves.rows) {
            rows.push_back({{"I", r.machines},
                            {"K", r.jobs},
                            {"C", r.window},
                            {"mode", mode_name(r.mode)},
                            {"space_size", r.space_size},
                            {"solutions", r.solutions},
                            {"sqrt_ratio", r.sqrt_ratio}});
        }
        emit(cfg, rows.dump(2), out);
    } else {
        emit(cfg, ratio_rows_to_csv(curves.rows), out);
    }
    return kExitOk;
}

std::string sweep_csv(const RunConfig& cfg) {
    std::ostringstream s;
    s << "I,K,C,O,mode,total,formula_total\n";
    char buf[64];
    for (std::size_t I = cfg.sweep_min; I <= cfg.sweep_max; ++I) {
        std::vector<std::int64_t> offsets(I, static_cast<std::int64_t>(cfg.max_offset));
        offsets[0] = 0;
        const Instance inst = sizing_instance(I, cfg.jobs, cfg.window, offsets);
        for (Mode m : {Mode::Full, Mode::Reduced}) {
            const ResourceReport r = qubit_report(inst, m);
            std::snprintf(buf, sizeof buf, "%.6g", r.formula_total);
            s << I << ',' << cfg.jobs << ',' << cfg.window << ',' << cfg.max_offset << ',' << mode_name(m) << ','
              << r.total << ',' << buf << '\n';
        }
    }
    return s.str();
}

int cmd_resources(const RunConfig& cfg, std::ostream& out) {
    if (cfg.sweep_max > 0) {
        if (cfg.sweep_min < 1 || cfg.sweep_min > cfg.sweep_max) throw ValidationError("--sweep needs 1 <= MIN <= MAX");
        emit(cfg, sweep_csv(cfg), out);
        return kExitOk;
    }
    const Instance inst = load_instance(cfg.instance_path);
    const Mode mode = parse_mode(cfg.mode);
    const ResourceReport r = cfg.no_gates ? qubit_report(inst, mode) : resource_report(inst, mode);
    emit(cfg, resource_report_to_json(r), out);
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const Instance inst = load_instance(cfg.instance_path);
    const SearchOptions opt = search_options(cfg);
    const SearchEngine engine(inst, opt);
    const AngleSequence angles = fixed_point_angles(cfg.rounds, cfg.delta);
    std::vector<double> marked, initial;
    for (std::size_t j = 0; j < angles.rounds; ++j) {
        marked.push_back(angles.marked_angle(j));
        initial.push_back(angles.initial_angle(j));
    }
    const StateVector final_state = engine.run(marked, initial);
    const VerifyReport report = verify_samples(engine, final_state, cfg.shots, cfg.seed);
    emit(cfg, verify_to_json(report), out);
    return report.consistent ? kExitOk : kExitCheckFailed;
}

// Data registers of one basis index, MSB-first per register, machines separated by " | ".
std::string format_pattern(const QubitLayout& layout, std::uint64_t index) {
    std::string s;
    for (std::size_t i = 0; i < layout.data.size(); ++i) {
        if (i) s += " | ";
        for (std::size_t k = 0; k < layout.data[i].size(); ++k) {
            if (k) s += ' ';
            const RegisterSpan& r = layout.data[i][k];
            for (std::size_t b = r.width(); b-- > 0;) s += ((index >> r[b]) & 1U) ? '1' : '0';
        }
    }
    return s;
}

int cmd_prep_check(const RunConfig& cfg, std::ostream& out) {
    const Instance inst = load_instance(cfg.instance_path);
    if (parse_mode(cfg.mode) != Mode::Reduced) throw ValidationError("prep-check requires --mode reduced");
    PipelineOptions popt;
    popt.coin_reuse = !cfg.no_coin_reuse;
    const PreparedPipeline p = build_pipeline(inst, Mode::Reduced, popt);
    StateVector s = init_state(p.layout.total);
    s.apply(p.prep);

    std::uint64_t data_mask = 0, coin_mask = 0;
    for (Wire w : p.layout.data_wires()) data_mask |= std::uint64_t{1} << w;
    for (const RegisterSpan& c : p.layout.coin)
        for (Wire w : c.wires()) coin_mask |= std::uint64_t{1} << w;

    std::map<std::uint64_t, double> support;  // data pattern -> probability
    double coin_zero = 0.0;
    for (std::uint64_t i = 0; i < s.dimension(); ++i) {
        const double pr = std::norm(s.amplitude(i));
        if ((i & coin_mask) == 0) coin_zero += pr;
        if (pr > 1e-18) support[i & data_mask] += pr;
    }
    std::uint64_t expected = 1;
    std::vector<std::vector<std::vector<std::uint64_t>>> paths;
    for (std::size_t i = 0; i < inst.machines; ++i) {
        paths.push_back(feasible_paths(inst, i));
        expected *= paths.back().size();
    }
    bool matches = support.size() == expected;
    for (const auto& [pattern, pr] : support) {
        const Schedule sched = decode_basis(inst, p.layout, pattern);
        for (std::size_t i = 0; i < inst.machines && matches; ++i)
            matches = is_feasible_path(inst, i, sched.dates[i]);
    }
    double min_mag = 1.0, max_mag = 0.0;
    for (const auto& [pattern, pr] : support) {
        min_mag = std::min(min_mag, std::sqrt(pr));
        max_mag = std::max(max_mag, std::sqrt(pr));
    }
    const double target = 1.0 / std::sqrt(static_cast<double>(expected));
    const bool uniform = std::abs(min_mag - target) <= 1e-9 && std::abs(max_mag - target) <= 1e-9;
    const bool coin_ok = p.layout.coin.empty() || coin_zero >= 1.0 - 1e-9;
    const bool list = cfg.list || support.size() <= 256;

    std::ostringstream o;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["instance"] = nlohmann::ordered_json::parse(instance_to_json(inst));
        j["patterns"] = support.size();
        j["expected_patterns"] = expected;
        j["support_matches"] = matches;
        j["min_magnitude"] = min_mag;
        j["max_magnitude"] = max_mag;
        j["uniform"] = uniform;
        j["coin_zero_probability"] = coin_zero;
        j["coin_zero"] = coin_ok;
        if (list) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto& [pattern, pr] : support)
                rows.push_back({{"registers", format_pattern(p.layout, pattern)}, {"magnitude", std::sqrt(pr)}});
            j["support"] = rows;
        }
        o << j.dump(2) << "\n";
    } else {
        char buf[128];
        o << "patterns " << support.size() << " expected " << expected << "\n";
        std::snprintf(buf, sizeof buf, "magnitude min %.12f max %.12f target %.12f\n", min_mag, max_mag, target);
        o << buf;
        std::snprintf(buf, sizeof buf, "coin_zero_probability %.12f\n", coin_zero);
        o << buf;
        o << "support_matches " << (matches ? "yes" : "no") << "\n";
        if (list) {
            for (const auto& [pattern, pr] : support) {
                std::snprintf(buf, sizeof buf, "  %.12f  ", std::sqrt(pr));
                o << buf << format_pattern(p.layout, pattern) << "\n";
            }
        }
    }
    emit(cfg, o.str(), out);
    return matches && uniform && coin_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Quantum search for job-shop schedules: simulation and resource analysis", "qssr"};
    app.require_subcommand(1);

    const auto add_format = [&](CLI::App* c) {
        c->add_option("--out", cfg.out_path, "Write results to this file instead of stdout");
        c->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };
    const auto add_search = [&](CLI::App* c) {
        c->add_option("--instance", cfg.instance_path, "Instance JSON file")->required();
        c->add_option("--mode", cfg.mode, "full or reduced");
        c->add_option("--rounds", cfg.rounds, "Reflection pairs (Grover iterations with --grover)");
        c->add_option("--delta", cfg.delta, "Fixed-point error parameter in (0, 1)");
        c->add_option("--seed", cfg.seed, "Seed recorded in outputs and used for sampling");
        c->add_option("--oracle", cfg.oracle, "auto, circuit or diagonal");
        c->add_flag("--no-coin-reuse", cfg.no_coin_reuse, "One coin register per walk step");
        add_format(c);
    };

    CLI::App* simulate = app.add_subcommand("simulate", "Run fixed-point or Grover search and write the trace");
    add_search(simulate);
    simulate->add_flag("--grover", cfg.grover, "Plain amplitude amplification instead of fixed-point");

    CLI::App* verify = app.add_subcommand("verify", "Sample the final state and check samples classically");
    add_search(verify);
    verify->add_option("--shots", cfg.shots, "Number of samples");

    CLI::App* analyze = app.add_subcommand("analyze", "Search-space ratio curves");
    analyze->add_option("--window", cfg.window, "Window C");
    analyze->add_option("--machines", cfg.machines, "Machine counts")->delimiter(',');
    analyze->add_option("--k-min", cfg.k_min, "Smallest job count");
    analyze->add_option("--k-max", cfg.k_max, "Largest job count");
    add_format(analyze);

    CLI::App* resources = app.add_subcommand("resources", "Qubit and gate counts");
    resources->add_option("--instance", cfg.instance_path, "Instance JSON file");
    resources->add_option("--mode", cfg.mode, "full or reduced");
    resources->add_flag("--no-gates", cfg.no_gates, "Skip the gate count");
    resources->add_option("--sweep-min", cfg.sweep_min, "Qubit sweep: smallest machine count");
    resources->add_option("--sweep-max", cfg.sweep_max, "Qubit sweep: largest machine count");
    resources->add_option("--jobs", cfg.jobs, "Qubit sweep: jobs per machine");
    resources->add_option("--window", cfg.window, "Qubit sweep: window C (any value >= 2)");
    resources->add_option("--max-offset", cfg.max_offset, "Qubit sweep: offset of every machine but the first");
    resources->add_option("--out", cfg.out_path, "Write results to this file instead of stdout");

    CLI::App* prep = app.add_subcommand("prep-check", "Check the quantum-walk preparation against feasible paths");
    prep->add_option("--instance", cfg.instance_path, "Instance JSON file")->required();
    prep->add_option("--mode", cfg.mode, "Must be reduced");
    prep->add_flag("--list", cfg.list, "List the support even when large");
    prep->add_flag("--no-coin-reuse", cfg.no_coin_reuse, "One coin register per walk step");
    prep->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    prep->add_option("--out", cfg.out_path, "Write results to this file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "qssr: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (analyze->parsed()) return cmd_analyze(cfg, out, err);
        if (resources->parsed()) {
            if (cfg.sweep_max == 0 && cfg.instance_path.empty())
                throw ValidationError("resources needs --instance or --sweep-max");
            return cmd_resources(cfg, out);
        }
        if (prep->parsed()) {
            if (!prep->count("--mode")) cfg.mode = "reduced";
            return cmd_prep_check(cfg, out);
        }
    } catch (const CapacityError& e) {
        err << "qssr: capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ValidationError& e) {
        err << "qssr: invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ParameterError& e) {
        err << "qssr: invalid parameter: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error& e) {
        err << "qssr: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInvalid;
}

}  // namespace qssr::cli
