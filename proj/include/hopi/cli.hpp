#pragma once

// Command-line front end. Machine-readable results go to --out (or standard
// output); human summaries and diagnostics go to the error stream.
//
// Exit codes: 0 success, 2 invalid input, 1 internal failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hopi/agcode.hpp"
#include "hopi/dqi_model.hpp"
#include "hopi/error.hpp"
#include "hopi/instance.hpp"
#include "hopi/io.hpp"
#include "hopi/solvers.hpp"

namespace hopi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::string subcommand;
    int q = 0;
    std::optional<long long> t;
    int r = 0;
    double rate = 0.2;
    std::optional<std::uint64_t> seed;
    std::uint64_t trials = 1;
    std::uint64_t budget = kDefaultBudget;
    std::string schedule;
    std::string alg;
    std::string instance_path;
    std::string out_path;
    std::string format = "json";
    std::vector<long long> q_list;
    std::vector<long long> r_grid;
    std::vector<long long> plant;
};

namespace detail {

inline bool is_usage_error(Errc code) noexcept {
    switch (code) {
        case Errc::UnsupportedQ:
        case Errc::TOutOfRange:
        case Errc::ROutOfRange:
        case Errc::ParamOutOfRange:
        case Errc::BudgetExceeded:
        case Errc::ParseError:
        case Errc::ShapeMismatch:
            return true;
        default:
            return false;
    }
}

inline void emit(const RunConfig& cfg, std::ostream& out, const std::string& payload) {
    if (cfg.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + cfg.out_path + " for writing");
    file << payload;
    if (!file) throw std::runtime_error("write to " + cfg.out_path + " failed");
}

inline std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(Errc::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

inline AnnealSchedule parse_schedule(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 3) throw Error(Errc::ParamOutOfRange, "--schedule expects steps,t0,t1");
    try {
        return AnnealSchedule::geometric(std::stoull(parts[0]), std::stod(parts[1]), std::stod(parts[2]));
    } catch (const std::logic_error&) {
        throw Error(Errc::ParamOutOfRange, "--schedule expects steps,t0,t1");
    }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void require_seed(const RunConfig& cfg) {
    if (!cfg.seed) throw Error(Errc::ParamOutOfRange, "--seed is required for randomized subcommands");
}

inline int cmd_params(const RunConfig& cfg, std::ostream& out) {
    const CodeParams p = hermitian_params(cfg.q, *cfg.t);
    Json j;
    j["q"] = p.q;
    j["t"] = p.t;
    j["n"] = p.n;
    j["k"] = p.k;
    j["g"] = p.g;
    j["d_designed"] = p.d_designed;
    j["t_dual"] = p.t_dual;
    j["d_dual_designed"] = dual_designed_distance(p.q, p.t);
    j["ell"] = ell_from_params(p.q, p.t);
    emit(cfg, out, dump(j));
    return kExitOk;
}

inline int cmd_points(const RunConfig& cfg, std::ostream& out) {
    const HermitianCurve curve(cfg.q);
    std::string payload;
    if (cfg.format == "csv") {
        payload = "x,y\n";
        for (const auto& pt : curve.points()) {
            payload += std::to_string(pt.x.index()) + "," + std::to_string(pt.y.index()) + "\n";
        }
    } else {
        Json pts = Json::array();
        for (const auto& pt : curve.points()) pts.push_back(Json::array({pt.x.index(), pt.y.index()}));
        Json j;
        j["q"] = cfg.q;
        j["n"] = curve.size();
        j["genus"] = curve.genus();
        j["points"] = std::move(pts);
        payload = j.dump() + "\n";
    }
    emit(cfg, out, payload);
    return kExitOk;
}

inline int cmd_code_info(const RunConfig& cfg, std::ostream& out) {
    const auto code = build_code(cfg.q, *cfg.t);
    emit(cfg, out, code_info_json(*code).dump() + "\n");
    return kExitOk;
}

inline int cmd_dual_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto curve = std::make_shared<const HermitianCurve>(cfg.q);
    std::vector<long long> ts;
    if (cfg.t) {
        hermitian_params(cfg.q, *cfg.t);
        ts.push_back(*cfg.t);
    } else {
        for (long long t = min_valid_t(cfg.q); t <= max_valid_t(cfg.q); ++t) ts.push_back(t);
    }
    Json reports = Json::array();
    bool all = true;
    for (auto t : ts) {
        const DualityReport rep = check_duality(curve, t);
        Json j;
        j["t"] = rep.t;
        j["t_dual"] = rep.t_dual;
        j["orthogonal"] = rep.orthogonal;
        j["rank"] = rep.rank;
        j["rank_dual"] = rep.rank_dual;
        j["rank_sum"] = rep.rank_sum;
        j["n"] = rep.n;
        j["pass"] = rep.passes();
        reports.push_back(std::move(j));
        all = all && rep.passes();
    }
    Json j;
    j["q"] = cfg.q;
    j["all_pass"] = all;
    j["checks"] = std::move(reports);
    emit(cfg, out, dump(j));
    err << "dual-check q=" << cfg.q << ": " << ts.size() << " value(s) of t, " << (all ? "all pass" : "FAILURES")
        << "\n";
    return all ? kExitOk : kExitInternal;
}

inline int cmd_distance(const RunConfig& cfg, std::ostream& out) {
    const auto code = build_code(cfg.q, *cfg.t);
    const std::size_t d = min_distance_bruteforce(*code, cfg.budget);
    Json j;
    j["q"] = cfg.q;
    j["t"] = *cfg.t;
    j["n"] = code->n();
    j["k"] = code->k();
    j["d_designed"] = code->d_designed();
    j["d_min"] = d;
    emit(cfg, out, dump(j));
    return kExitOk;
}

inline int cmd_gen_instance(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    require_seed(cfg);
    const auto code = build_code(cfg.q, *cfg.t);
    std::optional<Instance> inst;
    if (cfg.plant.empty()) {
        inst.emplace(random_instance(code, cfg.r, *cfg.seed));
    } else {
        if (cfg.plant.size() != code->k()) {
            throw Error(Errc::ShapeMismatch, "--plant needs k=" + std::to_string(code->k()) + " symbols");
        }
        Assignment msg;
        for (auto v : cfg.plant) {
            if (v < 0 || v >= code->field().order()) throw Error(Errc::ParamOutOfRange, "--plant symbol outside field");
            msg.emplace_back(static_cast<std::uint32_t>(v));
        }
        inst.emplace(planted_instance(code, cfg.r, *cfg.seed, msg));
    }
    emit(cfg, out, serialize_instance(*inst));
    err << "instance q=" << cfg.q << " t=" << *cfg.t << " r=" << cfg.r << " n=" << code->n() << " k=" << code->k()
        << "\n";
    return kExitOk;
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Instance inst = parse_instance(read_file(cfg.instance_path));
    SolveResult res;
    if (cfg.alg == "brute") {
        res = brute_force_optimum(inst, cfg.budget);
        res.seed = cfg.seed.value_or(0);
    } else {
        require_seed(cfg);
        Solver solver;
        if (cfg.alg == "prange") {
            solver = [](const Instance& in, std::uint64_t s) { return prange_solve(in, s); };
        } else {
            std::optional<AnnealSchedule> fixed;
            if (!cfg.schedule.empty()) fixed = parse_schedule(cfg.schedule);
            solver = [fixed](const Instance& in, std::uint64_t s) {
                return fixed ? simulated_annealing(in, *fixed, s) : simulated_annealing(in, s);
            };
        }
        res = best_of(solver, inst, cfg.trials, *cfg.seed);
    }
    emit(cfg, out, dump(solve_result_to_json(inst, res)));
    const auto ms = std::chrono::duration<double, std::milli>(res.elapsed).count();
    err << res.algorithm << ": satisfied " << res.satisfied << "/" << inst.n() << " in " << ms << " ms\n";
    return kExitOk;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ostringstream csv;
    if (cfg.subcommand == "sweep-fig1a") {
        if (cfg.q < 2) throw Error(Errc::ParamOutOfRange, "--q must be at least 2");
        write_fig1a_csv(csv, sweep_fig1a(cfg.q));
    } else if (cfg.subcommand == "sweep-fig1b") {
        write_fig1b_csv(csv, sweep_fig1b(cfg.rate, cfg.q_list.empty() ? default_fig1b_q_list() : cfg.q_list));
    } else {
        const auto& qs = cfg.q_list.empty() ? default_fig2_q_list() : cfg.q_list;
        const auto surface = sweep_fig2(cfg.rate, qs, cfg.r_grid);
        write_fig2_csv(csv, surface);
        for (const auto& [q, pt] : fig2_argmax(surface)) {
            err << "q=" << q << " argmax r=" << pt.r << " r/q^2=" << pt.r_frac << " ratio=" << pt.ratio << "\n";
        }
    }
    emit(cfg, out, csv.str());
    return kExitOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    RunConfig cfg;
    CLI::App app{"Hermitian codes, HOPI instances, classical baselines and the DQI performance model", "hopi"};
    app.require_subcommand(1);

    auto check_q_list = [](CLI::Option* o) { return o->delimiter(',')->check(CLI::PositiveNumber); };

    auto* params = app.add_subcommand("params", "code parameters n, k, g, d, t' and decoding radius");
    params->add_option("--q", cfg.q)->required();
    params->add_option("--t", cfg.t)->required();

    auto* points = app.add_subcommand("points", "affine rational points of the Hermitian curve");
    points->add_option("--q", cfg.q)->required();
    points->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));

    auto* info = app.add_subcommand("code-info", "parameters and monomial basis of C_t");
    info->add_option("--q", cfg.q)->required();
    info->add_option("--t", cfg.t)->required();

    auto* dual = app.add_subcommand("dual-check", "certify C_t^perp = C_t' (all valid t when --t is omitted)");
    dual->add_option("--q", cfg.q)->required();
    dual->add_option("--t", cfg.t);

    auto* dist = app.add_subcommand("distance", "exact minimum distance by enumeration");
    dist->add_option("--q", cfg.q)->required();
    dist->add_option("--t", cfg.t)->required();
    dist->add_option("--budget", cfg.budget, "maximum number of messages (q^2)^k");

    auto* gen = app.add_subcommand("gen-instance", "sample a HOPI instance");
    gen->add_option("--q", cfg.q)->required();
    gen->add_option("--t", cfg.t)->required();
    gen->add_option("--r", cfg.r)->required();
    gen->add_option("--seed", cfg.seed);
    gen->add_option("--plant", cfg.plant, "planted message (k comma-separated indices)")->delimiter(',');

    auto* solve = app.add_subcommand("solve", "run a classical solver on an instance file");
    solve->add_option("--alg", cfg.alg)->required()->check(CLI::IsMember({"prange", "sa", "brute"}));
    solve->add_option("--instance", cfg.instance_path)->required();
    solve->add_option("--seed", cfg.seed);
    solve->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
    solve->add_option("--schedule", cfg.schedule, "steps,t0,t1");
    solve->add_option("--budget", cfg.budget);

    auto* fig1a = app.add_subcommand("sweep-fig1a", "balanced-case DQI vs Prange over all rates at one q");
    fig1a->add_option("--q", cfg.q)->required();

    auto* fig1b = app.add_subcommand("sweep-fig1b", "balanced-case DQI vs Prange at fixed rate as q grows");
    fig1b->add_option("--rate", cfg.rate);
    check_q_list(fig1b->add_option("--q-list", cfg.q_list));

    auto* fig2 = app.add_subcommand("sweep-fig2", "advantage ratio over r and q at fixed rate");
    fig2->add_option("--rate", cfg.rate);
    check_q_list(fig2->add_option("--q-list", cfg.q_list));
    check_q_list(fig2->add_option("--r-grid", cfg.r_grid));

    for (auto* sub : app.get_subcommands({})) sub->add_option("--out", cfg.out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        const auto& s = cfg.subcommand;
        if (s == "params") return detail::cmd_params(cfg, out);
        if (s == "points") return detail::cmd_points(cfg, out);
        if (s == "code-info") return detail::cmd_code_info(cfg, out);
        if (s == "dual-check") return detail::cmd_dual_check(cfg, out, err);
        if (s == "distance") return detail::cmd_distance(cfg, out);
        if (s == "gen-instance") return detail::cmd_gen_instance(cfg, out, err);
        if (s == "solve") return detail::cmd_solve(cfg, out, err);
        return detail::cmd_sweep(cfg, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return detail::is_usage_error(e.code()) ? kExitUsage : kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace hopi::cli
