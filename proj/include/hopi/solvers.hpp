#pragma once

// Classical baselines for HOPI: Prange information-set solving, simulated
// annealing, best-of-m repetition, and an exhaustive optimum oracle.
// Every solver is a deterministic function of (instance, seed, schedule).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hopi/error.hpp"
#include "hopi/instance.hpp"
#include "hopi/linalg.hpp"
#include "hopi/prng.hpp"

namespace hopi {

struct SolveResult {
    Assignment msg;
    std::size_t satisfied = 0;
    std::string algorithm;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::chrono::nanoseconds elapsed{0};
    /// Rows fixed exactly by Prange; empty for other solvers.
    std::vector<std::size_t> information_set;
};

/// True when a beats b: more satisfied constraints, then the lexicographically
/// smaller message.
inline bool better(const SolveResult& a, const SolveResult& b) noexcept {
    if (a.satisfied != b.satisfied) return a.satisfied > b.satisfied;
    return a.msg < b.msg;
}

namespace detail {

class Stopwatch {
public:
    std::chrono::nanoseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_);
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Assignment random_message(const Instance& inst, Rng& rng) {
    Assignment msg(inst.k());
    const auto order = static_cast<std::uint64_t>(inst.code().field().order());
    for (auto& e : msg) e = Element{static_cast<std::uint32_t>(rng.below(order))};
    return msg;
}

}  // namespace detail

inline constexpr int kMaxInformationSetAttempts = 1000;

/// Prange: pick a uniformly random k-subset S of points whose evaluation rows
/// are independent (resampling the whole subset on singularity), draw a target
/// uniformly from each F_i with i in S, and solve B_S msg = target.
inline SolveResult prange_solve(const Instance& inst, std::uint64_t seed) {
    detail::Stopwatch clock;
    const Matrix& g = inst.code().eval_matrix();
    const std::size_t k = inst.k();
    Rng rng(seed);

    std::vector<std::size_t> rows(inst.n());
    std::iota(rows.begin(), rows.end(), std::size_t{0});

    for (int attempt = 0; attempt < kMaxInformationSetAttempts; ++attempt) {
        auto subset = sample_without_replacement(rows, k, rng);
        std::sort(subset.begin(), subset.end());
        const Matrix square = submatrix_rows(g, subset);
        if (rank(square) < k) continue;

        Vector target(k);
        for (std::size_t j = 0; j < k; ++j) {
            const auto& allowed = inst.sets()[subset[j]];
            target[j] = allowed[rng.below(allowed.size())];
        }
        SolveResult res;
        res.msg = solve(square, target);
        res.satisfied = score(inst, res.msg);
        res.algorithm = "prange";
        res.seed = seed;
        res.information_set = std::move(subset);
        res.elapsed = clock.elapsed();
        return res;
    }
    throw Error(Errc::NoInformationSet,
                std::to_string(kMaxInformationSetAttempts) + " consecutive row subsets were singular");
}

/// Expected satisfied fraction of one Prange run: k rows exactly, r/q^2 of
/// the remaining n-k by chance.
inline double prange_expectation_density(long long n, long long k, double density) {
    if (n <= 0 || k < 0 || k > n) throw Error(Errc::ParamOutOfRange, "need 0 <= k <= n and n > 0");
    if (!(density >= 0.0 && density <= 1.0)) throw Error(Errc::ParamOutOfRange, "need 0 <= r/q^2 <= 1");
    return (static_cast<double>(k) + density * static_cast<double>(n - k)) / static_cast<double>(n);
}

inline double prange_expectation(long long n, long long k, long long r, long long q) {
    if (q < 1 || r < 0 || r > q * q) throw Error(Errc::ParamOutOfRange, "need 0 <= r <= q^2");
    return prange_expectation_density(n, k, static_cast<double>(r) / static_cast<double>(q * q));
}

struct AnnealSchedule {
    std::uint64_t steps = 0;
    double t_initial = 1.0;
    double t_final = 1.0;
    double cooling = 1.0;

    /// Geometric schedule reaching t_final after `steps` multiplications.
    static AnnealSchedule geometric(std::uint64_t steps, double t_initial, double t_final) {
        AnnealSchedule s;
        s.steps = steps;
        s.t_initial = t_initial;
        s.t_final = t_final;
        s.cooling = steps == 0 ? 1.0 : std::pow(t_final / t_initial, 1.0 / static_cast<double>(steps));
        s.validate();
        return s;
    }

    void validate() const {
        if (!(t_final > 0.0) || !(t_initial >= t_final) || !std::isfinite(t_initial)) {
            throw Error(Errc::ParamOutOfRange, "schedule needs t_initial >= t_final > 0");
        }
        if (!(cooling > 0.0 && cooling <= 1.0)) throw Error(Errc::ParamOutOfRange, "cooling must lie in (0, 1]");
    }
};

inline constexpr std::uint64_t kAnnealStepsPerPoint = 200;
inline constexpr int kAnnealProbeMoves = 100;
inline constexpr double kAnnealTargetAcceptance = 0.8;
inline constexpr double kAnnealFinalTemperature = 0.01;

namespace detail {

/// Local search state: a message, its codeword, and its score.
class AnnealState {
public:
    AnnealState(const Instance& inst, Assignment msg)
        : inst_(&inst), msg_(std::move(msg)), word_(inst.code().encode(msg_)), score_(score_codeword(inst, word_)) {}

    /// Score change from setting coordinate j to v.
    long long delta(std::size_t j, Element v) const {
        const Field& f = inst_->code().field();
        const Matrix& g = inst_->code().eval_matrix();
        const Element step = f.sub(v, msg_[j]);
        long long d = 0;
        if (step.is_zero()) return 0;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            const Element next = f.add(word_[i], f.mul(step, g(i, j)));
            d += static_cast<long long>(inst_->allows(i, next)) - static_cast<long long>(inst_->allows(i, word_[i]));
        }
        return d;
    }

    void apply(std::size_t j, Element v, long long d) {
        const Field& f = inst_->code().field();
        const Matrix& g = inst_->code().eval_matrix();
        const Element step = f.sub(v, msg_[j]);
        for (std::size_t i = 0; i < word_.size(); ++i) word_[i] = f.add(word_[i], f.mul(step, g(i, j)));
        msg_[j] = v;
        score_ = static_cast<std::size_t>(static_cast<long long>(score_) + d);
    }

    const Assignment& msg() const noexcept { return msg_; }
    std::size_t score() const noexcept { return score_; }

private:
    const Instance* inst_;
    Assignment msg_;
    Vector word_;
    std::size_t score_;
};

inline std::pair<std::size_t, Element> random_move(const Instance& inst, Rng& rng) {
    const auto j = static_cast<std::size_t>(rng.below(inst.k()));
    const auto v = Element{static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(inst.code().field().order())))};
    return {j, v};
}

}  // namespace detail

/// Default schedule: 200 n steps, geometric cooling down to 0.01, starting
/// temperature chosen so that a typical score-decreasing probe move from a
/// random state is accepted with probability 0.8.
inline AnnealSchedule default_schedule(const Instance& inst, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x5eed5eedULL));
    const detail::AnnealState probe(inst, detail::random_message(inst, rng));
    double worse_sum = 0.0;
    int worse_count = 0;
    for (int i = 0; i < kAnnealProbeMoves; ++i) {
        const auto [j, v] = detail::random_move(inst, rng);
        const long long d = probe.delta(j, v);
        if (d < 0) {
            worse_sum += static_cast<double>(-d);
            ++worse_count;
        }
    }
    double t0 = 1.0;
    if (worse_count > 0) t0 = (worse_sum / worse_count) / -std::log(kAnnealTargetAcceptance);
    t0 = std::max(t0, kAnnealFinalTemperature);
    return AnnealSchedule::geometric(kAnnealStepsPerPoint * inst.n(), t0, kAnnealFinalTemperature);
}

/// Metropolis chain over messages. A move resamples one uniformly chosen
/// coordinate to a uniformly random field element; score-decreasing moves are
/// accepted with probability exp(delta / T). Returns the best state visited.
inline SolveResult simulated_annealing(const Instance& inst, const AnnealSchedule& schedule, std::uint64_t seed) {
    schedule.validate();
    detail::Stopwatch clock;
    Rng rng(seed);
    detail::AnnealState state(inst, detail::random_message(inst, rng));

    SolveResult best;
    best.msg = state.msg();
    best.satisfied = state.score();

    double temperature = schedule.t_initial;
    for (std::uint64_t step = 0; step < schedule.steps && best.satisfied < inst.n(); ++step) {
        const auto [j, v] = detail::random_move(inst, rng);
        const long long d = state.delta(j, v);
        const bool accept = d >= 0 || rng.uniform01() < std::exp(static_cast<double>(d) / temperature);
        if (accept && v != state.msg()[j]) {
            state.apply(j, v, d);
            if (state.score() > best.satisfied) {
                best.satisfied = state.score();
                best.msg = state.msg();
            }
        }
        temperature *= schedule.cooling;
    }
    best.algorithm = "sa";
    best.seed = seed;
    best.elapsed = clock.elapsed();
    return best;
}

inline SolveResult simulated_annealing(const Instance& inst, std::uint64_t seed) {
    return simulated_annealing(inst, default_schedule(inst, seed), seed);
}

/// Exhaustive maximizer. Messages are visited in lexicographic order and only
/// strict improvements are kept, so ties resolve to the smallest message.
inline SolveResult brute_force_optimum(const Instance& inst, std::uint64_t budget = kDefaultBudget) {
    detail::Stopwatch clock;
    const Field& f = inst.code().field();
    const Matrix& g = inst.code().eval_matrix();
    const std::size_t n = inst.n();
    const std::size_t k = inst.k();
    if (message_space_size(f.order(), k) > budget) {
        throw Error(Errc::BudgetExceeded, "message space exceeds budget " + std::to_string(budget));
    }
    const auto last = static_cast<std::uint32_t>(f.order() - 1);

    Assignment digits(k);
    Vector word(n);
    SolveResult best;
    best.msg = digits;
    best.satisfied = score_codeword(inst, word);
    for (;;) {
        if (best.satisfied == n) break;
        std::size_t pos = k;
        while (pos > 0 && digits[pos - 1].index() == last) --pos;
        if (pos == 0) break;
        for (std::size_t j = pos; j < k; ++j) {
            const Element delta = f.neg(digits[j]);
            for (std::size_t i = 0; i < n; ++i) word[i] = f.add(word[i], f.mul(delta, g(i, j)));
            digits[j] = f.zero();
        }
        const std::size_t j = pos - 1;
        const Element next{digits[j].index() + 1};
        const Element delta = f.sub(next, digits[j]);
        for (std::size_t i = 0; i < n; ++i) word[i] = f.add(word[i], f.mul(delta, g(i, j)));
        digits[j] = next;

        const std::size_t s = score_codeword(inst, word);
        if (s > best.satisfied) {
            best.satisfied = s;
            best.msg = digits;
        }
    }
    best.algorithm = "brute";
    best.trials = message_space_size(f.order(), k);
    best.elapsed = clock.elapsed();
    return best;
}

using Solver = std::function<SolveResult(const Instance&, std::uint64_t)>;

/// Seed of run i inside best_of. Run 0 reuses the master seed, so best_of
/// with m = 1 is exactly one solver call.
constexpr std::uint64_t run_seed(std::uint64_t seed, std::uint64_t run) noexcept {
    return run == 0 ? seed : derive_seed(seed, run);
}

inline SolveResult best_of(const Solver& solver, const Instance& inst, std::uint64_t m, std::uint64_t seed) {
    if (m < 1) throw Error(Errc::ParamOutOfRange, "best_of needs m >= 1");
    detail::Stopwatch clock;
    std::optional<SolveResult> best;
    for (std::uint64_t i = 0; i < m; ++i) {
        SolveResult res = solver(inst, run_seed(seed, i));
        if (!best || better(res, *best)) best = std::move(res);
    }
    best->trials = m;
    best->seed = seed;
    best->elapsed = clock.elapsed();
    return *best;
}

}  // namespace hopi
