#pragma once

// Closed-form DQI performance on HOPI and the Prange comparison.
//
// With decoding radius l in the dual code and set density rho = r/q^2, the
// expected satisfied fraction is
//
//   ( sqrt((l/n)(1 - rho)) + sqrt(rho (1 - l/n)) )^2   if rho <= 1 - l/n
//   1                                                    otherwise.
//
// The dual of C_t is C_{t'} with designed distance n - t' = t + 2 - 2g, which
// is used as d_perp, and l = floor((d_perp - 1) / 2).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "hopi/agcode_params.hpp"
#include "hopi/error.hpp"
#include "hopi/solvers.hpp"

namespace hopi {

struct ModelPoint {
    long long q = 0;
    long long n = 0;
    long long t = 0;
    long long k = 0;
    double rate = 0.0;
    long long ell = 0;
    double r = 0.0;  // may be fractional, e.g. q^2/2 for odd q
    double r_frac = 0.0;
    double dqi_frac = 0.0;
    double prange_frac = 0.0;
    double ratio = 0.0;
};

/// Designed distance of the dual code, t + 2 - 2g.
inline long long dual_designed_distance(long long q, long long t) { return t + 2 - 2 * genus(q); }

inline long long ell_from_params(long long q, long long t) {
    hermitian_params(q, t);
    const long long d_perp = dual_designed_distance(q, t);
    if (d_perp < 1) throw Error(Errc::TOutOfRange, "dual designed distance below 1");
    return (d_perp - 1) / 2;
}

/// Semicircle law in terms of the two densities l/n and r/q^2.
inline double semicircle_fraction(double ell_frac, double r_frac) noexcept {
    if (r_frac > 1.0 - ell_frac) return 1.0;
    const double a = std::sqrt(ell_frac * (1.0 - r_frac));
    const double b = std::sqrt(r_frac * (1.0 - ell_frac));
    return (a + b) * (a + b);
}

inline double dqi_expected_fraction(long long n, long long ell, long long r, long long q) {
    if (n <= 0 || ell < 0 || ell > n) throw Error(Errc::ParamOutOfRange, "need 0 <= ell <= n and n > 0");
    if (q < 1 || r < 0 || r > q * q) throw Error(Errc::ParamOutOfRange, "need 0 <= r <= q^2");
    // Compare rho <= 1 - l/n exactly in integers: r n <= (n - l) q^2.
    if (r * n > (n - ell) * q * q) return 1.0;
    const double ell_frac = static_cast<double>(ell) / static_cast<double>(n);
    const double r_frac = static_cast<double>(r) / static_cast<double>(q * q);
    const double a = std::sqrt(ell_frac * (1.0 - r_frac));
    const double b = std::sqrt(r_frac * (1.0 - ell_frac));
    return std::min(1.0, (a + b) * (a + b));
}

/// Fills every field of a model point for code C_t with set size r. The
/// model is analytic, so r need not be an integer.
inline ModelPoint model_point(long long q, long long t, double r) {
    const CodeParams p = hermitian_params(q, t);
    const double field_size = static_cast<double>(q * q);
    if (!(r >= 0.0 && r <= field_size)) throw Error(Errc::ROutOfRange, "r outside [0, q^2]");
    ModelPoint pt;
    pt.q = q;
    pt.n = p.n;
    pt.t = t;
    pt.k = p.k;
    pt.rate = static_cast<double>(p.k) / static_cast<double>(p.n);
    pt.ell = ell_from_params(q, t);
    pt.r = r;
    pt.r_frac = r / field_size;
    pt.dqi_frac = semicircle_fraction(static_cast<double>(pt.ell) / static_cast<double>(p.n), pt.r_frac);
    pt.prange_frac = prange_expectation_density(p.n, p.k, pt.r_frac);
    pt.ratio = pt.prange_frac > 0.0 ? pt.dqi_frac / pt.prange_frac : 0.0;
    return pt;
}

/// Balanced set size q^2 / 2, so that r / q^2 = 1/2 exactly.
constexpr double balanced_r(long long q) noexcept { return static_cast<double>(q * q) / 2.0; }

/// t whose dimension is the largest k <= floor(rate n). When every valid k
/// exceeds the target, the smallest valid t is used.
inline long long t_for_rate(long long q, double rate) {
    if (!(rate > 0.0 && rate < 1.0)) throw Error(Errc::ParamOutOfRange, "rate must lie in (0, 1)");
    const long long n = code_length(q);
    const long long g = genus(q);
    const auto target = static_cast<long long>(std::floor(rate * static_cast<double>(n)));
    const long long t = target - 1 + g;  // k = t + 1 - g
    return std::clamp(t, min_valid_t(q), max_valid_t(q));
}

/// Balanced-case curves over every valid t at one q, ordered by rate.
inline std::vector<ModelPoint> sweep_fig1a(long long q) {
    std::vector<ModelPoint> out;
    for (long long t = min_valid_t(q); t <= max_valid_t(q); ++t) out.push_back(model_point(q, t, balanced_r(q)));
    return out;
}

/// Balanced-case fractions at a fixed rate for each q.
inline std::vector<ModelPoint> sweep_fig1b(double rate, const std::vector<long long>& q_list) {
    std::vector<ModelPoint> out;
    for (auto q : q_list) out.push_back(model_point(q, t_for_rate(q, rate), balanced_r(q)));
    return out;
}

/// Advantage ratio over an r grid at a fixed rate for each q. An empty grid
/// means every r in [1, q^2].
inline std::vector<ModelPoint> sweep_fig2(double rate, const std::vector<long long>& q_list,
                                          const std::vector<long long>& r_grid = {}) {
    std::vector<ModelPoint> out;
    for (auto q : q_list) {
        const long long t = t_for_rate(q, rate);
        if (r_grid.empty()) {
            for (long long r = 1; r <= q * q; ++r) out.push_back(model_point(q, t, static_cast<double>(r)));
        } else {
            for (auto r : r_grid) {
                if (r < 1 || r > q * q) throw Error(Errc::ROutOfRange, "r grid entry outside [1, q^2]");
                out.push_back(model_point(q, t, static_cast<double>(r)));
            }
        }
    }
    return out;
}

/// Row with the largest ratio per q; ties keep the smallest r.
inline std::map<long long, ModelPoint> fig2_argmax(const std::vector<ModelPoint>& surface) {
    std::map<long long, ModelPoint> best;
    for (const auto& pt : surface) {
        auto it = best.find(pt.q);
        if (it == best.end()) {
            best.emplace(pt.q, pt);
        } else if (pt.ratio > it->second.ratio || (pt.ratio == it->second.ratio && pt.r < it->second.r)) {
            it->second = pt;
        }
    }
    return best;
}

inline const std::vector<long long>& default_fig1b_q_list() {
    static const std::vector<long long> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 32, 64};
    return qs;
}

inline const std::vector<long long>& default_fig2_q_list() {
    static const std::vector<long long> qs{4, 8, 16, 32, 64};
    return qs;
}

}  // namespace hopi
