#pragma once

// Closed-form parameters of the one-point Hermitian code C_t. These need no
// field tables and so accept any q >= 2, which the analytic model relies on.

#include <string>

#include "hopi/curve.hpp"
#include "hopi/error.hpp"

namespace hopi {

struct CodeParams {
    long long q = 0;
    long long t = 0;
    long long n = 0;  // q^3
    long long g = 0;  // q(q-1)/2
    long long k = 0;  // t + 1 - g
    long long d_designed = 0;  // n - t
    long long t_dual = 0;      // n + 2g - 2 - t
};

constexpr long long code_length(long long q) noexcept { return q * q * q; }

constexpr long long dual_parameter(long long q, long long t) noexcept {
    return code_length(q) + 2 * genus(q) - 2 - t;
}

/// Smallest and largest t with 2g - 2 < t < n.
constexpr long long min_valid_t(long long q) noexcept { return 2 * genus(q) - 1; }
constexpr long long max_valid_t(long long q) noexcept { return code_length(q) - 1; }

constexpr bool is_valid_t(long long q, long long t) noexcept {
    return t >= min_valid_t(q) && t <= max_valid_t(q);
}

inline CodeParams hermitian_params(long long q, long long t) {
    if (q < 2) throw Error(Errc::ParamOutOfRange, "q must be at least 2");
    if (!is_valid_t(q, t)) {
        throw Error(Errc::TOutOfRange, "t=" + std::to_string(t) + " outside (2g-2, n) = (" +
                                           std::to_string(2 * genus(q) - 2) + ", " +
                                           std::to_string(code_length(q)) + ")");
    }
    CodeParams p;
    p.q = q;
    p.t = t;
    p.n = code_length(q);
    p.g = genus(q);
    p.k = t + 1 - p.g;
    p.d_designed = p.n - t;
    p.t_dual = dual_parameter(q, t);
    return p;
}

}  // namespace hopi
