#pragma once

// One-point Hermitian codes C_t: evaluations of L(t P_inf) at the q^3 affine
// points of the Hermitian curve.
//
// L(t P_inf) is spanned by the monomials x^a y^b with b <= q-1 and pole order
// a*q + b*(q+1) <= t, where x has pole order q and y has pole order q+1 at
// infinity. Since gcd(q, q+1) = 1 and b < q, every pole order has at most one
// such representation, so the basis has one monomial per non-gap <= t.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hopi/agcode_params.hpp"
#include "hopi/curve.hpp"
#include "hopi/error.hpp"
#include "hopi/linalg.hpp"

namespace hopi {

struct Monomial {
    int a = 0;  // power of x
    int b = 0;  // power of y, 0 <= b < q

    long long pole_order(long long q) const noexcept { return a * q + b * (q + 1); }

    friend constexpr bool operator==(const Monomial&, const Monomial&) noexcept = default;
};

/// Monomials x^a y^b spanning L(t P_inf), sorted by pole order (ties by b).
inline std::vector<Monomial> rr_basis(long long q, long long t) {
    if (q < 2) throw Error(Errc::ParamOutOfRange, "q must be at least 2");
    if (t < 0) throw Error(Errc::TOutOfRange, "t must be nonnegative");
    std::vector<Monomial> basis;
    for (long long b = 0; b < q && b * (q + 1) <= t; ++b) {
        for (long long a = 0; a * q + b * (q + 1) <= t; ++a) {
            basis.push_back({static_cast<int>(a), static_cast<int>(b)});
        }
    }
    std::sort(basis.begin(), basis.end(), [q](const Monomial& l, const Monomial& r) {
        const auto pl = l.pole_order(q);
        const auto pr = r.pole_order(q);
        return pl != pr ? pl < pr : l.b < r.b;
    });
    return basis;
}

/// True when s is a pole order at infinity of some function, i.e. s is in
/// the semigroup generated by q and q+1.
inline bool is_nongap(long long q, long long s) {
    for (long long b = 0; b < q && b * (q + 1) <= s; ++b) {
        if ((s - b * (q + 1)) % q == 0) return true;
    }
    return false;
}

class HermitianCode {
public:
    HermitianCode(std::shared_ptr<const HermitianCurve> curve, long long t)
        : curve_(std::move(curve)), params_(hermitian_params(curve_->q(), t)), basis_(rr_basis(curve_->q(), t)),
          generator_(curve_->field_ptr(), curve_->size(), basis_.size()) {
        const Field& f = curve_->field();
        const auto& pts = curve_->points();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                const auto& mono = basis_[j];
                generator_(i, j) = f.mul(f.pow(pts[i].x, static_cast<std::uint64_t>(mono.a)),
                                         f.pow(pts[i].y, static_cast<std::uint64_t>(mono.b)));
            }
        }
    }

    int q() const noexcept { return curve_->q(); }
    long long t() const noexcept { return params_.t; }
    std::size_t n() const noexcept { return static_cast<std::size_t>(params_.n); }
    std::size_t k() const noexcept { return basis_.size(); }
    long long d_designed() const noexcept { return params_.d_designed; }
    long long t_dual() const noexcept { return params_.t_dual; }
    const CodeParams& params() const noexcept { return params_; }

    const HermitianCurve& curve() const noexcept { return *curve_; }
    const std::shared_ptr<const HermitianCurve>& curve_ptr() const noexcept { return curve_; }
    const Field& field() const noexcept { return curve_->field(); }
    const FieldPtr& field_ptr() const noexcept { return curve_->field_ptr(); }
    const std::vector<Monomial>& basis() const noexcept { return basis_; }
    /// n x k evaluation matrix; row i is the basis evaluated at point i.
    const Matrix& eval_matrix() const noexcept { return generator_; }

    Vector encode(std::span<const Element> msg) const {
        if (msg.size() != k()) {
            throw Error(Errc::ShapeMismatch,
                        "message has " + std::to_string(msg.size()) + " symbols, code dimension is " + std::to_string(k()));
        }
        return mul_vec(generator_, msg);
    }

private:
    std::shared_ptr<const HermitianCurve> curve_;
    CodeParams params_;
    std::vector<Monomial> basis_;
    Matrix generator_;
};

inline std::shared_ptr<const HermitianCode> build_code(int q, long long t) {
    hermitian_params(q, t);  // range check before enumerating the curve
    return std::make_shared<const HermitianCode>(std::make_shared<const HermitianCurve>(q), t);
}

inline std::shared_ptr<const HermitianCode> build_code(std::shared_ptr<const HermitianCurve> curve, long long t) {
    return std::make_shared<const HermitianCode>(std::move(curve), t);
}

struct DualityReport {
    long long t = 0;
    long long t_dual = 0;
    bool orthogonal = false;
    std::size_t rank = 0;
    std::size_t rank_dual = 0;
    std::size_t rank_sum = 0;
    std::size_t n = 0;

    bool passes() const noexcept { return orthogonal && rank_sum == n; }
};

/// Certifies C_t^perp = C_{t'}: every codeword of C_t is orthogonal to every
/// codeword of C_{t'}, and the dimensions add up to n.
inline DualityReport check_duality(std::shared_ptr<const HermitianCurve> curve, long long t) {
    const HermitianCode code(curve, t);
    const HermitianCode dual(curve, code.t_dual());
    const Matrix gram = mul_matrix(transpose(code.eval_matrix()), dual.eval_matrix());

    DualityReport rep;
    rep.t = t;
    rep.t_dual = code.t_dual();
    rep.n = code.n();
    rep.orthogonal = std::all_of(gram.entries().begin(), gram.entries().end(), [](Element e) { return e.is_zero(); });
    rep.rank = rank(code.eval_matrix());
    rep.rank_dual = rank(dual.eval_matrix());
    rep.rank_sum = rep.rank + rep.rank_dual;
    return rep;
}

inline DualityReport check_duality(int q, long long t) {
    hermitian_params(q, t);
    return check_duality(std::make_shared<const HermitianCurve>(q), t);
}

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Number of messages (q^2)^k, saturating at UINT64_MAX.
inline std::uint64_t message_space_size(int field_order, std::size_t k) noexcept {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > UINT64_MAX / static_cast<std::uint64_t>(field_order)) return UINT64_MAX;
        total *= static_cast<std::uint64_t>(field_order);
    }
    return total;
}

/// Exact minimum Hamming weight of a nonzero codeword. Scalar multiples share
/// a weight, so only messages whose leading nonzero symbol is 1 are visited.
inline std::size_t min_distance_bruteforce(const HermitianCode& code, std::uint64_t budget = kDefaultBudget) {
    const Field& f = code.field();
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    if (message_space_size(f.order(), k) > budget) {
        throw Error(Errc::BudgetExceeded, "(q^2)^k = " + std::to_string(f.order()) + "^" + std::to_string(k) +
                                              " messages exceeds budget " + std::to_string(budget));
    }
    const Matrix& g = code.eval_matrix();
    const auto last = static_cast<std::uint32_t>(f.order() - 1);
    std::size_t best = n;

    for (std::size_t lead = 0; lead < k; ++lead) {
        Vector digits(k);
        Vector word(n);
        for (std::size_t i = 0; i < n; ++i) word[i] = g(i, lead);
        for (;;) {
            const auto weight = static_cast<std::size_t>(
                std::count_if(word.begin(), word.end(), [](Element e) { return !e.is_zero(); }));
            best = std::min(best, weight);

            // Odometer over positions lead+1..k-1, last position fastest.
            std::size_t pos = k;
            while (pos > lead + 1 && digits[pos - 1].index() == last) --pos;
            if (pos == lead + 1) break;
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
        }
    }
    return best;
}

}  // namespace hopi
