#pragma once

// Arithmetic in GF(q^2) for the small prime powers q used by the exact code
// paths. Elements are stored by canonical index: the little-endian base-p
// digits of the index are the coefficients of the element in the polynomial
// basis 1, x, x^2, ... modulo the field's fixed Conway polynomial.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hopi/error.hpp"

namespace hopi {

/// Canonical index of a field element. 0 is zero, 1 is one.
class Element {
public:
    constexpr Element() noexcept = default;
    explicit constexpr Element(std::uint32_t index) noexcept : index_(index) {}

    constexpr std::uint32_t index() const noexcept { return index_; }
    constexpr bool is_zero() const noexcept { return index_ == 0; }

    friend constexpr auto operator<=>(Element, Element) noexcept = default;

private:
    std::uint32_t index_ = 0;
};

using Vector = std::vector<Element>;

struct ConwayEntry {
    int q;
    int p;
    int m;                     // q^2 = p^m
    std::array<int, 7> poly;   // monic, coefficients of x^0..x^m
};

// One Conway polynomial per supported GF(q^2). All are primitive, so x
// generates the multiplicative group and doubles as the log base.
inline constexpr std::array<ConwayEntry, 7> kConwayTable{{
    {2, 2, 2, {1, 1, 1}},              // GF(4):  x^2 + x + 1
    {3, 3, 2, {2, 2, 1}},              // GF(9):  x^2 + 2x + 2
    {4, 2, 4, {1, 1, 0, 0, 1}},        // GF(16): x^4 + x + 1
    {5, 5, 2, {2, 4, 1}},              // GF(25): x^2 + 4x + 2
    {7, 7, 2, {3, 6, 1}},              // GF(49): x^2 + 6x + 3
    {8, 2, 6, {1, 1, 0, 1, 1, 0, 1}},  // GF(64): x^6 + x^4 + x^3 + x + 1
    {9, 3, 4, {2, 0, 0, 2, 1}},        // GF(81): x^4 + 2x^3 + 2
}};

inline bool is_supported_q(int q) noexcept {
    return std::any_of(kConwayTable.begin(), kConwayTable.end(),
                       [q](const ConwayEntry& e) { return e.q == q; });
}

/// Returns p if n = p^e for a prime p and e >= 1, otherwise 0.
inline int prime_power_base(long long n) noexcept {
    if (n < 2) return 0;
    long long p = 0;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return static_cast<int>(n);
    while (n % p == 0) n /= p;
    return n == 1 ? static_cast<int>(p) : 0;
}

/// GF(q^2) with precomputed addition, log/exp and Frobenius tables.
/// Immutable after construction.
class Field {
public:
    /// Builds GF(q^2). Throws Errc::UnsupportedQ outside {2,3,4,5,7,8,9}.
    static std::shared_ptr<const Field> make(int q) {
        if (prime_power_base(q) == 0) {
            throw Error(Errc::UnsupportedQ, "q=" + std::to_string(q) + " is not a prime power");
        }
        for (const auto& e : kConwayTable) {
            if (e.q == q) return std::shared_ptr<const Field>(new Field(e));
        }
        throw Error(Errc::UnsupportedQ, "q=" + std::to_string(q) + " is outside the supported set");
    }

    int p() const noexcept { return p_; }
    int m() const noexcept { return m_; }
    int q() const noexcept { return q_; }
    /// Number of elements, q^2.
    int order() const noexcept { return order_; }
    /// Conway polynomial coefficients x^0..x^m (monic).
    std::span<const int> modulus() const noexcept { return modulus_; }

    Element zero() const noexcept { return Element{0}; }
    Element one() const noexcept { return Element{1}; }
    /// Class of x in the polynomial basis, the primitive generator.
    Element generator() const noexcept { return Element{static_cast<std::uint32_t>(p_)}; }

    bool contains(Element a) const noexcept { return a.index() < static_cast<std::uint32_t>(order_); }

    Element add(Element a, Element b) const noexcept { return Element{add_[a.index() * order_ + b.index()]}; }
    Element neg(Element a) const noexcept { return Element{neg_[a.index()]}; }
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

    Element mul(Element a, Element b) const noexcept {
        if (a.is_zero() || b.is_zero()) return zero();
        return Element{exp_[log_[a.index()] + log_[b.index()]]};
    }

    Element inv(Element a) const {
        if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
        return Element{exp_[(order_ - 1 - log_[a.index()]) % (order_ - 1)]};
    }

    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    Element pow(Element a, std::uint64_t e) const noexcept {
        if (e == 0) return one();
        if (a.is_zero()) return zero();
        const auto group = static_cast<std::uint64_t>(order_ - 1);
        return Element{exp_[(static_cast<std::uint64_t>(log_[a.index()]) * (e % group)) % group]};
    }

    /// a -> a^p.
    Element frobenius_p(Element a) const noexcept { return pow(a, static_cast<std::uint64_t>(p_)); }

    /// a -> a^q, tabulated as (m/2)-fold application of a -> a^p.
    Element frobenius_q(Element a) const noexcept { return Element{frob_q_[a.index()]}; }

    /// All q^2 elements in ascending index order.
    Vector elements() const {
        Vector out;
        out.reserve(static_cast<std::size_t>(order_));
        for (int i = 0; i < order_; ++i) out.emplace_back(static_cast<std::uint32_t>(i));
        return out;
    }

    /// Coefficients x^0..x^(m-1) of an element in the polynomial basis.
    std::vector<int> digits(Element a) const {
        std::vector<int> d(static_cast<std::size_t>(m_));
        auto v = a.index();
        for (auto& c : d) {
            c = static_cast<int>(v % static_cast<std::uint32_t>(p_));
            v /= static_cast<std::uint32_t>(p_);
        }
        return d;
    }

    Element from_digits(std::span<const int> d) const noexcept {
        std::uint32_t v = 0;
        for (auto it = d.rbegin(); it != d.rend(); ++it) {
            v = v * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(*it);
        }
        return Element{v};
    }

    /// Inner product sum_i a_i b_i.
    Element dot(std::span<const Element> a, std::span<const Element> b) const noexcept {
        Element acc = zero();
        for (std::size_t i = 0; i < a.size(); ++i) acc = add(acc, mul(a[i], b[i]));
        return acc;
    }

private:
    explicit Field(const ConwayEntry& e) : p_(e.p), m_(e.m), q_(e.q), order_(1) {
        for (int i = 0; i < m_; ++i) order_ *= p_;
        modulus_.assign(e.poly.begin(), e.poly.begin() + m_ + 1);
        const auto n = static_cast<std::size_t>(order_);

        add_.resize(n * n);
        neg_.resize(n);
        for (int a = 0; a < order_; ++a) {
            const auto da = digits(Element{static_cast<std::uint32_t>(a)});
            std::vector<int> dn(da.size());
            for (std::size_t i = 0; i < da.size(); ++i) dn[i] = (p_ - da[i]) % p_;
            neg_[a] = static_cast<std::uint16_t>(from_digits(dn).index());
            for (int b = 0; b < order_; ++b) {
                auto db = digits(Element{static_cast<std::uint32_t>(b)});
                for (std::size_t i = 0; i < db.size(); ++i) db[i] = (da[i] + db[i]) % p_;
                add_[a * n + b] = static_cast<std::uint16_t>(from_digits(db).index());
            }
        }

        // Powers of x: multiply by x, then reduce the overflow coefficient
        // with x^m = -(c_0 + c_1 x + ... + c_{m-1} x^{m-1}).
        exp_.resize(2 * (n - 1));
        log_.assign(n, 0);
        std::vector<int> cur(static_cast<std::size_t>(m_), 0);
        cur[0] = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            const auto idx = from_digits(cur).index();
            if (k > 0 && idx == 1) throw std::logic_error("Conway table entry is not primitive");
            exp_[k] = static_cast<std::uint16_t>(idx);
            log_[idx] = static_cast<std::uint16_t>(k);
            const int top = cur.back();
            for (int i = m_ - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            for (int i = 0; i < m_; ++i) cur[i] = ((cur[i] - top * modulus_[i]) % p_ + p_) % p_;
        }
        for (std::size_t k = n - 1; k < exp_.size(); ++k) exp_[k] = exp_[k - (n - 1)];

        int m_q = 0;
        for (int v = 1; v < q_; v *= p_) ++m_q;
        frob_q_.resize(n);
        for (int a = 0; a < order_; ++a) {
            Element x{static_cast<std::uint32_t>(a)};
            for (int i = 0; i < m_q; ++i) x = frobenius_p(x);
            frob_q_[a] = static_cast<std::uint16_t>(x.index());
        }
    }

    int p_;
    int m_;
    int q_;
    int order_;
    std::vector<int> modulus_;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> neg_;
    std::vector<std::uint16_t> exp_;
    std::vector<std::uint16_t> log_;
    std::vector<std::uint16_t> frob_q_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace hopi
