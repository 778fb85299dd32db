#pragma once

// HOPI instances: one allowed-value set F_i per curve point, all of size r.
// The objective counts the points where the encoded message lands in F_i.

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hopi/agcode.hpp"
#include "hopi/error.hpp"
#include "hopi/gf.hpp"
#include "hopi/prng.hpp"

namespace hopi {

/// Coefficients of f in the code's monomial basis.
using Assignment = Vector;

class Instance {
public:
    /// Largest supported field has 81 elements.
    using Mask = std::bitset<128>;

    Instance(std::shared_ptr<const HermitianCode> code, int r, std::uint64_t seed, std::vector<Vector> sets)
        : code_(std::move(code)), r_(r), seed_(seed), sets_(std::move(sets)) {
        const Field& f = code_->field();
        if (r_ < 1 || r_ > f.order()) {
            throw Error(Errc::ROutOfRange, "r=" + std::to_string(r_) + " outside [1, " + std::to_string(f.order()) + "]");
        }
        if (sets_.size() != code_->n()) {
            throw Error(Errc::ShapeMismatch, "expected " + std::to_string(code_->n()) + " constraint sets, got " +
                                                 std::to_string(sets_.size()));
        }
        masks_.reserve(sets_.size());
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            const auto& s = sets_[i];
            if (s.size() != static_cast<std::size_t>(r_)) {
                throw Error(Errc::ShapeMismatch, "set " + std::to_string(i) + " has size " + std::to_string(s.size()));
            }
            Mask m;
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (!f.contains(s[j])) throw Error(Errc::ParamOutOfRange, "set element outside the field");
                if (j > 0 && !(s[j - 1] < s[j])) {
                    throw Error(Errc::ParamOutOfRange, "set " + std::to_string(i) + " is not sorted and distinct");
                }
                m.set(s[j].index());
            }
            masks_.push_back(m);
        }
    }

    int q() const noexcept { return code_->q(); }
    long long t() const noexcept { return code_->t(); }
    int r() const noexcept { return r_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::size_t n() const noexcept { return code_->n(); }
    std::size_t k() const noexcept { return code_->k(); }
    const HermitianCode& code() const noexcept { return *code_; }
    const std::shared_ptr<const HermitianCode>& code_ptr() const noexcept { return code_; }
    const std::vector<Vector>& sets() const noexcept { return sets_; }

    bool allows(std::size_t i, Element v) const noexcept { return masks_[i].test(v.index()); }

    friend bool operator==(const Instance& a, const Instance& b) noexcept {
        return a.q() == b.q() && a.t() == b.t() && a.r_ == b.r_ && a.seed_ == b.seed_ && a.sets_ == b.sets_;
    }

private:
    std::shared_ptr<const HermitianCode> code_;
    int r_;
    std::uint64_t seed_;
    std::vector<Vector> sets_;
    std::vector<Mask> masks_;
};

inline void check_r(const HermitianCode& code, int r) {
    if (r < 1 || r > code.field().order()) {
        throw Error(Errc::ROutOfRange,
                    "r=" + std::to_string(r) + " outside [1, " + std::to_string(code.field().order()) + "]");
    }
}

/// Each F_i is an independent uniform r-subset drawn from Rng(seed) by
/// partial Fisher-Yates over the element indices, then sorted.
inline Instance random_instance(std::shared_ptr<const HermitianCode> code, int r, std::uint64_t seed) {
    check_r(*code, r);
    Rng rng(seed);
    const Vector all = code->field().elements();
    std::vector<Vector> sets(code->n());
    for (auto& s : sets) {
        s = sample_without_replacement(all, static_cast<std::size_t>(r), rng);
        std::sort(s.begin(), s.end());
    }
    return Instance(std::move(code), r, seed, std::move(sets));
}

inline Instance random_instance(int q, long long t, int r, std::uint64_t seed) {
    return random_instance(build_code(q, t), r, seed);
}

/// Like random_instance, but F_i always contains the i-th symbol of the
/// codeword of `planted`; the other r-1 members are drawn from the rest.
inline Instance planted_instance(std::shared_ptr<const HermitianCode> code, int r, std::uint64_t seed,
                                 const Assignment& planted) {
    check_r(*code, r);
    const Vector word = code->encode(planted);
    Rng rng(seed);
    const Vector all = code->field().elements();
    std::vector<Vector> sets(code->n());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        Vector rest;
        rest.reserve(all.size() - 1);
        for (auto e : all) {
            if (e != word[i]) rest.push_back(e);
        }
        sets[i] = sample_without_replacement(std::move(rest), static_cast<std::size_t>(r - 1), rng);
        sets[i].push_back(word[i]);
        std::sort(sets[i].begin(), sets[i].end());
    }
    return Instance(std::move(code), r, seed, std::move(sets));
}

/// Number of points i with codeword symbol i in F_i.
inline std::size_t score_codeword(const Instance& inst, std::span<const Element> word) {
    if (word.size() != inst.n()) throw Error(Errc::ShapeMismatch, "codeword length differs from n");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < word.size(); ++i) hits += inst.allows(i, word[i]) ? 1 : 0;
    return hits;
}

inline std::size_t score(const Instance& inst, const Assignment& msg) {
    return score_codeword(inst, inst.code().encode(msg));
}

/// Satisfied minus unsatisfied, 2*score - n.
inline long long score_pm(const Instance& inst, const Assignment& msg) {
    return 2 * static_cast<long long>(score(inst, msg)) - static_cast<long long>(inst.n());
}

}  // namespace hopi
