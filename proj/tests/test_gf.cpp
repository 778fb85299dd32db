#include "hopi/gf.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "hopi/prng.hpp"

using hopi::Element;
using hopi::Errc;
using hopi::Field;

namespace {

const std::vector<int> kSupported{2, 3, 4, 5, 7, 8, 9};

Element el(std::uint32_t i) { return Element{i}; }

// Schoolbook polynomial product reduced by long division, independent of the
// log/exp tables.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b, std::span<const int> mod, int p) {
    const std::size_t m = mod.size() - 1;
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t deg = prod.size() - 1; deg >= m; --deg) {
        const int c = prod[deg];
        for (std::size_t i = 0; i <= m; ++i) prod[deg - m + i] = ((prod[deg - m + i] - c * mod[i]) % p + p) % p;
        if (deg == m) break;
    }
    prod.resize(m);
    return prod;
}

// True when `divisor` (monic) divides `poly` over GF(p).
bool divides(std::vector<int> poly, const std::vector<int>& divisor, int p) {
    const std::size_t d = divisor.size() - 1;
    for (std::size_t deg = poly.size() - 1; deg >= d; --deg) {
        const int c = poly[deg];
        for (std::size_t i = 0; i <= d; ++i) poly[deg - d + i] = ((poly[deg - d + i] - c * divisor[i]) % p + p) % p;
        if (deg == d) break;
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (poly[i] != 0) return false;
    }
    return true;
}

}  // namespace

TEST(FieldNew, SmallestCase) {
    const auto f = Field::make(2);
    EXPECT_EQ(f->p(), 2);
    EXPECT_EQ(f->m(), 2);
    EXPECT_EQ(f->order(), 4);
}

TEST(FieldNew, QFourIsGf16) {
    const auto f = Field::make(4);
    EXPECT_EQ(f->p(), 2);
    EXPECT_EQ(f->m(), 4);
    EXPECT_EQ(f->order(), 16);
}

TEST(FieldNew, RejectsUnsupported) {
    for (int q : {6, 0, 1, -3, 10, 11, 16}) {
        try {
            Field::make(q);
            FAIL() << "q=" << q << " accepted";
        } catch (const hopi::Error& e) {
            EXPECT_EQ(e.code(), Errc::UnsupportedQ) << q;
        }
    }
}

TEST(FieldNew, OrderIsQSquared) {
    for (int q : kSupported) EXPECT_EQ(Field::make(q)->order(), q * q);
}

TEST(FieldNew, ModulusIsIrreducible) {
    for (int q : kSupported) {
        const auto f = Field::make(q);
        const std::vector<int> mod(f->modulus().begin(), f->modulus().end());
        const int p = f->p();
        for (int deg = 1; deg <= f->m() / 2; ++deg) {
            int count = 1;
            for (int i = 0; i < deg; ++i) count *= p;
            for (int code = 0; code < count; ++code) {
                std::vector<int> cand(static_cast<std::size_t>(deg) + 1, 0);
                int v = code;
                for (int i = 0; i < deg; ++i) {
                    cand[i] = v % p;
                    v /= p;
                }
                cand[deg] = 1;
                EXPECT_FALSE(divides(mod, cand, p)) << "q=" << q << " degree " << deg;
            }
        }
    }
}

TEST(Gf4, AlphaSquaredIsAlphaPlusOne) {
    // alpha = x has index 2, alpha + 1 has index 3.
    const auto f = Field::make(2);
    EXPECT_EQ(f->generator(), el(2));
    EXPECT_EQ(f->mul(el(2), el(2)), el(3));
    EXPECT_EQ(f->inv(el(2)), el(3));
    EXPECT_EQ(f->mul(el(2), f->inv(el(2))), f->one());
    EXPECT_EQ(f->frobenius_q(el(2)), el(3));
}

TEST(Gf, InverseOfZeroThrows) {
    const auto f = Field::make(3);
    try {
        f->inv(f->zero());
        FAIL();
    } catch (const hopi::Error& e) {
        EXPECT_EQ(e.code(), Errc::DivisionByZero);
    }
}

TEST(Gf, MultiplicationMatchesPolynomialOracle) {
    for (int q : kSupported) {
        const auto f = Field::make(q);
        for (auto a : f->elements()) {
            for (auto b : f->elements()) {
                const auto expect = poly_mulmod(f->digits(a), f->digits(b), f->modulus(), f->p());
                ASSERT_EQ(f->mul(a, b), f->from_digits(expect)) << "q=" << q;
            }
        }
    }
}

TEST(Gf, AdditiveAndMultiplicativeInverses) {
    for (int q : kSupported) {
        const auto f = Field::make(q);
        for (auto a : f->elements()) {
            EXPECT_EQ(f->add(a, f->neg(a)), f->zero());
            if (!a.is_zero()) EXPECT_EQ(f->mul(a, f->inv(a)), f->one());
        }
    }
}

TEST(Gf, AxiomsExhaustiveOnSmallFields) {
    for (int q : {2, 3, 4, 5}) {
        const auto f = Field::make(q);
        const auto all = f->elements();
        for (auto a : all) {
            for (auto b : all) {
                ASSERT_EQ(f->add(a, b), f->add(b, a));
                ASSERT_EQ(f->mul(a, b), f->mul(b, a));
                for (auto c : all) {
                    ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
                    ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
                    ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST(Gf, AxiomsRandomizedOnLargerFields) {
    for (int q : {7, 8, 9}) {
        const auto f = Field::make(q);
        hopi::Rng rng(static_cast<std::uint64_t>(q));
        auto pick = [&] { return el(static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(f->order())))); };
        for (int i = 0; i < 10000; ++i) {
            const auto a = pick(), b = pick(), c = pick();
            ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
            ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            ASSERT_EQ(f->mul(a, b), f->mul(b, a));
        }
    }
}

TEST(Gf, FermatLittleTheorem) {
    for (int q : kSupported) {
        const auto f = Field::make(q);
        for (auto a : f->elements()) {
            if (a.is_zero()) continue;
            EXPECT_EQ(f->pow(a, static_cast<std::uint64_t>(f->order() - 1)), f->one());
        }
    }
}

TEST(Frobenius, FixedPointsAndInvolution) {
    for (int q : kSupported) {
        const auto f = Field::make(q);
        EXPECT_EQ(f->frobenius_q(f->zero()), f->zero());
        EXPECT_EQ(f->frobenius_q(f->one()), f->one());
        for (auto a : f->elements()) {
            EXPECT_EQ(f->frobenius_q(f->frobenius_q(a)), a);
            // Repeated multiplication as a second route to a^q.
            Element slow = f->one();
            for (int i = 0; i < q; ++i) slow = f->mul(slow, a);
            EXPECT_EQ(f->frobenius_q(a), slow);
        }
    }
}

TEST(Frobenius, IsARingHomomorphism) {
    for (int q : {2, 3, 4, 5}) {
        const auto f = Field::make(q);
        for (auto a : f->elements()) {
            for (auto b : f->elements()) {
                ASSERT_EQ(f->frobenius_q(f->add(a, b)), f->add(f->frobenius_q(a), f->frobenius_q(b)));
                ASSERT_EQ(f->frobenius_q(f->mul(a, b)), f->mul(f->frobenius_q(a), f->frobenius_q(b)));
            }
        }
    }
}

TEST(Frobenius, TraceImageHasQElements) {
    for (int q : kSupported) {
        const auto f = Field::make(q);
        std::set<Element> image;
        for (auto a : f->elements()) image.insert(f->add(f->frobenius_q(a), a));
        EXPECT_EQ(image.size(), static_cast<std::size_t>(q)) << "q=" << q;
    }
}

TEST(Elements, AscendingIndexOrder) {
    EXPECT_EQ(Field::make(2)->elements().size(), 4u);
    EXPECT_EQ(Field::make(3)->elements().size(), 9u);
    EXPECT_EQ(Field::make(5)->elements().size(), 25u);
    const auto all = Field::make(2)->elements();
    EXPECT_EQ(all[0], el(0));
    EXPECT_EQ(all[1], el(1));
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].index(), i);
}

TEST(Elements, DigitEncodingRoundTrips) {
    for (int q : kSupported) {
        const auto f = Field::make(q);
        for (auto a : f->elements()) EXPECT_EQ(f->from_digits(f->digits(a)), a);
    }
}
