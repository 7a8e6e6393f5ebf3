#include <doctest.h>

#include <random>

#include "compseq/correlation.hpp"
#include "support.hpp"

using namespace compseq;
using test_support::B;
using test_support::S;

TEST_CASE("aperiodic autocorrelation on pinned examples") {
    const auto p = aperiodic_acf(S("+ +j - +j"));
    CHECK(p.at(0) == GaussInt{4, 0});
    CHECK(p.at(1) == kMinusImag);
    CHECK(p.at(2) == kZero);
    CHECK(p.at(3) == kMinusImag);
    CHECK(p.at(4) == kZero);  // out-of-window convention

    const auto single = aperiodic_acf(S("+"));
    CHECK(single.at(0) == kOne);
    CHECK(single.hi() == 0);

    // Barker-4 up to sign: every out-of-phase value has magnitude <= 1.
    const auto barker = aperiodic_acf(B("++-+"));
    for (int l = 1; l <= 3; ++l) CHECK(barker.at(l).norm() <= 1);
}

TEST_CASE("periodic autocorrelation on pinned examples") {
    const auto p = periodic_acf(B("+++-"));
    CHECK(p.at(0) == GaussInt{4, 0});
    CHECK(p.at(1) == kZero);
    CHECK(p.at(2) == kZero);
    CHECK(p.at(3) == kZero);

    const auto q = periodic_acf(B("++"));
    CHECK(q.at(0) == GaussInt{2, 0});
    CHECK(q.at(1) == GaussInt{2, 0});
}

TEST_CASE("periodic equals aperiodic folded back, conjugated for complex") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Alphabet a = trial % 2 ? Alphabet::Quad : Alphabet::Ternary;
        const Seq s = test_support::random_seq(rng, a, n);
        const auto ap = aperiodic_acf(s);
        const auto pe = periodic_acf(s);
        for (int l = 1; l < n; ++l) {
            CHECK(pe.at(l) == ap.at(l) + ap.at(n - l).conj());
            if (s.is_real()) CHECK(pe.at(l) == ap.at(l) + ap.at(n - l));
        }
    }
}

TEST_CASE("aperiodic crosscorrelation on pinned examples") {
    const auto p = aperiodic_ccf(B("++"), B("+-"));
    CHECK(p.at(-1) == kOne);
    CHECK(p.at(0) == kZero);
    CHECK(p.at(1) == kMinusOne);
    CHECK(p.at(2) == kZero);
    CHECK(p.at(-2) == kZero);

    // self-crosscorrelation reproduces the autocorrelation at l >= 0
    const Seq s = S("+ +j - -j +");
    const auto self = aperiodic_ccf(s, s);
    const auto acf = aperiodic_acf(s);
    for (int l = 0; l < s.size(); ++l) CHECK(self.at(l) == acf.at(l));

    CHECK_THROWS_AS(aperiodic_ccf(B("+"), B("+-")), DomainError);
}

TEST_CASE("periodic crosscorrelation on pinned examples") {
    const auto p = periodic_ccf(B("+-"), B("+-"));
    CHECK(p.at(0) == GaussInt{2, 0});
    CHECK(p.at(1) == GaussInt{-2, 0});

    const auto q = periodic_ccf(B("++"), B("+-"));
    CHECK(q.at(0) == kZero);
    CHECK(q.at(1) == kZero);

    // orthogonal order-2 rows have zero cyclic correlation at lag 0
    CHECK(periodic_ccf(B("++"), B("+-")).at(0) == kZero);
}

TEST_CASE("cross symmetry: A_ab(-l) = conj(A_ba(l))") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Seq a = test_support::random_seq(rng, Alphabet::Quad, n);
        const Seq b = test_support::random_seq(rng, Alphabet::Quad, n);
        const auto ab = aperiodic_ccf(a, b);
        const auto ba = aperiodic_ccf(b, a);
        for (int l = -(n - 1); l <= n - 1; ++l) CHECK(ab.at(-l) == ba.at(l).conj());
    }
}

TEST_CASE("autocorrelation symmetries under negation, conjugation, reversal") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Seq a = test_support::random_seq(rng, Alphabet::Quad, n);
        const auto base = aperiodic_acf(a);
        const auto neg = aperiodic_acf(negate(a));
        const auto con = aperiodic_acf(conjugate(a));
        const auto rev = aperiodic_acf(reverse(a));
        for (int l = 0; l < n; ++l) {
            CHECK(neg.at(l) == base.at(l));
            CHECK(con.at(l) == base.at(l).conj());
            CHECK(rev.at(l) == base.at(l).conj());
        }
    }
}

TEST_CASE("merit reports on pinned examples") {
    const auto quad = merits(S("+ +j - +j"));
    CHECK(quad.lambda_A.mag_sq == 1);
    CHECK(quad.S_A.exact);
    CHECK(quad.S_A.integer_value == 2);

    // maximal-period length-7 binary sequence: off-peak cyclic values are all -1
    const auto mseq = merits(B("+++-+--"));
    CHECK(mseq.lambda_P.mag_sq == 1);

    const auto flat = merits(B("+++"));
    CHECK(flat.lambda_A.mag_sq == 4);
    CHECK(flat.S_A.integer_value == 3);
}

TEST_CASE("cross merits include the zero lag") {
    const Seq s = B("+-++");
    const auto x = cross_merits(s, s);
    CHECK(x.lambda_A.mag_sq == 16);  // dominated by the energy at lag 0
    const auto y = cross_merits(B("++"), B("+-"));
    CHECK(y.lambda_A.mag_sq == 1);
}

TEST_CASE("merit invariants") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Alphabet a = trial % 3 == 0 ? Alphabet::Binary
                         : trial % 3 == 1 ? Alphabet::Ternary
                                          : Alphabet::Quad;
        const Seq s = test_support::random_seq(rng, a, n);
        const auto r = merits(s);
        CHECK(r.lambda_A.value() <= r.S_A.value() + 1e-12);
        CHECK(r.lambda_P.value() <= r.S_P.value() + 1e-12);
        if (a != Alphabet::Ternary)  // unimodular elements: peak is at most n-1
            CHECK(r.lambda_A.mag_sq <= static_cast<std::uint64_t>((n - 1)) * (n - 1));
    }
}

TEST_CASE("exactness bookkeeping of sum merits") {
    // values on the axes keep sums exact
    CHECK(merits(S("+ +j - +j")).S_A.exact);
    // a correlation value off the axes (1+1i) makes the sum inexact
    const auto r = merits(S("+ 1+1i"));
    CHECK_FALSE(r.S_A.exact);
    CHECK(r.S_A.value() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("empty and degenerate inputs") {
    CHECK_THROWS_AS(Seq(std::vector<GaussInt>{}), DomainError);
    const auto p = aperiodic_acf(S("0 0 +"));
    CHECK(p.at(0) == kOne);
}
