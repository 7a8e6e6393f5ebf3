#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>

#include "compseq/analysis.hpp"
#include "support.hpp"

using namespace compseq;
using test_support::B;
using test_support::S;

namespace {

const Seq kQuadC0 = S("+ +j - +j");
const Seq kQuadC1 = S("-j - -j +");

}  // namespace

TEST_CASE("column report of the bundled 8x32 collection") {
    const auto blocks = read_matrix_file(test_support::data_path("quad_mo4_8x32.txt"));
    SeqMatrix wide = blocks[0];
    for (size_t k = 1; k < blocks.size(); ++k) wide = SeqMatrix::concat(wide, blocks[k]);
    const auto rep = column_report(wide);
    CHECK(rep.lambda_A_max.mag_sq == 16);  // peak magnitude 4, exactly
    CHECK(rep.S_A_max.exact);
    CHECK(rep.S_A_max.integer_value == 12);
}

TEST_CASE("column report zero counts on the ternary matrix") {
    const auto mats = read_matrix_file(test_support::data_path("ternary_c_8x8.txt"));
    const auto rep = column_report(mats[0]);
    for (int z : rep.zero_counts) CHECK(z == 1);
}

TEST_CASE("recursion at level zero returns the seed profiles in column order") {
    const BuildRecipe recipe = BuildRecipe::uniform(1, 0);
    const auto profiles = recursive_column_acf(kQuadC0, kQuadC1, recipe);
    const MoMatrix mo = build(kQuadC0, kQuadC1, recipe);
    REQUIRE(static_cast<int>(profiles.size()) == mo.matrix.cols());
    const auto a0 = aperiodic_acf(kQuadC0);
    const auto a1 = aperiodic_acf(kQuadC1);
    for (size_t j = 0; j < profiles.size(); ++j) {
        CHECK((profiles[j] == a0 || profiles[j] == a1));
        CHECK(profiles[j] == aperiodic_acf(mo.matrix.column(static_cast<int>(j))));
    }
}

TEST_CASE("recursion equals direct column autocorrelations") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 25; ++trial) {
        const Alphabet a = trial % 3 == 0 ? Alphabet::Binary
                         : trial % 3 == 1 ? Alphabet::Ternary
                                          : Alphabet::Quad;
        const int m = 2 * (1 + static_cast<int>(rng() % 4));
        const auto cp = test_support::random_companion(rng, a, m);
        BuildRecipe recipe;
        const int p = static_cast<int>(rng() % 3);
        const int t = static_cast<int>(rng() % 3);
        for (int i = 0; i < p; ++i)
            recipe.length_modes.push_back((rng() & 1) ? ExtendMode::Concat
                                                      : ExtendMode::Interleave);
        for (int i = 0; i < t; ++i)
            recipe.size_modes.push_back((rng() & 1) ? ExtendMode::Concat
                                                    : ExtendMode::Interleave);
        const auto profiles = recursive_column_acf(cp.c0, cp.c1, recipe);
        const MoMatrix mo = build(cp.c0, cp.c1, recipe);
        REQUIRE(static_cast<int>(profiles.size()) == mo.matrix.cols());
        for (int j = 0; j < mo.matrix.cols(); ++j)
            CHECK(profiles[static_cast<size_t>(j)] == aperiodic_acf(mo.matrix.column(j)));
    }
}

TEST_CASE("last column of a size-extended build peaks at (2^t - 1) E") {
    const std::uint64_t E = kQuadC0.energy();
    for (int t = 1; t <= 2; ++t) {
        for (const auto mode : {ExtendMode::Concat, ExtendMode::Interleave}) {
            BuildRecipe recipe = BuildRecipe::uniform(1, t, ExtendMode::Concat, mode);
            const auto profiles = recursive_column_acf(kQuadC0, kQuadC1, recipe);
            const auto& last = profiles.back();
            const std::uint64_t want = ((std::uint64_t{1} << t) - 1) * E;
            CHECK(last.at(kQuadC0.size()).norm() == want * want);
        }
    }
}

TEST_CASE("closed-form bounds on pinned values") {
    CHECK(sufficient_S_A(0, 7.0, 4.0) == 7.0);
    CHECK(sufficient_S_A(1, 2.0, 4.0) == 12.0);
    CHECK(sufficient_S_A(2, 2.0, 4.0) == 56.0);

    CHECK(sufficient_lambda_A(1, 1.0, 4.0) == 4.0);
    CHECK(necessary_lambda_A(1, 4.0) == 4.0);
    CHECK(lambda0_threshold(1, 4.0) == doctest::Approx(4.0 / 3.0));
    CHECK(sufficient_lambda_A(0, 3.0, 4.0) == 3.0);
    CHECK(necessary_lambda_A(0, 4.0) == 0.0);
    CHECK(necessary_lambda_A(3, 8.0) == 56.0);
}

TEST_CASE("welch thresholds and exact integer ceilings") {
    CHECK(existence_thresholds(62).lambda_W_A == 6);
    CHECK(existence_thresholds(240).lambda_W_A == 11);

    // every published row
    std::ifstream in(test_support::data_path("welch_targets.json"));
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    // the json is simple enough to scan without a parser here; the CLI tests
    // exercise the real parser
    size_t pos = 0;
    int rows = 0;
    while ((pos = text.find("\"m\":", pos)) != std::string::npos) {
        const int m = std::stoi(text.substr(pos + 4));
        const size_t wpos = text.find("\"lambda_W\":", pos);
        const int w = std::stoi(text.substr(wpos + 11));
        CHECK(existence_thresholds(m).lambda_W_A == w);
        pos = wpos;
        ++rows;
    }
    CHECK(rows == 16);

    // ceiling oracle: the smallest integer whose square clears the ratio
    for (int m = 4; m <= 400; m += 2) {
        const auto e = existence_thresholds(m);
        std::int64_t oracle = 1;
        while (oracle * oracle * (2 * std::int64_t{m} - 3) < std::int64_t{m} * m) ++oracle;
        CHECK(e.lambda_W_A == oracle);
        CHECK(e.lambda_A == doctest::Approx(m / std::sqrt(2.0 * m - 3)));
        CHECK(e.lambda_P == doctest::Approx(m / std::sqrt(m - 1.0)));
    }
    CHECK_THROWS_AS(existence_thresholds(5), DomainError);
}

TEST_CASE("halved-pair welch bound matches the existence threshold algebraically") {
    for (int m = 4; m <= 200; m += 2) {
        const auto w = welch_bounds(m / 2, 2);
        const auto e = existence_thresholds(m);
        CHECK(2 * w.aperiodic == doctest::Approx(e.lambda_A).epsilon(1e-12));
        CHECK(2 * w.periodic == doctest::Approx(e.lambda_P).epsilon(1e-12));
    }
    CHECK_THROWS_AS(welch_bounds(0, 2), DomainError);
    CHECK_THROWS_AS(welch_bounds(4, 1), DomainError);
}

TEST_CASE("pair cost on a degenerate pair is twice the energy") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const Seq s = test_support::random_seq(rng, Alphabet::Binary, n);
        CHECK(lambda_B(s, s) == 2.0 * static_cast<double>(s.energy()));
    }
}

TEST_CASE("case bounds dominate the lifted pairs") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Seq s0 = test_support::random_seq(rng, Alphabet::Binary, n);
        const Seq s1 = test_support::random_seq(rng, Alphabet::Binary, n);
        const auto cb = case_bounds(s0, s1);
        CHECK(cb.lambda_A == lambda_B(s0, s1));

        const Seq c0i = interleave(s0, s1);
        const Seq c1i = interleave(s1, negate(s0));
        for (const Seq* c : {&c0i, &c1i}) {
            const auto r = merits(*c);
            CHECK(r.lambda_A.value() <= cb.lambda_A + 1e-9);
            CHECK(r.lambda_P.value() <= cb.lambda_P + 1e-9);
            CHECK(r.S_A.value() <= cb.S_A + 1e-9);
            CHECK(r.S_P.value() <= cb.S_P + 1e-9);
        }

        const Seq c0c = concat(s0, s1);
        const Seq c1c = concat(s1, negate(s0));
        for (const Seq* c : {&c0c, &c1c})
            CHECK(merits(*c).lambda_A.value() <= cb.lambda_A_concat + 1e-9);
    }
}

TEST_CASE("printed lag decompositions verify on binary pairs") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Seq s0 = test_support::random_seq(rng, Alphabet::Binary, n);
        const Seq s1 = test_support::random_seq(rng, Alphabet::Binary, n);
        const auto c1 = case1_decomposition_check(s0, s1);
        CHECK(bool(c1));
        if (!c1.ok) {
            CAPTURE(c1.identity);
            CAPTURE(c1.lag);
        }
        CHECK(bool(case2_decomposition_check(s0, s1)));
    }
    // length-1 pairs hold vacuously
    CHECK(bool(case1_decomposition_check(B("+"), B("-"))));
}

TEST_CASE("bound report assembly") {
    const auto r = bound_report(8, 1, 8.0, 1.0, 4.0);
    CHECK(r.sufficient_lambda_A.has_value());
    CHECK(*r.sufficient_lambda_A == 8.0);
    CHECK(*r.sufficient_S_A == 4 * 4.0 + 1 * 8.0);
    CHECK(r.necessary_lambda_A == 8.0);
    CHECK(r.lambda_W_A == existence_thresholds(8).lambda_W_A);
    const auto bare = bound_report(8, 0, 8.0, std::nullopt, std::nullopt);
    CHECK_FALSE(bare.sufficient_lambda_A.has_value());
}

TEST_CASE("bound properties over a random build corpus") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 40; ++trial) {
        const Alphabet a = trial % 2 ? Alphabet::Binary : Alphabet::Quad;
        const int m = 2 * (1 + static_cast<int>(rng() % 3));
        const auto cp = test_support::random_companion(rng, a, m);
        const int p = static_cast<int>(rng() % 3);
        const int t = static_cast<int>(rng() % 3);
        BuildRecipe recipe = BuildRecipe::uniform(
            p, t, (rng() & 1) ? ExtendMode::Concat : ExtendMode::Interleave,
            (rng() & 1) ? ExtendMode::Concat : ExtendMode::Interleave);
        const MoMatrix mo = build(cp.c0, cp.c1, recipe);
        const auto rep = column_report(mo);

        const double E = static_cast<double>(cp.c0.energy());
        const auto m0 = merits(cp.c0);
        const auto m1 = merits(cp.c1);
        const double lambda0 = std::max(m0.lambda_A.value(), m1.lambda_A.value());
        const double S0 = std::max(m0.S_A.value(), m1.S_A.value());

        CHECK(rep.lambda_A_max.value() <= sufficient_lambda_A(t, lambda0, E) + 1e-9);
        CHECK(rep.lambda_A_max.value() >= necessary_lambda_A(t, E) - 1e-9);
        CHECK(rep.S_A_max.value() <= sufficient_S_A(t, S0, E) + 1e-9);

        if (t >= 1 && lambda0 <= lambda0_threshold(t, E))
            CHECK(rep.lambda_A_max.value() == doctest::Approx(necessary_lambda_A(t, E)));
        if (t == 0)
            CHECK(rep.lambda_A_max.value() == doctest::Approx(lambda0));
    }
}
