#include <doctest.h>

#include <random>
#include <sstream>

#include "compseq/seq.hpp"
#include "support.hpp"

using namespace compseq;
using test_support::B;
using test_support::S;

TEST_CASE("token parsing and canonical formatting round-trip") {
    const Seq a = S("+ - 0 +j -j 2 -3 1+2i -1-1i 2i");
    CHECK(a.size() == 10);
    CHECK(a[0] == kOne);
    CHECK(a[1] == kMinusOne);
    CHECK(a[2] == kZero);
    CHECK(a[3] == kImag);
    CHECK(a[4] == kMinusImag);
    CHECK(a[5] == GaussInt{2, 0});
    CHECK(a[6] == GaussInt{-3, 0});
    CHECK(a[7] == GaussInt{1, 2});
    CHECK(a[8] == GaussInt{-1, -1});
    CHECK(a[9] == GaussInt{0, 2});
    CHECK(Seq::parse(a.str()) == a);

    CHECK(S("1+1i")[0] == GaussInt{1, 1});
    CHECK(S("-1+j")[0] == GaussInt{-1, 1});
    CHECK_THROWS_AS(Seq::parse(""), DomainError);
    CHECK_THROWS_AS(Seq::parse("# only a comment"), DomainError);
    CHECK_THROWS_AS(Seq::parse("+ x -"), DomainError);
    CHECK_THROWS_AS(Seq::parse("1+"), DomainError);
}

TEST_CASE("alphabet inference, joining and validation") {
    CHECK(B("+-").alphabet() == Alphabet::Binary);
    CHECK(B("+0-").alphabet() == Alphabet::Ternary);
    CHECK(S("+ -j").alphabet() == Alphabet::Quad);
    CHECK(S("1+2i").alphabet() == Alphabet::Gauss);

    CHECK(join(Alphabet::Binary, Alphabet::Quad) == Alphabet::Quad);
    CHECK(join(Alphabet::Ternary, Alphabet::Quad) == Alphabet::Gauss);

    CHECK_THROWS_AS(Seq({kZero}, Alphabet::Binary), DomainError);
    CHECK_THROWS_AS(S("+ 0").retagged(Alphabet::Binary), DomainError);
    CHECK(B("+-").retagged(Alphabet::Ternary).alphabet() == Alphabet::Ternary);
}

TEST_CASE("swap-negate reshaping matches the element-wise definition") {
    const Seq a = S("1 2 3 4");
    CHECK(f_i(a) == S("2 -1 4 -3"));
    CHECK(f_i_conj(S("+ +j - +j")) == S("-j - -j +"));
    CHECK_THROWS_AS(f_i(S("+ - +")), DomainError);
}

TEST_CASE("half-rotate reshaping and involution up to negation") {
    const Seq a = S("1 2 3 4");
    CHECK(f_c(a) == S("3 4 -1 -2"));
    CHECK(f_c(f_c(a)) == negate(a));
    CHECK_THROWS_AS(f_c(S("+ - +")), DomainError);
}

TEST_CASE("interleave, concat, reverse") {
    CHECK(interleave(S("1 2"), S("5 6")) == S("1 5 2 6"));
    CHECK(concat(S("1 2"), S("5 6 7")) == S("1 2 5 6 7"));
    CHECK(reverse(reverse(S("1 2 3"))) == S("1 2 3"));
    CHECK_THROWS_AS(interleave(S("+"), S("+ -")), DomainError);
}

TEST_CASE("plain inner product annihilates the swap-negate companion") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 * (1 + static_cast<int>(rng() % 6));
        const Seq a = test_support::random_seq(rng, Alphabet::Binary, n);
        CHECK(inner_product(a, f_i(a)).is_zero());
    }
    CHECK_THROWS_AS(inner_product(S("+"), S("+ -")), DomainError);
}

TEST_CASE("energy and zero counting") {
    CHECK(S("+ +j - 0").energy() == 3);
    CHECK(S("+ +j - 0").zero_count() == 1);
    CHECK(S("2 1+1i").energy() == 6);
}

TEST_CASE("hermitian product detects orthogonality where the plain product does not") {
    CHECK(hermitian_product(B("++"), B("+-")).is_zero());
    const Seq a = S("+j +j");
    CHECK(hermitian_product(a, a) == GaussInt{2, 0});
    CHECK(inner_product(a, a) == GaussInt{-2, 0});
}

TEST_CASE("sequence file reading skips comments and blanks") {
    std::istringstream in("# header\n+ - + \n\n- -  # trailing\n");
    const auto seqs = read_sequences(in);
    REQUIRE(seqs.size() == 2);
    CHECK(seqs[0] == B("+-+"));
    CHECK(seqs[1] == B("--"));
}
