#pragma once

#include <random>
#include <string>
#include <vector>

#include "compseq/complementary.hpp"
#include "compseq/construct.hpp"
#include "compseq/seq.hpp"

namespace test_support {

inline std::string data_dir() {
#ifdef COMPSEQ_DATA_DIR
    return COMPSEQ_DATA_DIR;
#else
    return "data/published";
#endif
}

inline std::string data_path(const std::string& name) { return data_dir() + "/" + name; }

inline compseq::Seq S(const std::string& tokens) { return compseq::Seq::parse(tokens); }

// Compact +/-/0 notation, one character per element.
inline compseq::Seq B(const std::string& compact) {
    std::string spaced;
    for (char c : compact) {
        spaced += c;
        spaced += ' ';
    }
    return compseq::Seq::parse(spaced);
}

inline compseq::Seq random_seq(std::mt19937_64& rng, compseq::Alphabet a, int n) {
    const auto alpha = compseq::alphabet_elements(a);
    std::vector<compseq::GaussInt> v;
    v.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back(alpha[rng() % alpha.size()]);
    // keep at least one nonzero element so energies stay positive
    if (compseq::Seq(v, a).energy() == 0) v[0] = compseq::kOne;
    return compseq::Seq(std::move(v), a);
}

// Random buildable companion pair: random seed column, adjacent pairing,
// one sign convention across all pairs.
inline compseq::CompanionPair random_companion(std::mt19937_64& rng, compseq::Alphabet a,
                                               int m) {
    const compseq::Seq c0 = random_seq(rng, a, m);
    const auto pairing = compseq::adjacent_pairing(m);
    const auto sign = (rng() & 1) ? compseq::CompanionSign::Plus : compseq::CompanionSign::Minus;
    const std::vector<compseq::CompanionSign> signs(pairing.size(), sign);
    const compseq::Seq c1 = compseq::make_companion(c0, pairing, signs);
    auto w = compseq::is_companion_pair(c0, c1);
    return *w;
}

// Random complementary pair grown from a Golay seed by length extensions.
inline std::pair<compseq::Seq, compseq::Seq> random_complementary_pair(std::mt19937_64& rng,
                                                                       int max_extra = 3) {
    const auto seed = compseq::golay_seed(static_cast<int>(rng() % 3));
    compseq::Seq a = (rng() & 1) ? seed.c0 : seed.c1;
    compseq::Seq b = (rng() & 1) ? ((rng() & 1) ? seed.c0_mate : compseq::negate(seed.c0_mate))
                                 : seed.c1_mate;
    // restart from a coherent pair
    if (rng() & 1) {
        a = seed.c0;
        b = seed.c0_mate;
    } else {
        a = seed.c1;
        b = seed.c1_mate;
    }
    compseq::SeqMatrix m({a, b});
    const int steps = static_cast<int>(rng() % (max_extra + 1));
    for (int i = 0; i < steps; ++i)
        m = compseq::length_extend(m, (rng() & 1) ? compseq::ExtendMode::Concat
                                                  : compseq::ExtendMode::Interleave);
    if (rng() & 1) return {compseq::negate(m.row(0)), m.row(1)};
    return {m.row(0), m.row(1)};
}

}  // namespace test_support
