#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "compseq/analysis.hpp"
#include "compseq/complementary.hpp"

namespace compseq {

enum class MeritKind { LambdaA, SA, LambdaP, SP };

const char* to_string(MeritKind k);
MeritKind merit_kind_from_string(std::string_view name);

/// Upper bound on one merit of every sign-block set member.
struct Constraint {
    MeritKind kind = MeritKind::LambdaA;
    double bound = 0;
};

struct SearchBudget {
    std::uint64_t max_candidates = std::uint64_t{1} << 26;  // exhaustive cap
    std::uint64_t max_iterations = 0;                       // annealing proposals
    double wall_clock_seconds = 0;                          // 0 = uncapped
};

struct SearchConfig {
    Alphabet alphabet = Alphabet::Binary;
    int m = 2;
    int t = 0;
    std::optional<Constraint> constraint;
    std::optional<MeritKind> minimize;
    SearchBudget budget;
    std::uint64_t rng_seed = 0;
    int jobs = 1;
};

struct FoundPair {
    Seq c0;
    Seq c1;
    MeritReport merits0;
    MeritReport merits1;
};

struct SearchResult {
    std::vector<FoundPair> pairs;
    std::optional<double> achieved_minimum;
    std::uint64_t candidates_examined = 0;
    std::uint64_t retained = 0;
    double elapsed_seconds = 0;
};

/// Scans all alphabet^m sequences in lexicographic order, retains those
/// whose level-t sign-block set satisfies the constraint everywhere (ACFs
/// carried through the doubling recursion), then companion-tests retained
/// sequences pairwise. Pairs are emitted once, ordered. Throws
/// CapabilityError when alphabet^m exceeds the candidate cap.
SearchResult exhaustive_search(const SearchConfig& cfg);

/// Minimum over companion pairs of max(merit(c0), merit(c1)) at level 0,
/// with every witness pair achieving it. Same cap as exhaustive_search.
SearchResult min_constraint_search(Alphabet alphabet, int m, MeritKind kind, int jobs = 1,
                                   std::uint64_t max_candidates = std::uint64_t{1} << 26);

/// Interleaved lift: c0 = s0 (x) s1, c1 = conj(s1) (x) (-conj(s0)).
CompanionPair case1_lift(const Seq& s0, const Seq& s1);

/// Concatenated lift: c0 = s0 s1, c1 = conj(s1) (-conj(s0)).
CompanionPair case2_lift(const Seq& s0, const Seq& s1);

struct AnnealHistoryEntry {
    std::uint64_t iteration;
    double temperature;
    std::int64_t cost;
    bool restart = false;
};

struct AnnealResult {
    Seq s0;
    Seq s1;
    std::int64_t cost = 0;  // best max{l0+l1, 2lx} reached
    std::uint64_t evaluations = 0;
    std::vector<AnnealHistoryEntry> history;
};

/// Simulated annealing over binary pairs of length half_len, minimizing
/// max{lambda_A(s0)+lambda_A(s1), 2 lambda_A(s0,s1)}. Geometric cooling,
/// single-flip proposals alternating between the two sequences, Metropolis
/// acceptance, random restart on prolonged stagnation. Deterministic for a
/// fixed seed. budget.max_iterations caps cost evaluations (default 5e6).
AnnealResult anneal_pair(int half_len, Alphabet alphabet, const SearchBudget& budget,
                         std::uint64_t rng_seed);

}  // namespace compseq
