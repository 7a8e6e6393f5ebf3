#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "compseq/correlation.hpp"
#include "compseq/matrix.hpp"

namespace compseq {

/// Witness that columns c0, c1 form an m x 2 complementary set matrix made
/// of m/2 length-2 complementary row pairs. `pairing` lists the row pairs
/// (0-based), covering every index exactly once.
struct CompanionPair {
    Seq c0;
    Seq c1;
    std::vector<std::pair<int, int>> pairing;
};

/// True iff the row ACFs sum to zero at every lag 1..n-1.
bool is_complementary_set(const SeqMatrix& m);

/// True iff the row-wise cross ACFs sum to zero at every lag, positive and
/// negative. Throws DomainError on dimension mismatch.
bool are_mates(const SeqMatrix& a, const SeqMatrix& b);

/// All sets complementary and pairwise mates.
bool is_mo_collection(std::span<const SeqMatrix> sets);
bool is_mo_collection(const MoMatrix& mo);

/// All sets complementary, and every pair of sets either mates or equal up
/// to negation. The size-extension recursion necessarily duplicates sets
/// (its column index relation repeats columns across set boundaries), so
/// extended collections satisfy this weaker predicate while the duplicated
/// pairs fail the literal mate test at zero lag.
bool is_mo_collection_up_to_duplicates(std::span<const SeqMatrix> sets);
bool is_mo_collection_up_to_duplicates(const MoMatrix& mo);

/// Companion test. The m x 2 matrix splits into complementary row pairs
/// iff the values v_i = c0[i] * conj(c1[i]) can be paired value-with-
/// negation (zeros with zeros), so the test is a multiset pairing rather
/// than a generic matching. Returns a witness pairing, or nullopt.
/// Throws DomainError on unequal or odd lengths.
std::optional<CompanionPair> is_companion_pair(const Seq& c0, const Seq& c1);

/// Per-pair sign choice when constructing a companion:
/// Plus:  c1[x] =  conj(c0[y]),  c1[y] = -conj(c0[x])
/// Minus: c1[x] = -conj(c0[y]),  c1[y] =  conj(c0[x])
enum class CompanionSign { Plus, Minus };

std::vector<std::pair<int, int>> adjacent_pairing(int m);
std::vector<std::pair<int, int>> half_split_pairing(int m);

/// Builds a companion of c0 from an index pairing and per-pair signs
/// (defaults to Plus everywhere, which reproduces the conjugated
/// swap-negate companion on the adjacent pairing). Throws DomainError when
/// the pairing does not partition 0..m-1.
Seq make_companion(const Seq& c0, std::span<const std::pair<int, int>> pairing,
                   std::span<const CompanionSign> signs = {});

/// Size-2 complementary set test.
bool is_golay_pair(const Seq& a, const Seq& b);

/// Whether any mate over the sequence's alphabet exists, by exhaustive
/// search. Throws CapabilityError when the alphabet^n space exceeds the
/// enumeration cap (default 2^26, n capped at 20).
bool is_golay_sequence(const Seq& a);

}  // namespace compseq
