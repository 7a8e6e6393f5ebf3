#pragma once

#include <span>
#include <vector>

#include "compseq/complementary.hpp"
#include "compseq/matrix.hpp"

namespace compseq {

/// Doubling flavour used by the extension steps.
enum class ExtendMode { Concat, Interleave };

const char* to_string(ExtendMode m);
ExtendMode extend_mode_from_string(std::string_view name);

/// Fully determines a construction run: p length-extension steps followed
/// by t size-extension steps, each with its own mode. The result is an MO
/// collection of 2^(t+1) sets, 2^t*m rows, 2^t*2^(p+1) columns per set.
struct BuildRecipe {
    std::vector<ExtendMode> length_modes;
    std::vector<ExtendMode> size_modes;

    int p() const { return static_cast<int>(length_modes.size()); }
    int t() const { return static_cast<int>(size_modes.size()); }

    static BuildRecipe uniform(int p, int t, ExtendMode length_mode = ExtendMode::Concat,
                               ExtendMode size_mode = ExtendMode::Concat);
};

/// Row set of the sign-block doubling recursion: level 0 is {c, -c}; each
/// level maps w to {ww, w(-w)}. Characterizes every column sequence the
/// construction can produce.
struct RSet {
    int level = 0;
    std::vector<Seq> seeds;
    std::vector<Seq> members;  // sorted, unique

    bool contains(const Seq& s) const;
};

RSet rset(const Seq& c, int level);
RSet rset_pair(const Seq& c, const Seq& d, int level);

/// Membership test without materializing the set: peels concat-with-(+/-)
/// halves down to +/-c0 or +/-c1.
bool rset_member(const Seq& candidate, const Seq& c0, const Seq& c1, int level);

/// The m x 2 matrix whose columns are c0 and c1. Throws DomainError unless
/// they form a companion pair.
SeqMatrix companion_matrix(const Seq& c0, const Seq& c1);

/// Mate via reversal-conjugation of adjacently paired rows: row 2i becomes
/// conj(reverse(row 2i+1)) and row 2i+1 becomes -conj(reverse(row 2i)).
/// Requires adjacent rows (2i, 2i+1) to be complementary pairs; throws
/// DomainError naming the first failing pair otherwise.
SeqMatrix mate_of(const SeqMatrix& c);

/// One doubling of the column count: rows of the mate are concatenated or
/// interleaved onto the rows of c. Preserves the adjacent-pair structure,
/// so steps can be chained.
SeqMatrix length_extend(const SeqMatrix& c, ExtendMode mode);

/// C^(p): p length-extension steps applied to the companion matrix.
SeqMatrix length_extended(const Seq& c0, const Seq& c1, std::span<const ExtendMode> modes);

/// One doubling of the set count: the block form over the whole wide
/// matrix. Validates that the input is an MO collection up to duplicated
/// sets, which the recursion itself introduces after the first step.
MoMatrix size_extend(const MoMatrix& mo, ExtendMode mode);

/// Full pipeline: companion matrix -> p length extensions -> [C | mate]
/// -> t size extensions.
MoMatrix build(const Seq& c0, const Seq& c1, const BuildRecipe& recipe);

/// Two Golay pairs of length 2^(q+1) from the doubling recursion on the
/// order-2 initial matrices; (c0, c1) is additionally a companion pair, so
/// it seeds constructions whose columns are all Golay sequences.
struct GolaySeed {
    Seq c0;
    Seq c0_mate;  // {c0, c0_mate} is a Golay pair
    Seq c1;
    Seq c1_mate;  // {c1, c1_mate} is a Golay pair
};

GolaySeed golay_seed(int q);

}  // namespace compseq
