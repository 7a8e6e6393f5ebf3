#include "compseq/construct.hpp"

#include <algorithm>

namespace compseq {

const char* to_string(ExtendMode m) {
    return m == ExtendMode::Concat ? "concat" : "interleave";
}

ExtendMode extend_mode_from_string(std::string_view name) {
    if (name == "concat" || name == "c") return ExtendMode::Concat;
    if (name == "interleave" || name == "i") return ExtendMode::Interleave;
    throw DomainError("unknown extension mode '" + std::string(name) + "'");
}

BuildRecipe BuildRecipe::uniform(int p, int t, ExtendMode length_mode, ExtendMode size_mode) {
    if (p < 0 || t < 0) throw DomainError("extension counts must be nonnegative");
    BuildRecipe r;
    r.length_modes.assign(static_cast<size_t>(p), length_mode);
    r.size_modes.assign(static_cast<size_t>(t), size_mode);
    return r;
}

bool RSet::contains(const Seq& s) const {
    return std::binary_search(members.begin(), members.end(), s);
}

namespace {

std::vector<Seq> rset_members(const Seq& c, int level) {
    std::vector<Seq> cur{c, negate(c)};
    for (int v = 0; v < level; ++v) {
        std::vector<Seq> next;
        next.reserve(cur.size() * 2);
        for (const auto& w : cur) {
            next.push_back(concat(w, w));
            next.push_back(concat(w, negate(w)));
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    return cur;
}

}  // namespace

RSet rset(const Seq& c, int level) {
    if (level < 0) throw DomainError("level must be nonnegative");
    return RSet{level, {c}, rset_members(c, level)};
}

RSet rset_pair(const Seq& c, const Seq& d, int level) {
    if (level < 0) throw DomainError("level must be nonnegative");
    if (c.size() != d.size()) throw DomainError("seed lengths differ");
    auto a = rset_members(c, level);
    auto b = rset_members(d, level);
    std::vector<Seq> merged;
    merged.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return RSet{level, {c, d}, std::move(merged)};
}

bool rset_member(const Seq& candidate, const Seq& c0, const Seq& c1, int level) {
    if (level < 0) throw DomainError("level must be nonnegative");
    const int base = c0.size();
    std::int64_t want = static_cast<std::int64_t>(base) << level;
    if (candidate.size() != want) return false;

    Seq cur = candidate;
    for (int v = level; v > 0; --v) {
        const int half = cur.size() / 2;
        std::vector<GaussInt> lo(cur.elems().begin(), cur.elems().begin() + half);
        Seq first(std::move(lo), cur.alphabet());
        bool same = true, neg = true;
        for (int i = 0; i < half; ++i) {
            same = same && cur[half + i] == cur[i];
            neg = neg && cur[half + i] == -cur[i];
            if (!same && !neg) return false;
        }
        cur = std::move(first);
    }
    return cur == c0 || cur == c1 || cur == negate(c0) || cur == negate(c1);
}

SeqMatrix companion_matrix(const Seq& c0, const Seq& c1) {
    if (!is_companion_pair(c0, c1)) throw DomainError("sequences are not a companion pair");
    std::vector<Seq> rows;
    rows.reserve(static_cast<size_t>(c0.size()));
    const Alphabet a = join(c0.alphabet(), c1.alphabet());
    for (int i = 0; i < c0.size(); ++i) rows.emplace_back(std::vector<GaussInt>{c0[i], c1[i]}, a);
    return SeqMatrix(std::move(rows));
}

SeqMatrix mate_of(const SeqMatrix& c) {
    if (c.rows() % 2 != 0) throw DomainError("mate construction needs an even row count");
    const int n = c.cols();
    for (int k = 0; k < c.rows() / 2; ++k) {
        const auto a0 = aperiodic_acf(c.row(2 * k));
        const auto a1 = aperiodic_acf(c.row(2 * k + 1));
        for (int l = 1; l < n; ++l) {
            if (!(a0.at(l) + a1.at(l)).is_zero())
                throw DomainError("rows " + std::to_string(2 * k) + "," +
                                  std::to_string(2 * k + 1) +
                                  " are not a complementary pair (pair index " +
                                  std::to_string(k) + ")");
        }
    }
    std::vector<Seq> rows;
    rows.reserve(static_cast<size_t>(c.rows()));
    for (int k = 0; k < c.rows() / 2; ++k) {
        rows.push_back(conjugate(reverse(c.row(2 * k + 1))));
        rows.push_back(negate(conjugate(reverse(c.row(2 * k)))));
    }
    return SeqMatrix(std::move(rows));
}

SeqMatrix length_extend(const SeqMatrix& c, ExtendMode mode) {
    const SeqMatrix d = mate_of(c);
    return mode == ExtendMode::Concat ? SeqMatrix::concat(c, d) : SeqMatrix::interleave(c, d);
}

SeqMatrix length_extended(const Seq& c0, const Seq& c1, std::span<const ExtendMode> modes) {
    SeqMatrix c = companion_matrix(c0, c1);
    for (const auto mode : modes) c = length_extend(c, mode);
    return c;
}

MoMatrix size_extend(const MoMatrix& mo, ExtendMode mode) {
    // Duplicated sets are tolerated: the recursion itself reproduces sets
    // across block boundaries from the first extension onwards.
    if (!is_mo_collection_up_to_duplicates(mo))
        throw DomainError("input is not an MO collection");
    const SeqMatrix& m = mo.matrix;
    const SeqMatrix neg = m.negated();
    const SeqMatrix mm = (mode == ExtendMode::Concat) ? SeqMatrix::concat(m, m)
                                                      : SeqMatrix::interleave(m, m);
    const SeqMatrix nm = (mode == ExtendMode::Concat) ? SeqMatrix::concat(neg, m)
                                                      : SeqMatrix::interleave(neg, m);
    const SeqMatrix top = SeqMatrix::concat(mm, nm);
    const SeqMatrix bottom = SeqMatrix::concat(nm, mm);
    std::vector<Seq> rows;
    rows.reserve(static_cast<size_t>(top.rows() + bottom.rows()));
    for (int i = 0; i < top.rows(); ++i) rows.push_back(top.row(i));
    for (int i = 0; i < bottom.rows(); ++i) rows.push_back(bottom.row(i));
    return MoMatrix{SeqMatrix(std::move(rows)), mo.sets * 2};
}

MoMatrix build(const Seq& c0, const Seq& c1, const BuildRecipe& recipe) {
    SeqMatrix c = length_extended(c0, c1, recipe.length_modes);
    MoMatrix mo{SeqMatrix::concat(c, mate_of(c)), 2};
    for (const auto mode : recipe.size_modes) mo = size_extend(mo, mode);
    return mo;
}

GolaySeed golay_seed(int q) {
    if (q < 0) throw DomainError("golay seed order must be nonnegative");
    Seq h00({kOne, kOne});
    Seq h01({kOne, kMinusOne});
    Seq h10({kOne, kMinusOne});
    Seq h11({kOne, kOne});
    for (int step = 0; step < q; ++step) {
        Seq n00 = concat(h00, reverse(h01));
        Seq n01 = concat(h01, negate(reverse(h00)));
        Seq n10 = concat(h10, reverse(h11));
        Seq n11 = concat(h11, negate(reverse(h10)));
        h00 = std::move(n00);
        h01 = std::move(n01);
        h10 = std::move(n10);
        h11 = std::move(n11);
    }
    return GolaySeed{h00, h01, h10, h11};
}

}  // namespace compseq
