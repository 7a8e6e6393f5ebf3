#include "compseq/complementary.hpp"

#include <algorithm>
#include <map>

namespace compseq {

bool is_complementary_set(const SeqMatrix& m) {
    const int n = m.cols();
    for (int l = 1; l < n; ++l) {
        GaussInt s{};
        for (int i = 0; i < m.rows(); ++i) s = s + aperiodic_acf(m.row(i)).at(l);
        if (!s.is_zero()) return false;
    }
    return true;
}

bool are_mates(const SeqMatrix& a, const SeqMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError("mate check requires equal dimensions");
    const int n = a.cols();
    std::vector<CorrelationProfile> cross;
    cross.reserve(static_cast<size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) cross.push_back(aperiodic_ccf(a.row(i), b.row(i)));
    for (int l = 1 - n; l <= n - 1; ++l) {
        GaussInt s{};
        for (const auto& c : cross) s = s + c.at(l);
        if (!s.is_zero()) return false;
    }
    return true;
}

bool is_mo_collection(std::span<const SeqMatrix> sets) {
    if (sets.empty()) return false;
    for (const auto& s : sets)
        if (!is_complementary_set(s)) return false;
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            if (!are_mates(sets[i], sets[j])) return false;
    return true;
}

bool is_mo_collection(const MoMatrix& mo) {
    const auto sets = mo.split();
    return is_mo_collection(std::span<const SeqMatrix>(sets));
}

bool is_mo_collection_up_to_duplicates(std::span<const SeqMatrix> sets) {
    if (sets.empty()) return false;
    for (const auto& s : sets)
        if (!is_complementary_set(s)) return false;
    for (size_t i = 0; i < sets.size(); ++i) {
        for (size_t j = i + 1; j < sets.size(); ++j) {
            if (sets[j] == sets[i] || sets[j] == sets[i].negated()) continue;
            if (!are_mates(sets[i], sets[j])) return false;
        }
    }
    return true;
}

bool is_mo_collection_up_to_duplicates(const MoMatrix& mo) {
    const auto sets = mo.split();
    return is_mo_collection_up_to_duplicates(std::span<const SeqMatrix>(sets));
}

std::optional<CompanionPair> is_companion_pair(const Seq& c0, const Seq& c1) {
    if (c0.size() != c1.size())
        throw DomainError("companion test requires equal lengths, got " +
                          std::to_string(c0.size()) + " and " + std::to_string(c1.size()));
    if (c0.size() % 2 != 0)
        throw DomainError("companion test requires even length, got " +
                          std::to_string(c0.size()));

    const int m = c0.size();
    // Row i of the m x 2 matrix is (c0[i], c1[i]); two rows x, y form a
    // length-2 complementary pair iff v_x = -v_y for v_i = c0[i]*conj(c1[i]).
    std::map<GaussInt, std::vector<int>> buckets;
    for (int i = 0; i < m; ++i) buckets[c0[i] * c1[i].conj()].push_back(i);

    std::vector<std::pair<int, int>> pairing;
    pairing.reserve(static_cast<size_t>(m / 2));
    for (const auto& [v, idx] : buckets) {
        if (v.is_zero()) {
            if (idx.size() % 2 != 0) return std::nullopt;
            for (size_t k = 0; k + 1 < idx.size(); k += 2)
                pairing.emplace_back(idx[k], idx[k + 1]);
            continue;
        }
        const GaussInt nv = -v;
        auto it = buckets.find(nv);
        if (it == buckets.end() || it->second.size() != idx.size()) return std::nullopt;
        if (nv < v) continue;  // class already paired at the smaller key
        for (size_t k = 0; k < idx.size(); ++k)
            pairing.emplace_back(std::min(idx[k], it->second[k]),
                                 std::max(idx[k], it->second[k]));
    }
    std::sort(pairing.begin(), pairing.end());
    return CompanionPair{c0, c1, std::move(pairing)};
}

std::vector<std::pair<int, int>> adjacent_pairing(int m) {
    if (m < 2 || m % 2 != 0) throw DomainError("pairing needs even length >= 2");
    std::vector<std::pair<int, int>> p;
    p.reserve(static_cast<size_t>(m / 2));
    for (int i = 0; i < m; i += 2) p.emplace_back(i, i + 1);
    return p;
}

std::vector<std::pair<int, int>> half_split_pairing(int m) {
    if (m < 2 || m % 2 != 0) throw DomainError("pairing needs even length >= 2");
    std::vector<std::pair<int, int>> p;
    p.reserve(static_cast<size_t>(m / 2));
    for (int i = 0; i < m / 2; ++i) p.emplace_back(i, i + m / 2);
    return p;
}

Seq make_companion(const Seq& c0, std::span<const std::pair<int, int>> pairing,
                   std::span<const CompanionSign> signs) {
    const int m = c0.size();
    if (m % 2 != 0) throw DomainError("companion construction requires even length");
    if (static_cast<int>(pairing.size()) != m / 2)
        throw DomainError("pairing must have m/2 pairs");
    if (!signs.empty() && signs.size() != pairing.size())
        throw DomainError("signs must match the pairing length");

    std::vector<bool> seen(static_cast<size_t>(m), false);
    for (auto [x, y] : pairing) {
        if (x < 0 || x >= m || y < 0 || y >= m || x == y || seen[static_cast<size_t>(x)] ||
            seen[static_cast<size_t>(y)])
            throw DomainError("pairing does not partition the index range");
        seen[static_cast<size_t>(x)] = seen[static_cast<size_t>(y)] = true;
    }

    std::vector<GaussInt> c1(static_cast<size_t>(m));
    for (size_t k = 0; k < pairing.size(); ++k) {
        auto [x, y] = pairing[k];
        const bool plus = signs.empty() || signs[k] == CompanionSign::Plus;
        const GaussInt cx = c0[x].conj();
        const GaussInt cy = c0[y].conj();
        c1[static_cast<size_t>(x)] = plus ? cy : -cy;
        c1[static_cast<size_t>(y)] = plus ? -cx : cx;
    }
    return Seq(std::move(c1), c0.alphabet());
}

bool is_golay_pair(const Seq& a, const Seq& b) {
    if (a.size() != b.size())
        throw DomainError("golay pair test requires equal lengths");
    return is_complementary_set(SeqMatrix({a, b}));
}

namespace {

constexpr int kGolayMaxLen = 20;
constexpr std::uint64_t kGolayMaxSpace = std::uint64_t{1} << 26;

}  // namespace

bool is_golay_sequence(const Seq& a) {
    const int n = a.size();
    const auto alpha = alphabet_elements(a.alphabet());
    if (n > kGolayMaxLen)
        throw CapabilityError("mate search capped at length " + std::to_string(kGolayMaxLen) +
                              ", got " + std::to_string(n));
    std::uint64_t space = 1;
    for (int i = 0; i < n; ++i) {
        space *= alpha.size();
        if (space > kGolayMaxSpace)
            throw CapabilityError("mate search space " + std::to_string(alpha.size()) + "^" +
                                  std::to_string(n) + " exceeds cap 2^26");
    }

    const auto target = aperiodic_acf(a);
    std::vector<size_t> digits(static_cast<size_t>(n), 0);
    std::vector<GaussInt> b(static_cast<size_t>(n), alpha[0]);
    for (std::uint64_t k = 0;; ++k) {
        // Longest lags first: a single product usually disqualifies.
        bool ok = true;
        for (int l = n - 1; l >= 1 && ok; --l) {
            GaussInt s{};
            for (int i = 0; i + l < n; ++i)
                s = s + b[static_cast<size_t>(i)] * b[static_cast<size_t>(i + l)].conj();
            ok = (s + target.at(l)).is_zero();
        }
        if (ok) return true;
        // odometer increment
        int pos = n - 1;
        while (pos >= 0) {
            auto& d = digits[static_cast<size_t>(pos)];
            if (++d < alpha.size()) {
                b[static_cast<size_t>(pos)] = alpha[d];
                break;
            }
            d = 0;
            b[static_cast<size_t>(pos)] = alpha[0];
            --pos;
        }
        if (pos < 0) return false;
    }
}

}  // namespace compseq
