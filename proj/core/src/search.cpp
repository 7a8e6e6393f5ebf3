#include "compseq/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <future>
#include <mutex>
#include <random>
#include <thread>

namespace compseq {

const char* to_string(MeritKind k) {
    switch (k) {
        case MeritKind::LambdaA: return "lambdaA";
        case MeritKind::SA: return "SA";
        case MeritKind::LambdaP: return "lambdaP";
        case MeritKind::SP: return "SP";
    }
    return "?";
}

MeritKind merit_kind_from_string(std::string_view name) {
    if (name == "lambdaA" || name == "lambda_A") return MeritKind::LambdaA;
    if (name == "SA" || name == "S_A") return MeritKind::SA;
    if (name == "lambdaP" || name == "lambda_P") return MeritKind::LambdaP;
    if (name == "SP" || name == "S_P") return MeritKind::SP;
    throw DomainError("unknown merit kind '" + std::string(name) + "'");
}

namespace {

std::uint64_t space_size(Alphabet alphabet, int m, std::uint64_t cap) {
    const std::uint64_t base = alphabet_elements(alphabet).size();
    std::uint64_t space = 1;
    for (int i = 0; i < m; ++i) {
        if (space > cap / base + 1) return cap + 1;
        space *= base;
        if (space > cap) return cap + 1;
    }
    return space;
}

// Candidate index -> sequence elements, most significant digit first, so
// numeric index order is lexicographic order in the alphabet element order.
std::vector<GaussInt> candidate_elems(std::uint64_t index, int m,
                                      const std::vector<GaussInt>& alpha) {
    std::vector<GaussInt> v(static_cast<size_t>(m));
    const std::uint64_t base = alpha.size();
    for (int i = m - 1; i >= 0; --i) {
        v[static_cast<size_t>(i)] = alpha[index % base];
        index /= base;
    }
    return v;
}

// ---- exact profile machinery -------------------------------------------

using Profile = std::vector<GaussInt>;  // aperiodic ACF, lags 0..len-1

Profile acf_profile(std::span<const GaussInt> a) {
    const int n = static_cast<int>(a.size());
    Profile p(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l) {
        GaussInt s{};
        for (int i = 0; i + l < n; ++i) s = s + a[static_cast<size_t>(i)] * a[static_cast<size_t>(i + l)].conj();
        p[static_cast<size_t>(l)] = s;
    }
    return p;
}

GaussInt profile_at(const Profile& p, int lag) {
    if (lag < 0 || lag >= static_cast<int>(p.size())) return kZero;
    return p[static_cast<size_t>(lag)];
}

// Doubled-sequence profiles: 2A(l) +/- conj(A(s-l)) then +/-A(l-s).
Profile double_profile(const Profile& a, bool plus) {
    const int s = static_cast<int>(a.size());
    Profile out(static_cast<size_t>(2 * s));
    for (int l = 0; l < s; ++l) {
        const GaussInt tail = profile_at(a, s - l).conj();
        const GaussInt two = a[static_cast<size_t>(l)] + a[static_cast<size_t>(l)];
        out[static_cast<size_t>(l)] = plus ? two + tail : two - tail;
    }
    for (int l = s; l < 2 * s; ++l) {
        const GaussInt base = a[static_cast<size_t>(l - s)];
        out[static_cast<size_t>(l)] = plus ? base : -base;
    }
    return out;
}

bool profile_merit_ok(const Profile& p, MeritKind kind, double bound) {
    const int n = static_cast<int>(p.size());
    switch (kind) {
        case MeritKind::LambdaA: {
            const double b2 = bound * bound;
            for (int l = 1; l < n; ++l)
                if (static_cast<double>(p[static_cast<size_t>(l)].norm()) > b2) return false;
            return true;
        }
        case MeritKind::LambdaP: {
            const double b2 = bound * bound;
            for (int l = 1; l < n; ++l) {
                const GaussInt v = p[static_cast<size_t>(l)] + profile_at(p, n - l).conj();
                if (static_cast<double>(v.norm()) > b2) return false;
            }
            return true;
        }
        case MeritKind::SA: {
            double s = 0;
            for (int l = 1; l < n; ++l)
                s += std::sqrt(static_cast<double>(p[static_cast<size_t>(l)].norm()));
            return s <= bound;
        }
        case MeritKind::SP: {
            double s = 0;
            for (int l = 1; l < n; ++l) {
                const GaussInt v = p[static_cast<size_t>(l)] + profile_at(p, n - l).conj();
                s += std::sqrt(static_cast<double>(v.norm()));
            }
            return s <= bound;
        }
    }
    return false;
}

double profile_merit(const Profile& p, MeritKind kind) {
    const int n = static_cast<int>(p.size());
    switch (kind) {
        case MeritKind::LambdaA: {
            std::uint64_t best = 0;
            for (int l = 1; l < n; ++l) best = std::max(best, p[static_cast<size_t>(l)].norm());
            return std::sqrt(static_cast<double>(best));
        }
        case MeritKind::LambdaP: {
            std::uint64_t best = 0;
            for (int l = 1; l < n; ++l) {
                const GaussInt v = p[static_cast<size_t>(l)] + profile_at(p, n - l).conj();
                best = std::max(best, v.norm());
            }
            return std::sqrt(static_cast<double>(best));
        }
        case MeritKind::SA: {
            double s = 0;
            for (int l = 1; l < n; ++l)
                s += std::sqrt(static_cast<double>(p[static_cast<size_t>(l)].norm()));
            return s;
        }
        case MeritKind::SP: {
            double s = 0;
            for (int l = 1; l < n; ++l) {
                const GaussInt v = p[static_cast<size_t>(l)] + profile_at(p, n - l).conj();
                s += std::sqrt(static_cast<double>(v.norm()));
            }
            return s;
        }
    }
    return 0;
}

// Every member of the level-t sign-block set satisfies the constraint.
// Level-v profiles are carried through the doubling recursion; negations
// share profiles, so level t has 2^t of them.
bool rset_constraint_ok(const Profile& base, int t, MeritKind kind, double bound) {
    std::vector<Profile> cur{base};
    for (int v = 0; v < t; ++v) {
        std::vector<Profile> next;
        next.reserve(cur.size() * 2);
        for (const auto& p : cur) {
            next.push_back(double_profile(p, false));
            next.push_back(double_profile(p, true));
        }
        cur = std::move(next);
    }
    for (const auto& p : cur)
        if (!profile_merit_ok(p, kind, bound)) return false;
    return true;
}

// ---- binary fast path ----------------------------------------------------
//
// Candidates walk in Gray-code order so each step flips one element and the
// base ACF updates in O(m) instead of O(m^2). Retained candidate values are
// sorted afterwards, which restores lexicographic semantics.

struct BinaryScanner {
    int m;
    std::vector<std::int8_t> a;    // +/-1 elements
    std::vector<std::int64_t> A;   // aperiodic ACF, lags 0..m-1
    mutable Profile scratch;       // reused per-candidate profile view

    explicit BinaryScanner(int m_)
        : m(m_),
          a(static_cast<size_t>(m_)),
          A(static_cast<size_t>(m_)),
          scratch(static_cast<size_t>(m_)) {}

    void load(std::uint64_t bits) {
        for (int i = 0; i < m; ++i)
            a[static_cast<size_t>(i)] = (bits >> (m - 1 - i)) & 1 ? -1 : 1;
        for (int l = 0; l < m; ++l) {
            std::int64_t s = 0;
            for (int i = 0; i + l < m; ++i)
                s += std::int64_t{a[static_cast<size_t>(i)]} * a[static_cast<size_t>(i + l)];
            A[static_cast<size_t>(l)] = s;
        }
    }

    void flip(int pos) {
        const std::int64_t old = a[static_cast<size_t>(pos)];
        for (int l = 1; l < m; ++l) {
            std::int64_t d = 0;
            if (pos + l < m) d += a[static_cast<size_t>(pos + l)];
            if (pos - l >= 0) d += a[static_cast<size_t>(pos - l)];
            A[static_cast<size_t>(l)] -= 2 * old * d;
        }
        a[static_cast<size_t>(pos)] = static_cast<std::int8_t>(-old);
    }

    const Profile& profile() const {
        for (int l = 0; l < m; ++l)
            scratch[static_cast<size_t>(l)] = GaussInt{A[static_cast<size_t>(l)], 0};
        return scratch;
    }
};

std::uint64_t gray(std::uint64_t j) { return j ^ (j >> 1); }

// Scans Gray positions [begin, end), appending values that pass `keep`.
template <typename Keep>
void binary_scan(int m, std::uint64_t begin, std::uint64_t end, Keep&& keep,
                 std::vector<std::uint64_t>& out) {
    if (begin >= end) return;
    BinaryScanner scan(m);
    std::uint64_t bits = gray(begin);
    scan.load(bits);
    for (std::uint64_t j = begin;;) {
        if (keep(scan)) out.push_back(bits);
        if (++j >= end) break;
        const int bit = std::countr_zero(j);          // Gray transition
        const int pos = m - 1 - bit;
        bits ^= std::uint64_t{1} << bit;
        scan.flip(pos);
    }
}

Seq seq_from_bits(std::uint64_t bits, int m) {
    std::vector<GaussInt> v(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        v[static_cast<size_t>(i)] = (bits >> (m - 1 - i)) & 1 ? kMinusOne : kOne;
    return Seq(std::move(v), Alphabet::Binary);
}

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Enumerates candidate indices [0, space) over `jobs` workers and returns
// the passing values merged in increasing (lexicographic) order.
std::vector<std::uint64_t> enumerate_retained(Alphabet alphabet, int m, std::uint64_t space,
                                              int jobs,
                                              const std::function<bool(const Profile&)>& pass) {
    jobs = std::max(1, std::min<int>(resolve_jobs(jobs), static_cast<int>(space / 1024) + 1));
    const auto alpha = alphabet_elements(alphabet);
    const bool binary = alphabet == Alphabet::Binary;

    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t> local;
        if (binary) {
            binary_scan(
                m, lo, hi, [&](const BinaryScanner& s) { return pass(s.profile()); }, local);
        } else {
            for (std::uint64_t k = lo; k < hi; ++k) {
                const auto elems = candidate_elems(k, m, alpha);
                if (pass(acf_profile(elems))) local.push_back(k);
            }
        }
        return local;
    };

    std::vector<std::uint64_t> retained;
    if (jobs == 1) {
        retained = worker(0, space);
    } else {
        std::vector<std::future<std::vector<std::uint64_t>>> futs;
        const std::uint64_t chunk = (space + jobs - 1) / jobs;
        for (int w = 0; w < jobs; ++w) {
            const std::uint64_t lo = std::min(space, w * chunk);
            const std::uint64_t hi = std::min(space, lo + chunk);
            futs.push_back(std::async(std::launch::async, worker, lo, hi));
        }
        for (auto& f : futs) {
            auto part = f.get();
            retained.insert(retained.end(), part.begin(), part.end());
        }
    }
    std::sort(retained.begin(), retained.end());
    return retained;
}

Seq candidate_seq(std::uint64_t value, Alphabet alphabet, int m) {
    if (alphabet == Alphabet::Binary) return seq_from_bits(value, m);
    return Seq(candidate_elems(value, m, alphabet_elements(alphabet)), alphabet);
}

}  // namespace

SearchResult exhaustive_search(const SearchConfig& cfg) {
    if (!cfg.constraint) throw DomainError("exhaustive search needs a constraint");
    if (cfg.m < 2 || cfg.m % 2 != 0) throw DomainError("m must be even and >= 2");
    if (cfg.t < 0) throw DomainError("t must be nonnegative");

    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t space = space_size(cfg.alphabet, cfg.m, cfg.budget.max_candidates);
    if (space > cfg.budget.max_candidates)
        throw CapabilityError("candidate space exceeds the exhaustive cap of " +
                              std::to_string(cfg.budget.max_candidates) + " candidates");

    const MeritKind kind = cfg.constraint->kind;
    const double bound = cfg.constraint->bound;
    const int t = cfg.t;
    auto pass = std::function<bool(const Profile&)>(
        [&](const Profile& p) { return rset_constraint_ok(p, t, kind, bound); });

    const auto retained = enumerate_retained(cfg.alphabet, cfg.m, space, cfg.jobs, pass);

    SearchResult res;
    res.candidates_examined = space;
    res.retained = retained.size();

    std::vector<Seq> seqs;
    seqs.reserve(retained.size());
    for (auto v : retained) seqs.push_back(candidate_seq(v, cfg.alphabet, cfg.m));

    const bool binary = cfg.alphabet == Alphabet::Binary;
    const int half = cfg.m / 2;
    for (size_t j = 0; j < seqs.size(); ++j) {
        for (size_t l = 0; l < j; ++l) {
            bool companion;
            if (binary) {
                companion = std::popcount(retained[l] ^ retained[j]) == half;
            } else {
                companion = is_companion_pair(seqs[l], seqs[j]).has_value();
            }
            if (companion)
                res.pairs.push_back(
                    FoundPair{seqs[l], seqs[j], merits(seqs[l]), merits(seqs[j])});
        }
    }
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

SearchResult min_constraint_search(Alphabet alphabet, int m, MeritKind kind, int jobs,
                                   std::uint64_t max_candidates) {
    if (m < 2 || m % 2 != 0) throw DomainError("m must be even and >= 2");
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t space = space_size(alphabet, m, max_candidates);
    if (space > max_candidates)
        throw CapabilityError("candidate space exceeds the exhaustive cap of " +
                              std::to_string(max_candidates) + " candidates");

    // Distinct merit values, ascending. These are few (peaks are at most m,
    // sums at most ~m^2), so one stats pass keeps memory flat.
    std::vector<double> values;
    {
        std::mutex mu;
        std::vector<double> all;
        auto collect = std::function<bool(const Profile&)>([&](const Profile& p) {
            const double v = profile_merit(p, kind);
            std::lock_guard<std::mutex> lock(mu);
            all.push_back(v);
            return false;
        });
        enumerate_retained(alphabet, m, space, jobs, collect);
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        values = std::move(all);
    }

    SearchResult res;
    res.candidates_examined = space;
    for (const double v : values) {
        auto pass = std::function<bool(const Profile&)>(
            [&](const Profile& p) { return profile_merit(p, kind) <= v; });
        const auto retained = enumerate_retained(alphabet, m, space, jobs, pass);
        res.retained = retained.size();

        std::vector<Seq> seqs;
        seqs.reserve(retained.size());
        for (auto val : retained) seqs.push_back(candidate_seq(val, alphabet, m));

        const bool binary = alphabet == Alphabet::Binary;
        const int half = m / 2;
        for (size_t j = 0; j < seqs.size(); ++j) {
            for (size_t l = 0; l < j; ++l) {
                bool companion;
                if (binary) {
                    companion = std::popcount(retained[l] ^ retained[j]) == half;
                } else {
                    companion = is_companion_pair(seqs[l], seqs[j]).has_value();
                }
                if (companion)
                    res.pairs.push_back(
                        FoundPair{seqs[l], seqs[j], merits(seqs[l]), merits(seqs[j])});
            }
        }
        if (!res.pairs.empty()) {
            res.achieved_minimum = v;
            break;
        }
    }
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

CompanionPair case1_lift(const Seq& s0, const Seq& s1) {
    if (s0.size() != s1.size()) throw DomainError("lift requires equal lengths");
    const Seq c0 = interleave(s0, s1);
    const Seq c1 = interleave(conjugate(s1), negate(conjugate(s0)));
    auto w = is_companion_pair(c0, c1);
    if (!w) throw DomainError("interleaved lift did not produce a companion pair");
    return *w;
}

CompanionPair case2_lift(const Seq& s0, const Seq& s1) {
    if (s0.size() != s1.size()) throw DomainError("lift requires equal lengths");
    const Seq c0 = concat(s0, s1);
    const Seq c1 = concat(conjugate(s1), negate(conjugate(s0)));
    auto w = is_companion_pair(c0, c1);
    if (!w) throw DomainError("concatenated lift did not produce a companion pair");
    return *w;
}

// ---- simulated annealing --------------------------------------------------

namespace {

struct AnnealState {
    int n;
    std::vector<std::int8_t> s0, s1;
    std::vector<std::int64_t> A0, A1;  // autocorrelations, lags 0..n-1
    std::vector<std::int64_t> X;       // cross, lag l at index l+n-1

    explicit AnnealState(int n_)
        : n(n_),
          s0(static_cast<size_t>(n_)),
          s1(static_cast<size_t>(n_)),
          A0(static_cast<size_t>(n_)),
          A1(static_cast<size_t>(n_)),
          X(static_cast<size_t>(2 * n_ - 1)) {}

    void randomize(std::mt19937_64& rng) {
        for (auto& v : s0) v = (rng() & 1) ? 1 : -1;
        for (auto& v : s1) v = (rng() & 1) ? 1 : -1;
        recompute();
    }

    void recompute() {
        for (int l = 0; l < n; ++l) {
            std::int64_t a = 0, b = 0;
            for (int i = 0; i + l < n; ++i) {
                a += std::int64_t{s0[static_cast<size_t>(i)]} * s0[static_cast<size_t>(i + l)];
                b += std::int64_t{s1[static_cast<size_t>(i)]} * s1[static_cast<size_t>(i + l)];
            }
            A0[static_cast<size_t>(l)] = a;
            A1[static_cast<size_t>(l)] = b;
        }
        for (int l = -(n - 1); l <= n - 1; ++l) {
            std::int64_t x = 0;
            if (l >= 0) {
                for (int i = 0; i + l < n; ++i)
                    x += std::int64_t{s0[static_cast<size_t>(i)]} * s1[static_cast<size_t>(i + l)];
            } else {
                for (int i = 0; i - l < n; ++i)
                    x += std::int64_t{s0[static_cast<size_t>(i - l)]} * s1[static_cast<size_t>(i)];
            }
            X[static_cast<size_t>(l + n - 1)] = x;
        }
    }

    // Flip element `pos` of sequence `which`, updating correlations in O(n).
    void flip(int which, int pos) {
        auto& s = which == 0 ? s0 : s1;
        auto& A = which == 0 ? A0 : A1;
        const std::int64_t old = s[static_cast<size_t>(pos)];
        for (int l = 1; l < n; ++l) {
            std::int64_t d = 0;
            if (pos + l < n) d += s[static_cast<size_t>(pos + l)];
            if (pos - l >= 0) d += s[static_cast<size_t>(pos - l)];
            A[static_cast<size_t>(l)] -= 2 * old * d;
        }
        if (which == 0) {
            // s0[pos] appears in X(l) paired with s1[pos+l].
            for (int l = -(n - 1); l <= n - 1; ++l) {
                const int j = pos + l;
                if (j >= 0 && j < n)
                    X[static_cast<size_t>(l + n - 1)] -= 2 * old * s1[static_cast<size_t>(j)];
            }
        } else {
            // s1[pos] appears in X(l) paired with s0[pos-l].
            for (int l = -(n - 1); l <= n - 1; ++l) {
                const int i = pos - l;
                if (i >= 0 && i < n)
                    X[static_cast<size_t>(l + n - 1)] -= 2 * std::int64_t{s0[static_cast<size_t>(i)]} * old;
            }
        }
        s[static_cast<size_t>(pos)] = static_cast<std::int8_t>(-old);
    }

    std::int64_t cost() const {
        std::int64_t l0 = 0, l1 = 0, lx = 0;
        for (int l = 1; l < n; ++l) {
            l0 = std::max(l0, std::abs(A0[static_cast<size_t>(l)]));
            l1 = std::max(l1, std::abs(A1[static_cast<size_t>(l)]));
        }
        for (const auto x : X) lx = std::max(lx, std::abs(x));
        return std::max(l0 + l1, 2 * lx);
    }

    Seq seq(int which) const {
        const auto& s = which == 0 ? s0 : s1;
        std::vector<GaussInt> v;
        v.reserve(s.size());
        for (auto e : s) v.push_back(e > 0 ? kOne : kMinusOne);
        return Seq(std::move(v), Alphabet::Binary);
    }
};

}  // namespace

AnnealResult anneal_pair(int half_len, Alphabet alphabet, const SearchBudget& budget,
                         std::uint64_t rng_seed) {
    if (alphabet != Alphabet::Binary)
        throw DomainError("annealing is defined for the binary alphabet");
    if (half_len < 2) throw DomainError("half length must be at least 2");

    const std::uint64_t max_evals =
        budget.max_iterations ? budget.max_iterations : std::uint64_t{5'000'000};
    const auto start = std::chrono::steady_clock::now();
    const double wall_cap = budget.wall_clock_seconds;

    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    AnnealState state(half_len);
    state.randomize(rng);
    std::int64_t cur_cost = state.cost();

    AnnealResult best{state.seq(0), state.seq(1), cur_cost, 0, {}};
    best.history.push_back({0, static_cast<double>(half_len), cur_cost, false});

    const double t0 = static_cast<double>(half_len);
    const double cooling = 0.995;
    const std::uint64_t sweep = static_cast<std::uint64_t>(2 * half_len);
    const std::uint64_t stagnation_window = std::uint64_t{10} * half_len * sweep;

    double temperature = t0;
    std::uint64_t since_best = 0;
    std::uint64_t evals = 0;

    while (evals < max_evals) {
        if (wall_cap > 0 && (evals & 0xFFFF) == 0) {
            const double dt =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (dt > wall_cap) break;
        }
        const int which = static_cast<int>(evals & 1);
        const int pos = static_cast<int>(rng() % static_cast<std::uint64_t>(half_len));
        state.flip(which, pos);
        const std::int64_t new_cost = state.cost();
        ++evals;
        ++since_best;

        const std::int64_t delta = new_cost - cur_cost;
        bool accept = delta <= 0;
        if (!accept) {
            accept = unit(rng) < std::exp(-static_cast<double>(delta) / temperature);
        }
        if (accept) {
            cur_cost = new_cost;
            if (cur_cost < best.cost) {
                best.cost = cur_cost;
                best.s0 = state.seq(0);
                best.s1 = state.seq(1);
                if (best.history.size() < 10000)
                    best.history.push_back({evals, temperature, cur_cost, false});
                since_best = 0;
            }
        } else {
            state.flip(which, pos);  // exact revert
        }

        if (evals % sweep == 0) temperature *= cooling;

        if (since_best >= stagnation_window && evals + sweep < max_evals) {
            state.randomize(rng);
            cur_cost = state.cost();
            temperature = t0;
            since_best = 0;
            if (best.history.size() < 10000)
                best.history.push_back({evals, temperature, cur_cost, true});
        }
    }
    best.evaluations = evals;
    return best;
}

}  // namespace compseq
