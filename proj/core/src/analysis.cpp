#include "compseq/analysis.hpp"

#include <cmath>

namespace compseq {

namespace {

SumMerit max_sum(const SumMerit& a, const SumMerit& b) {
    // Exact integer comparison when both sides are exact.
    if (a.exact && b.exact) return a.integer_value >= b.integer_value ? a : b;
    return a.value() >= b.value() ? a : b;
}

ColumnReport report_from_columns(const SeqMatrix& m) {
    ColumnReport rep;
    rep.columns.reserve(static_cast<size_t>(m.cols()));
    rep.zero_counts.reserve(static_cast<size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) {
        const Seq col = m.column(j);
        rep.columns.push_back(merits(col));
        rep.zero_counts.push_back(col.zero_count());
        const auto& r = rep.columns.back();
        rep.lambda_A_max = std::max(rep.lambda_A_max, r.lambda_A);
        rep.lambda_P_max = std::max(rep.lambda_P_max, r.lambda_P);
        rep.S_A_max = max_sum(rep.S_A_max, r.S_A);
        rep.S_P_max = max_sum(rep.S_P_max, r.S_P);
    }
    return rep;
}

std::int64_t pow2(int t) {
    if (t < 0 || t > 40) throw DomainError("extension level out of range");
    return std::int64_t{1} << t;
}

}  // namespace

ColumnReport column_report(const SeqMatrix& m) { return report_from_columns(m); }

ColumnReport column_report(const MoMatrix& mo) { return report_from_columns(mo.matrix); }

namespace {

// A'(l) = 2A(l) + sign*conj(A(s-l)) for l < s; sign*A(l-s) for s <= l < 2s.
CorrelationProfile double_profile(const CorrelationProfile& a, int s, bool plus) {
    std::vector<GaussInt> v(static_cast<size_t>(2 * s));
    for (int l = 0; l < s; ++l) {
        const GaussInt tail = a.at(s - l).conj();
        const GaussInt two = a.at(l) + a.at(l);
        v[static_cast<size_t>(l)] = plus ? two + tail : two - tail;
    }
    for (int l = s; l < 2 * s; ++l) {
        const GaussInt base = a.at(l - s);
        v[static_cast<size_t>(l)] = plus ? base : -base;
    }
    return {CorrKind::AperiodicAuto, 0, std::move(v)};
}

}  // namespace

std::vector<CorrelationProfile> recursive_column_acf(const Seq& c0, const Seq& c1,
                                                     const BuildRecipe& recipe) {
    if (!is_companion_pair(c0, c1)) throw DomainError("sequences are not a companion pair");

    // Which of the two seeds each column of C^(p) carries (up to sign):
    // concatenation repeats the pattern, interleaving duplicates in place,
    // and the mate's columns mirror those of C^(p).
    std::vector<int> ids{0, 1};
    for (const auto mode : recipe.length_modes) {
        std::vector<int> next;
        next.reserve(ids.size() * 2);
        if (mode == ExtendMode::Concat) {
            next = ids;
            next.insert(next.end(), ids.begin(), ids.end());
        } else {
            for (int id : ids) {
                next.push_back(id);
                next.push_back(id);
            }
        }
        ids = std::move(next);
    }
    ids.insert(ids.end(), ids.begin(), ids.end());

    const CorrelationProfile base0 = aperiodic_acf(c0);
    const CorrelationProfile base1 = aperiodic_acf(c1);
    std::vector<CorrelationProfile> cur;
    cur.reserve(ids.size());
    for (int id : ids) cur.push_back(id == 0 ? base0 : base1);

    int s = c0.size();
    for (const auto mode : recipe.size_modes) {
        const size_t r = cur.size();
        std::vector<CorrelationProfile> next(4 * r, cur.front());
        for (size_t i = 0; i < r; ++i) {
            CorrelationProfile minus = double_profile(cur[i], s, /*plus=*/false);
            CorrelationProfile plus = double_profile(cur[i], s, /*plus=*/true);
            if (mode == ExtendMode::Concat) {
                next[i] = minus;
                next[i + 2 * r] = std::move(minus);
                next[i + r] = plus;
                next[i + 3 * r] = std::move(plus);
            } else {
                next[2 * i] = minus;
                next[2 * r + 2 * i] = std::move(minus);
                next[2 * i + 1] = plus;
                next[2 * r + 2 * i + 1] = std::move(plus);
            }
        }
        cur = std::move(next);
        s *= 2;
    }
    return cur;
}

double sufficient_S_A(int t, double S0, double E) {
    const double lead = std::ldexp(S0, 2 * t);  // 4^t S0
    const double tail = (t == 0) ? 0.0 : std::ldexp(static_cast<double>(pow2(t) - 1), t - 1) * E;
    return lead + tail;
}

double sufficient_lambda_A(int t, double lambda0, double E) {
    return std::max(static_cast<double>(pow2(t) - 1) * E,
                    static_cast<double>(pow2(t + 1) - 1) * lambda0);
}

double necessary_lambda_A(int t, double E) {
    return static_cast<double>(pow2(t) - 1) * E;
}

double lambda0_threshold(int t, double E) {
    return static_cast<double>(pow2(t) - 1) / static_cast<double>(pow2(t + 1) - 1) * E;
}

WelchBounds welch_bounds(int N, int K) {
    if (N < 1 || K < 2) throw DomainError("welch bounds need N >= 1 and K >= 2");
    const double n = N, k = K;
    WelchBounds w;
    w.aperiodic = n * std::sqrt((k - 1) / (2 * n * k - k - 1));
    w.periodic = n * std::sqrt((k - 1) / (n * k - 1));
    return w;
}

ExistenceThresholds existence_thresholds(int m) {
    if (m < 4 || m % 2 != 0) throw DomainError("existence thresholds need even m >= 4");
    ExistenceThresholds e;
    const double md = m;
    e.lambda_A = md / std::sqrt(2 * md - 3);
    e.lambda_P = md / std::sqrt(md - 1);
    // ceil(m/sqrt(2m-3)) by integer comparison: smallest L with L^2(2m-3) >= m^2.
    const std::int64_t mm = std::int64_t{m} * m;
    const std::int64_t d = 2 * std::int64_t{m} - 3;
    std::int64_t L = static_cast<std::int64_t>(std::floor(e.lambda_A));
    while (L * L * d < mm) ++L;
    while (L > 1 && (L - 1) * (L - 1) * d >= mm) --L;
    e.lambda_W_A = L;
    return e;
}

double lambda_B(const Seq& s0, const Seq& s1) {
    const MeritReport a = merits(s0);
    const MeritReport b = merits(s1);
    const MeritReport x = cross_merits(s0, s1);
    return std::max(a.lambda_A.value() + b.lambda_A.value(), 2 * x.lambda_A.value());
}

CaseBounds case_bounds(const Seq& s0, const Seq& s1) {
    const MeritReport a = merits(s0);
    const MeritReport b = merits(s1);
    const MeritReport x = cross_merits(s0, s1);
    CaseBounds c;
    c.lambda_A = std::max(a.lambda_A.value() + b.lambda_A.value(), 2 * x.lambda_A.value());
    c.lambda_P = std::max(a.lambda_P.value() + b.lambda_P.value(), 2 * x.lambda_P.value());
    c.S_A = a.S_A.value() + b.S_A.value() + x.S_A.value();
    c.S_P = a.S_P.value() + b.S_P.value() + 2 * x.S_P.value();
    c.lambda_A_concat = a.lambda_A.value() + b.lambda_A.value() + x.lambda_A.value();
    return c;
}

namespace {

DecompositionCheck fail(int lag, std::string identity) {
    DecompositionCheck d;
    d.ok = false;
    d.lag = lag;
    d.identity = std::move(identity);
    return d;
}

}  // namespace

DecompositionCheck case1_decomposition_check(const Seq& s0, const Seq& s1) {
    if (s0.size() != s1.size()) throw DomainError("decomposition check needs equal lengths");
    const int half = s0.size();
    const int m = 2 * half;

    const Seq c0 = interleave(s0, s1);
    const Seq c1c = interleave(s1, negate(s0));  // conj(c1) for the interleaved lift

    const auto A0 = aperiodic_acf(s0);
    const auto A1 = aperiodic_acf(s1);
    const auto Ax = aperiodic_ccf(s0, s1);
    const auto P0 = periodic_acf(s0);
    const auto P1 = periodic_acf(s1);
    const auto Px = periodic_ccf(s0, s1);

    const auto dA0 = aperiodic_acf(c0);
    const auto dA1 = aperiodic_acf(c1c);
    const auto dP0 = periodic_acf(c0);
    const auto dP1 = periodic_acf(c1c);

    auto pmod = [&](int l) { return ((l % half) + half) % half; };

    for (int l = 0; l < m; ++l) {
        GaussInt a0, a1, p0, p1;
        if (l % 2 == 0) {
            const GaussInt even = A0.at(l / 2) + A1.at(l / 2);
            a0 = a1 = even;
            p0 = p1 = P0.at(l / 2) + P1.at(l / 2);
        } else {
            a0 = Ax.at((l - 1) / 2) + Ax.at((-l - 1) / 2);
            a1 = -(Ax.at((l + 1) / 2) + Ax.at((-l + 1) / 2));
            p0 = Px.at(pmod((l - 1) / 2)) + Px.at(pmod((m - l - 1) / 2));
            p1 = -(Px.at(pmod((l + 1) / 2)) + Px.at(pmod((m - l + 1) / 2)));
        }
        if (dA0.at(l) != a0) return fail(l, "aperiodic, first sequence");
        if (dA1.at(l) != a1) return fail(l, "aperiodic, companion conjugate");
        if (dP0.at(l) != p0) return fail(l, "periodic, first sequence");
        if (dP1.at(l) != p1) return fail(l, "periodic, companion conjugate");
    }
    return {};
}

DecompositionCheck case2_decomposition_check(const Seq& s0, const Seq& s1) {
    if (s0.size() != s1.size()) throw DomainError("decomposition check needs equal lengths");
    const int half = s0.size();
    const int m = 2 * half;

    const Seq c0 = concat(s0, s1);
    const Seq c1 = conjugate(concat(s1, negate(s0)));

    const auto A0 = aperiodic_acf(s0);
    const auto A1 = aperiodic_acf(s1);
    const auto Ax = aperiodic_ccf(s0, s1);
    const auto dA0 = aperiodic_acf(c0);
    const auto dA1 = aperiodic_acf(c1);

    for (int l = 0; l < m; ++l) {
        GaussInt e0, e1;
        if (l < half) {
            const GaussInt autos = A0.at(l) + A1.at(l);
            e0 = autos + Ax.at(l - half);
            e1 = autos - Ax.at(half - l);
        } else {
            e0 = Ax.at(l - half);
            e1 = -Ax.at(half - l);
        }
        if (dA0.at(l) != e0) return fail(l, "aperiodic, concatenated");
        if (dA1.at(l) != e1) return fail(l, "aperiodic, concatenated companion");
    }
    return {};
}

BoundReport bound_report(int m, int t, double E, std::optional<double> lambda0,
                         std::optional<double> S0) {
    BoundReport r;
    r.m = m;
    r.t = t;
    r.E = E;
    if (S0) r.sufficient_S_A = sufficient_S_A(t, *S0, E);
    if (lambda0) r.sufficient_lambda_A = sufficient_lambda_A(t, *lambda0, E);
    r.necessary_lambda_A = necessary_lambda_A(t, E);
    r.lambda_min_t = necessary_lambda_A(t, E);
    r.threshold_lambda0 = lambda0_threshold(t, E);
    const auto e = existence_thresholds(m);
    r.welch_A = e.lambda_A;
    r.welch_P = e.lambda_P;
    r.lambda_W_A = e.lambda_W_A;
    return r;
}

}  // namespace compseq
