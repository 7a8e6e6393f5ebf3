#include "compseq/correlation.hpp"

#include <cmath>

namespace compseq {

CorrelationProfile::CorrelationProfile(CorrKind kind, int lo, std::vector<GaussInt> values)
    : kind_(kind), lo_(lo), values_(std::move(values)) {
    if (values_.empty()) throw DomainError("empty correlation profile");
}

GaussInt CorrelationProfile::at(int lag) const {
    if (lag < lo_ || lag > hi()) return kZero;
    return values_[static_cast<size_t>(lag - lo_)];
}

CorrelationProfile aperiodic_acf(const Seq& a) {
    const int n = a.size();
    std::vector<GaussInt> v(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l) {
        GaussInt s{};
        for (int i = 0; i + l < n; ++i) s = s + a[i] * a[i + l].conj();
        v[static_cast<size_t>(l)] = s;
    }
    return {CorrKind::AperiodicAuto, 0, std::move(v)};
}

CorrelationProfile periodic_acf(const Seq& a) {
    const int n = a.size();
    std::vector<GaussInt> v(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l) {
        GaussInt s{};
        for (int i = 0; i < n; ++i) s = s + a[i] * a[(i + l) % n].conj();
        v[static_cast<size_t>(l)] = s;
    }
    return {CorrKind::PeriodicAuto, 0, std::move(v)};
}

CorrelationProfile aperiodic_ccf(const Seq& a, const Seq& b) {
    if (a.size() != b.size())
        throw DomainError("crosscorrelation requires equal lengths, got " +
                          std::to_string(a.size()) + " and " + std::to_string(b.size()));
    const int n = a.size();
    std::vector<GaussInt> v(static_cast<size_t>(2 * n - 1));
    for (int l = 1 - n; l <= n - 1; ++l) {
        GaussInt s{};
        if (l >= 0) {
            for (int i = 0; i + l < n; ++i) s = s + a[i] * b[i + l].conj();
        } else {
            for (int i = 0; i + (-l) < n; ++i) s = s + a[i - l] * b[i].conj();
        }
        v[static_cast<size_t>(l + n - 1)] = s;
    }
    return {CorrKind::AperiodicCross, 1 - n, std::move(v)};
}

CorrelationProfile periodic_ccf(const Seq& a, const Seq& b) {
    if (a.size() != b.size())
        throw DomainError("crosscorrelation requires equal lengths, got " +
                          std::to_string(a.size()) + " and " + std::to_string(b.size()));
    const int n = a.size();
    std::vector<GaussInt> v(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l) {
        GaussInt s{};
        for (int i = 0; i < n; ++i) s = s + a[i] * b[(i + l) % n].conj();
        v[static_cast<size_t>(l)] = s;
    }
    return {CorrKind::PeriodicCross, 0, std::move(v)};
}

double PeakMerit::value() const { return std::sqrt(static_cast<double>(mag_sq)); }

std::uint64_t PeakMerit::integer() const {
    std::uint64_t r = isqrt(mag_sq);
    if (r * r != mag_sq)
        throw DomainError("merit " + std::to_string(mag_sq) + " has no integer magnitude");
    return r;
}

PeakMerit peak_merit(const CorrelationProfile& p, bool exclude_zero_lag) {
    std::uint64_t best = 0;
    for (int l = p.lo(); l <= p.hi(); ++l) {
        if (exclude_zero_lag && l == 0) continue;
        best = std::max(best, p.at(l).norm());
    }
    return {best};
}

SumMerit sum_merit(const CorrelationProfile& p, bool exclude_zero_lag) {
    SumMerit s;
    for (int l = p.lo(); l <= p.hi(); ++l) {
        if (exclude_zero_lag && l == 0) continue;
        const std::uint64_t n = p.at(l).norm();
        const std::uint64_t r = isqrt(n);
        if (r * r == n) {
            s.integer_value += r;
            s.approx += static_cast<double>(r);
        } else {
            s.exact = false;
            s.approx += std::sqrt(static_cast<double>(n));
        }
    }
    return s;
}

MeritReport merits(const Seq& a) {
    MeritReport r;
    const auto ap = aperiodic_acf(a);
    const auto pe = periodic_acf(a);
    r.lambda_A = peak_merit(ap, /*exclude_zero_lag=*/true);
    r.lambda_P = peak_merit(pe, true);
    r.S_A = sum_merit(ap, true);
    r.S_P = sum_merit(pe, true);
    return r;
}

MeritReport cross_merits(const Seq& a, const Seq& b) {
    MeritReport r;
    const auto ap = aperiodic_ccf(a, b);
    const auto pe = periodic_ccf(a, b);
    // The cross merit lag ranges include zero.
    r.lambda_A = peak_merit(ap, /*exclude_zero_lag=*/false);
    r.lambda_P = peak_merit(pe, false);
    r.S_A = sum_merit(ap, false);
    r.S_P = sum_merit(pe, false);
    return r;
}

}  // namespace compseq
