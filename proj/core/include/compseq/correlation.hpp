#pragma once

#include <span>
#include <vector>

#include "compseq/seq.hpp"

namespace compseq {

enum class CorrKind { AperiodicAuto, PeriodicAuto, AperiodicCross, PeriodicCross };

/// Exact correlation values over a lag window. Reads outside the window
/// return zero, matching the convention that aperiodic correlations vanish
/// for |lag| >= n.
class CorrelationProfile {
public:
    CorrelationProfile(CorrKind kind, int lo, std::vector<GaussInt> values);

    CorrKind kind() const { return kind_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(values_.size()) - 1; }

    GaussInt at(int lag) const;
    std::span<const GaussInt> values() const { return values_; }

    friend bool operator==(const CorrelationProfile&, const CorrelationProfile&) = default;

private:
    CorrKind kind_;
    int lo_;
    std::vector<GaussInt> values_;
};

/// A(l) = sum_i a_i conj(a_{i+l}) over lags 0..n-1.
CorrelationProfile aperiodic_acf(const Seq& a);

/// P(l) = sum_i a_i conj(a_{i mod+l}) with cyclic indexing, lags 0..n-1.
CorrelationProfile periodic_acf(const Seq& a);

/// Cross-correlation over lags 1-n .. n-1; equal lengths required.
CorrelationProfile aperiodic_ccf(const Seq& a, const Seq& b);

/// Cyclic cross-correlation over lags 0..n-1; equal lengths required.
CorrelationProfile periodic_ccf(const Seq& a, const Seq& b);

/// Max-of-magnitudes merit, stored exactly as the squared magnitude.
/// Ordering by mag_sq is ordering by magnitude.
struct PeakMerit {
    std::uint64_t mag_sq = 0;

    double value() const;  // sqrt(mag_sq), the real view
    bool is_integral() const { return is_perfect_square(mag_sq); }
    std::uint64_t integer() const;  // exact magnitude; throws unless integral

    friend bool operator==(const PeakMerit&, const PeakMerit&) = default;
    friend auto operator<=>(const PeakMerit&, const PeakMerit&) = default;
};

/// Sum-of-magnitudes merit. Whenever every contributing value has an
/// integer magnitude (all real/imaginary-axis values, which covers every
/// binary, ternary and quadriphase sequence) the sum is carried exactly;
/// otherwise only the double view is meaningful and `exact` is false.
struct SumMerit {
    bool exact = true;
    std::uint64_t integer_value = 0;
    double approx = 0.0;

    double value() const { return exact ? static_cast<double>(integer_value) : approx; }
};

/// The four autocorrelation (or crosscorrelation) merits of a sequence:
/// peak and sum of out-of-phase aperiodic/periodic correlation magnitudes.
struct MeritReport {
    PeakMerit lambda_A;
    PeakMerit lambda_P;
    SumMerit S_A;
    SumMerit S_P;
};

/// Auto merits: lags 1..n-1 (zero lag excluded).
MeritReport merits(const Seq& a);

/// Cross merits: aperiodic over |l| <= n-1 and periodic over 0 <= l <= n-1,
/// zero lag included in both.
MeritReport cross_merits(const Seq& a, const Seq& b);

PeakMerit peak_merit(const CorrelationProfile& p, bool exclude_zero_lag);
SumMerit sum_merit(const CorrelationProfile& p, bool exclude_zero_lag);

}  // namespace compseq
