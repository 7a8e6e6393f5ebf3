#pragma once

#include <optional>
#include <string>
#include <vector>

#include "compseq/construct.hpp"
#include "compseq/correlation.hpp"
#include "compseq/matrix.hpp"

namespace compseq {

/// Per-column merits of a matrix plus their maxima and zero counts.
struct ColumnReport {
    std::vector<MeritReport> columns;
    std::vector<int> zero_counts;
    PeakMerit lambda_A_max;
    PeakMerit lambda_P_max;
    SumMerit S_A_max;
    SumMerit S_P_max;
};

ColumnReport column_report(const SeqMatrix& m);
ColumnReport column_report(const MoMatrix& mo);

/// Column ACFs of the full construction, computed from the companion
/// pair's ACFs alone via the doubling recursion
///   A'(l) = 2 A(l) +/- conj(A(s-l))   for 0 <= l < s
///   A'(l) = +/- A(l-s)                for s <= l < 2s
/// without materializing the matrix. Index-aligned with build(): entry j
/// is the ACF of column j of build(c0, c1, recipe).matrix.
/// Throws DomainError when (c0, c1) is not a companion pair.
std::vector<CorrelationProfile> recursive_column_acf(const Seq& c0, const Seq& c1,
                                                     const BuildRecipe& recipe);

// Closed-form bounds relating companion-pair merits to column merits.

/// 4^t * S0 + 2^(t-1)(2^t - 1) E: columns satisfy any sum constraint at
/// least this large when both seed sums are at most S0.
double sufficient_S_A(int t, double S0, double E);

/// max{(2^t - 1) E, (2^(t+1) - 1) lambda0}: sufficient peak constraint.
double sufficient_lambda_A(int t, double lambda0, double E);

/// (2^t - 1) E: no achievable peak constraint can be smaller.
double necessary_lambda_A(int t, double E);

/// (2^t - 1)/(2^(t+1) - 1) * E: once the seed peak merit is at or below
/// this threshold (t >= 1), the minimum (2^t - 1) E is achieved exactly.
double lambda0_threshold(int t, double E);

/// Welch lower bounds for K unit-energy sequences of length N:
/// aperiodic N sqrt((K-1)/(2NK-K-1)), periodic N sqrt((K-1)/(NK-1)).
struct WelchBounds {
    double aperiodic;
    double periodic;
};
WelchBounds welch_bounds(int N, int K);

/// Existence thresholds for a companion pair of even length m >= 4 built
/// from two half-length sequences. lambda_W_A is the exact integer
/// ceiling of m/sqrt(2m-3), computed by rational comparison.
struct ExistenceThresholds {
    double lambda_A;  // m / sqrt(2m - 3)
    double lambda_P;  // m / sqrt(m - 1)
    std::int64_t lambda_W_A;
};
ExistenceThresholds existence_thresholds(int m);

/// max{lambda_A(s0) + lambda_A(s1), 2 lambda_A(s0,s1)}: the constructive
/// cap on the peak column merit of the interleaved lift, and the annealing
/// cost function. Integer-exact for real-valued sequences.
double lambda_B(const Seq& s0, const Seq& s1);

/// The merit combinations bounding the lifted companion pair.
struct CaseBounds {
    double lambda_A;         // interleaved lift: max{l0+l1, 2*lx}
    double lambda_P;         // periodic analogue
    double S_A;              // S0 + S1 + Sx
    double S_P;              // S0 + S1 + 2*Sx
    double lambda_A_concat;  // concatenated lift: l0 + l1 + lx
};
CaseBounds case_bounds(const Seq& s0, const Seq& s1);

/// Outcome of checking a printed lag decomposition against direct
/// computation. When a lag fails, `lag` and `identity` name it.
struct DecompositionCheck {
    bool ok = true;
    int lag = -1;
    std::string identity;

    explicit operator bool() const { return ok; }
};

/// Interleaved lift c0 = s0 (x) s1: odd/even lag split of the pair's
/// aperiodic and periodic ACFs (periodic cross read cyclically in lag).
DecompositionCheck case1_decomposition_check(const Seq& s0, const Seq& s1);

/// Concatenated lift c0 = s0 s1: shifted cross decomposition of the
/// aperiodic ACFs. Exact for real sequences.
DecompositionCheck case2_decomposition_check(const Seq& s0, const Seq& s1);

/// Everything the bounds surface knows for one (m, t, E) configuration.
struct BoundReport {
    int m = 0;
    int t = 0;
    double E = 0;
    std::optional<double> sufficient_S_A;       // needs S0
    std::optional<double> sufficient_lambda_A;  // needs lambda0
    double necessary_lambda_A = 0;
    double lambda_min_t = 0;
    double threshold_lambda0 = 0;
    double welch_A = 0;
    double welch_P = 0;
    std::int64_t lambda_W_A = 0;
    std::optional<double> lambda_B;  // when derived from a concrete pair
};

BoundReport bound_report(int m, int t, double E, std::optional<double> lambda0,
                         std::optional<double> S0);

}  // namespace compseq
