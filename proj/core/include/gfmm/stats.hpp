#ifndef GFMM_STATS_HPP
#define GFMM_STATS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace gfmm::stats {

/// Standard normal CDF, accurate to better than 1e-7.
double normal_cdf(double x);

/// Survival function of the F distribution with d1, d2 degrees of freedom,
/// via the regularized incomplete beta function. Accurate to ~1e-6.
double f_dist_sf(double x, int d1, int d2);

/// Survival function of the chi-squared distribution.
double chi2_sf(double x, int df);

/// Upper critical value of the F distribution: the x with sf(x) = alpha.
double f_critical(double alpha, int d1, int d2);

/// Per-dataset ranks of k classifiers over N datasets. Rank 1 is best
/// (lowest error); ties receive midranks. Average ranks are kept at four
/// decimal places so that the reported statistics agree exactly with the
/// averages printed in rank tables.
struct RankMatrix {
    std::vector<std::vector<double>> rows;  // N x k
    std::vector<double> avg_ranks;          // length k, rounded to 4 decimals
    std::size_t n_datasets = 0;
    std::size_t n_classifiers = 0;

    static RankMatrix from_rows(std::vector<std::vector<double>> rank_rows);
};

/// Ranks each row of an error matrix ascending (lower error = rank 1),
/// replacing ties by midranks. NaN entries are rejected.
RankMatrix rank_rows(const std::vector<std::vector<double>>& errors);

/// Friedman chi-squared and the Iman-Davenport F transformation.
struct FriedmanResult {
    double chi2 = 0.0;
    double f_stat = 0.0;     // infinite when the denominator degenerates
    int chi2_df = 0;
    int f_df1 = 0;
    int f_df2 = 0;
    double p_chi2 = 0.0;
    double p_f = 0.0;
    double f_critical_value = 0.0;
    double alpha = 0.05;
    bool reject = false;
};

FriedmanResult friedman(const RankMatrix& ranks, double alpha = 0.05);

/// One pairwise comparison of the Holm step-down procedure.
struct HolmRow {
    std::size_t classifier = 0;  // column index of the comparator
    double z = 0.0;
    double p = 0.0;
    double threshold = 0.0;      // alpha / (k - i)
    bool rejected = false;
};

/// Holm post-hoc test of every classifier against the control column.
/// z = (R_control - R_j) / sqrt(k(k+1)/(6N)); two-sided p-values; rows are
/// ordered by ascending p and the reject flags follow the step-down rule.
std::vector<HolmRow> holm(const RankMatrix& ranks, std::size_t control,
                          double alpha = 0.05);

} // namespace gfmm::stats

#endif
