#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "partnorm/types.hpp"

namespace partnorm {

// Sample product-moment correlation with a one-tailed p-value. Throws
// length_mismatch, too_few_points (n < 3), constant_vector.
CorrelationResult pearson(std::span<const double> x, std::span<const double> y);

// Pearson on rank-transformed data; ties receive average ranks.
CorrelationResult spearman(std::span<const double> x, std::span<const double> y);

// Average ranks (1-based); tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

// One-tailed p for the Student-t transform t = r * sqrt((n-2)/(1-r^2)) with
// n-2 degrees of freedom: P(T <= t) for r < 0, P(T >= t) for r > 0, 0.5 at
// r = 0. |r| = 1 returns 0 by convention (the caller flags it degenerate).
// Throws too_few_points (n < 3).
double one_tailed_p(double r, std::size_t n);

// P(T <= t) for Student's t with dof degrees of freedom, via the regularized
// incomplete beta function; absolute accuracy better than 1e-9.
double student_t_cdf(double t, double dof);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

// The four fractions of a target author set relative to two other sets;
// always sums to 1.
struct OverlapBreakdown {
    double only_first = 0.0;
    double only_second = 0.0;
    double both = 0.0;
    double neither = 0.0;
};

// Partitions `target` into first-only / second-only / both / neither and
// returns fractions of |target|. Throws empty_target.
OverlapBreakdown overlap_breakdown(const std::set<std::string>& target,
                                   const std::set<std::string>& first,
                                   const std::set<std::string>& second);

}  // namespace partnorm
