#include "partnorm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace partnorm {

namespace {

void check_pair(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw Error(ErrorCode::length_mismatch, "vectors of length " + std::to_string(x.size()) +
                                                    " and " + std::to_string(y.size()));
    if (x.size() < 3)
        throw Error(ErrorCode::too_few_points,
                    "need at least 3 points, got " + std::to_string(x.size()));
}

double mean_of(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

CorrelationResult pearson(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y);
    double mx = mean_of(x), my = mean_of(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw Error(ErrorCode::constant_vector, "first vector is constant");
    if (syy == 0.0)
        throw Error(ErrorCode::constant_vector, "second vector is constant");

    double r = sxy / std::sqrt(sxx * syy);
    // Cancellation can push |r| a hair past 1 for perfectly collinear data.
    r = std::clamp(r, -1.0, 1.0);

    CorrelationResult result;
    result.method = CorrelationMethod::pearson;
    result.r = r;
    result.n = x.size();
    result.degenerate = std::abs(r) == 1.0;
    result.p_one_tailed = result.degenerate ? 0.0 : one_tailed_p(r, x.size());
    return result;
}

CorrelationResult spearman(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y);
    auto rx = average_ranks(x);
    auto ry = average_ranks(y);
    auto result = pearson(rx, ry);
    result.method = CorrelationMethod::spearman;
    return result;
}

std::vector<double> average_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(values.size(), 0.0);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        // Positions i..j (0-based) share the mean of ranks i+1..j+1.
        double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

double one_tailed_p(double r, std::size_t n) {
    if (n < 3)
        throw Error(ErrorCode::too_few_points,
                    "p-value needs at least 3 points, got " + std::to_string(n));
    if (r == 0.0) return 0.5;
    if (std::abs(r) >= 1.0) return 0.0;
    double dof = static_cast<double>(n - 2);
    double t = r * std::sqrt(dof / (1.0 - r * r));
    // Tail in the direction of the observed sign.
    return r < 0.0 ? student_t_cdf(t, dof) : 1.0 - student_t_cdf(t, dof);
}

double student_t_cdf(double t, double dof) {
    if (t == 0.0) return 0.5;
    double x = dof / (dof + t * t);
    double tail = 0.5 * regularized_incomplete_beta(dof / 2.0, 0.5, x);
    return t < 0.0 ? tail : 1.0 - tail;
}

namespace {

// Continued fraction for the incomplete beta (modified Lentz). Converges
// quickly for x < (a + 1) / (a + b + 2), which the caller guarantees.
double beta_cf(double a, double b, double x) {
    constexpr double eps = 1e-15;
    constexpr double tiny = 1e-300;
    constexpr int max_iter = 500;

    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps) return h;
    }
    return h;  // converged to machine precision long before max_iter in practice
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                      b * std::log(1.0 - x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    // Symmetry: I_x(a, b) = 1 - I_{1-x}(b, a), keeping the fraction in its
    // fast-converging region.
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

OverlapBreakdown overlap_breakdown(const std::set<std::string>& target,
                                   const std::set<std::string>& first,
                                   const std::set<std::string>& second) {
    if (target.empty()) throw Error(ErrorCode::empty_target, "target author set is empty");
    std::size_t n_first = 0, n_second = 0, n_both = 0, n_neither = 0;
    for (const auto& id : target) {
        bool in_first = first.count(id) != 0;
        bool in_second = second.count(id) != 0;
        if (in_first && in_second)
            ++n_both;
        else if (in_first)
            ++n_first;
        else if (in_second)
            ++n_second;
        else
            ++n_neither;
    }
    double n = static_cast<double>(target.size());
    return {static_cast<double>(n_first) / n, static_cast<double>(n_second) / n,
            static_cast<double>(n_both) / n, static_cast<double>(n_neither) / n};
}

}  // namespace partnorm
