#pragma once

#include <vector>

namespace eventvq {

// Regularized incomplete beta I_x(a, b) by continued fraction.
double incomplete_beta(double a, double b, double x);

// P(T <= t) for Student's t with df degrees of freedom.
double student_t_cdf(double t, double df);

struct TTestResult {
    double t = 0;
    double df = 0;
    double p = 1;  // two-tailed
};

// Welch's unequal-variance t-test with Welch-Satterthwaite degrees of
// freedom. Zero variance in both groups gives t = 0, p = 1 for equal means
// and p = 0 otherwise.
TTestResult welch_t_test(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace eventvq
