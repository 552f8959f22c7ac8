#include "eventvq/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace eventvq {
namespace {

// Lentz's continued fraction for the incomplete beta.
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-15;
    constexpr double kTiny = 1e-300;

    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0) || !(b > 0)) throw std::invalid_argument("incomplete_beta: a, b must be positive");
    if (x <= 0) return 0;
    if (x >= 1) return 1;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log(1.0 - x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
    if (df <= 0) throw std::invalid_argument("student_t_cdf: df must be positive");
    if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
    double x = df / (df + t * t);
    double tail = 0.5 * incomplete_beta(df / 2.0, 0.5, x);  // one-sided tail mass
    return t >= 0 ? 1.0 - tail : tail;
}

TTestResult welch_t_test(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.empty() || ys.empty()) throw std::invalid_argument("welch_t_test: empty sample");
    auto mean_var = [](const std::vector<double>& v) {
        double n = static_cast<double>(v.size());
        double m = 0;
        for (double x : v) m += x;
        m /= n;
        double s2 = 0;
        if (v.size() > 1) {
            for (double x : v) s2 += (x - m) * (x - m);
            s2 /= (n - 1.0);
        }
        return std::pair<double, double>{m, s2};
    };
    auto [m1, v1] = mean_var(xs);
    auto [m2, v2] = mean_var(ys);
    double n1 = static_cast<double>(xs.size()), n2 = static_cast<double>(ys.size());
    double se2 = v1 / n1 + v2 / n2;

    TTestResult r;
    if (se2 <= 0) {
        if (m1 == m2) return {0.0, 0.0, 1.0};
        r.t = m1 > m2 ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
        r.df = 0;
        r.p = 0;
        return r;
    }
    r.t = (m1 - m2) / std::sqrt(se2);
    double num = se2 * se2;
    double den = 0;
    if (v1 > 0 && n1 > 1) den += (v1 / n1) * (v1 / n1) / (n1 - 1.0);
    if (v2 > 0 && n2 > 1) den += (v2 / n2) * (v2 / n2) / (n2 - 1.0);
    r.df = den > 0 ? num / den : 1.0;
    double x = r.df / (r.df + r.t * r.t);
    r.p = incomplete_beta(r.df / 2.0, 0.5, x);  // two-tailed
    if (r.p > 1) r.p = 1;
    if (r.p < 0) r.p = 0;
    return r;
}

}  // namespace eventvq
