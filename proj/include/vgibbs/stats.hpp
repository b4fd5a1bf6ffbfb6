#ifndef VGIBBS_STATS_HPP
#define VGIBBS_STATS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace vgibbs {

// Streaming mean/variance (Welford).
class MeanVar {
  public:
    void add(double x) {
        ++n_;
        double d = x - mean_;
        mean_ += d / static_cast<double>(n_);
        m2_ += d * (x - mean_);
    }
    std::size_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
    double stderror() const;

  private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

// Compensated (Neumaier) summation.
class KahanSum {
  public:
    void add(double x) {
        double t = s_ + x;
        if (std::abs(s_) >= std::abs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    double value() const { return s_ + c_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Survival function of the chi-square distribution with k dof.
double chi2_sf(double x, double k);

// P(N <= k) and P(N > k) for N ~ Poisson(mu).
double poisson_cdf(long k, double mu);
double poisson_tail(long k, double mu);  // strictly greater than k

// Standard normal survival function.
double normal_sf(double z);

// Two-sided Kolmogorov asymptotic p-value with small-sample correction.
double kolmogorov_q(double lambda);
double ks_pvalue(double d_stat, double n_effective);

// One-sample KS against a cdf; data need not be sorted (copied internally).
struct KsResult {
    double d = 0.0;
    double pvalue = 1.0;
};
KsResult ks_test(std::vector<double> data, const std::function<double(double)>& cdf);
KsResult ks_test_2sample(std::vector<double> a, std::vector<double> b);

// Pearson chi-square goodness of fit: observed counts vs expected counts
// (expected need not sum to the same total; it is rescaled).  Returns the
// p-value; bins with expected < min_expected are pooled into a remainder.
double chi2_gof_pvalue(const std::vector<double>& observed, const std::vector<double>& expected,
                       double min_expected = 5.0);

// Weighted least-squares line fit y ~ a + b x with per-point standard
// deviations sigma (>0).  Exposes the slope and its standard error, which is
// what the "no significant upward trend" checks consume.
struct SlopeFit {
    double slope = 0.0;
    double slope_se = 0.0;
    double intercept = 0.0;
};
SlopeFit wls_slope(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<double>& sigma);

}  // namespace vgibbs

#endif
