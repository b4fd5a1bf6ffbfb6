#include "vgibbs/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vgibbs {

double MeanVar::stderror() const {
    return n_ > 1 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
}

namespace {

// Series expansion of P(a,x), valid for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 1000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_p: series failed to converge");
}

// Continued fraction for Q(a,x) (modified Lentz), valid for x >= a+1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_q: continued fraction failed to converge");
}

}  // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_p: need a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_q: need a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi2_sf(double x, double k) { return gamma_q(0.5 * k, 0.5 * x); }

double poisson_cdf(long k, double mu) {
    if (k < 0) return 0.0;
    if (mu == 0.0) return 1.0;
    return gamma_q(static_cast<double>(k) + 1.0, mu);
}

double poisson_tail(long k, double mu) {
    if (k < 0) return 1.0;
    if (mu == 0.0) return 0.0;
    return gamma_p(static_cast<double>(k) + 1.0, mu);
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

double kolmogorov_q(double lambda) {
    if (lambda <= 0.0) return 1.0;
    // alternating series; converges fast for lambda away from zero
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 200; ++j) {
        double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        if (term < 1e-14) break;
        sign = -sign;
    }
    return std::min(1.0, std::max(0.0, 2.0 * sum));
}

double ks_pvalue(double d_stat, double n_effective) {
    double rn = std::sqrt(n_effective);
    return kolmogorov_q((rn + 0.12 + 0.11 / rn) * d_stat);
}

KsResult ks_test(std::vector<double> data, const std::function<double(double)>& cdf) {
    if (data.empty()) throw std::invalid_argument("ks_test: empty sample");
    std::sort(data.begin(), data.end());
    const double n = static_cast<double>(data.size());
    double d = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        double f = cdf(data[i]);
        d = std::max(d, std::max((static_cast<double>(i) + 1.0) / n - f,
                                 f - static_cast<double>(i) / n));
    }
    return {d, ks_pvalue(d, n)};
}

KsResult ks_test_2sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_test_2sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        double t = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= t) ++i;
        while (j < b.size() && b[j] <= t) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    double ne = na * nb / (na + nb);
    return {d, ks_pvalue(d, ne)};
}

double chi2_gof_pvalue(const std::vector<double>& observed, const std::vector<double>& expected,
                       double min_expected) {
    if (observed.size() != expected.size() || observed.empty())
        throw std::invalid_argument("chi2_gof: size mismatch");
    double tot_obs = 0.0, tot_exp = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        tot_obs += observed[i];
        tot_exp += expected[i];
    }
    if (!(tot_exp > 0.0)) throw std::invalid_argument("chi2_gof: expected sums to zero");
    const double scale = tot_obs / tot_exp;
    // pool small-expectation bins into one remainder bin
    double chi2 = 0.0;
    double pool_obs = 0.0, pool_exp = 0.0;
    int bins = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double e = expected[i] * scale;
        if (e < min_expected) {
            pool_obs += observed[i];
            pool_exp += e;
            continue;
        }
        double del = observed[i] - e;
        chi2 += del * del / e;
        ++bins;
    }
    if (pool_exp >= min_expected * 0.2 && pool_exp > 0.0) {
        double del = pool_obs - pool_exp;
        chi2 += del * del / pool_exp;
        ++bins;
    }
    if (bins < 2) return 1.0;  // nothing to test
    return chi2_sf(chi2, static_cast<double>(bins - 1));
}

SlopeFit wls_slope(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<double>& sigma) {
    if (x.size() != y.size() || x.size() != sigma.size() || x.size() < 2)
        throw std::invalid_argument("wls_slope: need >= 2 points with matching sigmas");
    double sw = 0.0, swx = 0.0, swy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double s = sigma[i];
        if (!(s > 0.0)) s = 1e-12;  // degenerate-but-usable guard
        double w = 1.0 / (s * s);
        sw += w;
        swx += w * x[i];
        swy += w * y[i];
    }
    double xbar = swx / sw, ybar = swy / sw;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double s = sigma[i];
        if (!(s > 0.0)) s = 1e-12;
        double w = 1.0 / (s * s);
        sxx += w * (x[i] - xbar) * (x[i] - xbar);
        sxy += w * (x[i] - xbar) * (y[i] - ybar);
    }
    if (!(sxx > 0.0)) throw std::invalid_argument("wls_slope: x values are all equal");
    SlopeFit f;
    f.slope = sxy / sxx;
    f.slope_se = std::sqrt(1.0 / sxx);
    f.intercept = ybar - f.slope * xbar;
    return f;
}

}  // namespace vgibbs
