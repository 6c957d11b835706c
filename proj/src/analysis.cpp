#include "qsurf/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace qsurf {

namespace {

// Kahan-compensated accumulator; the 1 - sum complements below live or die on it.
struct Kahan {
    double sum = 0, c = 0;
    void add(double v) {
        double y = v - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

double pmf_term(int n, int j, double rho) {
    return static_cast<double>(binomial(n, j)) * std::pow(rho, j) * std::pow(1.0 - rho, n - j);
}

constexpr double kComplementFloor = 1e-2;  // below this, 1-sum has lost ~3 digits

}  // namespace

uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > static_cast<unsigned __int128>(UINT64_MAX))
            throw std::overflow_error("binomial overflows 64 bits");
    }
    return static_cast<uint64_t>(r);
}

CodeParams code_params(int dx, int dz) {
    CodeParams p;
    p.n = dx * dz + (dx - 1) * (dz - 1);
    int tx = (dx - 1) / 2;
    p.tz = (dz - 1) / 2;
    p.t = std::min(tx, p.tz);
    p.eg = p.t;
    p.ez = std::max(p.tz - tx, 0);
    return p;
}

double logical_error_bounded(int n, int t, double rho) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must be in [0,1]");
    Kahan head;
    for (int j = 0; j <= t && j <= n; ++j) head.add(pmf_term(n, j, rho));
    double r = 1.0 - head.sum;
    if (r >= kComplementFloor) return r;
    Kahan tail;
    for (int j = n; j > t; --j) tail.add(pmf_term(n, j, rho));
    return tail.sum;
}

double logical_error_asym(int n, int eg, int ez, double pz, double rho) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must be in [0,1]");
    if (pz > rho) throw std::invalid_argument("pz cannot exceed rho");
    double pxy = rho - pz;
    auto inner = [&](int j, int i) {
        return static_cast<double>(binomial(n, j)) * static_cast<double>(binomial(j, i)) *
               std::pow(pz, i) * std::pow(pxy, j - i) * std::pow(1.0 - rho, n - j);
    };
    Kahan head;
    for (int j = 0; j <= eg + ez && j <= n; ++j)
        for (int i = std::max(j - eg, 0); i <= j; ++i) head.add(inner(j, i));
    double r = 1.0 - head.sum;
    if (r >= kComplementFloor) return r;
    // direct sum over the non-correctable (j, i) region
    Kahan tail;
    for (int j = n; j >= 0; --j)
        for (int i = j; i >= 0; --i)
            if (j > eg + ez || i < j - eg) tail.add(inner(j, i));
    return tail.sum;
}

double alpha_coeff(int j, int eg, double bias) {
    if (std::isinf(bias) || bias < 1.0)
        throw std::invalid_argument("alpha coefficients need a finite bias >= 1");
    if (j <= eg) return 1.0;
    double scale = std::pow(2.0 / (bias + 2.0), j);
    Kahan s;
    for (int i = j - eg; i <= j; ++i)
        s.add(static_cast<double>(binomial(j, i)) * std::pow(bias / 2.0, i));
    return scale * s.sum;
}

namespace {

double one_minus_alpha(int j, int eg, double bias) {
    if (j <= eg) return 0.0;
    // complement within the binomial expansion of ((A+2)/2)^j, exact at large A
    double scale = std::pow(2.0 / (bias + 2.0), j);
    Kahan s;
    for (int i = 0; i < j - eg; ++i)
        s.add(static_cast<double>(binomial(j, i)) * std::pow(bias / 2.0, i));
    return scale * s.sum;
}

}  // namespace

double logical_error_alpha_form(int n, int eg, int ez, double rho, double bias) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must be in [0,1]");
    Kahan head;
    for (int j = 0; j <= eg + ez && j <= n; ++j)
        head.add(alpha_coeff(j, eg, bias) * pmf_term(n, j, rho));
    double r = 1.0 - head.sum;
    if (r >= kComplementFloor) return r;
    Kahan tail;
    for (int j = n; j > eg + ez; --j) tail.add(pmf_term(n, j, rho));
    for (int j = eg + ez; j >= 0; --j) tail.add(one_minus_alpha(j, eg, bias) * pmf_term(n, j, rho));
    return tail.sum;
}

double asymptotic_logical_error(int n, int exponent, double rho, double one_minus_beta) {
    return one_minus_beta * static_cast<double>(binomial(n, exponent)) * std::pow(rho, exponent);
}

double BetaVector::beta(int j) const {
    if (j < first_weight) return 1.0;
    size_t idx = static_cast<size_t>(j - first_weight);
    if (idx >= values.size()) return 0.0;
    return values[idx];
}

double logical_error_beta(int n, int t, double rho, const BetaVector& betas) {
    Kahan s;
    for (int j = t + 1; j <= n; ++j) s.add((1.0 - betas.beta(j)) * pmf_term(n, j, rho));
    return s.sum;
}

double logical_error_beta_z(int n, int tz, double pz, const BetaVector& betas_z) {
    Kahan s;
    for (int j = tz + 1; j <= n; ++j) s.add((1.0 - betas_z.beta(j)) * pmf_term(n, j, pz));
    return s.sum;
}

Threshold code_effective_threshold_exact(const std::function<double(double)>& curve, double gamma,
                                         double lo, double hi) {
    if (!(lo > 0 && hi > lo)) throw std::invalid_argument("bad threshold bracket");
    const double scale = std::pow(10.0, -gamma);
    auto ok = [&](double r) { return curve(r) <= scale * r; };

    // descending log grid; the largest satisfying point brackets the crossing
    const int kGrid = 512;
    double llo = std::log(lo), lhi = std::log(hi);
    if (ok(hi)) return {false, 0.0};  // no crossing below the bracket top
    double below = -1, above = hi;
    for (int i = kGrid - 1; i >= 0; --i) {
        double r = std::exp(llo + (lhi - llo) * i / kGrid);
        if (ok(r)) { below = r; break; }
        above = r;
    }
    if (below < 0) return {false, 0.0};
    while ((above - below) / below > 1e-6) {
        double mid = 0.5 * (above + below);
        if (ok(mid)) below = mid; else above = mid;
    }
    return {true, below};
}

double code_effective_threshold_approx(int n, int t, double one_minus_beta_next, double gamma) {
    if (!(one_minus_beta_next > 0.0))
        throw std::invalid_argument("beta_{t+1} = 1 gives an unbounded threshold");
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    double denom = std::pow(10.0, gamma) * one_minus_beta_next *
                   static_cast<double>(binomial(n, t + 1));
    return std::pow(denom, -1.0 / t);
}

}  // namespace qsurf
