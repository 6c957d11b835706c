#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace qsurf {

// Exact binomial coefficient in 64-bit integer arithmetic (overflow-checked).
uint64_t binomial(int n, int k);

// Correction radii of a [[n,1,dx/dz]] surface code: t generic errors are always
// corrected, plus ez extra Z errors (eg = t for the codes in scope).
struct CodeParams {
    int n = 0;
    int t = 0;   // generic radius, floor((min(dx,dz)-1)/2)
    int eg = 0;  // generic-error capability
    int ez = 0;  // extra Z capability
    int tz = 0;  // Z radius, floor((dz-1)/2)
};
CodeParams code_params(int dx, int dz);

// 1 - sum_{j<=t} C(n,j) rho^j (1-rho)^(n-j), switching to direct tail summation
// where the complement would cancel.
double logical_error_bounded(int n, int t, double rho);

// Double sum over (j <= eg+ez, i >= j-eg) with per-type probabilities.
double logical_error_asym(int n, int eg, int ez, double pz, double rho);

// alpha_j for finite bias A >= 1: 1 for j <= eg, else (2/(A+2))^j sum_{i=j-eg}^j C(j,i)(A/2)^i.
double alpha_coeff(int j, int eg, double bias);

// 1 - sum_{j<=eg+ez} alpha_j C(n,j) rho^j (1-rho)^(n-j).
double logical_error_alpha_form(int n, int eg, int ez, double rho, double bias);

// Small-rho asymptote (1-beta) C(n,m) rho^m; pass m = t+1, or eg+ez+1 for the
// phase-flip limit, and one_minus_beta = 1 for the bounded-distance form.
double asymptotic_logical_error(int n, int exponent, double rho, double one_minus_beta = 1.0);

// Ordered beta_{first_weight}, beta_{first_weight+1}, ...; implicitly 1 below
// and 0 above the supplied range.
struct BetaVector {
    int first_weight = 0;
    std::vector<double> values;
    double beta(int j) const;
};

// sum_{j>t} (1-beta_j) C(n,j) rho^j (1-rho)^(n-j)
double logical_error_beta(int n, int t, double rho, const BetaVector& betas);
// same with pure-Z coefficients and p_Z
double logical_error_beta_z(int n, int tz, double pz, const BetaVector& betas_z);

struct Threshold {
    bool found = false;
    double value = 0;
};

// Largest rho in [lo, hi] with curve(rho) <= 10^-gamma * rho, located by a
// descending grid scan plus bisection to 1e-6 relative tolerance. Reports
// not-found when the condition never holds, or still holds at hi.
Threshold code_effective_threshold_exact(const std::function<double(double)>& curve, double gamma,
                                         double lo = 1e-6, double hi = 0.5);

// Asymptotic approximation (10^gamma (1-beta_{t+1}) C(n,t+1))^(-1/t).
double code_effective_threshold_approx(int n, int t, double one_minus_beta_next, double gamma);

}  // namespace qsurf
