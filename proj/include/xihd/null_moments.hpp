#pragma once

#include <cstdint>

namespace xihd {

// Exact null moments of a single squared coefficient at sample size n.
struct NullMoments {
  std::int64_t n = 0;
  double u_n = 0.0;    // E xi^2
  double v_n2 = 0.0;   // Var xi^2
  double cov_n = 0.0;  // Cov(xi_kl^2, xi_lk^2)
};

// Exact null mean and variance of T = sum over k != l of xi_kl^2.
struct StatMoments {
  double mu_np = 0.0;
  double sigma_np2 = 0.0;
};

// (n-2)(4n-7) / (10 (n-1)^2 (n+1)). Requires n >= 3.
double u_n(std::int64_t n);

// Variance of xi^2 under independence. Requires n >= 3.
// Note: the closed form agrees with exhaustive enumeration for n >= 4 only.
double v_n2(std::int64_t n);

// Covariance of xi_kl^2 and xi_lk^2 under independence. Requires n >= 3.
double cov_xi2(std::int64_t n);

NullMoments null_moments(std::int64_t n);

// mu = p(p-1) u_n and the closed-form sigma^2. Requires n >= 5, p >= 2.
StatMoments stat_moments(std::int64_t n, std::int64_t p);

struct EnumeratedMoments {
  double mean_xi = 0.0;
  double mean_xi2 = 0.0;
  double var_xi2 = 0.0;
  double cov_xi2 = 0.0;
};

// Exhaustive oracle for 3 <= n <= 8. Under independence the concomitant rank
// vector is a uniform random permutation pi, and the reverse-direction
// coefficient is that of pi^{-1}. Averages over all n! permutations are
// accumulated as exact integers; each moment is one integer ratio converted
// to double at the end. Throws TooLarge for n > 8.
EnumeratedMoments exact_moments_by_enumeration(int n);

}  // namespace xihd
