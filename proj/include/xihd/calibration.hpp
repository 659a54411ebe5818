#pragma once

#include <cstdint>

namespace xihd {

// Lower-tail inverse of the standard normal CDF (Wichura's AS 241, PPND16).
// Relative accuracy about 1e-16 on (0, 1); no domain checks, intended for
// sampling hot paths.
double standard_normal_inverse_cdf(double prob) noexcept;

// Upper-tail quantile z_q: P(Z > z_q) = q. Throws DomainError unless 0 < q < 1.
double normal_quantile(double q);

// P(Z > x) for Z ~ N(0, 1).
double normal_sf(double x) noexcept;

// Survival function of the limit law of the centred squared maximum:
// 1 - exp(-exp(-y/2) / sqrt(8 pi)).
double gumbel_sf(double y) noexcept;

// Upper-tail quantile of the same law, -2 log(sqrt(8 pi) * (-log(1 - q))).
double gumbel_quantile(double q);

// Centring constant of the extreme statistic, 4 log(sqrt2 p) - log log(sqrt2 p).
double cp(std::int64_t p);

// Screening threshold multiplier sqrt(c_p) * log log n. Requires n >= 5, p >= 2.
double delta_np(std::int64_t n, std::int64_t p);

}  // namespace xihd
