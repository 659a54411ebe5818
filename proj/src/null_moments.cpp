#include "xihd/null_moments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <numeric>
#include <string>

#include "xihd/error.hpp"

namespace xihd {

namespace {

// Coefficients listed from the highest power down.
double horner(std::initializer_list<double> coeffs, double x) {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

void require_n(std::int64_t n, std::int64_t floor, const char* what) {
  if (n < floor) {
    throw Error(ErrorCode::DomainTooSmall, std::string(what) + " requires n >= " +
                                               std::to_string(floor) + ", got " + std::to_string(n));
  }
}

}  // namespace

double u_n(std::int64_t n) {
  require_n(n, 3, "u_n");
  const double x = static_cast<double>(n);
  return (x - 2.0) * (4.0 * x - 7.0) / (10.0 * (x - 1.0) * (x - 1.0) * (x + 1.0));
}

double v_n2(std::int64_t n) {
  require_n(n, 3, "v_n2");
  const double x = static_cast<double>(n);
  const double num = horner({224.0, -1792.0, 5051.0, -4969.0, -2458.0, 18128.0}, x);
  const double den = 700.0 * std::pow(x - 1.0, 4) * std::pow(x + 1.0, 3);
  return num / den;
}

double cov_xi2(std::int64_t n) {
  require_n(n, 3, "cov_xi2");
  const double x = static_cast<double>(n);
  const double num =
      (x - 2.0) * horner({784.0, -8022.0, 27301.0, -24228.0, -5045.0, -44070.0}, x);
  const double den = 50.0 * x * std::pow(x + 1.0, 4) * std::pow(x - 1.0, 5);
  return num / den;
}

NullMoments null_moments(std::int64_t n) { return {n, u_n(n), v_n2(n), cov_xi2(n)}; }

StatMoments stat_moments(std::int64_t n, std::int64_t p) {
  require_n(n, 5, "stat_moments");
  if (p < 2) {
    throw Error(ErrorCode::DomainTooSmall, "stat_moments requires p >= 2, got " + std::to_string(p));
  }
  const double x = static_cast<double>(n);
  const double pairs = static_cast<double>(p) * static_cast<double>(p - 1);
  const double num = horner({224.0, -1792.0, 15803.0, -137437.0, 599321.0, -1080523.0, 610212.0,
                             -493848.0, 1233960.0},
                            x);
  const double den = 700.0 * x * std::pow(1.0 + x, 4) * std::pow(x - 1.0, 5);
  return {pairs * u_n(n), pairs * num / den};
}

EnumeratedMoments exact_moments_by_enumeration(int n) {
  if (n < 3) throw Error(ErrorCode::DomainTooSmall, "enumeration requires n >= 3");
  if (n > 8) {
    throw Error(ErrorCode::TooLarge, "enumeration over n! permutations is limited to n <= 8, got " +
                                         std::to_string(n));
  }
  // With D = n^2 - 1 and s the absolute-difference sum, xi = a / D where
  // a = D - 3 s is an integer with |a| <= D <= 63. With n! <= 40320 every
  // accumulated sum and product below stays under 3e16, inside int64.
  const std::int64_t denom = static_cast<std::int64_t>(n) * n - 1;
  std::array<int, 8> perm{};
  std::array<int, 8> inverse{};
  std::iota(perm.begin(), perm.begin() + n, 0);

  std::int64_t count = 0;
  std::int64_t sum_a = 0;
  std::int64_t sum_a2 = 0;
  std::int64_t sum_a4 = 0;
  std::int64_t sum_a2b2 = 0;
  do {
    for (int i = 0; i < n; ++i) inverse[perm[i]] = i;
    std::int64_t s_forward = 0;
    std::int64_t s_reverse = 0;
    for (int i = 1; i < n; ++i) {
      s_forward += std::abs(perm[i] - perm[i - 1]);
      s_reverse += std::abs(inverse[i] - inverse[i - 1]);
    }
    const std::int64_t a = denom - 3 * s_forward;
    const std::int64_t b = denom - 3 * s_reverse;
    ++count;
    sum_a += a;
    sum_a2 += a * a;
    sum_a4 += a * a * a * a;
    sum_a2b2 += a * a * b * b;
  } while (std::next_permutation(perm.begin(), perm.begin() + n));

  const std::int64_t d2 = denom * denom;
  const std::int64_t d4 = d2 * d2;
  auto ratio = [](std::int64_t num, std::int64_t den) {
    return static_cast<double>(num) / static_cast<double>(den);
  };
  EnumeratedMoments out;
  out.mean_xi = ratio(sum_a, count * denom);
  out.mean_xi2 = ratio(sum_a2, count * d2);
  // Var = (N sum a^4 - (sum a^2)^2) / (N^2 D^4), similarly for the cross moment.
  out.var_xi2 = ratio(count * sum_a4 - sum_a2 * sum_a2, count * count * d4);
  out.cov_xi2 = ratio(count * sum_a2b2 - sum_a2 * sum_a2, count * count * d4);
  return out;
}

}  // namespace xihd
