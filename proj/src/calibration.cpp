#include "xihd/calibration.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xihd/error.hpp"

namespace xihd {

namespace {

template <std::size_t N>
double horner(const double (&coeffs)[N], double x) noexcept {
  double acc = coeffs[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

constexpr double kCentralNum[] = {
    3.387132872796366608,   133.14166789178437745, 1971.5909503065514427,
    13731.693765509461125,  45921.953931549871457, 67265.770927008700853,
    33430.575583588128105,  2509.0809287301226727};
constexpr double kCentralDen[] = {
    1.0,                   42.313330701600911252, 687.1870074920579083,
    5394.1960214247511077, 21213.794301586595867, 39307.89580009271061,
    28729.085735721942674, 5226.495278852545925};
constexpr double kIntermediateNum[] = {
    1.42343711074968357734, 4.6303378461565452959,  5.7694972214606914055,
    3.64784832476320460504, 1.27045825245236838258, 0.24178072517745061177,
    0.0227238449892691845833, 7.7454501427834140764e-4};
constexpr double kIntermediateDen[] = {
    1.0,                     2.05319162663775882187,   1.6763848301838038494,
    0.68976733498510000455,  0.14810397642748007459,   0.0151986665636164571966,
    5.475938084995344946e-4, 1.05075007164441684324e-9};
constexpr double kTailNum[] = {
    6.6579046435011037772,    5.4637849111641143699,     1.7848265399172913358,
    0.29656057182850489123,   0.026532189526576123093,   0.0012426609473880784386,
    2.71155556874348757815e-5, 2.01033439929228813265e-7};
constexpr double kTailDen[] = {
    1.0,                      0.59983220655588793769,   0.13692988092273580531,
    0.0148753612908506148525, 7.868691311456132591e-4,  1.8463183175100546818e-5,
    1.4215117583164458887e-7, 2.04426310338993978564e-15};

void require_open_unit(double q, const char* what) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorCode::DomainError,
                std::string(what) + " requires 0 < q < 1, got " + std::to_string(q));
  }
}

}  // namespace

double standard_normal_inverse_cdf(double prob) noexcept {
  const double q = prob - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * horner(kCentralNum, r) / horner(kCentralDen, r);
  }
  double r = q < 0.0 ? prob : 1.0 - prob;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = horner(kIntermediateNum, r) / horner(kIntermediateDen, r);
  } else {
    r -= 5.0;
    value = horner(kTailNum, r) / horner(kTailDen, r);
  }
  return q < 0.0 ? -value : value;
}

double normal_sf(double x) noexcept { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double normal_quantile(double q) {
  require_open_unit(q, "normal_quantile");
  // Upper quantile is the negated lower quantile at q; working from q
  // directly keeps precision for small tail probabilities.
  double z = -standard_normal_inverse_cdf(q);
  // One Newton step on sf(z) = q, derivative -phi(z).
  const double density = std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
  if (density > 0.0) z += (normal_sf(z) - q) / density;
  return z;
}

double gumbel_sf(double y) noexcept {
  const double rate = std::exp(-0.5 * y) / std::sqrt(8.0 * std::numbers::pi);
  return -std::expm1(-rate);
}

double gumbel_quantile(double q) {
  require_open_unit(q, "gumbel_quantile");
  return -2.0 * std::log(std::sqrt(8.0 * std::numbers::pi) * -std::log1p(-q));
}

double cp(std::int64_t p) {
  if (p < 2) throw Error(ErrorCode::DomainError, "c_p requires p >= 2, got " + std::to_string(p));
  const double scaled = std::numbers::sqrt2 * static_cast<double>(p);
  return 4.0 * std::log(scaled) - std::log(std::log(scaled));
}

double delta_np(std::int64_t n, std::int64_t p) {
  if (n < 5) {
    throw Error(ErrorCode::DomainTooSmall, "delta_np requires n >= 5, got " + std::to_string(n));
  }
  if (p < 2) {
    throw Error(ErrorCode::DomainTooSmall, "delta_np requires p >= 2, got " + std::to_string(p));
  }
  return std::sqrt(cp(p)) * std::log(std::log(static_cast<double>(n)));
}

}  // namespace xihd
