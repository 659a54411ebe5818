#include "xihd/models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "xihd/error.hpp"

namespace xihd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_sparse_design(ModelId id) {
  return id == ModelId::E3a || id == ModelId::E3b || id == ModelId::E3c || id == ModelId::E3d;
}

}  // namespace

std::string_view to_string(ModelId id) noexcept {
  switch (id) {
    case ModelId::E1a: return "E1a";
    case ModelId::E1b: return "E1b";
    case ModelId::E1c: return "E1c";
    case ModelId::E1d: return "E1d";
    case ModelId::E2a: return "E2a";
    case ModelId::E2b: return "E2b";
    case ModelId::E2c: return "E2c";
    case ModelId::E2d: return "E2d";
    case ModelId::E3a: return "E3a";
    case ModelId::E3b: return "E3b";
    case ModelId::E3c: return "E3c";
    case ModelId::E3d: return "E3d";
  }
  return "unknown";
}

std::optional<ModelId> parse_model_id(std::string_view name) {
  for (ModelId id : kAllModels) {
    const auto canonical = to_string(id);
    if (name.size() == canonical.size() &&
        std::equal(name.begin(), name.end(), canonical.begin(),
                   [](char a, char b) { return std::tolower(a) == std::tolower(b); })) {
      return id;
    }
  }
  return std::nullopt;
}

ModelSpec default_model(ModelId id) noexcept {
  switch (id) {
    case ModelId::E2a: return {id, 0.1};
    case ModelId::E2b: return {id, 0.3};
    case ModelId::E2c: return {id, 0.4};
    case ModelId::E2d: return {id, 3.0};
    case ModelId::E3a: return {id, 2.7};
    case ModelId::E3d: return {id, 0.05};
    default: return {id, 0.0};
  }
}

void check_shape(const ModelSpec& model, std::size_t n, std::size_t p) {
  if (n < 5) throw Error(ErrorCode::DomainTooSmall, "n must be >= 5, got " + std::to_string(n));
  if (p < 2) throw Error(ErrorCode::DomainTooSmall, "p must be >= 2, got " + std::to_string(p));
  const std::string name(to_string(model.id));
  if (model.id == ModelId::E2c && p % 5 != 0) {
    throw Error(ErrorCode::BadShape, name + " needs p divisible by 5, got p=" + std::to_string(p));
  }
  if (model.id == ModelId::E2d && p % 2 != 0) {
    throw Error(ErrorCode::BadShape, name + " needs an even p, got p=" + std::to_string(p));
  }
  if (is_sparse_design(model.id) && p < 3) {
    throw Error(ErrorCode::BadShape, name + " needs p >= 3, got p=" + std::to_string(p));
  }
}

SquareMatrix SquareMatrix::identity(std::size_t d) {
  SquareMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix cholesky(const SquareMatrix& sigma) {
  const std::size_t d = sigma.dim;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (sigma(i, j) != sigma(j, i)) {
        throw Error(ErrorCode::NotPositiveDefinite, "matrix is not symmetric");
      }
    }
  }
  SquareMatrix lower(d);
  for (std::size_t j = 0; j < d; ++j) {
    double diag = sigma(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= lower(j, k) * lower(j, k);
    if (!(diag > 0.0)) {
      throw Error(ErrorCode::NotPositiveDefinite,
                  "non-positive pivot at row " + std::to_string(j + 1));
    }
    const double root = std::sqrt(diag);
    lower(j, j) = root;
    for (std::size_t i = j + 1; i < d; ++i) {
      double acc = sigma(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= lower(i, k) * lower(j, k);
      lower(i, j) = acc / root;
    }
  }
  return lower;
}

ModelSampler::ModelSampler(const ModelSpec& model, std::size_t n, std::size_t p)
    : model_(model), n_(n), p_(p) {
  check_shape(model, n, p);
  if (model.id == ModelId::E3a) {
    SquareMatrix sigma = SquareMatrix::identity(p);
    const double off = model.param * std::sqrt(std::log(static_cast<double>(p)) / static_cast<double>(n));
    sigma(0, 1) = sigma(1, 0) = off;
    const SquareMatrix lower = cholesky(sigma);
    factor_rows_.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        if (lower(i, j) != 0.0) {
          factor_rows_[i].cols.push_back(j);
          factor_rows_[i].weights.push_back(lower(i, j));
        }
      }
    }
  }
}

DataMatrix ModelSampler::draw(RandomStream& rng) const {
  const std::size_t n = n_;
  const std::size_t p = p_;
  DataMatrix data(n, p);
  std::vector<double> z(p);

  // Rows are drawn one observation at a time so that the random sequence
  // consumed by observation i does not depend on n.
  for (std::size_t i = 0; i < n; ++i) {
    switch (model_.id) {
      case ModelId::E1a:
        for (std::size_t k = 0; k < p; ++k) data.at(i, k) = rng.normal();
        break;
      case ModelId::E1b:
        for (std::size_t k = 0; k < p; ++k) {
          const double w = rng.normal();
          data.at(i, k) = w * w * w;
        }
        break;
      case ModelId::E1c:
        for (std::size_t k = 0; k < p; ++k) data.at(i, k) = rng.cauchy();
        break;
      case ModelId::E1d:
        for (std::size_t k = 0; k < p; ++k) data.at(i, k) = rng.student_t3();
        break;
      case ModelId::E2a: {
        // Equicorrelation via one shared factor.
        const double rho = model_.param;
        const double shared = std::sqrt(rho) * rng.normal();
        const double own = std::sqrt(1.0 - rho);
        for (std::size_t k = 0; k < p; ++k) data.at(i, k) = shared + own * rng.normal();
        break;
      }
      case ModelId::E2b: {
        const double rho = model_.param;
        const double innovation = std::sqrt(1.0 - rho * rho);
        double prev = rng.normal();
        data.at(i, 0) = prev;
        for (std::size_t k = 1; k < p; ++k) {
          prev = rho * prev + innovation * rng.normal();
          data.at(i, k) = prev;
        }
        break;
      }
      case ModelId::E2c: {
        const std::size_t block = p / 5;
        const double noise = model_.param;
        for (std::size_t j = 0; j < block; ++j) {
          const double w = rng.normal();
          data.at(i, j) = w;
          data.at(i, block + j) = std::sin(kTwoPi * w);
          data.at(i, 2 * block + j) = std::cos(kTwoPi * w);
          data.at(i, 3 * block + j) = std::sin(2.0 * kTwoPi * w);
          data.at(i, 4 * block + j) = std::cos(2.0 * kTwoPi * w);
        }
        for (std::size_t k = 0; k < p; ++k) data.at(i, k) += noise * rng.normal();
        break;
      }
      case ModelId::E2d: {
        const std::size_t half = p / 2;
        for (std::size_t j = 0; j < half; ++j) {
          const double w = rng.normal();
          data.at(i, j) = w;
          data.at(i, half + j) = std::log(w * w);
        }
        for (std::size_t j = 0; j < half; ++j) data.at(i, half + j) += model_.param * rng.normal();
        break;
      }
      case ModelId::E3a:
        for (std::size_t k = 0; k < p; ++k) z[k] = rng.normal();
        for (std::size_t k = 0; k < p; ++k) {
          const auto& row = factor_rows_[k];
          double acc = 0.0;
          for (std::size_t t = 0; t < row.cols.size(); ++t) acc += row.weights[t] * z[row.cols[t]];
          data.at(i, k) = acc;
        }
        break;
      case ModelId::E3b:
      case ModelId::E3c:
      case ModelId::E3d: {
        // Column 1 is U = f(V), column 2 is V, the rest are independent W.
        for (std::size_t k = 1; k < p; ++k) data.at(i, k) = rng.normal();
        const double v = data.at(i, 1);
        double u = 0.0;
        if (model_.id == ModelId::E3b) {
          u = v * v + rng.normal() / 3.0;
        } else if (model_.id == ModelId::E3c) {
          u = v < 0.0 ? std::fabs(v + 0.5) : std::fabs(v - 0.5);
        } else {
          u = std::cos(kTwoPi * v) + model_.param * rng.normal();
        }
        data.at(i, 0) = u;
        break;
      }
    }
  }
  return data;
}

DataMatrix generate(const ModelSpec& model, std::size_t n, std::size_t p, RandomStream& stream) {
  return ModelSampler(model, n, p).draw(stream);
}

}  // namespace xihd
