#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "xihd/data_matrix.hpp"
#include "xihd/rng.hpp"

namespace xihd {

// Simulation designs. E1* are null models, E2* dense alternatives and E3*
// sparse alternatives.
enum class ModelId { E1a, E1b, E1c, E1d, E2a, E2b, E2c, E2d, E3a, E3b, E3c, E3d };

inline constexpr ModelId kAllModels[] = {ModelId::E1a, ModelId::E1b, ModelId::E1c, ModelId::E1d,
                                         ModelId::E2a, ModelId::E2b, ModelId::E2c, ModelId::E2d,
                                         ModelId::E3a, ModelId::E3b, ModelId::E3c, ModelId::E3d};

std::string_view to_string(ModelId id) noexcept;
std::optional<ModelId> parse_model_id(std::string_view name);

// `param` is the one tunable of each design:
//   E2a  common correlation rho (0.1)
//   E2b  AR(1) coefficient rho (0.3)
//   E2c  noise scale (0.4)
//   E2d  scale of the additive normal term (3)
//   E3a  signal constant c in sigma_12 = c sqrt(log p / n) (2.7)
//   E3d  noise scale lambda (0.05)
// and is ignored by the other models.
struct ModelSpec {
  ModelId id = ModelId::E1a;
  double param = 0.0;

  bool operator==(const ModelSpec&) const = default;
};

ModelSpec default_model(ModelId id) noexcept;

// Throws BadShape (E2c needs p % 5 == 0, E2d needs even p, E3* need p >= 3)
// or DomainTooSmall (n < 5, p < 2).
void check_shape(const ModelSpec& model, std::size_t n, std::size_t p);

// Dense symmetric matrix, row-major.
struct SquareMatrix {
  std::size_t dim = 0;
  std::vector<double> values;

  explicit SquareMatrix(std::size_t d = 0) : dim(d), values(d * d, 0.0) {}
  static SquareMatrix identity(std::size_t d);

  double& operator()(std::size_t i, std::size_t j) { return values[i * dim + j]; }
  double operator()(std::size_t i, std::size_t j) const { return values[i * dim + j]; }
};

// Lower-triangular L with L L^T = sigma. Throws NotPositiveDefinite (also for
// asymmetric input).
SquareMatrix cholesky(const SquareMatrix& sigma);

// Draws i.i.d. samples from one design at fixed (n, p). Per-design setup such
// as the Cholesky factor is done once at construction.
class ModelSampler {
 public:
  ModelSampler(const ModelSpec& model, std::size_t n, std::size_t p);

  DataMatrix draw(RandomStream& stream) const;

  const ModelSpec& model() const noexcept { return model_; }

 private:
  struct SparseRow {
    std::vector<std::size_t> cols;
    std::vector<double> weights;
  };

  ModelSpec model_;
  std::size_t n_;
  std::size_t p_;
  std::vector<SparseRow> factor_rows_;  // E3a only
};

DataMatrix generate(const ModelSpec& model, std::size_t n, std::size_t p, RandomStream& stream);

}  // namespace xihd
