#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace xihd {

// Philox4x32-10 counter-based bijection (Salmon et al., Random123).
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter apply(Counter counter, Key key) noexcept;
};

// A random stream identified by (seed, stream id). Output block b of stream s
// is Philox(counter = {b, s}, key = seed), so two streams with distinct ids
// never share a counter value and any stream can be created without touching
// the others.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept { return next_u64(); }

  std::uint64_t next_u64() noexcept;

  // Uniform on the open interval (0, 1) with 53-bit resolution.
  double uniform() noexcept;
  // Standard normal by inversion of the CDF.
  double normal() noexcept;
  // Standard Cauchy, tan(pi (U - 1/2)).
  double cauchy() noexcept;
  // Student t with 3 degrees of freedom, Z / sqrt(chi2_3 / 3).
  double student_t3() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
};

}  // namespace xihd
