#include "xihd/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "xihd/error.hpp"

namespace xihd {

unsigned configured_threads() {
  const char* raw = std::getenv("XIHD_THREADS");
  if (raw == nullptr || *raw == '\0') {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
  const std::string_view text(raw);
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw Error(ErrorCode::InvalidConfig,
                "XIHD_THREADS must be an integer >= 1, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace xihd
