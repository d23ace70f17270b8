#include "morrey/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "morrey/error.hpp"

namespace morrey {

unsigned thread_limit() {
  const unsigned fallback = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("MORREY_THREADS");
  if (env == nullptr || *env == '\0') return fallback;
  std::string_view text(env);
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ArgumentError("MORREY_THREADS must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace morrey
