#include "adk/limits.hpp"

#include <cstdlib>
#include <string>

#include "adk/errors.hpp"

namespace adk {

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("ADK_LIMIT"); raw != nullptr && *raw != '\0') {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(raw, &used);
      if (used != std::string(raw).size() || v <= 0) throw Error("");
      limits.scan = v;
    } catch (const std::exception&) {
      throw Error(std::string("ADK_LIMIT must be a positive integer, got '") + raw + "'");
    }
  }
  return limits;
}

}  // namespace adk
