#include "mqslink/warnings.hpp"

#include <cstdio>

namespace mqs {
namespace {

void default_handler(const std::string& message) {
  std::fprintf(stderr, "warning: %s\n", message.c_str());
}

WarningHandler g_handler = &default_handler;

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
  const WarningHandler previous = g_handler;
  g_handler = (handler != nullptr) ? handler : &default_handler;
  return previous;
}

void warn(const std::string& message) { g_handler(message); }

}  // namespace mqs
