#include "ulb/log.hpp"

#include <cstdlib>
#include <iostream>

namespace ulb {

void log_warning(std::string_view message) {
  static const bool quiet = std::getenv("ULB_QUIET") != nullptr;
  if (!quiet) std::clog << "[ulb] warning: " << message << '\n';
}

}  // namespace ulb
