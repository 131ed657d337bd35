#pragma once

#include <string_view>

namespace ulb {

/// Writes a diagnostic line to std::clog unless ULB_QUIET is set in the
/// environment.
void log_warning(std::string_view message);

}  // namespace ulb
