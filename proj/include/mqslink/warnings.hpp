#pragma once

#include <string>

namespace mqs {

// Non-fatal diagnostics (quadrature accuracy, unit mismatches, out-of-band
// evaluation).  Default handler writes "warning: ..." to stderr; tests and
// the CLI may install their own sink.
using WarningHandler = void (*)(const std::string& message);

// Returns the previous handler.  Passing nullptr restores the default.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(const std::string& message);

}  // namespace mqs
