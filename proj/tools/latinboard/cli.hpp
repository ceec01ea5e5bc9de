#pragma once

#include <iosfwd>

namespace latin::app {

enum Exit : int { ok = 0, usage = 1, verify_failed = 2, exhausted = 3 };

/// Runs one `latinboard` invocation. Documents are read from `in` when the
/// file argument is "-" (the default).
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace latin::app
