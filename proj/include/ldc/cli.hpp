#pragma once

#include <iosfwd>

namespace ldc {

/// Entry point of the `ldc` command-line tool. Exit codes: 0 decided,
/// 1 usage or input error, 2 capacity or internal error.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace ldc
