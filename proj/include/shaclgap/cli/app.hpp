#pragma once

#include <iosfwd>

namespace shaclgap::cli {

// Exit codes: 0 conforms / no gaps, 1 violations or gaps found,
// 2 input errors (unreadable files, parse or compile failures),
// 3 usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shaclgap::cli
