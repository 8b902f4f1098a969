#pragma once

#include <ostream>

namespace coxinv {

// Exit status: 0 success, 1 verification or table mismatch, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxinv
