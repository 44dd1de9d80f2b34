#pragma once

#include <ostream>

namespace qwhit {

/// Entry point shared by the qwhit tool and the tests. Exit codes: 0 when
/// every check passes, 1 on a failed or erroring check, 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwhit
