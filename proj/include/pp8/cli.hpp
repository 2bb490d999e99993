#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pp8 {

/// Command-line front end. Exit codes: 0 for success / PASS / "PP",
/// 1 for "not PP" / "not exceptional" / FAIL verdicts, 2 for usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pp8
