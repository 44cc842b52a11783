#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antiauto::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,      // `check` rejected the map, or `verify` had a failing line
  kUnknown = 2,          // undecided within budget
  kUsage = 64,           // bad arguments or unparsable input
  kDataError = 65,       // method not applicable to the group
  kInternal = 70,
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace antiauto::cli
