#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace branchlaw::cli {

// args excludes the program name. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Splits a batch line into arguments, honouring single and double quotes.
std::vector<std::string> tokenize(const std::string& line);

}  // namespace branchlaw::cli
