#include <iostream>
#include <string>
#include <vector>

#include "ips/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = ips::cli::run(args);
  if (!result.error.empty()) (result.exit_code == 0 ? std::cout : std::cerr) << result.error << "\n";
  if (!result.report.empty()) std::cout << ips::dump_document(result.report);
  return result.exit_code;
}
