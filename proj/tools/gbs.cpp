#include <iostream>
#include <string>
#include <vector>

#include "gbs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  const auto result = gbs::cli::main_entry(args);
  std::cout << result.output;
  return result.exit_code;
}
