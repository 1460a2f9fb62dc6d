#include "wciforge/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  std::optional<std::string> caps_env;
  if (const char* value = std::getenv("WCIFORGE_CAPS")) {
    caps_env = value;
  }
  const std::vector<std::string> args(argv + 1, argv + argc);
  return wciforge::run_cli(args, {std::cin, std::cout, std::cerr, caps_env});
}
