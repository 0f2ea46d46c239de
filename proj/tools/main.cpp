#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <vector>

#include "chatelet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bool color = isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
  return chatelet::dispatch(args, std::cout, std::cerr, color);
}
