#include <iostream>
#include <string>
#include <vector>

#include "mawkit/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mawkit::RunCommand(args, std::cout, std::cerr);
}
