#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "qc/commands.hpp"

int main(int argc, char** argv) {
  const char* env = std::getenv("QC_COLOR");
  bool color = env != nullptr && std::strcmp(env, "1") == 0;
  std::vector<std::string> args(argv + 1, argv + argc);
  return qc::run(args, std::cout, std::cerr, color);
}
