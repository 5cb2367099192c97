#include <string>
#include <vector>

#include "medaug/cli/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return medaug::cli::run(args);
}
