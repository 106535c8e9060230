#include <iostream>
#include <string>
#include <vector>

#include "wbcast/cli.h"

int main(int argc, char** argv) {
  return wbcast::RunCli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
