#include <iostream>

#include "graphiso/cli.hpp"
#include "graphiso/parallel.hpp"

int main(int argc, char** argv) {
  graphiso::configure_threads_from_env();
  return graphiso::run_cli(argc, argv, std::cout, std::cerr);
}
