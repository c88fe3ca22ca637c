#include <iostream>

#include "orlicz/acceptance.hpp"

int main(int argc, char** argv) {
  orlicz::AcceptanceOptions opts;
  if (argc > 1) opts.out_dir = argv[1];
  return orlicz::run_acceptance_suite(opts, std::cout);
}
