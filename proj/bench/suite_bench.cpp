// Serial vs parallel suite: wall time and aggregate equality.
// usage: gd_bench [count] [seed]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "gd/verify.hpp"

int main(int argc, char** argv) {
  namespace chrono = std::chrono;
  gd::SuiteOptions o;
  o.count = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200;
  o.seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 42;

  auto t0 = chrono::steady_clock::now();
  const gd::SuiteReport ser = gd::run_suite_serial(o);
  auto t1 = chrono::steady_clock::now();
  const gd::SuiteReport par = gd::run_suite(o);
  auto t2 = chrono::steady_clock::now();

  const double ts = chrono::duration<double>(t1 - t0).count();
  const double tp = chrono::duration<double>(t2 - t1).count();
  std::cout << "cells    " << ser.cells() << "\n"
            << "threads  " << omp_get_max_threads() << "\n"
            << "serial   " << ts << " s\n"
            << "parallel " << tp << " s\n"
            << "speedup  " << (tp > 0 ? ts / tp : 0) << "\n"
            << "equal    " << (ser == par ? "yes" : "no") << "\n";
  return ser == par ? 0 : 1;
}
