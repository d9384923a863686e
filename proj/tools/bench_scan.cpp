// Compares the serial reference scan against the OpenMP block scan on the
// reduction search, and times the parallel contraction sweep. Workloads are
// seeded, so serial/parallel agreement is also asserted here.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lpa/contraction.hpp"
#include "lpa/moves.hpp"
#include "lpa/reduction.hpp"
#include "lpa/sampling.hpp"

using namespace lpa;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int elements = argc > 1 ? std::atoi(argv[1]) : 40;
  std::uint64_t depth = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 5;

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (OpenMP disabled)\n";
#endif

  Fixture fx = fixture(FixtureName::EX51, depth);
  Sampler sm(fx.E, Ring::Z(), 2024);
  std::vector<Element> xs;
  for (int i = 0; i < elements; ++i) xs.push_back(sm.nonzero_element(3, 2));

  ReduceOptions serial_opts;
  serial_opts.parallel = false;
  auto t0 = std::chrono::steady_clock::now();
  std::size_t serial_hits = 0;
  std::vector<std::string> serial_certs;
  for (const auto& x : xs) {
    auto r = reduce_serial(x, serial_opts);
    if (r.certificate) {
      ++serial_hits;
      serial_certs.push_back(serialize_certificate(*r.certificate));
    } else {
      serial_certs.emplace_back("EXHAUSTED");
    }
  }
  double serial_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  std::size_t parallel_hits = 0;
  std::vector<std::string> parallel_certs;
  for (const auto& x : xs) {
    auto r = reduce(x);
    if (r.certificate) {
      ++parallel_hits;
      parallel_certs.push_back(serialize_certificate(*r.certificate));
    } else {
      parallel_certs.emplace_back("EXHAUSTED");
    }
  }
  double parallel_ms = ms_since(t0);

  std::cout << "reduce serial:   " << serial_ms << " ms (" << serial_hits
            << "/" << elements << " certificates)\n";
  std::cout << "reduce parallel: " << parallel_ms << " ms (" << parallel_hits
            << "/" << elements << " certificates)\n";
  if (serial_certs != parallel_certs) {
    std::cout << "MISMATCH: serial and parallel scans disagree\n";
    return 1;
  }
  std::cout << "serial/parallel certificates identical\n";
  if (parallel_ms > 0)
    std::cout << "speedup: " << serial_ms / parallel_ms << "x\n";

  t0 = std::chrono::steady_clock::now();
  ContractionResult res = contract(fx.E, fx.G0, Ring::Z());
  double contract_ms = ms_since(t0);
  std::cout << "contract (depth " << depth << "): " << contract_ms << " ms, "
            << res.G->edges().size() << " edges\n";
  return 0;
}
