// Times the OpenMP-chunked quadrature kernel against the serial reference
// on the built-in models and reports the discrepancy between the two.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gns/models.hpp"
#include "gns/oracle.hpp"

namespace {

double time_call(double& value, const gns::QuadratureSpec& spec,
                 const gns::LogLikelihoodFn& fn, bool parallel) {
  const auto t0 = std::chrono::steady_clock::now();
  value = parallel ? gns::grid_log_evidence(spec, fn)
                   : gns::grid_log_evidence_serial(spec, fn);
  const std::chrono::duration<double> dt =
      std::chrono::steady_clock::now() - t0;
  return dt.count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t grid = 1024;
  if (argc > 1) grid = std::strtoull(argv[1], nullptr, 10);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  std::printf("grid: %zu points per dimension\n\n", grid);
  std::printf("%-24s %12s %12s %9s %12s\n", "model", "serial [s]",
              "parallel [s]", "speedup", "|delta|");

  for (const auto& info : gns::model_catalog()) {
    const gns::ModelSpec model = gns::make_model(info.name, {});
    const gns::QuadratureSpec spec{grid, model.space};
    double serial_value = 0.0, parallel_value = 0.0;
    const double ts = time_call(serial_value, spec, model.log_likelihood, false);
    const double tp = time_call(parallel_value, spec, model.log_likelihood, true);
    std::printf("%-24s %12.3f %12.3f %8.2fx %12.3e\n", info.name.c_str(), ts,
                tp, ts / tp, std::abs(serial_value - parallel_value));
  }
  return 0;
}
