// Wall-clock comparison of the parallel avoider counter against the serial
// reference on a few mid-size instances.  Not registered with ctest; build
// and run the `bench` target directly.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wreath/core.hpp"
#include "wreath/enumeration.hpp"

using namespace wreath;

namespace {

double run_ms(BigInt (*counter)(const EnumSpec&, const PatternSet&),
              const EnumSpec& spec, const PatternSet& s, BigInt& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = counter(spec, s);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif

  struct Case {
    int n, k;
    const char* patterns;
  };
  const Case cases[] = {
      {7, 2, "1-2/0,0;1-2/0,1"},
      {8, 2, "1-2/0,0;1-2/0,1"},
      {7, 2, "1-2/0,1"},
      {6, 3, "1-2/0,1"},
  };

  std::printf("%3s %3s %12s %12s %12s %9s %8s\n", "n", "k", "elements", "serial_ms",
              "parallel_ms", "speedup", "threads");
  int mismatches = 0;
  for (const Case& c : cases) {
    const EnumSpec spec{c.n, c.k, kDefaultBudget};
    const PatternSet s = parse_pattern_set(c.patterns, Mode::reduced);
    BigInt serial_count, parallel_count;
    const double serial_ms = run_ms(count_avoiders_serial, spec, s, serial_count);
    const double parallel_ms = run_ms(count_avoiders, spec, s, parallel_count);
    if (serial_count != parallel_count) {
      ++mismatches;
      std::printf("count mismatch at n=%d k=%d: serial %s parallel %s\n", c.n, c.k,
                  serial_count.str().c_str(), parallel_count.str().c_str());
      continue;
    }
    std::printf("%3d %3d %12s %12.1f %12.1f %8.2fx %8d\n", c.n, c.k,
                wreath_size(c.n, c.k).str().c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, threads);
  }
  return mismatches ? 1 : 0;
}
