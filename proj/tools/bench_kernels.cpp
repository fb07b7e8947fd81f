// Compares the serial reference kernels against their OpenMP variants and
// verifies that both produce identical results.
//
//   bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "dyngal/expr.hpp"
#include "dyngal/frobscan.hpp"
#include "dyngal/phigroup.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace dyngal;

namespace {

template <class F>
double time_best_of(int repeats, F&& fn) {
  double best = 1e100;
  for (int i = 0; i < repeats; ++i) {
    auto start = std::chrono::steady_clock::now();
    fn();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    if (secs < best) best = secs;
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n", name,
              serial * 1e3, parallel * 1e3, serial / parallel,
              equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel kernels fall back to serial\n");
#endif

  {
    gf::Field k = gf::Field::prime(2);
    auto t0 = expr::eval_string(k, "t");
    auto s0 = expr::eval_string(k, "t^3");
    auto places = frobscan::good_places(k, t0, s0, 3, 9);
    std::vector<frobscan::Sample> a, b;
    double ts = time_best_of(repeats,
                             [&] { a = frobscan::scan_serial(k, t0, s0, 3, places); });
    double tp = time_best_of(repeats,
                             [&] { b = frobscan::scan_parallel(k, t0, s0, 3, places); });
    bool equal = a.size() == b.size();
    for (std::size_t i = 0; equal && i < a.size(); ++i)
      equal = a[i].place == b[i].place && a[i].cycle_type == b[i].cycle_type;
    std::printf("frobenius scan: %zu places, level 3\n", places.size());
    report("  place scan", ts, tp, equal);
  }

  {
    gf::Field k = gf::Field::make(2, 2);
    phig::PhiGroup G(k, 3);
    auto phi1 = phig::full_phi1(G);
    std::vector<phig::PhiGroup::Elem> a, b;
    double ts = time_best_of(repeats, [&] { a = phig::commutator_set_serial(G, phi1); });
    double tp = time_best_of(repeats, [&] { b = phig::commutator_set_parallel(G, phi1); });
    std::printf("commutator pair scan: |Phi_{3,1}| = %zu over F_4 (%zu pairs)\n",
                phi1.order(), phi1.order() * phi1.order());
    report("  commutator scan", ts, tp, a == b);
  }

  return 0;
}
