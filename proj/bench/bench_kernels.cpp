// Times the fast kernels against their exact serial references.
#include <omp.h>

#include <chrono>
#include <cstdio>

#include "chatelet/elliptic.hpp"
#include "chatelet/invariants.hpp"

using namespace chatelet;
using Clock = std::chrono::steady_clock;

namespace {

double time_call(const std::function<void()>& f) {
  auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
  V0 v0 = build_v0(73, 5);
  QuadField K3 = make_quad_field(3);

  std::printf("%-46s %10s\n", "kernel", "seconds");

  // full-sweep enumeration at an all-zero place: no early exit possible
  for (long p : {31L, 73L}) {
    double ref = time_call([&] {
      invariant_value_set_enumerated(v0, Place::finite(p), 2, Engine::Reference);
    });
    std::printf("%-46s %10.3f\n",
                ("value set p=" + std::to_string(p) + " d2, exact reference").c_str(), ref);
    double fast = time_call(
        [&] { invariant_value_set_enumerated(v0, Place::finite(p), 2, Engine::Fast); });
    std::printf("%-46s %10.3f\n",
                ("value set p=" + std::to_string(p) + " d2, fast kernel").c_str(), fast);
  }

  double prof_serial = time_call([&] { profile_over_q(v0, 200, 4, false, true); });
  std::printf("%-46s %10.3f\n", "profile <200 d4 cross-checked, 1 thread", prof_serial);
  double prof_par = time_call([&] { profile_over_q(v0, 200, 4, true, true); });
  std::printf("%-46s %10.3f\n",
              ("profile <200 d4 cross-checked, " + std::to_string(omp_get_max_threads()) +
               " threads")
                  .c_str(),
              prof_par);

  double ext_par = time_call([&] { profile_over_ext(v0, K3, 200, 4, true); });
  std::printf("%-46s %10.3f\n", "extension profile <200 d4", ext_par);

  double ec_ref =
      time_call([&] { ec_affine_search(Int(-16), 3000, Engine::Reference, false); });
  std::printf("%-46s %10.3f\n", "ec height search 3000, exact reference", ec_ref);
  double ec_fast =
      time_call([&] { ec_affine_search(Int(-16), 10000, Engine::Fast, true); });
  std::printf("%-46s %10.3f\n", "ec height search 10000, fast parallel", ec_fast);

  return 0;
}
