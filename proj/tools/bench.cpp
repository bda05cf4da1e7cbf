#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "parab/parallel.hpp"
#include "parab/suites.hpp"

using namespace parab;

namespace {

double timed(const std::function<Json()>& f, Json& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int nmax = argc > 1 ? std::atoi(argv[1]) : 5;
  DomainSpec solid{DomainKind::SolidBounded, 3, Rat(1, 2), Rat(1)};
  DomainSpec surf{DomainKind::SurfaceBounded, 3, Rat(1, 2), Rat(1, 2)};

  struct Job {
    std::string name;
    std::function<Json()> run;
  };
  const std::vector<Job> jobs = {
      {"orthogonality solid-jacobi d=3 nmax=" + std::to_string(nmax),
       [&] { return orthogonality_suite(solid, nmax); }},
      {"orthogonality surface-jacobi d=3 nmax=" + std::to_string(nmax + 2),
       [&] { return orthogonality_suite(surf, nmax + 2); }},
      {"bernstein SolidJ34 d=3 n=4 trials=40",
       [&] { return bernstein_suite(TheoremId::SolidJ34, solid, 4, 40, 7); }},
  };

  set_worker_count(0);
  std::printf("workers: %d\n", worker_count());
  int rc = 0;
  for (const Job& job : jobs) {
    Json a, b;
    set_worker_count(1);
    const double ts = timed(job.run, a);
    set_worker_count(0);
    const double tp = timed(job.run, b);
    const bool same = a == b;
    std::printf("%-46s serial %7.3fs  parallel %7.3fs  speedup %5.2f  identical %s\n",
                job.name.c_str(), ts, tp, tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
    if (!same) rc = 1;
  }
  return rc;
}
