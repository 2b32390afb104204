// Times the OpenMP search join against the serial brute force and against
// itself at different worker counts.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "circlesym/localization/search.hpp"

using namespace circlesym::localization;

namespace {

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  const int max_workers = std::max(2, omp_get_max_threads());
  std::printf("%-26s %8s %12s %10s %8s\n", "template", "workers", "nodes", "seconds", "hits");
  for (const auto t : kAllTemplates) {
    SearchOptions opt;
    opt.shape = t;
    opt.flags = {true, true, true};
    for (int w : {1, max_workers}) {
      opt.workers = w;
      SearchResult r;
      const double s = seconds([&] { r = search_case(opt); });
      std::printf("%-26s %8d %12llu %10.3f %8zu\n", std::string(to_string(t)).c_str(), w,
                  static_cast<unsigned long long>(r.nodes), s, r.hits.size());
    }
  }

  // serial reference only fits tiny bounds
  std::printf("\nfast join vs serial brute force, cp2like_plus_point, bounds (2, 1, 3)\n");
  SearchOptions small;
  small.shape = Template::cp2like_plus_point;
  small.bounds = {.max_weight = 2, .max_abs_a = 1, .max_abs_eval = 3, .max_genus = 0};
  small.ranges = {.t_min = 1, .t_max = 6, .rho_min = -6, .rho_max = 8};
  SearchResult fast, ref;
  const double sf = seconds([&] { fast = search_case(small); });
  const double sr = seconds([&] { ref = search_case_reference(small); });
  std::printf("join       %10.4f s  %zu hits\nreference  %10.4f s  %zu hits  %s\n", sf, fast.hits.size(),
              sr, ref.hits.size(), fast.hits == ref.hits ? "same" : "DIFFERENT");
  return fast.hits == ref.hits ? 0 : 1;
}
