// Benchmark of the serial reference against the OpenMP kernels: the window
// table fill at several sizes and the exhaustive oracle at a fixed size.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "circumgon/oracle.hpp"
#include "circumgon/solver.hpp"

using circumgon::Config;
using circumgon::geom::ConvexPolygon;
using circumgon::solver::SlotList;

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
  std::vector<double> samples;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> sizes{100, 200, 400};
  int repeats = 3;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--repeats" && i + 1 < argc) {
      repeats = std::atoi(argv[++i]);
    } else if (arg == "--sizes" && i + 1 < argc) {
      sizes.clear();
      std::string list = argv[++i];
      size_t pos = 0;
      while (pos < list.size()) {
        size_t comma = list.find(',', pos);
        if (comma == std::string::npos) comma = list.size();
        sizes.push_back(std::atoi(list.substr(pos, comma - pos).c_str()));
        pos = comma + 1;
      }
    } else {
      std::fprintf(stderr, "usage: %s [--sizes 100,200,400] [--repeats 3]\n", argv[0]);
      return 2;
    }
  }

  Config serial;
  Config parallel;
  parallel.parallel = true;

  std::printf("window table fill, median of %d runs\n", repeats);
  std::printf("%8s %12s %12s %9s %s\n", "n", "serial ms", "parallel ms", "speedup", "match");
  std::mt19937_64 rng(20240815);
  for (int n : sizes) {
    ConvexPolygon poly = circumgon::oracle::random_valid_polygon(n, rng);
    double a_serial = 0.0, a_parallel = 0.0;
    double ts = time_ms([&] { a_serial = circumgon::solver::solve_max_area(poly, serial).area; },
                        repeats);
    double tp = time_ms(
        [&] { a_parallel = circumgon::solver::solve_max_area(poly, parallel).area; }, repeats);
    std::printf("%8d %12.2f %12.2f %8.2fx %s\n", n, ts, tp, ts / tp,
                a_serial == a_parallel ? "bit-equal" : "MISMATCH");
  }

  std::printf("\nexhaustive oracle, n=16, median of %d runs\n", repeats);
  ConvexPolygon poly = circumgon::oracle::random_valid_polygon(16, rng);
  SlotList slots = SlotList::from_polygon(poly);
  double b_serial = 0.0, b_parallel = 0.0;
  double ts = time_ms(
      [&] { b_serial = circumgon::oracle::brute_force_max(slots, serial).best_area; }, repeats);
  double tp = time_ms(
      [&] { b_parallel = circumgon::oracle::brute_force_max(slots, parallel).best_area; },
      repeats);
  std::printf("%8d %12.2f %12.2f %8.2fx %s\n", 16, ts, tp, ts / tp,
              b_serial == b_parallel ? "bit-equal" : "MISMATCH");
  return 0;
}
