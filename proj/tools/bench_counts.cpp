#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "nesto/construct.hpp"
#include "nesto/universe.hpp"

// Compares the parallel construct-counting kernel against the serial
// enumeration-based reference on compact members of one universe family.

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::string tag = argc > 1 ? argv[1] : "gamma:2";
  int max_n = argc > 2 ? std::atoi(argv[2]) : 8;
  int serial_cap = argc > 3 ? std::atoi(argv[3]) : 7;

  nesto::UniversePtr u = nesto::make_universe(tag);
  std::cout << "universe " << tag << "\n";
  std::cout << "n  total        parallel(s)  serial(s)\n";
  for (int n = 1; n <= max_n; ++n) {
    nesto::VSet carrier;
    for (int v = 1; v <= n; ++v) carrier.push_back(v);
    auto h = u->member(carrier);
    if (!h) {
      std::cout << n << "  not in universe\n";
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    auto par = nesto::count_by_nodes(*h);
    auto t1 = std::chrono::steady_clock::now();
    long long total = 0;
    for (long long c : par) total += c;

    std::cout << n << "  " << total << "  " << seconds(t0, t1);
    if (n <= serial_cap) {
      auto t2 = std::chrono::steady_clock::now();
      auto ser = nesto::count_by_nodes_serial(*h);
      auto t3 = std::chrono::steady_clock::now();
      std::cout << "  " << seconds(t2, t3)
                << (par == ser ? "  agree" : "  MISMATCH");
    } else {
      std::cout << "  (skipped)";
    }
    std::cout << "\n";
  }
  return 0;
}
