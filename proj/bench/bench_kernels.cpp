// Serial vs OpenMP timing of the first-match kernel and of full property scans.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ringlab/kernels.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/ring_spec.hpp"

using namespace ringlab;

namespace {

double best_of(int reps, const std::function<void()>& body) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

struct Workload {
  std::string name;
  std::function<std::string(Exec)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringlab kernel benchmark"};
  int reps = 3;
  int workers = 0;
  std::uint64_t scan = std::uint64_t{1} << 24;
  app.add_option("--reps", reps, "repetitions per measurement (best is reported)")->check(CLI::PositiveNumber);
  app.add_option("--workers", workers, "OpenMP workers (0 keeps the default)");
  app.add_option("--scan", scan, "index space of the synthetic scan");
  CLI11_PARSE(app, argc, argv);
  if (workers > 0) set_worker_count(workers);

  std::vector<Workload> loads;
  // The sentinel is a runtime value so the predicate cannot be folded away.
  const std::uint64_t sentinel = scan + static_cast<std::uint64_t>(argc);
  loads.push_back({"synthetic scan, no match", [scan, sentinel](Exec e) {
                     const auto r = first_match(
                         scan, [sentinel](std::uint64_t i) { return (i * 2654435761u) % (sentinel - 1) == sentinel; }, e);
                     return std::string(r ? "match" : "none");
                   }});
  loads.push_back({"synthetic scan, match at 3/4", [scan](Exec e) {
                     const std::uint64_t target = scan / 4 * 3;
                     const auto r = first_match(scan, [target](std::uint64_t i) { return i >= target; }, e);
                     return std::to_string(r.value_or(0));
                   }});
  for (const auto& [id, ring] : std::vector<std::pair<std::string, std::string>>{
           {"bezout", "Mat(2,Zn(3))"},
           {"hermite", "Zn(4)xZn(4)xZn(4)"},
           {"hermite", "Zn(8)xZn(8)"},
           {"hermite", "Tri(2,Zn(4))"}}) {
    const auto d = parse_ring_spec(ring);
    loads.push_back({id + " over " + ring, [id, d](Exec e) {
                       CheckOptions o;
                       o.exec = e;
                       return to_string(check_property(id, d, o).verdict);
                     }});
  }

  std::printf("workers: %d, reps: %d\n", worker_count(), reps);
  std::printf("%-36s %12s %12s %8s  %s\n", "workload", "serial s", "parallel s", "speedup", "result");
  for (const auto& w : loads) {
    std::string rs, rp;
    w.run(Exec::serial);  // warm-up: compiles Cayley tables once
    const double ts = best_of(reps, [&] { rs = w.run(Exec::serial); });
    const double tp = best_of(reps, [&] { rp = w.run(Exec::parallel); });
    std::printf("%-36s %12.4f %12.4f %8.2f  %s%s\n", w.name.c_str(), ts, tp, ts / tp, rs.c_str(),
                rs == rp ? "" : " (MISMATCH)");
  }
  return 0;
}
