// bench.cpp -- compares the serial reference paths of the search and
// enumeration kernels against the OpenMP-parallel ones on larger inputs
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string_view>

#include "mealy/algebra.hpp"
#include "mealy/machine.hpp"
#include "mealy/morphism.hpp"
#include "mealy/parallel.hpp"

using namespace mealy;

namespace {

Alphabet letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('0' + i)));
  return Alphabet(names);
}

Machine random_machine(std::mt19937& rng, std::size_t nq, std::size_t na, std::string name) {
  std::uniform_int_distribution<State> qd(0, static_cast<State>(nq - 1));
  std::uniform_int_distribution<Sym> bd(0, static_cast<Sym>(na - 1));
  std::vector<std::string> states;
  for (std::size_t q = 0; q < nq; ++q) states.push_back("q" + std::to_string(q));
  std::vector<State> next(nq * na);
  std::vector<Sym> emit(nq * na);
  for (auto& t : next) t = qd(rng);
  for (auto& b : emit) b = bd(rng);
  return Machine(std::move(name), letters(na), letters(na), std::move(states), std::move(next),
                 std::move(emit));
}

Machine random_invertible(std::mt19937& rng, std::size_t nq, std::size_t na, std::string name) {
  std::uniform_int_distribution<State> qd(0, static_cast<State>(nq - 1));
  std::vector<std::string> states;
  for (std::size_t q = 0; q < nq; ++q) states.push_back("q" + std::to_string(q));
  std::vector<State> next(nq * na);
  std::vector<Sym> emit(nq * na);
  for (auto& t : next) t = qd(rng);
  std::vector<Sym> perm(na);
  for (Sym a = 0; a < na; ++a) perm[a] = a;
  for (std::size_t q = 0; q < nq; ++q) {
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Sym a = 0; a < na; ++a) emit[q * na + a] = perm[a];
  }
  return Machine(std::move(name), letters(na), letters(na), std::move(states), std::move(next),
                 std::move(emit));
}

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::string_view(argv[1]) == "--quick";
  std::printf("threads: %d (OpenMP %s)\n", par::max_threads(),
              par::openmp_enabled() ? "on" : "off");

  {
    // Homomorphism search: a pair without early accepts scans the whole
    // candidate space, which is the worst case for both modes.
    std::mt19937 rng(7);
    const std::size_t nq = quick ? 6 : 7;
    Machine src = random_machine(rng, nq, 2, "src");
    Machine dst = random_invertible(rng, 6, 2, "dst");
    HomSearch serial, parallel;
    double ts = seconds([&] { serial = find_homomorphism(src, dst, 1'000'000'000, exec::serial); });
    double tp = seconds([&] { parallel = find_homomorphism(src, dst, 1'000'000'000, exec::parallel); });
    bool same = serial.triple == parallel.triple && serial.refuted == parallel.refuted;
    std::printf("hom-search   serial %7.3fs   parallel %7.3fs   speedup %.2fx   %s\n", ts, tp,
                ts / tp, same ? "results match" : "RESULTS DIFFER");
  }

  {
    // Enumeration: per-level canonicalization batches.
    std::mt19937 rng(11);
    Machine m = random_invertible(rng, 3, 3, "gen");
    SemigroupOptions serial_opts{quick ? 400u : 1500u, 40, true, exec::serial};
    SemigroupOptions parallel_opts = serial_opts;
    parallel_opts.mode = exec::parallel;
    SemigroupResult rs, rp;
    double ts = seconds([&] { rs = enumerate_semigroup(m, serial_opts); });
    double tp = seconds([&] { rp = enumerate_semigroup(m, parallel_opts); });
    bool same = rs.elements.size() == rp.elements.size() && rs.status == rp.status;
    std::printf("enum         serial %7.3fs   parallel %7.3fs   speedup %.2fx   %s (%zu elements)\n",
                ts, tp, ts / tp, same ? "results match" : "RESULTS DIFFER", rs.elements.size());
  }

  return 0;
}
