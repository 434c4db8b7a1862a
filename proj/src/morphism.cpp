#include "mealy/morphism.hpp"

#include <algorithm>

#include "mealy/error.hpp"

namespace mealy {

namespace {

// Mixed-radix candidate space: a candidate index decodes into three image
// tuples, most significant digit first, so numeric index order is the
// lexicographic order of (map1, map2, map3).
struct MapSpace {
  std::size_t domain = 0;  // number of source items
  std::size_t range = 0;   // number of image choices per item
  std::uint64_t count = 1; // range^domain

  static MapSpace make(std::size_t domain, std::size_t range, std::uint64_t budget) {
    MapSpace s{domain, range, 1};
    for (std::size_t i = 0; i < domain; ++i) {
      unsigned __int128 grown = (unsigned __int128)s.count * range;
      if (grown > budget)
        fail(errc::search_space_too_large, "candidate space exceeds the search budget");
      s.count = static_cast<std::uint64_t>(grown);
    }
    return s;
  }

  template <class T>
  void decode(std::uint64_t index, std::vector<T>& out) const {
    out.resize(domain);
    for (std::size_t i = domain; i-- > 0;) {
      out[i] = static_cast<T>(index % range);
      index /= range;
    }
  }
};

struct TripleSpace {
  MapSpace m1, m2, m3;
  std::uint64_t total = 0;

  static TripleSpace make(std::size_t d1, std::size_t r1, std::size_t d2, std::size_t r2,
                          std::size_t d3, std::size_t r3, std::uint64_t budget) {
    TripleSpace s;
    s.m1 = MapSpace::make(d1, r1, budget);
    s.m2 = MapSpace::make(d2, r2, budget);
    s.m3 = MapSpace::make(d3, r3, budget);
    unsigned __int128 total =
        (unsigned __int128)s.m1.count * s.m2.count * s.m3.count;
    if (total > budget)
      fail(errc::search_space_too_large, "candidate space exceeds the search budget");
    s.total = static_cast<std::uint64_t>(total);
    return s;
  }
};

// Scans candidate indices in blocks; within a block verification runs in
// parallel, and the smallest verifying index wins, so serial and parallel
// modes return the same candidate.
template <class Verify>
std::optional<std::uint64_t> scan_first(std::uint64_t total, exec mode, Verify&& verify) {
  constexpr std::uint64_t kBlock = 1 << 15;
  std::vector<char> hit(std::min<std::uint64_t>(kBlock, total), 0);
  for (std::uint64_t base = 0; base < total; base += kBlock) {
    const std::size_t count = static_cast<std::size_t>(std::min(kBlock, total - base));
    std::fill(hit.begin(), hit.begin() + count, 0);
    par::for_each_index(mode, count,
                        [&](std::size_t k) { hit[k] = verify(base + k) ? 1 : 0; });
    for (std::size_t k = 0; k < count; ++k)
      if (hit[k]) return base + k;
  }
  return std::nullopt;
}

bool identity_triple_fits(std::size_t d1, std::size_t r1, std::size_t d2, std::size_t r2,
                          std::size_t d3, std::size_t r3) {
  return d1 <= r1 && d2 <= r2 && d3 <= r3;
}

template <class T>
std::vector<T> iota_map(std::size_t n) {
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<T>(i);
  return out;
}

}  // namespace

std::optional<std::pair<State, Sym>> homomorphism_violation(const Machine& src,
                                                            const Machine& dst,
                                                            const MorphismTriple& t) {
  if (t.state_map.size() != src.state_count() || t.in_map.size() != src.input().size() ||
      t.out_map.size() != src.output().size())
    fail(errc::partial_triple, "morphism triple is not total on the source sorts");
  for (State image : t.state_map)
    if (image >= dst.state_count()) fail(errc::partial_triple, "state image out of range");
  for (Sym image : t.in_map)
    if (image >= dst.input().size()) fail(errc::partial_triple, "input image out of range");
  for (Sym image : t.out_map)
    if (image >= dst.output().size()) fail(errc::partial_triple, "output image out of range");

  for (State q = 0; q < src.state_count(); ++q)
    for (Sym a = 0; a < src.input().size(); ++a) {
      auto [sn, sb] = src.step(q, a);
      auto [dn, db] = dst.step(t.state_map[q], t.in_map[a]);
      if (t.state_map[sn] != dn || t.out_map[sb] != db) return std::make_pair(q, a);
    }
  return std::nullopt;
}

HomSearch find_homomorphism(const Machine& src, const Machine& dst, std::uint64_t budget,
                            exec mode) {
  const TripleSpace space =
      TripleSpace::make(src.state_count(), dst.state_count(), src.input().size(),
                        dst.input().size(), src.output().size(), dst.output().size(), budget);

  auto decode = [&](std::uint64_t index) {
    MorphismTriple t;
    space.m3.decode(index % space.m3.count, t.out_map);
    index /= space.m3.count;
    space.m2.decode(index % space.m2.count, t.in_map);
    space.m1.decode(index / space.m2.count, t.state_map);
    return t;
  };

  if (identity_triple_fits(src.state_count(), dst.state_count(), src.input().size(),
                           dst.input().size(), src.output().size(), dst.output().size())) {
    MorphismTriple id{iota_map<State>(src.state_count()), iota_map<Sym>(src.input().size()),
                      iota_map<Sym>(src.output().size())};
    if (verify_homomorphism(src, dst, id)) return HomSearch{std::move(id), 0};
  }

  auto winner = scan_first(space.total, mode, [&](std::uint64_t index) {
    return verify_homomorphism(src, dst, decode(index));
  });
  if (winner) return HomSearch{decode(*winner), *winner};
  return HomSearch{std::nullopt, space.total};
}

std::optional<std::pair<State, Word>> simulation_violation(const Machine& target,
                                                           const Machine& by,
                                                           const SimulationTriple& t,
                                                           std::size_t depth) {
  if (t.state_map.size() != target.state_count() || t.in_map.size() != target.input().size() ||
      t.out_map.size() != by.output().size())
    fail(errc::partial_triple, "simulation triple is not total");
  for (State image : t.state_map)
    if (image >= by.state_count()) fail(errc::partial_triple, "state image out of range");
  for (Sym image : t.in_map)
    if (image >= by.input().size()) fail(errc::partial_triple, "input image out of range");
  for (Sym image : t.out_map)
    if (image >= target.output().size()) fail(errc::partial_triple, "output image out of range");

  for (const Word& u : words_up_to(target.input(), depth)) {
    if (u.empty()) continue;
    Word mapped;
    for (Sym a : u) mapped.push_back(t.in_map[a]);
    for (State q = 0; q < target.state_count(); ++q) {
      Word lhs = run_output(target, q, u);
      Word rhs = run_output(by, t.state_map[q], mapped);
      for (std::size_t i = 0; i < rhs.size(); ++i)
        if (lhs[i] != t.out_map[rhs[i]]) return std::make_pair(q, u);
    }
  }
  return std::nullopt;
}

SimSearch find_simulation(const Machine& target, const Machine& by, std::size_t depth,
                          std::uint64_t budget, exec mode) {
  if (depth < 1) fail(errc::parse_error, "simulation probe depth must be >= 1");
  const TripleSpace space =
      TripleSpace::make(target.state_count(), by.state_count(), target.input().size(),
                        by.input().size(), by.output().size(), target.output().size(), budget);

  auto decode = [&](std::uint64_t index) {
    SimulationTriple t;
    space.m3.decode(index % space.m3.count, t.out_map);
    index /= space.m3.count;
    space.m2.decode(index % space.m2.count, t.in_map);
    space.m1.decode(index / space.m2.count, t.state_map);
    return t;
  };

  auto verifies = [&](const SimulationTriple& t) {
    return !simulation_violation(target, by, t, depth).has_value();
  };

  if (identity_triple_fits(target.state_count(), by.state_count(), target.input().size(),
                           by.input().size(), by.output().size(), target.output().size())) {
    SimulationTriple id{iota_map<State>(target.state_count()),
                        iota_map<Sym>(target.input().size()),
                        iota_map<Sym>(by.output().size())};
    if (verifies(id)) return SimSearch{std::move(id), 0};
  }

  auto winner = scan_first(space.total, mode,
                           [&](std::uint64_t index) { return verifies(decode(index)); });
  if (winner) return SimSearch{decode(*winner), *winner};
  return SimSearch{std::nullopt, space.total};
}

}  // namespace mealy
