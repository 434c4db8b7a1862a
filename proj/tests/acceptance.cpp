// acceptance.cpp -- end-to-end checks of the deliverable behaviors, one
// printed pass/fail line per criterion
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "mealy/algebra.hpp"
#include "mealy/compose.hpp"
#include "mealy/error.hpp"
#include "mealy/invert.hpp"
#include "mealy/morphism.hpp"
#include "mealy/seqfn.hpp"

using namespace mealy;
using namespace fixtures;

namespace {

int failures = 0;
int counter = 0;

void criterion(const std::string& name, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
  ++counter;
  std::string note;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && time_limit_s > 0 && secs > time_limit_s) {
    ok = false;
    note = "time limit " + std::to_string(time_limit_s) + "s exceeded";
  }
  std::printf("[%2d/11] %s %-32s (%.2fs)%s%s\n", counter, ok ? "PASS" : "FAIL", name.c_str(),
              secs, note.empty() ? "" : " -- ", note.c_str());
  if (!ok) ++failures;
}

bool check(bool cond, std::string& note, const std::string& message) {
  if (!cond && note.empty()) note = message;
  return cond;
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");

  // 1. The two-state complement machine generates the Klein four-group,
  //    with the exact witnesses and multiplication table.
  criterion("klein-four reproduction", 1.0, [](std::string& note) {
    SemigroupResult r = enumerate_semigroup(v20(), {100, 10, false, exec::parallel});
    bool ok = check(r.status == SemigroupResult::Status::finite, note, "not finite");
    ok = ok && check(r.elements.size() == 4, note, "expected exactly 4 elements");
    if (!ok) return false;
    std::vector<std::string> witnesses;
    for (const ElementCanon& e : r.elements) witnesses.push_back(format_gen_word(v20(), e.witness));
    ok = check(witnesses == std::vector<std::string>{"p", "q", "pp", "pq"}, note,
               "unexpected witnesses");
    std::vector<std::vector<std::uint32_t>> want = {
        {2, 3, 0, 1}, {3, 2, 1, 0}, {0, 1, 2, 3}, {1, 0, 3, 2}};
    return ok && check(r.table == want, note, "table mismatch");
  });

  // 2. The inverse machine matches the worked example entry for entry and
  //    cancels its source down to the identity element.
  criterion("inverse machine", 1.0, [](std::string& note) {
    Machine inv = invert(v12());
    Machine want = v12_prime();
    int matches = 0;
    for (State q = 0; q < 2; ++q)
      for (Sym a = 0; a < 2; ++a) {
        if (inv.next(q, a) == want.next(q, a)) ++matches;
        if (inv.emit(q, a) == want.emit(q, a)) ++matches;
      }
    bool ok = check(matches == 8, note,
                    "only " + std::to_string(matches) + "/8 table entries match");
    InitialMachine cancel = cascade(InitialMachine(v12(), 0), InitialMachine(inv, 0));
    return ok && check(canon_key(canonicalize(cancel)) ==
                           canon_key(canonicalize(InitialMachine(identity_machine(), 0))),
                       note, "cascade with inverse is not the identity element");
  });

  // 3. Both cascade equations on 100 random machine pairs, every product
  //    state, every word of length <= 5.
  criterion("cascade lemma", 0, [](std::string& note) {
    std::mt19937 rng(101);
    std::uniform_int_distribution<std::size_t> nq(1, 4), nk(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t k = nk(rng);
      Machine f = random_machine(rng, nq(rng), k, k, "f");
      Machine s = random_machine(rng, nq(rng), k, k, "s");
      InitialMachine product = cascade(InitialMachine(f, 0), InitialMachine(s, 0));
      const std::size_t n1 = f.state_count();
      for (State q2 = 0; q2 < s.state_count(); ++q2)
        for (State q1 = 0; q1 < n1; ++q1)
          for (const Word& u : words_up_to(f.input(), 5)) {
            State pq = static_cast<State>(q2 * n1 + q1);
            auto [state, out] = run(InitialMachine(product.machine, pq), u);
            Word bridge = run_output(f, q1, u);
            bool state_eq =
                state == static_cast<State>(run_state(s, q2, bridge) * n1 + run_state(f, q1, u));
            bool out_eq = out == run_output(s, q2, bridge);
            if (!check(state_eq && out_eq, note, "lemma failed in trial " + std::to_string(trial)))
              return false;
          }
    }
    return true;
  });

  // 4. Inverse laws u q q^-1 = u q^-1 q = u on 50 random invertible machines.
  criterion("inverse laws", 0, [](std::string& note) {
    std::mt19937 rng(102);
    std::uniform_int_distribution<std::size_t> nq(1, 4), na(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
      Machine m = random_invertible(rng, nq(rng), na(rng), "m");
      for (State q = 0; q < m.state_count(); ++q)
        for (const Word& u : words_up_to(m.input(), 4)) {
          bool cancel = act(m, {{q, false}, {q, true}}, u) == u &&
                        act(m, {{q, true}, {q, false}}, u) == u;
          if (!check(cancel, note, "cancellation failed in trial " + std::to_string(trial)))
            return false;
        }
    }
    return true;
  });

  // 5. Structural equality of canonical forms == exhaustive functional
  //    equality up to the product-state bound, on 50 random pairs.
  criterion("canonical-form soundness", 0, [](std::string& note) {
    std::mt19937 rng(103);
    std::uniform_int_distribution<std::size_t> nq(1, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
      Machine x = random_machine(rng, nq(rng), 2, 2, "x");
      InitialMachine xi(x, 0);
      // Half the trials compare against a reshuffled, state-padded disguise
      // of the same function so both sides of the equivalence get exercised.
      InitialMachine yi = coin(rng) ? InitialMachine(random_machine(rng, nq(rng), 2, 2, "y"), 0)
                                    : disguise(rng, x, 0, 4);
      std::size_t bound = x.state_count() * yi.machine.state_count();
      bool canon_same = canon_key(canonicalize(xi)) == canon_key(canonicalize(yi));
      bool func_same = functionally_equal(xi, yi, bound);
      if (!check(canon_same == func_same, note, "disagreement in trial " + std::to_string(trial)))
        return false;
    }
    return true;
  });

  // 6. Quotient exploration closes with exactly the canonical state count,
  //    and synthesis rebuilds the function, for every fixture machine.
  criterion("synthesis theorem", 0, [](std::string& note) {
    std::vector<InitialMachine> fixtures_list{
        InitialMachine(v11(), 0),     InitialMachine(v12(), 0),
        InitialMachine(v12_prime(), 0), InitialMachine(v20(), 0),
        InitialMachine(v20(), 1),     InitialMachine(odometer(), 0),
        InitialMachine(identity_machine(), 0)};
    for (const InitialMachine& im : fixtures_list) {
      SeqFn f = machine_fn(im);
      QuotientTable t = explore_quotients(f, 4, 64);
      if (!check(t.closed, note, im.machine.name() + ": exploration did not close")) return false;
      std::size_t canonical_states = canonicalize(im).machine.state_count();
      if (!check(t.reps.size() == canonical_states, note,
                 im.machine.name() + ": " + std::to_string(t.reps.size()) + " representatives vs " +
                     std::to_string(canonical_states) + " canonical states"))
        return false;
      InitialMachine synth = synthesize(t, f);
      for (const Word& v : words_up_to(im.machine.input(), 4))
        if (!check(run(synth, v).output == f.eval(v), note,
                   im.machine.name() + ": synthesized machine disagrees"))
          return false;
    }
    return true;
  });

  // 7. Neither of the mutually inverse two-state machines simulates the
  //    other at probe depth 2.
  criterion("non-simulation", 5.0, [](std::string& note) {
    SimSearch forward = find_simulation(v12(), v12_prime(), 2, 1'000'000, exec::parallel);
    SimSearch backward = find_simulation(v12_prime(), v12(), 2, 1'000'000, exec::parallel);
    return check(!forward.triple && !backward.triple, note, "a simulation triple was found");
  });

  // 8. A target with a state fixed point admits a homomorphism from any
  //    machine; the search must find and verify one.
  criterion("fixed-point homomorphism", 0, [](std::string& note) {
    std::mt19937 rng(104);
    std::uniform_int_distribution<std::size_t> nq(1, 4), na(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t k = na(rng);
      Machine src = random_machine(rng, nq(rng), na(rng), na(rng), "src");
      Machine dst = random_with_fixed_point(rng, nq(rng), k, "dst");
      HomSearch r = find_homomorphism(src, dst, 10'000'000, exec::parallel);
      if (!check(r.triple.has_value(), note, "no triple found in trial " + std::to_string(trial)))
        return false;
      if (!check(verify_homomorphism(src, dst, *r.triple), note,
                 "unverified triple in trial " + std::to_string(trial)))
        return false;
    }
    return true;
  });

  // 9. The binary odometer witnesses an infinite group: 50 distinct
  //    elements under signed enumeration, and 8 distinct powers on the
  //    all-zero input, cross-checked against +n (mod 2^k) arithmetic.
  criterion("infiniteness lower bound", 10.0, [](std::string& note) {
    SemigroupResult r = enumerate_semigroup(odometer(), {50, 100, true, exec::parallel});
    bool ok = check(r.status == SemigroupResult::Status::lower_bound_only, note,
                    "expected a lower-bound verdict");
    ok = ok && check(r.elements.size() >= 50, note, "fewer than 50 distinct elements");
    if (!ok) return false;

    std::vector<GenWord> powers;
    GenWord acc;
    for (int n = 1; n <= 8; ++n) {
      acc.push_back({0, false});
      powers.push_back(acc);
    }
    UPWord zeros(Word{}, Word{0});
    ok = check(orbit_witness(odometer(), powers, zeros) == 8, note,
               "expected 8 distinct orbit outputs");

    // Independent oracle: s^n on 0^18 reads back n in binary, LSB first.
    const std::size_t probe_len = 2 * powers.size() + 2;
    for (std::size_t n = 1; n <= 8 && ok; ++n) {
      Word got = act(odometer(), powers[n - 1], Word(std::vector<Sym>(probe_len, 0)));
      std::size_t value = 0;
      for (std::size_t i = 0; i < got.size(); ++i)
        value += static_cast<std::size_t>(got[i]) << i;
      ok = check(value == n % (std::size_t{1} << probe_len), note,
                 "power " + std::to_string(n) + " does not act as +n");
    }
    return ok;
  });

  // 10. Tree facts: level counts against explicit enumeration, and
  //     canonical labelings of 20 shuffled depth-4 binary trees are
  //     isomorphisms.
  criterion("tree facts", 0, [](std::string& note) {
    for (std::size_t p : {2u, 3u}) {
      std::vector<Word> words = words_up_to(letters(p), 6);
      for (std::size_t n = 0; n <= 6; ++n) {
        std::size_t explicit_count = 0;
        for (const Word& w : words)
          if (w.size() == n) ++explicit_count;
        if (!check(level_count(p, n) == explicit_count, note,
                   "level count mismatch at p=" + std::to_string(p) + ", n=" + std::to_string(n)))
          return false;
      }
    }

    std::mt19937 rng(105);
    std::vector<Word> expected = words_up_to(letters(2), 4);
    std::sort(expected.begin(), expected.end());
    for (int trial = 0; trial < 20; ++trial) {
      RootedTree tree = shuffled_tree(rng, 2, 4);
      std::vector<Word> labels = canonical_tree_labeling(tree, 2);
      std::vector<Word> sorted = labels;
      std::sort(sorted.begin(), sorted.end());
      if (!check(sorted == expected, note, "labeling is not a bijection onto the word tree"))
        return false;
      std::set<std::pair<Word, Word>> image;
      for (auto [s, t] : tree.arcs) {
        bool arc_maps = labels[t].size() == labels[s].size() + 1 && is_prefix(labels[s], labels[t]);
        if (!check(arc_maps, note, "an arc does not map to an arc")) return false;
        image.emplace(labels[s], labels[t]);
      }
      // Injective on arcs and the same arc count as the canonical tree, so
      // the inverse map is a homomorphism too.
      if (!check(image.size() == tree.arcs.size() && tree.arcs.size() == 30, note,
                 "arc image is not a bijection"))
        return false;
    }
    return true;
  });

  // 11. check_sequential and check_endomorphism return identical verdicts
  //     on 30 mixed oracles at depth 4.
  criterion("sequential == endomorphism", 0, [](std::string& note) {
    std::vector<SeqFn> oracles;
    Alphabet bin = binary();
    oracles.push_back(SeqFn{bin, bin, [](const Word& u) { return u; }, "identity"});
    oracles.push_back(SeqFn{bin, bin,
                            [](const Word& u) {
                              std::vector<Sym> syms(u.begin(), u.end());
                              std::reverse(syms.begin(), syms.end());
                              return Word(std::move(syms));
                            },
                            "reverse"});
    oracles.push_back(machine_fn(InitialMachine(v20(), 0)));
    oracles.push_back(machine_fn(InitialMachine(odometer(), 0)));
    std::mt19937 rng(106);
    std::uniform_int_distribution<std::size_t> nq(1, 4), na(2, 3);
    while (oracles.size() < 30) {
      std::size_t k = na(rng);
      oracles.push_back(machine_fn(InitialMachine(random_machine(rng, nq(rng), k, k, "r"), 0)));
    }
    for (std::size_t i = 0; i < oracles.size(); ++i) {
      bool seq = check_sequential(oracles[i], 4);
      bool endo = check_endomorphism(oracles[i], 4);
      if (!check(seq == endo, note, "verdicts differ on oracle " + oracles[i].label)) return false;
    }
    return true;
  });

  std::printf("%d/%d criteria passed\n", counter - failures, counter);
  return failures == 0 ? 0 : 1;
}
