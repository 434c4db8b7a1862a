#include "mealy/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mealy/algebra.hpp"
#include "mealy/compose.hpp"
#include "mealy/error.hpp"
#include "mealy/invert.hpp"
#include "mealy/io.hpp"
#include "mealy/morphism.hpp"
#include "mealy/seqfn.hpp"

namespace mealy {

namespace {

using nlohmann::json;

InitialMachine with_start(const ParsedMachine& pm, const std::optional<std::string>& override) {
  State start;
  if (override) {
    auto q = pm.machine.state_index(*override);
    if (!q) fail(errc::unknown_state, "unknown state '" + *override + "'");
    start = *q;
  } else if (pm.start) {
    start = *pm.start;
  } else {
    fail(errc::unknown_state,
         "machine " + pm.machine.name() + " has no start state; pass --state");
  }
  return InitialMachine(pm.machine, start);
}

json machine_json(const Machine& m) {
  json rows = json::array();
  for (State q = 0; q < m.state_count(); ++q)
    for (Sym a = 0; a < m.input().size(); ++a) {
      auto [t, b] = m.step(q, a);
      rows.push_back({{"from", m.state_name(q)},
                      {"input", m.input().name(a)},
                      {"to", m.state_name(t)},
                      {"output", m.output().name(b)}});
    }
  return rows;
}

void emit_or_save(const std::string& path, const Machine& m, std::optional<State> start,
                  std::string_view comment, std::ostream& out) {
  if (path.empty())
    out << emit_machine_text(m, start, comment);
  else
    save_machine_file(path, m, start, comment);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    parts.push_back(text.substr(pos, comma == std::string::npos ? comma : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return parts;
}

// --- enum -------------------------------------------------------------

void print_cayley_table(std::ostream& out, const Machine& m, const SemigroupResult& r) {
  std::vector<std::string> labels;
  std::size_t width = 1;
  for (const ElementCanon& e : r.elements) {
    labels.push_back(format_gen_word(m, e.witness));
    width = std::max(width, labels.back().size());
  }
  auto cell = [&](const std::string& s) {
    out << std::setw(static_cast<int>(width) + 2) << s;
  };
  cell("");
  for (const std::string& l : labels) cell(l);
  out << "\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    cell(labels[i]);
    for (std::size_t j = 0; j < labels.size(); ++j) cell(labels[r.table[i][j]]);
    out << "\n";
  }
}

int verb_enum(const std::string& path, const SemigroupOptions& opts, bool table, bool order_all,
              const std::string& dot_path, const std::string& format, std::ostream& out) {
  ParsedMachine pm = load_machine_file(path);
  SemigroupResult r = enumerate_semigroup(pm.machine, opts);
  const bool finite = r.status == SemigroupResult::Status::finite;

  if (format == "json") {
    json j;
    j["status"] = finite ? "finite" : "lower-bound-only";
    j["signed"] = r.signed_gens;
    j["elements"] = json::array();
    for (const ElementCanon& e : r.elements)
      j["elements"].push_back({{"witness", format_gen_word(pm.machine, e.witness)},
                               {"states", e.machine.machine.state_count()},
                               {"transitions", machine_json(e.machine.machine)}});
    if (finite) j["table"] = r.table;
    out << j.dump(2) << "\n";
  } else {
    out << "status: " << (finite ? "finite" : "lower-bound-only") << "\n";
    out << "elements: " << r.elements.size() << (finite ? "" : " (lower bound)") << "\n";
    for (std::uint32_t i = 0; i < r.elements.size(); ++i) {
      const ElementCanon& e = r.elements[i];
      out << "  " << format_gen_word(pm.machine, e.witness) << "  ["
          << e.machine.machine.state_count() << " state"
          << (e.machine.machine.state_count() == 1 ? "" : "s") << "]";
      if (order_all && finite) out << "  order " << element_order(r, i);
      out << "\n";
    }
    if (table && finite) print_cayley_table(out, pm.machine, r);
  }
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path, std::ios::binary);
    if (!dot) fail(errc::parse_error, "cannot write '" + dot_path + "'");
    dot << cayley_dot(pm.machine, r);
  }
  return 0;
}

// --- hom / sim ---------------------------------------------------------

template <class Triple>
void print_triple_text(std::ostream& out, const char* names[3], const Machine& src_states,
                       const Machine& dst_states, const Alphabet& in_from, const Alphabet& in_to,
                       const Alphabet& out_from, const Alphabet& out_to, const Triple& t) {
  out << names[0] << ":";
  for (State q = 0; q < t.state_map.size(); ++q)
    out << " " << src_states.state_name(q) << "->" << dst_states.state_name(t.state_map[q]);
  out << "\n" << names[1] << ":";
  for (Sym a = 0; a < t.in_map.size(); ++a)
    out << " " << in_from.name(a) << "->" << in_to.name(t.in_map[a]);
  out << "\n" << names[2] << ":";
  for (Sym b = 0; b < t.out_map.size(); ++b)
    out << " " << out_from.name(b) << "->" << out_to.name(t.out_map[b]);
  out << "\n";
}

template <class Triple>
json triple_json(const char* names[3], const Machine& src_states, const Machine& dst_states,
                 const Alphabet& in_from, const Alphabet& in_to, const Alphabet& out_from,
                 const Alphabet& out_to, const Triple& t) {
  json j;
  json m1, m2, m3;
  for (State q = 0; q < t.state_map.size(); ++q)
    m1[src_states.state_name(q)] = dst_states.state_name(t.state_map[q]);
  for (Sym a = 0; a < t.in_map.size(); ++a)
    m2[in_from.name(a)] = in_to.name(t.in_map[a]);
  for (Sym b = 0; b < t.out_map.size(); ++b)
    m3[out_from.name(b)] = out_to.name(t.out_map[b]);
  j[names[0]] = m1;
  j[names[1]] = m2;
  j[names[2]] = m3;
  return j;
}

// --- check -------------------------------------------------------------

struct CheckOutcome {
  std::string name;
  int status;  // 0 ok, 1 fail, 2 skipped
  std::string detail;
};

std::vector<CheckOutcome> run_checks(const Machine& m, std::size_t depth) {
  std::vector<CheckOutcome> outcomes;
  const std::vector<Word> words = words_up_to(m.input(), depth);

  // Advisory only: the algebra works without an onto output map.
  if (m.output_surjective())
    outcomes.push_back({"output-surjectivity", 0, ""});
  else
    outcomes.push_back({"output-surjectivity", 2, "output map not onto; advisory only"});

  {
    bool ok = true;
    std::string detail;
    for (State q = 0; q < m.state_count() && ok; ++q)
      for (const Word& u : words)
        for (const Word& v : words) {
          State mid = run_state(m, q, u);
          bool state_law = run_state(m, q, u + v) == run_state(m, mid, v);
          bool output_law = run_output(m, q, u + v) == run_output(m, q, u) + run_output(m, mid, v);
          if (!state_law || !output_law) {
            ok = false;
            detail = "at state " + m.state_name(q) + ", u=" + format_word(m.input(), u) +
                     ", v=" + format_word(m.input(), v);
            break;
          }
        }
    outcomes.push_back({"extension-laws", ok ? 0 : 1, detail});
  }

  {
    bool ok = true;
    std::string detail;
    for (State q = 0; q < m.state_count() && ok; ++q)
      for (const Word& u : words) {
        Word fu = run_output(m, q, u);
        if (fu.size() != u.size()) {
          ok = false;
          detail = "length broken at " + format_word(m.input(), u);
          break;
        }
        if (!u.empty() && !is_prefix(run_output(m, q, u.take(u.size() - 1)), fu)) {
          ok = false;
          detail = "prefix broken at " + format_word(m.input(), u);
          break;
        }
      }
    outcomes.push_back({"length-and-prefix-preservation", ok ? 0 : 1, detail});
  }

  {
    bool composable = true;
    for (Sym b = 0; b < m.output().size() && composable; ++b)
      composable = m.input().find(m.output().name(b)).has_value();
    if (!composable) {
      outcomes.push_back({"cascade-lemma", 2, "output alphabet not within input alphabet"});
    } else {
      InitialMachine self(m, 0);
      InitialMachine prod = cascade(self, self);
      bool ok = true;
      std::string detail;
      const std::size_t n1 = m.state_count();
      for (State q2 = 0; q2 < n1 && ok; ++q2)
        for (State q1 = 0; q1 < n1 && ok; ++q1)
          for (const Word& u : words) {
            State pq = static_cast<State>(q2 * n1 + q1);
            auto [pstate, pout] = run(InitialMachine(prod.machine, pq), u);
            Word bridge = run_output(m, q1, u);
            State want_state =
                static_cast<State>(run_state(m, q2, bridge) * n1 + run_state(m, q1, u));
            Word want_out = run_output(m, q2, bridge);
            if (pstate != want_state || pout != want_out) {
              ok = false;
              detail = "at (" + m.state_name(q2) + "," + m.state_name(q1) + "), u=" +
                       format_word(m.input(), u);
              break;
            }
          }
      outcomes.push_back({"cascade-lemma", ok ? 0 : 1, detail});
    }
  }

  {
    if (!(m.input() == m.output())) {
      outcomes.push_back({"inverse-laws", 2, "input and output alphabets differ"});
    } else if (!is_invertible(m)) {
      outcomes.push_back({"inverse-laws", 2, "machine not invertible"});
    } else {
      bool ok = true;
      std::string detail;
      for (State q = 0; q < m.state_count() && ok; ++q)
        for (const Word& u : words) {
          GenWord qq = {{q, false}, {q, true}};
          GenWord qq_rev = {{q, true}, {q, false}};
          if (act(m, qq, u) != u || act(m, qq_rev, u) != u) {
            ok = false;
            detail = "at state " + m.state_name(q) + ", u=" + format_word(m.input(), u);
            break;
          }
        }
      outcomes.push_back({"inverse-laws", ok ? 0 : 1, detail});
    }
  }

  return outcomes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mealy -- Mealy machines and the (semi)groups they generate"};
  app.require_subcommand(1);

  int status = 0;
  std::string format = "text";

  // run
  auto* run_cmd = app.add_subcommand("run", "run a machine on an input word");
  std::string run_file, run_input;
  std::optional<std::string> run_state_name;
  run_cmd->add_option("machine", run_file, "machine file")->required();
  run_cmd->add_option("--input", run_input, "input word")->required();
  run_cmd->add_option("--state", run_state_name, "start state override");
  run_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  run_cmd->callback([&] {
    ParsedMachine pm = load_machine_file(run_file);
    InitialMachine im = with_start(pm, run_state_name);
    RunResult r = run(im, parse_word(im.machine.input(), run_input));
    if (format == "json") {
      json j{{"state", im.machine.state_name(r.state)},
             {"output", format_word(im.machine.output(), r.output)}};
      out << j.dump() << "\n";
    } else {
      out << "state " << im.machine.state_name(r.state) << " output "
          << format_word(im.machine.output(), r.output) << "\n";
    }
  });

  // compose
  auto* compose_cmd = app.add_subcommand("compose", "cascade composition of two machines");
  std::string compose_a, compose_b, compose_out;
  bool compose_trim = false;
  compose_cmd->add_option("first", compose_a, "machine whose output feeds the second")->required();
  compose_cmd->add_option("second", compose_b, "machine consuming the first's output")->required();
  compose_cmd->add_option("-o,--output", compose_out, "output machine file (stdout if omitted)");
  compose_cmd->add_flag("--trim", compose_trim, "restrict to reachable states");
  compose_cmd->callback([&] {
    ParsedMachine a = load_machine_file(compose_a);
    ParsedMachine b = load_machine_file(compose_b);
    InitialMachine product = cascade(with_start(a, std::nullopt), with_start(b, std::nullopt));
    if (compose_trim) product = trim(product);
    emit_or_save(compose_out, product.machine, product.start,
                 "cascade of " + a.machine.name() + " and " + b.machine.name(), out);
  });

  // invert
  auto* invert_cmd = app.add_subcommand("invert", "construct the inverse machine");
  std::string invert_file, invert_out;
  invert_cmd->add_option("machine", invert_file, "machine file")->required();
  invert_cmd->add_option("-o,--output", invert_out, "output machine file (stdout if omitted)");
  invert_cmd->callback([&] {
    ParsedMachine pm = load_machine_file(invert_file);
    try {
      Machine inv = invert(pm.machine);
      emit_or_save(invert_out, inv, pm.start, "inverse of " + pm.machine.name(), out);
    } catch (const Error& e) {
      if (e.code() != errc::not_invertible) throw;
      err << e.what() << "\n";
      status = 1;
    }
  });

  // enum
  auto* enum_cmd = app.add_subcommand("enum", "enumerate the generated (semi)group");
  std::string enum_file, enum_dot;
  SemigroupOptions enum_opts;
  enum_opts.max_elems = 1000;
  enum_opts.max_len = 24;
  bool enum_table = false, enum_order = false, enum_serial = false;
  enum_cmd->add_option("machine", enum_file, "machine file")->required();
  enum_cmd->add_option("--max-elems", enum_opts.max_elems, "element budget");
  enum_cmd->add_option("--max-len", enum_opts.max_len, "generator word length budget");
  enum_cmd->add_flag("--signed", enum_opts.signed_gens, "generate over states and their inverses");
  enum_cmd->add_flag("--table", enum_table, "print the Cayley table (finite only)");
  enum_cmd->add_flag("--order", enum_order, "print each element's order (finite only)");
  enum_cmd->add_option("--dot", enum_dot, "write the Cayley graph as DOT");
  enum_cmd->add_flag("--serial", enum_serial, "disable the parallel kernels");
  enum_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  enum_cmd->callback([&] {
    enum_opts.mode = enum_serial ? exec::serial : exec::parallel;
    status = verb_enum(enum_file, enum_opts, enum_table, enum_order, enum_dot, format, out);
  });

  // order
  auto* order_cmd = app.add_subcommand("order", "order of an element of the generated (semi)group");
  std::string order_file, order_word;
  SemigroupOptions order_opts;
  order_opts.max_elems = 1000;
  order_opts.max_len = 24;
  order_cmd->add_option("machine", order_file, "machine file")->required();
  order_cmd->add_option("element", order_word, "generator word")->required();
  order_cmd->add_option("--max-elems", order_opts.max_elems, "element budget");
  order_cmd->add_option("--max-len", order_opts.max_len, "generator word length budget");
  order_cmd->add_flag("--signed", order_opts.signed_gens, "generate over states and their inverses");
  order_cmd->callback([&] {
    ParsedMachine pm = load_machine_file(order_file);
    SemigroupResult r = enumerate_semigroup(pm.machine, order_opts);
    if (r.status != SemigroupResult::Status::finite) {
      err << "enumeration did not close within bounds; order undetermined\n";
      status = 1;
      return;
    }
    GenWord w = parse_gen_word(pm.machine, order_word);
    auto idx = find_element(r, element(pm.machine, w).machine);
    if (!idx) {
      err << "element not found in the enumerated (semi)group\n";
      status = 1;
      return;
    }
    out << "order " << element_order(r, *idx) << "\n";
  });

  // hom
  auto* hom_cmd = app.add_subcommand("hom", "search for a machine homomorphism");
  std::string hom_src, hom_dst;
  std::uint64_t hom_budget = 100'000'000;
  bool hom_serial = false;
  hom_cmd->add_option("src", hom_src, "source machine file")->required();
  hom_cmd->add_option("dst", hom_dst, "target machine file")->required();
  hom_cmd->add_option("--budget", hom_budget, "candidate budget");
  hom_cmd->add_flag("--serial", hom_serial, "disable the parallel kernels");
  hom_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  hom_cmd->callback([&] {
    ParsedMachine src = load_machine_file(hom_src);
    ParsedMachine dst = load_machine_file(hom_dst);
    HomSearch r = find_homomorphism(src.machine, dst.machine, hom_budget,
                                    hom_serial ? exec::serial : exec::parallel);
    const char* names[3] = {"mu1", "mu2", "mu3"};
    if (!r.triple) {
      if (format == "json")
        out << json{{"found", false}, {"refuted", r.refuted}}.dump() << "\n";
      else
        out << "none (" << r.refuted << " candidates refuted)\n";
      status = 1;
      return;
    }
    if (format == "json") {
      json j = triple_json(names, src.machine, dst.machine, src.machine.input(),
                           dst.machine.input(), src.machine.output(), dst.machine.output(),
                           *r.triple);
      j["found"] = true;
      out << j.dump() << "\n";
    } else {
      print_triple_text(out, names, src.machine, dst.machine, src.machine.input(),
                        dst.machine.input(), src.machine.output(), dst.machine.output(),
                        *r.triple);
    }
  });

  // sim
  auto* sim_cmd = app.add_subcommand("sim", "search for a simulation of target by another machine");
  std::string sim_target, sim_by;
  std::size_t sim_depth = 2;
  std::uint64_t sim_budget = 100'000'000;
  bool sim_serial = false;
  sim_cmd->add_option("target", sim_target, "machine to be simulated")->required();
  sim_cmd->add_option("by", sim_by, "simulating machine")->required();
  sim_cmd->add_option("--depth", sim_depth, "verification word length");
  sim_cmd->add_option("--budget", sim_budget, "candidate budget");
  sim_cmd->add_flag("--serial", sim_serial, "disable the parallel kernels");
  sim_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  sim_cmd->callback([&] {
    ParsedMachine target = load_machine_file(sim_target);
    ParsedMachine by = load_machine_file(sim_by);
    SimSearch r = find_simulation(target.machine, by.machine, sim_depth, sim_budget,
                                  sim_serial ? exec::serial : exec::parallel);
    const char* names[3] = {"h1", "h2", "h3"};
    if (!r.triple) {
      if (format == "json")
        out << json{{"found", false}, {"refuted", r.refuted}}.dump() << "\n";
      else
        out << "none (" << r.refuted << " candidates refuted)\n";
      status = 1;
      return;
    }
    if (format == "json") {
      json j = triple_json(names, target.machine, by.machine, target.machine.input(),
                           by.machine.input(), by.machine.output(), target.machine.output(),
                           *r.triple);
      j["found"] = true;
      out << j.dump() << "\n";
    } else {
      print_triple_text(out, names, target.machine, by.machine, target.machine.input(),
                        by.machine.input(), by.machine.output(), target.machine.output(),
                        *r.triple);
    }
  });

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "distinct-output lower bound from an orbit probe");
  std::string orbit_file, orbit_patterns, orbit_word;
  orbit_cmd->add_option("machine", orbit_file, "machine file")->required();
  orbit_cmd->add_option("--patterns", orbit_patterns, "comma-separated generator words")->required();
  orbit_cmd->add_option("--word", orbit_word, "ultimately periodic input 'u:v'")->required();
  orbit_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  orbit_cmd->callback([&] {
    ParsedMachine pm = load_machine_file(orbit_file);
    std::vector<GenWord> patterns;
    for (const std::string& p : split_csv(orbit_patterns))
      patterns.push_back(parse_gen_word(pm.machine, p));
    UPWord x = parse_up_word(pm.machine.input(), orbit_word);
    const std::size_t n = 2 * patterns.size() + 2;
    const Word probe = x.prefix(n);
    std::size_t distinct = orbit_witness(pm.machine, patterns, x);
    if (format == "json") {
      json j;
      j["probe"] = format_word(pm.machine.input(), probe);
      j["patterns"] = json::array();
      for (const GenWord& w : patterns)
        j["patterns"].push_back(
            {{"word", format_gen_word(pm.machine, w)},
             {"output", format_word(pm.machine.output(), act(pm.machine, w, probe))}});
      j["distinct"] = distinct;
      out << j.dump(2) << "\n";
    } else {
      out << "probe " << format_word(pm.machine.input(), probe) << "\n";
      for (const GenWord& w : patterns)
        out << "  " << format_gen_word(pm.machine, w) << " -> "
            << format_word(pm.machine.output(), act(pm.machine, w, probe)) << "\n";
      out << "distinct " << distinct << "\n";
    }
  });

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "synthesize a machine from a function table");
  std::string synth_file, synth_out;
  std::size_t synth_depth = 4, synth_max_states = 64;
  synth_cmd->add_option("table", synth_file, "function table file")->required();
  synth_cmd->add_option("--depth", synth_depth, "quotient comparison depth");
  synth_cmd->add_option("--max-states", synth_max_states, "state budget");
  synth_cmd->add_option("-o,--output", synth_out, "output machine file (stdout if omitted)");
  synth_cmd->callback([&] {
    FnTable table = load_fn_file(synth_file);
    SeqFn f = table_fn(table);
    QuotientTable t = explore_quotients(f, synth_depth, synth_max_states);
    if (!t.closed) {
      err << "not determined: more than " << synth_max_states
          << " distinct quotients at depth " << synth_depth << "\n";
      status = 1;
      return;
    }
    InitialMachine im = synthesize(t, f);
    emit_or_save(synth_out, im.machine, im.start,
                 "synthesized from " + synth_file + " at depth " + std::to_string(synth_depth),
                 out);
  });

  // check
  auto* check_cmd = app.add_subcommand("check", "run the invariant suite against a machine");
  std::string check_file;
  std::size_t check_depth = 3;
  check_cmd->add_option("machine", check_file, "machine file")->required();
  check_cmd->add_option("--depth", check_depth, "word length bound for the laws");
  check_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  check_cmd->callback([&] {
    ParsedMachine pm = load_machine_file(check_file);
    std::vector<CheckOutcome> outcomes = run_checks(pm.machine, check_depth);
    bool any_fail = false;
    if (format == "json") {
      json j;
      j["results"] = json::array();
      for (const CheckOutcome& c : outcomes) {
        any_fail = any_fail || c.status == 1;
        j["results"].push_back(
            {{"name", c.name},
             {"status", c.status == 0 ? "ok" : (c.status == 1 ? "fail" : "skipped")},
             {"detail", c.detail}});
      }
      j["ok"] = !any_fail;
      out << j.dump(2) << "\n";
    } else {
      for (const CheckOutcome& c : outcomes) {
        if (c.status == 0) out << "ok " << c.name << "\n";
        if (c.status == 1) out << "FAIL " << c.name << ": " << c.detail << "\n";
        if (c.status == 2) out << "skip " << c.name << " (" << c.detail << ")\n";
        any_fail = any_fail || c.status == 1;
      }
    }
    status = any_fail ? 1 : 0;
  });

  // dot
  auto* dot_cmd = app.add_subcommand("dot", "emit a machine as a DOT digraph");
  std::string dot_file, dot_out;
  dot_cmd->add_option("machine", dot_file, "machine file")->required();
  dot_cmd->add_option("-o,--output", dot_out, "output DOT file (stdout if omitted)");
  dot_cmd->callback([&] {
    ParsedMachine pm = load_machine_file(dot_file);
    std::string text = machine_dot(pm.machine, pm.start);
    if (dot_out.empty()) {
      out << text;
    } else {
      std::ofstream f(dot_out, std::ios::binary);
      if (!f) fail(errc::parse_error, "cannot write '" + dot_out + "'");
      f << text;
    }
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("mealy");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}

}  // namespace mealy
