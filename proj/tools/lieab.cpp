// Command-line front end for the lieab library.
//
// Exit codes: 0 ok, 1 validation error, 2 precondition error,
// 3 undecided, 4 internal soundness violation (or a failing selftest).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lieab/acceptance.hpp"
#include "lieab/closed_forms.hpp"
#include "lieab/constructive.hpp"
#include "lieab/corpus.hpp"
#include "lieab/decision.hpp"
#include "lieab/errors.hpp"
#include "lieab/structure.hpp"

using json = nlohmann::ordered_json;
using namespace lieab;

namespace {

enum Exit { kOk = 0, kValidation = 1, kPrecondition = 2, kUndecided = 3, kSoundness = 4 };

struct Config {
  std::string input;
  std::string family_spec;
  std::string mode = "closure";
  std::uint64_t budget = 0;
  std::uint64_t total_budget = 0;
  std::string format = "table";
  std::uint64_t seed = AcceptanceOptions{}.seed;
  std::string subalgebra;
  bool serial = false;
  int height = 2;
};

bool machine(const Config& c) { return c.format == "machine"; }

DecisionOptions decision_options(const Config& c) {
  DecisionOptions o = default_decision_options();
  o.mode = c.mode == "ground" ? SearchMode::Ground : SearchMode::Closure;
  if (c.budget) o.pattern_budget = c.budget;
  if (c.total_budget) o.total_budget = c.total_budget;
  o.policy = c.serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
  o.height = c.height;
  return o;
}

LieAlgebra load(const Config& c) {
  if (!c.family_spec.empty() && !c.input.empty()) throw PreconditionFailed("give either a file or --family, not both");
  if (!c.family_spec.empty()) return family(c.family_spec);
  if (c.input.empty()) throw PreconditionFailed("no input: give a file or --family");
  return load_algebra(c.input).algebra;
}

json optional_size(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json subspace_json(const std::optional<Subspace>& s) {
  if (!s) return nullptr;
  json basis = json::array();
  for (const auto& v : s->basis_vectors()) basis.push_back(format_vector(v));
  return basis;
}

json decision_json(const Decision& d) {
  return {{"target", d.target == Target::Ideal ? "ideal" : "subalgebra"},
          {"k", d.k},
          {"mode", to_string(d.mode)},
          {"verdict", to_string(d.verdict)},
          {"patterns", d.patterns},
          {"yes", d.yes},
          {"no", d.no},
          {"undecided", d.undecided},
          {"skipped", d.skipped},
          {"reductions", d.reductions},
          {"yes_pattern", optional_size(d.yes_pattern)},
          {"witness", subspace_json(d.witness)}};
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::string show(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "undecided"; }

int cmd_check(const Config& c) {
  if (c.input.empty()) throw PreconditionFailed("check needs a file");
  const AlgebraFile f = load_algebra(c.input);
  if (machine(c)) {
    json j = {{"ok", true}, {"name", f.algebra.name()}, {"dim", f.algebra.dimension()},
              {"field", to_string(f.algebra.field())}, {"expectations", json::array()}};
    for (const auto& e : f.expectations)
      j["expectations"].push_back({{"key", e.key}, {"value", e.value}, {"provenance", e.provenance}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "ok: " << f.algebra.name() << " (dim " << f.algebra.dimension() << ", field "
              << to_string(f.algebra.field()) << ", " << f.expectations.size() << " expectations)\n";
  }
  return kOk;
}

int cmd_invariants(const Config& c) {
  const LieAlgebra g = load(c);
  const DecisionOptions opts = decision_options(c);
  const InvariantReport r = compute_invariants(g, opts);
  const StructureReport s = classify(g);
  const auto lcs = series(g, SeriesKind::LowerCentral);
  const auto ds = series(g, SeriesKind::Derived);
  const Sl2Detection sl2 = detect_sl2_plus_abelian(g);

  if (machine(c)) {
    json j;
    j["algebra"] = r.algebra;
    j["dimension"] = r.dimension;
    j["field"] = to_string(g.field());
    j["mode"] = to_string(r.mode);
    j["alpha"] = optional_size(r.alpha);
    j["beta"] = optional_size(r.beta);
    j["alpha_lower"] = r.alpha_lower;
    j["beta_lower"] = r.beta_lower;
    j["beta_upper"] = r.beta_upper;
    j["alpha_witness"] = subspace_json(r.alpha_witness);
    j["beta_witness"] = subspace_json(r.beta_witness);
    j["bounds"] = json::array();
    for (const auto& b : r.bounds)
      j["bounds"].push_back({{"quantity", b.quantity}, {"lower", b.lower}, {"upper", b.upper}, {"source", b.source}});
    j["lower_central_series"] = lcs.dimensions();
    j["derived_series"] = ds.dimensions();
    j["flags"] = {{"abelian", s.is_abelian},
                  {"nilpotent", s.is_nilpotent},
                  {"solvable", s.is_solvable},
                  {"filiform", s.is_filiform},
                  {"semisimple", s.is_semisimple},
                  {"characteristically_nilpotent", s.is_characteristically_nilpotent},
                  {"almost_abelian", s.is_almost_abelian},
                  {"sl2_plus_abelian", sl2.detected}};
    j["nilpotency_class"] = s.is_nilpotent ? json(s.nilpotency_class) : json(nullptr);
    j["solvability_length"] = s.is_solvable ? json(s.solvability_length) : json(nullptr);
    j["k_abelian_index"] = optional_size(s.k_abelian_index);
    j["decisions"] = json::array();
    for (const auto& d : r.alpha_log) j["decisions"].push_back(decision_json(d));
    for (const auto& d : r.beta_log) j["decisions"].push_back(decision_json(d));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "algebra   " << r.algebra << " (dim " << r.dimension << ", field " << to_string(g.field())
              << ", mode " << to_string(r.mode) << ")\n";
    std::cout << "alpha     " << show(r.alpha);
    if (!r.alpha) std::cout << " (>= " << r.alpha_lower << ")";
    if (r.alpha_witness) std::cout << "  witness " << r.alpha_witness->to_string();
    std::cout << "\nbeta      " << show(r.beta);
    if (!r.beta) std::cout << " (in [" << r.beta_lower << ", " << r.beta_upper << "])";
    if (r.beta_witness) std::cout << "  witness " << r.beta_witness->to_string();
    std::cout << "\n";
    for (const auto& b : r.bounds)
      std::cout << "bound     " << b.quantity << " in [" << b.lower << ", " << b.upper << "] (" << b.source << ")\n";
    std::cout << "series    lower central " << join_sizes(lcs.dimensions()) << "; derived "
              << join_sizes(ds.dimensions()) << "\n";
    std::cout << "flags    ";
    const std::pair<const char*, bool> flags[] = {
        {"abelian", s.is_abelian},       {"nilpotent", s.is_nilpotent},
        {"solvable", s.is_solvable},     {"filiform", s.is_filiform},
        {"semisimple", s.is_semisimple}, {"characteristically-nilpotent", s.is_characteristically_nilpotent},
        {"almost-abelian", s.is_almost_abelian}, {"sl2+abelian", sl2.detected}};
    bool any = false;
    for (const auto& [name, on] : flags)
      if (on) {
        std::cout << " " << name;
        any = true;
      }
    if (!any) std::cout << " (none)";
    std::cout << "\n";
    if (s.k_abelian_index) std::cout << "k-abelian " << *s.k_abelian_index << "\n";
    std::cout << "decisions\n";
    auto row = [](const char* what, const Decision& d) {
      std::cout << "  " << what << " k=" << d.k << " " << to_string(d.verdict) << "  patterns " << d.patterns
                << " (yes " << d.yes << ", no " << d.no << ", undecided " << d.undecided << ", skipped " << d.skipped
                << ")  reductions " << d.reductions << "\n";
    };
    for (const auto& d : r.alpha_log) row("alpha", d);
    for (const auto& d : r.beta_log) row("beta ", d);
  }
  return r.alpha && r.beta ? kOk : kUndecided;
}

int cmd_construct(const Config& c) {
  const LieAlgebra g = load(c);
  const std::size_t n = g.dimension();
  Subspace a;
  if (!c.subalgebra.empty()) {
    std::ifstream in(c.subalgebra);
    if (!in) throw PreconditionFailed("cannot open '" + c.subalgebra + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    a = Subspace::span(n, parse_vector_list(buf.str(), n));
  } else {
    InvariantReport r;
    DecisionOptions opts = decision_options(c);
    opts.mode = SearchMode::Closure;
    compute_alpha(g, opts, r);
    if (!r.alpha) return kUndecided;
    if (!r.alpha_witness) throw Undecided("no explicit witness for alpha = " + std::to_string(*r.alpha));
    a = *r.alpha_witness;
  }
  if (a.dimension() + 2 < n || a.dimension() >= n)
    throw PreconditionFailed("constructions exist for codimension 1 and 2 only");
  const Construction out = a.dimension() + 1 == n ? codim1_ideal(g, a) : codim2_ideal_nilpotent(g, a);
  const ConstructionTrace& t = out.trace;

  if (machine(c)) {
    json j;
    j["algebra"] = g.name();
    j["codimension"] = t.codimension;
    j["input"] = subspace_json(a);
    j["already_ideal"] = t.already_ideal;
    j["steps"] = t.steps;
    json basis = json::array();
    for (const auto& v : t.basis) basis.push_back(format_vector(v));
    j["basis"] = basis;
    json alpha = json::array();
    for (const auto& s : t.alpha) alpha.push_back(s.to_string());
    j["alpha"] = alpha;
    json vs = json::array();
    for (std::size_t i = 0; i < t.v.size(); ++i) vs.push_back({{"j", t.v_indices[i] + 1}, {"v", format_vector(t.v[i])}});
    j["v"] = vs;
    j["normalizer"] = subspace_json(t.normalizer);
    j["ell"] = optional_size(t.ell);
    j["lambda"] = t.lambda ? json(t.lambda->to_string()) : json(nullptr);
    if (t.codimension == 2 && !t.already_ideal)
      j["lemma"] = {{"bracket_nonzero", t.bracket_nonzero},
                    {"bracket_central", t.bracket_central},
                    {"normalizer_two_step", t.normalizer_two_step},
                    {"normalizer_kills_v", t.normalizer_kills_v}};
    j["ideal"] = subspace_json(out.ideal);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "algebra      " << g.name() << "\n";
    std::cout << "input        " << a.to_string() << " (codimension " << t.codimension << ")\n";
    for (const auto& s : t.steps) std::cout << "step         " << s << "\n";
    if (!t.already_ideal) {
      for (std::size_t i = 0; i < t.basis.size(); ++i)
        std::cout << "e" << i + 1 << (i + 1 < 10 ? "           " : "          ") << vector_to_string(t.basis[i])
                  << "   alpha = " << t.alpha[i].to_string() << "\n";
      for (std::size_t i = 0; i < t.v.size(); ++i)
        std::cout << "v" << t.v_indices[i] + 1 << (t.v_indices[i] + 1 < 10 ? "           " : "          ")
                  << vector_to_string(t.v[i]) << "\n";
      if (t.ell) std::cout << "ell          " << *t.ell << "\n";
      if (t.lambda) std::cout << "lambda       " << t.lambda->to_string() << "\n";
    }
    std::cout << "ideal        " << out.ideal.to_string() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal abelian subalgebras and ideals of finite-dimensional Lie algebras"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", c.input, "Algebra file");
    sub->add_option("--family", c.family_spec, "Built-in family, e.g. f:5, g5_2, g4:1/2");
    sub->add_option("--mode", c.mode, "closure or ground")->check(CLI::IsMember({"closure", "ground"}));
    sub->add_option("--budget", c.budget, "Groebner reductions per pivot pattern")->check(CLI::PositiveNumber);
    sub->add_option("--total-budget", c.total_budget, "Groebner reductions per decision")->check(CLI::PositiveNumber);
    sub->add_option("--height", c.height, "Height bound for ground-field witness search")->check(CLI::Range(1, 64));
    sub->add_flag("--serial", c.serial, "Use the serial reference sweep");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "table or machine")->check(CLI::IsMember({"table", "machine"}));
  };

  auto* check = app.add_subcommand("check", "Parse and validate an algebra file");
  check->add_option("file", c.input, "Algebra file")->required();
  add_format(check);

  auto* inv = app.add_subcommand("invariants", "alpha, beta, series, flags and bounds");
  add_common(inv);
  add_format(inv);

  auto* con = app.add_subcommand("construct-ideal", "Abelian ideal from a codimension-1 or -2 abelian subalgebra");
  add_common(con);
  add_format(con);
  con->add_option("--subalgebra", c.subalgebra, "File with one spanning vector per line");

  char type = 'A';
  std::size_t rank = 1;
  auto* simple = app.add_subcommand("simple-alpha", "alpha of a complex simple Lie algebra");
  simple->add_option("--type", type, "Cartan type A..G")->required();
  simple->add_option("--rank", rank, "Rank")->required();

  auto* borel = app.add_subcommand("borel-count", "Root-spanned abelian ideals of the Borel of sl(rank+1)");
  borel->add_option("--rank", rank, "Rank 1..3")->required();
  add_format(borel);

  auto* corpus = app.add_subcommand("corpus", "Built-in algebra families");
  corpus->require_subcommand(1);
  corpus->add_subcommand("list", "List families");
  std::string emit_spec;
  auto* emit = corpus->add_subcommand("emit", "Print a family member in file format");
  emit->add_option("spec", emit_spec, "Family spec, e.g. f:5")->required();

  auto* self = app.add_subcommand("selftest", "Run the acceptance criteria");
  self->add_option("--seed", c.seed, "Seed for random changes of basis");
  self->add_flag("--serial", c.serial, "Use the serial reference sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kPrecondition;
  }

  try {
    if (*check) return cmd_check(c);
    if (*inv) return cmd_invariants(c);
    if (*con) return cmd_construct(c);
    if (*simple) {
      std::cout << alpha_simple(type, rank) << "\n";
      return kOk;
    }
    if (*borel) {
      const BorelIdeals b = enumerate_borel_root_ideals(rank);
      if (machine(c)) {
        json j = {{"rank", rank}, {"count", b.ideals.size()}, {"matches_power_of_two", b.matches_power_of_two}};
        j["ideals"] = json::array();
        for (const auto& s : b.ideals) j["ideals"].push_back(subspace_json(s));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "rank " << rank << ": " << b.ideals.size() << " abelian ideals (2^rank = " << (1u << rank)
                  << ", " << (b.matches_power_of_two ? "match" : "MISMATCH") << ")\n";
        for (const auto& s : b.ideals) std::cout << "  " << s.to_string() << "\n";
      }
      return b.matches_power_of_two ? kOk : kSoundness;
    }
    if (*corpus) {
      if (*emit) {
        std::cout << serialize(family(emit_spec));
      } else {
        for (const auto& f : families())
          std::cout << f.name << (f.parameter.empty() ? "" : ":<" + f.parameter + ">") << "  " << f.description
                    << "\n";
      }
      return kOk;
    }
    if (*self) {
      AcceptanceOptions opts;
      opts.seed = c.seed;
      opts.policy = c.serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
      const auto results =
          run_acceptance(opts, [](const CriterionResult& r) { std::cout << format_result(r) << std::endl; });
      std::size_t passed = 0;
      for (const auto& r : results) passed += r.passed;
      std::cout << passed << "/" << results.size() << " criteria passed\n";
      return passed == results.size() ? kOk : kSoundness;
    }
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const InvalidScalar& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const FieldMismatch& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const BudgetExceeded& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const Undecided& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const SoundnessViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kSoundness;
  } catch (const Error& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}
