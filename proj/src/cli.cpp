#include "linclon/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "linclon/absorbing.hpp"
#include "linclon/clonoid.hpp"
#include "linclon/json_io.hpp"

namespace linclon::cli {

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotCoprime: return kHypothesisViolated;
    case ErrorKind::BudgetExceeded: return kBudgetExceeded;
    case ErrorKind::NotInvariant:
    case ErrorKind::StrategyMismatch: return kInternalBreach;
    default: return kMalformedInput;
  }
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Malformed, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Malformed, origin + ": " + e.what());
  }
}

// inline JSON or @path
json load_inline(const std::string& value) {
  if (!value.empty() && value.front() == '@') return parse_text(read_file(value.substr(1)), value.substr(1));
  return parse_text(value, "inline JSON");
}

// Writes all of `text` to the target in one step: a sibling temp file renamed into place.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::Malformed, "cannot write " + path);
    f << text;
  }
  std::filesystem::rename(tmp, path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<FiniteFunction> load_generators(const std::string& path, const ProductRing& K, const ProductRing& F) {
  const json j = parse_text(read_file(path), path);
  const json* list = &j;
  if (j.is_object() && j.contains("generators")) list = &j.at("generators");
  if (!list->is_array()) throw Error(ErrorKind::Malformed, "generators file must hold a JSON array");
  std::vector<FiniteFunction> gens;
  for (const auto& g : *list) gens.push_back(parse_function(g, &K, &F));
  return gens;
}

FiniteFunction random_function(const ProductRing& K, const ProductRing& F, unsigned n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FiniteFunction f(K, F, n);
  for (std::size_t i = 0; i < F.factor_count(); ++i)
    for (auto& v : f.component(i)) v = static_cast<std::uint32_t>(rng() % F.factor(i).q());
  return f;
}

json subset_json(FactorSet s, std::size_t m) {
  json out = json::array();
  for (std::size_t j = 0; j < m; ++j)
    if (s.contains(j)) out.push_back(j + 1);
  return out;
}

struct Options {
  std::string K, F;
  std::uint64_t budget = kDefaultBudget;
  std::string strategy = "join-closure";
  std::uint64_t seed = 0;
  std::string out;
  std::string dot;
  unsigned arity = 1;
  unsigned k_max = 2;
  std::string input;
  std::optional<std::uint32_t> p;
};

RunConfig make_config(const Options& o, bool need_K = true, bool need_F = true) {
  RunConfig c;
  if (need_K) {
    if (o.K.empty()) throw Error(ErrorKind::Malformed, "--K is required");
    c.K = parse_ring(load_inline(o.K));
  }
  if (need_F) {
    if (o.F.empty()) throw Error(ErrorKind::Malformed, "--F is required");
    c.F = parse_ring(load_inline(o.F));
  }
  if (o.budget == 0) throw Error(ErrorKind::Malformed, "--budget must be positive");
  c.budget = o.budget;
  const auto s = parse_strategy(o.strategy);
  if (!s) throw Error(ErrorKind::Malformed, "unknown strategy " + o.strategy);
  c.strategy = *s;
  c.seed = o.seed;
  c.output = o.out;
  if (c.K && c.F) require_coprime(*c.K, *c.F);
  return c;
}

EnumerationOptions enumeration_options(const RunConfig& c) {
  EnumerationOptions e;
  e.strategy = c.strategy;
  return e;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const RunConfig c = make_config(o);
  const auto gens = load_generators(o.input, *c.K, *c.F);
  const ClonoidSlice slice = closure_slice(*c.K, *c.F, gens, o.arity, ClosureOptions{c.budget, true});
  emit(c.output, dump(to_json(slice)), out);
  return kSuccess;
}

int cmd_unary_check(const Options& o, std::ostream& out) {
  const RunConfig c = make_config(o);
  const auto gens = load_generators(o.input, *c.K, *c.F);
  const auto verdicts = unary_generation_check(*c.K, *c.F, gens, o.k_max, ClosureOptions{c.budget, true});
  json list = json::array();
  bool all_equal = true;
  for (const auto& v : verdicts) {
    list.push_back(to_json(v));
    all_equal = all_equal && v.equal;
  }
  emit(c.output, dump(json{{"verdicts", list}, {"equal", all_equal}}), out);
  return all_equal ? kSuccess : kInternalBreach;
}

std::uint32_t single_prime(const Options& o, const RunConfig& c) {
  if (o.p) return *o.p;
  if (!c.F || c.F->factor_count() != 1 || !c.F->factor(0).is_prime())
    throw Error(ErrorKind::Malformed, "enumerate needs --p or a single prime field --F");
  return c.F->factor(0).p();
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const RunConfig c = make_config(o, true, !o.p.has_value());
  const std::uint32_t p = single_prime(o, c);
  const SubmoduleLattice lattice = enumerate_submodules(p, *c.K, enumeration_options(c));
  json j = to_json(lattice);
  j["strategy"] = to_string(c.strategy);
  j["bound"] = to_json(clonoid_count_bound(ProductRing::make({FieldSpec::make(p)}), *c.K));
  emit(c.output, dump(j), out);
  if (!o.dot.empty()) emit(o.dot, to_dot(lattice), out);
  return kSuccess;
}

int cmd_bound(const Options& o, std::ostream& out) {
  const RunConfig c = make_config(o);
  json j{{"K", to_json(*c.K)}, {"F", to_json(*c.F)}, {"n", c.K->order()}, {"bound", to_json(clonoid_count_bound(*c.F, *c.K))}};
  emit(c.output, dump(j), out);
  return kSuccess;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const RunConfig c = make_config(o);
  table_size(*c.K, o.arity, c.budget);
  const FiniteFunction f = o.input.empty() ? random_function(*c.K, *c.F, o.arity, c.seed)
                                           : parse_function(load_inline("@" + o.input), &*c.K, &*c.F);
  const auto parts = decompose(f);
  json comps = json::array();
  FiniteFunction sum(f.domain(), f.codomain(), f.arity());
  for (const auto& part : parts) {
    comps.push_back(json{{"subset", subset_json(part.subset, c.K->factor_count())},
                         {"absorbing", is_absorbing(part.function, part.subset)},
                         {"zero", part.function.is_zero()},
                         {"function", to_json(part.function)}});
    sum = f_plus(sum, part.function);
  }
  emit(c.output, dump(json{{"function", to_json(f)}, {"components", comps}, {"reconstructs", sum == f}}), out);
  return kSuccess;
}

int cmd_tk(const Options& o, std::ostream& out) {
  const RunConfig c = make_config(o);
  if (o.input.empty()) throw Error(ErrorKind::Malformed, "tk needs a unary function file");
  const FiniteFunction g = parse_function(load_inline("@" + o.input), &*c.K, &*c.F);
  if (o.arity < 2) throw Error(ErrorKind::BadArity, "tk needs --arity >= 2");
  table_size(*c.K, o.arity, c.budget);
  const FiniteFunction t = build_t_k(g, o.arity);
  const FiniteFunction r = build_r_k(g, o.arity);

  // pointwise factor r_k / t_k per component, and the expected prod q_j mod p_i
  json factors = json::array(), expected = json::array();
  bool consistent = true;
  for (std::size_t i = 0; i < c.F->factor_count(); ++i) {
    const FieldSpec& field = c.F->factor(i);
    std::uint32_t want = 1;
    for (const auto& q : c.K->factors()) want = field.mul(want, q.q() % field.p());
    expected.push_back(want);
    std::optional<std::uint32_t> factor;
    for (PointIndex x = 0; x < t.size(); ++x) {
      const std::uint32_t tv = t.component(i)[x], rv = r.component(i)[x];
      if (tv == 0) {
        consistent = consistent && rv == 0;
        continue;
      }
      const std::uint32_t ratio = field.mul(rv, field.inv(tv));
      if (!factor) factor = ratio;
      consistent = consistent && *factor == ratio;
    }
    factors.push_back(factor ? json(*factor) : json(nullptr));
    consistent = consistent && (!factor || *factor == want);
  }
  emit(c.output,
       dump(json{{"k", o.arity},
                 {"t_k", to_json(t)},
                 {"r_k", to_json(r)},
                 {"factor", factors},
                 {"expected_factor", expected},
                 {"consistent", consistent}}),
       out);
  return consistent ? kSuccess : kInternalBreach;
}

int cmd_assemble(const Options& o, std::ostream& out) {
  const RunConfig c = make_config(o);
  std::vector<SubmoduleLattice> parts;
  for (const auto& field : c.F->factors()) {
    if (!field.is_prime()) throw Error(ErrorKind::Malformed, "assemble needs prime codomain factors");
    parts.push_back(enumerate_submodules(field.p(), *c.K, enumeration_options(c)));
  }
  const ProductLattice lattice = lattice_assemble(std::move(parts));
  json j = to_json(lattice);
  j["bound"] = to_json(clonoid_count_bound(*c.F, *c.K));
  emit(c.output, dump(j), out);
  if (!o.dot.empty()) emit(o.dot, to_dot(lattice), out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations with linearly closed clonoids between products of finite fields"};
  app.require_subcommand(1);
  Options o;

  auto add_rings = [&](CLI::App* sub) {
    sub->add_option("--K", o.K, "source ring K as JSON or @file");
    sub->add_option("--F", o.F, "target ring F as JSON or @file");
    sub->add_option("--budget", o.budget, "max table entries |K|^k")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for sampled inputs")->capture_default_str();
    sub->add_option("--out", o.out, "output path (default stdout)");
  };

  auto* closure = app.add_subcommand("closure", "arity-k slice of the clonoid generated by a set of functions");
  add_rings(closure);
  closure->add_option("--arity", o.arity, "arity k")->required();
  closure->add_option("generators", o.input, "JSON file with a list of functions")->required();

  auto* unary = app.add_subcommand("unary-check", "check that the unary part generates the clonoid up to k-max");
  add_rings(unary);
  unary->add_option("--k-max", o.k_max, "largest arity checked")->capture_default_str();
  unary->add_option("generators", o.input, "JSON file with a list of functions")->required();

  auto* enumerate = app.add_subcommand("enumerate", "all F_p[K^x]-submodules of F_p^K with their Hasse diagram");
  add_rings(enumerate);
  enumerate->add_option("--p", o.p, "prime p (alternative to a single-field --F)");
  enumerate->add_option("--strategy", o.strategy, "join-closure, brute-force or both")->capture_default_str();
  enumerate->add_option("--dot", o.dot, "write the Hasse diagram as DOT");

  auto* bound = app.add_subcommand("bound", "upper bound on the number of clonoids");
  add_rings(bound);

  auto* decomp = app.add_subcommand("decompose", "0-absorbing components of a function");
  add_rings(decomp);
  decomp->add_option("--arity", o.arity, "arity of the seeded random function when no file is given");
  decomp->add_option("function", o.input, "JSON file with one function");

  auto* tk = app.add_subcommand("tk", "t_k and r_k built from a unary 0-absorbing function");
  add_rings(tk);
  tk->add_option("--arity", o.arity, "arity k >= 2")->required();
  tk->add_option("function", o.input, "JSON file with the unary function")->required();

  auto* assemble = app.add_subcommand("assemble", "clonoid lattice as a product of submodule lattices");
  add_rings(assemble);
  assemble->add_option("--strategy", o.strategy, "join-closure, brute-force or both")->capture_default_str();
  assemble->add_option("--dot", o.dot, "write the Hasse diagram as DOT");

  std::vector<const char*> argv{"linclon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kMalformedInput;
  }

  try {
    if (*closure) return cmd_closure(o, out);
    if (*unary) return cmd_unary_check(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*bound) return cmd_bound(o, out);
    if (*decomp) return cmd_decompose(o, out);
    if (*tk) return cmd_tk(o, out);
    if (*assemble) return cmd_assemble(o, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  }
  return kMalformedInput;
}

}  // namespace linclon::cli
