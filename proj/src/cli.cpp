#include "skit/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "skit/error.hpp"
#include "skit/json_io.hpp"
#include "skit/schreier.hpp"

namespace skit {

namespace {

struct Opts {
  std::string fam, xi, set, stream = "naturals", oracle, vector, blocks, function, point;
  std::string alpha = "1", beta = "1", eps = "1/2", delta = "1", thresholds, decomposition, instance;
  Index window = 10;
  Index search_bound = 20;
  std::size_t depth = 8, count = 4, n = 1, p = 1, max_size = 6, unit = 0, max_length = 3;
  std::size_t max_support = 20, max_indices = 12, budget = 1u << 16, trials = 1000;
  std::uint64_t seed = 1;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// JSON text, @file, or a bare word taken as a JSON string.
Json arg(const std::string& raw, const std::string& name) {
  std::string text = raw;
  if (!text.empty() && text[0] == '@') text = slurp(text.substr(1));
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError(name + " is required");
  if (std::isalpha(static_cast<unsigned char>(text[first]))) return Json(text.substr(first));
  return parse_json(text, name);
}

FamilySpec family_arg(const Opts& o) {
  if (!o.fam.empty()) return family_from_json(arg(o.fam, "--fam"));
  if (!o.xi.empty()) return FamilySpec::schreier(Ordinal::parse(o.xi));
  throw ParseError("--fam or --xi is required");
}

Ordinal xi_arg(const Opts& o) {
  if (o.xi.empty()) throw ParseError("--xi is required");
  return Ordinal::parse(o.xi);
}

std::shared_ptr<const NodeModel> model_arg(const Opts& o) {
  return std::make_shared<const NodeModel>(family_arg(o), o.window);
}

std::vector<Block> blocks_or_random(const Opts& o, const NodeModel& model) {
  if (!o.blocks.empty()) return blocks_from_json(arg(o.blocks, "--blocks"));
  Rng rng(o.seed);
  return random_node_blocks(model, rng, o.max_length);
}

std::vector<Block> blocks_or_units(const Opts& o) {
  if (!o.blocks.empty()) return blocks_from_json(arg(o.blocks, "--blocks"));
  if (o.unit == 0) throw ParseError("--blocks or --unit is required");
  return unit_blocks(o.unit);
}

Json model_inputs(const Opts& o) { return {{"fam", to_json(family_arg(o))}, {"window", o.window}}; }

struct Outcome {
  Json output;
  bool verdict = true;
};

Outcome certified(Certificate c) {
  const bool v = c.verdict;
  return {to_json(c), v};
}

using Handler = std::function<Outcome(const Opts&)>;

Outcome cmd_member(const Opts& o) {
  const bool m = member(family_arg(o), set_from_json(arg(o.set, "--set")));
  return {{{"member", m}}, m};
}

Outcome cmd_maximal(const Opts& o) {
  const bool m = is_maximal(family_arg(o), set_from_json(arg(o.set, "--set")));
  return {{{"maximal", m}}, m};
}

Outcome cmd_decompose(const Opts& o) {
  const auto parts = s_decompose(xi_arg(o), stream_from_json(arg(o.stream, "--stream")), o.count);
  Json out = Json::array();
  for (const FiniteSet& f : parts) out.push_back(to_json(f));
  return {{{"parts", out}}, true};
}

Outcome cmd_threshold(const Opts& o) {
  Certificate c;
  c.operation = "threshold";
  c.inputs = {{"alpha", o.alpha}, {"beta", o.beta}};
  c.parameters = {{"search_bound", o.search_bound}, {"window", o.window}, {"max_size", o.max_size}};
  try {
    const auto t = s_threshold(Ordinal::parse(o.alpha), Ordinal::parse(o.beta), o.search_bound, o.window,
                               o.max_size);
    c.result = {{"threshold", t.threshold},
                {"counterexample_below", t.counterexample_below ? to_json(*t.counterexample_below) : Json()}};
  } catch (const NotFound& e) {
    c.verdict = false;
    c.result = {{"threshold", nullptr}, {"reason", e.what()}};
  }
  return certified(c);
}

Outcome cmd_order(const Opts& o) { return {{{"order", to_json(symbolic_order(family_arg(o)))}}, true}; }

Outcome cmd_norm(const Opts& o) {
  const NormOracle oracle = oracle_from_json(arg(o.oracle, "--oracle"));
  return {{{"norm", to_json(oracle(vector_from_json(arg(o.vector, "--vector"))))}}, true};
}

Outcome cmd_c0(const Opts& o) {
  const NormOracle oracle = oracle_from_json(arg(o.oracle, "--oracle"));
  const auto blocks = blocks_or_units(o);
  const C0Bound b = c0_constant_lower(blocks, xi_arg(o), oracle, o.depth);
  Certificate c;
  c.operation = "c0-constant";
  c.inputs = {{"oracle", oracle_to_json(oracle)}, {"blocks", to_json(blocks)}, {"xi", o.xi}};
  c.parameters = {{"depth", o.depth}};
  c.result = {{"lower_bound", to_json(b.value)}, {"positions", to_json(b.positions)}, {"signs", b.signs}};
  return certified(c);
}

Outcome cmd_l1(const Opts& o) {
  const NormOracle oracle = oracle_from_json(arg(o.oracle, "--oracle"));
  const auto blocks = blocks_or_units(o);
  const auto r =
      l1_spreading_check(blocks, xi_arg(o), parse_rational(o.delta), oracle, o.depth, o.trials, o.seed);
  Certificate c;
  c.operation = "l1-check";
  c.inputs = {{"oracle", oracle_to_json(oracle)}, {"blocks", to_json(blocks)}, {"xi", o.xi}, {"delta", o.delta}};
  c.parameters = {{"depth", o.depth}, {"trials", o.trials}, {"seed", o.seed}};
  c.verdict = r.pass;
  c.result = {{"sign_cases", r.sign_cases}};
  if (r.witness) {
    c.result["witness"] = {{"positions", to_json(r.witness->positions)},
                           {"coefficients", to_json(r.witness->coefficients)},
                           {"norm", to_json(r.witness->norm)},
                           {"bound", to_json(r.witness->bound)}};
  }
  return certified(c);
}

Outcome cmd_uncond(const Opts& o) {
  const NormOracle oracle = oracle_from_json(arg(o.oracle, "--oracle"));
  const Rational r = unconditionality_ratio(oracle, vector_from_json(arg(o.vector, "--vector")),
                                            set_from_json(arg(o.set, "--set")));
  return {{{"ratio", to_json(r)}}, true};
}

Outcome cmd_nodes_enum(const Opts& o) {
  const auto model = model_arg(o);
  Json nodes = Json::array();
  for (const FiniteSet& f : model->nodes()) nodes.push_back(to_json(f));
  return {{{"enumeration", std::string(kNodeEnumeration)}, {"nodes", nodes}}, true};
}

Outcome cmd_nodes_eval(const Opts& o) {
  const auto model = model_arg(o);
  const Vector f = node_function_from_json(arg(o.function, "--function"));
  return {{{"value", to_json(evaluate(*model, f, set_from_json(arg(o.point, "--point"))))}}, true};
}

Outcome cmd_nodes_supnorm(const Opts& o) {
  const auto model = model_arg(o);
  return {{{"sup_norm", to_json(sup_norm(*model, node_function_from_json(arg(o.function, "--function"))))}},
          true};
}

Outcome cmd_nodes_select(const Opts& o) {
  const auto model = model_arg(o);
  const auto blocks = blocks_or_random(o, *model);
  const auto indices = select_indices(*model, blocks);
  const auto bad = selection_violation(*model, blocks, indices);
  Certificate c;
  c.operation = "nodes select";
  c.inputs = model_inputs(o);
  c.inputs["blocks"] = to_json(blocks);
  c.parameters = {{"seed", o.seed}, {"max_length", o.max_length}};
  c.verdict = !bad;
  c.result = {{"indices", indices}};
  if (bad) c.result["witness"] = to_json(*bad);
  return certified(c);
}

Outcome cmd_nodes_gfamily(const Opts& o) {
  const auto model = model_arg(o);
  const auto blocks = blocks_or_random(o, *model);
  const auto thresholds = rationals_from_json(arg(o.thresholds, "--thresholds"));
  return {{{"family", to_json(intersection_family(*model, blocks, thresholds))}}, true};
}

Outcome cmd_average(const Opts& o) {
  const NormOracle oracle = oracle_from_json(arg(o.oracle, "--oracle"));
  const AverageNode node = average(family_arg(o), oracle, Ordinal::parse(o.alpha),
                                   stream_from_json(arg(o.stream, "--stream")), o.n, AverageBudget{o.budget});
  return {to_json(node), true};
}

Outcome cmd_check_decomposition(const Opts& o) {
  const NormOracle oracle = oracle_from_json(arg(o.oracle, "--oracle"));
  const Json dj = arg(o.decomposition, "--decomposition");
  const auto r = verify_decomposition(decomposition_from_json(dj), family_arg(o), oracle, AverageBudget{o.budget});
  Certificate c;
  c.operation = "check-decomposition";
  c.inputs = {{"decomposition", dj}, {"fam", to_json(family_arg(o))}, {"oracle", oracle_to_json(oracle)}};
  c.verdict = r.holds;
  if (!r.holds) c.result = {{"clause", r.clause}, {"detail", r.detail}};
  return certified(c);
}

Outcome cmd_build_decomposition(const Opts& o) {
  const NormOracle oracle = oracle_from_json(arg(o.oracle, "--oracle"));
  const Decomposition d =
      build_successor_decomposition(family_arg(o), oracle, Ordinal::parse(o.alpha),
                                    stream_from_json(arg(o.stream, "--stream")), parse_rational(o.eps),
                                    AverageBudget{o.budget});
  return {to_json(d), true};
}

Outcome cmd_check_large(const Opts& o) {
  const auto model = model_arg(o);
  const Vector u = node_function_from_json(arg(o.vector, "--vector"));
  const auto r = is_large(u, *model, Ordinal::parse(o.beta), o.p, parse_rational(o.eps), o.max_support);
  Certificate c;
  c.operation = "check-large";
  c.inputs = model_inputs(o);
  c.inputs["vector"] = to_json(u);
  c.inputs["beta"] = o.beta;
  c.parameters = {{"p", o.p}, {"eps", o.eps}};
  c.verdict = r.large;
  c.result = {{"sets_checked", r.sets_checked}};
  if (r.witness) {
    c.result["witness"] = {{"indices", to_json(r.witness->indices)}, {"point", to_json(r.witness->point)}};
  }
  return certified(c);
}

Outcome cmd_le5(const Opts& o) {
  const auto r = check_le5(Ordinal::parse(o.alpha), o.window);
  Certificate c;
  c.operation = "verify le5";
  c.inputs = {{"alpha", o.alpha}};
  c.parameters = {{"window", o.window}};
  c.verdict = r.holds;
  c.result = {{"cases_checked", r.cases_checked}};
  if (r.witness) {
    c.result["witness"] = {{"m", r.witness->m}, {"n", r.witness->n}, {"tail", to_json(r.witness->tail)}};
  }
  return certified(c);
}

Outcome cmd_transfer(const Opts& o) {
  const IntStream stream = stream_from_json(arg(o.stream, "--stream"));
  const auto r = check_transfer(Ordinal::parse(o.alpha), Ordinal::parse(o.beta), stream, o.window, o.max_size);
  Certificate c;
  c.operation = "verify transfer";
  c.inputs = {{"alpha", o.alpha}, {"beta", o.beta}, {"stream", to_json(stream)}};
  c.parameters = {{"window", o.window}, {"max_size", o.max_size}};
  c.verdict = r.holds;
  c.result = {{"sets_checked", r.sets_checked}};
  if (r.witness) c.result["witness"] = {{"direction", r.failed_direction}, {"set", to_json(*r.witness)}};
  return certified(c);
}

Outcome cmd_uniqueness(const Opts& o) {
  const FamilySpec fam = family_arg(o);
  const NormOracle oracle = oracle_from_json(arg(o.oracle, "--oracle"));
  const Ordinal alpha = Ordinal::parse(o.alpha);
  const IntStream stream = stream_from_json(arg(o.stream, "--stream"));
  const AverageBudget budget{o.budget};
  Certificate c;
  c.operation = "verify uniqueness";
  c.inputs = {{"fam", to_json(fam)}, {"oracle", oracle_to_json(oracle)}, {"alpha", o.alpha}, {"stream", to_json(stream)}};
  c.parameters = {{"n", o.n}, {"budget", o.budget}};
  std::vector<std::pair<IntStream, std::size_t>> pieces;
  Json streams = Json::array();
  for (std::size_t i = 1; i <= o.n; ++i) {
    Reindexed r = reindex_as_first(fam, oracle, alpha, stream, i, budget);
    streams.push_back(to_json(r.stream));
    pieces.emplace_back(std::move(r.stream), 1);
  }
  const auto u = check_uniqueness(fam, oracle, alpha, stream, pieces, budget);
  c.verdict = u.holds;
  c.result = {{"reindexed_streams", streams}};
  if (!u.holds) c.result["mismatch"] = u.mismatch;
  return certified(c);
}

Outcome cmd_support_schreier(const Opts& o) {
  const FamilySpec fam = family_arg(o);
  const NormOracle oracle = oracle_from_json(arg(o.oracle, "--oracle"));
  const IntStream stream = stream_from_json(arg(o.stream, "--stream"));
  const auto seq = averages(fam, oracle, Ordinal::parse(o.alpha), stream, o.n, AverageBudget{o.budget});
  Certificate c;
  c.operation = "verify support-schreier";
  c.inputs = {{"fam", to_json(fam)}, {"oracle", oracle_to_json(oracle)}, {"alpha", o.alpha}, {"stream", to_json(stream)}};
  c.parameters = {{"n", o.n}, {"budget", o.budget}};
  Json supports = Json::array();
  for (const AverageNode& node : seq) {
    const bool ok = check_support_schreier(node, fam) && oracle(node.vector) == 1;
    if (!ok && c.verdict) {
      c.verdict = false;
      c.result["witness"] = {{"n", node.index_n}, {"support", to_json(node.vector.support())}};
    }
    supports.push_back(node.vector.size());
  }
  c.result["support_sizes"] = supports;
  return certified(c);
}

Outcome cmd_upper_estimate(const Opts& o) {
  const auto model = model_arg(o);
  const auto blocks = blocks_or_random(o, *model);
  const Rational eps = parse_rational(o.eps);
  FiniteSet m = select_subsequence(*model, blocks, std::vector<Rational>(blocks.size(), eps));
  m = m.slice(0, std::min(m.size(), o.max_indices));
  const auto r = upper_estimate_check(*model, blocks, m, model->family(), eps, o.trials, o.seed);
  Certificate c;
  c.operation = "verify upper-estimate";
  c.inputs = model_inputs(o);
  c.inputs["blocks"] = to_json(blocks);
  c.parameters = {{"eps", o.eps}, {"trials", o.trials}, {"seed", o.seed}, {"max_length", o.max_length},
                  {"max_indices", o.max_indices}};
  c.verdict = r.pass;
  c.result = {{"subsequence", to_json(m)}};
  if (r.witness) {
    c.result["witness"] = {{"coefficients", to_json(r.witness->coefficients)},
                           {"lhs", to_json(r.witness->lhs)},
                           {"rhs", to_json(r.witness->rhs)}};
  }
  return certified(c);
}

// Instance: {"fam","window","blocks","g","alpha","delta","j","b"[,"point"]}.
Outcome cmd_l21(const Opts& o) {
  const Json inst = arg(o.instance, "--instance");
  auto get = [&](const char* key) -> const Json& {
    if (!inst.is_object() || !inst.contains(key)) throw ParseError(std::string("instance lacks \"") + key + "\"");
    return inst[key];
  };
  if (!get("window").is_number_integer()) throw ParseError("instance window must be an integer");
  const NodeModel model(family_from_json(get("fam")), get("window").get<Index>());
  std::optional<FiniteSet> point;
  if (inst.contains("point")) point = set_from_json(inst["point"]);
  const auto r = verify_L21(model, blocks_from_json(get("blocks")), family_from_json(get("g")),
                            ordinal_from_json(get("alpha")), rationals_from_json(get("delta")),
                            set_from_json(get("j")), rationals_from_json(get("b")), point);
  Certificate c;
  c.operation = "verify l21";
  c.inputs = inst;
  c.verdict = r.status != L21Status::fails;
  c.result = {{"status", to_string(r.status)}};
  if (!r.reason.empty()) c.result["reason"] = r.reason;
  if (r.status == L21Status::fails) {
    c.result["witness"] = {{"point", to_json(*r.point)}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}};
  }
  return certified(c);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Schreier families, Schreier-type norms, node bases and transfinite averages", "skit");
  app.require_subcommand(1);
  Opts o;
  std::map<CLI::App*, Handler> handlers;

  auto fam = [&](CLI::App* c) {
    c->add_option("--fam", o.fam, "family spec JSON");
    c->add_option("--xi", o.xi, "ordinal; shorthand for the Schreier family S_xi");
  };
  auto model = [&](CLI::App* c) {
    fam(c);
    c->add_option("--window", o.window, "node model window");
  };
  auto randomized = [&](CLI::App* c) {
    c->add_option("--blocks", o.blocks, "array of node functions; random blocks when absent");
    c->add_option("--seed", o.seed);
    c->add_option("--max-length", o.max_length, "length bound for random blocks");
  };
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* c = parent->add_subcommand(name, help);
    handlers[c] = std::move(h);
    return c;
  };

  CLI::App* c = add(&app, "member", "membership of a finite set", cmd_member);
  fam(c);
  c->add_option("--set", o.set)->required();

  c = add(&app, "maximal", "maximality of a member", cmd_maximal);
  fam(c);
  c->add_option("--set", o.set)->required();

  c = add(&app, "decompose-set", "successive maximal members of S_xi along a stream", cmd_decompose);
  c->add_option("--xi", o.xi)->required();
  c->add_option("--stream", o.stream);
  c->add_option("--count", o.count);

  c = add(&app, "threshold", "least n with S_alpha inside S_beta above n, on a window", cmd_threshold);
  c->add_option("--alpha", o.alpha);
  c->add_option("--beta", o.beta);
  c->add_option("--search-bound", o.search_bound);
  c->add_option("--window", o.window);
  c->add_option("--max-size", o.max_size);

  c = add(&app, "order", "symbolic order of a family", cmd_order);
  fam(c);

  c = add(&app, "norm", "norm of a vector", cmd_norm);
  c->add_option("--oracle", o.oracle)->required();
  c->add_option("--vector", o.vector)->required();

  c = add(&app, "c0-constant", "lower bound for the upper c0 constant of a block sequence", cmd_c0);
  c->add_option("--oracle", o.oracle)->required();
  c->add_option("--blocks", o.blocks);
  c->add_option("--unit", o.unit, "use e_1..e_N as blocks");
  c->add_option("--xi", o.xi)->required();
  c->add_option("--depth", o.depth);

  c = add(&app, "l1-check", "search for a violation of the l1 lower estimate", cmd_l1);
  c->add_option("--oracle", o.oracle)->required();
  c->add_option("--blocks", o.blocks);
  c->add_option("--unit", o.unit, "use e_1..e_N as blocks");
  c->add_option("--xi", o.xi)->required();
  c->add_option("--delta", o.delta);
  c->add_option("--depth", o.depth);
  c->add_option("--trials", o.trials);
  c->add_option("--seed", o.seed);

  c = add(&app, "uncond-ratio", "||v restricted to I|| / ||v||", cmd_uncond);
  c->add_option("--oracle", o.oracle)->required();
  c->add_option("--vector", o.vector)->required();
  c->add_option("--set", o.set)->required();

  CLI::App* nodes = app.add_subcommand("nodes", "node basis of C(F)");
  nodes->require_subcommand(1);
  model(add(nodes, "enum", "anti-lexicographic enumeration", cmd_nodes_enum));
  c = add(nodes, "eval", "value of a node function at a point", cmd_nodes_eval);
  model(c);
  c->add_option("--function", o.function)->required();
  c->add_option("--point", o.point)->required();
  c = add(nodes, "supnorm", "sup-norm of a node function", cmd_nodes_supnorm);
  model(c);
  c->add_option("--function", o.function)->required();
  c = add(nodes, "select", "greedy index selection for a block basis", cmd_nodes_select);
  model(c);
  randomized(c);
  c = add(nodes, "gfamily", "family of index sets that are simultaneously large", cmd_nodes_gfamily);
  model(c);
  randomized(c);
  c->add_option("--thresholds", o.thresholds)->required();

  c = add(&app, "average", "the normalized average alpha_n^M", cmd_average);
  fam(c);
  c->add_option("--oracle", o.oracle)->required();
  c->add_option("--alpha", o.alpha);
  c->add_option("--stream", o.stream);
  c->add_option("--n", o.n);
  c->add_option("--budget", o.budget, "basis vectors the construction may force");

  c = add(&app, "check-decomposition", "verify an (eps, alpha, beta)-decomposition", cmd_check_decomposition);
  fam(c);
  c->add_option("--oracle", o.oracle)->required();
  c->add_option("--decomposition", o.decomposition)->required();
  c->add_option("--budget", o.budget);

  c = add(&app, "build-decomposition", "decompose an (alpha+1)-average", cmd_build_decomposition);
  fam(c);
  c->add_option("--oracle", o.oracle)->required();
  c->add_option("--alpha", o.alpha);
  c->add_option("--stream", o.stream);
  c->add_option("--eps", o.eps);
  c->add_option("--budget", o.budget);

  c = add(&app, "check-large", "(beta, p, eps)-largeness of a node vector", cmd_check_large);
  model(c);
  c->add_option("--vector", o.vector)->required();
  c->add_option("--beta", o.beta);
  c->add_option("--p", o.p);
  c->add_option("--eps", o.eps);
  c->add_option("--max-support", o.max_support);

  CLI::App* verify = app.add_subcommand("verify", "named verification suites");
  verify->require_subcommand(1);
  c = add(verify, "le5", "no m < n swaps into a maximal set", cmd_le5);
  c->add_option("--alpha", o.alpha);
  c->add_option("--window", o.window);
  c = add(verify, "transfer", "S_beta[S_alpha] against S_{alpha+beta}", cmd_transfer);
  c->add_option("--alpha", o.alpha);
  c->add_option("--beta", o.beta);
  c->add_option("--stream", o.stream);
  c->add_option("--window", o.window);
  c->add_option("--max-size", o.max_size);
  for (auto [name, h] : {std::pair<const char*, Handler>{"uniqueness", cmd_uniqueness},
                         std::pair<const char*, Handler>{"support-schreier", cmd_support_schreier}}) {
    c = add(verify, name, "", h);
    fam(c);
    c->add_option("--oracle", o.oracle)->required();
    c->add_option("--alpha", o.alpha);
    c->add_option("--stream", o.stream);
    c->add_option("--n", o.n);
    c->add_option("--budget", o.budget);
  }
  c = add(verify, "upper-estimate", "upper estimate on a selected subsequence", cmd_upper_estimate);
  model(c);
  randomized(c);
  c->add_option("--eps", o.eps);
  c->add_option("--trials", o.trials);
  c->add_option("--max-indices", o.max_indices, "prefix of the selection that is tested");
  c = add(verify, "l21", "admissibility estimate for node blocks", cmd_l21);
  c->add_option("--instance", o.instance, "instance JSON or @file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  for (const auto& [cmd, handler] : handlers) {
    if (!cmd->parsed()) continue;
    try {
      const Outcome r = handler(o);
      out << r.output.dump(2) << "\n";
      return r.verdict ? 0 : 1;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (const Json::exception& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  err << "usage error: no command given\n";
  return 2;
}

}  // namespace skit
