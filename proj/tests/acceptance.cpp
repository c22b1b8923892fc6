// Acceptance criteria, one line each. Exit status is nonzero when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "skit/averages.hpp"
#include "skit/cli.hpp"
#include "skit/error.hpp"
#include "skit/largeness.hpp"
#include "skit/nodecont.hpp"
#include "skit/random.hpp"
#include "skit/schreier.hpp"
#include "skit/seqspace.hpp"
#include "skit/setfam.hpp"

using namespace skit;

namespace {

Ordinal O(const char* s) { return Ordinal::parse(s); }
FamilySpec S(const char* xi) { return FamilySpec::schreier(O(xi)); }
Rational Q(const char* s) { return parse_rational(s); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    r.pass = false;
    r.detail += "; over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit";
  }
  if (!r.pass) ++failures;
  std::printf("criterion %2d: %s  %s  [%s] (%.2f s)\n", id, r.pass ? "PASS" : "FAIL", name, r.detail.c_str(), secs);
  std::fflush(stdout);
}

const char* kHierarchy[] = {"2", "3", "w", "w+1", "w^2"};

Outcome c1() {
  std::size_t checked = 0;
  for (const FiniteSet& f : subsets_of_window(12, 12)) {
    if (f.empty()) continue;
    ++checked;
    if (s_member(O("1"), f) != (static_cast<Index>(f.size()) <= f.min())) return {false, "mismatch at " + f.to_string()};
  }
  return {checked == 4095, std::to_string(checked) + " sets"};
}

Outcome c2() {
  clear_schreier_cache();
  std::size_t checked = 0;
  const auto sets = subsets_of_window(10, 7);
  for (const char* xi : kHierarchy) {
    for (const FiniteSet& f : sets) {
      ++checked;
      if (s_member(O(xi), f) != oracle::schreier(O(xi), f)) {
        return {false, std::string("xi=") + xi + " differs at " + f.to_string()};
      }
    }
  }
  return {true, std::to_string(checked) + " (xi, F) pairs"};
}

std::vector<FamilySpec> regular_specs() {
  std::vector<FamilySpec> specs;
  for (const char* xi : kHierarchy) specs.push_back(S(xi));
  for (const char* xi : kHierarchy) specs.push_back(FamilySpec::plus(S(xi)));
  for (const char* a : kHierarchy) {
    for (const char* b : kHierarchy) specs.push_back(FamilySpec::convolution(S(a), S(b)));
  }
  return specs;
}

Outcome c3() {
  std::size_t n = 0;
  for (const FamilySpec& fam : regular_specs()) {
    ++n;
    const auto h = is_hereditary(fam, 10, 10);
    const auto s = is_spreading(fam, 10, 10);
    const auto c = contains_singletons(fam, 10);
    if (!h.holds || !s.holds || !c.holds) return {false, fam.to_string() + " not regular on window 10"};
  }
  return {true, std::to_string(n) + " families verified on window 10"};
}

Outcome c4() {
  struct Case {
    FamilySpec fam;
    const char* expected;
  };
  auto P = [](FamilySpec f) { return FamilySpec::plus(std::move(f)); };
  auto C = [](FamilySpec outer, FamilySpec inner) { return FamilySpec::convolution(std::move(outer), std::move(inner)); };
  const FamilySpec s0 = FamilySpec::singletons();
  const std::vector<Case> cases = {
      {S("0"), "1"},
      {S("1"), "w"},
      {S("2"), "w^2"},
      {S("w"), "w^w"},
      {S("w+1"), "w^(w+1)"},
      {S("w^2"), "w^(w^2)"},
      {s0, "1"},
      {P(S("1")), "w+1"},
      {P(S("w")), "w^w+1"},
      {P(P(S("2"))), "w^2+2"},
      {C(S("1"), S("1")), "w^2"},
      {C(S("2"), S("1")), "w^3"},
      {C(S("1"), S("w")), "w^(w+1)"},
      {C(S("w"), S("1")), "w^w"},
      {C(S("w"), S("2")), "w^w"},
      {C(S("2"), S("w")), "w^(w+2)"},
      {C(S("1"), P(S("1"))), "w^2"},
      {C(P(S("1")), S("1")), "w^2+w"},
      {C(S("1"), C(S("1"), S("1"))), "w^3"},
      {C(P(S("2")), P(S("1"))), "w^3+w+1"},
  };
  for (const Case& c : cases) {
    const Ordinal got = symbolic_order(c.fam);
    if (got != O(c.expected)) {
      return {false, c.fam.to_string() + " has order " + got.to_string() + ", expected " + c.expected};
    }
  }
  return {true, std::to_string(cases.size()) + " specs"};
}

Outcome c5() {
  std::size_t parts = 0, sets = 0;
  const IntStream streams[] = {IntStream::naturals(), IntStream::odds(), IntStream::tail_from(2), IntStream::evens()};
  const std::pair<const char*, std::size_t> plan[] = {{"1", 4}, {"2", 2}};
  for (const auto& [xi, count] : plan) {
    for (const IntStream& m : streams) {
      if (std::string(xi) == "2" && m == IntStream::evens()) continue;  // second part starts at 18
      for (const FiniteSet& p : s_decompose(O(xi), m, count)) {
        ++parts;
        if (!s_maximal(O(xi), p)) return {false, p.to_string() + " is not maximal in S_" + xi};
      }
    }
    auto pred = [&](const FiniteSet& f) { return oracle::schreier(O(xi), f); };
    for (Index w = 4; w <= 12; ++w) {
      for (const FiniteSet& f : subsets_of_window(w - 1, static_cast<std::size_t>(w - 1))) {
        if (f.empty() || f.max() != w - 1 || !s_member(O(xi), f)) continue;
        ++sets;
        if (s_maximal(O(xi), f) != oracle::maximal_in_window(pred, f, w)) {
          return {false, std::string("S_") + xi + ": single-point test disagrees at " + f.to_string()};
        }
      }
    }
  }
  return {true, std::to_string(parts) + " parts maximal, " + std::to_string(sets) + " members compared"};
}

Outcome c6() {
  std::string detail;
  for (const char* a : {"1", "2", "3", "w"}) {
    const Le5Result r = check_le5(O(a), 12);
    if (!r.holds) {
      return {false, std::string("alpha=") + a + " counterexample m=" + std::to_string(r.witness->m) +
                         " n=" + std::to_string(r.witness->n) + " F=" + r.witness->tail.to_string()};
    }
    detail += std::string(detail.empty() ? "" : ", ") + a + ":" + std::to_string(r.cases_checked);
  }
  return {true, "cases per alpha " + detail};
}

Outcome c7() {
  Rng rng(20240607);
  std::size_t n = 0;
  const FamilySpec fams[] = {S("1"), S("2"), FamilySpec::plus(S("1"))};
  const oracle::Pred preds[] = {
      [](const FiniteSet& f) { return oracle::schreier(O("1"), f); },
      [](const FiniteSet& f) { return oracle::schreier(O("2"), f); },
      [](const FiniteSet& f) { return oracle::plus([](const FiniteSet& g) { return oracle::schreier(O("1"), g); }, f); },
  };
  for (std::size_t k = 0; k < 3; ++k) {
    for (int t = 0; t < 200; ++t) {
      Vector v;
      const auto size = uniform_int(rng, 1, 12);
      while (static_cast<std::int64_t>(v.size()) < size) v.set(uniform_int(rng, 1, 24), random_rational(rng, 30, 30, true));
      ++n;
      if (family_norm(fams[k], v) != oracle::family_norm(preds[k], v)) {
        return {false, fams[k].to_string() + " norm differs on " + v.to_string()};
      }
    }
  }
  return {true, std::to_string(n) + " vectors"};
}

Outcome c8() {
  std::string detail;
  for (const char* xi : {"1", "2"}) {
    const auto r = l1_spreading_check(unit_blocks(8), O(xi), 1, NormOracle::schreier(S(xi)), 8, 10000, 8);
    if (!r.pass) {
      return {false, std::string("xi=") + xi + " witness " + r.witness->positions.to_string() + " norm " +
                         format_rational(r.witness->norm) + " < " + format_rational(r.witness->bound)};
    }
    detail += std::string("xi=") + xi + " " + std::to_string(r.sign_cases) + " sign cases + " +
              std::to_string(r.trials) + " trials; ";
  }
  const C0Bound c = c0_constant_lower(unit_blocks(8), O("1"), NormOracle::schreier(S("1")), 8);
  detail += "C >= " + format_rational(c.value) + " at " + c.positions.to_string();
  return {c.value >= 2, detail};
}

Outcome c9() {
  const FamilySpec s1 = S("1");
  const AverageBudget budget{};
  auto model = std::make_shared<const NodeModel>(s1, 24);
  const std::pair<const char*, NormOracle> oracles[] = {{"sup", NormOracle::sup()},
                                                        {"ell1", NormOracle::ell1()},
                                                        {"schreier", NormOracle::schreier(s1)},
                                                        {"node_sup", NormOracle::node_sup(model)}};
  const std::pair<const char*, IntStream> streams[] = {
      {"N", IntStream::naturals()}, {"odds", IntStream::odds()}, {"tail5", IntStream::tail_from(5)}};
  std::size_t done = 0;
  const std::size_t total = 4 * 5 * 3 * 4;
  std::string infeasible;
  for (const auto& [oname, oracle] : oracles) {
    for (const char* a : {"0", "1", "2", "3", "w"}) {
      for (const auto& [mname, m] : streams) {
        std::size_t n = 1;
        for (; n <= 4; ++n) {
          std::vector<AverageNode> seq;
          try {
            seq = averages(s1, oracle, O(a), m, n, budget);
          } catch (const BudgetExceeded&) {
            break;
          }
          const AverageNode& node = seq.back();
          if (oracle(node.vector) != 1) return {false, std::string("norm != 1 for ") + a + "," + mname + "," + oname};
          if (auto bad = average_violation(node, oracle)) return {false, *bad};
          if (!check_support_schreier(node, s1)) {
            return {false, std::string("support not in S_") + a + " for " + mname + ", n=" + std::to_string(n)};
          }
          const Reindexed r = reindex_as_first(s1, oracle, O(a), m, n, budget);
          if (r.first.vector != node.vector) return {false, "reindexing differs"};
          std::vector<std::pair<IntStream, std::size_t>> pieces;
          for (std::size_t i = 1; i <= n; ++i) {
            pieces.emplace_back(stream_through(seq[i - 1].vector.support(), m), 1);
          }
          if (!check_uniqueness(s1, oracle, O(a), m, pieces, budget).holds) return {false, "uniqueness fails"};
          ++done;
        }
        // alpha_{n+1} needs alpha_n first, so the rest of the row is out of reach as well
        if (n <= 4 && std::string(oname) == "sup") {
          infeasible += std::string(infeasible.empty() ? "" : " ") + a + "/" + mname + "/n>=" + std::to_string(n);
        }
      }
    }
  }
  std::string detail = std::to_string(done) + "/" + std::to_string(total) + " cells exact";
  if (done < total) {
    detail += "; over the " + std::to_string(budget.max_forced) + "-vector budget (per oracle): " + infeasible;
  }
  return {done == total, detail};
}

Outcome c10() {
  std::size_t instances = 0;
  for (const char* xi : {"1", "2"}) {
    const NodeModel model(S(xi), 8);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      Rng rng(seed);
      const auto blocks = random_node_blocks(model, rng, 4);
      const auto idx = select_indices(model, blocks);
      if (auto bad = selection_violation(model, blocks, idx)) {
        return {false, std::string("S_") + xi + " seed " + std::to_string(seed) + " fails at " + bad->to_string()};
      }
      ++instances;
    }
  }
  return {true, std::to_string(instances) + " bases, every point of each model checked"};
}

Outcome c11() {
  std::string detail;
  for (const char* xi : {"1", "2"}) {
    const NodeModel model(S(xi), 8);
    Rng rng(11);
    const auto blocks = random_node_blocks(model, rng, 4);
    const Rational eps = Q("1/2");
    FiniteSet m = select_subsequence(model, blocks, std::vector<Rational>(blocks.size(), eps));
    m = m.slice(0, std::min<std::size_t>(m.size(), 12));
    const auto r = upper_estimate_check(model, blocks, m, S(xi), eps, 100, 11);
    if (!r.pass) {
      return {false, std::string("S_") + xi + ": " + format_rational(r.witness->lhs) + " > " +
                         format_rational(r.witness->rhs)};
    }
    detail += std::string("S_") + xi + " M=" + m.to_string() + " " + std::to_string(r.trials) + " vectors; ";
  }
  return {true, detail + "constant 4"};
}

Outcome c12() {
  const FamilySpec s1 = S("1");
  std::size_t n = 0;
  const NormOracle oracles[] = {NormOracle::sup(), NormOracle::ell1(), NormOracle::schreier(s1)};
  for (const NormOracle& oracle : oracles) {
    for (const char* a : {"0", "1", "2"}) {
      for (const char* eps : {"1/10", "1/100"}) {
        for (const IntStream& m : {IntStream::naturals(), IntStream::tail_from(2), IntStream::odds()}) {
          const Decomposition d = build_successor_decomposition(s1, oracle, O(a), m, Q(eps));
          const DecompositionCheck c = verify_decomposition(d, s1, oracle);
          if (!c.holds) return {false, c.clause + ": " + c.detail};
          ++n;
        }
      }
    }
  }
  return {true, std::to_string(n) + " decompositions"};
}

Outcome c13() {
  const NodeModel model(S("2"), 8);
  Rng rng(13);
  std::size_t checks = 0;
  const Rational grid[] = {Q("1/4"), Q("1/2"), Q("1"), Q("3/2"), Q("2")};
  for (int t = 0; t < 100; ++t) {
    Vector u;
    const auto size = uniform_int(rng, 1, 10);
    while (static_cast<std::int64_t>(u.size()) < size) {
      u.set(uniform_int(rng, 1, static_cast<std::int64_t>(model.size())), Rational(uniform_int(rng, 1, 8), 4));
    }
    for (const char* beta : {"0", "1"}) {
      for (std::size_t p = 1; p <= 3; ++p) {
        bool prev = false;
        for (const Rational& eps : grid) {
          const bool large = is_large(u, model, O(beta), p, eps).large;
          if (prev && !large) return {false, "not monotone in eps for " + u.to_string()};
          prev = large;
          const bool more = is_large(u, model, O(beta), p + 1, eps).large;
          if (more && !large) return {false, "not antitone in p for " + u.to_string()};
          checks += 2;
        }
      }
    }
  }
  return {true, std::to_string(checks) + " comparisons"};
}

Outcome c14() {
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "le5", "--alpha", "w", "--window", "12"},
      {"verify", "transfer", "--alpha", "1", "--beta", "2", "--stream", "odds", "--window", "12", "--max-size", "6"},
      {"threshold", "--alpha", "2", "--beta", "w+1", "--window", "8"},
      {"l1-check", "--oracle", R"({"kind":"schreier","fam":{"kind":"schreier","xi":"1"}})", "--unit", "8", "--xi",
       "1", "--depth", "8", "--trials", "2000", "--seed", "14"},
      {"c0-constant", "--oracle", "sup", "--unit", "8", "--xi", "2"},
      {"nodes", "select", "--xi", "2", "--window", "8", "--seed", "14"},
      {"verify", "upper-estimate", "--xi", "1", "--window", "8", "--seed", "14", "--trials", "20", "--max-indices", "8"},
      {"verify", "uniqueness", "--xi", "1", "--oracle", "ell1", "--alpha", "w", "--n", "2"},
      {"verify", "support-schreier", "--xi", "1", "--oracle", "sup", "--alpha", "2", "--n", "3"},
      {"check-large", "--xi", "2", "--window", "7", "--vector", R"({"entries":{"2":"1/2","9":"1/3","14":"1"}})",
       "--beta", "1", "--p", "2", "--eps", "1/2"},
  };
  for (const auto& cmd : commands) {
    std::string outputs[2];
    for (std::string& text : outputs) {
      clear_schreier_cache();
      std::ostringstream out, err;
      const int code = run_cli(cmd, out, err);
      if (code == 2) return {false, cmd.front() + ": " + err.str()};
      text = out.str();
    }
    if (outputs[0] != outputs[1]) return {false, "output of `" + cmd.front() + " " + cmd[1] + "` differs between runs"};
  }
  return {true, std::to_string(commands.size()) + " certificates byte-identical"};
}

}  // namespace

int main() {
  criterion(1, "S_1 closed form", 1, c1);
  criterion(2, "hierarchy against unfolded definition", 60, c2);
  criterion(3, "regularity certificates", 60, c3);
  criterion(4, "symbolic order algebra", 0, c4);
  criterion(5, "decomposition into maximal members", 0, c5);
  criterion(6, "lemma on maximal sets", 60, c6);
  criterion(7, "Schreier-space norm", 60, c7);
  criterion(8, "l1 spreading model of the unit basis", 0, c8);
  criterion(9, "average hierarchy", 120, c9);
  criterion(10, "node-basis selection", 60, c10);
  criterion(11, "upper estimate", 0, c11);
  criterion(12, "decomposition base case", 0, c12);
  criterion(13, "largeness monotonicity", 0, c13);
  criterion(14, "determinism", 0, c14);
  std::printf("%d of 14 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
