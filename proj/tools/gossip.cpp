// gossip: formulas, constructions, simulation and oracles from the shell.
//
// Exit status: 0 success, 1 invalid input or parameters outside a domain,
// 2 a failed check (verify failure, lemma violation, oracle timeout).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "gossip/gossip.hpp"

namespace {

using namespace gossip;
using io::Json;

enum class Format { Text, Json, Dot };

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kFailed = 2;

struct Options {
  Format format = Format::Text;
  std::uint64_t seed = 1;
  int budget_secs = 60;
};

std::string regime_text(const formulas::TRegime& r) {
  if (r.kind == formulas::RegimeKind::Regime1) return "regime 1";
  return "regime 2, i = " + std::to_string(*r.index);
}

Json regime_json(std::int64_t p, const formulas::TRegime& r) {
  Json j;
  j["p"] = p;
  j["regime"] = static_cast<int>(r.kind);
  if (r.index) j["i"] = *r.index;
  return j;
}

int cmd_pvalue(const Options& o, std::int64_t n, std::int64_t k) {
  const auto r = formulas::classify_regime(n, k);
  const auto p = formulas::p_min_calls(n, k);
  if (o.format == Format::Json) std::cout << regime_json(p, r).dump() << "\n";
  else std::cout << "P(" << n << "," << k << ") = " << p << "  (" << regime_text(r) << ")\n";
  return kOk;
}

int cmd_table(const Options& o, std::int64_t k, std::int64_t n_min, std::int64_t n_max) {
  if (n_min < k) throw DomainError("n_min must be at least k");
  if (n_max < n_min) throw DomainError("n_max must be at least n_min");
  const std::int64_t top = formulas::detail::pow2(k - 1) - 1;
  Json rows = Json::array();
  if (o.format != Format::Json) std::cout << "n\tP\tregime\ti\n";
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    const auto r = formulas::classify_regime(n, k);
    const auto p = formulas::p_min_calls(n, k);
    if (o.format == Format::Json) {
      Json row{{"n", n}};
      row.update(regime_json(p, r));
      rows.push_back(std::move(row));
      continue;
    }
    std::cout << n << '\t' << p << '\t' << static_cast<int>(r.kind) << '\t'
              << (r.index ? std::to_string(*r.index) : "-");
    if (n == top) std::cout << "\t<- 2^(k-1)-1";
    std::cout << '\n';
  }
  if (o.format == Format::Json) std::cout << Json{{"k", k}, {"rows", rows}}.dump() << "\n";
  return kOk;
}

void emit_schedule(const Options& o, const AugmentedSchedule& s, const std::string& out_path) {
  const std::string text = o.format == Format::Dot ? io::to_dot(s) : io::dump(s) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ValidationError("cannot write " + out_path);
  out << text;
}

int cmd_synth(const Options& o, const std::string& method, std::int64_t n, std::int64_t k, std::int64_t i,
              std::optional<std::int64_t> blocks, const std::string& out_path) {
  Schedule s = [&] {
    if (method == "doubling") return constructions::synth_doubling(n, k, i);
    if (method == "tree") return constructions::synth_tree_variant(n, k, i);
    if (method == "multiblock") return constructions::synth_multiblock(n, k, i, blocks);
    throw ValidationError("unknown method '" + method + "' (doubling, tree, multiblock)");
  }();
  if (!is_k_informing(s, static_cast<std::size_t>(k))) {
    std::cerr << "error: synthesized schedule is not " << k << "-informing\n";
    return kFailed;
  }
  emit_schedule(o, AugmentedSchedule({}, std::move(s)), out_path);
  return kOk;
}

int cmd_verify(const Options& o, const std::string& path, std::size_t k) {
  const AugmentedSchedule s = io::load_schedule(path);
  gossip::detail::check_level(k, s.persons());
  const KnowledgeState ks = apply_preliminary(s);
  const auto aw = awareness(ks);
  const bool informing = is_k_informing(ks, k);
  const bool exact = is_exact_k_informing(ks, k);
  const auto comps = graph::classify_components(graph::build_graph(s));
  if (o.format == Format::Dot) {
    std::cout << io::to_dot(s);
  } else if (o.format == Format::Json) {
    Json j;
    j["k"] = k;
    j["k_informing"] = informing;
    j["exact"] = exact;
    j["min_awareness"] = min_awareness(ks);
    j["calls"] = s.preliminary.size() + s.base.size();
    j["preliminary_calls"] = s.preliminary.size();
    j["awareness"] = aw;
    Json cs = Json::array();
    for (const auto& c : comps) {
      cs.push_back(Json{{"kind", graph::to_string(c.kind)}, {"vertices", c.vertices}, {"edges", c.edge_count}});
    }
    j["components"] = std::move(cs);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "persons " << s.persons() << ", calls " << s.preliminary.size() + s.base.size() << " ("
              << s.preliminary.size() << " preliminary)\n";
    for (std::size_t p = 0; p < aw.size(); ++p) std::cout << "  " << p << ": " << aw[p] << "\n";
    std::cout << "min awareness " << min_awareness(ks) << "\n";
    std::cout << "components:";
    for (const auto& c : comps) std::cout << " " << graph::to_string(c.kind) << "(" << c.vertices.size() << ")";
    std::cout << "\n" << (informing ? "PASS" : "FAIL") << ": " << k << "-informing"
              << (informing ? (exact ? ", exact" : ", not exact") : "") << "\n";
  }
  return informing ? kOk : kFailed;
}

int cmd_oracle(const Options& o, std::size_t n, std::size_t k) {
  if (o.budget_secs <= 0) throw DomainError("--budget-secs must be positive");
  oracle::SearchConfig cfg;
  cfg.time_budget = std::chrono::duration<double>(o.budget_secs);
  const auto r = oracle::min_calls_bruteforce(n, k, cfg);
  if (o.format == Format::Json) {
    Json j;
    j["n"] = n;
    j["k"] = k;
    j["min_calls"] = r.min_calls ? Json(*r.min_calls) : Json(nullptr);
    j["timed_out"] = r.timed_out;
    j["refuted_through"] = r.refuted_through ? Json(*r.refuted_through) : Json(nullptr);
    j["nodes"] = r.nodes;
    if (r.witness) j["witness"] = io::to_json(*r.witness);
    std::cout << j.dump() << "\n";
  } else if (o.format == Format::Dot && r.witness) {
    std::cout << io::to_dot(*r.witness);
  } else if (r.min_calls) {
    std::cout << *r.min_calls << "\n";
  } else {
    std::cout << (r.timed_out ? "timeout" : "depth limit") << " (no schedule with <= "
              << (r.refuted_through ? std::to_string(*r.refuted_through) : std::string("-")) << " calls)\n";
  }
  return r.min_calls ? kOk : kFailed;
}

int cmd_check_lemma(const Options& o, const std::string& id_text, oracle::LemmaParams p) {
  const auto id = oracle::parse_lemma_id(id_text);
  if (!id) throw ValidationError("unknown lemma id '" + id_text + "'");
  if (p.n_max_exhaustive > oracle::kMaxExhaustiveTreeN || p.n_max_sampled > oracle::kMaxSampledTreeN) {
    throw DomainError("tree ranges are limited to n <= 6 exhaustive and n <= 8 sampled");
  }
  if (p.state_n_max > 8 || p.sequence_n_max > 6) throw DomainError("sequence and state ranges are limited to n <= 6 and n <= 8");
  p.seed = o.seed;
  const auto r = oracle::check_lemma(*id, p);
  if (o.format == Format::Json) {
    std::cout << oracle::to_json(r).dump() << "\n";
  } else {
    std::cout << oracle::to_string(r.lemma) << ": " << r.instances_checked << " instances, " << r.violation_count
              << " violations";
    if (r.min_slack) std::cout << ", min slack " << *r.min_slack;
    std::cout << "\n";
    for (const auto& v : r.violations) {
      std::cout << "  n=" << v.observed_n << " < " << v.expected_bound << "  " << io::dump(v.instance) << "\n";
    }
  }
  return r.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial gossip: optimal call counts, schedules and checks"};
  app.require_subcommand(1);
  Options opts;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--seed", opts.seed, "Seed for sampled enumerations");
  app.add_option("--budget-secs", opts.budget_secs, "Oracle time budget in seconds");

  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t i = 0;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;

  auto* pvalue = app.add_subcommand("pvalue", "Minimum calls P(n,k) with its regime");
  pvalue->add_option("n", n)->required();
  pvalue->add_option("k", k)->required();

  auto* table = app.add_subcommand("table", "P(n,k) for a range of n");
  table->add_option("k", k)->required();
  table->add_option("n_min", n_min)->required();
  table->add_option("n_max", n_max)->required();

  std::string method;
  std::optional<std::int64_t> blocks;
  std::string out_path;
  auto* synth = app.add_subcommand("synth", "Build an optimal schedule");
  synth->add_option("method", method, "doubling | tree | multiblock")->required();
  synth->add_option("n", n)->required();
  synth->add_option("k", k)->required();
  synth->add_option("i", i)->required();
  synth->add_option("--blocks", blocks, "Block count for multiblock (default: largest feasible)");
  synth->add_option("--out", out_path, "Write to a file instead of stdout");

  std::string path;
  std::size_t level = 0;
  auto* verify = app.add_subcommand("verify", "Simulate a schedule file and check k-informing");
  verify->add_option("file", path)->required();
  verify->add_option("k", level)->required();

  std::size_t on = 0;
  std::size_t ok = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact minimum calls by exhaustive search");
  oracle_cmd->add_option("n", on)->required();
  oracle_cmd->add_option("k", ok)->required();

  std::string lemma;
  oracle::LemmaParams lp;
  auto* check = app.add_subcommand("check-lemma", "Check a lower bound over generated schemes");
  check->add_option("lemma", lemma, "L1a L1b L1c L2 L3 L4a L4b L5a L5b L6s1")->required();
  check->add_option("--n-max-exhaustive", lp.n_max_exhaustive);
  check->add_option("--n-max-sampled", lp.n_max_sampled);
  check->add_option("--samples", lp.samples);
  check->add_option("--max-prelim", lp.max_prelim);
  check->add_option("--max-total-calls", lp.max_total_calls);
  check->add_option("--sequence-n-max", lp.sequence_n_max);
  check->add_option("--sequence-length-max", lp.sequence_length_max);
  check->add_option("--state-n-max", lp.state_n_max);
  check->add_option("--bound-offset", lp.bound_offset, "Added to every bound; 1 is the negative control");
  check->add_flag("!--no-witnesses", lp.include_witnesses, "Skip hand-built witness instances");

  for (auto* sub : {pvalue, table, synth, verify, oracle_cmd, check}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }
  opts.format = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;

  try {
    if (*pvalue) return cmd_pvalue(opts, n, k);
    if (*table) return cmd_table(opts, k, n_min, n_max);
    if (*synth) return cmd_synth(opts, method, n, k, i, blocks, out_path);
    if (*verify) return cmd_verify(opts, path, level);
    if (*oracle_cmd) return cmd_oracle(opts, on, ok);
    if (*check) return cmd_check_lemma(opts, lemma, lp);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
