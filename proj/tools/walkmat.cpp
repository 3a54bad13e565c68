// walkmat: walk-matrix determinants of rooted path products from the command line.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage, parse or I/O error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "walkmat/family.hpp"
#include "walkmat/linalg.hpp"
#include "walkmat/parallel.hpp"
#include "walkmat/resultant.hpp"
#include "walkmat/spectral.hpp"

using namespace walkmat;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text, const char* what) {
  Range r;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string a = text.substr(0, dots);
      const std::string b = text.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(text);
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(text);
    }
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": expected N or A..B, got '" + text + "'");
  }
  if (r.lo > r.hi) throw UsageError(std::string(what) + ": empty range " + text);
  return r;
}

unsigned default_workers() {
  if (const char* env = std::getenv("WALKMAT_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return static_cast<unsigned>(w);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("WALKMAT_WORKERS must be a positive integer, got '") + env + "'");
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One graph6 string per non-blank line. Parse errors carry the line number.
std::vector<Graph> read_graph6_lines(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<Graph> out;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

/// Where report lines go: stdout or --out.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct GraphInput {
  std::vector<std::string> graph6;
  std::string input;
  std::string edge_list;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--graph,-g", graph6, "graph in graph6 form (repeatable)");
    cmd->add_option("--input,-i", input, "file with one graph6 string per line");
    cmd->add_option("--edge-list", edge_list, "file with 'n' then one 'u v' pair per line (1-based)");
  }
  std::vector<Graph> load() const {
    std::vector<Graph> out;
    for (const auto& g : graph6) out.push_back(graph6_decode(g));
    if (!input.empty())
      for (auto& g : read_graph6_lines(input)) out.push_back(std::move(g));
    if (!edge_list.empty()) out.push_back(edge_list_decode(read_file(edge_list)));
    return out;
  }
};

// walkdet ------------------------------------------------------------------

int run_walkdet(const GraphInput& in, const std::string& format, const std::string& out_path) {
  const auto graphs = in.load();
  if (graphs.empty()) throw UsageError("walkdet: no graph given (use --graph, --input or --edge-list)");
  Sink sink(out_path);
  if (format == "tsv") sink.out() << "graph6\tn\tdetA\tdetW\tv2_detW\n";
  for (const auto& g : graphs) {
    const BigInt det_a = adjacency_det(g);
    const BigInt det_w = walk_det(g);
    const long v2 = two_adic_valuation(det_w);
    if (format == "tsv") {
      sink.out() << graph6_encode(g) << '\t' << g.order() << '\t' << to_decimal(det_a) << '\t' << to_decimal(det_w)
                 << '\t' << (v2 < 0 ? std::string("-") : std::to_string(v2)) << '\n';
    } else {
      nlohmann::ordered_json j;
      j["graph6"] = graph6_encode(g);
      j["n"] = g.order();
      j["detA"] = to_decimal(det_a);
      j["detW"] = to_decimal(det_w);
      j["v2_detW"] = v2 < 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(v2);
      sink.out() << j.dump() << '\n';
    }
  }
  return 0;
}

// verify -------------------------------------------------------------------

struct VerifyConfig {
  GraphInput graphs;
  std::string sweep;
  std::string m_range = "2..6";
  std::string ell_range = "all";
  std::vector<std::string> checks{"main"};
  bool res1 = false;
  bool res2 = false;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
  double tol_resid = 1e-8;
  double tol_rel = 1e-6;
  unsigned workers = 0;
  std::string format = "json";
  std::string out;
  bool sorted = false;
};

// A unit of work: one check on one (graph, m, ell), or a graph-only check.
struct Task {
  std::string check;
  std::size_t graph = 0;
  int m = 0;
  int ell = 0;
};

std::size_t parse_sweep(const std::string& text) {
  const std::string prefix = "n<=";
  if (text.rfind(prefix, 0) != 0) throw UsageError("--sweep: expected n<=K, got '" + text + "'");
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text.substr(prefix.size()), &used);
  } catch (const std::exception&) {
    throw UsageError("--sweep: expected n<=K, got '" + text + "'");
  }
  if (used != text.size() - prefix.size() || k < 1 || k > static_cast<int>(kMaxEnumerationOrder))
    throw UsageError("--sweep: K must be between 1 and " + std::to_string(kMaxEnumerationOrder));
  return static_cast<std::size_t>(k);
}

std::vector<int> ell_values(const std::string& spec, int m) {
  std::vector<int> out;
  if (spec == "all") {
    for (int ell = 1; 2 * ell <= m + 1; ++ell) out.push_back(ell);
    return out;
  }
  const Range r = parse_range(spec, "--ell");
  for (int ell = std::max(1, r.lo); ell <= std::min(m, r.hi); ++ell) out.push_back(ell);
  return out;
}

VerificationReport run_task(const Task& t, const std::vector<Graph>& graphs, const VerifyConfig& cfg) {
  const Graph& g = graphs[t.graph];
  if (t.check == "main") {
    if (g.order() < 2) {
      VerificationReport r;
      r.check = "main";
      r.graph6 = graph6_encode(g);
      r.m = t.m;
      r.ell = t.ell;
      r.detail = "hypothesis unmet: n >= 2 required";
      return r;
    }
    return verify_main(g, t.m, t.ell);
  }
  if (t.check == "charpoly") return verify_charpoly_factorization(g, t.m, t.ell);
  if (t.check == "simple") return verify_simple_spectrum_iff(g, t.m, t.ell);
  if (t.check == "closure") return verify_detA_closure(g, t.m, t.ell);
  if (t.check == "eigen") return numeric_eigenpairs(g, t.m, t.ell, cfg.tol_resid).report;
  if (t.check == "vandermonde") return numeric_fk_vandermonde(g, t.m, t.ell, cfg.tol_rel);
  if (t.check == "walkdet") return numeric_walkdet(g, cfg.tol_rel);
  throw std::logic_error("unknown check " + t.check);
}

int run_verify(VerifyConfig cfg) {
  if (cfg.tol_resid <= 0 || cfg.tol_rel <= 0) throw UsageError("tolerances must be positive");
  if (cfg.workers == 0) cfg.workers = default_workers();
  const Range mr = parse_range(cfg.m_range, "--m");
  if (mr.lo < 2) throw UsageError("--m: m must be >= 2");
  if (cfg.format != "json" && cfg.format != "tsv") throw UsageError("--format must be json or tsv");

  std::vector<VerificationReport> results;
  if (cfg.res2 && mr.hi > 12) throw UsageError("--res2: m is limited to 12");
  if (cfg.res1 || cfg.res2) {
    for (int m = mr.lo; m <= mr.hi; ++m)
      for (int ell = 1; 2 * ell <= m + 1; ++ell) {
        if (cfg.res1) results.push_back(verify_res1(m, ell));
        if (cfg.res2) results.push_back(verify_res2(m, ell));
      }
  }

  std::vector<Graph> graphs = cfg.graphs.load();
  if (!cfg.sweep.empty()) {
    const std::size_t k = parse_sweep(cfg.sweep);
    for (std::size_t n = 1; n <= k; ++n)
      for (auto& g : enumerate_graphs(n)) graphs.push_back(std::move(g));
  }
  if (graphs.empty() && !cfg.res1 && !cfg.res2)
    throw UsageError("verify: nothing to do (give --graph, --input, --sweep, --res1 or --res2)");

  std::vector<std::string> pair_checks;
  bool walkdet = false;
  for (const auto& c : cfg.checks) {
    if (c == "numeric") {
      pair_checks.push_back("eigen");
      pair_checks.push_back("vandermonde");
      walkdet = true;
    } else if (c == "walkdet") {
      walkdet = true;
    } else if (c == "main" || c == "charpoly" || c == "simple" || c == "closure" || c == "eigen" ||
               c == "vandermonde") {
      pair_checks.push_back(c);
    } else {
      throw UsageError("--checks: unknown check '" + c +
                       "' (main, charpoly, simple, closure, eigen, vandermonde, walkdet, numeric)");
    }
  }

  std::vector<Task> tasks;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    if (walkdet) tasks.push_back({"walkdet", gi, 0, 0});
    for (int m = mr.lo; m <= mr.hi; ++m)
      for (int ell : ell_values(cfg.ell_range, m))
        for (const auto& c : pair_checks) tasks.push_back({c, gi, m, ell});
  }
  if (cfg.sample > 0 && cfg.sample < tasks.size()) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::size_t> pick(tasks.size());
    std::iota(pick.begin(), pick.end(), 0);
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(cfg.sample);
    std::sort(pick.begin(), pick.end());
    std::vector<Task> chosen;
    for (auto i : pick) chosen.push_back(tasks[i]);
    tasks = std::move(chosen);
  }

  // Reports are collected per task and written in task order, so the output
  // does not depend on the worker count.
  std::vector<VerificationReport> task_reports(tasks.size());
  parallel_for(tasks.size(), cfg.workers,
               [&](std::size_t i) { task_reports[i] = run_task(tasks[i], graphs, cfg); });
  for (auto& r : task_reports) results.push_back(std::move(r));

  if (cfg.sorted) {
    std::stable_sort(results.begin(), results.end(), [](const VerificationReport& a, const VerificationReport& b) {
      return std::tie(a.check, a.graph6, a.m, a.ell) < std::tie(b.check, b.graph6, b.m, b.ell);
    });
  }

  Sink sink(cfg.out);
  if (cfg.format == "tsv") sink.out() << tsv_header() << '\n';
  std::size_t failed = 0;
  for (const auto& r : results) {
    sink.out() << (cfg.format == "tsv" ? to_tsv_line(r) : to_json_line(r)) << '\n';
    if (r.failed()) ++failed;
  }
  sink.out().flush();
  std::cerr << results.size() << " reports, " << failed << " failed\n";
  return failed == 0 ? 0 : kExitFail;
}

// family -------------------------------------------------------------------

int run_family(const std::string& graph, const std::string& golden, std::size_t index, const std::string& steps_text,
               std::size_t budget, const std::string& out_path) {
  Graph seed = [&] {
    if (!graph.empty()) return graph6_decode(graph);
    if (golden.empty()) throw UsageError("family: give --graph or --golden");
    std::istringstream in(read_file(golden));
    std::size_t k = 0;
    for (std::string line; std::getline(in, line);) {
      if (line.empty()) continue;
      if (k++ == index) return graph6_decode(membership_from_json(line).graph6);
    }
    throw UsageError("family: --index " + std::to_string(index) + " is past the end of " + golden);
  }();
  std::vector<FamilyStep> steps;
  try {
    steps = parse_steps(steps_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--steps: ") + e.what());
  }

  Sink sink(out_path);
  auto emit = [&](std::size_t level, const FMembership& cert) {
    auto j = nlohmann::ordered_json::parse(to_json_line(cert));
    nlohmann::ordered_json line;
    line["level"] = level;
    for (auto it = j.begin(); it != j.end(); ++it) line[it.key()] = it.value();
    sink.out() << line.dump() << '\n';
  };
  try {
    const FamilyChain chain = build_family(seed, steps, budget);
    for (std::size_t i = 0; i < chain.levels.size(); ++i) emit(i, chain.levels[i].certificate);
    if (chain.budget_exhausted)
      std::cerr << "stopped after " << chain.levels.size() << " levels: next product exceeds the budget of " << budget
                << " vertices\n";
    return 0;
  } catch (const SeedNotInFamily& e) {
    std::cerr << "walkmat: " << e.what() << '\n' << to_json_line(e.certificate) << '\n';
    return kExitUsage;
  } catch (const ClosureViolation& e) {
    std::cerr << "walkmat: " << e.what() << '\n';
    emit(e.step_index + 1, e.certificate);
    return kExitFail;
  }
}

// search -------------------------------------------------------------------

int run_search(std::size_t n, const std::string& input, unsigned workers, const std::string& out_path) {
  Sink sink(out_path);
  if (!input.empty()) {
    std::istringstream in(read_file(input));
    const auto result = search_f(in);
    for (const auto& f : result.members) sink.out() << to_json_line(f) << '\n';
    for (const auto& e : result.errors) std::cerr << input << ": " << e << '\n';
    return result.errors.empty() ? 0 : kExitUsage;
  }
  if (n < 1 || n > kMaxEnumerationOrder)
    throw UsageError("search: --n must be between 1 and " + std::to_string(kMaxEnumerationOrder));
  for (const auto& f : search_f(n, workers == 0 ? default_workers() : workers)) sink.out() << to_json_line(f) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact walk-matrix determinants of rooted products with paths"};
  app.require_subcommand(1);

  GraphInput walkdet_in;
  std::string walkdet_format = "json";
  std::string walkdet_out;
  auto* walkdet = app.add_subcommand("walkdet", "print n, det A, det W and the 2-adic valuation of det W");
  walkdet_in.add_to(walkdet);
  walkdet->add_option("--format", walkdet_format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  walkdet->add_option("--out,-o", walkdet_out, "output file (default stdout)");

  VerifyConfig cfg;
  auto* verify = app.add_subcommand("verify", "run exact and numeric checks, one report line per instance");
  cfg.graphs.add_to(verify);
  verify->add_option("--sweep", cfg.sweep, "all labeled graphs with n<=K vertices (K <= 6)");
  verify->add_option("--m", cfg.m_range, "path lengths, N or A..B")->capture_default_str();
  verify->add_option("--ell", cfg.ell_range, "root positions, A..B or all (1..(m+1)/2)")->capture_default_str();
  verify->add_option("--checks", cfg.checks,
                     "comma-separated: main, charpoly, simple, closure, eigen, vandermonde, walkdet, numeric")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_flag("--res1", cfg.res1, "Chebyshev resultant |Res(U_m, U_{l-1}U_{m-l})| for every m in --m");
  verify->add_flag("--res2", cfg.res2, "bivariate Chebyshev resultant for every m in --m (m <= 12)");
  verify->add_option("--sample", cfg.sample, "run a seeded random subset of N instances");
  verify->add_option("--seed", cfg.seed, "seed for --sample")->capture_default_str();
  verify->add_option("--tol-resid", cfg.tol_resid, "eigenvector residual tolerance")->capture_default_str();
  verify->add_option("--tol-rel", cfg.tol_rel, "relative tolerance for numeric determinants")->capture_default_str();
  verify->add_option("--workers,-j", cfg.workers, "worker threads (default $WALKMAT_WORKERS or all cores)");
  verify->add_option("--format", cfg.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  verify->add_option("--out,-o", cfg.out, "output file (default stdout)");
  verify->add_flag("--sorted", cfg.sorted, "order reports by check, graph, m, ell");

  std::string fam_graph;
  std::string fam_golden;
  std::size_t fam_index = 0;
  std::string fam_steps;
  std::size_t fam_budget = kDefaultVertexBudget;
  std::string fam_out;
  auto* family = app.add_subcommand("family", "grow a chain of F members by rooted products");
  family->add_option("--graph,-g", fam_graph, "seed in graph6 form");
  family->add_option("--golden", fam_golden, "membership JSON-lines file to take the seed from");
  family->add_option("--index", fam_index, "line of --golden to use (0-based)")->capture_default_str();
  family->add_option("--steps", fam_steps, "comma-separated m:ell steps, e.g. 2:1,3:1")->required();
  family->add_option("--budget", fam_budget, "largest vertex count to build")->capture_default_str();
  family->add_option("--out,-o", fam_out, "output file (default stdout)");

  std::size_t search_n = 6;
  std::string search_input;
  unsigned search_workers = 0;
  std::string search_out;
  auto* search = app.add_subcommand("search", "list members of F among labeled graphs or graph6 input");
  search->add_option("--n", search_n, "order of the labeled sweep (<= 6)")->capture_default_str();
  search->add_option("--input,-i", search_input, "file with one graph6 string per line");
  search->add_option("--workers,-j", search_workers, "worker threads");
  search->add_option("--out,-o", search_out, "output file (default stdout)");

  std::string prod_graph;
  int prod_m = 2;
  int prod_ell = 1;
  bool prod_edges = false;
  auto* product = app.add_subcommand("product", "print the rooted product of a graph with P_m at vertex ell");
  product->add_option("--graph,-g", prod_graph, "graph in graph6 form")->required();
  product->add_option("--m", prod_m, "path length")->required();
  product->add_option("--ell", prod_ell, "root position on the path (1-based)")->required();
  product->add_flag("--edge-list", prod_edges, "print an edge list instead of graph6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*walkdet) return run_walkdet(walkdet_in, walkdet_format, walkdet_out);
    if (*verify) return run_verify(cfg);
    if (*family) return run_family(fam_graph, fam_golden, fam_index, fam_steps, fam_budget, fam_out);
    if (*search) return run_search(search_n, search_input, search_workers, search_out);
    if (*product) {
      const Graph p = rooted_product_path(graph6_decode(prod_graph), RootedProductSpec(prod_m, prod_ell));
      std::cout << (prod_edges ? edge_list_encode(p) : graph6_encode(p) + "\n");
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "walkmat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "walkmat: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
