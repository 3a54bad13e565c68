#include "walkmat/family.hpp"

#include <istream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "walkmat/linalg.hpp"
#include "walkmat/parallel.hpp"

namespace walkmat {

FMembership f_member(const Graph& g) {
  FMembership f;
  f.graph6 = graph6_encode(g);
  f.n = g.order();
  f.det_a = adjacency_det(g);
  f.det_w = walk_det(g);
  f.member = f.n % 2 == 0 && abs(f.det_a) == 1 && abs(f.det_w) == power_of_two(f.n / 2);
  return f;
}

std::string to_json_line(const FMembership& f) {
  nlohmann::ordered_json j;
  j["graph6"] = f.graph6;
  j["n"] = f.n;
  j["detA"] = to_decimal(f.det_a);
  j["detW"] = to_decimal(f.det_w);
  j["member"] = f.member;
  return j.dump();
}

FMembership membership_from_json(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  FMembership f;
  f.graph6 = j.at("graph6").get<std::string>();
  f.n = j.at("n").get<std::size_t>();
  f.det_a = from_decimal(j.at("detA").get<std::string>());
  f.det_w = from_decimal(j.at("detW").get<std::string>());
  f.member = j.at("member").get<bool>();
  return f;
}

FamilyStep::FamilyStep(int m, int ell) : m_(m), ell_(ell) {
  if (m < 2) throw std::invalid_argument("family step: m must be >= 2");
  const RootedProductSpec spec(m, ell);
  ell_ = spec.ell();
  if (std::gcd(ell_, m_ + 1) != 1)
    throw std::invalid_argument("family step (" + std::to_string(m) + "," + std::to_string(ell) +
                                "): gcd(ell, m+1) = " + std::to_string(std::gcd(ell_, m_ + 1)) + " != 1");
}

std::vector<FamilyStep> parse_steps(const std::string& text) {
  std::vector<FamilyStep> steps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("step '" + item + "' is not of the form m:ell");
    std::size_t used_m = 0;
    std::size_t used_l = 0;
    const std::string ms = item.substr(0, colon);
    const std::string ls = item.substr(colon + 1);
    int m = 0;
    int ell = 0;
    try {
      m = std::stoi(ms, &used_m);
      ell = std::stoi(ls, &used_l);
    } catch (const std::exception&) {
      throw std::invalid_argument("step '" + item + "' is not of the form m:ell");
    }
    if (used_m != ms.size() || used_l != ls.size())
      throw std::invalid_argument("step '" + item + "' is not of the form m:ell");
    steps.emplace_back(m, ell);
  }
  if (steps.empty()) throw std::invalid_argument("no steps given");
  return steps;
}

VerificationReport verify_detA_closure(const Graph& g, int m, int ell) {
  if (m < 1) throw std::invalid_argument("verify_detA_closure: m must be >= 1");
  const RootedProductSpec spec(m, ell);
  VerificationReport r;
  r.check = "detA_closure";
  r.graph6 = graph6_encode(g);
  r.m = spec.m();
  r.ell = spec.ell();
  const BigInt det_g = adjacency_det(g);
  if (abs(det_g) != 1) {
    r.detail = "hypothesis unmet: det A(G) = " + to_decimal(det_g);
    return r;
  }
  if (std::gcd(spec.ell(), spec.m() + 1) != 1) {
    r.detail = "hypothesis unmet: gcd(ell, m+1) != 1";
    return r;
  }
  const BigInt det_p = adjacency_det(rooted_product_path(g, spec));
  r.lhs = to_decimal(det_p);
  r.rhs = "1";
  r.sign = sgn(det_p) == 0 ? std::nullopt : std::optional<int>(sgn(det_p));
  r.status = abs(det_p) == 1 ? Status::pass : Status::fail;
  r.detail = "det A(G) = " + to_decimal(det_g);
  return r;
}

FamilyChain build_family(const Graph& seed, const std::vector<FamilyStep>& steps, std::size_t vertex_budget) {
  FamilyChain chain;
  FMembership cert = f_member(seed);
  if (!cert.member) throw SeedNotInFamily(std::move(cert));
  if (seed.order() > vertex_budget) {
    chain.budget_exhausted = true;
    return chain;
  }
  chain.levels.push_back({seed, std::move(cert)});
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const Graph& prev = chain.levels.back().graph;
    const auto next_order = prev.order() * static_cast<std::size_t>(steps[s].m());
    if (next_order > vertex_budget) {
      chain.budget_exhausted = true;
      break;
    }
    Graph next = rooted_product_path(prev, RootedProductSpec(steps[s].m(), steps[s].ell()));
    FMembership next_cert = f_member(next);
    if (!next_cert.member) throw ClosureViolation(s, std::move(next_cert));
    chain.levels.push_back({std::move(next), std::move(next_cert)});
  }
  return chain;
}

std::vector<FMembership> search_f(std::size_t n, unsigned workers) {
  const auto count = labeled_graph_count(n);
  std::vector<FMembership> all(count);
  std::vector<char> hit(count, 0);
  if (n % 2 == 0) {
    parallel_for(count, workers, [&](std::size_t k) {
      const Graph g = labeled_graph(n, k);
      const BigInt det_a = adjacency_det(g);
      if (abs(det_a) != 1) return;
      all[k] = f_member(g);
      hit[k] = all[k].member ? 1 : 0;
    });
  }
  std::vector<FMembership> out;
  for (std::size_t k = 0; k < count; ++k)
    if (hit[k]) out.push_back(std::move(all[k]));
  return out;
}

StreamSearchResult search_f(std::istream& graph6_lines) {
  StreamSearchResult result;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(graph6_lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      FMembership f = f_member(graph6_decode(line));
      if (f.member) result.members.push_back(std::move(f));
    } catch (const std::exception& e) {
      result.errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return result;
}

}  // namespace walkmat
