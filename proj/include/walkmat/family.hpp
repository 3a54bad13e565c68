#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "walkmat/bigint.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/report.hpp"

namespace walkmat {

/// Exact membership certificate for F_n: n even, |det A| = 1 and
/// |det W| = 2^{n/2}. Such graphs are known to be determined by their
/// generalized spectrum; that consequence is not checked here.
struct FMembership {
  std::string graph6;
  std::size_t n = 0;
  BigInt det_a;
  BigInt det_w;
  bool member = false;
};

FMembership f_member(const Graph& g);

std::string to_json_line(const FMembership& f);
FMembership membership_from_json(const std::string& line);

/// One rooted-product step (m, ell) of a family chain; ell is mirrored into
/// the lower half of the path and gcd(ell, m+1) = 1 is enforced.
class FamilyStep {
 public:
  FamilyStep(int m, int ell);
  int m() const noexcept { return m_; }
  int ell() const noexcept { return ell_; }

 private:
  int m_;
  int ell_;
};

/// Parses "m:ell,m:ell,...".
std::vector<FamilyStep> parse_steps(const std::string& text);

/// det A(G o P_m^(ell)) = +-1 whenever det A(G) = +-1 and gcd(ell, m+1) = 1.
/// Skips when a hypothesis fails. Accepts any 1 <= ell <= m.
VerificationReport verify_detA_closure(const Graph& g, int m, int ell);

/// A level of a family chain: the graph after `steps_applied` products.
struct FamilyLevel {
  Graph graph;
  FMembership certificate;
};

struct FamilyChain {
  std::vector<FamilyLevel> levels;  ///< levels[0] is the seed
  bool budget_exhausted = false;    ///< stopped before a product larger than the budget
};

class SeedNotInFamily : public std::runtime_error {
 public:
  explicit SeedNotInFamily(FMembership cert)
      : std::runtime_error("seed graph is not in F: detA=" + to_decimal(cert.det_a) + " detW=" + to_decimal(cert.det_w)),
        certificate(std::move(cert)) {}
  FMembership certificate;
};

/// A product fell out of F, contradicting closure under rooted products.
class ClosureViolation : public std::runtime_error {
 public:
  ClosureViolation(std::size_t step_index, FMembership cert)
      : std::runtime_error("closure violated at step " + std::to_string(step_index + 1) +
                           ": detA=" + to_decimal(cert.det_a) + " detW=" + to_decimal(cert.det_w)),
        step_index(step_index),
        certificate(std::move(cert)) {}
  std::size_t step_index;
  FMembership certificate;
};

inline constexpr std::size_t kDefaultVertexBudget = 200;

/// Applies the steps in order, recomputing membership from scratch at each
/// level. Stops (budget_exhausted) before building a graph with more than
/// `vertex_budget` vertices.
FamilyChain build_family(const Graph& seed, const std::vector<FamilyStep>& steps,
                         std::size_t vertex_budget = kDefaultVertexBudget);

/// Members of F among all labeled graphs on n <= 6 vertices, in enumeration order.
std::vector<FMembership> search_f(std::size_t n, unsigned workers = 1);

struct StreamSearchResult {
  std::vector<FMembership> members;
  std::vector<std::string> errors;  ///< "line N: message" for unparseable lines
};

/// Members of F among graph6 lines of a stream; bad lines are reported and skipped.
StreamSearchResult search_f(std::istream& graph6_lines);

}  // namespace walkmat
