#include <fstream>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "walkmat/family.hpp"
#include "walkmat/linalg.hpp"

using namespace walkmat;

namespace {

const Graph& seed() {
  static const Graph g = graph6_decode("E\\Q?");
  return g;
}

std::vector<std::string> golden_lines() {
  std::ifstream in(std::string(WALKMAT_GOLDEN_DIR) + "/f6_members.jsonl");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("membership certificate") {
  const FMembership f = f_member(seed());
  CHECK(f.member);
  CHECK(f.n == 6);
  CHECK(f.det_a == -1);
  CHECK(f.det_w == -8);
  CHECK(to_json_line(f) == R"({"graph6":"E\\Q?","n":6,"detA":"-1","detW":"-8","member":true})");

  const FMembership back = membership_from_json(to_json_line(f));
  CHECK(back.graph6 == f.graph6);
  CHECK(back.det_w == f.det_w);

  CHECK_FALSE(f_member(path_graph(2)).member);  // det W = 0
  CHECK_FALSE(f_member(path_graph(3)).member);  // odd order
  CHECK_FALSE(f_member(graph6_decode("C~")).member);
}

TEST_CASE("family steps") {
  CHECK(FamilyStep(6, 5).ell() == 2);
  CHECK_THROWS_AS(FamilyStep(3, 2), std::invalid_argument);  // gcd(2, 4) = 2
  CHECK_THROWS_AS(FamilyStep(1, 1), std::invalid_argument);
  const auto steps = parse_steps("2:1,3:1,4:2");
  REQUIRE(steps.size() == 3);
  CHECK(steps[2].m() == 4);
  CHECK(steps[2].ell() == 2);
  CHECK_THROWS_AS(parse_steps(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_steps("3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_steps("3:1x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_steps("3:2"), std::invalid_argument);
}

TEST_CASE("det A stays a unit under rooted products") {
  for (int m = 2; m <= 6; ++m)
    for (int ell = 1; ell <= m; ++ell) {
      const auto r = verify_detA_closure(seed(), m, ell);
      CHECK_FALSE(r.failed());
      CHECK(r.passed() == (std::gcd(RootedProductSpec(m, ell).ell(), m + 1) == 1));
    }
  CHECK(verify_detA_closure(path_graph(3), 3, 1).status == Status::skip);  // det A(P_3) = 0
}

TEST_CASE("family chain from the smallest member") {
  const FamilyChain chain = build_family(seed(), parse_steps("3:1,4:2"));
  REQUIRE(chain.levels.size() == 3);
  CHECK_FALSE(chain.budget_exhausted);
  CHECK(chain.levels[1].graph.order() == 18);
  const auto& top = chain.levels[2];
  CHECK(top.graph.order() == 72);
  CHECK(top.certificate.member);
  CHECK(abs(top.certificate.det_w) == power_of_two(36));
  CHECK(abs(top.certificate.det_a) == 1);
}

TEST_CASE("family chain budget and bad seeds") {
  const FamilyChain chain = build_family(seed(), parse_steps("3:1,4:2"), 50);
  CHECK(chain.budget_exhausted);
  CHECK(chain.levels.size() == 2);
  CHECK_THROWS_AS(build_family(path_graph(4), parse_steps("2:1")), SeedNotInFamily);
  try {
    build_family(graph6_decode("C~"), parse_steps("2:1"));
  } catch (const SeedNotInFamily& e) {
    CHECK(e.certificate.det_a == -3);
  }
}

TEST_CASE("exhaustive search on small orders") {
  CHECK(search_f(2).empty());
  CHECK(search_f(3).empty());
  CHECK(search_f(4).empty());
}

TEST_CASE("exhaustive search on 6 vertices matches the golden file") {
  const auto lines = golden_lines();
  REQUIRE(lines.size() == 3600);
  const auto found = search_f(6, 4);
  REQUIRE(found.size() == lines.size());
  for (std::size_t i = 0; i < found.size(); ++i) CHECK(to_json_line(found[i]) == lines[i]);
}

TEST_CASE("search over a graph6 stream") {
  std::istringstream in("E\\Q?\nC~\n\nnot graph6!\nE\\Q?\n");
  const auto result = search_f(in);
  CHECK(result.members.size() == 2);
  REQUIRE(result.errors.size() == 1);
  CHECK(result.errors[0].rfind("line 4:", 0) == 0);
}

TEST_CASE("closure spot values") {
  CHECK(verify_detA_closure(path_graph(2), 4, 2).passed());
  CHECK(verify_detA_closure(path_graph(2), 3, 1).passed());
  const FamilyChain one = build_family(seed(), parse_steps("2:1"));
  REQUIRE(one.levels.size() == 2);
  CHECK(one.levels[1].graph.order() == 12);
  CHECK(one.levels[1].certificate.member);
  for (std::size_t n = 1; n <= 5; n += 2) CHECK(search_f(n).empty());
}
