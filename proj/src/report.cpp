#include "walkmat/report.hpp"

#include "json.hpp"

namespace walkmat {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skip:
      return "skip";
  }
  return "unknown";
}

std::string to_json_line(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["graph6"] = r.graph6.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.graph6);
  j["m"] = r.m ? nlohmann::ordered_json(*r.m) : nlohmann::ordered_json(nullptr);
  j["ell"] = r.ell ? nlohmann::ordered_json(*r.ell) : nlohmann::ordered_json(nullptr);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["sign"] = r.sign ? nlohmann::ordered_json(*r.sign) : nlohmann::ordered_json(nullptr);
  j["status"] = std::string(to_string(r.status));
  j["detail"] = r.detail;
  return j.dump();
}

std::string tsv_header() { return "check\tgraph6\tm\tell\tlhs\trhs\tsign\tstatus\tdetail"; }

std::string to_tsv_line(const VerificationReport& r) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  std::string line = r.check;
  for (const std::string& field : {r.graph6.empty() ? std::string("-") : r.graph6, opt(r.m), opt(r.ell), r.lhs, r.rhs,
                                   opt(r.sign), std::string(to_string(r.status)), r.detail}) {
    line += '\t';
    line += field;
  }
  return line;
}

}  // namespace walkmat
