#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace walkmat {

enum class Status { pass, fail, skip };

std::string_view to_string(Status s);

/// Outcome of one identity check. lhs/rhs hold exact decimal integers or
/// polynomial strings; sign is the observed relative sign of the two sides
/// when both are nonzero numbers.
struct VerificationReport {
  std::string check;
  std::string graph6;
  std::optional<int> m;
  std::optional<int> ell;
  std::string lhs;
  std::string rhs;
  std::optional<int> sign;
  Status status = Status::skip;
  std::string detail;

  bool passed() const noexcept { return status == Status::pass; }
  bool failed() const noexcept { return status == Status::fail; }
};

/// One JSON object, no trailing newline. Keys: check, graph6, m, ell, lhs,
/// rhs, sign, status, detail; absent values are null.
std::string to_json_line(const VerificationReport& r);
std::string tsv_header();
std::string to_tsv_line(const VerificationReport& r);

}  // namespace walkmat
