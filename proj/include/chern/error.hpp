#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace chern {

enum class Errc {
  division_by_zero,
  ring_mismatch,
  invalid_presentation,
  non_confluent_rules,
  odd_degree_generator,
  missing_top_evaluation,
  degree_mismatch,
  rank_zero,
  inhomogeneous_class,
  not_a_summand,
  not_divisible,
  unknown_symbol,
  incomparable_presentations,
  parse_error,
  usage_error,
  check_failed,
};

const char* errc_name(Errc c);

struct SourceLoc {
  int line = 0;
  int column = 0;
};

// Single exception type; `code` distinguishes the error conditions the
// operations promise to keep apart.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(Errc code, SourceLoc loc, std::string message)
      : std::runtime_error(std::move(message)), code_(code), loc_(loc) {}

  Errc code() const { return code_; }
  const std::optional<SourceLoc>& location() const { return loc_; }

 private:
  Errc code_;
  std::optional<SourceLoc> loc_;
};

}  // namespace chern
