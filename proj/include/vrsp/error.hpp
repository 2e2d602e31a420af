#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vrsp {

enum class ErrorCode {
  invalid_graph,
  invalid_label,
  unknown_vertex,
  empty_set,
  id_collision,
  cycle_created,
  empty_factor,
  invalid_family,
  size_limit_exceeded,
  not_connected,
  degenerate_split,
  label_budget_exceeded,
  parse_error,
  schema_error,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type. `details` carries
// per-violation diagnostics or a witness (e.g. the vertices of a cycle).
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::string> details = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

private:
  ErrorCode code_;
  std::vector<std::string> details_;
};

} // namespace vrsp
