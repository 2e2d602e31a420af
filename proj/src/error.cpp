#include "vrsp/error.hpp"

namespace vrsp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::invalid_graph: return "InvalidGraph";
  case ErrorCode::invalid_label: return "InvalidLabel";
  case ErrorCode::unknown_vertex: return "UnknownVertex";
  case ErrorCode::empty_set: return "EmptySet";
  case ErrorCode::id_collision: return "IdCollision";
  case ErrorCode::cycle_created: return "CycleCreated";
  case ErrorCode::empty_factor: return "EmptyFactor";
  case ErrorCode::invalid_family: return "InvalidFamily";
  case ErrorCode::size_limit_exceeded: return "SizeLimitExceeded";
  case ErrorCode::not_connected: return "NotConnected";
  case ErrorCode::degenerate_split: return "DegenerateSplit";
  case ErrorCode::label_budget_exceeded: return "LabelBudgetExceeded";
  case ErrorCode::parse_error: return "ParseError";
  case ErrorCode::schema_error: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<std::string> details)
    : std::runtime_error(message), code_(code), details_(std::move(details)) {}

} // namespace vrsp
