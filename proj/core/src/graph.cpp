#include "dynmwm/graph.hpp"

#include <cmath>
#include <sstream>

namespace dynmwm {

std::ostream& operator<<(std::ostream& os, const EdgeKey& e) {
  return os << '(' << e.lo << ',' << e.hi << ')';
}

const char* to_string(GraphErrc code) {
  switch (code) {
    case GraphErrc::kSelfLoop: return "self-loop";
    case GraphErrc::kDuplicateEdge: return "duplicate edge";
    case GraphErrc::kUnknownEdge: return "unknown edge";
    case GraphErrc::kInvalidWeight: return "invalid weight";
    case GraphErrc::kVertexOutOfRange: return "vertex out of range";
  }
  return "graph error";
}

void validate_weight(Weight w) {
  if (!std::isfinite(w) || !(w > 0.0)) {
    std::ostringstream os;
    os << "invalid weight " << w << ": weights must be positive and finite";
    throw GraphError(GraphErrc::kInvalidWeight, os.str());
  }
}

}  // namespace dynmwm
