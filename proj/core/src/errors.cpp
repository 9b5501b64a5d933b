#include "flood/errors.hpp"

namespace flood {

const char* to_string(ForbiddenStructure::Kind kind) {
  switch (kind) {
    case ForbiddenStructure::Kind::chordless_cycle:
      return "chordless_cycle";
    case ForbiddenStructure::Kind::asteroidal_triple:
      return "asteroidal_triple";
    case ForbiddenStructure::Kind::claw:
      return "claw";
    case ForbiddenStructure::Kind::not_split:
      return "not_split";
  }
  return "unknown";
}

std::string ForbiddenStructure::describe() const {
  std::string out = to_string(kind);
  out += " [";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(vertices[i]);
  }
  out += "]";
  return out;
}

}  // namespace flood
