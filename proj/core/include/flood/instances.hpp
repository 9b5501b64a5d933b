#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flood/errors.hpp"
#include "flood/game.hpp"
#include "flood/intervaldp.hpp"
#include "flood/reductions.hpp"

namespace flood {

/// One instance file (.flood.json). Vertices are 0-based.
struct InstanceDocument {
  Variant variant;
  int k = 1;
  std::vector<Color> colors;
  std::vector<Edge> edges;
  std::optional<std::vector<std::pair<int, int>>> intervals;
  /// Compact JSON object text, empty when the document has no meta.
  std::string meta;

  int vertex_count() const { return static_cast<int>(colors.size()); }
  ColoredGraph graph() const;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

/// Schema or consistency violation. field() names the offending member
/// ("colors[3]", "edges", ...); line() is set for JSON syntax errors.
class ParseError : public InputError {
 public:
  ParseError(const std::string& field, const std::string& message, int line = 0);
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

/// Throws ParseError on the first invariant violation.
void validate(const InstanceDocument& doc);

InstanceDocument parse_instance(std::string_view text);
/// Keys in the order variant, pivot, k, colors, edges, intervals, meta with
/// two-space indentation; pivot, intervals and meta only when present.
std::string emit_instance(const InstanceDocument& doc);

InstanceDocument to_document(const ColoredGraph& g, const Variant& variant = {});
InstanceDocument to_document(const IntervalRepresentation& rep);

enum class GeneratorKind { path, caterpillar, proper_interval, interval, split };
const char* to_string(GeneratorKind kind);
/// Throws InputError for an unknown name.
GeneratorKind parse_generator_kind(std::string_view name);

/// Seeded random connected instance of the requested class. Every color in
/// 1..k occurs at least once; k > n is a DomainError. The generator name,
/// parameters and PRNG (mt19937_64) are recorded in meta.
InstanceDocument gen_random(GeneratorKind kind, int n, int k, std::uint64_t seed);

/// Source, gadget order and legends as a JSON object text.
std::string certificate_json(const VcInstance& source, const ReductionCertificate& cert,
                             std::string_view reduction);

/// Vertex Cover source files: {"n": 3, "edges": [[0, 1], [1, 2]]}.
VcInstance parse_vc(std::string_view text);

}  // namespace flood
