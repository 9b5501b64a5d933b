#include "flood/instances.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "flood/mpq.hpp"
#include "flood/split.hpp"

namespace flood {

using json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& field, const std::string& message, int line)
    : InputError((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                 (field.empty() ? message : field + ": " + message)),
      field_(field),
      line_(line) {}

ColoredGraph InstanceDocument::graph() const { return ColoredGraph(k, colors, edges); }

namespace {

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

}  // namespace

void validate(const InstanceDocument& doc) {
  const int n = doc.vertex_count();
  if (doc.k < 1) throw ParseError("k", "must be at least 1");
  if (n == 0) throw ParseError("colors", "needs at least one vertex");
  for (std::size_t i = 0; i < doc.colors.size(); ++i) {
    if (doc.colors[i] < 1 || doc.colors[i] > doc.k) {
      throw ParseError(at("colors", i), "color " + std::to_string(doc.colors[i]) + " outside 1.." +
                                            std::to_string(doc.k));
    }
  }
  std::set<Edge> seen;
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    auto [u, v] = doc.edges[i];
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(at("edges", i), "vertex id out of range");
    if (u == v) throw ParseError(at("edges", i), "self-loop");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) throw ParseError(at("edges", i), "repeated edge");
  }
  if (doc.variant.is_fixed()) {
    if (!doc.variant.pivot) throw ParseError("pivot", "fixed variant requires a pivot");
    if (*doc.variant.pivot < 0 || *doc.variant.pivot >= n) throw ParseError("pivot", "vertex id out of range");
  } else if (doc.variant.pivot) {
    throw ParseError("pivot", "free variant must not name a pivot");
  }
  if (!is_connected(make_adjacency(n, doc.edges))) throw ParseError("edges", "graph is disconnected");
  if (doc.intervals) {
    const auto& iv = *doc.intervals;
    if (static_cast<int>(iv.size()) != n) {
      throw ParseError("intervals", "expected " + std::to_string(n) + " intervals, got " +
                                        std::to_string(iv.size()));
    }
    for (std::size_t i = 0; i < iv.size(); ++i) {
      if (iv[i].first > iv[i].second) throw ParseError(at("intervals", i), "left endpoint exceeds right");
    }
    std::set<Edge> meets;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second) meets.emplace(u, v);
      }
    }
    if (meets != seen) {
      std::vector<Edge> diff;
      std::set_symmetric_difference(meets.begin(), meets.end(), seen.begin(), seen.end(),
                                    std::back_inserter(diff));
      auto [u, v] = diff.front();
      throw ParseError("intervals", "intersection graph differs from edges at {" + std::to_string(u) +
                                        "," + std::to_string(v) + "}");
    }
  }
  if (!doc.meta.empty()) {
    json m;
    try {
      m = json::parse(doc.meta);
    } catch (const json::parse_error& e) {
      throw ParseError("meta", e.what());
    }
    if (!m.is_object()) throw ParseError("meta", "must be an object");
  }
}

namespace {

int line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError(field, "expected an integer");
  auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ParseError(field, "integer out of range");
  }
  return static_cast<int>(v);
}

std::vector<std::pair<int, int>> as_pairs(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field, "expected an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != 2) throw ParseError(at(field, i), "expected a pair");
    out.emplace_back(as_int(j[i][0], at(field, i)), as_int(j[i][1], at(field, i)));
  }
  return out;
}

json parse_object(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("", e.what(), line_of(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!j.is_object()) throw ParseError("", "document must be a JSON object");
  return j;
}

}  // namespace

InstanceDocument parse_instance(std::string_view text) {
  json j = parse_object(text);
  static const std::set<std::string> known = {"variant", "pivot", "k", "colors", "edges", "intervals", "meta"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw ParseError(key, "unknown field");
  }
  for (const char* required : {"k", "colors", "edges"}) {
    if (!j.contains(required)) throw ParseError(required, "missing");
  }
  InstanceDocument doc;
  if (j.contains("variant")) {
    const json& v = j["variant"];
    if (v == "free") {
      doc.variant.mode = Variant::Mode::free;
    } else if (v == "fixed") {
      doc.variant.mode = Variant::Mode::fixed;
    } else {
      throw ParseError("variant", "expected \"free\" or \"fixed\"");
    }
  }
  if (j.contains("pivot") && !j["pivot"].is_null()) doc.variant.pivot = as_int(j["pivot"], "pivot");
  doc.k = as_int(j["k"], "k");
  if (!j["colors"].is_array()) throw ParseError("colors", "expected an array");
  for (std::size_t i = 0; i < j["colors"].size(); ++i) doc.colors.push_back(as_int(j["colors"][i], at("colors", i)));
  doc.edges = as_pairs(j["edges"], "edges");
  if (j.contains("intervals") && !j["intervals"].is_null()) doc.intervals = as_pairs(j["intervals"], "intervals");
  if (j.contains("meta") && !j["meta"].is_null()) {
    if (!j["meta"].is_object()) throw ParseError("meta", "must be an object");
    doc.meta = j["meta"].dump();
  }
  validate(doc);
  return doc;
}

namespace {

void emit_pairs(std::string& out, const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) {
    out += "[]";
    return;
  }
  out += "[\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out += "    [" + std::to_string(pairs[i].first) + ", " + std::to_string(pairs[i].second) + "]";
    out += i + 1 < pairs.size() ? ",\n" : "\n";
  }
  out += "  ]";
}

}  // namespace

std::string emit_instance(const InstanceDocument& doc) {
  std::string out = "{\n";
  out += "  \"variant\": \"" + std::string(to_string(doc.variant.mode)) + "\",\n";
  if (doc.variant.pivot) out += "  \"pivot\": " + std::to_string(*doc.variant.pivot) + ",\n";
  out += "  \"k\": " + std::to_string(doc.k) + ",\n";
  out += "  \"colors\": [";
  for (std::size_t i = 0; i < doc.colors.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(doc.colors[i]);
  }
  out += "],\n  \"edges\": ";
  emit_pairs(out, doc.edges);
  if (doc.intervals) {
    out += ",\n  \"intervals\": ";
    emit_pairs(out, *doc.intervals);
  }
  if (!doc.meta.empty()) {
    std::string meta = json::parse(doc.meta).dump(2);
    std::string indented;
    for (char c : meta) {
      indented += c;
      if (c == '\n') indented += "  ";
    }
    out += ",\n  \"meta\": " + indented;
  }
  out += "\n}\n";
  return out;
}

InstanceDocument to_document(const ColoredGraph& g, const Variant& variant) {
  InstanceDocument doc;
  doc.variant = variant;
  doc.k = g.k();
  doc.colors = g.colors();
  doc.edges = g.edges();
  return doc;
}

InstanceDocument to_document(const IntervalRepresentation& rep) {
  InstanceDocument doc;
  doc.k = rep.k;
  doc.colors = rep.colors;
  doc.edges = rep.edges();
  doc.intervals = rep.intervals;
  return doc;
}

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::path:
      return "path";
    case GeneratorKind::caterpillar:
      return "caterpillar";
    case GeneratorKind::proper_interval:
      return "proper_interval";
    case GeneratorKind::interval:
      return "interval";
    case GeneratorKind::split:
      return "split";
  }
  return "unknown";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  for (auto kind : {GeneratorKind::path, GeneratorKind::caterpillar, GeneratorKind::proper_interval,
                    GeneratorKind::interval, GeneratorKind::split}) {
    if (name == to_string(kind)) return kind;
  }
  throw InputError("unknown generator kind '" + std::string(name) +
                   "' (path, caterpillar, proper_interval, interval, split)");
}

namespace {

// Unbiased draw in [0, bound) from raw engine output; std distributions are
// not specified bit-exactly across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  int below(int bound) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t threshold = (0 - b) % b;
    while (true) {
      std::uint64_t r = rng_();
      if (r >= threshold) return static_cast<int>(r % b);
    }
  }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<Color> draw_colors(Draw& d, int n, int k) {
  std::vector<Color> colors(n);
  for (auto& c : colors) c = d.between(1, k);
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  d.shuffle(ids);
  for (int c = 1; c <= k; ++c) colors[ids[c - 1]] = c;
  return colors;
}

}  // namespace

InstanceDocument gen_random(GeneratorKind kind, int n, int k, std::uint64_t seed) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (k < 1) throw DomainError("k must be at least 1");
  if (k > n) throw DomainError("k = " + std::to_string(k) + " colors cannot all occur on n = " + std::to_string(n) + " vertices");
  Draw d(seed);
  InstanceDocument doc;
  doc.k = k;
  switch (kind) {
    case GeneratorKind::path:
      for (int i = 0; i + 1 < n; ++i) doc.edges.emplace_back(i, i + 1);
      break;
    case GeneratorKind::caterpillar: {
      const int spine = d.between(1, n);
      for (int i = 0; i + 1 < spine; ++i) doc.edges.emplace_back(i, i + 1);
      for (int x = spine; x < n; ++x) doc.edges.emplace_back(d.below(spine), x);
      break;
    }
    case GeneratorKind::proper_interval: {
      int prev = 0;
      for (int i = 0; i + 1 < n; ++i) {
        const int lo = std::max(prev, i + 1);
        const int reach = std::min(n - 1, lo + d.below(4));
        for (int j = i + 1; j <= reach; ++j) doc.edges.emplace_back(i, j);
        prev = reach;
      }
      break;
    }
    case GeneratorKind::interval: {
      // Each new interval starts inside the union so far, keeping it connected.
      std::vector<std::pair<int, int>> iv(n);
      const int max_len = std::max(2, n / 2);
      iv[0] = {0, d.below(max_len + 1)};
      int reach = iv[0].second;
      for (int i = 1; i < n; ++i) {
        const int l = d.between(iv[i - 1].first, reach);
        iv[i] = {l, l + d.below(max_len + 1)};
        reach = std::max(reach, iv[i].second);
      }
      d.shuffle(iv);
      IntervalRepresentation rep{k, iv, std::vector<Color>(n, 1)};
      doc.edges = rep.edges();
      doc.intervals = iv;
      break;
    }
    case GeneratorKind::split: {
      std::vector<int> ids(n);
      for (int i = 0; i < n; ++i) ids[i] = i;
      d.shuffle(ids);
      const int q = d.between(1, n);
      for (int a = 0; a < q; ++a) {
        for (int b = a + 1; b < q; ++b) doc.edges.emplace_back(std::min(ids[a], ids[b]), std::max(ids[a], ids[b]));
      }
      for (int x = q; x < n; ++x) {
        std::vector<int> nb;
        while (nb.empty()) {
          for (int a = 0; a < q; ++a) {
            if (d.below(2)) nb.push_back(ids[a]);
          }
        }
        for (int u : nb) doc.edges.emplace_back(std::min(u, ids[x]), std::max(u, ids[x]));
      }
      std::sort(doc.edges.begin(), doc.edges.end());
      break;
    }
  }
  doc.colors = draw_colors(d, n, k);
  if (kind == GeneratorKind::proper_interval) {
    doc.intervals = build_representation(doc.graph()).intervals;
  }

  json meta;
  meta["generator"] = to_string(kind);
  meta["n"] = n;
  meta["k"] = k;
  meta["seed"] = seed;
  meta["prng"] = "mt19937_64";
  doc.meta = meta.dump();
  validate(doc);

  const AdjacencyList adj = make_adjacency(n, doc.edges);
  bool ok = true;
  switch (kind) {
    case GeneratorKind::path:
    case GeneratorKind::caterpillar:
      ok = static_cast<int>(doc.edges.size()) == n - 1 && is_interval(adj);
      break;
    case GeneratorKind::proper_interval:
      ok = is_proper_interval(adj);
      break;
    case GeneratorKind::interval:
      ok = is_interval(adj);
      break;
    case GeneratorKind::split:
      ok = is_split(adj);
      break;
  }
  if (!ok) throw std::logic_error(std::string("generator produced a graph outside class ") + to_string(kind));
  return doc;
}

std::string certificate_json(const VcInstance& source, const ReductionCertificate& cert,
                             std::string_view reduction) {
  json j;
  j["reduction"] = std::string(reduction);
  j["source"]["n"] = source.n;
  j["source"]["edges"] = json::array();
  for (const auto& [u, v] : source.edges) j["source"]["edges"].push_back({u, v});
  j["offset"] = cert.offset;
  j["edge_order"] = json::array();
  for (const auto& [u, v] : cert.edge_order) j["edge_order"].push_back({u, v});
  j["color_legend"] = json::object();
  for (const auto& [c, role] : cert.color_legend) j["color_legend"][std::to_string(c)] = role;
  j["vertex_legend"] = cert.vertex_legend;
  return j.dump();
}

VcInstance parse_vc(std::string_view text) {
  json j = parse_object(text);
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "edges" && key != "meta") throw ParseError(key, "unknown field");
  }
  if (!j.contains("n")) throw ParseError("n", "missing");
  if (!j.contains("edges")) throw ParseError("edges", "missing");
  VcInstance vc{as_int(j["n"], "n"), as_pairs(j["edges"], "edges")};
  if (vc.n < 1) throw ParseError("n", "must be at least 1");
  try {
    vc.validate();
  } catch (const InputError& e) {
    throw ParseError("edges", e.what());
  }
  return vc;
}

}  // namespace flood
