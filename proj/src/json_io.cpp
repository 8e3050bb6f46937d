#include "cluster_roots/json_io.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "cluster_roots/errors.hpp"

namespace cluster_roots {

namespace {

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidQuiver(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

int as_small_int(const Json& j, const char* what) {
  const std::int64_t v = as_int(j, what);
  if (v < INT32_MIN || v > INT32_MAX) throw InvalidQuiver(std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

ExchangeMatrix parse_quiver(const Json& doc) {
  if (!doc.is_object()) throw InvalidQuiver("quiver document must be an object");
  const bool has_matrix = doc.contains("matrix");
  const bool has_arrows = doc.contains("arrows");
  if (has_matrix == has_arrows)
    throw InvalidQuiver("quiver document needs exactly one of \"matrix\" or {\"n\", \"arrows\"}");

  if (has_matrix) {
    const Json& m = doc["matrix"];
    if (!m.is_array() || m.empty()) throw InvalidQuiver("\"matrix\" must be a non-empty array of rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& r : m) {
      if (!r.is_array() || r.size() != m.size()) throw InvalidQuiver("\"matrix\" must be square");
      std::vector<std::int64_t> row;
      for (const auto& x : r) row.push_back(as_int(x, "matrix entry"));
      rows.push_back(std::move(row));
    }
    return ExchangeMatrix(IntMatrix::from_rows(rows));
  }

  if (!doc.contains("n")) throw InvalidQuiver("arrow-list quiver document needs \"n\"");
  QuiverSpec spec;
  spec.n = as_small_int(doc["n"], "\"n\"");
  const Json& arrows = doc["arrows"];
  if (!arrows.is_array()) throw InvalidQuiver("\"arrows\" must be an array");
  for (const auto& a : arrows) {
    if (!a.is_array() || (a.size() != 2 && a.size() != 3))
      throw InvalidQuiver("each arrow must be [source, target] or [source, target, multiplicity]");
    ArrowGroup g;
    g.source = as_small_int(a[0], "arrow source");
    g.target = as_small_int(a[1], "arrow target");
    g.multiplicity = a.size() == 3 ? as_small_int(a[2], "arrow multiplicity") : 1;
    spec.arrows.push_back(g);
  }
  return from_arrows(spec);
}

ExchangeMatrix parse_quiver_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidQuiver(std::string("malformed quiver document: ") + e.what());
  }
  return parse_quiver(doc);
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' || text[i] == '[' ||
                               text[i] == ']' || text[i] == '(' || text[i] == ')'))
      ++i;
  };
  skip();
  while (i < text.size()) {
    std::int64_t v = 0;
    const char* first = text.data() + i;
    const char* last = text.data() + text.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first)
      throw std::invalid_argument("cannot parse integer list \"" + std::string(text) + "\"");
    i = static_cast<std::size_t>(ptr - text.data());
    out.push_back(v);
    if (i < text.size() && !(std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' || text[i] == ']' || text[i] == ')'))
      throw std::invalid_argument("cannot parse integer list \"" + std::string(text) + "\"");
    skip();
  }
  return out;
}

Json to_json(const IntVector& v) { return Json(v.entries()); }

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_rows()) rows.push_back(r);
  return rows;
}

Json to_json(const ExchangeMatrix& b) { return to_json(b.matrix()); }

Json seed_to_json(const Seed& s) {
  Json j;
  j["word"] = s.word;
  j["b"] = to_json(s.b);
  j["c"] = to_json(s.c);
  j["g"] = to_json(s.g);
  Json cv = Json::array(), gv = Json::array();
  for (std::size_t k = 0; k < s.size(); ++k) {
    cv.push_back(to_json(s.c_vector(k)));
    gv.push_back(to_json(s.g_vector(k)));
  }
  j["c_vectors"] = std::move(cv);
  j["g_vectors"] = std::move(gv);
  return j;
}

Json to_json(const SearchReport& r) {
  Json j;
  Json pos = Json::array(), depths = Json::array();
  for (const auto& [v, d] : r.positive_c_vectors) {
    pos.push_back(to_json(v));
    depths.push_back(d);
  }
  j["positive_count"] = r.positive_c_vectors.size();
  j["positive_c_vectors"] = std::move(pos);
  j["first_depths"] = std::move(depths);
  j["negative_count"] = r.negative_count;
  j["seeds_visited"] = r.seeds_visited;
  j["depth_reached"] = r.depth_reached;
  j["closed"] = r.closed;
  j["stop"] = std::string(to_string(r.stop));
  if (!r.stop_detail.empty()) j["stop_detail"] = r.stop_detail;
  return j;
}

Json to_json(const RepSample& s) {
  Json j;
  j["p"] = s.p;
  j["rng_seed"] = s.rng_seed;
  j["d"] = to_json(s.d);
  Json arrows = Json::array();
  std::size_t next = 0;
  for (const auto& g : s.quiver.arrows)
    for (int m = 0; m < g.multiplicity; ++m) {
      const FpMatrix& a = s.matrices.at(next++);
      Json rows = Json::array();
      for (std::size_t r = 0; r < a.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
        rows.push_back(std::move(row));
      }
      Json arrow;
      arrow["source"] = g.source;
      arrow["target"] = g.target;
      arrow["matrix"] = std::move(rows);
      arrows.push_back(std::move(arrow));
    }
  j["arrows"] = std::move(arrows);
  return j;
}

Json to_json(const SchurVerdict& v, const IntVector& d) {
  Json j;
  j["vector"] = to_json(d);
  j["kind"] = std::string(to_string(v.kind));
  j["certified"] = v.kind == SchurKind::certified;
  j["trials"] = v.trials;
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

Json to_json(const TheoremReport& r) {
  Json j;
  j["quiver"] = r.quiver_id;
  j["depth"] = r.depth;
  j["height"] = r.height;
  j["extended_depth"] = r.extended_depth;
  j["closed"] = r.closed;
  j["search_stop"] = std::string(to_string(r.search_stop));
  j["seeds_visited"] = r.seeds_visited;
  j["c_side_count"] = r.c_side_count;
  j["schur_side_count"] = r.schur_side_count;
  Json cns = Json::array();
  for (const auto& v : r.c_not_schur) {
    Json e;
    e["vector"] = to_json(v.vector);
    e["reason"] = v.reason;
    e["depth"] = v.depth;
    cns.push_back(std::move(e));
  }
  j["c_not_schur"] = std::move(cns);
  Json snc = Json::array();
  for (const auto& m : r.schur_not_c) {
    Json e;
    e["vector"] = to_json(m.vector);
    e["searched_depth"] = m.searched_depth;
    snc.push_back(std::move(e));
  }
  j["schur_not_c"] = std::move(snc);
  Json audit = Json::array();
  for (const auto& v : r.schur_audit) audit.push_back(to_json(v));
  j["schur_audit_likely_not_schur"] = std::move(audit);
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

Json to_json(const AbsenceReport& r) {
  Json j;
  j["vector"] = to_json(r.vector);
  j["depth"] = r.depth;
  j["absent"] = r.absent;
  j["sign_coherent"] = r.sign_coherent;
  j["complete"] = r.complete;
  j["seeds_visited"] = r.seeds_visited;
  j["holds"] = r.holds();
  j["evidence"] = "bounded-depth search, not a proof of absence at all depths";
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array of integers");
  std::vector<std::int64_t> xs;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("vector entries must be integers");
    xs.push_back(x.get<std::int64_t>());
  }
  return IntVector(std::move(xs));
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r).entries());
  return IntMatrix::from_rows(rows);
}

}  // namespace cluster_roots
