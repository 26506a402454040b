#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dmm/algebra.hpp"
#include "dmm/enumerate.hpp"
#include "dmm/errors.hpp"
#include "dmm/relevant.hpp"

namespace dmm {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json table_json(BinOpTable const& t) { return t.rows(); }

inline BinOpTable table_from(Json const& j, char const* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw MalformedTable(std::string("missing table '") + key + "'");
  }
  try {
    return BinOpTable::from_rows(j[key].get<std::vector<std::vector<int>>>());
  } catch (nlohmann::json::exception const&) {
    throw MalformedTable(std::string("table '") + key + "' is not a matrix of integers");
  }
}

inline std::vector<Element> neg_from(Json const& j) {
  if (!j.contains("neg") || !j["neg"].is_array()) {
    throw MalformedTable("missing 'neg'");
  }
  std::vector<Element> neg;
  for (auto const& v : j["neg"]) {
    if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() > 255) {
      throw MalformedTable("'neg' entries must be element indices");
    }
    neg.push_back(static_cast<Element>(v.get<int>()));
  }
  return neg;
}

inline void check_size(Json const& j, std::size_t n) {
  if (j.contains("size") && (!j["size"].is_number_integer() || j["size"].get<std::size_t>() != n)) {
    throw MalformedTable("'size' does not match the tables");
  }
}

inline std::vector<std::string> labels_from(Json const& j) {
  if (!j.contains("labels")) return {};
  try {
    return j["labels"].get<std::vector<std::string>>();
  } catch (nlohmann::json::exception const&) {
    throw MalformedTable("'labels' must be an array of strings");
  }
}

}  // namespace detail

inline Json to_json(FiniteIRL const& A) {
  return Json{{"name", A.name()},
              {"size", A.size()},
              {"meet", detail::table_json(A.meet_table())},
              {"join", detail::table_json(A.join_table())},
              {"fusion", detail::table_json(A.fusion_table())},
              {"neg", std::vector<int>(A.neg_table().begin(), A.neg_table().end())},
              {"e", A.e()}};
}

inline Json to_json(FiniteRA const& A) {
  return Json{{"name", A.name()},
              {"signature", "RA"},
              {"size", A.size()},
              {"meet", detail::table_json(A.meet_table())},
              {"join", detail::table_json(A.join_table())},
              {"fusion", detail::table_json(A.fusion_table())},
              {"neg", std::vector<int>(A.neg_table().begin(), A.neg_table().end())}};
}

inline bool is_ra_document(Json const& j) { return j.is_object() && j.value("signature", "") == "RA"; }

inline FiniteIRL algebra_from_json(Json const& j) {
  if (!j.is_object()) {
    throw MalformedTable("algebra document must be an object");
  }
  if (is_ra_document(j)) {
    throw MalformedTable("document is a relevant algebra (no 'e')");
  }
  BinOpTable meet = detail::table_from(j, "meet");
  std::size_t const n = meet.size();
  detail::check_size(j, n);
  if (!j.contains("e") || !j["e"].is_number_integer() || j["e"].get<int>() < 0) {
    throw MalformedTable("missing or invalid 'e'");
  }
  return FiniteIRL(j.value("name", std::string("unnamed")), std::move(meet), detail::table_from(j, "join"),
                   detail::table_from(j, "fusion"), detail::neg_from(j),
                   static_cast<Element>(std::min(j["e"].get<int>(), 255)), detail::labels_from(j));
}

inline FiniteRA ra_from_json(Json const& j) {
  if (!j.is_object()) {
    throw MalformedTable("algebra document must be an object");
  }
  BinOpTable meet = detail::table_from(j, "meet");
  detail::check_size(j, meet.size());
  return FiniteRA(j.value("name", std::string("unnamed")), std::move(meet), detail::table_from(j, "join"),
                  detail::table_from(j, "fusion"), detail::neg_from(j), detail::labels_from(j));
}

inline Json catalog_header(Catalog const& c) {
  return Json{{"catalog",
               {{"size", c.spec.size},
                {"class", c.spec.class_name()},
                {"cumulative", c.spec.cumulative},
                {"predicate_filters", c.spec.predicate_filters},
                {"limit", c.spec.limit ? Json(*c.spec.limit) : Json(nullptr)},
                {"tool_version", kToolVersion},
                {"complete", c.complete},
                {"count", c.algebras.size()}}}};
}

inline Json to_json(Catalog const& c) {
  Json arr = Json::array();
  arr.push_back(catalog_header(c));
  for (auto const& A : c.algebras) arr.push_back(to_json(A));
  return arr;
}

// A catalog file is an array of algebra documents, optionally led by a header.
inline Catalog catalog_from_json(Json const& j) {
  if (!j.is_array()) {
    throw MalformedTable("catalog must be a JSON array");
  }
  Catalog c;
  std::size_t start = 0;
  if (!j.empty() && j[0].is_object() && j[0].contains("catalog")) {
    Json const& h = j[0]["catalog"];
    c.spec = spec_for_class(h.value("class", std::string("dmm")), h.value("size", std::size_t{1}));
    c.spec.cumulative = h.value("cumulative", false);
    c.spec.predicate_filters = h.value("predicate_filters", std::vector<std::string>{});
    if (h.contains("limit") && h["limit"].is_number_integer()) c.spec.limit = h["limit"].get<std::size_t>();
    c.complete = h.value("complete", false);
    start = 1;
  }
  for (std::size_t i = start; i < j.size(); ++i) c.algebras.push_back(algebra_from_json(j[i]));
  return c;
}

inline Json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  try {
    return Json::parse(in);
  } catch (nlohmann::json::parse_error const& e) {
    throw MalformedTable("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_text_file(std::string const& path, std::string const& text) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write '" + path + "'");
  }
  out << text;
}

inline std::string dump(Json const& j) { return j.dump(2) + "\n"; }

}  // namespace dmm
