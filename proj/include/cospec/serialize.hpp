#ifndef COSPEC_SERIALIZE_HPP
#define COSPEC_SERIALIZE_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

#include "json.hpp"  // nlohmann/json, vendored

#include "cospec/cp_classify.hpp"
#include "cospec/ds_search.hpp"
#include "cospec/exact_spectrum.hpp"
#include "cospec/graph6.hpp"
#include "cospec/numeric_spectrum.hpp"
#include "cospec/polynomial.hpp"

// JSON views of the library's results. Objects use nlohmann::json's default
// (sorted) key order and doubles are rounded to 12 significant digits, so
// identical inputs serialize to identical bytes.

namespace cospec::json {

using Json = nlohmann::json;

inline double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no "-0"
}

/// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
inline Json integer(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

/// Coefficients, highest degree first.
inline Json polynomial(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(integer(c));
  return out;
}

inline Json factored(const FactoredPolynomial& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back({{"coefficients", polynomial(f.polynomial)}, {"exponent", f.exponent}});
  return out;
}

inline Json numeric(const NumericSpectrum& s) {
  Json values = Json::array();
  for (double v : s.values) values.push_back(round12(v));
  Json clusters = Json::array();
  for (const auto& c : s.clustered()) clusters.push_back({{"value", round12(c.value)}, {"multiplicity", c.multiplicity}});
  return {{"values", values}, {"clustered", clusters}};
}

inline Json closed_form(const ClosedFormSpectrum& s) {
  Json out = Json::array();
  for (const auto& e : s.entries())
    out.push_back({{"value", e.value.to_string()}, {"numeric", round12(e.value.value())}, {"multiplicity", e.multiplicity}});
  return out;
}

inline Json vertices(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(v);
  return out;
}

inline Json cp_verdict(const CpVerdict& v) {
  return {{"is_cp", v.is_cp},
          {"reason", reason_name(v.reason)},
          {"witness", v.witness ? vertices(*v.witness) : Json(nullptr)}};
}

inline Json graph_list(const std::vector<Graph>& gs) {
  Json out = Json::array();
  for (const auto& g : gs) out.push_back(graph6_encode(g));
  return out;
}

inline Json ds_verdict(const DsVerdict& v) {
  return {{"is_ds", v.is_ds}, {"mates", graph_list(v.mates)}, {"searched_order", v.searched_order}};
}

inline Json cospectral_class(const CospectralClass& c) {
  return {{"charpoly", polynomial(c.charpoly)}, {"members", graph_list(c.members)}};
}

inline Json enumeration(const EnumerationReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.nontrivial_classes) classes.push_back(cospectral_class(c));
  return {{"order", r.order},
          {"graph_count", r.graph_count},
          {"class_count", r.class_count},
          {"nontrivial_classes", classes}};
}

inline Json nu(const NuResult& r) {
  Json flagged = Json::array();
  for (const auto& c : r.flagged_classes) {
    Json entry = cospectral_class(c);
    Json long_odd = Json::array();
    for (const auto& g : c.members) long_odd.push_back(!is_cp_graph(g).is_cp);
    entry["has_long_odd_cycle"] = long_odd;
    flagged.push_back(entry);
  }
  return {{"nu", r.nu ? Json(*r.nu) : Json(nullptr)},
          {"cap", r.searched_cap},
          {"witness", r.witness ? Json(graph6_encode(*r.witness)) : Json(nullptr)},
          {"mate", r.mate ? Json(graph6_encode(*r.mate)) : Json(nullptr)},
          {"flagged_classes", flagged}};
}

inline Json graph_summary(const Graph& g) {
  return {{"graph6", graph6_encode(g)}, {"order", g.order()}, {"edges", g.edge_count()}};
}

}  // namespace cospec::json

#endif  // COSPEC_SERIALIZE_HPP
