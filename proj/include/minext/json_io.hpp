#pragma once

// JSON and CSV renderings of shapes and census rows.

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "minext/census.hpp"
#include "minext/poly_format.hpp"

namespace minext {

/// [0,2,3] for Interval shapes, [[0,0],[0,1]] for Grid shapes.
inline nlohmann::json points_to_json(const ExpDomain& domain, const std::vector<Valuation>& pts) {
  auto out = nlohmann::json::array();
  for (const auto& v : pts) {
    if (domain.is_grid()) {
      out.push_back({v.deg, v.pval});
    } else {
      out.push_back(v.deg);
    }
  }
  return out;
}

inline nlohmann::json shape_to_json(const Shape& s) { return points_to_json(s.domain, s.elems); }

/// Inverse of shape_to_json; the result must be a shape of domain.
inline Shape shape_from_json(const ExpDomain& domain, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("shape must be a JSON array");
  std::vector<Valuation> pts;
  for (const auto& e : j) {
    if (domain.is_grid()) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ParseError("grid points are [deg, pval] pairs");
      pts.push_back({e[0].get<int>(), e[1].get<int>()});
    } else {
      if (!e.is_number_integer()) throw ParseError("interval points are integers");
      pts.push_back({e.get<int>(), 0});
    }
  }
  return make_shape(domain, std::move(pts));
}

template <class C>
nlohmann::json subring_to_json(const Subring<C>& R) {
  auto out = nlohmann::json::array();
  for (const auto& b : R.basis()) out.push_back(format_poly(R.ctx(), b));
  return out;
}

template <class C>
nlohmann::json census_row_to_json(const CensusRow<C>& row, bool emit_bases) {
  nlohmann::json j;
  j["shape"] = shape_to_json(row.shape);
  j["count"] = row.count;
  j["bound_exp"] = row.bound_exp;
  j["bound"] = row.bound;
  j["equality"] = row.equality;
  j["d_shape"] = row.d_shape;
  j["d_ring_values"] = row.d_ring_values;
  if (emit_bases) {
    auto subs = nlohmann::json::array();
    for (const auto& R : row.subrings) subs.push_back(subring_to_json(R));
    j["subrings"] = std::move(subs);
  }
  return j;
}

template <class C>
nlohmann::json census_to_json(const std::vector<CensusRow<C>>& rows, bool emit_bases) {
  auto out = nlohmann::json::array();
  for (const auto& row : rows) out.push_back(census_row_to_json(row, emit_bases));
  return out;
}

/// Columns shape, count, bound_exp, bound, equality, d_shape. The shape
/// column is the compact JSON array, quoted.
template <class C>
std::string census_to_csv(const std::vector<CensusRow<C>>& rows) {
  std::ostringstream os;
  os << "shape,count,bound_exp,bound,equality,d_shape\n";
  for (const auto& row : rows) {
    os << '"' << shape_to_json(row.shape).dump() << "\"," << row.count << ',' << row.bound_exp << ',' << row.bound
       << ',' << (row.equality ? "true" : "false") << ',' << row.d_shape << '\n';
  }
  return os.str();
}

}  // namespace minext
