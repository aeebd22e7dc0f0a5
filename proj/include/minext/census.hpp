#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "minext/enumerate.hpp"

namespace minext {

/// One shape class of a census.
template <class C>
struct CensusRow {
  Shape shape;
  std::uint64_t count = 0;
  int bound_exp = 0;
  std::uint64_t bound = 0;  // residue_size^bound_exp
  bool equality = false;
  int d_shape = 0;
  std::vector<int> d_ring_values;  // sorted
  std::vector<Subring<C>> subrings;
};

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (~0ull) / base) throw TooLarge("census bound overflows 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace detail

/// Groups an already enumerated subring list by exponent set.
template <class C>
std::vector<CensusRow<C>> census_of(const std::vector<Subring<C>>& subrings) {
  std::map<std::vector<Valuation>, CensusRow<C>> rows;
  for (const auto& R : subrings) {
    Shape s = exponent_set(R);
    auto it = rows.find(s.elems);
    if (it == rows.end()) it = rows.emplace(s.elems, CensusRow<C>{s, 0, 0, 0, false, 0, {}, {}}).first;
    auto& row = it->second;
    ++row.count;
    row.d_ring_values.push_back(cotangent_dim(R));
    row.subrings.push_back(R);
  }
  std::vector<CensusRow<C>> out;
  for (auto& [key, row] : rows) {
    const auto base = subrings.front().ctx().coeffs().residue_size();
    row.bound_exp = shape_bound_exp(row.shape);
    row.bound = detail::checked_pow(base, row.bound_exp);
    row.equality = row.count == row.bound;
    row.d_shape = generator_count(row.shape);
    std::sort(row.d_ring_values.begin(), row.d_ring_values.end());
    out.push_back(std::move(row));
  }
  return out;
}

/// All subrings of ring grouped by shape, rows sorted by shape.
template <class C>
std::vector<CensusRow<C>> census(const RingCtx<C>& ring, EnumMethod method = EnumMethod::minimal_ext) {
  return census_of(enumerate_subrings(ring, method));
}

}  // namespace minext
