#pragma once

// The family R_a = closure{x^a + x^{a+3}, x^{a+1}, x^{a+2}} in K[x]/x^{2a+6},
// a >= 6, whose exponent set needs four generators while m/m^2 is only
// three-dimensional: x^{2a+5} is a generator of E but equals g1 g3 - g2^2.

#include <vector>

#include "minext/subring.hpp"

namespace minext {

struct CounterexampleReport {
  int a = 0;
  FieldRing ring;
  std::vector<RingElem<FieldCtx>> gens;  // g1, g2, g3
  Subring<FieldCtx> algebra;
  Shape shape;
  std::vector<Valuation> generators;
  int d_shape = 0;
  int d_ring = 0;
  RingElem<FieldCtx> witness;  // g1 g3 - g2^2
  bool witness_is_top_monomial = false;
  bool witness_in_m_sq = false;
};

inline CounterexampleReport counterexample_family(int a, const FieldCtx& field) {
  if (a < 6) throw OutOfFamily("the family needs a >= 6, got " + std::to_string(a));
  FieldRing ring(field, 2 * a + 6);
  const auto g1 = ring.add(ring.x_pow(a), ring.x_pow(a + 3));
  const auto g2 = ring.x_pow(a + 1);
  const auto g3 = ring.x_pow(a + 2);
  auto R = closure(ring, {g1, g2, g3});
  auto shape = exponent_set(R);
  auto gens = minimal_generators(shape);
  const auto witness = ring.sub(ring.mul(g1, g3), ring.mul(g2, g2));
  const auto id = ideal_data(R);
  CounterexampleReport rep{a, ring, {g1, g2, g3}, R, shape, gens, static_cast<int>(gens.size()), cotangent_dim(R),
                           witness, witness == ring.x_pow(2 * a + 5), in_span(ring, id.m_sq, witness)};
  return rep;
}

}  // namespace minext
