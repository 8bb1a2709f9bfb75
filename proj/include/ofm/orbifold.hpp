// Counting unrooted 4-regular one-face maps of genus g.
//
// Rooted maps are counted up to re-rooting along the face (a cyclic group of
// order 2n = 8g-4). Orbits are counted Burnside-style: each nontrivial
// automorphism order L descends the map to a quotient map on an orbifold,
// described by a signature (quotient genus, branch indices m_1..m_r). Only
// L in {1, 2, 4} can occur. The number of order-L symmetries attached to a
// signature is
//   Epi0 = m^(2gq) * J_{2gq}(L/m) * E(m_1..m_r),   m = lcm(m_i),
// where J is the Jordan totient and
//   E(m_1..m_r) = (1/m) * sum_{k=1..m} prod_i Phi(k, m_i),
//   Phi(k, m_i)  = phi(m_i)/phi(n_i) * mu(n_i),    n_i = m_i / gcd(k, m_i).
// Quotient maps are counted by the {1,4}-degree closed forms, giving the
// correction sums f2 (order 2) and f4 (order 4), and
//   unrooted(g) = (rooted(g) + f2(g) + f4(g)) / (8g - 4).
#pragma once

#include <vector>

#include "ofm/numeric.hpp"

namespace ofm {

BigInt euler_phi(unsigned long n);
int moebius(unsigned long n);
// J_k(n); J_0(1) = 1, J_0(n) = 0 for n > 1, J_k(1) = 1.
BigInt jordan_totient(unsigned long k, unsigned long n);

// Phi(k, m) above.
BigRational big_phi(unsigned long k, unsigned long m);
// E(indices) above; indices must be nonempty, each >= 2.
BigRational big_e(const std::vector<unsigned long>& indices);

struct OrbifoldSignature {
  unsigned long quotient_genus;         // genus of the quotient orbifold
  unsigned long order;                  // L, order of the cyclic symmetry
  std::vector<unsigned long> indices;   // branch indices m_1 <= ... <= m_r

  bool operator==(const OrbifoldSignature&) const = default;
};

// Constraint predicates for a signature of a genus-g one-face map quotient.
// Riemann-Hurwitz: 2 - 2g = L * (2 - 2*gq - sum_i (1 - 1/m_i)).
bool riemann_hurwitz_holds(const OrbifoldSignature& sig, unsigned long g);
// lcm(m_i) divides L.
bool lcm_divides_order(const OrbifoldSignature& sig);
// Dropping any single index leaves the lcm unchanged.
bool lcm_drop_one_stable(const OrbifoldSignature& sig);
// One-face condition: some m_i equals L (the face center is a branch point);
// vacuous for L = 1.
bool has_full_order_index(const OrbifoldSignature& sig);

bool signature_valid(const OrbifoldSignature& sig, unsigned long g);

// All signatures of order-L symmetries of genus-g 4-regular one-face maps;
// L must be 1, 2 or 4.
std::vector<OrbifoldSignature> signatures_for(unsigned long g, unsigned long L);

// Number of order-preserving symmetries attached to the signature (the
// epimorphism count Epi0); always a nonnegative integer.
BigInt epi0(const OrbifoldSignature& sig);

// Total (map, symmetry) incidences over order-2 symmetries; integral.
BigInt f2(unsigned long g);
// The quotient-genus-0 part of f2; equals 3/(2g+1) * binom(4g-2, 2g).
BigInt f2_genus_zero_slice(unsigned long g);
// Total incidences over order-4 symmetries (exact rational accumulation).
BigRational f4(unsigned long g);

// This signature's additive share of the unrooted count; the shares over
// signatures_for(g, 1) + signatures_for(g, 2) + signatures_for(g, 4) sum to
// exactly eps4_unrooted(g).
BigRational signature_contribution(const OrbifoldSignature& sig, unsigned long g);

// Unrooted (unlabelled) 4-regular genus-g one-face maps, g >= 1. Computed
// twice -- directly from the four-part closed formula and as
// (rooted + f2 + f4)/(8g-4) -- with the two routes asserted equal and
// integral.
BigInt eps4_unrooted(unsigned long g);

}  // namespace ofm
