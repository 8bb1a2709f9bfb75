// Closed-form counts of rooted one-face maps whose vertex degrees all lie
// in {1, 4}.
//
// For genus g with k degree-4 vertices the family has n = 3k+1-2g edges and
// s = 2k+2-4g leaves; it is nonempty exactly when those bounds are
// satisfiable. Counts:
//   genus 0 trees:        2 (3k+1)! / (k! (2k+2)!)
//   general (g, k):       2 n! / (4^g g! s! (k-g)!)
//   4-regular genus g:    2 (4g-2)! / (4^g g! (g-1)!)   [k = 2g-1, s = 0]
// and the counts satisfy the genus recurrence
//   2g * eps14(g, k) = n * binom(s+2, 2) * eps14(g-1, k-1).
#pragma once

#include <optional>

#include "ofm/numeric.hpp"

namespace ofm {

struct Params14 {
  unsigned long edges;   // n = 3k + 1 - 2g
  unsigned long leaves;  // s = 2k + 2 - 4g
  bool operator==(const Params14&) const = default;
};

// Edge/leaf counts for the (g, k) family, or nullopt when the family is
// empty (s < 0 or n < 1).
std::optional<Params14> params14(unsigned long g, unsigned long k);

// Fuss-Catalan numbers of order 4: C4(0) = 1, C4(k) = binom(3k, k-1) / k.
BigInt fuss_catalan4(unsigned long k);

// Rooted plane trees with k degree-4 vertices and all other degrees 1.
BigInt eps_trees14(unsigned long k);

// Rooted genus-g one-face maps with k degree-4 vertices, all other degrees 1.
// Returns 0 for empty families.
BigInt eps14(unsigned long g, unsigned long k);

// Rooted 4-regular genus-g one-face maps (g >= 1).
BigInt eps4_rooted(unsigned long g);

// Checks the genus recurrence at (g, k), g >= 1; empty families enter as 0.
bool recurrence_holds14(unsigned long g, unsigned long k);

}  // namespace ofm
