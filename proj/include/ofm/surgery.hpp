// Trisections and the genus-changing vertex surgery on one-face maps.
//
// A trisection is a dart h with sigma(h) < h where sigma(h) is not the
// minimum of h's vertex cycle; a genus-g one-face map has exactly 2g of them.
//
// The surgery composes sigma with the ascending 3-cycle (a1 a2 a3) of a
// triple a1 < a2 < a3. In face-normalized labels this changes the face
// traversal from blocks A=[0,a1] B=(a1,a2] C=(a2,a3] D=(a3,2n) in order
// A B C D to the order A C B D, so the result is renumbered by swapping the
// B and C label blocks (that renumbering is forced: the face must stay the
// standard cycle with the root at dart 0, and it is the only relabeling that
// does so). The block swap sends the triple (a1,a2,a3) to its reflection
// (a1, a1+a3-a2, a3).
//
// If the triple spans three distinct vertices the surgery merges them and
// raises genus by 1 (glue); applied at the reflection of an intertwined
// triple it splits that vertex into three and lowers genus by 1 (cut). The
// two are mutually inverse for the *same* triple argument:
// cut(glue(m, t), t) == m and glue(cut(m, t), t) == m.
#pragma once

#include <vector>

#include "ofm/rooted_map.hpp"

namespace ofm {

struct Triple {
  Dart a1, a2, a3;

  // Validates a1 < a2 < a3; throws std::invalid_argument otherwise.
  Triple(Dart a1, Dart a2, Dart a3);

  bool operator==(const Triple&) const = default;
};

// The triple with the middle dart mirrored inside [a1, a3]; an involution.
Triple reflected(const Triple& t);

// All trisections of m, ascending.
std::vector<Dart> trisections(const RootedMap& m);

// True iff the common vertex cycle of t visits the darts in the order
// (a1, a3, a2); throws if the three darts are not co-vertex.
bool is_intertwined(const RootedMap& m, const Triple& t);

// Merges the three distinct vertices containing a1, a2, a3 into one;
// genus rises by exactly 1 and the map stays one-face. The glue site is
// marked in the result by reflected(t) being intertwined at the new vertex.
// Throws std::invalid_argument if the darts are not in three distinct
// vertex cycles.
RootedMap glue(const RootedMap& m, const Triple& t);

// Inverse of glue for the same triple: splits the vertex glued at t, i.e.
// requires reflected(t) to be intertwined at a single vertex, and leaves
// a1, a2, a3 in three distinct vertices. Genus drops by exactly 1.
RootedMap cut(const RootedMap& m, const Triple& t);

}  // namespace ofm
