#pragma once

#include <utility>
#include <vector>

#include "silt/disk.hpp"

namespace silt {

struct Arrow {
  int src = 0, dst = 0;  // vertex ids, 1-based
  int anchor = 0;        // circ point where the two arcs meet
};

// Quiver with length-two monomial relations. Vertices are in bijection with
// the arcs of a maximal circ-dissection, numbered by canonical arc order.
struct GentleAlgebra {
  int rank = 0;
  std::vector<Arrow> arrows;
  std::vector<std::pair<int, int>> relations;  // indices into arrows
};

// Reads the quiver off a maximal circ-dissection: an arrow i -> j for every
// circ point where the end of arc i immediately precedes the end of arc j in
// the slot order, and a relation for each composable arrow pair that uses the
// two different ends of the middle arc.
GentleAlgebra algebra_from_dissection(const Dissection& d);

bool is_gentle(const GentleAlgebra& a);

// Disk with n+1 circ points and all arcs sharing the apex circ_0, with apex
// slots arranged so that the extracted quiver is 1 -> 2 -> ... -> n with no
// relations.
std::pair<MarkedDisk, Dissection> fan_dissection_linear_An(int n);

}  // namespace silt
