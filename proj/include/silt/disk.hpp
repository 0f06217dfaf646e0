#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "silt/error.hpp"

namespace silt {

enum class PointColor { circ, bullet };

inline PointColor opposite(PointColor c) {
  return c == PointColor::circ ? PointColor::bullet : PointColor::circ;
}

// A disk with m circ-points and m bullet-points alternating on the boundary.
// Boundary items are numbered 0..2m-1 along the global orientation:
// circ_i sits at item 2i, bullet_i at item 2i+1.
struct MarkedDisk {
  int m = 0;

  int items() const { return 2 * m; }
  int item_of(PointColor c, int idx) const {
    return 2 * idx + (c == PointColor::bullet ? 1 : 0);
  }
};

MarkedDisk new_marked_disk(int m);

// One arc end. Slot positions at a point follow the boundary orientation:
// slot 0 is met first when the boundary walk passes the point.
struct Slot {
  int owner = 0;
  int pos = 0;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct Chord {
  PointColor kind = PointColor::circ;
  Slot a, b;
};

// (item, sub) key giving the refined cyclic order of everything attached to
// the boundary (arc-end slots, x-points). Comparing keys of different points
// never ties, so mixed-color tests are well defined.
using BoundaryRank = std::pair<int, int>;

inline BoundaryRank rank_of(const MarkedDisk& disk, PointColor kind, const Slot& s) {
  return {disk.item_of(kind, s.owner), s.pos};
}

bool cyclically_between(BoundaryRank x, BoundaryRank lo, BoundaryRank hi);

// Two chords of a disk cross in the interior exactly when their four end
// keys strictly interleave in the cyclic order. Any coincident key kills
// strictness.
bool strictly_interleaved(BoundaryRank a1, BoundaryRank a2, BoundaryRank b1, BoundaryRank b2);

struct CrossingVerdict {
  int interior = 0;                // 0 or 1 on a disk
  std::vector<int> shared_owners;  // points where the chords meet (same color only)
};

CrossingVerdict chords_cross(const MarkedDisk& disk, const Chord& x, const Chord& y);

// Atomic boundary piece between two consecutive arc-end positions. A piece
// whose two ends sit at the same marked point is degenerate: it carries no
// actual boundary segment and contains no marked points.
struct Piece {
  int from_pos = -1, to_pos = -1;
  std::vector<int> items;  // marked points strictly inside, as boundary item ids
  bool degenerate = false;
};

struct FaceStep {
  enum class Kind { arc_side, piece };
  Kind kind = Kind::piece;
  int arc = -1;  // arc index, for arc_side steps
  int from_pos = -1, to_pos = -1;
  int piece = -1;  // piece index, for piece steps
};

// A complementary region of the dissected disk. The walk is cyclic with the
// face interior on the left.
struct Face {
  std::vector<FaceStep> walk;
  std::vector<int> contained_opposite;  // opposite-color point ids strictly inside
  bool has_boundary_segment = false;
};

struct Dissection {
  MarkedDisk disk;
  PointColor kind = PointColor::circ;
  std::vector<Chord> arcs;  // canonical order: ends normalized, arcs sorted
  std::vector<Piece> pieces;
  // faces[i] is the face enclosed by arcs[i]; faces.back() is the outermost one.
  std::vector<Face> faces;
  std::vector<int> outer_face;               // per arc: face index on its outer side
  std::vector<Slot> position_slots;          // global end position -> slot
  std::vector<std::pair<int, int>> arc_span; // per arc: (l, r) end positions, l < r

  int root_face() const { return static_cast<int>(arcs.size()); }
};

// Checks slot consistency, pairwise non-crossing and admissibility (no face
// bounded by arc-sides alone), and computes the face decomposition.
Dissection validate_dissection(const MarkedDisk& disk, PointColor kind, std::vector<Chord> arcs);

// True iff every face contains exactly one opposite-color point; equivalently
// |arcs| = m-1 on a disk. Both criteria are computed and cross-checked.
bool is_maximal(const Dissection& d);

// The opposite-color dissection in which each arc crosses exactly one arc of
// the input, and nothing else. Requires a maximal input; the result is
// verified to satisfy the single-crossing contract.
Dissection dual_dissection(const Dissection& d);

}  // namespace silt
