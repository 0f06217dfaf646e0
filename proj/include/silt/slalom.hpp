#pragma once

#include <vector>

#include "silt/disk.hpp"

namespace silt {

// A point of the refined boundary: cluster c is the circ point it replaces,
// index is its integer label. Walking the boundary along the orientation, the
// points of one cluster appear in ascending index order; the depth-d window
// keeps indices -d+1..0.
struct XPoint {
  int cluster = 0;
  int index = 0;
  friend auto operator<=>(const XPoint&, const XPoint&) = default;
};

inline BoundaryRank xrank(const XPoint& p) { return {2 * p.cluster, p.index}; }

struct RefinedDisk {
  MarkedDisk disk;
  int d = 1;

  // All window points in boundary order.
  std::vector<XPoint> window_points() const;
};

RefinedDisk refine(const MarkedDisk& disk, int d);

// An x-arc together with its crossing data against the dual dissection.
// grading[j] is the value of the grading function at the j-th crossing;
// grading[0] equals the start index and consecutive values differ by +1 when
// the cluster of the face entered between the crossings lies left of the arc.
struct CrossArc {
  XPoint s, t;
  std::vector<int> crossed_dual;     // dual arc indices, in order along the arc
  std::vector<int> entered_cluster;  // cluster of the face entered after each crossing
  std::vector<int> grading;

  bool slalom() const { return !grading.empty() && grading.back() == t.index; }
};

// Image of a slalom under collapsing each cluster back to its circ point: a
// graded circ-arc. Carries exactly the data needed to redo the intersection
// bookkeeping independently of the x-points.
struct GradedArc {
  int cluster_s = 0, cluster_t = 0;
  int eps_s = 0, eps_t = 0;
  std::vector<int> crossed_dual;
  std::vector<int> grading;
};

struct IntersectionReport {
  int interior_noncontractible = 0;
  int interior_contractible = 0;
  int boundary_deg0 = 0;      // shared x-points
  int boundary_negative = 0;  // remaining same-cluster adjacencies
};

// Binds a maximal circ-dissection, its dual and the face tree of the dual;
// this is the ambient model in which x-arcs are classified.
class SlalomModel {
 public:
  SlalomModel(Dissection primal, int d);

  const RefinedDisk& refined() const { return refined_; }
  const Dissection& primal() const { return primal_; }
  const Dissection& dual() const { return dual_; }
  int rank() const { return static_cast<int>(primal_.arcs.size()); }

  // Crossing sequence and grading of the x-arc from s to t. An arc whose
  // endpoints sit in one dual face would collapse to a point: degenerate.
  CrossArc cross_arc(XPoint s, XPoint t) const;

  bool is_slalom(const CrossArc& g) const { return g.slalom(); }
  bool in_window(const CrossArc& g) const { return in_window(g, refined_.d); }
  bool in_window(const CrossArc& g, int d) const;

  GradedArc collapse(const CrossArc& g) const;

  IntersectionReport classify_intersection(const CrossArc& g1, const CrossArc& g2) const;
  bool ext_positive_some_direction(const CrossArc& g1, const CrossArc& g2) const;

  bool is_presilting(const std::vector<CrossArc>& arcs) const;
  bool is_silting(const std::vector<CrossArc>& arcs) const;

 private:
  RefinedDisk refined_;
  Dissection primal_;
  Dissection dual_;
  std::vector<int> face_cluster_;     // per dual face: the circ point inside
  std::vector<int> face_parent_;      // face tree, rooted at the outermost face
  std::vector<int> face_parent_arc_;  // dual arc crossed towards the parent
  std::vector<int> face_depth_;
  std::vector<int> face_of_cluster_;
};

// Recomputes the intersection counts of two slaloms from their collapsed data
// alone (clusters and endpoint grading values).
IntersectionReport graded_intersections(const GradedArc& u, const GradedArc& v);

}  // namespace silt
