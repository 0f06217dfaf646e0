#include "silt/slalom.hpp"

#include <algorithm>
#include <string>

namespace silt {

namespace {

std::string xstr(const XPoint& p) {
  return "(" + std::to_string(p.cluster) + "," + std::to_string(p.index) + ")";
}

bool same_unordered(const CrossArc& a, const CrossArc& b) {
  return (a.s == b.s && a.t == b.t) || (a.s == b.t && a.t == b.s);
}

}  // namespace

RefinedDisk refine(const MarkedDisk& disk, int d) {
  if (d < 1) fail(Errc::precondition, "window depth must be at least 1");
  return RefinedDisk{disk, d};
}

std::vector<XPoint> RefinedDisk::window_points() const {
  std::vector<XPoint> out;
  out.reserve(static_cast<size_t>(disk.m) * d);
  for (int c = 0; c < disk.m; ++c)
    for (int i = -d + 1; i <= 0; ++i) out.push_back({c, i});
  return out;
}

SlalomModel::SlalomModel(Dissection primal, int d)
    : refined_(refine(primal.disk, d)), primal_(std::move(primal)) {
  if (primal_.kind != PointColor::circ)
    fail(Errc::precondition, "slalom model expects a circ-dissection");
  if (!is_maximal(primal_)) fail(Errc::precondition, "slalom model expects a maximal dissection");
  dual_ = dual_dissection(primal_);

  const int faces = static_cast<int>(dual_.faces.size());
  face_cluster_.resize(faces);
  face_parent_.assign(faces, -1);
  face_parent_arc_.assign(faces, -1);
  face_depth_.assign(faces, -1);
  face_of_cluster_.assign(primal_.disk.m, -1);
  for (int f = 0; f < faces; ++f) {
    face_cluster_[f] = dual_.faces[f].contained_opposite.front();
    face_of_cluster_[face_cluster_[f]] = f;
  }
  const int root = dual_.root_face();
  for (int a = 0; a < static_cast<int>(dual_.arcs.size()); ++a) {
    face_parent_[a] = dual_.outer_face[a];
    face_parent_arc_[a] = a;
  }
  face_depth_[root] = 0;
  for (int f = 0; f < faces; ++f) {
    // follow parents until a known depth, then unwind
    std::vector<int> path;
    int g = f;
    while (face_depth_[g] < 0) {
      path.push_back(g);
      g = face_parent_[g];
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      face_depth_[*it] = face_depth_[face_parent_[*it]] + 1;
  }
}

CrossArc SlalomModel::cross_arc(XPoint s, XPoint t) const {
  const int m = primal_.disk.m;
  for (const XPoint& p : {s, t})
    if (p.cluster < 0 || p.cluster >= m)
      fail(Errc::precondition, "x-point " + xstr(p) + " outside the disk");
  if (s == t) fail(Errc::precondition, "x-arc endpoints coincide at " + xstr(s));
  if (s.cluster == t.cluster)
    fail(Errc::degenerate_arc, "x-arc " + xstr(s) + "-" + xstr(t) +
                                   " crosses no dual arc; its collapse is contractible");

  int fa = face_of_cluster_[s.cluster], fb = face_of_cluster_[t.cluster];
  std::vector<int> up_arcs, up_faces, down_arcs, down_faces;
  while (face_depth_[fa] > face_depth_[fb]) {
    up_arcs.push_back(face_parent_arc_[fa]);
    fa = face_parent_[fa];
    up_faces.push_back(fa);
  }
  while (face_depth_[fb] > face_depth_[fa]) {
    down_arcs.push_back(face_parent_arc_[fb]);
    down_faces.push_back(fb);
    fb = face_parent_[fb];
  }
  while (fa != fb) {
    up_arcs.push_back(face_parent_arc_[fa]);
    fa = face_parent_[fa];
    up_faces.push_back(fa);
    down_arcs.push_back(face_parent_arc_[fb]);
    down_faces.push_back(fb);
    fb = face_parent_[fb];
  }

  CrossArc g;
  g.s = s;
  g.t = t;
  g.crossed_dual = up_arcs;
  for (int f : up_faces) g.entered_cluster.push_back(face_cluster_[f]);
  for (size_t i = down_arcs.size(); i-- > 0;) {
    g.crossed_dual.push_back(down_arcs[i]);
    g.entered_cluster.push_back(face_cluster_[down_faces[i]]);
  }

  const size_t len = g.crossed_dual.size();
  g.grading.resize(len);
  g.grading[0] = s.index;
  for (size_t j = 1; j < len; ++j) {
    const int x = g.entered_cluster[j - 1];
    const bool left = cyclically_between({2 * x, 0}, xrank(t), xrank(s));
    g.grading[j] = g.grading[j - 1] + (left ? 1 : -1);
  }
  return g;
}

bool SlalomModel::in_window(const CrossArc& g, int d) const {
  auto ok = [&](int v) { return -d + 1 <= v && v <= 0; };
  if (!ok(g.s.index) || !ok(g.t.index)) return false;
  for (int v : g.grading)
    if (!ok(v)) return false;
  return true;
}

GradedArc SlalomModel::collapse(const CrossArc& g) const {
  if (!g.slalom())
    fail(Errc::precondition, "collapse expects a slalom, got " + xstr(g.s) + "-" + xstr(g.t));
  GradedArc h;
  h.cluster_s = g.s.cluster;
  h.cluster_t = g.t.cluster;
  h.eps_s = g.s.index;
  h.eps_t = g.t.index;
  h.crossed_dual = g.crossed_dual;
  h.grading = g.grading;
  return h;
}

IntersectionReport SlalomModel::classify_intersection(const CrossArc& g1,
                                                      const CrossArc& g2) const {
  if (!g1.slalom() || !g2.slalom())
    fail(Errc::precondition, "intersection classification expects slaloms");
  if (same_unordered(g1, g2))
    fail(Errc::precondition, "arcs are identical up to inversion");

  IntersectionReport r;
  int incidences = 0;  // same-cluster endpoint pairs with distinct x-points
  for (const XPoint& e1 : {g1.s, g1.t}) {
    for (const XPoint& e2 : {g2.s, g2.t}) {
      if (e1 == e2)
        ++r.boundary_deg0;
      else if (e1.cluster == e2.cluster)
        ++incidences;
    }
  }

  const bool cross =
      strictly_interleaved(xrank(g1.s), xrank(g1.t), xrank(g2.s), xrank(g2.t));
  if (cross) {
    // Contractible when sliding endpoints inside their clusters removes the
    // crossing, i.e. the cluster quadruple no longer interleaves strictly.
    const bool still = strictly_interleaved({2 * g1.s.cluster, 0}, {2 * g1.t.cluster, 0},
                                            {2 * g2.s.cluster, 0}, {2 * g2.t.cluster, 0});
    if (still)
      r.interior_noncontractible = 1;
    else
      r.interior_contractible = 1;
  }
  r.boundary_negative = incidences - r.interior_contractible;
  return r;
}

bool SlalomModel::ext_positive_some_direction(const CrossArc& g1, const CrossArc& g2) const {
  if (!g1.slalom() || !g2.slalom())
    fail(Errc::precondition, "ext predicate expects slaloms");
  return strictly_interleaved(xrank(g1.s), xrank(g1.t), xrank(g2.s), xrank(g2.t));
}

bool SlalomModel::is_presilting(const std::vector<CrossArc>& arcs) const {
  const int n = static_cast<int>(arcs.size());
  for (int i = 0; i < n; ++i) {
    if (!arcs[i].slalom()) fail(Errc::precondition, "presilting set may contain only slaloms");
    for (int j = i + 1; j < n; ++j)
      if (same_unordered(arcs[i], arcs[j]))
        fail(Errc::precondition, "presilting set contains a duplicate slalom");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (ext_positive_some_direction(arcs[i], arcs[j])) return false;
  return true;
}

bool SlalomModel::is_silting(const std::vector<CrossArc>& arcs) const {
  return is_presilting(arcs) && static_cast<int>(arcs.size()) == rank();
}

IntersectionReport graded_intersections(const GradedArc& u, const GradedArc& v) {
  IntersectionReport r;
  const BoundaryRank us{2 * u.cluster_s, u.eps_s}, ut{2 * u.cluster_t, u.eps_t};
  const BoundaryRank vs{2 * v.cluster_s, v.eps_s}, vt{2 * v.cluster_t, v.eps_t};

  const bool interior = strictly_interleaved({2 * u.cluster_s, 0}, {2 * u.cluster_t, 0},
                                             {2 * v.cluster_s, 0}, {2 * v.cluster_t, 0});
  const bool cross = strictly_interleaved(us, ut, vs, vt);
  r.interior_noncontractible = interior ? 1 : 0;
  r.interior_contractible = (cross && !interior) ? 1 : 0;

  int incidences = 0;
  for (const BoundaryRank& e1 : {us, ut}) {
    for (const BoundaryRank& e2 : {vs, vt}) {
      if (e1 == e2)
        ++r.boundary_deg0;
      else if (e1.first == e2.first)
        ++incidences;
    }
  }
  r.boundary_negative = incidences - r.interior_contractible;
  return r;
}

}  // namespace silt
