#include "silt/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace silt {

GentleAlgebra algebra_from_dissection(const Dissection& d) {
  if (d.kind != PointColor::circ)
    fail(Errc::precondition, "algebra extraction expects a circ-dissection");
  if (!is_maximal(d)) fail(Errc::precondition, "algebra extraction expects a maximal dissection");

  const int n = static_cast<int>(d.arcs.size());
  GentleAlgebra alg;
  alg.rank = n;

  // Arc ends at each circ point, by slot position.
  std::vector<std::vector<int>> arc_at(d.disk.m);
  for (int i = 0; i < n; ++i) {
    for (const Slot& s : {d.arcs[i].a, d.arcs[i].b}) {
      auto& v = arc_at[s.owner];
      if (static_cast<int>(v.size()) <= s.pos) v.resize(s.pos + 1, -1);
      v[s.pos] = i;
    }
  }

  struct ArrowEnds {
    Slot src_end, dst_end;  // ends of the two arcs at the anchor
  };
  std::vector<ArrowEnds> ends;
  for (int v = 0; v < d.disk.m; ++v) {
    const auto& at = arc_at[v];
    for (int p = 0; p + 1 < static_cast<int>(at.size()); ++p) {
      alg.arrows.push_back({at[p] + 1, at[p + 1] + 1, v});
      ends.push_back({Slot{v, p}, Slot{v, p + 1}});
    }
  }

  // Composition i -> j -> k is a relation when the second arrow starts at the
  // other end of arc j.
  const int na = static_cast<int>(alg.arrows.size());
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < na; ++y) {
      if (alg.arrows[x].dst != alg.arrows[y].src) continue;
      const Chord& mid = d.arcs[alg.arrows[x].dst - 1];
      if (mid.a.owner == mid.b.owner)
        fail(Errc::model_inconsistency, "loop arc reached relation extraction");
      if (!(ends[x].dst_end == ends[y].src_end)) alg.relations.push_back({x, y});
    }
  }

  if (!is_gentle(alg)) fail(Errc::model_inconsistency, "extracted algebra is not gentle");
  return alg;
}

bool is_gentle(const GentleAlgebra& a) {
  const int na = static_cast<int>(a.arrows.size());
  for (const Arrow& ar : a.arrows)
    if (ar.src < 1 || ar.src > a.rank || ar.dst < 1 || ar.dst > a.rank) return false;

  std::vector<int> indeg(a.rank + 1, 0), outdeg(a.rank + 1, 0);
  for (const Arrow& ar : a.arrows) {
    ++outdeg[ar.src];
    ++indeg[ar.dst];
  }
  for (int v = 1; v <= a.rank; ++v)
    if (indeg[v] > 2 || outdeg[v] > 2) return false;

  std::set<std::pair<int, int>> rel;
  for (auto [x, y] : a.relations) {
    if (x < 0 || x >= na || y < 0 || y >= na) return false;
    if (a.arrows[x].dst != a.arrows[y].src) return false;  // only length-two paths
    rel.insert({x, y});
  }

  // Each arrow extends in at most one way inside the ideal and in at most one
  // way outside it, on both sides.
  for (int x = 0; x < na; ++x) {
    int succ_in = 0, succ_out = 0, pred_in = 0, pred_out = 0;
    for (int y = 0; y < na; ++y) {
      if (a.arrows[x].dst == a.arrows[y].src) (rel.count({x, y}) ? succ_in : succ_out)++;
      if (a.arrows[y].dst == a.arrows[x].src) (rel.count({y, x}) ? pred_in : pred_out)++;
    }
    if (succ_in > 1 || succ_out > 1 || pred_in > 1 || pred_out > 1) return false;
  }
  return true;
}

std::pair<MarkedDisk, Dissection> fan_dissection_linear_An(int n) {
  if (n < 1) fail(Errc::precondition, "fan dissection needs n >= 1");
  MarkedDisk disk = new_marked_disk(n + 1);
  std::vector<Chord> arcs;
  arcs.reserve(n);
  // The arc to circ_i must take apex slot n-i: farther endpoints attach first.
  for (int i = 1; i <= n; ++i)
    arcs.push_back({PointColor::circ, Slot{0, n - i}, Slot{i, 0}});
  Dissection d = validate_dissection(disk, PointColor::circ, std::move(arcs));
  return {disk, std::move(d)};
}

}  // namespace silt
