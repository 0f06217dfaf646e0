#include "silt/disk.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace silt {

MarkedDisk new_marked_disk(int m) {
  if (m < 1) fail(Errc::invalid_surface, "a marked disk needs at least one circ/bullet pair");
  return MarkedDisk{m};
}

bool cyclically_between(BoundaryRank x, BoundaryRank lo, BoundaryRank hi) {
  if (lo < hi) return lo < x && x < hi;
  return x > lo || x < hi;
}

bool strictly_interleaved(BoundaryRank a1, BoundaryRank a2, BoundaryRank b1, BoundaryRank b2) {
  if (a1 == a2 || b1 == b2) return false;
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  return cyclically_between(b1, a1, a2) != cyclically_between(b2, a1, a2);
}

CrossingVerdict chords_cross(const MarkedDisk& disk, const Chord& x, const Chord& y) {
  CrossingVerdict v;
  if (x.kind == y.kind) {
    for (int o : {y.a.owner, y.b.owner})
      if (o == x.a.owner || o == x.b.owner) v.shared_owners.push_back(o);
    std::sort(v.shared_owners.begin(), v.shared_owners.end());
    v.shared_owners.erase(std::unique(v.shared_owners.begin(), v.shared_owners.end()),
                          v.shared_owners.end());
  }
  v.interior = strictly_interleaved(rank_of(disk, x.kind, x.a), rank_of(disk, x.kind, x.b),
                                    rank_of(disk, y.kind, y.a), rank_of(disk, y.kind, y.b))
                   ? 1
                   : 0;
  return v;
}

namespace {

bool positions_interleave(int a1, int a2, int b1, int b2) {
  return strictly_interleaved({a1, 0}, {a2, 0}, {b1, 0}, {b2, 0});
}

std::string chord_str(const Chord& c) {
  return "(" + std::to_string(c.a.owner) + "," + std::to_string(c.a.pos) + ")-(" +
         std::to_string(c.b.owner) + "," + std::to_string(c.b.pos) + ")";
}

}  // namespace

Dissection validate_dissection(const MarkedDisk& disk, PointColor kind, std::vector<Chord> arcs) {
  if (disk.m < 1) fail(Errc::invalid_surface, "empty disk");
  for (auto& c : arcs) {
    if (c.kind != kind) fail(Errc::precondition, "chord color does not match dissection kind");
    if (c.b < c.a) std::swap(c.a, c.b);
    if (c.a == c.b) fail(Errc::precondition, "chord " + chord_str(c) + " has coincident ends");
    for (const Slot& s : {c.a, c.b}) {
      if (s.owner < 0 || s.owner >= disk.m || s.pos < 0)
        fail(Errc::dangling_slot, "arc end (" + std::to_string(s.owner) + "," +
                                      std::to_string(s.pos) + ") references no marked point");
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const Chord& x, const Chord& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });

  const int n = static_cast<int>(arcs.size());

  // Each slot may carry exactly one arc end, and the positions at a point
  // must be 0..k-1 without gaps.
  std::map<Slot, int> end_of_slot;
  std::map<int, std::vector<int>> positions_at;
  for (int i = 0; i < n; ++i) {
    for (const Slot& s : {arcs[i].a, arcs[i].b}) {
      if (!end_of_slot.emplace(s, i).second)
        fail(Errc::dangling_slot, "slot (" + std::to_string(s.owner) + "," +
                                      std::to_string(s.pos) + ") carries two arc ends");
      positions_at[s.owner].push_back(s.pos);
    }
  }
  for (auto& [owner, ps] : positions_at) {
    std::sort(ps.begin(), ps.end());
    for (int k = 0; k < static_cast<int>(ps.size()); ++k)
      if (ps[k] != k)
        fail(Errc::dangling_slot,
             "slot positions at point " + std::to_string(owner) + " are not 0..k-1");
  }

  Dissection d;
  d.disk = disk;
  d.kind = kind;
  d.arcs = std::move(arcs);

  const int P = 2 * n;
  d.position_slots.reserve(P);
  std::map<Slot, int> pos_index;
  for (const auto& [slot, arc] : end_of_slot) {
    pos_index[slot] = static_cast<int>(d.position_slots.size());
    d.position_slots.push_back(slot);
  }
  d.arc_span.resize(n);
  for (int i = 0; i < n; ++i) {
    int p = pos_index[d.arcs[i].a], q = pos_index[d.arcs[i].b];
    d.arc_span[i] = {std::min(p, q), std::max(p, q)};
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (positions_interleave(d.arc_span[i].first, d.arc_span[i].second, d.arc_span[j].first,
                               d.arc_span[j].second))
        fail(Errc::crossing_arcs,
             "arcs " + chord_str(d.arcs[i]) + " and " + chord_str(d.arcs[j]) + " cross");

  // Non-crossing spans form a laminar family; recover the nesting forest.
  std::vector<int> parent(n, n);
  std::vector<std::vector<int>> kids(n + 1);
  {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      if (d.arc_span[x].first != d.arc_span[y].first)
        return d.arc_span[x].first < d.arc_span[y].first;
      return d.arc_span[x].second > d.arc_span[y].second;
    });
    std::vector<int> stack;
    for (int id : order) {
      while (!stack.empty() && d.arc_span[stack.back()].second < d.arc_span[id].first)
        stack.pop_back();
      parent[id] = stack.empty() ? n : stack.back();
      kids[parent[id]].push_back(id);
      stack.push_back(id);
    }
  }

  // Boundary pieces between consecutive end positions.
  const int total_items = disk.items();
  if (P == 0) {
    Piece whole;
    whole.from_pos = whole.to_pos = -1;
    for (int it = 0; it < total_items; ++it) whole.items.push_back(it);
    d.pieces.push_back(std::move(whole));
  } else {
    for (int p = 0; p < P; ++p) {
      const int q = (p + 1) % P;
      Piece pc;
      pc.from_pos = p;
      pc.to_pos = q;
      const int ia = disk.item_of(kind, d.position_slots[p].owner);
      const int ib = disk.item_of(kind, d.position_slots[q].owner);
      if (ia == ib) {
        pc.degenerate = true;
      } else {
        for (int it = (ia + 1) % total_items; it != ib; it = (it + 1) % total_items)
          pc.items.push_back(it);
      }
      d.pieces.push_back(std::move(pc));
    }
  }

  const int opp_parity = (opposite(kind) == PointColor::bullet) ? 1 : 0;
  auto build_face = [&](int a) {
    Face f;
    auto add_piece = [&](int p) {
      FaceStep st;
      st.kind = FaceStep::Kind::piece;
      st.piece = p;
      f.walk.push_back(st);
      const Piece& pc = d.pieces[p];
      if (!pc.degenerate || (P == 0)) f.has_boundary_segment = true;
      for (int it : pc.items)
        if (it % 2 == opp_parity) f.contained_opposite.push_back(it / 2);
    };
    auto add_side = [&](int arc, int from, int to) {
      FaceStep st;
      st.kind = FaceStep::Kind::arc_side;
      st.arc = arc;
      st.from_pos = from;
      st.to_pos = to;
      f.walk.push_back(st);
    };
    if (P == 0) {
      add_piece(0);
      return f;
    }
    int cur = (a < n) ? d.arc_span[a].first : 0;
    const int stop = (a < n) ? d.arc_span[a].second : P;
    for (int c : kids[a]) {
      for (int p = cur; p < d.arc_span[c].first; ++p) add_piece(p);
      add_side(c, d.arc_span[c].first, d.arc_span[c].second);
      cur = d.arc_span[c].second;
    }
    for (int p = cur; p < stop; ++p) add_piece(p);
    if (a < n) add_side(a, d.arc_span[a].second, d.arc_span[a].first);
    return f;
  };

  for (int a = 0; a <= n; ++a) d.faces.push_back(build_face(a));
  d.outer_face.resize(n);
  for (int i = 0; i < n; ++i) d.outer_face[i] = parent[i];

  for (int a = 0; a <= n; ++a) {
    const Face& f = d.faces[a];
    const bool has_opp = !f.contained_opposite.empty();
    if (f.has_boundary_segment != has_opp)
      fail(Errc::model_inconsistency, "face walk disagrees with point containment");
    if (!f.has_boundary_segment)
      fail(Errc::inadmissible_face,
           "face enclosed by arcs " + std::string(a < n ? "inside " + chord_str(d.arcs[a]) : "") +
               " has no boundary segment and no opposite-color point");
  }
  return d;
}

bool is_maximal(const Dissection& d) {
  bool by_faces = true;
  for (const Face& f : d.faces)
    if (f.contained_opposite.size() != 1) by_faces = false;
  const bool by_count = static_cast<int>(d.arcs.size()) == d.disk.m - 1;
  if (by_faces != by_count)
    fail(Errc::model_inconsistency, "maximality criteria disagree (face count vs arc count)");
  return by_faces;
}

Dissection dual_dissection(const Dissection& d) {
  if (!is_maximal(d)) fail(Errc::precondition, "dual dissection requires a maximal input");
  const int n = static_cast<int>(d.arcs.size());
  const PointColor dk = opposite(d.kind);

  // At the unique opposite point of each face, the new arc ends take slots in
  // reverse of the face-walk order seen from that point.
  std::vector<std::map<int, int>> slot_in_face(n + 1);
  std::vector<int> face_owner(n + 1);
  for (int f = 0; f <= n; ++f) {
    const Face& F = d.faces[f];
    const int b_local = F.contained_opposite.front();
    face_owner[f] = b_local;
    const int b_item = d.disk.item_of(dk, b_local);
    int start = -1;
    for (int i = 0; i < static_cast<int>(F.walk.size()); ++i) {
      const FaceStep& st = F.walk[i];
      if (st.kind != FaceStep::Kind::piece) continue;
      const auto& items = d.pieces[st.piece].items;
      if (std::find(items.begin(), items.end(), b_item) != items.end()) {
        start = i;
        break;
      }
    }
    if (start < 0) fail(Errc::model_inconsistency, "contained point missing from face walk");
    std::vector<int> sides;
    const int W = static_cast<int>(F.walk.size());
    for (int o = 1; o <= W; ++o) {
      const FaceStep& st = F.walk[(start + o) % W];
      if (st.kind == FaceStep::Kind::arc_side) sides.push_back(st.arc);
    }
    const int k = static_cast<int>(sides.size());
    for (int j = 0; j < k; ++j) slot_in_face[f][sides[j]] = k - 1 - j;
  }

  std::vector<Chord> duals;
  duals.reserve(n);
  for (int a = 0; a < n; ++a) {
    const int fi = a, fo = d.outer_face[a];
    Chord c;
    c.kind = dk;
    c.a = {face_owner[fi], slot_in_face[fi][a]};
    c.b = {face_owner[fo], slot_in_face[fo][a]};
    duals.push_back(c);
  }

  Dissection dd = validate_dissection(d.disk, dk, std::move(duals));
  if (!is_maximal(dd)) fail(Errc::model_inconsistency, "dual dissection is not maximal");

  // Single-crossing contract: the crossing matrix against the input must be a
  // permutation matrix.
  std::vector<int> col(n, 0);
  for (int i = 0; i < n; ++i) {
    int row = 0;
    for (int j = 0; j < n; ++j) {
      const int c = chords_cross(d.disk, dd.arcs[i], d.arcs[j]).interior;
      row += c;
      col[j] += c;
    }
    if (row != 1)
      fail(Errc::model_inconsistency, "dual arc " + chord_str(dd.arcs[i]) +
                                          " crosses " + std::to_string(row) + " input arcs");
  }
  for (int j = 0; j < n; ++j)
    if (col[j] != 1)
      fail(Errc::model_inconsistency, "input arc " + chord_str(d.arcs[j]) +
                                          " is crossed by " + std::to_string(col[j]) +
                                          " dual arcs");
  return dd;
}

}  // namespace silt
