#include "silt/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <string>

#include "silt/algebra.hpp"

namespace silt {

namespace {

BigInt binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

// Small dynamic bitset over the slalom indices.
struct Mask {
  std::vector<uint64_t> w;

  explicit Mask(int bits) : w((bits + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  Mask and_not(const Mask& o) const {
    Mask r = *this;
    for (size_t k = 0; k < w.size(); ++k) r.w[k] &= ~o.w[k];
    return r;
  }
  int next_bit(int from) const {
    for (int k = from >> 6; k < static_cast<int>(w.size()); ++k) {
      uint64_t word = w[k];
      if (k == (from >> 6)) word &= ~uint64_t{0} << (from & 63);
      if (word) return k * 64 + std::countr_zero(word);
    }
    return -1;
  }
};

struct Lattice {
  int n = 0, d = 1;
  std::vector<SlalomPair> slaloms;
  std::vector<Mask> conflict;  // interior intersections
};

Lattice build_lattice(int n, int d) {
  Lattice L;
  L.n = n;
  L.d = d;
  L.slaloms = enumerate_slaloms_An(n, d);
  const int S = static_cast<int>(L.slaloms.size());
  L.conflict.assign(S, Mask(std::max(S, 1)));
  for (int i = 0; i < S; ++i) {
    for (int j = i + 1; j < S; ++j) {
      if (strictly_interleaved(xrank(L.slaloms[i].a), xrank(L.slaloms[i].b),
                               xrank(L.slaloms[j].a), xrank(L.slaloms[j].b))) {
        L.conflict[i].set(j);
        L.conflict[j].set(i);
      }
    }
  }
  return L;
}

void check_guard(const Lattice& L, const EnumerateOptions& opts) {
  const int S = static_cast<int>(L.slaloms.size());
  if (S > opts.max_slaloms)
    fail(Errc::size_limit, std::to_string(S) + " slaloms exceed the search guard of " +
                               std::to_string(opts.max_slaloms) +
                               "; use the count-only methods instead");
  const BigInt predicted = fuss_catalan(L.n, L.d);
  if (predicted > opts.max_collections)
    fail(Errc::size_limit, "predicted " + predicted.str() +
                               " collections exceed the output guard; use the count-only methods");
}

// Depth-first search over canonical index order; collections come out in
// lexicographic order.
template <class Emit>
void search_from(const Lattice& L, int first, Emit&& emit) {
  const int S = static_cast<int>(L.slaloms.size());
  std::vector<int> chosen{first};
  std::function<void(const Mask&, int, int)> rec = [&](const Mask& allowed, int from, int need) {
    if (need == 0) {
      emit(chosen);
      return;
    }
    for (int i = allowed.next_bit(from); i != -1; i = allowed.next_bit(i + 1)) {
      if (S - i < need) break;
      chosen.push_back(i);
      rec(allowed.and_not(L.conflict[i]), i + 1, need - 1);
      chosen.pop_back();
    }
  };
  Mask all(S);
  for (int i = 0; i < S; ++i) all.set(i);
  rec(all.and_not(L.conflict[first]), first + 1, L.n - 1);
}

template <class Emit>
void search_all(const Lattice& L, const EnumerateOptions& opts, Emit&& emit) {
  const int S = static_cast<int>(L.slaloms.size());
  if (L.n == 0) {
    emit(std::vector<int>{});
    return;
  }
  if (S < L.n) return;
  const int last_first = S - L.n;
  if (opts.threads <= 1) {
    for (int first = 0; first <= last_first; ++first)
      search_from(L, first, emit);
    return;
  }
  // Split on the first member; merging in first order keeps the output
  // identical to the sequential run.
  std::vector<std::future<std::vector<std::vector<int>>>> tasks;
  for (int first = 0; first <= last_first; ++first) {
    tasks.push_back(std::async(std::launch::async, [&L, first] {
      std::vector<std::vector<int>> acc;
      search_from(L, first, [&](const std::vector<int>& c) { acc.push_back(c); });
      return acc;
    }));
  }
  for (auto& t : tasks)
    for (auto& c : t.get()) emit(c);
}

}  // namespace

std::vector<SlalomPair> enumerate_slaloms_An(int n, int d) {
  if (n < 0 || d < 1) fail(Errc::precondition, "enumeration needs n >= 0 and d >= 1");
  if (n == 0) return {};

  auto [disk, diss] = fan_dissection_linear_An(n);
  SlalomModel model(std::move(diss), d);
  const auto pts = model.refined().window_points();

  std::vector<SlalomPair> out;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i].cluster == pts[j].cluster) continue;
      CrossArc g = model.cross_arc(pts[i], pts[j]);
      if (model.is_slalom(g) && model.in_window(g)) out.push_back({pts[i], pts[j]});
    }
  }

  long long apex = 0, offset = 0;
  for (const SlalomPair& sp : out) {
    if (sp.a.cluster == 0 && sp.b.index == sp.a.index)
      ++apex;
    else if (sp.a.cluster >= 1 && sp.a.cluster < sp.b.cluster && sp.b.index == sp.a.index + 1)
      ++offset;
    else
      fail(Errc::model_inconsistency, "slalom outside the two census shapes");
  }
  const long long want_apex = static_cast<long long>(d) * n;
  const long long want_offset = static_cast<long long>(d - 1) * n * (n - 1) / 2;
  if (apex != want_apex || offset != want_offset)
    fail(Errc::model_inconsistency,
         "slalom census mismatch: " + std::to_string(apex) + "+" + std::to_string(offset) +
             " found, " + std::to_string(want_apex) + "+" + std::to_string(want_offset) +
             " expected");
  return out;
}

std::vector<std::vector<SlalomPair>> enumerate_silting_An(int n, int d,
                                                          const EnumerateOptions& opts) {
  if (n == 0) return {{}};
  Lattice L = build_lattice(n, d);
  check_guard(L, opts);
  const int S = static_cast<int>(L.slaloms.size());

  std::vector<std::vector<SlalomPair>> out;
  std::vector<std::vector<int>> raw;
  search_all(L, opts, [&](const std::vector<int>& c) { raw.push_back(c); });

  Mask full(std::max(S, 1));
  for (int i = 0; i < S; ++i) full.set(i);
  for (const auto& c : raw) {
    // maximality: members plus their conflicts must cover every slalom
    Mask covered(std::max(S, 1));
    for (int i : c) {
      covered.set(i);
      for (int j = 0; j < S; ++j)
        if (L.conflict[i].test(j)) covered.set(j);
    }
    for (int j = 0; j < S; ++j)
      if (!covered.test(j))
        fail(Errc::model_inconsistency, "enumerated collection is not maximal");
    std::vector<SlalomPair> coll;
    coll.reserve(c.size());
    for (int i : c) coll.push_back(L.slaloms[i]);
    out.push_back(std::move(coll));
  }
  return out;
}

BigInt count_silting_brute_force(int n, int d, const EnumerateOptions& opts) {
  if (n == 0) return 1;
  Lattice L = build_lattice(n, d);
  check_guard(L, opts);
  BigInt count = 0;
  search_all(L, opts, [&](const std::vector<int>&) { ++count; });
  return count;
}

BigInt count_recursive(int n, int d, RecursionWeight w) {
  if (n < 0 || d < 1) fail(Errc::precondition, "recursion needs n >= 0 and d >= 1");
  std::vector<BigInt> B(std::max(n + 1, 2));
  B[0] = 1;
  B[1] = d;

  std::vector<BigInt> weight(d);
  for (int k = 0; k < d; ++k) {
    if (w == RecursionWeight::hockey_stick) {
      weight[k] = binom(d, k + 1);
    } else {
      weight[k] = 0;
      for (int mm = k; mm <= d - 1; ++mm) weight[k] += binom(mm, k);
    }
  }

  // Sum over chains 2 <= i_1 < ... < i_k <= nn of the product of B at the
  // gap sizes, times B at the tail.
  auto chain_sum = [&B](int k, int nn) {
    BigInt acc = 0;
    std::function<void(int, int, const BigInt&)> go = [&](int chosen, int last,
                                                          const BigInt& prod) {
      if (chosen == k) {
        acc += prod * B[nn - last];
        return;
      }
      const int lo = (chosen == 0) ? 2 : last + 1;
      const int hi = nn - (k - chosen - 1);
      for (int i = lo; i <= hi; ++i) {
        const BigInt f = (chosen == 0) ? B[i - 2] : B[i - last - 1];
        if (f == 0) continue;
        go(chosen + 1, i, prod * f);
      }
    };
    go(0, 0, 1);
    return acc;
  };

  for (int nn = 2; nn <= n; ++nn) {
    BigInt total = weight[0] * B[nn - 1];
    for (int k = 1; k <= d - 1; ++k) total += weight[k] * chain_sum(k, nn);
    B[nn] = total;
  }
  return B[n];
}

BigInt count_trees(int internal_nodes, int d) {
  if (internal_nodes < 0 || d < 1)
    fail(Errc::precondition, "tree count needs internal_nodes >= 0 and d >= 1");
  std::vector<BigInt> t(internal_nodes + 1);
  t[0] = 1;
  for (int m = 1; m <= internal_nodes; ++m) {
    // d-fold convolution of t evaluated at m-1: one child forest per root slot
    std::vector<BigInt> layer(m, 0), next(m, 0);
    layer[0] = 1;
    for (int j = 0; j < d; ++j) {
      std::fill(next.begin(), next.end(), 0);
      for (int s = 0; s < m; ++s) {
        if (layer[s] == 0) continue;
        for (int u = 0; s + u < m; ++u) next[s + u] += layer[s] * t[u];
      }
      layer.swap(next);
    }
    t[m] = layer[m - 1];
  }
  return t[internal_nodes];
}

BigInt fuss_catalan(int n, int d) {
  if (n < 0 || d < 1) fail(Errc::precondition, "closed form needs n >= 0 and d >= 1");
  const long long k = n + 1;
  const BigInt num = binom(static_cast<long long>(d) * k, k);
  const BigInt den = static_cast<long long>(d - 1) * k + 1;
  if (num % den != 0) fail(Errc::model_inconsistency, "closed form is not integral");
  return num / den;
}

CountReport verify_counts(int n, int d, bool with_brute_force, const EnumerateOptions& opts) {
  CountReport r;
  r.n = n;
  r.d = d;
  r.recursion = count_recursive(n, d);
  r.closed_form = fuss_catalan(n, d);
  r.tree_dp = count_trees(n + 1, d);
  if (with_brute_force) r.brute_force = count_silting_brute_force(n, d, opts);
  r.agree = r.recursion == r.closed_form && r.recursion == r.tree_dp &&
            (!r.brute_force || *r.brute_force == r.recursion);
  return r;
}

}  // namespace silt
