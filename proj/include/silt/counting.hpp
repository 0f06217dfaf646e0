#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "silt/slalom.hpp"

namespace silt {

using BigInt = boost::multiprecision::cpp_int;

// A slalom in the linear A_n window model, stored by its endpoint pair in
// boundary order (a before b).
struct SlalomPair {
  XPoint a, b;
  friend auto operator<=>(const SlalomPair&, const SlalomPair&) = default;
};

struct EnumerateOptions {
  int max_slaloms = 60;
  BigInt max_collections = 1'000'000;
  int threads = 1;
};

// All window slaloms of the A_n fan in canonical order. The result is checked
// against the closed-shape census (d*n arcs from the apex at equal index,
// (d-1)*n*(n-1)/2 arcs between non-apex clusters at index offset one); any
// mismatch is a hard model error.
std::vector<SlalomPair> enumerate_slaloms_An(int n, int d);

// All mutually non-crossing n-element slalom collections, each verified
// maximal, in canonical order. Guarded by the options; a predicted output
// beyond the guard raises a size-limit error suggesting the count-only path.
std::vector<std::vector<SlalomPair>> enumerate_silting_An(int n, int d,
                                                          const EnumerateOptions& opts = {});

// Count of collections by direct search, without materializing them.
BigInt count_silting_brute_force(int n, int d, const EnumerateOptions& opts = {});

enum class RecursionWeight {
  binomial_sum,  // sum_{m=k}^{d-1} C(m,k)
  hockey_stick,  // C(d,k+1), identical by the hockey-stick identity
};

// B^d_n by the cut-and-relabel recursion over strictly increasing index
// chains, with bases B_0 = 1 and B_1 = d.
BigInt count_recursive(int n, int d, RecursionWeight w = RecursionWeight::binomial_sum);

// Complete ordered d-ary trees with the given number of internal nodes.
BigInt count_trees(int internal_nodes, int d);

// Closed form C(d(n+1), n+1) / ((d-1)(n+1)+1).
BigInt fuss_catalan(int n, int d);

struct CountReport {
  int n = 0, d = 1;
  std::optional<BigInt> brute_force;
  BigInt recursion, closed_form, tree_dp;
  bool agree = false;
};

CountReport verify_counts(int n, int d, bool with_brute_force,
                          const EnumerateOptions& opts = {});

}  // namespace silt
