#ifndef LATSHEAF_ENUMERATE_HPP
#define LATSHEAF_ENUMERATE_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "latsheaf/blo.hpp"
#include "latsheaf/classify.hpp"
#include "latsheaf/core.hpp"
#include "latsheaf/lattice.hpp"

namespace latsheaf {

// A bare reflexive-transitive-antisymmetric relation, used only during
// enumeration; leq is row-major, leq[i*n+j] meaning i <= j.
struct Poset {
  int n = 0;
  std::vector<char> leq;

  bool le(int i, int j) const { return leq[static_cast<std::size_t>(i) * n + j] != 0; }
};

namespace detail {

// Canonical key: the lexicographically least relation matrix over all
// relabelings. Isomorphisms preserve the per-element profile below, so only
// permutations within equal-profile blocks need to be tried.
inline std::string poset_key(const Poset& P) {
  const int n = P.n;
  std::vector<std::vector<int>> profile(n);
  for (int i = 0; i < n; ++i) {
    int down = 0, up = 0;
    for (int j = 0; j < n; ++j) {
      if (P.le(j, i)) ++down;
      if (P.le(i, j)) ++up;
    }
    profile[i] = {down, up};
  }
  // One refinement round: append the sorted profiles of strict neighbors.
  std::vector<std::vector<int>> refined(n);
  for (int i = 0; i < n; ++i) {
    refined[i] = profile[i];
    std::vector<std::vector<int>> below, above;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (P.le(j, i)) below.push_back(profile[j]);
      if (P.le(i, j)) above.push_back(profile[j]);
    }
    std::sort(below.begin(), below.end());
    std::sort(above.begin(), above.end());
    for (auto& v : below) refined[i].insert(refined[i].end(), v.begin(), v.end());
    refined[i].push_back(-1);
    for (auto& v : above) refined[i].insert(refined[i].end(), v.begin(), v.end());
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return refined[a] < refined[b]; });

  std::vector<std::pair<int, int>> groups;  // [first, last) runs of equal profile
  int start = 0;
  for (int i = 1; i <= n; ++i)
    if (i == n || refined[order[i]] != refined[order[start]]) {
      // next_permutation enumerates the full cycle only from the sorted start.
      std::sort(order.begin() + start, order.begin() + i);
      groups.emplace_back(start, i);
      start = i;
    }

  std::string best;
  std::string key(static_cast<std::size_t>(n) * n, '0');
  for (;;) {
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        key[static_cast<std::size_t>(p) * n + q] = P.le(order[p], order[q]) ? '1' : '0';
    if (best.empty() || key < best) best = key;

    // Odometer over within-group permutations.
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      auto first = order.begin() + groups[g].first;
      auto last = order.begin() + groups[g].second;
      if (std::next_permutation(first, last)) break;
    }
    if (g == groups.size()) break;
  }
  return best;
}

inline std::vector<Mask> poset_downsets(const Poset& P) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << P.n); ++m) {
    bool down = true;
    for (int j = 0; j < P.n && down; ++j)
      if (mask_has(m, j))
        for (int i = 0; i < P.n; ++i)
          if (P.le(i, j) && !mask_has(m, i)) {
            down = false;
            break;
          }
    if (down) out.push_back(m);
  }
  return out;
}

}  // namespace detail

// All posets with 1..max_n elements, one representative per isomorphism
// class, in a deterministic order. Built by repeatedly adjoining a new
// maximal element above a downset: removing any maximal element shows every
// poset arises this way.
inline std::vector<Poset> posets_up_to(int max_n) {
  require(max_n >= 1 && max_n <= 7, errc::too_large,
          "poset enumeration supported up to 7 elements");
  std::vector<Poset> out;
  std::vector<Poset> level;
  {
    Poset one;
    one.n = 1;
    one.leq = {1};
    level.push_back(one);
  }
  out.insert(out.end(), level.begin(), level.end());

  for (int n = 2; n <= max_n; ++n) {
    std::vector<Poset> next;
    std::set<std::string> seen;
    for (const Poset& P : level)
      for (Mask d : detail::poset_downsets(P)) {
        Poset Q;
        Q.n = n;
        Q.leq.assign(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < P.n; ++i)
          for (int j = 0; j < P.n; ++j)
            Q.leq[static_cast<std::size_t>(i) * n + j] = P.leq[static_cast<std::size_t>(i) * P.n + j];
        Q.leq[static_cast<std::size_t>(n - 1) * n + (n - 1)] = 1;
        for (int i = 0; i < P.n; ++i)
          if (mask_has(d, i)) Q.leq[static_cast<std::size_t>(i) * n + (n - 1)] = 1;
        if (seen.insert(detail::poset_key(Q)).second) next.push_back(Q);
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

inline bool poset_is_lattice(const Poset& P) {
  const int n = P.n;
  auto bound = [&](int a, int b, bool lower) {
    int best = -1;
    for (int c = 0; c < n; ++c) {
      bool ok = lower ? (P.le(c, a) && P.le(c, b)) : (P.le(a, c) && P.le(b, c));
      if (!ok) continue;
      if (best < 0)
        best = c;
      else if (lower ? P.le(best, c) : P.le(c, best))
        best = c;
    }
    if (best < 0) return false;
    for (int c = 0; c < n; ++c) {
      bool ok = lower ? (P.le(c, a) && P.le(c, b)) : (P.le(a, c) && P.le(b, c));
      if (ok && !(lower ? P.le(c, best) : P.le(best, c))) return false;
    }
    return true;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!bound(a, b, true) || !bound(a, b, false)) return false;
  // Pairwise bounds in a finite poset force a bottom and a top iff n >= 1.
  return n >= 1;
}

inline Lattice lattice_from_poset(const Poset& P) {
  std::vector<std::string> names(P.n);
  for (int i = 0; i < P.n; ++i) names[i] = "x" + std::to_string(i);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j)
      if (i != j && P.le(i, j)) pairs.emplace_back(names[i], names[j]);
  return make_lattice(names, pairs);
}

// The lattice of downsets of P ordered by inclusion (Birkhoff). Element
// names spell out the downset, e.g. "{0,2}".
inline Lattice downset_lattice(const Poset& P) {
  auto downs = detail::poset_downsets(P);
  std::sort(downs.begin(), downs.end(), [](Mask a, Mask b) {
    auto ka = mask_size(a), kb = mask_size(b);
    return ka != kb ? ka < kb : a < b;
  });
  std::vector<std::string> names;
  for (Mask m : downs) {
    std::string s = "{";
    for (int i = 0; i < P.n; ++i)
      if (mask_has(m, i)) {
        if (s.size() > 1) s += ",";
        s += std::to_string(i);
      }
    s += "}";
    names.push_back(s);
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t a = 0; a < downs.size(); ++a)
    for (std::size_t b = 0; b < downs.size(); ++b)
      if (a != b && (downs[a] & ~downs[b]) == 0)
        pairs.emplace_back(names[a], names[b]);
  return make_lattice(names, pairs);
}

// Every lattice with 1..max_n elements up to isomorphism (poset enumeration
// filtered by existence of meets and joins).
inline std::vector<Lattice> all_lattices_up_to(int max_n) {
  std::vector<Lattice> out;
  for (const Poset& P : posets_up_to(max_n))
    if (poset_is_lattice(P)) out.push_back(lattice_from_poset(P));
  std::stable_sort(out.begin(), out.end(),
                   [](const Lattice& a, const Lattice& b) { return a.size() < b.size(); });
  return out;
}

// Every bounded distributive lattice with 1..max_n elements up to
// isomorphism. Generated as downset lattices: P -> O(P) is a bijection
// between poset and distributive-lattice isomorphism classes, so no second
// deduplication pass is needed.
inline std::vector<Lattice> distributive_lattices_up_to(int max_n) {
  require(max_n >= 1, errc::bad_input, "max_n must be positive");
  std::vector<Lattice> out;
  Poset empty;
  empty.n = 0;
  out.push_back(downset_lattice(empty));  // the one-element lattice
  if (max_n >= 2)
    for (const Poset& P : posets_up_to(std::min(max_n - 1, 7)))
      if (static_cast<int>(detail::poset_downsets(P).size()) <= max_n)
        out.push_back(downset_lattice(P));
  std::stable_sort(out.begin(), out.end(),
                   [](const Lattice& a, const Lattice& b) { return a.size() < b.size(); });
  return out;
}

// ---------------------------------------------------------------------------
// The standard corpus: a fixed, deterministic family of valid algebras used
// by the property sweeps. Operators come from a small menu that keeps every
// fixed-point set meet-closed (hence every member passes validation):
//
//   cl   collapse-to-top closure: 0 -> 0, x -> 1 otherwise
//   grp  atom-group closure on the 8-element Boolean lattice ({a,b} | {c})
//   up   round-up on chains (smallest fixed element above)
//
// Plain lattices carry the empty operator family only up to size 6: with no
// operators the whole algebra is its own center, and the section algebra of
// a size-7 chain already has 6! = 720 elements with 7! at size 8, past any
// sensible desk budget. Sizes 7 and 8 are covered through the closure
// signatures, whose centers (and section algebras) stay small.

struct CorpusEntry {
  std::string label;
  Algebra algebra;
};

namespace detail {

inline std::vector<Elem> to_top_closure(const Lattice& L) {
  std::vector<Elem> t(L.size());
  for (Elem x = 0; x < L.size(); ++x) t[x] = (x == L.bottom) ? L.bottom : L.top;
  return t;
}

// Round-up to the next member of `fixed` (which must be an upward-roundable
// subset containing both bounds); chains make the choice unique.
inline std::vector<Elem> round_up_op(const Lattice& L, const std::vector<Elem>& fixed) {
  std::vector<Elem> t(L.size());
  for (Elem x = 0; x < L.size(); ++x) {
    Elem best = L.top;
    for (Elem f : fixed)
      if (L.leq(x, f) && L.leq(f, best)) best = f;
    t[x] = best;
  }
  return t;
}

// Closure by atom groups on a Boolean lattice: x is sent to the join of all
// groups its atoms touch.
inline std::vector<Elem> group_closure(const Lattice& L,
                                       const std::vector<std::vector<Elem>>& groups) {
  std::vector<Elem> group_join(groups.size(), L.bottom);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (Elem a : groups[g]) group_join[g] = L.join(group_join[g], a);
  std::vector<Elem> t(L.size());
  for (Elem x = 0; x < L.size(); ++x) {
    Elem v = L.bottom;
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (Elem a : groups[g])
        if (L.leq(a, x)) {
          v = L.join(v, group_join[g]);
          break;
        }
    t[x] = v;
  }
  return t;
}

}  // namespace detail

inline std::vector<CorpusEntry> standard_corpus(int max_size = 8) {
  require(max_size >= 2 && max_size <= 8, errc::bad_input,
          "corpus is defined for sizes 2..8");
  std::vector<CorpusEntry> out;

  auto add = [&](const std::string& label, Algebra A) {
    for (const CorpusEntry& e : out)
      if (e.algebra.op_names == A.op_names && isomorphic(e.algebra, A)) return;
    out.push_back({label, std::move(A)});
  };

  std::vector<Lattice> dls = distributive_lattices_up_to(max_size);
  std::vector<int> index_within_size(max_size + 1, 0);
  for (const Lattice& L : dls) {
    int k = index_within_size[L.size()]++;
    std::string stem = "dl" + std::to_string(L.size()) + "_" + std::to_string(k);
    if (L.size() <= 6) add(stem, make_algebra(L, {}, {}));
    if (L.size() >= 2)
      add(stem + "_cl", make_algebra(L, {"cl"}, {detail::to_top_closure(L)}));
  }

  if (max_size >= 8) {
    Lattice b8 = boolean_lattice(3);
    std::vector<Elem> atoms = join_irreducibles(b8);
    std::vector<Elem> grp = detail::group_closure(b8, {{atoms[0], atoms[1]}, {atoms[2]}});
    add("b8_grp", make_algebra(b8, {"grp"}, {grp}));
    add("b8_cl_grp",
        make_algebra(b8, {"cl", "grp"}, {detail::to_top_closure(b8), grp}));
  }

  if (max_size >= 4) {
    Lattice c4 = chain(4);
    std::vector<Elem> up4 = detail::round_up_op(c4, {0, 2, 3});
    add("c4_up", make_algebra(c4, {"up"}, {up4}));
    add("c4_cl_up",
        make_algebra(c4, {"cl", "up"}, {detail::to_top_closure(c4), up4}));
  }
  if (max_size >= 5) {
    Lattice c5 = chain(5);
    std::vector<Elem> up5 = detail::round_up_op(c5, {0, 3, 4});
    add("c5_cl_up2",
        make_algebra(c5, {"cl", "up2"}, {detail::to_top_closure(c5), up5}));
  }

  // Small products of center-trivial indecomposables; operators missing from
  // a factor act as the identity in that coordinate.
  Algebra f2 = make_algebra(chain(2), {}, {});
  Algebra f3 = make_algebra(chain(3), {"cl"}, {detail::to_top_closure(chain(3))});
  Algebra f4 = make_algebra(chain(4), {"cl"}, {detail::to_top_closure(chain(4))});
  Algebra f22 =
      make_algebra(boolean_lattice(2), {"cl"}, {detail::to_top_closure(boolean_lattice(2))});
  if (max_size >= 6) add("p_2x3cl", product({f2, f3}));
  if (max_size >= 8) {
    add("p_2x4cl", product({f2, f4}));
    add("p_2x22cl", product({f2, f22}));
  }

  std::stable_sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    return a.algebra.size() < b.algebra.size();
  });
  return out;
}

// The factor pool for product/center experiments: corpus members that are
// directly indecomposable with two-element center.
inline std::vector<CorpusEntry> center_trivial_factors(int max_size = 4) {
  std::vector<CorpusEntry> out;
  for (CorpusEntry& e : standard_corpus()) {
    if (e.algebra.size() > max_size) continue;
    if (center(e.algebra).algebra.size() != 2) continue;
    if (!is_directly_indecomposable(e.algebra)) continue;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace latsheaf

#endif  // LATSHEAF_ENUMERATE_HPP
