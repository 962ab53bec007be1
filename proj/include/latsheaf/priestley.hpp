#ifndef LATSHEAF_PRIESTLEY_HPP
#define LATSHEAF_PRIESTLEY_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "latsheaf/congruences.hpp"
#include "latsheaf/core.hpp"
#include "latsheaf/ideals.hpp"
#include "latsheaf/lattice.hpp"

namespace latsheaf {

// The dual space of a bounded distributive lattice: points are the prime
// ideals ordered by inclusion, and the topology is generated by the sets
//   N_a = { P : a not in P }
// together with their complements. Point masks live over the source carrier;
// open/base masks live over the point list. Finite spaces are discrete, but
// the base is kept explicit because sections and continuity are defined
// through it.
struct Spectrum {
  Lattice source;
  std::vector<Mask> points;             // prime ideals, canonical order
  std::vector<char> point_leq;          // inclusion, row-major over points
  std::vector<Mask> basic_n;            // basic_n[a] = { p : a not in points[p] }

  int point_count() const { return static_cast<int>(points.size()); }
  bool leq(int p, int q) const { return point_leq[p * point_count() + q] != 0; }

  std::string point_name(int p) const {
    std::string nm = "{";
    bool first = true;
    for (Elem x = 0; x < source.size(); ++x)
      if (mask_has(points[p], x)) {
        if (!first) nm += ",";
        nm += source.name(x);
        first = false;
      }
    return nm + "}";
  }
};

inline Spectrum spectrum(const Lattice& L) {
  require(is_distributive(L), errc::not_distributive,
          "spectrum requires a distributive lattice");
  Spectrum S;
  S.source = L;
  S.points = prime_ideals(L);
  const int k = S.point_count();
  require(k <= kMaskLimit, errc::too_large, "more than 64 spectrum points");
  S.point_leq.assign(static_cast<std::size_t>(k) * k, 0);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      S.point_leq[p * k + q] = (S.points[p] & ~S.points[q]) == 0 ? 1 : 0;
  S.basic_n.assign(L.size(), 0);
  for (Elem a = 0; a < L.size(); ++a)
    for (int p = 0; p < k; ++p)
      if (!mask_has(S.points[p], a)) S.basic_n[a] |= mask_bit(p);
  return S;
}

// Down-sets of the point order (every subset is clopen in a finite space, so
// the clopen down-sets are just the down-sets). Listed canonically by
// (size, mask) and built into a lattice under union/intersection.
inline std::vector<Mask> downset_masks(const Spectrum& S) {
  const int k = S.point_count();
  require(k <= 16, errc::too_large, "down-set enumeration capped at 16 points");
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << k); ++m) {
    bool down = true;
    for (int p = 0; p < k && down; ++p)
      if (mask_has(m, p))
        for (int q = 0; q < k && down; ++q)
          if (S.leq(q, p) && !mask_has(m, q)) down = false;
    if (down) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (mask_size(a) != mask_size(b)) return mask_size(a) < mask_size(b);
    return a < b;
  });
  return out;
}

inline std::string openset_name(const Spectrum& S, Mask m) {
  std::string nm = "{";
  bool first = true;
  for (int p = 0; p < S.point_count(); ++p)
    if (mask_has(m, p)) {
      if (!first) nm += ";";
      nm += S.point_name(p);
      first = false;
    }
  return nm + "}";
}

// The lattice of clopen down-sets under inclusion.
inline Lattice clopen_downsets(const Spectrum& S) {
  auto sets = downset_masks(S);
  const int n = static_cast<int>(sets.size());
  require(n <= kMaskLimit, errc::too_large, "more than 64 clopen down-sets");
  Lattice L;
  for (Mask m : sets) L.names.push_back(openset_name(S, m));
  L.leq_table.assign(static_cast<std::size_t>(n) * n, 0);
  L.meet_table.assign(static_cast<std::size_t>(n) * n, 0);
  L.join_table.assign(static_cast<std::size_t>(n) * n, 0);
  auto indexof = [&](Mask m) {
    auto it = std::find(sets.begin(), sets.end(), m);
    return static_cast<int>(it - sets.begin());
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      L.leq_table[i * n + j] = (sets[i] & ~sets[j]) == 0 ? 1 : 0;
      L.meet_table[i * n + j] = indexof(sets[i] & sets[j]);
      L.join_table[i * n + j] = indexof(sets[i] | sets[j]);
    }
  L.bottom = indexof(0);
  L.top = indexof(mask_all(S.point_count()));
  return L;
}

struct RoundTrip {
  Spectrum space;
  Lattice downsets;
  std::vector<Elem> witness;   // a -> index of N_a in the down-set lattice
  bool homomorphism = false;
  bool injective = false;
  bool surjective = false;
  bool isomorphic = false;
};

// Rebuilds a distributive lattice from its spectrum and checks that
// a -> N_a is an isomorphism onto the clopen down-sets.
inline RoundTrip birkhoff_roundtrip(const Lattice& L) {
  RoundTrip R;
  R.space = spectrum(L);
  R.downsets = clopen_downsets(R.space);
  auto sets = downset_masks(R.space);

  R.witness.assign(L.size(), -1);
  for (Elem a = 0; a < L.size(); ++a) {
    auto it = std::find(sets.begin(), sets.end(), R.space.basic_n[a]);
    if (it != sets.end()) R.witness[a] = static_cast<Elem>(it - sets.begin());
  }
  bool total = std::all_of(R.witness.begin(), R.witness.end(),
                           [](Elem v) { return v >= 0; });
  R.homomorphism = total && is_lattice_homomorphism(R.witness, L, R.downsets);
  std::vector<Elem> sorted = R.witness;
  std::sort(sorted.begin(), sorted.end());
  R.injective = total &&
                std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  R.surjective = total && L.size() == R.downsets.size() && R.injective;
  R.isomorphic = R.homomorphism && R.injective && R.surjective;
  return R;
}

struct SeparationReport {
  bool order_separated = true;  // p !<= q  =>  some basic N_a contains p, not q
  std::vector<std::pair<int, int>> failures;
};

// Priestley separation. Under the inclusion order (default): whenever p is
// not contained in q, some a lies in p but not in q, so the basic down-set
// N_a contains q and misses p. `dual_convention` runs the same axiom for the
// reverse order, where N_a plays the up-set role; both must hold for an
// honest spectrum.
inline SeparationReport separation_check(const Spectrum& S,
                                         bool dual_convention = false) {
  SeparationReport R;
  const int k = S.point_count();
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      if (p == q) continue;
      bool below = dual_convention ? S.leq(q, p) : S.leq(p, q);
      if (below) continue;
      bool separated = false;
      for (Elem a = 0; a < S.source.size() && !separated; ++a)
        separated = dual_convention
                        ? mask_has(S.basic_n[a], p) && !mask_has(S.basic_n[a], q)
                        : mask_has(S.basic_n[a], q) && !mask_has(S.basic_n[a], p);
      if (!separated) {
        R.order_separated = false;
        R.failures.emplace_back(p, q);
      }
    }
  return R;
}

// Dual of a bounded-lattice homomorphism h : L -> M, i.e. the point map
// Spec(M) -> Spec(L), P -> h^{-1}(P). Preimages of primes are prime; the
// check is kept as a guard and throws NotPrime if it ever trips.
inline std::vector<int> dual_of_lattice_hom(const std::vector<Elem>& h,
                                            const Spectrum& SL, const Spectrum& SM) {
  require(is_lattice_homomorphism(h, SL.source, SM.source), errc::bad_input,
          "not a bounded-lattice homomorphism");
  std::vector<int> out(SM.point_count(), -1);
  for (int q = 0; q < SM.point_count(); ++q) {
    Mask pre = 0;
    for (Elem a = 0; a < SL.source.size(); ++a)
      if (mask_has(SM.points[q], h[a])) pre |= mask_bit(a);
    auto it = std::find(SL.points.begin(), SL.points.end(), pre);
    require(it != SL.points.end(), errc::not_prime,
            "preimage of a prime ideal is not prime");
    out[q] = static_cast<int>(it - SL.points.begin());
  }
  return out;
}

namespace detail {

inline std::vector<Mask> close_pairwise(std::vector<Mask> work, bool use_union,
                                        int limit) {
  std::set<Mask> seen(work.begin(), work.end());
  work.assign(seen.begin(), seen.end());
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Mask m = use_union ? (work[i] | work[j]) : (work[i] & work[j]);
      if (seen.insert(m).second) {
        require(static_cast<int>(seen.size()) <= limit, errc::too_large,
                "topology enumeration exceeds " + std::to_string(limit) + " sets");
        work.push_back(m);
      }
    }
  std::sort(work.begin(), work.end(), [](Mask a, Mask b) {
    if (mask_size(a) != mask_size(b)) return mask_size(a) < mask_size(b);
    return a < b;
  });
  return work;
}

}  // namespace detail

// Basic opens: finite intersections of the subbase sets N_a and their
// complements (the whole space is the empty intersection).
inline std::vector<Mask> basic_open_masks(const Spectrum& S, int limit = 1 << 20) {
  const int k = S.point_count();
  std::vector<Mask> sub;
  sub.push_back(mask_all(k));
  for (Elem a = 0; a < S.source.size(); ++a) {
    sub.push_back(S.basic_n[a]);
    sub.push_back(~S.basic_n[a] & mask_all(k));
  }
  return detail::close_pairwise(std::move(sub), false, limit);
}

// All opens: unions of basic opens, plus the empty set.
inline std::vector<Mask> open_masks(const Spectrum& S, int limit = 1 << 20) {
  std::vector<Mask> basics = basic_open_masks(S, limit);
  basics.push_back(0);
  return detail::close_pairwise(std::move(basics), true, limit);
}

}  // namespace latsheaf

#endif  // LATSHEAF_PRIESTLEY_HPP
