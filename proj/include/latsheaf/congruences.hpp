#ifndef LATSHEAF_CONGRUENCES_HPP
#define LATSHEAF_CONGRUENCES_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "latsheaf/blo.hpp"
#include "latsheaf/core.hpp"
#include "latsheaf/ideals.hpp"
#include "latsheaf/lattice.hpp"

namespace latsheaf {

// A partition of a carrier in canonical form: block ids are assigned by
// first occurrence along the carrier, so equal partitions have equal
// block_of vectors.
struct Partition {
  std::vector<int> block_of;
  int block_count = 0;

  bool same(Elem x, Elem y) const { return block_of[x] == block_of[y]; }
  int size() const { return static_cast<int>(block_of.size()); }

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return block_of < o.block_of; }

  std::vector<std::vector<Elem>> blocks() const {
    std::vector<std::vector<Elem>> out(block_count);
    for (Elem x = 0; x < size(); ++x) out[block_of[x]].push_back(x);
    return out;
  }

  bool is_identity() const { return block_count == size(); }
  bool is_universal() const { return block_count == 1; }

  // true when every block of this partition is a union of blocks of `finer`.
  bool refines(const Partition& coarser) const {
    for (Elem x = 0; x < size(); ++x)
      for (Elem y = x + 1; y < size(); ++y)
        if (same(x, y) && !coarser.same(x, y)) return false;
    return true;
  }
};

namespace detail {

// Raw labels may come from pairing tricks and exceed n, so size the rename
// table by the largest label rather than by n.
inline Partition canonical_partition(int n, const std::vector<int>& raw) {
  Partition P;
  P.block_of.assign(n, -1);
  int top = 0;
  for (Elem x = 0; x < n; ++x) top = std::max(top, raw[x]);
  std::vector<int> rename(top + 1, -1);
  int next = 0;
  for (Elem x = 0; x < n; ++x) {
    if (rename[raw[x]] < 0) rename[raw[x]] = next++;
    P.block_of[x] = rename[raw[x]];
  }
  P.block_count = next;
  return P;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

inline Partition to_partition(UnionFind& uf) {
  std::vector<int> raw(uf.parent.size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = uf.find(static_cast<int>(i));
  return canonical_partition(static_cast<int>(raw.size()), raw);
}

}  // namespace detail

inline Partition identity_partition(int n) {
  Partition P;
  P.block_of.resize(n);
  std::iota(P.block_of.begin(), P.block_of.end(), 0);
  P.block_count = n;
  return P;
}

inline Partition universal_partition(int n) {
  Partition P;
  P.block_of.assign(n, 0);
  P.block_count = n > 0 ? 1 : 0;
  return P;
}

// Builds a partition from explicit blocks; throws NotAPartition unless the
// blocks cover the carrier exactly once.
inline Partition make_partition(int n, const std::vector<std::vector<Elem>>& blocks) {
  std::vector<int> raw(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    require(!blocks[b].empty(), errc::not_a_partition, "empty block");
    for (Elem x : blocks[b]) {
      require(x >= 0 && x < n, errc::not_a_partition, "element out of range");
      require(raw[x] < 0, errc::not_a_partition, "element in two blocks");
      raw[x] = static_cast<int>(b);
    }
  }
  for (Elem x = 0; x < n; ++x)
    require(raw[x] >= 0, errc::not_a_partition, "element in no block");
  return detail::canonical_partition(n, raw);
}

// Compatibility with meet, join and every operator.
inline bool is_congruence(const Algebra& A, const Partition& P) {
  const Lattice& L = A.lattice;
  const int n = L.size();
  if (P.size() != n) return false;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (!P.same(x, y)) continue;
      for (int i = 0; i < A.op_count(); ++i)
        if (!P.same(A.apply(i, x), A.apply(i, y))) return false;
      for (Elem c = 0; c < n; ++c)
        if (!P.same(L.meet(x, c), L.meet(y, c)) || !P.same(L.join(x, c), L.join(y, c)))
          return false;
    }
  }
  return true;
}

// Smallest congruence containing the seed pairs: union-find closure under
// meet/join translations and the operators.
inline Partition congruence_closure(const Algebra& A,
                                    const std::vector<std::pair<Elem, Elem>>& seeds) {
  const Lattice& L = A.lattice;
  const int n = L.size();
  detail::UnionFind uf(n);
  for (auto [a, b] : seeds) uf.unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = x + 1; y < n; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (int i = 0; i < A.op_count(); ++i)
          changed |= uf.unite(A.apply(i, x), A.apply(i, y));
        for (Elem c = 0; c < n; ++c) {
          changed |= uf.unite(L.meet(x, c), L.meet(y, c));
          changed |= uf.unite(L.join(x, c), L.join(y, c));
        }
      }
  }
  return detail::to_partition(uf);
}

inline Partition principal_congruence(const Algebra& A, Elem a, Elem b) {
  return congruence_closure(A, {{a, b}});
}

// Join in the congruence lattice: transitive closure of the union. The
// closure of compatible relations stays compatible, so no further repair is
// needed.
inline Partition congruence_join(const Partition& P, const Partition& Q) {
  detail::UnionFind uf(P.size());
  for (Elem x = 0; x < P.size(); ++x)
    for (Elem y = x + 1; y < P.size(); ++y)
      if (P.same(x, y) || Q.same(x, y)) uf.unite(x, y);
  return detail::to_partition(uf);
}

inline Partition congruence_meet(const Partition& P, const Partition& Q) {
  const int n = P.size();
  std::vector<int> raw(n);
  for (Elem x = 0; x < n; ++x) raw[x] = P.block_of[x] * n + Q.block_of[x];
  return detail::canonical_partition(n, raw);
}

// Every congruence is a join of principal ones, so closing the principal
// congruences (plus the identity) under binary joins yields the whole
// congruence lattice. Canonical order: by block count descending (identity
// first), then lexicographic on block_of.
inline std::vector<Partition> all_congruences(const Algebra& A, int limit = 200000) {
  const int n = A.size();
  std::set<Partition> seen;
  std::vector<Partition> work;
  auto push = [&](const Partition& P) {
    if (seen.insert(P).second) {
      require(static_cast<int>(seen.size()) <= limit, errc::too_large,
              "congruence lattice exceeds " + std::to_string(limit) + " members");
      work.push_back(P);
    }
  };
  push(identity_partition(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) push(principal_congruence(A, a, b));
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) push(congruence_join(work[i], work[j]));

  std::vector<Partition> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.block_count != b.block_count) return a.block_count > b.block_count;
    return a.block_of < b.block_of;
  });
  return out;
}

// Smallest congruence having X as one whole class: the intersection of all
// congruences with X among their classes. When no congruence has such a
// class the intersection is empty and the universal congruence is returned
// by convention.
inline Partition congruence_generated_by_class(const Algebra& A, Mask X) {
  require(X != 0, errc::bad_input, "class must be nonempty");
  const int n = A.size();
  bool found = false;
  Partition acc;
  for (const Partition& P : all_congruences(A)) {
    // X must be exactly one block.
    int blk = -1;
    bool exact = true;
    for (Elem x = 0; x < n && exact; ++x) {
      if (!mask_has(X, x)) continue;
      if (blk < 0) blk = P.block_of[x];
      exact = P.block_of[x] == blk;
    }
    if (exact && blk >= 0)
      for (Elem x = 0; x < n && exact; ++x)
        if (!mask_has(X, x) && P.block_of[x] == blk) exact = false;
    if (!exact) continue;
    acc = found ? congruence_meet(acc, P) : P;
    found = true;
  }
  return found ? acc : universal_partition(n);
}

// The congruence induced by an operator-closed ideal I with maximum m:
//   a ~ b  iff  a v m = b v m.
// Distributivity makes this meet compatible and closure under the operators
// makes it operator compatible; the check is kept as a guard against
// malformed inputs and throws NotCompatible when it trips.
inline Partition ideal_congruence(const Algebra& A, Mask I) {
  const Lattice& L = A.lattice;
  require(is_ideal(L, I), errc::bad_input, "not an ideal");
  Elem m = L.bottom;
  for (Elem x = 0; x < A.size(); ++x)
    if (mask_has(I, x)) m = L.join(m, x);

  const int n = L.size();
  std::vector<int> raw(n);
  for (Elem x = 0; x < n; ++x) raw[x] = L.join(x, m);
  Partition P = detail::canonical_partition(n, raw);
  require(is_congruence(A, P), errc::not_compatible,
          "ideal does not induce a congruence (ideal not operator-closed "
          "or lattice not distributive)");
  return P;
}

struct Quotient {
  Algebra algebra;
  std::vector<Elem> projection;  // carrier element -> block element
};

// Quotient algebra A / theta. Blocks become elements named by their member
// lists; the projection is the canonical surjection. Throws NotCompatible
// when theta is not a congruence of A.
inline Quotient quotient(const Algebra& A, const Partition& theta) {
  require(theta.size() == A.size(), errc::not_a_partition,
          "partition size does not match carrier");
  require(is_congruence(A, theta), errc::not_compatible,
          "partition is not a congruence");
  const Lattice& L = A.lattice;
  auto blocks = theta.blocks();
  const int m = theta.block_count;

  Lattice Q;
  for (const auto& blk : blocks) {
    std::string nm = "{";
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i) nm += ",";
      nm += L.name(blk[i]);
    }
    nm += "}";
    Q.names.push_back(std::move(nm));
  }
  Q.leq_table.assign(static_cast<std::size_t>(m) * m, 0);
  Q.meet_table.assign(static_cast<std::size_t>(m) * m, 0);
  Q.join_table.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Elem x = blocks[i][0], y = blocks[j][0];
      Q.meet_table[i * m + j] = theta.block_of[L.meet(x, y)];
      Q.join_table[i * m + j] = theta.block_of[L.join(x, y)];
      Q.leq_table[i * m + j] = theta.block_of[L.meet(x, y)] == i ? 1 : 0;
    }
  Q.bottom = theta.block_of[L.bottom];
  Q.top = theta.block_of[L.top];

  std::vector<std::vector<Elem>> tables;
  for (int op = 0; op < A.op_count(); ++op) {
    std::vector<Elem> t(m);
    for (int i = 0; i < m; ++i) t[i] = theta.block_of[A.apply(op, blocks[i][0])];
    tables.push_back(std::move(t));
  }

  Quotient out;
  out.algebra.lattice = std::move(Q);
  out.algebra.op_names = A.op_names;
  out.algebra.op_tables = std::move(tables);
  out.projection = theta.block_of;
  return out;
}

// Proper congruences maximal in the congruence lattice (its coatoms).
inline std::vector<Partition> maximal_congruences(const Algebra& A) {
  auto all = all_congruences(A);
  std::vector<Partition> out;
  for (const Partition& P : all) {
    if (P.is_universal()) continue;
    bool maximal = true;
    for (const Partition& Q : all)
      if (!Q.is_universal() && !(Q == P) && P.refines(Q)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(P);
  }
  return out;
}

// Exactly two congruences (forces at least two elements).
inline bool is_simple(const Algebra& A) { return all_congruences(A).size() == 2; }

// The maximal congruences intersect to the identity. Holds vacuously for the
// one-element algebra.
inline bool is_semisimple(const Algebra& A) {
  Partition acc = universal_partition(A.size());
  for (const Partition& P : maximal_congruences(A)) acc = congruence_meet(acc, P);
  return acc.is_identity();
}

struct CorrespondenceReport {
  bool distributive = false;
  bool relatively_complemented = false;
  bool predicate = false;       // distributive && relatively complemented
  int ideal_count = 0;
  int congruence_count = 0;
  bool injective = false;       // theta -> bottom-class one-to-one
  bool surjective = false;      // every ideal is some bottom-class
  bool order_isomorphic = false;
  bool correspondence = false;  // bijection preserving inclusion both ways
  bool equivalence = false;     // correspondence <-> predicate
};

// Tests whether theta -> class-of-bottom is an inclusion-preserving bijection
// from the congruences of L onto its ideals, and whether that happens exactly
// when L is distributive and relatively complemented. The bottom class of a
// congruence is always an ideal, so the map itself is total.
inline CorrespondenceReport ideal_congruence_correspondence(const Lattice& L) {
  Algebra A = make_algebra(L);
  CorrespondenceReport R;
  R.distributive = is_distributive(L);
  R.relatively_complemented = is_relatively_complemented(L);
  R.predicate = R.distributive && R.relatively_complemented;

  auto ideals = all_ideals(L);
  auto cons = all_congruences(A);
  R.ideal_count = static_cast<int>(ideals.size());
  R.congruence_count = static_cast<int>(cons.size());

  std::vector<Mask> bottoms;
  for (const Partition& P : cons) {
    Mask cls = 0;
    for (Elem x = 0; x < L.size(); ++x)
      if (P.same(x, L.bottom)) cls |= mask_bit(x);
    bottoms.push_back(cls);
  }
  std::set<Mask> distinct(bottoms.begin(), bottoms.end());
  R.injective = distinct.size() == cons.size();
  std::set<Mask> idealset(ideals.begin(), ideals.end());
  bool inside = true;
  for (Mask m : bottoms) inside = inside && idealset.count(m) > 0;
  R.surjective = inside && distinct.size() == idealset.size();

  R.order_isomorphic = R.injective && R.surjective;
  for (std::size_t i = 0; i < cons.size() && R.order_isomorphic; ++i)
    for (std::size_t j = 0; j < cons.size() && R.order_isomorphic; ++j)
      R.order_isomorphic = cons[i].refines(cons[j]) == ((bottoms[i] & ~bottoms[j]) == 0);

  R.correspondence = R.injective && R.surjective && R.order_isomorphic;
  R.equivalence = R.correspondence == R.predicate;
  return R;
}

}  // namespace latsheaf

#endif  // LATSHEAF_CONGRUENCES_HPP
