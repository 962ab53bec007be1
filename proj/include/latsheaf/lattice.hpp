#ifndef LATSHEAF_LATTICE_HPP
#define LATSHEAF_LATTICE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latsheaf/core.hpp"

namespace latsheaf {

// A finite bounded lattice over a named carrier. Elements are indices into
// `names`; `leq` is the full order relation (row-major, leq[x*n+y] means
// x <= y); meet/join are total tables. Instances are immutable after
// construction and safe to share across threads.
struct Lattice {
  std::vector<std::string> names;
  std::vector<char> leq_table;
  std::vector<Elem> meet_table;
  std::vector<Elem> join_table;
  Elem bottom = 0;
  Elem top = 0;

  int size() const { return static_cast<int>(names.size()); }
  bool leq(Elem x, Elem y) const { return leq_table[x * size() + y] != 0; }
  Elem meet(Elem x, Elem y) const { return meet_table[x * size() + y]; }
  Elem join(Elem x, Elem y) const { return join_table[x * size() + y]; }
  const std::string& name(Elem x) const { return names[x]; }

  std::optional<Elem> index_of(const std::string& nm) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == nm) return i;
    return std::nullopt;
  }
};

namespace detail {

inline std::vector<char> order_closure(int n,
                                       const std::vector<std::pair<Elem, Elem>>& pairs) {
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [a, b] : pairs) leq[a * n + b] = 1;
  // Warshall; n stays small (tables are the whole design point).
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  return leq;
}

}  // namespace detail

// Builds a lattice from a carrier and order pairs (covers or any generating
// relation; the reflexive-transitive closure is taken). Throws:
//   DuplicateElement  repeated carrier name
//   BadInput          empty carrier or pair referring to an unknown element
//   NotALattice       order not antisymmetric, or some glb/lub missing
//   NoBounds          no global minimum/maximum
inline Lattice make_lattice(const std::vector<std::string>& names,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
  require(!names.empty(), errc::bad_input, "carrier must be nonempty");
  require(static_cast<int>(names.size()) <= kMaskLimit, errc::too_large,
          "carrier exceeds " + std::to_string(kMaskLimit) + " elements");

  std::map<std::string, Elem> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    auto [_, fresh] = index.emplace(names[i], i);
    require(fresh, errc::duplicate_element, "element '" + names[i] + "' repeated");
  }

  const int n = static_cast<int>(names.size());
  std::vector<std::pair<Elem, Elem>> ipairs;
  ipairs.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    require(ia != index.end(), errc::bad_input, "unknown element '" + a + "' in order");
    require(ib != index.end(), errc::bad_input, "unknown element '" + b + "' in order");
    ipairs.emplace_back(ia->second, ib->second);
  }

  Lattice L;
  L.names = names;
  L.leq_table = detail::order_closure(n, ipairs);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      require(!(L.leq(i, j) && L.leq(j, i)), errc::not_a_lattice,
              "order identifies '" + names[i] + "' and '" + names[j] + "'");

  Elem bot = -1, top = -1;
  for (int i = 0; i < n; ++i) {
    bool is_bot = true, is_top = true;
    for (int j = 0; j < n; ++j) {
      is_bot = is_bot && L.leq(i, j);
      is_top = is_top && L.leq(j, i);
    }
    if (is_bot) bot = i;
    if (is_top) top = i;
  }
  require(bot >= 0, errc::no_bounds, "no least element");
  require(top >= 0, errc::no_bounds, "no greatest element");
  L.bottom = bot;
  L.top = top;

  L.meet_table.assign(static_cast<std::size_t>(n) * n, 0);
  L.join_table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      Elem glb = -1, lub = -1;
      for (int z = 0; z < n; ++z) {
        if (L.leq(z, x) && L.leq(z, y) && (glb < 0 || L.leq(glb, z))) glb = z;
        if (L.leq(x, z) && L.leq(y, z) && (lub < 0 || L.leq(z, lub))) lub = z;
      }
      // The running candidate only wins if it really dominates every bound.
      for (int z = 0; z < n; ++z) {
        if (L.leq(z, x) && L.leq(z, y) && !L.leq(z, glb)) glb = -1;
        if (L.leq(x, z) && L.leq(y, z) && !L.leq(lub, z)) lub = -1;
      }
      require(glb >= 0, errc::not_a_lattice,
              "no meet for '" + names[x] + "', '" + names[y] + "'");
      require(lub >= 0, errc::not_a_lattice,
              "no join for '" + names[x] + "', '" + names[y] + "'");
      L.meet_table[x * n + y] = glb;
      L.join_table[x * n + y] = lub;
    }
  }
  return L;
}

// Strict covering pairs (x, y): x < y with nothing strictly between.
inline std::vector<std::pair<Elem, Elem>> covers(const Lattice& L) {
  std::vector<std::pair<Elem, Elem>> out;
  const int n = L.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (x == y || !L.leq(x, y)) continue;
      bool covered = true;
      for (Elem z = 0; z < n && covered; ++z)
        if (z != x && z != y && L.leq(x, z) && L.leq(z, y)) covered = false;
      if (covered) out.emplace_back(x, y);
    }
  }
  return out;
}

inline bool is_distributive(const Lattice& L) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
          return false;
  return true;
}

// Every interval [c, d] is a complemented lattice: each a in [c, d] has some
// b in [c, d] with a ^ b = c and a v b = d.
inline bool is_relatively_complemented(const Lattice& L) {
  const int n = L.size();
  for (Elem c = 0; c < n; ++c) {
    for (Elem d = 0; d < n; ++d) {
      if (!L.leq(c, d)) continue;
      for (Elem a = 0; a < n; ++a) {
        if (!L.leq(c, a) || !L.leq(a, d)) continue;
        bool found = false;
        for (Elem b = 0; b < n && !found; ++b)
          found = L.leq(c, b) && L.leq(b, d) && L.meet(a, b) == c && L.join(a, b) == d;
        if (!found) return false;
      }
    }
  }
  return true;
}

inline bool is_join_irreducible(const Lattice& L, Elem x) {
  if (x == L.bottom) return false;
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      if (L.join(a, b) == x && a != x && b != x) return false;
  return true;
}

inline bool is_meet_irreducible(const Lattice& L, Elem x) {
  if (x == L.top) return false;
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      if (L.meet(a, b) == x && a != x && b != x) return false;
  return true;
}

// Join-irreducible elements in carrier order.
inline std::vector<Elem> join_irreducibles(const Lattice& L) {
  std::vector<Elem> out;
  for (Elem x = 0; x < L.size(); ++x)
    if (is_join_irreducible(L, x)) out.push_back(x);
  return out;
}

// Checks that `f` (a total map src elem -> tgt elem) preserves meet, join and
// both bounds.
inline bool is_lattice_homomorphism(const std::vector<Elem>& f, const Lattice& src,
                                    const Lattice& tgt) {
  if (static_cast<int>(f.size()) != src.size()) return false;
  for (Elem v : f)
    if (v < 0 || v >= tgt.size()) return false;
  if (f[src.bottom] != tgt.bottom || f[src.top] != tgt.top) return false;
  for (Elem x = 0; x < src.size(); ++x)
    for (Elem y = 0; y < src.size(); ++y)
      if (f[src.meet(x, y)] != tgt.meet(f[x], f[y]) ||
          f[src.join(x, y)] != tgt.join(f[x], f[y]))
        return false;
  return true;
}

// Direct product. Tuples are enumerated with the first factor varying slowest
// and named "(a,b,...)". A single-factor product is the factor itself.
inline Lattice product(const std::vector<Lattice>& factors) {
  require(!factors.empty(), errc::bad_input, "product needs at least one factor");
  if (factors.size() == 1) return factors[0];

  long long total = 1;
  for (const auto& F : factors) {
    total *= F.size();
    require(total <= kMaskLimit, errc::too_large, "product carrier exceeds 64 elements");
  }
  const int n = static_cast<int>(total);
  const int k = static_cast<int>(factors.size());

  // tuple(i) decodes index i into one coordinate per factor.
  auto tuple = [&](int i) {
    std::vector<Elem> t(k);
    for (int f = k - 1; f >= 0; --f) {
      t[f] = i % factors[f].size();
      i /= factors[f].size();
    }
    return t;
  };
  auto encode = [&](const std::vector<Elem>& t) {
    int i = 0;
    for (int f = 0; f < k; ++f) i = i * factors[f].size() + t[f];
    return i;
  };

  Lattice P;
  P.names.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto t = tuple(i);
    std::string nm = "(";
    for (int f = 0; f < k; ++f) {
      if (f) nm += ",";
      nm += factors[f].name(t[f]);
    }
    nm += ")";
    P.names.push_back(std::move(nm));
  }
  P.leq_table.assign(static_cast<std::size_t>(n) * n, 0);
  P.meet_table.assign(static_cast<std::size_t>(n) * n, 0);
  P.join_table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    auto ti = tuple(i);
    for (int j = 0; j < n; ++j) {
      auto tj = tuple(j);
      bool le = true;
      std::vector<Elem> tm(k), tv(k);
      for (int f = 0; f < k; ++f) {
        le = le && factors[f].leq(ti[f], tj[f]);
        tm[f] = factors[f].meet(ti[f], tj[f]);
        tv[f] = factors[f].join(ti[f], tj[f]);
      }
      P.leq_table[i * n + j] = le ? 1 : 0;
      P.meet_table[i * n + j] = encode(tm);
      P.join_table[i * n + j] = encode(tv);
    }
  }
  std::vector<Elem> bot(k), top(k);
  for (int f = 0; f < k; ++f) {
    bot[f] = factors[f].bottom;
    top[f] = factors[f].top;
  }
  P.bottom = encode(bot);
  P.top = encode(top);
  return P;
}

namespace detail {

// Pruning signature for isomorphism search: any order isomorphism preserves
// all of these.
struct ElemProfile {
  int below = 0;
  int above = 0;
  int covers_up = 0;
  int covers_down = 0;
  bool ji = false;
  bool mi = false;

  bool operator==(const ElemProfile&) const = default;
};

inline std::vector<ElemProfile> profiles(const Lattice& L) {
  const int n = L.size();
  std::vector<ElemProfile> ps(n);
  auto cov = covers(L);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (L.leq(y, x)) ++ps[x].below;
      if (L.leq(x, y)) ++ps[x].above;
    }
    ps[x].ji = is_join_irreducible(L, x);
    ps[x].mi = is_meet_irreducible(L, x);
  }
  for (auto [a, b] : cov) {
    ++ps[a].covers_up;
    ++ps[b].covers_down;
  }
  return ps;
}

inline bool extend_isomorphism(const Lattice& A, const Lattice& B,
                               const std::vector<ElemProfile>& pa,
                               const std::vector<ElemProfile>& pb,
                               std::vector<Elem>& image, std::vector<char>& used,
                               Elem next) {
  const int n = A.size();
  if (next == n) return true;
  for (Elem cand = 0; cand < n; ++cand) {
    if (used[cand] || !(pa[next] == pb[cand])) continue;
    bool ok = true;
    for (Elem prev = 0; prev < next && ok; ++prev)
      ok = A.leq(prev, next) == B.leq(image[prev], cand) &&
           A.leq(next, prev) == B.leq(cand, image[prev]);
    if (!ok) continue;
    image[next] = cand;
    used[cand] = 1;
    if (extend_isomorphism(A, B, pa, pb, image, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace detail

// Searches for a lattice isomorphism A -> B; returns the image table of the
// first one in search order, or nullopt. An order isomorphism between
// lattices already preserves meet and join, so only the order is matched.
inline std::optional<std::vector<Elem>> find_isomorphism(const Lattice& A,
                                                         const Lattice& B) {
  if (A.size() != B.size()) return std::nullopt;
  auto pa = detail::profiles(A);
  auto pb = detail::profiles(B);
  {
    auto sa = pa;
    auto sb = pb;
    auto key = [](const detail::ElemProfile& p) {
      return std::tuple(p.below, p.above, p.covers_up, p.covers_down, p.ji, p.mi);
    };
    auto lt = [&](const auto& x, const auto& y) { return key(x) < key(y); };
    std::sort(sa.begin(), sa.end(), lt);
    std::sort(sb.begin(), sb.end(), lt);
    if (sa != sb) return std::nullopt;
  }
  std::vector<Elem> image(A.size(), -1);
  std::vector<char> used(A.size(), 0);
  if (!detail::extend_isomorphism(A, B, pa, pb, image, used, 0)) return std::nullopt;
  return image;
}

inline bool isomorphic(const Lattice& A, const Lattice& B) {
  return find_isomorphism(A, B).has_value();
}

// Convenience builders used all over the tests and the bundled corpora.
inline Lattice chain(int n) {
  require(n >= 1, errc::bad_input, "chain needs at least one element");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(names[i], names[i + 1]);
  return make_lattice(names, pairs);
}

// Boolean cube 2^k ordered by bitwise inclusion; element names are subset
// strings over a..h ("{}" for bottom).
inline Lattice boolean_lattice(int k) {
  require(k >= 0 && k <= 6, errc::bad_input, "boolean_lattice supports 0..6 atoms");
  const int n = 1 << k;
  std::vector<std::string> names;
  for (int m = 0; m < n; ++m) {
    std::string nm = "{";
    for (int i = 0; i < k; ++i)
      if (m & (1 << i)) {
        if (nm.size() > 1) nm += ",";
        nm += static_cast<char>('a' + i);
      }
    nm += "}";
    names.push_back(std::move(nm));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < k; ++i)
      if (!(m & (1 << i))) pairs.emplace_back(names[m], names[m | (1 << i)]);
  return make_lattice(names, pairs);
}

}  // namespace latsheaf

#endif  // LATSHEAF_LATTICE_HPP
