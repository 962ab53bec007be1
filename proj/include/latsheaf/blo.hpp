#ifndef LATSHEAF_BLO_HPP
#define LATSHEAF_BLO_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "latsheaf/core.hpp"
#include "latsheaf/lattice.hpp"

namespace latsheaf {

// A bounded distributive lattice with finitely many unary operators. The
// operators are kept sorted by name; op_tables[i][x] is the image of x under
// the i-th operator. The expected laws (see validate_algebra) are: each
// operator is monotone, preserves finite joins and both bounds, is
// idempotent, and dimension sets interact with meet and join by
//   dim(x v y) and dim(x ^ y) both contained in dim(x) u dim(y),
// where dim(x) = { i : f_i(x) != x }.
struct Algebra {
  Lattice lattice;
  std::vector<std::string> op_names;
  std::vector<std::vector<Elem>> op_tables;

  int size() const { return lattice.size(); }
  int op_count() const { return static_cast<int>(op_names.size()); }
  Elem apply(int op, Elem x) const { return op_tables[op][x]; }

  int op_index(const std::string& nm) const {
    for (int i = 0; i < op_count(); ++i)
      if (op_names[i] == nm) return i;
    return -1;
  }
};

inline Algebra make_algebra(Lattice L, std::vector<std::string> op_names,
                            std::vector<std::vector<Elem>> op_tables) {
  require(op_names.size() == op_tables.size(), errc::bad_input,
          "operator name/table count mismatch");
  std::vector<int> order(op_names.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return op_names[a] < op_names[b]; });
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    require(op_names[order[i]] != op_names[order[i + 1]], errc::duplicate_element,
            "operator '" + op_names[order[i]] + "' repeated");

  Algebra A;
  A.lattice = std::move(L);
  for (int i : order) {
    require(static_cast<int>(op_tables[i].size()) == A.lattice.size(), errc::bad_input,
            "operator '" + op_names[i] + "' table has wrong arity");
    for (Elem v : op_tables[i])
      require(v >= 0 && v < A.lattice.size(), errc::bad_input,
              "operator '" + op_names[i] + "' maps outside the carrier");
    A.op_names.push_back(std::move(op_names[i]));
    A.op_tables.push_back(std::move(op_tables[i]));
  }
  return A;
}

// A lattice with no operators is the degenerate (and perfectly valid) case.
inline Algebra make_algebra(Lattice L) { return make_algebra(std::move(L), {}, {}); }

// dim(x): indices of the operators that move x.
inline std::vector<int> dimension_set(const Algebra& A, Elem x) {
  std::vector<int> out;
  for (int i = 0; i < A.op_count(); ++i)
    if (A.apply(i, x) != x) out.push_back(i);
  return out;
}

struct AxiomViolation {
  std::string axiom;
  std::string witness;
};

// Checks every algebra law on every element (or pair); returns all
// violations, empty when the algebra is in order. The distributivity of the
// underlying lattice is part of the contract and reported here too.
inline std::vector<AxiomViolation> validate_algebra(const Algebra& A) {
  std::vector<AxiomViolation> out;
  const Lattice& L = A.lattice;
  const int n = L.size();

  if (!is_distributive(L)) out.push_back({"distributive", "underlying lattice"});

  for (int i = 0; i < A.op_count(); ++i) {
    const std::string& f = A.op_names[i];
    if (A.apply(i, L.bottom) != L.bottom)
      out.push_back({"normal", f + "(" + L.name(L.bottom) + ")"});
    if (A.apply(i, L.top) != L.top)
      out.push_back({"normal", f + "(" + L.name(L.top) + ")"});
    for (Elem x = 0; x < n; ++x) {
      if (A.apply(i, A.apply(i, x)) != A.apply(i, x))
        out.push_back({"idempotent", f + "(" + L.name(x) + ")"});
      for (Elem y = 0; y < n; ++y) {
        if (L.leq(x, y) && !L.leq(A.apply(i, x), A.apply(i, y)))
          out.push_back({"monotone", f + " on " + L.name(x) + " <= " + L.name(y)});
        if (A.apply(i, L.join(x, y)) != L.join(A.apply(i, x), A.apply(i, y)))
          out.push_back({"join-preserving",
                         f + "(" + L.name(x) + " v " + L.name(y) + ")"});
      }
    }
  }

  // Dimension sets of joins and meets must stay inside the union of the
  // arguments' dimension sets. The join half follows from join preservation;
  // the meet half is a genuine extra law.
  auto dim_mask = [&](Elem x) {
    Mask m = 0;
    for (int i : dimension_set(A, x)) m |= mask_bit(i);
    return m;
  };
  for (Elem x = 0; x < n; ++x) {
    Mask dx = dim_mask(x);
    for (Elem y = 0; y < n; ++y) {
      Mask u = dx | dim_mask(y);
      if ((dim_mask(L.join(x, y)) & ~u) != 0)
        out.push_back({"dimension-join", L.name(x) + " v " + L.name(y)});
      if ((dim_mask(L.meet(x, y)) & ~u) != 0)
        out.push_back({"dimension-meet", L.name(x) + " ^ " + L.name(y)});
    }
  }
  return out;
}

inline bool is_valid_algebra(const Algebra& A) { return validate_algebra(A).empty(); }

// Elements fixed by every operator whose index is in J. Returned as flags so
// carriers beyond the 64-element mask limit (section algebras) work too.
inline std::vector<char> fixed_elements(const Algebra& A, const std::vector<int>& J) {
  std::vector<char> keep(A.size(), 1);
  for (Elem x = 0; x < A.size(); ++x)
    for (int i : J)
      if (A.apply(i, x) != x) {
        keep[x] = 0;
        break;
      }
  return keep;
}

// A subalgebra presented on its own carrier plus the inclusion into the
// parent; embedding[k] is the parent element the k-th new element came from.
struct Subalgebra {
  Algebra algebra;
  std::vector<Elem> embedding;
};

namespace detail {

// Restricts A to an operator-closed sublattice given by keep flags. The
// caller guarantees closure under meet/join and every operator.
inline Subalgebra restrict_algebra(const Algebra& A, const std::vector<char>& keep) {
  std::vector<Elem> embed;
  std::vector<int> back(A.size(), -1);
  for (Elem x = 0; x < A.size(); ++x)
    if (keep[x]) {
      back[x] = static_cast<int>(embed.size());
      embed.push_back(x);
    }
  const int m = static_cast<int>(embed.size());
  auto inside = [&](Elem x, const char* what) {
    require(back[x] >= 0, errc::not_closed,
            std::string(what) + " leaves the subcarrier at '" + A.lattice.name(x) + "'");
    return back[x];
  };

  Lattice S;
  for (Elem x : embed) S.names.push_back(A.lattice.name(x));
  S.leq_table.assign(static_cast<std::size_t>(m) * m, 0);
  S.meet_table.assign(static_cast<std::size_t>(m) * m, 0);
  S.join_table.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      S.leq_table[i * m + j] = A.lattice.leq(embed[i], embed[j]) ? 1 : 0;
      S.meet_table[i * m + j] = inside(A.lattice.meet(embed[i], embed[j]), "meet");
      S.join_table[i * m + j] = inside(A.lattice.join(embed[i], embed[j]), "join");
    }
  S.bottom = inside(A.lattice.bottom, "bottom");
  S.top = inside(A.lattice.top, "top");

  std::vector<std::vector<Elem>> tables;
  for (int op = 0; op < A.op_count(); ++op) {
    std::vector<Elem> t(m);
    for (int i = 0; i < m; ++i)
      t[i] = inside(A.apply(op, embed[i]), A.op_names[op].c_str());
    tables.push_back(std::move(t));
  }
  Subalgebra R;
  R.algebra.lattice = std::move(S);
  R.algebra.op_names = A.op_names;
  R.algebra.op_tables = std::move(tables);
  R.embedding = std::move(embed);
  return R;
}

}  // namespace detail

// The center: elements fixed by every operator. Join preservation plus the
// dimension law for meets make this a bounded sublattice; the result keeps
// the (now trivial) operators so it is an algebra in its own right.
inline Subalgebra center(const Algebra& A) {
  std::vector<int> all;
  for (int i = 0; i < A.op_count(); ++i) all.push_back(i);
  return detail::restrict_algebra(A, fixed_elements(A, all));
}

// The neat reduct over J: elements fixed by every operator outside J, with
// only the J-operators retained. Throws NotClosed when some retained
// operator leaves the carrier (the carrier is a sublattice regardless, but
// then the reduct is not an algebra over J).
inline Subalgebra neat_reduct(const Algebra& A, const std::vector<int>& J) {
  std::vector<char> in_j(A.op_count(), 0);
  for (int i : J) {
    require(i >= 0 && i < A.op_count(), errc::bad_input, "operator index out of range");
    in_j[i] = 1;
  }
  std::vector<int> outside;
  for (int i = 0; i < A.op_count(); ++i)
    if (!in_j[i]) outside.push_back(i);

  std::vector<char> carrier = fixed_elements(A, outside);
  for (Elem x = 0; x < A.size(); ++x) {
    if (!carrier[x]) continue;
    for (int i = 0; i < A.op_count(); ++i)
      if (in_j[i] && !carrier[A.apply(i, x)])
        fail(errc::not_closed, "operator '" + A.op_names[i] + "' maps '" +
                                   A.lattice.name(x) + "' to '" +
                                   A.lattice.name(A.apply(i, x)) +
                                   "', which is moved by an operator outside J");
  }

  Subalgebra R = detail::restrict_algebra(A, carrier);
  // Drop the operators outside J (they act as the identity here anyway).
  Algebra& B = R.algebra;
  std::vector<std::string> keep_names;
  std::vector<std::vector<Elem>> keep_tables;
  for (int i = 0; i < B.op_count(); ++i)
    if (in_j[i]) {
      keep_names.push_back(B.op_names[i]);
      keep_tables.push_back(B.op_tables[i]);
    }
  B.op_names = std::move(keep_names);
  B.op_tables = std::move(keep_tables);
  return R;
}

// Operator-respecting homomorphisms. Operators are matched by name; every
// operator of the source must exist in the target and commute with f.
inline bool is_algebra_homomorphism(const std::vector<Elem>& f, const Algebra& A,
                                    const Algebra& B) {
  if (!is_lattice_homomorphism(f, A.lattice, B.lattice)) return false;
  for (int i = 0; i < A.op_count(); ++i) {
    int j = B.op_index(A.op_names[i]);
    if (j < 0) return false;
    for (Elem x = 0; x < A.size(); ++x)
      if (f[A.apply(i, x)] != B.apply(j, f[x])) return false;
  }
  return true;
}

// Conformal maps: homomorphisms carrying the center into the center.
inline bool is_conformal(const std::vector<Elem>& f, const Algebra& A,
                         const Algebra& B) {
  if (!is_algebra_homomorphism(f, A, B)) return false;
  auto all_ops = [](const Algebra& X) {
    std::vector<int> idx(X.op_count());
    for (int i = 0; i < X.op_count(); ++i) idx[i] = i;
    return idx;
  };
  auto za = fixed_elements(A, all_ops(A));
  auto zb = fixed_elements(B, all_ops(B));
  for (Elem x = 0; x < A.size(); ++x)
    if (za[x] && !zb[f[x]]) return false;
  return true;
}

// Algebra product: lattice product with operators acting componentwise.
// Operators are matched by name across factors; a factor lacking a name
// contributes the identity in that coordinate.
inline Algebra product(const std::vector<Algebra>& factors) {
  require(!factors.empty(), errc::bad_input, "product needs at least one factor");
  if (factors.size() == 1) return factors[0];

  std::vector<Lattice> ls;
  for (const auto& F : factors) ls.push_back(F.lattice);
  Lattice P = product(ls);

  std::vector<std::string> names;
  for (const auto& F : factors)
    for (const auto& nm : F.op_names)
      if (std::find(names.begin(), names.end(), nm) == names.end()) names.push_back(nm);
  std::sort(names.begin(), names.end());

  const int k = static_cast<int>(factors.size());
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

  std::vector<std::vector<Elem>> tables;
  for (const auto& nm : names) {
    std::vector<Elem> t(P.size());
    for (int i = 0; i < P.size(); ++i) {
      auto tu = tuple(i);
      for (int f = 0; f < k; ++f) {
        int op = factors[f].op_index(nm);
        if (op >= 0) tu[f] = factors[f].apply(op, tu[f]);
      }
      t[i] = encode(tu);
    }
    tables.push_back(std::move(t));
  }
  return make_algebra(std::move(P), std::move(names), std::move(tables));
}

// Isomorphism of algebras: a lattice isomorphism commuting with the (name
// matched) operators. Both algebras must carry exactly the same operator
// names.
inline std::optional<std::vector<Elem>> find_algebra_isomorphism(const Algebra& A,
                                                                 const Algebra& B) {
  if (A.op_names != B.op_names) return std::nullopt;
  if (A.size() != B.size()) return std::nullopt;
  auto pa = detail::profiles(A.lattice);
  auto pb = detail::profiles(B.lattice);

  // Reuse the order-matching backtracker, then filter on operators. The
  // search space is tiny at the sizes this library targets, so retrying all
  // order isomorphisms is fine.
  const int n = A.size();
  std::vector<Elem> image(n, -1);
  std::vector<char> used(n, 0);
  std::optional<std::vector<Elem>> found;

  auto ops_ok = [&](const std::vector<Elem>& f) {
    for (int i = 0; i < A.op_count(); ++i)
      for (Elem x = 0; x < n; ++x)
        if (f[A.apply(i, x)] != B.apply(i, f[x])) return false;
    return true;
  };

  auto rec = [&](auto&& self, Elem next) -> bool {
    if (next == n) return ops_ok(image);
    for (Elem cand = 0; cand < n; ++cand) {
      if (used[cand] || !(pa[next] == pb[cand])) continue;
      bool ok = true;
      for (Elem prev = 0; prev < next && ok; ++prev)
        ok = A.lattice.leq(prev, next) == B.lattice.leq(image[prev], cand) &&
             A.lattice.leq(next, prev) == B.lattice.leq(cand, image[prev]);
      if (!ok) continue;
      image[next] = cand;
      used[cand] = 1;
      if (self(self, next + 1)) return true;
      used[cand] = 0;
    }
    return false;
  };
  if (rec(rec, 0)) found = image;
  return found;
}

inline bool isomorphic(const Algebra& A, const Algebra& B) {
  return find_algebra_isomorphism(A, B).has_value();
}

}  // namespace latsheaf

#endif  // LATSHEAF_BLO_HPP
