#ifndef LATSHEAF_CLASSIFY_HPP
#define LATSHEAF_CLASSIFY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "latsheaf/blo.hpp"
#include "latsheaf/congruences.hpp"
#include "latsheaf/core.hpp"
#include "latsheaf/ideals.hpp"
#include "latsheaf/sheaf.hpp"

namespace latsheaf {

// One record per prime ideal of the reduct: how far the operator ideal it
// generates in the source is from being prime / maximal, and whether the
// smallest congruence collapsing the point is a maximal congruence.
struct PointRecord {
  Mask point = 0;            // members, over the source carrier
  Mask generated_ideal = 0;  // Ig of the point, over the source carrier
  bool ideal_prime = false;
  bool ideal_maximal = false;
  bool class_congruence_maximal = false;
};

struct RegularityReport {
  std::vector<int> J;
  std::vector<PointRecord> points;
  bool regular = false;
  bool strongly_regular = false;
  bool congruence_strongly_regular = false;
  bool simple = false;
  bool semisimple_stalks = false;  // every stalk of the dual space is simple
};

// Evaluates the regularity hierarchy of A over the prime spectrum of
// Nr_J(A): regular / strongly regular / congruence strongly regular ask the
// generated ideal to be prime / maximal / to generate a maximal congruence,
// at every point.
inline RegularityReport classify(const Algebra& A, std::vector<int> J = {}) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());

  RegularityReport R;
  R.J = J;

  DualSpace D = dual_space(A, J, QuotientMode::collapse);
  auto maxcons = maximal_congruences(A);

  R.regular = R.strongly_regular = R.congruence_strongly_regular = true;
  for (int p = 0; p < D.point_count(); ++p) {
    PointRecord rec;
    rec.point = D.point_in_source(p);
    rec.generated_ideal = ideal_generated(A, rec.point);
    rec.ideal_prime = is_prime_ideal(A.lattice, rec.generated_ideal);
    rec.ideal_maximal = is_maximal_operator_ideal(A, rec.generated_ideal);
    // Smallest congruence identifying all members of the point. This can be
    // strictly below any congruence having the point as an exact class (and
    // exists even when no such congruence does).
    std::vector<std::pair<Elem, Elem>> pairs;
    Elem first = -1;
    for (Elem x = 0; x < A.size(); ++x) {
      if (!mask_has(rec.point, x)) continue;
      if (first < 0)
        first = x;
      else
        pairs.push_back({first, x});
    }
    Partition co = congruence_closure(A, pairs);
    rec.class_congruence_maximal =
        std::find(maxcons.begin(), maxcons.end(), co) != maxcons.end();
    R.regular = R.regular && rec.ideal_prime;
    R.strongly_regular = R.strongly_regular && rec.ideal_maximal;
    R.congruence_strongly_regular =
        R.congruence_strongly_regular && rec.class_congruence_maximal;
    R.points.push_back(rec);
  }

  R.simple = is_simple(A);
  R.semisimple_stalks = true;
  for (const Algebra& st : D.stalks)
    R.semisimple_stalks = R.semisimple_stalks && is_simple(st);
  return R;
}

// The three conditions of the equivalence theorem for relatively
// complemented algebras, evaluated independently over J = empty:
//   (1) strongly regular,
//   (2) every operator-closed principal ideal is generated by a central
//       element,
//   (3) every stalk of the dual space is simple.
struct EquivalenceReport {
  bool relatively_complemented = false;  // the theorem's hypothesis
  bool strongly_regular = false;
  bool centrally_generated = false;
  bool stalks_simple = false;
  bool pairwise_equal = false;
};

inline EquivalenceReport strongly_regular_equivalence_report(const Algebra& A) {
  EquivalenceReport R;
  R.relatively_complemented = is_relatively_complemented(A.lattice);

  RegularityReport C = classify(A, {});
  R.strongly_regular = C.strongly_regular;
  R.stalks_simple = C.semisimple_stalks;

  std::vector<char> central = fixed_elements(A, [&] {
    std::vector<int> all;
    for (int i = 0; i < A.op_count(); ++i) all.push_back(i);
    return all;
  }());
  R.centrally_generated = true;
  for (Mask I : all_operator_ideals(A)) {
    bool hit = false;
    for (Elem c = 0; c < A.size() && !hit; ++c)
      hit = central[c] && down_set(A.lattice, c) == I;
    R.centrally_generated = R.centrally_generated && hit;
  }

  R.pairwise_equal = R.strongly_regular == R.centrally_generated &&
                     R.centrally_generated == R.stalks_simple;
  return R;
}

// No factorization A = B x C with both sides of size at least 2. Detected
// through factor congruence pairs: theta and phi with meet identity, join
// universal, and commuting block structure (equivalently here: the product
// of the two quotients rebuilds A).
inline bool is_directly_indecomposable(const Algebra& A) {
  if (A.size() < 2) return false;
  auto cons = all_congruences(A);
  for (const Partition& P : cons) {
    if (P.is_identity() || P.is_universal()) continue;
    for (const Partition& Q : cons) {
      if (Q.is_identity() || Q.is_universal()) continue;
      if (!congruence_meet(P, Q).is_identity()) continue;
      if (!congruence_join(P, Q).is_universal()) continue;
      if (P.block_count * Q.block_count != A.size()) continue;
      Algebra prod = product({quotient(A, P).algebra, quotient(A, Q).algebra});
      if (isomorphic(A, prod)) return false;
    }
  }
  return true;
}

struct ProductCenterReport {
  Algebra prod;
  bool center_is_cube = false;       // Zd isomorphic to 2^(number of factors)
  std::vector<int> stalk_of_factor;  // factor -> matching stalk (or -1)
  bool stalks_match_factors = false;
};

namespace detail {

// The factor extended to the product signature: missing operators act as the
// identity, which is how they behave on that coordinate of the product.
inline Algebra with_signature(const Algebra& F, const std::vector<std::string>& names) {
  std::vector<std::string> nm = names;
  std::vector<std::vector<Elem>> tables;
  for (const std::string& s : nm) {
    int op = F.op_index(s);
    std::vector<Elem> t(F.size());
    for (Elem x = 0; x < F.size(); ++x) t[x] = op >= 0 ? F.apply(op, x) : x;
    tables.push_back(std::move(t));
  }
  return make_algebra(F.lattice, std::move(nm), std::move(tables));
}

}  // namespace detail

// Forms the product of directly indecomposable, center-trivial factors and
// verifies the expected dual geometry: the center is a Boolean cube with one
// coordinate per factor, and the stalks are the factors themselves. Factors
// whose center is bigger than {bottom, top} get a fresh to-top closure
// operator attached ("ct<i>") to cut the center down.
inline ProductCenterReport product_center_check(std::vector<Algebra> factors) {
  require(!factors.empty(), errc::bad_input, "need at least one factor");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Algebra& F = factors[i];
    if (center(F).algebra.size() > 2 && F.size() > 1) {
      std::vector<Elem> t(F.size());
      for (Elem x = 0; x < F.size(); ++x)
        t[x] = x == F.lattice.bottom ? x : F.lattice.top;
      auto names = F.op_names;
      auto tables = F.op_tables;
      names.push_back("ct" + std::to_string(i));
      tables.push_back(std::move(t));
      F = make_algebra(F.lattice, std::move(names), std::move(tables));
    }
    require(is_directly_indecomposable(F), errc::factor_not_indecomposable,
            "factor " + std::to_string(i) + " decomposes");
  }

  ProductCenterReport R;
  R.prod = product(factors);

  Subalgebra Z = center(R.prod);
  R.center_is_cube =
      isomorphic(Z.algebra.lattice, boolean_lattice(static_cast<int>(factors.size())));

  DualSpace D = dual_space(R.prod, {}, QuotientMode::collapse);
  R.stalk_of_factor.assign(factors.size(), -1);
  std::vector<char> used(D.stalks.size(), 0);
  for (std::size_t f = 0; f < factors.size(); ++f) {
    Algebra want = detail::with_signature(factors[f], R.prod.op_names);
    for (std::size_t s = 0; s < D.stalks.size(); ++s) {
      if (used[s]) continue;
      if (isomorphic(want, D.stalks[s])) {
        R.stalk_of_factor[f] = static_cast<int>(s);
        used[s] = 1;
        break;
      }
    }
  }
  R.stalks_match_factors =
      D.stalks.size() == factors.size() &&
      std::all_of(R.stalk_of_factor.begin(), R.stalk_of_factor.end(),
                  [](int s) { return s >= 0; });
  return R;
}

}  // namespace latsheaf

#endif  // LATSHEAF_CLASSIFY_HPP
