#ifndef LATSHEAF_SHEAF_HPP
#define LATSHEAF_SHEAF_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latsheaf/blo.hpp"
#include "latsheaf/congruences.hpp"
#include "latsheaf/core.hpp"
#include "latsheaf/ideals.hpp"
#include "latsheaf/lattice.hpp"
#include "latsheaf/priestley.hpp"

namespace latsheaf {

// How the congruence attached to a base point is produced:
//   collapse  theta_x = ideal_congruence of the operator ideal generated by x
//   by_class  theta_x = smallest congruence having x as one whole class
// The two can differ; both are first-class citizens and every report names
// the mode it was computed under.
enum class QuotientMode { collapse, by_class };

inline const char* quotient_mode_name(QuotientMode m) {
  return m == QuotientMode::collapse ? "collapse" : "class";
}

// The dual of an algebra relative to an operator subset J: the spectrum of
// the neat reduct Nr_J(A) as base space, with the quotient of A at each
// point as stalk. Immutable once built.
struct DualSpace {
  Algebra source;
  std::vector<int> J;                        // operator indices into source
  Subalgebra reduct;                         // Nr_J(A) plus embedding
  Spectrum base;                             // spectrum of the reduct lattice
  QuotientMode mode = QuotientMode::collapse;
  std::vector<Partition> point_theta;        // congruence on source, per point
  std::vector<Algebra> stalks;               // source / theta_x
  std::vector<std::vector<Elem>> to_stalk;   // canonical surjection, per point

  int point_count() const { return base.point_count(); }

  // Members of base point p, as a mask over the source carrier.
  Mask point_in_source(int p) const {
    Mask m = 0;
    for (Elem r = 0; r < reduct.algebra.size(); ++r)
      if (mask_has(base.points[p], r)) m |= mask_bit(reduct.embedding[r]);
    return m;
  }
};

inline DualSpace dual_space(const Algebra& A, std::vector<int> J,
                            QuotientMode mode = QuotientMode::collapse) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());

  DualSpace D;
  D.source = A;
  D.J = std::move(J);
  D.reduct = neat_reduct(A, D.J);
  D.base = spectrum(D.reduct.algebra.lattice);
  D.mode = mode;
  for (int p = 0; p < D.base.point_count(); ++p) {
    Mask X = D.point_in_source(p);
    Partition theta = mode == QuotientMode::collapse
                          ? ideal_congruence(A, ideal_generated(A, X))
                          : congruence_generated_by_class(A, X);
    Quotient q = quotient(A, theta);
    D.point_theta.push_back(std::move(theta));
    D.stalks.push_back(std::move(q.algebra));
    D.to_stalk.push_back(std::move(q.projection));
  }
  return D;
}

// A section is one stalk element per base point.
using Section = std::vector<Elem>;

inline Section section_of(const DualSpace& D, Elem a) {
  Section s(D.point_count());
  for (int p = 0; p < D.point_count(); ++p) s[p] = D.to_stalk[p][a];
  return s;
}

inline std::string section_name(const DualSpace& D, const Section& s) {
  std::string nm = "[";
  for (int p = 0; p < D.point_count(); ++p) {
    if (p) nm += ";";
    nm += D.stalks[p].lattice.name(s[p]);
  }
  return nm + "]";
}

// Local-agreement continuity: at every point some basic open neighborhood
// exists on which the section coincides with a canonical section sigma_a.
// A finite base of distinct prime ideals is discrete (each singleton is a
// finite intersection of subbase sets), which makes every section
// continuous; the criterion is still evaluated literally.
inline bool is_continuous(const DualSpace& D, const Section& s) {
  const int k = D.point_count();
  auto basics = basic_open_masks(D.base);
  for (int x = 0; x < k; ++x) {
    bool ok = false;
    for (Mask O : basics) {
      if (!mask_has(O, x)) continue;
      for (Elem a = 0; a < D.source.size() && !ok; ++a) {
        bool agrees = true;
        for (int y = 0; y < k && agrees; ++y)
          if (mask_has(O, y)) agrees = s[y] == D.to_stalk[y][a];
        ok = agrees;
      }
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

// The algebra of all continuous sections under pointwise operations,
// together with the section list (the element order).
struct GammaAlgebra {
  Algebra algebra;
  std::vector<Section> sections;

  int index_of(const Section& s) const {
    auto it = std::lower_bound(sections.begin(), sections.end(), s);
    if (it == sections.end() || *it != s) return -1;
    return static_cast<int>(it - sections.begin());
  }
};

inline GammaAlgebra gamma(const DualSpace& D, int section_limit = 2048) {
  const int k = D.point_count();

  long long total = 1;
  for (const Algebra& st : D.stalks) {
    total *= st.size();
    require(total <= section_limit, errc::too_large,
            "section space exceeds " + std::to_string(section_limit) + " elements");
  }

  // Discreteness shortcut: when every singleton is a basic open, a section
  // agrees with sigma_a on {x} for any preimage a of its value there, so
  // every section is continuous.
  auto basics = basic_open_masks(D.base);
  bool discrete = true;
  for (int x = 0; x < k && discrete; ++x)
    discrete = std::find(basics.begin(), basics.end(), mask_bit(x)) != basics.end();

  GammaAlgebra G;
  Section s(k, 0);
  for (;;) {
    if (discrete || is_continuous(D, s)) G.sections.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] + 1 == D.stalks[i].size()) s[i--] = 0;
    if (i < 0) break;
    ++s[i];
  }
  std::sort(G.sections.begin(), G.sections.end());

  const int n = static_cast<int>(G.sections.size());
  Lattice L;
  for (const Section& t : G.sections) L.names.push_back(section_name(D, t));
  L.leq_table.assign(static_cast<std::size_t>(n) * n, 0);
  L.meet_table.assign(static_cast<std::size_t>(n) * n, 0);
  L.join_table.assign(static_cast<std::size_t>(n) * n, 0);

  auto locate = [&](const Section& t) {
    int idx = G.index_of(t);
    require(idx >= 0, errc::not_closed,
            "continuous sections are not closed under pointwise operations");
    return idx;
  };

  Section tmp(k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool le = true;
      for (int p = 0; p < k; ++p) {
        tmp[p] = D.stalks[p].lattice.meet(G.sections[i][p], G.sections[j][p]);
        le = le && D.stalks[p].lattice.leq(G.sections[i][p], G.sections[j][p]);
      }
      L.meet_table[i * n + j] = locate(tmp);
      L.leq_table[i * n + j] = le ? 1 : 0;
      for (int p = 0; p < k; ++p)
        tmp[p] = D.stalks[p].lattice.join(G.sections[i][p], G.sections[j][p]);
      L.join_table[i * n + j] = locate(tmp);
    }
  Section bot(k), top(k);
  for (int p = 0; p < k; ++p) {
    bot[p] = D.stalks[p].lattice.bottom;
    top[p] = D.stalks[p].lattice.top;
  }
  L.bottom = locate(bot);
  L.top = locate(top);

  std::vector<std::vector<Elem>> tables;
  for (int op = 0; op < D.source.op_count(); ++op) {
    std::vector<Elem> t(n);
    for (int i = 0; i < n; ++i) {
      for (int p = 0; p < k; ++p) tmp[p] = D.stalks[p].apply(op, G.sections[i][p]);
      t[i] = locate(tmp);
    }
    tables.push_back(std::move(t));
  }

  G.algebra.lattice = std::move(L);
  G.algebra.op_names = D.source.op_names;
  G.algebra.op_tables = std::move(tables);
  return G;
}

// Intersection of all point congruences; over an empty point set this is the
// universal congruence (which on a one-element carrier is also the identity).
inline Partition kernel_of_eta(const DualSpace& D) {
  Partition acc = universal_partition(D.source.size());
  for (const Partition& P : D.point_theta) acc = congruence_meet(acc, P);
  return acc;
}

struct EtaReport {
  DualSpace space;
  GammaAlgebra sections;
  std::vector<Elem> eta;      // a -> index of sigma_a among the sections
  bool homomorphism = false;
  bool injective = false;
  bool surjective = false;
  bool isomorphism = false;
  bool kernel_identity = false;            // intersection of theta_x trivial
  bool kernel_matches_injectivity = false;
  std::pair<Elem, Elem> merged{-1, -1};    // witness when not injective
  int unreached = -1;                      // witness when not surjective
};

inline EtaReport eta_report(const Algebra& A, const std::vector<int>& J,
                            QuotientMode mode = QuotientMode::collapse,
                            int section_limit = 2048) {
  EtaReport R;
  R.space = dual_space(A, J, mode);
  R.sections = gamma(R.space, section_limit);

  R.eta.assign(A.size(), -1);
  for (Elem a = 0; a < A.size(); ++a) {
    int idx = R.sections.index_of(section_of(R.space, a));
    require(idx >= 0, errc::not_closed, "canonical section missing from gamma");
    R.eta[a] = idx;
  }
  R.homomorphism = is_algebra_homomorphism(R.eta, A, R.sections.algebra);

  R.injective = true;
  for (Elem a = 0; a < A.size() && R.injective; ++a)
    for (Elem b = a + 1; b < A.size(); ++b)
      if (R.eta[a] == R.eta[b]) {
        R.injective = false;
        R.merged = {a, b};
        break;
      }

  std::vector<char> hit(R.sections.sections.size(), 0);
  for (Elem a = 0; a < A.size(); ++a) hit[R.eta[a]] = 1;
  R.surjective = true;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (!hit[i]) {
      R.surjective = false;
      R.unreached = static_cast<int>(i);
      break;
    }

  R.isomorphism = R.homomorphism && R.injective && R.surjective;
  R.kernel_identity = kernel_of_eta(R.space).is_identity();
  R.kernel_matches_injectivity = R.kernel_identity == R.injective;
  return R;
}

// True when sigma_a is the indicator of the basic set N_a: top-class on it,
// bottom-class off it. `a` is a source element that must lie in the reduct.
inline bool characteristic_section_check(const DualSpace& D, Elem a) {
  int r = -1;
  for (Elem i = 0; i < D.reduct.algebra.size(); ++i)
    if (D.reduct.embedding[i] == a) r = i;
  require(r >= 0, errc::bad_input,
          "element '" + D.source.lattice.name(a) + "' is not in the reduct");
  Mask Na = D.base.basic_n[r];
  Section s = section_of(D, a);
  for (int p = 0; p < D.point_count(); ++p) {
    Elem want = mask_has(Na, p) ? D.stalks[p].lattice.top : D.stalks[p].lattice.bottom;
    if (s[p] != want) return false;
  }
  return true;
}

// Whether sigma_a maps every open set of the base to a union of generating
// images sigma_b(O). Every open is a union of basic opens and images
// distribute over unions, so this always holds at finite scale; reported
// rather than assumed.
inline bool section_open_map_check(const DualSpace& D, Elem a) {
  const int k = D.point_count();
  auto basics = basic_open_masks(D.base);
  Section sa = section_of(D, a);
  for (Mask U : open_masks(D.base)) {
    // Image of U under sigma_a: the pairs (x, sa[x]) for x in U. Check each
    // such pair has a generating image around it inside the image of U.
    for (int x = 0; x < k; ++x) {
      if (!mask_has(U, x)) continue;
      bool covered = false;
      for (Elem b = 0; b < D.source.size() && !covered; ++b) {
        if (D.to_stalk[x][b] != sa[x]) continue;
        Section sb = section_of(D, b);
        for (Mask O : basics) {
          if (!mask_has(O, x)) continue;
          bool inside = true;
          for (int y = 0; y < k && inside; ++y)
            if (mask_has(O, y)) inside = mask_has(U, y) && sb[y] == sa[y];
          if (inside) {
            covered = true;
            break;
          }
        }
      }
      if (!covered) return false;
    }
  }
  return true;
}

// A morphism between dual spaces, from `over` to `target`: lambda carries
// points of `over` to points of `target`, and mu goes the other way on
// stalks, one homomorphism per point of `over`:
//   mu[y] : stalk_target(lambda[y]) -> stalk_over(y).
struct SheafMorphism {
  std::vector<int> lambda;
  std::vector<std::vector<Elem>> mu;

  bool operator==(const SheafMorphism&) const = default;
};

// All structural violations, empty when the morphism is valid: lambda and mu
// shapes, each mu[y] a homomorphism, and lambda continuous against the
// symbolic bases (preimages of basic opens are open).
inline std::vector<std::string> validate_sheaf_morphism(const SheafMorphism& H,
                                                        const DualSpace& over,
                                                        const DualSpace& target) {
  std::vector<std::string> out;
  const int k = over.point_count();
  if (static_cast<int>(H.lambda.size()) != k || static_cast<int>(H.mu.size()) != k) {
    out.push_back("lambda/mu size does not match the point count");
    return out;
  }
  for (int y = 0; y < k; ++y) {
    if (H.lambda[y] < 0 || H.lambda[y] >= target.point_count()) {
      out.push_back("lambda out of range at point " + std::to_string(y));
      continue;
    }
    const Algebra& src = target.stalks[H.lambda[y]];
    if (static_cast<int>(H.mu[y].size()) != src.size()) {
      out.push_back("mu arity mismatch at point " + std::to_string(y));
      continue;
    }
    if (!is_algebra_homomorphism(H.mu[y], src, over.stalks[y]))
      out.push_back("mu is not a homomorphism at point " + std::to_string(y));
  }
  if (out.empty()) {
    auto opens = open_masks(over.base);
    std::set<Mask> openset(opens.begin(), opens.end());
    for (Elem r = 0; r < target.reduct.algebra.size(); ++r) {
      Mask pre = 0;
      for (int y = 0; y < k; ++y)
        if (mask_has(target.base.basic_n[r], H.lambda[y])) pre |= mask_bit(y);
      if (!openset.count(pre))
        out.push_back("lambda preimage of a basic open is not open (N_" +
                      target.reduct.algebra.lattice.name(r) + ")");
    }
  }
  return out;
}

inline SheafMorphism identity_sheaf_morphism(const DualSpace& D) {
  SheafMorphism H;
  for (int y = 0; y < D.point_count(); ++y) {
    H.lambda.push_back(y);
    std::vector<Elem> id(D.stalks[y].size());
    for (Elem e = 0; e < D.stalks[y].size(); ++e) id[e] = e;
    H.mu.push_back(std::move(id));
  }
  return H;
}

// Transport of a section along H: (Gamma(H) sigma)(y) = mu[y](sigma(lambda y)).
inline Section apply_sheaf_morphism(const SheafMorphism& H, const DualSpace& over,
                                    const Section& sigma_on_target) {
  Section out(over.point_count());
  for (int y = 0; y < over.point_count(); ++y)
    out[y] = H.mu[y][sigma_on_target[H.lambda[y]]];
  return out;
}

// The whole section-algebra homomorphism Gamma(target) -> Gamma(over)
// induced by H, as an image table; verified to be an algebra homomorphism.
inline std::vector<Elem> gamma_hom(const SheafMorphism& H, const DualSpace& over,
                                   const GammaAlgebra& g_target,
                                   const GammaAlgebra& g_over) {
  std::vector<Elem> f(g_target.sections.size());
  for (std::size_t i = 0; i < g_target.sections.size(); ++i) {
    int idx = g_over.index_of(apply_sheaf_morphism(H, over, g_target.sections[i]));
    require(idx >= 0, errc::not_closed, "transported section is not continuous");
    f[i] = idx;
  }
  require(is_algebra_homomorphism(f, g_target.algebra, g_over.algebra),
          errc::not_compatible, "transport along the morphism is not a homomorphism");
  return f;
}

// Composition: with K from P to Q and H from Q to R, the composite runs from
// P to R; lambda composes forward, mu composes backward.
inline SheafMorphism compose_sheaf_morphisms(const SheafMorphism& H,
                                             const SheafMorphism& K) {
  SheafMorphism C;
  const int k = static_cast<int>(K.lambda.size());
  for (int p = 0; p < k; ++p) {
    C.lambda.push_back(H.lambda[K.lambda[p]]);
    const std::vector<Elem>& hmu = H.mu[K.lambda[p]];
    std::vector<Elem> cmu(hmu.size());
    for (std::size_t e = 0; e < hmu.size(); ++e) cmu[e] = K.mu[p][hmu[e]];
    C.mu.push_back(std::move(cmu));
  }
  return C;
}

// The dual of an algebra homomorphism h : A -> B, as a sheaf morphism from
// the B-dual to the A-dual (both over J = empty, the centers):
//   lambda(y) = h^{-1}(y) intersected with the center of A,
//   mu[y](a / theta_{lambda y}) = h(a) / theta_y.
// Throws NotWellDefined when lambda lands outside the A-dual's points or
// when mu is not constant on quotient classes (possible in class mode).
inline SheafMorphism dual_of_algebra_hom(const std::vector<Elem>& h,
                                         const DualSpace& dual_B,
                                         const DualSpace& dual_A) {
  const Algebra& A = dual_A.source;
  const Algebra& B = dual_B.source;
  require(is_algebra_homomorphism(h, A, B), errc::bad_input,
          "not an algebra homomorphism");
  require(dual_A.J.empty() && dual_B.J.empty(), errc::bad_input,
          "dual morphisms are formed over the centers (J must be empty)");

  SheafMorphism H;
  for (int y = 0; y < dual_B.point_count(); ++y) {
    Mask yb = dual_B.point_in_source(y);
    // Pull back to the center of A, in reduct coordinates.
    Mask pre = 0;
    for (Elem r = 0; r < dual_A.reduct.algebra.size(); ++r)
      if (mask_has(yb, h[dual_A.reduct.embedding[r]])) pre |= mask_bit(r);
    auto it = std::find(dual_A.base.points.begin(), dual_A.base.points.end(), pre);
    if (it == dual_A.base.points.end())
      fail(errc::not_well_defined,
           "h^{-1}(" + dual_B.base.point_name(y) +
               ") does not meet the center of the source in a prime ideal");
    int x = static_cast<int>(it - dual_A.base.points.begin());
    H.lambda.push_back(x);

    const Algebra& stalk_x = dual_A.stalks[x];
    std::vector<Elem> mu(stalk_x.size(), -1);
    for (Elem a = 0; a < A.size(); ++a) {
      Elem cls = dual_A.to_stalk[x][a];
      Elem img = dual_B.to_stalk[y][h[a]];
      if (mu[cls] < 0) {
        mu[cls] = img;
      } else if (mu[cls] != img) {
        fail(errc::not_well_defined,
             "classes at " + dual_A.base.point_name(x) + " split at " +
                 dual_B.base.point_name(y) + ": elements '" +
                 A.lattice.name(a) + "' disagree");
      }
    }
    H.mu.push_back(std::move(mu));
  }
  auto bad = validate_sheaf_morphism(H, dual_B, dual_A);
  require(bad.empty(), errc::not_well_defined,
          bad.empty() ? "" : ("dual morphism invalid: " + bad.front()));
  return H;
}

// Restriction of a dual space to a subset of its points, with a report
// comparing it against the dual of the quotient of the source by the
// intersection of the kept point congruences.
struct ClosedRestriction {
  bool closed = false;                // complement open in the base topology
  std::vector<int> kept;              // kept point indices, ascending
  Quotient collapsed;                 // source / intersection of kept thetas
  DualSpace quotient_dual;
  bool isomorphic = false;
  std::vector<int> point_map;         // kept position -> quotient_dual point
};

inline ClosedRestriction restrict_to_closed(const DualSpace& D, Mask Y) {
  require((Y & ~mask_all(D.point_count())) == 0, errc::bad_input,
          "point subset out of range");
  ClosedRestriction R;
  {
    auto opens = open_masks(D.base);
    Mask comp = ~Y & mask_all(D.point_count());
    R.closed = std::find(opens.begin(), opens.end(), comp) != opens.end();
  }
  for (int p = 0; p < D.point_count(); ++p)
    if (mask_has(Y, p)) R.kept.push_back(p);

  Partition theta = universal_partition(D.source.size());
  for (int p : R.kept) theta = congruence_meet(theta, D.point_theta[p]);
  R.collapsed = quotient(D.source, theta);
  R.quotient_dual = dual_space(R.collapsed.algebra, D.J, D.mode);

  const int m = static_cast<int>(R.kept.size());
  if (R.quotient_dual.point_count() != m) return R;

  // Natural candidate: send a kept point (a principal prime ideal of the
  // source reduct) to the down-set of the image of its generator in the
  // quotient reduct.
  auto try_map = [&](const std::vector<int>& pm) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        bool a = D.base.leq(R.kept[i], R.kept[j]);
        bool b = R.quotient_dual.base.leq(pm[i], pm[j]);
        if (a != b) return false;
      }
    for (int i = 0; i < m; ++i)
      if (!isomorphic(D.stalks[R.kept[i]], R.quotient_dual.stalks[pm[i]]))
        return false;
    return true;
  };

  std::vector<int> natural(m, -1);
  bool natural_ok = true;
  for (int i = 0; i < m && natural_ok; ++i) {
    int p = R.kept[i];
    Elem gen = -1;  // max member of the point within the source reduct
    for (Elem r = 0; r < D.reduct.algebra.size(); ++r)
      if (mask_has(D.base.points[p], r) &&
          (gen < 0 || D.reduct.algebra.lattice.leq(gen, r)))
        gen = r;
    Elem qb = R.collapsed.projection[D.reduct.embedding[gen]];
    int rb = -1;
    for (Elem r = 0; r < R.quotient_dual.reduct.algebra.size(); ++r)
      if (R.quotient_dual.reduct.embedding[r] == qb) rb = r;
    if (rb < 0) {
      natural_ok = false;
      break;
    }
    Mask cand = down_set(R.quotient_dual.reduct.algebra.lattice, rb);
    auto it = std::find(R.quotient_dual.base.points.begin(),
                        R.quotient_dual.base.points.end(), cand);
    if (it == R.quotient_dual.base.points.end()) {
      natural_ok = false;
      break;
    }
    natural[i] = static_cast<int>(it - R.quotient_dual.base.points.begin());
  }
  if (natural_ok) {
    std::vector<int> sorted = natural;
    std::sort(sorted.begin(), sorted.end());
    natural_ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  if (natural_ok && try_map(natural)) {
    R.isomorphic = true;
    R.point_map = natural;
    return R;
  }

  // Fallback: exhaust bijections (point counts are tiny).
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  do {
    if (try_map(perm)) {
      R.isomorphic = true;
      R.point_map = perm;
      return R;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return R;
}

// The regular-ideal / open-set correspondence over the section algebra:
// supp(sigma) = points where sigma is not the stalk bottom; an ideal of
// Gamma is regular when it is generated by its central part. The two maps
//   U |-> { sigma : supp(sigma) inside U }   and   I |-> union of supports
// should be mutually inverse and order-preserving.
struct RegularIdealReport {
  int gamma_size = 0;
  std::vector<Mask> opens;                  // point sets
  std::vector<Elem> regular_generators;     // ideals as principal generators
  bool ideals_to_opens = false;             // supports of regular ideals open
  bool opens_to_ideals = false;             // section sets are regular ideals
  bool inverse_on_opens = false;            // U -> J[U] -> U round-trip
  bool inverse_on_ideals = false;           // J -> U[J] -> J round-trip
  bool order_preserving = false;
  bool bijective = false;
  std::vector<std::string> failures;
};

inline RegularIdealReport regular_ideal_openset_iso(const DualSpace& D,
                                                    int section_limit = 2048) {
  GammaAlgebra G = gamma(D, section_limit);
  const Algebra& GA = G.algebra;
  const int n = GA.size();
  const int k = D.point_count();

  RegularIdealReport R;
  R.gamma_size = n;
  R.opens = open_masks(D.base);

  std::vector<char> central = fixed_elements(GA, [&] {
    std::vector<int> all;
    for (int i = 0; i < GA.op_count(); ++i) all.push_back(i);
    return all;
  }());

  auto support = [&](Elem g) {
    Mask u = 0;
    for (int p = 0; p < k; ++p)
      if (G.sections[g][p] != D.stalks[p].lattice.bottom) u |= mask_bit(p);
    return u;
  };

  // Ideals of the section algebra are the principal down-sets; I is regular
  // when the operator ideal generated by its central members is I again.
  for (Elem g = 0; g < n; ++g) {
    std::vector<Elem> central_below;
    for (Elem h = 0; h < n; ++h)
      if (central[h] && GA.lattice.leq(h, g)) central_below.push_back(h);
    if (ideal_generator(GA, central_below) == g) R.regular_generators.push_back(g);
  }

  std::set<Mask> openset(R.opens.begin(), R.opens.end());
  std::set<Elem> regset(R.regular_generators.begin(), R.regular_generators.end());

  R.ideals_to_opens = true;
  R.inverse_on_ideals = true;
  for (Elem g : R.regular_generators) {
    Mask U = support(g);
    if (!openset.count(U)) {
      R.ideals_to_opens = false;
      R.failures.push_back("support of " + GA.lattice.name(g) + " is not open");
    }
    // J[U[J]]: the largest section supported inside supp(g).
    Section big(k);
    for (int p = 0; p < k; ++p)
      big[p] = mask_has(U, p) ? D.stalks[p].lattice.top : D.stalks[p].lattice.bottom;
    int back = G.index_of(big);
    if (back != g) {
      R.inverse_on_ideals = false;
      R.failures.push_back("ideal round-trip moves " + GA.lattice.name(g));
    }
  }

  R.opens_to_ideals = true;
  R.inverse_on_opens = true;
  for (Mask U : R.opens) {
    Section big(k);
    for (int p = 0; p < k; ++p)
      big[p] = mask_has(U, p) ? D.stalks[p].lattice.top : D.stalks[p].lattice.bottom;
    int g = G.index_of(big);
    if (g < 0 || !regset.count(g)) {
      R.opens_to_ideals = false;
      R.failures.push_back("sections supported in " + openset_name(D.base, U) +
                           " are not a regular ideal");
      continue;
    }
    if (support(g) != U) {
      R.inverse_on_opens = false;
      R.failures.push_back("open round-trip moves " + openset_name(D.base, U));
    }
  }

  R.order_preserving = true;
  for (Elem g1 : R.regular_generators)
    for (Elem g2 : R.regular_generators) {
      bool sub = GA.lattice.leq(g1, g2);
      bool usub = (support(g1) & ~support(g2)) == 0;
      if (sub != usub) {
        R.order_preserving = false;
        R.failures.push_back("order mismatch between " + GA.lattice.name(g1) +
                             " and " + GA.lattice.name(g2));
      }
    }

  R.bijective = R.ideals_to_opens && R.opens_to_ideals && R.inverse_on_opens &&
                R.inverse_on_ideals &&
                R.regular_generators.size() == R.opens.size();
  return R;
}

}  // namespace latsheaf

#endif  // LATSHEAF_SHEAF_HPP
