#ifndef LATSHEAF_EPI_HPP
#define LATSHEAF_EPI_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "latsheaf/blo.hpp"
#include "latsheaf/classify.hpp"
#include "latsheaf/core.hpp"
#include "latsheaf/lattice.hpp"
#include "latsheaf/sheaf.hpp"

namespace latsheaf {

// The finite ambient class all categorical statements are relative to.
struct Universe {
  std::vector<Algebra> algebras;
  std::string provenance;  // "enumerated" or "user-supplied"
};

// Every bounded-lattice-with-operators homomorphism A -> B, in canonical
// (lexicographic image table) order. Images are chosen for the
// join-irreducibles and extended by joins: in a finite lattice every element
// is the join of the join-irreducibles below it, so the extension is forced;
// the full homomorphism property is then checked once per candidate.
inline std::vector<std::vector<Elem>> enumerate_homomorphisms(const Algebra& A,
                                                              const Algebra& B) {
  const Lattice& LA = A.lattice;
  const Lattice& LB = B.lattice;
  auto jis = join_irreducibles(LA);

  double budget = 1.0;
  for (std::size_t i = 0; i < jis.size(); ++i) budget *= LB.size();
  require(budget <= 5e7, errc::too_large, "homomorphism search space too large");

  std::vector<std::vector<Elem>> found;
  std::vector<Elem> ji_image(jis.size(), 0);
  std::vector<Elem> f(LA.size());

  auto build_and_check = [&]() {
    for (Elem x = 0; x < LA.size(); ++x) {
      Elem v = LB.bottom;
      for (std::size_t i = 0; i < jis.size(); ++i)
        if (LA.leq(jis[i], x)) v = LB.join(v, ji_image[i]);
      f[x] = v;
    }
    if (is_algebra_homomorphism(f, A, B)) found.push_back(f);
  };

  if (jis.empty()) {
    build_and_check();  // one-element source: only the bottom/top image
  } else {
    for (;;) {
      build_and_check();
      int i = static_cast<int>(jis.size()) - 1;
      while (i >= 0 && ji_image[i] + 1 == LB.size()) ji_image[i--] = 0;
      if (i < 0) break;
      ++ji_image[i];
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

inline bool is_surjective(const std::vector<Elem>& f, const Algebra& B) {
  std::vector<char> hit(B.size(), 0);
  for (Elem v : f) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

inline bool is_injective_map(const std::vector<Elem>& f) {
  std::vector<Elem> s = f;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

struct CancellationWitness {
  bool cancellable = true;
  int universe_index = -1;
  std::vector<Elem> g1, g2;
};

// f : A -> B is an epimorphism relative to U when no D in U admits distinct
// g1, g2 : B -> D with g1 after f = g2 after f.
inline CancellationWitness is_epimorphism(const std::vector<Elem>& f, const Algebra& A,
                                          const Algebra& B, const Universe& U) {
  CancellationWitness W;
  for (std::size_t d = 0; d < U.algebras.size(); ++d) {
    auto homs = enumerate_homomorphisms(B, U.algebras[d]);
    for (std::size_t i = 0; i < homs.size(); ++i)
      for (std::size_t j = i + 1; j < homs.size(); ++j) {
        bool same = true;
        for (Elem x = 0; x < A.size() && same; ++x)
          same = homs[i][f[x]] == homs[j][f[x]];
        if (same) {
          W.cancellable = false;
          W.universe_index = static_cast<int>(d);
          W.g1 = homs[i];
          W.g2 = homs[j];
          return W;
        }
      }
  }
  return W;
}

// f : A -> B is a monomorphism relative to U when no D in U admits distinct
// g1, g2 : D -> A with f after g1 = f after g2.
inline CancellationWitness is_monomorphism(const std::vector<Elem>& f, const Algebra& A,
                                           const Algebra& B, const Universe& U) {
  (void)B;
  CancellationWitness W;
  for (std::size_t d = 0; d < U.algebras.size(); ++d) {
    auto homs = enumerate_homomorphisms(U.algebras[d], A);
    for (std::size_t i = 0; i < homs.size(); ++i)
      for (std::size_t j = i + 1; j < homs.size(); ++j) {
        bool same = true;
        for (Elem x = 0; x < U.algebras[d].size() && same; ++x)
          same = f[homs[i][x]] == f[homs[j][x]];
        if (same) {
          W.cancellable = false;
          W.universe_index = static_cast<int>(d);
          W.g1 = homs[i];
          W.g2 = homs[j];
          return W;
        }
      }
  }
  return W;
}

struct HomomorphismRecord {
  int source = -1;  // indices into the universe
  int target = -1;
  std::vector<Elem> map;
  bool injective = false;
  bool surjective = false;
  bool epi = false;
  bool mono = false;
  bool conformal = false;
};

struct EsReport {
  std::vector<HomomorphismRecord> homs;
  std::vector<int> non_surjective_epis;      // indices into homs
  std::vector<RegularityReport> regularity;  // one per universe algebra
};

// The full sweep: every homomorphism between every ordered pair of universe
// members, with surjectivity, universe-relative epi/mono status, and the
// regularity classification of each algebra. The interesting output is the
// list of epimorphisms that fail to be surjective.
inline EsReport es_experiment(const Universe& U) {
  EsReport R;
  for (const Algebra& A : U.algebras) R.regularity.push_back(classify(A, {}));
  for (std::size_t a = 0; a < U.algebras.size(); ++a)
    for (std::size_t b = 0; b < U.algebras.size(); ++b) {
      const Algebra& A = U.algebras[a];
      const Algebra& B = U.algebras[b];
      for (auto& f : enumerate_homomorphisms(A, B)) {
        HomomorphismRecord rec;
        rec.source = static_cast<int>(a);
        rec.target = static_cast<int>(b);
        rec.map = f;
        rec.injective = is_injective_map(f);
        rec.surjective = is_surjective(f, B);
        rec.epi = rec.surjective || is_epimorphism(f, A, B, U).cancellable;
        rec.mono = is_monomorphism(f, A, B, U).cancellable;
        rec.conformal = is_conformal(f, A, B);
        if (rec.epi && !rec.surjective)
          R.non_surjective_epis.push_back(static_cast<int>(R.homs.size()));
        R.homs.push_back(std::move(rec));
      }
    }
  return R;
}

struct AmalgamationWitness {
  bool amalgamated = false;
  int universe_index = -1;
  std::vector<Elem> m1, m2;
};

// Searches U for a common extension of two embeddings with the same base:
// injective m1, m2 with m1 after e1 = m2 after e2.
inline AmalgamationWitness amalgamation_check(const Algebra& C, const Algebra& A,
                                              const Algebra& B,
                                              const std::vector<Elem>& e1,
                                              const std::vector<Elem>& e2,
                                              const Universe& U) {
  require(is_algebra_homomorphism(e1, C, A) && is_injective_map(e1), errc::bad_input,
          "e1 must be an embedding");
  require(is_algebra_homomorphism(e2, C, B) && is_injective_map(e2), errc::bad_input,
          "e2 must be an embedding");
  AmalgamationWitness W;
  for (std::size_t d = 0; d < U.algebras.size(); ++d) {
    auto h1 = enumerate_homomorphisms(A, U.algebras[d]);
    auto h2 = enumerate_homomorphisms(B, U.algebras[d]);
    for (const auto& m1 : h1) {
      if (!is_injective_map(m1)) continue;
      for (const auto& m2 : h2) {
        if (!is_injective_map(m2)) continue;
        bool agree = true;
        for (Elem c = 0; c < C.size() && agree; ++c)
          agree = m1[e1[c]] == m2[e2[c]];
        if (agree) {
          W.amalgamated = true;
          W.universe_index = static_cast<int>(d);
          W.m1 = m1;
          W.m2 = m2;
          return W;
        }
      }
    }
  }
  return W;
}

// A probe morphism from the one-point dual of a simple algebra into a given
// dual space: lambda picks the point y, mu is the supplied homomorphism from
// the stalk at y into the (single) stalk of the probe sheaf. The one-point
// sheaf is realized as the dual of the simple algebra itself (a simple
// algebra has trivial center, hence a one-point spectrum and itself as the
// stalk).
struct OnePointProbe {
  DualSpace over;   // one-point dual of the simple algebra
  SheafMorphism morphism;
};

inline OnePointProbe one_point_sheaf_probe(const Algebra& simple_alg,
                                           const DualSpace& target, int y,
                                           const std::vector<Elem>& f) {
  require(is_simple(simple_alg), errc::bad_input, "probe algebra must be simple");
  require(y >= 0 && y < target.point_count(), errc::bad_input, "no such point");

  OnePointProbe P;
  P.over = dual_space(simple_alg, {}, target.mode);
  require(P.over.point_count() == 1, errc::bad_input,
          "probe algebra does not have a one-point dual");
  require(is_algebra_homomorphism(f, target.stalks[y], simple_alg), errc::bad_input,
          "f must be a homomorphism from the stalk at y");

  P.morphism.lambda.push_back(y);
  // Compose with the renaming of the simple algebra onto its own stalk.
  std::vector<Elem> mu(target.stalks[y].size());
  for (Elem e = 0; e < target.stalks[y].size(); ++e)
    mu[e] = P.over.to_stalk[0][f[e]];
  P.morphism.mu.push_back(std::move(mu));

  auto bad = validate_sheaf_morphism(P.morphism, P.over, target);
  require(bad.empty(), errc::not_compatible,
          bad.empty() ? "" : ("probe invalid: " + bad.front()));
  return P;
}

// Glues per-block sections along a clopen partition of the base points:
// result(y) = locals[i][y] for y in blocks[i]. Blocks must partition the
// point set and be clopen (both the block and its complement open); the
// glued section is verified continuous.
inline Section clopen_partition_glue(const DualSpace& D,
                                     const std::vector<Mask>& blocks,
                                     const std::vector<Section>& locals) {
  require(blocks.size() == locals.size(), errc::bad_input,
          "one local section per block");
  const int k = D.point_count();
  Mask seen = 0;
  auto opens = open_masks(D.base);
  for (Mask b : blocks) {
    require(b != 0, errc::not_a_partition, "empty block");
    require((b & seen) == 0, errc::not_a_partition, "blocks overlap");
    require(std::find(opens.begin(), opens.end(), b) != opens.end(),
            errc::not_a_partition, "block is not open");
    require(std::find(opens.begin(), opens.end(), ~b & mask_all(k)) != opens.end(),
            errc::not_a_partition, "block complement is not open");
    seen |= b;
  }
  require(seen == mask_all(k), errc::not_a_partition, "blocks do not cover");

  Section out(k);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    require(static_cast<int>(locals[i].size()) == k, errc::bad_input,
            "local section has wrong length");
    for (int y = 0; y < k; ++y)
      if (mask_has(blocks[i], y)) {
        require(locals[i][y] >= 0 && locals[i][y] < D.stalks[y].size(),
                errc::bad_input, "local section value out of range");
        out[y] = locals[i][y];
      }
  }
  require(is_continuous(D, out), errc::not_compatible, "glued section discontinuous");
  return out;
}

}  // namespace latsheaf

#endif  // LATSHEAF_EPI_HPP
