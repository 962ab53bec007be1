#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "latsheaf/latsheaf.hpp"
#include "fixtures.hpp"

using namespace latsheaf;

TEST_CASE("spectrum of the 3-chain") {
  Spectrum S = spectrum(chain(3));
  REQUIRE(S.point_count() == 2);

  // Prime ideals are {bottom} and {bottom, middle}, as carrier masks.
  std::set<Mask> pts(S.points.begin(), S.points.end());
  CHECK(pts == std::set<Mask>{mask_bit(0), mask_bit(0) | mask_bit(1)});

  // Inclusion order: the small ideal sits below the large one.
  int small = S.points[0] == mask_bit(0) ? 0 : 1;
  int large = 1 - small;
  CHECK(S.leq(small, large));
  CHECK_FALSE(S.leq(large, small));
  CHECK(S.leq(small, small));

  // N_a = points NOT containing a: bottom is in every prime ideal, the top
  // in none. This direction is load-bearing; the reversed reading would give
  // N_bottom = everything.
  CHECK(S.basic_n[0] == 0);
  CHECK(S.basic_n[2] == mask_all(2));
  CHECK(S.basic_n[1] == mask_bit(small));

  CHECK(S.point_name(small) == "{c0}");
  CHECK(S.point_name(large) == "{c0,c1}");
}

TEST_CASE("spectrum rejects non-distributive input") {
  CHECK_THROWS_MATCHES(spectrum(fixtures::m3()), Error,
                       ErrorCodeIs(errc::not_distributive));
  CHECK_THROWS_MATCHES(spectrum(fixtures::n5()), Error,
                       ErrorCodeIs(errc::not_distributive));
}

TEST_CASE("points are in bijection with join-irreducibles") {
  for (const Lattice& L : distributive_lattices_up_to(6)) {
    Spectrum S = spectrum(L);
    CHECK(S.point_count() == static_cast<int>(join_irreducibles(L).size()));
  }
}

TEST_CASE("down-sets of the point order") {
  Spectrum S = spectrum(chain(3));
  auto sets = downset_masks(S);
  REQUIRE(sets.size() == 3);
  // Canonical order is by size: empty, the singleton at the small point, all.
  CHECK(sets[0] == 0);
  CHECK(mask_size(sets[1]) == 1);
  CHECK(sets[2] == mask_all(2));

  // The 2x2 square has two incomparable points, so every subset is a
  // down-set.
  CHECK(downset_masks(spectrum(boolean_lattice(2))).size() == 4);
}

TEST_CASE("round-trip representation is an isomorphism") {
  std::vector<Lattice> samples;
  for (int n = 2; n <= 6; ++n) samples.push_back(chain(n));
  samples.push_back(boolean_lattice(2));
  samples.push_back(product({chain(2), chain(3)}));
  samples.push_back(boolean_lattice(3));
  samples.push_back(chain(1));

  for (const Lattice& L : samples) {
    RoundTrip R = birkhoff_roundtrip(L);
    INFO("lattice of size " << L.size());
    CHECK(R.homomorphism);
    CHECK(R.injective);
    CHECK(R.surjective);
    CHECK(R.isomorphic);
    REQUIRE(static_cast<int>(R.witness.size()) == L.size());
    CHECK(R.downsets.size() == L.size());
    CHECK(isomorphic(R.downsets, L));

    // The witness is the map a -> N_a itself, so it must send bounds to
    // bounds and preserve the order exactly.
    if (L.size() > 0) {
      CHECK(R.witness[L.bottom] == R.downsets.bottom);
      CHECK(R.witness[L.top] == R.downsets.top);
      for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b)
          CHECK(L.leq(a, b) == R.downsets.leq(R.witness[a], R.witness[b]));
    }
  }
}

TEST_CASE("round-trip tables over the full small corpus") {
  for (const Lattice& L : distributive_lattices_up_to(6)) {
    RoundTrip R = birkhoff_roundtrip(L);
    INFO("lattice of size " << L.size());
    CHECK(R.isomorphic);
    // Meet and join of basic sets are intersection and union on the nose.
    const auto sets = downset_masks(R.space);
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b) {
        Mask na = sets[R.witness[a]], nb = sets[R.witness[b]];
        CHECK(sets[R.witness[L.meet(a, b)]] == (na & nb));
        CHECK(sets[R.witness[L.join(a, b)]] == (na | nb));
      }
  }
}

TEST_CASE("order separation holds under both conventions") {
  for (const Lattice& L : distributive_lattices_up_to(6)) {
    Spectrum S = spectrum(L);
    INFO("lattice of size " << L.size());
    CHECK(separation_check(S).order_separated);
    CHECK(separation_check(S, true).order_separated);
    CHECK(separation_check(S).failures.empty());
  }
}

TEST_CASE("dual of a lattice homomorphism") {
  Lattice c2 = chain(2), c3 = chain(3), c4 = chain(4);
  Spectrum s2 = spectrum(c2), s3 = spectrum(c3), s4 = spectrum(c4);

  // Bounds embedding 2 -> 3: both prime ideals of the 3-chain pull back to
  // the single prime ideal of 2.
  std::vector<Elem> h{0, 2};
  auto dh = dual_of_lattice_hom(h, s2, s3);
  CHECK(dh == std::vector<int>{0, 0});

  // A surjection 3 -> 2 pulls the point of 2 back to one of the two points.
  std::vector<Elem> g{0, 0, 1};
  auto dg = dual_of_lattice_hom(g, s3, s2);
  REQUIRE(dg.size() == 1);
  CHECK(s3.points[dg[0]] == (mask_bit(0) | mask_bit(1)));

  // Contravariance: the dual of a composite is the duals composed the other
  // way around.
  std::vector<Elem> k{0, 1, 3};  // 3-chain into 4-chain, skipping one level
  REQUIRE(is_lattice_homomorphism(k, c3, c4));
  std::vector<Elem> kh(c2.size());
  for (Elem x = 0; x < c2.size(); ++x) kh[x] = k[h[x]];
  auto dk = dual_of_lattice_hom(k, s3, s4);
  auto dkh = dual_of_lattice_hom(kh, s2, s4);
  REQUIRE(dkh.size() == dk.size());
  for (std::size_t q = 0; q < dk.size(); ++q) CHECK(dkh[q] == dh[dk[q]]);

  // Non-homomorphisms are rejected up front.
  CHECK_THROWS_MATCHES(dual_of_lattice_hom({1, 2}, s2, s3), Error,
                       ErrorCodeIs(errc::bad_input));
}

TEST_CASE("finite spectra are discrete") {
  // Two points: the subbase already separates them, so all four subsets are
  // basic opens and the full topology is the power set.
  Spectrum S = spectrum(chain(3));
  auto basics = basic_open_masks(S);
  auto opens = open_masks(S);
  CHECK(basics.size() == 4);
  CHECK(opens.size() == 4);
  CHECK(std::find(opens.begin(), opens.end(), Mask{0}) != opens.end());
  CHECK(std::find(opens.begin(), opens.end(), mask_all(2)) != opens.end());

  for (const Lattice& L : distributive_lattices_up_to(5)) {
    Spectrum T = spectrum(L);
    INFO("lattice of size " << L.size());
    CHECK(open_masks(T).size() == (std::size_t{1} << T.point_count()));
  }
}
