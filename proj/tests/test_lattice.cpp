#include <algorithm>
#include <set>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "latsheaf/latsheaf.hpp"

using namespace latsheaf;

namespace {

// Definition-level distributivity scan, kept separate from the library so
// the two can disagree.
bool oracle_distributive(const Lattice& L) {
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y)
      for (Elem z = 0; z < L.size(); ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
          return false;
  return true;
}

bool oracle_relatively_complemented(const Lattice& L) {
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b) {
      if (!L.leq(a, b)) continue;
      for (Elem x = 0; x < L.size(); ++x) {
        if (!L.leq(a, x) || !L.leq(x, b)) continue;
        bool has = false;
        for (Elem y = 0; y < L.size() && !has; ++y)
          has = L.leq(a, y) && L.leq(y, b) && L.meet(x, y) == a && L.join(x, y) == b;
        if (!has) return false;
      }
    }
  return true;
}

}  // namespace

TEST_CASE("make_lattice computes tables for the square") {
  Lattice L = boolean_lattice(2);
  REQUIRE(L.size() == 4);
  REQUIRE(L.bottom == 0);
  REQUIRE(L.top == 3);
  REQUIRE(L.name(0) == "{}");
  REQUIRE(L.name(3) == "{a,b}");
  CHECK(L.meet(1, 2) == 0);
  CHECK(L.join(1, 2) == 3);
  CHECK(L.leq(1, 3));
  CHECK_FALSE(L.leq(1, 2));
  CHECK(covers(L).size() == 4);
}

TEST_CASE("make_lattice rejects defective inputs") {
  CHECK_THROWS_MATCHES(make_lattice({"a", "a"}, {}), Error, ErrorCodeIs(errc::duplicate_element));
  // Two incomparable points: no bounds at all.
  CHECK_THROWS_MATCHES(make_lattice({"a", "b"}, {}), Error, ErrorCodeIs(errc::no_bounds));
  // Bounded but a pair without a join: 0 < a,b < c,d < 1.
  CHECK_THROWS_MATCHES(
      make_lattice({"0", "a", "b", "c", "d", "1"},
                   {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"},
                    {"b", "d"}, {"c", "1"}, {"d", "1"}}),
      Error, ErrorCodeIs(errc::not_a_lattice));
  // Unknown name in a pair.
  CHECK_THROWS_MATCHES(make_lattice({"a"}, {{"a", "z"}}), Error, ErrorCodeIs(errc::bad_input));
}

TEST_CASE("chains and cubes have the expected shape") {
  Lattice c5 = chain(5);
  REQUIRE(c5.size() == 5);
  CHECK(c5.bottom == 0);
  CHECK(c5.top == 4);
  CHECK(c5.meet(1, 3) == 1);
  CHECK(c5.join(1, 3) == 3);
  CHECK(covers(c5).size() == 4);

  Lattice b3 = boolean_lattice(3);
  REQUIRE(b3.size() == 8);
  CHECK(covers(b3).size() == 12);
  CHECK(join_irreducibles(b3) == std::vector<Elem>{1, 2, 4});
  CHECK(join_irreducibles(c5) == std::vector<Elem>{1, 2, 3, 4});
}

TEST_CASE("distributivity agrees with the definitional scan") {
  CHECK(is_distributive(chain(4)));
  CHECK(is_distributive(boolean_lattice(3)));
  CHECK_FALSE(is_distributive(fixtures::m3()));
  CHECK_FALSE(is_distributive(fixtures::n5()));
  for (const Lattice& L :
       {chain(1), chain(3), chain(6), boolean_lattice(2), fixtures::m3(), fixtures::n5(),
        product({chain(2), chain(3)})})
    CHECK(is_distributive(L) == oracle_distributive(L));
}

TEST_CASE("relative complementation agrees with the definitional scan") {
  CHECK(is_relatively_complemented(boolean_lattice(2)));
  CHECK(is_relatively_complemented(boolean_lattice(3)));
  CHECK(is_relatively_complemented(chain(2)));
  CHECK_FALSE(is_relatively_complemented(chain(3)));
  CHECK(is_relatively_complemented(fixtures::m3()));
  CHECK_FALSE(is_relatively_complemented(fixtures::n5()));
  for (const Lattice& L :
       {chain(1), chain(4), boolean_lattice(2), fixtures::m3(), fixtures::n5(),
        product({chain(2), chain(2)})})
    CHECK(is_relatively_complemented(L) == oracle_relatively_complemented(L));
}

TEST_CASE("join and meet irreducibles of the pentagon") {
  Lattice L = fixtures::n5();
  // 0 < a < c < 1, 0 < b < 1: irreducibles are a, b, c.
  auto ji = join_irreducibles(L);
  std::set<std::string> names;
  for (Elem x : ji) names.insert(L.name(x));
  CHECK(names == std::set<std::string>{"a", "b", "c"});
  CHECK(is_meet_irreducible(L, *L.index_of("b")));
  CHECK_FALSE(is_join_irreducible(L, L.top));
  CHECK_FALSE(is_join_irreducible(L, L.bottom));
}

TEST_CASE("lattice homomorphism check enforces bounds and both operations") {
  Lattice c2 = chain(2), c3 = chain(3);
  CHECK(is_lattice_homomorphism({0, 2}, c2, c3));
  CHECK_FALSE(is_lattice_homomorphism({0, 1}, c2, c3));  // top not preserved
  CHECK_FALSE(is_lattice_homomorphism({1, 2}, c2, c3));  // bottom not preserved

  Lattice sq = boolean_lattice(2);
  CHECK(is_lattice_homomorphism({0, 1, 2, 3}, sq, sq));
  CHECK(is_lattice_homomorphism({0, 2, 1, 3}, sq, sq));
  CHECK_FALSE(is_lattice_homomorphism({0, 1, 1, 3}, sq, sq));  // merges meet badly: 1^1=1 but p^q=0
  // Monotone, bound-preserving, but not meet-preserving: square onto chain3
  // sending both atoms to the middle.
  CHECK_FALSE(is_lattice_homomorphism({0, 1, 1, 2}, sq, c3));
}

TEST_CASE("products multiply sizes and preserve the componentwise order") {
  Lattice p = product({chain(2), chain(3)});
  REQUIRE(p.size() == 6);
  CHECK(is_distributive(p));
  CHECK(covers(p).size() == 7);

  Lattice sq = product({chain(2), chain(2)});
  CHECK(isomorphic(sq, boolean_lattice(2)));
  CHECK_FALSE(isomorphic(sq, chain(4)));

  Lattice b3 = product({chain(2), chain(2), chain(2)});
  CHECK(isomorphic(b3, boolean_lattice(3)));
}

TEST_CASE("isomorphism search is a bijective order-embedding and respects invariants") {
  Lattice a = boolean_lattice(2);
  Lattice b = make_lattice({"bot", "x", "y", "top"},
                           {{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}});
  auto f = find_isomorphism(a, b);
  REQUIRE(f.has_value());
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      CHECK(a.leq(x, y) == b.leq((*f)[x], (*f)[y]));
      CHECK((*f)[a.meet(x, y)] == b.meet((*f)[x], (*f)[y]));
    }
  CHECK_FALSE(find_isomorphism(a, chain(4)).has_value());
  CHECK_FALSE(isomorphic(fixtures::m3(), fixtures::n5()));
  CHECK(isomorphic(fixtures::m3(), fixtures::m3()));
}
