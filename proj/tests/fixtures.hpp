#ifndef LATSHEAF_TESTS_FIXTURES_HPP
#define LATSHEAF_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "latsheaf/latsheaf.hpp"

// Matcher for the library's typed errors, usable with CHECK_THROWS_MATCHES.
class ErrorCodeIs : public Catch::Matchers::MatcherGenericBase {
 public:
  explicit ErrorCodeIs(latsheaf::errc c) : code_(c) {}
  bool match(const latsheaf::Error& e) const { return e.code() == code_; }
  std::string describe() const override {
    return std::string("has error code ") + latsheaf::errc_name(code_);
  }

 private:
  latsheaf::errc code_;
};

namespace fixtures {

using namespace latsheaf;

// 0 < a,b,c < 1 with the three middles pairwise incomparable.
inline Lattice m3() {
  return make_lattice({"0", "a", "b", "c", "1"},
                      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

// 0 < a < c < 1 and 0 < b < 1, pentagon.
inline Lattice n5() {
  return make_lattice({"0", "a", "b", "c", "1"},
                      {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}

// x -> top except bottom; the strongest closure operator.
inline std::vector<Elem> to_top(const Lattice& L) {
  std::vector<Elem> t(L.size());
  for (Elem x = 0; x < L.size(); ++x) t[x] = x == L.bottom ? L.bottom : L.top;
  return t;
}

inline Algebra chain_cl(int n) {
  Lattice L = chain(n);
  auto t = to_top(L);
  return make_algebra(std::move(L), {"cl"}, {std::move(t)});
}

// 2x2 with the closure sending everything above bottom to top.
inline Algebra square_cl() {
  Lattice L = boolean_lattice(2);
  auto t = to_top(L);
  return make_algebra(std::move(L), {"cl"}, {std::move(t)});
}

// 2^3 with the same all-or-nothing closure.
inline Algebra cube_cl() {
  Lattice L = boolean_lattice(3);
  auto t = to_top(L);
  return make_algebra(std::move(L), {"cl"}, {std::move(t)});
}

// 2x2 = {0, p, q, 1} with f fixing p and rounding q up to 1. Its center
// {0, p, 1} is a three-element chain, which makes it the standard witness
// that a relatively complemented carrier does not force eta onto.
inline Algebra square_qup() {
  Lattice L = boolean_lattice(2);
  // boolean_lattice(2) names: {}, {a}, {b}, {a,b} in mask order.
  std::vector<Elem> f(L.size());
  for (Elem x = 0; x < L.size(); ++x) f[x] = x;
  f[2] = 3;  // {b} -> {a,b}
  return make_algebra(std::move(L), {"f"}, {std::move(f)});
}

// chain4 = {0, a, b, 1} with g rounding a up to b. The point {0, b} of its
// center has no exact-class congruence, which separates the two quotient
// modes.
inline Algebra chain4_roundup() {
  Lattice L = chain(4);
  std::vector<Elem> g(L.size());
  for (Elem x = 0; x < L.size(); ++x) g[x] = x;
  g[1] = 2;
  return make_algebra(std::move(L), {"g"}, {std::move(g)});
}

// 2^3 with the closure by atom groups {a,b} | {c}: the center is the
// 4-element Boolean algebra {0, a v b, c, 1}.
inline Algebra cube_grp() {
  Lattice L = boolean_lattice(3);
  std::vector<Elem> atoms = join_irreducibles(L);
  std::vector<Elem> gj = {L.join(atoms[0], atoms[1]), atoms[2]};
  std::vector<Elem> t(L.size());
  for (Elem x = 0; x < L.size(); ++x) {
    Elem v = L.bottom;
    if (L.leq(atoms[0], x) || L.leq(atoms[1], x)) v = L.join(v, gj[0]);
    if (L.leq(atoms[2], x)) v = L.join(v, gj[1]);
    t[x] = v;
  }
  return make_algebra(std::move(L), {"grp"}, {std::move(t)});
}

inline Algebra no_ops(const Lattice& L) { return make_algebra(L, {}, {}); }

}  // namespace fixtures

#endif  // LATSHEAF_TESTS_FIXTURES_HPP
