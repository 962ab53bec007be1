#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "latsheaf/latsheaf.hpp"
#include "fixtures.hpp"

using namespace latsheaf;

namespace {

// Independent counting oracle. Encodes a poset as the strict pairs (i, j)
// with i < j in label order (every poset admits such a labeling), filters
// for transitivity, and dedupes by the minimal relation matrix over all
// relabelings.
struct BrutePoset {
  int n = 0;
  std::vector<char> le;  // n*n, reflexive closure included
  bool leq(int a, int b) const { return le[a * n + b] != 0; }
};

std::vector<BrutePoset> brute_posets(int n) {
  const int bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<int> perm(n);
  std::set<std::string> seen;
  std::vector<BrutePoset> out;

  for (long long m = 0; m < (1LL << bits); ++m) {
    BrutePoset P;
    P.n = n;
    P.le.assign(n * n, 0);
    for (int i = 0; i < n; ++i) P.le[i * n + i] = 1;
    for (int b = 0; b < bits; ++b)
      if (m & (1LL << b)) P.le[pairs[b].first * n + pairs[b].second] = 1;

    bool trans = true;
    for (int i = 0; i < n && trans; ++i)
      for (int j = 0; j < n && trans; ++j)
        for (int k = 0; k < n && trans; ++k)
          if (P.leq(i, j) && P.leq(j, k) && !P.leq(i, k)) trans = false;
    if (!trans) continue;

    std::string best;
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      std::string key(n * n, '0');
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          key[i * n + j] = P.leq(perm[i], perm[j]) ? '1' : '0';
      if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (seen.insert(best).second) out.push_back(P);
  }
  return out;
}

bool brute_is_lattice(const BrutePoset& P) {
  auto bound = [&](int a, int b, bool lower) {
    std::vector<int> cand;
    for (int c = 0; c < P.n; ++c)
      if (lower ? (P.leq(c, a) && P.leq(c, b)) : (P.leq(a, c) && P.leq(b, c)))
        cand.push_back(c);
    for (int m : cand) {
      bool extreme = true;
      for (int c : cand)
        if (lower ? !P.leq(c, m) : !P.leq(m, c)) extreme = false;
      if (extreme) return true;
    }
    return false;
  };
  for (int a = 0; a < P.n; ++a)
    for (int b = a + 1; b < P.n; ++b)
      if (!bound(a, b, true) || !bound(a, b, false)) return false;
  return true;
}

bool brute_is_distributive(const BrutePoset& P) {
  auto meet_or_join = [&](int a, int b, bool lower) {
    for (int m = 0; m < P.n; ++m) {
      bool is_bound = lower ? (P.leq(m, a) && P.leq(m, b)) : (P.leq(a, m) && P.leq(b, m));
      if (!is_bound) continue;
      bool extreme = true;
      for (int c = 0; c < P.n; ++c) {
        bool cb = lower ? (P.leq(c, a) && P.leq(c, b)) : (P.leq(a, c) && P.leq(b, c));
        if (cb && (lower ? !P.leq(c, m) : !P.leq(m, c))) extreme = false;
      }
      if (extreme) return m;
    }
    return -1;
  };
  for (int x = 0; x < P.n; ++x)
    for (int y = 0; y < P.n; ++y)
      for (int z = 0; z < P.n; ++z) {
        int lhs = meet_or_join(x, meet_or_join(y, z, false), true);
        int rhs = meet_or_join(meet_or_join(x, y, true), meet_or_join(x, z, true), false);
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("poset counts match the brute-force oracle") {
  std::vector<int> by_size(8, 0);
  for (const Poset& P : posets_up_to(6)) ++by_size[P.n];
  CHECK(by_size[1] == 1);
  CHECK(by_size[2] == 2);
  CHECK(by_size[3] == 5);
  CHECK(by_size[4] == 16);
  CHECK(by_size[5] == 63);
  CHECK(by_size[6] == 318);

  for (int n = 1; n <= 5; ++n) {
    INFO("n = " << n);
    CHECK(static_cast<int>(brute_posets(n).size()) == by_size[n]);
  }

  CHECK_THROWS_MATCHES(posets_up_to(8), Error, ErrorCodeIs(errc::too_large));
}

TEST_CASE("lattice counts match the brute-force oracle") {
  std::vector<int> by_size(8, 0);
  for (const Lattice& L : all_lattices_up_to(7)) ++by_size[L.size()];
  CHECK(by_size[1] == 1);
  CHECK(by_size[2] == 1);
  CHECK(by_size[3] == 1);
  CHECK(by_size[4] == 2);
  CHECK(by_size[5] == 5);
  CHECK(by_size[6] == 15);
  CHECK(by_size[7] == 53);

  for (int n = 1; n <= 5; ++n) {
    int brute = 0;
    for (const BrutePoset& P : brute_posets(n))
      if (brute_is_lattice(P)) ++brute;
    INFO("n = " << n);
    CHECK(brute == by_size[n]);
  }
}

TEST_CASE("lattice representatives are pairwise non-isomorphic") {
  auto all = all_lattices_up_to(6);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].size() != all[j].size()) continue;
      INFO("entries " << i << " and " << j);
      CHECK_FALSE(isomorphic(all[i], all[j]));
    }
}

TEST_CASE("distributive lattice counts") {
  std::vector<int> by_size(9, 0);
  for (const Lattice& L : distributive_lattices_up_to(8)) {
    CHECK(is_distributive(L));
    ++by_size[L.size()];
  }
  CHECK(by_size[1] == 1);
  CHECK(by_size[2] == 1);
  CHECK(by_size[3] == 1);
  CHECK(by_size[4] == 2);
  CHECK(by_size[5] == 3);
  CHECK(by_size[6] == 5);
  CHECK(by_size[7] == 8);
  CHECK(by_size[8] == 15);

  for (int n = 1; n <= 5; ++n) {
    int brute = 0;
    for (const BrutePoset& P : brute_posets(n))
      if (brute_is_lattice(P) && brute_is_distributive(P)) ++brute;
    INFO("n = " << n);
    CHECK(brute == by_size[n]);
  }

  // The two generators agree: filtering the full enumeration for
  // distributivity gives the Birkhoff-generated family.
  int filtered = 0;
  for (const Lattice& L : all_lattices_up_to(6))
    if (is_distributive(L)) ++filtered;
  CHECK(filtered == 1 + 1 + 1 + 2 + 3 + 5);

  CHECK_THROWS_MATCHES(distributive_lattices_up_to(0), Error,
                       ErrorCodeIs(errc::bad_input));
}

TEST_CASE("the standard corpus is valid, labeled, and deterministic") {
  auto corpus = standard_corpus();
  CHECK(corpus.size() == 56);

  std::set<std::string> labels;
  int last_size = 0;
  for (const CorpusEntry& e : corpus) {
    INFO(e.label);
    CHECK(validate_algebra(e.algebra).empty());
    CHECK(labels.insert(e.label).second);  // no duplicate labels
    CHECK(e.algebra.size() >= last_size);  // sorted by carrier size
    last_size = e.algebra.size();
    if (e.algebra.op_count() == 0) CHECK(e.algebra.size() <= 6);
  }

  for (const char* want :
       {"dl1_0", "dl2_0", "dl2_0_cl", "c4_up", "c4_cl_up", "c5_cl_up2",
        "p_2x3cl", "p_2x4cl", "p_2x22cl", "b8_grp", "b8_cl_grp", "dl8_14_cl"})
    CHECK(labels.count(want));

  // Growing the cap only appends (plus resorting): frozen sizes per cap.
  CHECK(standard_corpus(2).size() == 3);
  CHECK(standard_corpus(3).size() == 5);
  CHECK(standard_corpus(4).size() == 11);
  CHECK(standard_corpus(5).size() == 18);
  CHECK(standard_corpus(6).size() == 29);
  CHECK(standard_corpus(7).size() == 37);

  CHECK_THROWS_MATCHES(standard_corpus(1), Error, ErrorCodeIs(errc::bad_input));
  CHECK_THROWS_MATCHES(standard_corpus(9), Error, ErrorCodeIs(errc::bad_input));
}

TEST_CASE("relatively complemented corpus members have Boolean centers") {
  for (const CorpusEntry& e : standard_corpus()) {
    if (!is_relatively_complemented(e.algebra.lattice)) continue;
    INFO(e.label);
    const Lattice& Z = center(e.algebra).algebra.lattice;
    CHECK(is_distributive(Z));
    CHECK(is_relatively_complemented(Z));
  }
}
