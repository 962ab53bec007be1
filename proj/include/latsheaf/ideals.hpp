#ifndef LATSHEAF_IDEALS_HPP
#define LATSHEAF_IDEALS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "latsheaf/blo.hpp"
#include "latsheaf/core.hpp"
#include "latsheaf/lattice.hpp"

namespace latsheaf {

inline Mask down_set(const Lattice& L, Elem x) {
  Mask m = 0;
  for (Elem z = 0; z < L.size(); ++z)
    if (L.leq(z, x)) m |= mask_bit(z);
  return m;
}

inline Mask up_set(const Lattice& L, Elem x) {
  Mask m = 0;
  for (Elem z = 0; z < L.size(); ++z)
    if (L.leq(x, z)) m |= mask_bit(z);
  return m;
}

// Nonempty, downward closed, join closed.
inline bool is_ideal(const Lattice& L, Mask I) {
  if (I == 0) return false;
  for (Elem x = 0; x < L.size(); ++x) {
    if (!mask_has(I, x)) continue;
    for (Elem z = 0; z < L.size(); ++z) {
      if (L.leq(z, x) && !mask_has(I, z)) return false;
      if (mask_has(I, z) && !mask_has(I, L.join(x, z))) return false;
    }
  }
  return true;
}

// An ideal closed under every operator of the algebra.
inline bool is_operator_ideal(const Algebra& A, Mask I) {
  if (!is_ideal(A.lattice, I)) return false;
  for (Elem x = 0; x < A.size(); ++x)
    if (mask_has(I, x))
      for (int i = 0; i < A.op_count(); ++i)
        if (!mask_has(I, A.apply(i, x))) return false;
  return true;
}

// In a finite lattice every ideal has a maximum, so the ideals are exactly
// the principal down-sets. Listed in canonical order: by size, then by mask
// value.
inline std::vector<Mask> all_ideals(const Lattice& L) {
  std::vector<Mask> out;
  for (Elem x = 0; x < L.size(); ++x) out.push_back(down_set(L, x));
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (mask_size(a) != mask_size(b)) return mask_size(a) < mask_size(b);
    return a < b;
  });
  return out;
}

// Ideals closed under every operator: the down-sets of elements x with
// f_i(x) <= x for all i.
inline std::vector<Mask> all_operator_ideals(const Algebra& A) {
  std::vector<Mask> out;
  for (Elem x = 0; x < A.size(); ++x) {
    bool closed = true;
    for (int i = 0; i < A.op_count() && closed; ++i)
      closed = A.lattice.leq(A.apply(i, x), x);
    if (closed) out.push_back(down_set(A.lattice, x));
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (mask_size(a) != mask_size(b)) return mask_size(a) < mask_size(b);
    return a < b;
  });
  return out;
}

inline bool is_prime_ideal(const Lattice& L, Mask I) {
  if (!is_ideal(L, I) || I == mask_all(L.size())) return false;
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y)
      if (mask_has(I, L.meet(x, y)) && !mask_has(I, x) && !mask_has(I, y))
        return false;
  return true;
}

// Proper ideals whose complement is closed under meet; canonical order as in
// all_ideals.
inline std::vector<Mask> prime_ideals(const Lattice& L) {
  std::vector<Mask> out;
  for (Mask I : all_ideals(L))
    if (I != mask_all(L.size()) && is_prime_ideal(L, I)) out.push_back(I);
  return out;
}

// Maximum of the smallest operator-closed ideal containing X: push the join
// of X up with every operator until it stops moving. Works on carriers of
// any size (the ideal itself is the down-set of the result).
inline Elem ideal_generator(const Algebra& A, const std::vector<Elem>& X) {
  const Lattice& L = A.lattice;
  Elem m = L.bottom;
  for (Elem x : X) m = L.join(m, x);
  for (;;) {
    Elem next = m;
    for (int i = 0; i < A.op_count(); ++i) next = L.join(next, A.apply(i, m));
    if (next == m) break;
    m = next;
  }
  return m;
}

// Smallest operator-closed ideal containing X, as a mask.
inline Mask ideal_generated(const Algebra& A, Mask X) {
  std::vector<Elem> xs;
  for (Elem x = 0; x < A.size(); ++x)
    if (mask_has(X, x)) xs.push_back(x);
  return down_set(A.lattice, ideal_generator(A, xs));
}

inline Mask ideal_generated(const Algebra& A, Elem x) {
  return ideal_generated(A, mask_bit(x));
}

// Maximal among proper operator-closed ideals.
inline bool is_maximal_operator_ideal(const Algebra& A, Mask I) {
  if (!is_operator_ideal(A, I) || I == mask_all(A.size())) return false;
  for (Mask J : all_operator_ideals(A))
    if (J != I && J != mask_all(A.size()) && (I & ~J) == 0) return false;
  return true;
}

inline std::vector<std::string> mask_names(const Lattice& L, Mask m) {
  std::vector<std::string> out;
  for (Elem x = 0; x < L.size(); ++x)
    if (mask_has(m, x)) out.push_back(L.name(x));
  return out;
}

}  // namespace latsheaf

#endif  // LATSHEAF_IDEALS_HPP
