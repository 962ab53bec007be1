#ifndef LATSHEAF_CORE_HPP
#define LATSHEAF_CORE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace latsheaf {

// Failure categories surfaced by the library. Violation *reports* (validation,
// eta, classification) are ordinary return values; errors are for inputs or
// requests that have no answer.
enum class errc {
  duplicate_element,
  no_bounds,
  not_a_lattice,
  not_distributive,
  too_large,
  not_closed,
  not_compatible,
  not_a_partition,
  not_well_defined,
  not_prime,
  factor_not_indecomposable,
  bad_input,
  bad_manifest,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_element: return "DuplicateElement";
    case errc::no_bounds: return "NoBounds";
    case errc::not_a_lattice: return "NotALattice";
    case errc::not_distributive: return "NotDistributive";
    case errc::too_large: return "TooLarge";
    case errc::not_closed: return "NotClosed";
    case errc::not_compatible: return "NotCompatible";
    case errc::not_a_partition: return "NotAPartition";
    case errc::not_well_defined: return "NotWellDefined";
    case errc::not_prime: return "NotPrime";
    case errc::factor_not_indecomposable: return "FactorNotIndecomposable";
    case errc::bad_input: return "BadInput";
    case errc::bad_manifest: return "BadManifest";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

// Elements of a carrier are indices into its name list; subsets are bitmasks.
using Elem = int;
using Mask = std::uint64_t;

inline constexpr int kMaskLimit = 64;

inline constexpr Mask mask_bit(int i) { return Mask{1} << i; }
inline constexpr bool mask_has(Mask m, int i) { return (m >> i) & 1u; }
inline constexpr int mask_size(Mask m) { return std::popcount(m); }
inline constexpr Mask mask_all(int n) {
  return n >= kMaskLimit ? ~Mask{0} : (Mask{1} << n) - 1;
}

}  // namespace latsheaf

#endif  // LATSHEAF_CORE_HPP
