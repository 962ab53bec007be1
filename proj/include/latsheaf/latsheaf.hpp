#ifndef LATSHEAF_LATSHEAF_HPP
#define LATSHEAF_LATSHEAF_HPP

#include "latsheaf/core.hpp"
#include "latsheaf/lattice.hpp"
#include "latsheaf/blo.hpp"
#include "latsheaf/ideals.hpp"
#include "latsheaf/congruences.hpp"
#include "latsheaf/priestley.hpp"
#include "latsheaf/sheaf.hpp"
#include "latsheaf/classify.hpp"
#include "latsheaf/epi.hpp"
#include "latsheaf/enumerate.hpp"
#include "latsheaf/json_io.hpp"
#include "latsheaf/detail/parallel.hpp"

#endif  // LATSHEAF_LATSHEAF_HPP
