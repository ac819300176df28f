#ifndef GPACK_GPACK_HPP
#define GPACK_GPACK_HPP

// umbrella header

#include "gpack/bitset.hpp"
#include "gpack/conditions.hpp"
#include "gpack/generators.hpp"
#include "gpack/graph.hpp"
#include "gpack/harness.hpp"
#include "gpack/invariants.hpp"
#include "gpack/packing.hpp"
#include "gpack/rational.hpp"
#include "gpack/rng.hpp"
#include "gpack/swaps.hpp"

#endif
