#pragma once

// Convenience header pulling in the whole public API.

#include "ulb/bounds.hpp"
#include "ulb/codes.hpp"
#include "ulb/energy_bound.hpp"
#include "ulb/error.hpp"
#include "ulb/orthopoly.hpp"
#include "ulb/polynomial.hpp"
#include "ulb/potentials.hpp"
#include "ulb/quadrature.hpp"
#include "ulb/test_functions.hpp"
