#pragma once

// Umbrella header for the staircase library: exact Newton-polytope invariants
// of monomial ideals (colength, multiplicity, multiplier ideals, integral
// closure), bound checks over them, a randomized sweep harness, and the
// numeric radial laboratory.

#include "errors.hpp"
#include "rational.hpp"
#include "monomial_ideal.hpp"
#include "linalg.hpp"
#include "newton.hpp"
#include "multiplier.hpp"
#include "rng.hpp"
#include "report.hpp"
#include "radial.hpp"
#include "harness.hpp"
#include "ideal_parse.hpp"
#include "json_io.hpp"
