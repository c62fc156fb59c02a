#pragma once

// Umbrella header: exact operadic calculus on Hochschild-type chain spaces,
// with cyclic structure, homology, and identity checkers.

#include "opcalc/algebra.hpp"
#include "opcalc/calculus.hpp"
#include "opcalc/checks.hpp"
#include "opcalc/comp_module.hpp"
#include "opcalc/errors.hpp"
#include "opcalc/hochschild.hpp"
#include "opcalc/homology.hpp"
#include "opcalc/json_io.hpp"
#include "opcalc/matrix.hpp"
#include "opcalc/operad.hpp"
#include "opcalc/poisson.hpp"
#include "opcalc/rand.hpp"
#include "opcalc/scalar.hpp"
#include "opcalc/tensor.hpp"
