#pragma once

// Umbrella header for the Faber airfoil library.

#include "faber/common.hpp"
#include "faber/errors.hpp"
#include "faber/parallel.hpp"
#include "faber/poly.hpp"
#include "faber/conformal.hpp"
#include "faber/polynomials.hpp"
#include "faber/limitsets.hpp"
#include "faber/rootfind.hpp"
#include "faber/measures.hpp"
#include "faber/svg.hpp"
#include "faber/cli.hpp"
