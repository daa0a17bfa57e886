#pragma once

// Umbrella header: exact enumeration of perfect matchings and tilings.

#include "dimerlab/analysis.hpp"
#include "dimerlab/cellcomplex.hpp"
#include "dimerlab/factor.hpp"
#include "dimerlab/families.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/matrix.hpp"
#include "dimerlab/numeric.hpp"
#include "dimerlab/planegraph.hpp"
#include "dimerlab/polynomial.hpp"
#include "dimerlab/region.hpp"
#include "dimerlab/rewrite.hpp"
#include "dimerlab/weighted.hpp"
