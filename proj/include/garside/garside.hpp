#pragma once

// Umbrella header for the whole library.

#include "garside/braid.hpp"
#include "garside/conjugacy.hpp"
#include "garside/curve.hpp"
#include "garside/error.hpp"
#include "garside/lattice.hpp"
#include "garside/parse.hpp"
#include "garside/permutation_braid.hpp"
#include "garside/reducibility.hpp"
#include "garside/standardizer.hpp"
#include "garside/tube.hpp"
