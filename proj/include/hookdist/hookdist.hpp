#pragma once

// Exact distributions of hook-length statistics over integer partitions,
// their saddle-point asymptotics, and the limiting normal / shifted-Gamma
// laws, with q-series identity checks at desk scale.

#include "hookdist/asymptotics.hpp"
#include "hookdist/distribution.hpp"
#include "hookdist/identities.hpp"
#include "hookdist/io.hpp"
#include "hookdist/numeric.hpp"
#include "hookdist/partition.hpp"
#include "hookdist/polynomial.hpp"
#include "hookdist/qseries.hpp"
#include "hookdist/series.hpp"
#include "hookdist/special_functions.hpp"
#include "hookdist/statistics.hpp"
#include "hookdist/verification.hpp"
