#pragma once

// Umbrella header for the whole library.

#include "stirconv/explore.hpp"
#include "stirconv/identities.hpp"
#include "stirconv/io.hpp"
#include "stirconv/polynomial.hpp"
#include "stirconv/rational.hpp"
#include "stirconv/series.hpp"
#include "stirconv/transforms.hpp"
#include "stirconv/triangles.hpp"
