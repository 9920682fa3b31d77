#pragma once

#include "tropnp/json.hpp"
#include "tropnp/newton_polygon.hpp"
#include "tropnp/parametric_roots.hpp"
#include "tropnp/polynomial.hpp"
#include "tropnp/prng.hpp"
#include "tropnp/puiseux.hpp"
#include "tropnp/rational.hpp"
