#pragma once

// Exact rational polyhedral calculus in V-form.

#include "svtakagi/exactgeom/cone_ops.hpp"
#include "svtakagi/exactgeom/json.hpp"
#include "svtakagi/exactgeom/linalg.hpp"
#include "svtakagi/exactgeom/operations.hpp"
#include "svtakagi/exactgeom/polyhedron.hpp"
#include "svtakagi/exactgeom/rational.hpp"
#include "svtakagi/exactgeom/simplex.hpp"
