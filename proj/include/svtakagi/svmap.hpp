#pragma once

// Set-valued maps over rational domains and their Takagi transformation.

#include "svtakagi/svmap/grid.hpp"
#include "svtakagi/svmap/json.hpp"
#include "svtakagi/svmap/map.hpp"
#include "svtakagi/svmap/polynomial.hpp"
#include "svtakagi/svmap/transform.hpp"
