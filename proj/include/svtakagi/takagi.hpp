#pragma once

// Takagi-type series, dyadic parameters and scalar error functions.

#include "svtakagi/takagi/dyadic.hpp"
#include "svtakagi/takagi/error_function.hpp"
#include "svtakagi/takagi/series.hpp"
