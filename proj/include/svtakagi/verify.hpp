#pragma once

// Jensen hypotheses, dyadic conclusions, the inductive oracle and reports.

#include "svtakagi/verify/checks.hpp"
#include "svtakagi/verify/oracle.hpp"
#include "svtakagi/verify/parallel.hpp"
#include "svtakagi/verify/preconditions.hpp"
#include "svtakagi/verify/report.hpp"
#include "svtakagi/verify/run.hpp"
#include "svtakagi/verify/search.hpp"
