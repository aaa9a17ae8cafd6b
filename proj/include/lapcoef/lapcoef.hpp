#pragma once

#include "lapcoef/bigint.hpp"
#include "lapcoef/charpoly.hpp"
#include "lapcoef/closed_form.hpp"
#include "lapcoef/diagnostics.hpp"
#include "lapcoef/edge_list.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/families.hpp"
#include "lapcoef/graph.hpp"
#include "lapcoef/limit_stats.hpp"
#include "lapcoef/matrix.hpp"
#include "lapcoef/oracles.hpp"
#include "lapcoef/parallel.hpp"
#include "lapcoef/spectrum.hpp"
#include "lapcoef/verify.hpp"
