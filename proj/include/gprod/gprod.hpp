#pragma once

#include "gprod/cliques.hpp"
#include "gprod/edge_list.hpp"
#include "gprod/error.hpp"
#include "gprod/generators.hpp"
#include "gprod/graph.hpp"
#include "gprod/mcs.hpp"
#include "gprod/metrics.hpp"
#include "gprod/montecarlo.hpp"
#include "gprod/numeric.hpp"
#include "gprod/products.hpp"
#include "gprod/rng.hpp"
#include "gprod/serialize.hpp"
#include "gprod/theory.hpp"
