#pragma once

#include "sephyp/budget.hpp"
#include "sephyp/error.hpp"
#include "sephyp/feasibility.hpp"
#include "sephyp/fourier_motzkin.hpp"
#include "sephyp/hypercore.hpp"
#include "sephyp/hypergraph.hpp"
#include "sephyp/io.hpp"
#include "sephyp/matroid.hpp"
#include "sephyp/oracle_algorithms.hpp"
#include "sephyp/rational.hpp"
#include "sephyp/vertex_set.hpp"
#include "sephyp/enumeration.hpp"
