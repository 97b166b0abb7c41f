#pragma once

#include "minrank/bounds.hpp"
#include "minrank/common.hpp"
#include "minrank/experiment.hpp"
#include "minrank/geom.hpp"
#include "minrank/graph.hpp"
#include "minrank/matrix.hpp"
#include "minrank/pattern.hpp"
#include "minrank/poly.hpp"
#include "minrank/scalar.hpp"
#include "minrank/solver.hpp"
