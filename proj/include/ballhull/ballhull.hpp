#pragma once

#include "ballhull/core.hpp"
#include "ballhull/norm.hpp"
#include "ballhull/sets.hpp"
#include "ballhull/lattice.hpp"
#include "ballhull/arc_region.hpp"
#include "ballhull/set_oracle.hpp"
#include "ballhull/polarity.hpp"
#include "ballhull/grid_function.hpp"
#include "ballhull/function_lab.hpp"
#include "ballhull/io.hpp"
#include "ballhull/instances.hpp"
#include "ballhull/report.hpp"
#include "ballhull/suites.hpp"
#include "ballhull/svg.hpp"
