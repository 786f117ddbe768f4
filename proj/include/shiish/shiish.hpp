#pragma once

// Umbrella header: exact Shi/Ish arrangement toolkit.

#include "arrangement.hpp"
#include "census.hpp"
#include "charpoly.hpp"
#include "feasibility.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "guards.hpp"
#include "labelings.hpp"
#include "linalg.hpp"
#include "numeric.hpp"
#include "parallel.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"
