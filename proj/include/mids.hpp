#pragma once

#include "mids/approx.hpp"
#include "mids/bench.hpp"
#include "mids/branching.hpp"
#include "mids/enumerate.hpp"
#include "mids/generators.hpp"
#include "mids/graph.hpp"
#include "mids/instance.hpp"
#include "mids/io.hpp"
#include "mids/oracle.hpp"
#include "mids/recurrence.hpp"
#include "mids/reductions.hpp"
#include "mids/solver.hpp"
#include "mids/vertex_set.hpp"
