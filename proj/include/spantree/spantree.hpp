#pragma once

// Umbrella header: exact spanning tree counting by three independent
// algorithms, the graph families with Fibonacci/Lucas-type counts,
// chromatic polynomials, and unit-resistor network currents.

#include "spantree/chromatic.hpp"
#include "spantree/circuits.hpp"
#include "spantree/families.hpp"
#include "spantree/graph_io.hpp"
#include "spantree/matrix_tree.hpp"
#include "spantree/multigraph.hpp"
#include "spantree/numbers.hpp"
#include "spantree/oracle.hpp"
#include "spantree/selfcheck.hpp"
#include "spantree/treecount.hpp"
