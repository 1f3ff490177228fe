#pragma once

#include "rainbow/brute_rc.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/cycle_classes.hpp"
#include "rainbow/experiment.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/greedy_power.hpp"
#include "rainbow/matching.hpp"
#include "rainbow/pairing.hpp"
#include "rainbow/params.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/thm1_coloring.hpp"
#include "rainbow/tree.hpp"
#include "rainbow/types.hpp"
#include "rainbow/verify.hpp"
#include "rainbow/witness.hpp"
