#pragma once

#include "anticoord/game.hpp"
#include "anticoord/learning.hpp"
#include "anticoord/policy.hpp"
#include "anticoord/matching.hpp"
#include "anticoord/vertex_cover.hpp"
#include "anticoord/exact.hpp"
#include "anticoord/greedy.hpp"
#include "anticoord/benchmarks.hpp"
#include "anticoord/experiment.hpp"
#include "anticoord/io.hpp"
