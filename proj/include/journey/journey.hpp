#ifndef JOURNEY_JOURNEY_HPP_
#define JOURNEY_JOURNEY_HPP_

#include "journey/baseline.hpp"
#include "journey/bench.hpp"
#include "journey/bit_matrix.hpp"
#include "journey/closure.hpp"
#include "journey/execution.hpp"
#include "journey/generators.hpp"
#include "journey/graph.hpp"
#include "journey/graph_io.hpp"
#include "journey/nonstrict_closure.hpp"
#include "journey/strict_closure.hpp"

#endif  // JOURNEY_JOURNEY_HPP_
