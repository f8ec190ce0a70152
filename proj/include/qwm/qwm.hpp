#pragma once

// Umbrella header: exact simulation, path enumeration, cluster
// combinatorics and closed-form evaluation for one-dimensional Hadamard
// walks with zero-, one- and two-step memory.

#include "qwm/basis.hpp"
#include "qwm/closed_form.hpp"
#include "qwm/cluster.hpp"
#include "qwm/comb.hpp"
#include "qwm/dyadic.hpp"
#include "qwm/io.hpp"
#include "qwm/path_oracle.hpp"
#include "qwm/peaks.hpp"
#include "qwm/state_vector.hpp"
#include "qwm/transition.hpp"
#include "qwm/verify.hpp"
#include "qwm/walk.hpp"
