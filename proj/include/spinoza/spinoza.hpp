#pragma once

// Umbrella header for the spinoza library: a verifier, exhaustive solver,
// instance generator and scaling bench for the sign-assignment decision
// problem on cyclically read letter sequences.

#include "spinoza/bench.hpp"
#include "spinoza/construct.hpp"
#include "spinoza/counters.hpp"
#include "spinoza/generator.hpp"
#include "spinoza/instance.hpp"
#include "spinoza/io.hpp"
#include "spinoza/reference.hpp"
#include "spinoza/rng.hpp"
#include "spinoza/solver.hpp"
#include "spinoza/verify.hpp"
#include "spinoza/wide_int.hpp"
