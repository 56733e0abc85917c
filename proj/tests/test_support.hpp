#pragma once

#include <random>

// Seed for every hand-rolled generator in the suite; overridable with
// --seed=N on the test binary's command line.
extern unsigned g_test_seed;

inline std::mt19937 test_rng(unsigned salt = 0) { return std::mt19937(g_test_seed + salt); }
