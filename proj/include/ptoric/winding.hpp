#pragma once

#include <functional>

#include "ptoric/core.hpp"

namespace ptoric {

struct WindingResult {
    double raw = 0;        // accumulated phase / 2 pi
    int degree = 0;        // nearest integer
    double residual = 0;   // |raw - degree|
    int samples = 0;
    double min_modulus = 0;
};

// Winding number of t -> f(t), t in [0,1), by accumulated unwrapped phase.
// Sample count doubles until every consecutive phase step is < pi/2.
// Throws VanishingPairing when |f| dips below min_modulus_floor and
// AliasLimit when the doubling cap is reached.
WindingResult winding_number(const std::function<cplx(double)>& f, int initial_samples = 64,
                             int max_samples = 1 << 16, double min_modulus_floor = 1e-8);

}  // namespace ptoric
