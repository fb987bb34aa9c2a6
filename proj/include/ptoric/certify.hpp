#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ptoric/torus.hpp"
#include "ptoric/volume_form.hpp"
#include "ptoric/winding.hpp"

namespace ptoric {

struct BasisLoop {
    std::string name;
    std::function<ProductPoint(double)> loop;  // t in [0,1)
    ParametrizedChain chain;                   // bounding disc, boundary at u=1
};

struct PeriodVector {
    std::vector<double> values;      // in [0,1)
    std::vector<double> raw_areas;   // signed disc areas
    std::vector<double> verify_delta;  // |area - recheck at doubled resolution|
    std::vector<std::string> loop_names;
};

// Areas of the bounding chains reduced mod 1. Each value is re-verified by an
// independent quadrature one refinement level deeper; chain boundaries are
// checked against the loops.
PeriodVector period_vector(const AmbientSpace& M, const std::vector<BasisLoop>& loops,
                           double tol = 1e-6);

struct BSReport {
    bool bounded = false;
    int level = 0;  // meaningful when bounded
    int k_max = 64;
    double tol = 1e-4;
};

BSReport bs_level(const PeriodVector& periods, int k_max = 64, double tol = 1e-4);
bool is_bs_at(const PeriodVector& periods, int k, double tol = 1e-4);

enum class MaslovMethod { WindingFrame, DegenerateIndex };

struct MaslovReport {
    int degree = 0;
    double expected = 0;  // k * disc area
    double winding_residual = 0;
    MaslovMethod method = MaslovMethod::WindingFrame;
    std::string verdict;  // monotone | non-monotone | not-BS-can
};

// Winding number of the pairing of omega with the given frame field along the
// loop; frame_fn(t) returns the frame at loop(t).
WindingResult maslov_degree(const AmbientSpace& M, const MeromorphicVolumeForm& omega,
                            const std::function<ProductPoint(double)>& loop,
                            const std::function<std::vector<TangentVector>(double)>& frame_fn,
                            int initial_samples = 256);

// Zero count (with multiplicity) of the pullback polynomial over the whole
// parameter CP^1: argument principle on a large contour plus the explicit
// order at infinity.
int intersection_index(const PairPoly& pullback);

struct MiddleCaseResult {
    bool middle = false;
    long long margin = 0;  // sum rho_i - sum_{lambda_i > 0} lambda_i rho_i
    long long sum_rho = 0;
    long long sum_positive = 0;
};

MiddleCaseResult middle_case_check(const std::vector<long long>& lambda,
                                   const std::vector<long long>& rho);

}  // namespace ptoric
