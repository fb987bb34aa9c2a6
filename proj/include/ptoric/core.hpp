#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptoric {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// All recoverable numeric failures derive from Error so callers can catch one
// type and still branch on the specific condition.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ChartUndefined : Error {
    explicit ChartUndefined(const std::string& w) : Error("ChartUndefined: " + w) {}
};
struct OnBaseSet : Error {
    explicit OnBaseSet(const std::string& w) : Error("OnBaseSet: " + w) {}
};
struct NonConvergent : Error {
    explicit NonConvergent(const std::string& w) : Error("NonConvergent: " + w) {}
};
struct SingularSystem : Error {
    explicit SingularSystem(const std::string& w) : Error("SingularSystem: " + w) {}
};
struct ProjectionFailure : Error {
    explicit ProjectionFailure(const std::string& w) : Error("ProjectionFailure: " + w) {}
};
struct VanishingPairing : Error {
    explicit VanishingPairing(const std::string& w) : Error("VanishingPairing: " + w) {}
};
struct AliasLimit : Error {
    explicit AliasLimit(const std::string& w) : Error("AliasLimit: " + w) {}
};
struct OnPoleLocus : Error {
    explicit OnPoleLocus(const std::string& w) : Error("OnPoleLocus: " + w) {}
};
struct Infeasible : Error {
    explicit Infeasible(const std::string& w) : Error("Infeasible: " + w) {}
};
struct IdenticallyZero : Error {
    explicit IdenticallyZero(const std::string& w) : Error("IdenticallyZero: " + w) {}
};
struct ContourThroughRoot : Error {
    explicit ContourThroughRoot(const std::string& w) : Error("ContourThroughRoot: " + w) {}
};
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& w) : Error("InvalidInput: " + w) {}
};

// Dense real linear solve with partial pivoting. Sizes here never exceed ~10.
std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b);

struct Rational {
    long long num = 0;
    long long den = 1;
};

// Continued-fraction reconstruction of x as p/q with q <= max_den.
// Returns nothing when the best candidate misses x by more than tol.
std::optional<Rational> rational_reconstruct(double x, long long max_den, double tol);

std::string format_rational(double x, long long max_den, double tol);

// Deterministic RNG; every stochastic check seeds its own instance.
inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double dist_to_integer(double x) { return std::abs(x - std::round(x)); }

// Reduce a real number into [0,1).
inline double mod_one(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r -= 1.0;
    return r;
}

}  // namespace ptoric
