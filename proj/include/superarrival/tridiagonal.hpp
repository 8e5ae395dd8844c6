#pragma once

#include <complex>
#include <span>
#include <vector>

namespace superarrival {

/// Thomas algorithm for complex tridiagonal systems
///   lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i].
/// lower[0] and upper[n-1] are ignored. Scratch storage is reused across
/// calls so a time loop does not allocate.
class TridiagonalSolver {
public:
    using Complex = std::complex<double>;

    void solve(std::span<const Complex> lower, std::span<const Complex> diag,
               std::span<const Complex> upper, std::span<const Complex> rhs,
               std::span<Complex> x);

private:
    std::vector<Complex> c_prime_;
};

}  // namespace superarrival
