#include "superarrival/tridiagonal.hpp"

#include <cassert>

#include "superarrival/errors.hpp"

namespace superarrival {

void TridiagonalSolver::solve(std::span<const Complex> lower, std::span<const Complex> diag,
                              std::span<const Complex> upper, std::span<const Complex> rhs,
                              std::span<Complex> x) {
    const std::size_t n = diag.size();
    assert(lower.size() == n && upper.size() == n && rhs.size() == n && x.size() == n);
    if (n == 0) return;
    c_prime_.resize(n);

    auto pivot_check = [](const Complex& d) {
        if (d == Complex{}) throw Error(ErrorKind::Domain, "tridiagonal: zero pivot");
    };

    // Forward sweep
    pivot_check(diag[0]);
    c_prime_[0] = upper[0] / diag[0];
    x[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const Complex denom = diag[i] - lower[i] * c_prime_[i - 1];
        pivot_check(denom);
        const Complex factor = 1.0 / denom;
        c_prime_[i] = upper[i] * factor;
        x[i] = (rhs[i] - lower[i] * x[i - 1]) * factor;
    }

    // Back substitution
    for (std::size_t i = n - 1; i > 0; --i) {
        x[i - 1] -= c_prime_[i - 1] * x[i];
    }
}

}  // namespace superarrival
