#ifndef LRBT_LYAPUNOV_HPP
#define LRBT_LYAPUNOV_HPP

#include <optional>

#include "lrbt/common.hpp"
#include "lrbt/model.hpp"

namespace lrbt {

enum class GramianSide { Controllability, Observability };

struct Gramian {
  CMatrix matrix;  // Hermitian PSD
  GramianSide side;
};

/// Factor L with L L^* equal to the factored matrix. For positive-definite
/// input L is the standard lower Cholesky factor (real positive diagonal).
/// For singular input L is n x k, k the numerical rank, and is lower
/// trapezoidal in the pivot order `pivots` (row pivots[i] of L holds step i).
struct CholeskyFactor {
  CMatrix L;
  std::vector<Index> pivots;
};

/// Dense generalized Lyapunov solve (Bartels-Stewart on E^{-1}A):
///   controllability:  A P E^* + E P A^* + B B^* = 0   (F = B)
///   observability:    A^* Q E + E^* Q A + C^* C = 0   (F = C)
/// Throws UnstablePencil if a pencil eigenvalue has Re >= 0 and SolveFailure
/// if the residual exceeds 1e-8 (|A||P||E| + |FF^*|).
Gramian solve_lyapunov(const CMatrix& A, const CMatrix& E, const CMatrix& F, GramianSide side);

/// Convenience overload selecting B or C from the system.
Gramian solve_lyapunov(const DescriptorSystem& sys, GramianSide side);

/// Frobenius norm of the Lyapunov residual for a candidate Gramian.
double lyapunov_residual(const DescriptorSystem& sys, const CMatrix& X, GramianSide side);

/// Gauss-Legendre approximation of the frequency-domain Gramian integral
///   P = 1/(2 pi) int (jwE - A)^{-1} B B^* (jwE - A)^{-*} dw
/// (dually for Q) after the substitution w = c tan(theta). The frequency
/// scale c defaults to sqrt(min|pole| * max|pole|), which centres the
/// mapped integrand's features; c = 1 is the plain tangent map.
/// Throws PoleOnAxis for imaginary-axis poles and UnstablePencil for
/// right-half-plane poles.
Gramian gramian_quadrature(const DescriptorSystem& sys, GramianSide side, int node_count,
                           std::optional<double> frequency_scale = std::nullopt);

/// Cholesky factor of a Hermitian positive semidefinite matrix.
/// Rank threshold 1e-12 trace(M); NotPSD when an eigenvalue is below
/// -1e-10 |M|_2 or M is not Hermitian.
CholeskyFactor cholesky_psd(const CMatrix& M);

}  // namespace lrbt

#endif  // LRBT_LYAPUNOV_HPP
