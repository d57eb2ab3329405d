#ifndef LRBT_MODEL_HPP
#define LRBT_MODEL_HPP

#include <cstdint>
#include <vector>

#include "lrbt/common.hpp"

namespace lrbt {

/// Dense descriptor realization G(s) = C (sE - A)^{-1} B.
///
/// Used both for full-order models and for reduced models of order r. The
/// struct itself does not enforce invariants; call validate_system() before
/// relying on them.
struct DescriptorSystem {
  CMatrix E;
  CMatrix A;
  CMatrix B;
  CMatrix C;

  Index order() const { return A.rows(); }
  Index inputs() const { return B.cols(); }
  Index outputs() const { return C.rows(); }
};

/// Pencil eigenvalues sorted by ascending real part, then ascending imaginary part.
struct PoleSpectrum {
  std::vector<Complex> values;
};

/// Checks dimension consistency and that E is safely invertible
/// (reciprocal condition estimate >= 1e-12). Returns the input unchanged.
DescriptorSystem validate_system(DescriptorSystem sys);

/// Checks only the shape contract (E, A square n x n; B n x m; C p x n).
void check_dimensions(const DescriptorSystem& sys);

/// C (sE - A)^{-1} B via one LU solve with m right-hand sides.
/// Throws PoleHit when the reciprocal condition estimate of sE - A is below 1e-14.
CMatrix eval_transfer(const DescriptorSystem& sys, Complex s);

/// -C (sE - A)^{-1} E (sE - A)^{-1} B, reusing one LU factorization.
CMatrix eval_transfer_derivative(const DescriptorSystem& sys, Complex s);

PoleSpectrum poles(const DescriptorSystem& sys);

/// True when every pencil eigenvalue has real part below -margin.
bool is_stable(const DescriptorSystem& sys, double margin = 0.0);

/// Deterministic random test system with all poles in the open left half plane.
/// Throws GenerationFailure after 100 rejected draws.
DescriptorSystem random_stable_system(Index n, Index m, Index p, std::uint64_t seed);

}  // namespace lrbt

#endif  // LRBT_MODEL_HPP
