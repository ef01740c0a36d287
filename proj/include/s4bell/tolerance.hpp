#pragma once

namespace s4bell::tol {

/// Matrix identities (homomorphism, orthogonality, projector algebra).
inline constexpr double kMatrix = 1e-9;
/// Agreement between independently computed eigenvalues.
inline constexpr double kEigenvalue = 1e-6;
/// Euclidean distance under which two orbit vectors are the same point.
inline constexpr double kVectorMatch = 1e-7;
/// Off-diagonal Frobenius norm at which the Jacobi sweep stops.
inline constexpr double kJacobiOffDiagonal = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

}  // namespace s4bell::tol
