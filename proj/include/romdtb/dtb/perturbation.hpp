#pragma once

#include <cstddef>
#include <vector>

#include "romdtb/linalg/blocked_matrix.hpp"
#include "romdtb/linalg/matrix.hpp"

namespace romdtb {

/// Primary and dual snapshots of the staggered first-order system
///   P^_0 = (tau/2) L^T P_0,
///   P_{k+1} = P_k - tau L P^_k,
///   P^_{k+1} = P^_k + tau L^T P_{k+1},
/// which reproduces P_k = T_k(I - tau^2/2 L L^T) P_0. The delta fields
/// hold the perturbed snapshots when filled by perturbation_timestep.
struct SnapshotSet {
  std::vector<Matrix> primary;
  std::vector<Matrix> dual;
  std::vector<Matrix> delta;
  std::vector<Matrix> delta_dual;
};

SnapshotSet first_order_snapshots(const BlockedMatrix& l, const Matrix& b, double tau, std::size_t count);

/// Derivative of the snapshots along L_0 -> L_q, linearized at L_0:
///   dP_0 = 0, dP^_0 = (tau/2)(L_q - L_0)^T P_0,
///   dP_{k+1} = dP_k - tau L_0 dP^_k - tau (L_q - L_0) P^_k,
///   dP^_{k+1} = dP^_k + tau L_0^T dP_{k+1} + tau (L_q - L_0)^T P_{k+1},
/// with P, P^ the reference snapshots. Fills reference.delta/delta_dual
/// and returns the primary deltas.
std::vector<Matrix> perturbation_timestep(const BlockedMatrix& l0, const BlockedMatrix& lq, double tau,
                                          SnapshotSet& reference);

}  // namespace romdtb
