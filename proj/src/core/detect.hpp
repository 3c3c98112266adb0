#pragma once

#include <span>
#include <vector>

#include "core/continuation.hpp"
#include "core/system.hpp"

namespace bifkit {

// Limit-point test function: det(D_u F(lambda, u)).
double psi_lp(const SystemDef& sys, double lambda, std::span<const double> u);

// Hopf test function: det(2 D_u F (.) I_n). Vanishes when two eigenvalues
// sum to zero — at a Hopf point or at a neutral saddle. For dim < 2 the
// bialternate matrix is empty and the determinant is 1 by convention.
double psi_h(const SystemDef& sys, double lambda, std::span<const double> u);

enum class EventKind { limit_point, hopf_candidate, neutral_saddle };

struct BifurcationEvent {
  EventKind kind = EventKind::limit_point;
  CurvePoint left, right;  // adjacent accepted points bracketing the zero
  int left_index = -1;     // position of `left` in the scanned curve
  double psi_left = 0.0;   // the flipping test function at the endpoints
  double psi_right = 0.0;
  bool best_is_left = false;
  // Positive imaginary part of the crossing eigenpair at `best` (Hopf
  // candidates only; seeds the extended-system solve).
  double beta_hint = 0.0;
  // Eigenvalue pairing between the endpoints was not unique.
  bool ambiguous_pairing = false;

  const CurvePoint& best() const { return best_is_left ? left : right; }
};

struct HopfClassification {
  EventKind kind = EventKind::neutral_saddle;
  double beta_left = 0.0;   // |Im| of the crossing pair at each endpoint
  double beta_right = 0.0;
  bool ambiguous = false;
};

// Decide whether a psi_h sign change is a Hopf candidate: both endpoints
// must carry a complex-conjugate pair (|Im| > 1e-8) matched across the
// interval whose real part changes sign. A real pair crossing equal
// modulus gives a neutral saddle instead.
HopfClassification classify_hopf(const CurvePoint& left, const CurvePoint& right);

// Scan consecutive curve points for sign changes of psi_lp and psi_h.
// An exact zero at a grid point counts as a sign change with that point
// as `best`.
std::vector<BifurcationEvent> scan_events(const std::vector<CurvePoint>& curve);

}  // namespace bifkit
