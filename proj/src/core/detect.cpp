#include "core/detect.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "core/bialternate.hpp"
#include "core/errors.hpp"
#include "core/lu.hpp"

namespace bifkit {

namespace {

constexpr double kImagThreshold = 1e-8;

// Upper-half representatives of complex-conjugate pairs.
std::vector<std::complex<double>> complex_pairs(const EigenSet& eigen) {
  std::vector<std::complex<double>> out;
  for (const auto& ev : eigen.values)
    if (ev.imag() > kImagThreshold) out.push_back(ev);
  return out;
}

// True when the test-function values bracket a zero; an exact zero on the
// right endpoint fires here; a zero on the left endpoint fires only for
// the first pair of the curve (otherwise the previous pair already did).
bool sign_change(double left, double right, bool first_pair) {
  if (left * right < 0.0) return true;
  if (right == 0.0 && left != 0.0) return true;
  if (first_pair && left == 0.0) return true;
  return false;
}

}  // namespace

double psi_lp(const SystemDef& sys, double lambda, std::span<const double> u) {
  return determinant(sys.jacobian_u(lambda, u));
}

double psi_h(const SystemDef& sys, double lambda, std::span<const double> u) {
  if (sys.dim < 2) return 1.0;  // empty product
  return determinant(bialternate(sys.jacobian_u(lambda, u)));
}

HopfClassification classify_hopf(const CurvePoint& left, const CurvePoint& right) {
  HopfClassification c;
  const auto lp = complex_pairs(left.eigenvalues);
  const auto rp = complex_pairs(right.eigenvalues);
  if (lp.empty() || rp.empty()) return c;  // neutral saddle

  // Greedy nearest-neighbor matching of the two pair sets; global minimal
  // distance first, so the result is symmetric in (left, right).
  struct Cand {
    double dist;
    size_t i, j;
  };
  std::vector<Cand> cands;
  for (size_t i = 0; i < lp.size(); ++i)
    for (size_t j = 0; j < rp.size(); ++j)
      cands.push_back({std::abs(lp[i] - rp[j]), i, j});
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });

  std::vector<bool> used_l(lp.size(), false), used_r(rp.size(), false);
  int crossings = 0;
  for (const Cand& cand : cands) {
    if (used_l[cand.i] || used_r[cand.j]) continue;
    used_l[cand.i] = true;
    used_r[cand.j] = true;
    const double re_l = lp[cand.i].real();
    const double re_r = rp[cand.j].real();
    if (re_l * re_r < 0.0 || (re_l == 0.0) != (re_r == 0.0)) {
      ++crossings;
      if (crossings == 1) {
        c.kind = EventKind::hopf_candidate;
        c.beta_left = lp[cand.i].imag();
        c.beta_right = rp[cand.j].imag();
      }
    }
  }
  if (crossings > 1) c.ambiguous = true;  // retained as Hopf candidate, flagged
  return c;
}

std::vector<BifurcationEvent> scan_events(const std::vector<CurvePoint>& curve) {
  std::vector<BifurcationEvent> events;
  for (size_t i = 0; i + 1 < curve.size(); ++i) {
    const CurvePoint& l = curve[i];
    const CurvePoint& r = curve[i + 1];
    const bool first = (i == 0);

    if (sign_change(l.psi_lp, r.psi_lp, first)) {
      BifurcationEvent e;
      e.kind = EventKind::limit_point;
      e.left = l;
      e.right = r;
      e.left_index = static_cast<int>(i);
      e.psi_left = l.psi_lp;
      e.psi_right = r.psi_lp;
      e.best_is_left = std::abs(l.psi_lp) <= std::abs(r.psi_lp);
      events.push_back(std::move(e));
    }

    if (sign_change(l.psi_h, r.psi_h, first)) {
      const HopfClassification c = classify_hopf(l, r);
      BifurcationEvent e;
      e.kind = c.kind;
      e.left = l;
      e.right = r;
      e.left_index = static_cast<int>(i);
      e.psi_left = l.psi_h;
      e.psi_right = r.psi_h;
      e.best_is_left = std::abs(l.psi_h) <= std::abs(r.psi_h);
      e.beta_hint = e.best_is_left ? c.beta_left : c.beta_right;
      e.ambiguous_pairing = c.ambiguous;
      events.push_back(std::move(e));
    }
  }
  return events;
}

}  // namespace bifkit
