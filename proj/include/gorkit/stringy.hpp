#pragma once

#include <map>
#include <tuple>

#include "gorkit/gorenstein.hpp"
#include "gorkit/poly.hpp"

namespace gorkit {

/** h*-polynomial of P (1 for the empty polytope and for points). */
UniPoly hstar(const LatticePolytope& p, long cap = kDefaultCap);

/**
 * Second route to h*: truncates (1-t)^{dim+1} * Σ_k |kP ∩ M| t^k at degree
 * dim, with the dilate counts taken by direct evaluation of the Ehrhart
 * polynomial reconstructed from interpolation, independent of hstar's
 * finite-difference path.
 */
UniPoly hstar_series(const LatticePolytope& p, long cap = kDefaultCap);

/**
 * Memoized g- and h-polynomials of intervals of one face lattice. Intervals
 * are addressed by (bottom, top) face indices; dual = true reads the interval
 * with the order reversed.
 */
class GCalc {
 public:
  explicit GCalc(const FaceLattice& fl) : fl_(fl) {}

  const UniPoly& g(int bottom, int top, bool dual = false);
  const UniPoly& h(int bottom, int top, bool dual = false);
  int rank(int bottom, int top) const { return fl_.faces[top].dim - fl_.faces[bottom].dim; }

 private:
  const FaceLattice& fl_;
  std::map<std::tuple<int, int, bool>, UniPoly> gmemo_, hmemo_;
};

/** (g, h) of the interval [bottom, top] of the face lattice. */
std::pair<UniPoly, UniPoly> g_and_h(const FaceLattice& fl, int bottom, int top);

/** Alternating face sum Σ_F (-1)^{dim P - dim F} h*_F(t) g_{[F,P]}(t); 1 on ∅, 0 on points. */
UniPoly stilde(const LatticePolytope& p, long cap = kDefaultCap);

/** Interior box points of a simplex graded by height; must agree with stilde. */
UniPoly stilde_simplex(const LatticePolytope& p, long cap = kDefaultCap);

/** B(u,v) = Σ_{bottom ≤ x ≤ top} (-u)^{rk(top)-rk(x)} g_{[x,top]*}(u⁻¹v) g_{[bottom,x]}(uv). */
LaurentPoly2 b_poly(const FaceLattice& fl, int bottom, int top);

struct EstResult {
  LaurentPoly2 e;
  Int r;             // Gorenstein index
  long cy_dim = 0;   // dim + 1 - 2r
  bool polynomial = false;
};

EstResult est(const DualPair& pair, long cap = kDefaultCap);
EstResult est(const LatticePolytope& p, long cap = kDefaultCap);

struct EstSpecializations {
  std::map<long, Int> e_at_u1;        // E(1,v), from est
  std::map<long, Int> hstar_route;    // v^{-r} Σ_F (-1)^{dim F + 1} h*_F(v) h*_{F*}(v)
  Int e_at_11;                        // E(1,1), from est
  Int volume_route;                   // Σ_F (-1)^{dim F + 1} Vol(F) Vol(F*)
  bool u1_agrees = false;
  bool at11_agrees = false;
};

EstSpecializations est_specializations(const DualPair& pair, long cap = kDefaultCap);

struct ConjectureReport {
  long cy_dim = 0;
  Int e_at_11;
  bool polynomial = false;
  bool degree_bound = false;       // total degree ≤ 2n; zero when n < 0; constant when n = 0
  bool symmetric = false;          // E(u,v) = E(v,u)
  bool poincare = false;           // (uv)^n E(1/u,1/v) = E(u,v)
  bool reciprocity = false;        // E(Δ;u,v) = (-u)^n E(Δ*;u⁻¹,v)
  bool edge_symmetry = true;       // E(u,0) = (-u)^n E(1/u,0); checked for n ≥ 1
  bool second_derivative = true;   // d²/du² E(u,1)|₁ = n(3n-5)/12 · E(1,1); checked for n ≥ 1
  bool closed_form = true;         // n = 1, 2 closed forms; k, l extracted when applicable
  bool div24 = true;               // 24 | E(1,1); checked for n = 2
  std::optional<Int> k, l;
};

ConjectureReport conjecture_diagnostics(const DualPair& pair, long cap = kDefaultCap);
ConjectureReport conjecture_diagnostics(const LatticePolytope& p, long cap = kDefaultCap);

struct WeightSystem {
  Int w;
  std::vector<Int> weights;  // w_0..w_d, each dividing w
};

struct WeightedReport {
  LatticePolytope simplex;     // S(ω) in hyperplane-lattice coordinates
  std::vector<Int> k;          // k_i = w / w_i
  Rat sum_inv_k;               // Σ 1/k_i
  bool gorenstein = false;
  Int r;                       // index when Gorenstein
  long cy_dim = 0;
  bool pyramid = false;        // some k_i = 1
  bool est_zero = false;       // E_st = 0 (checked when Gorenstein)
  long s = 0;                  // #{i : k_i ≥ 3}
  bool bound_holds = false;    // s ≤ 3 · cy_dim (when Gorenstein)
};

WeightedReport weighted_simplex(const WeightSystem& ws, long cap = kDefaultCap);

}  // namespace gorkit
