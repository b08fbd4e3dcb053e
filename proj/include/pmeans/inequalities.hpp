#pragma once

// Executable registry of the two-sided inequality and monotonicity
// claims, evaluated pointwise over parameter grids with a signed margin.
//
// Claim families:
//   T1      chain of means  L <= Lt_p < Pt_p < A < Mt_p < Tt_p <= Q
//   T2a     ratio monotonicity of f1..f4 (arc-function ratios)
//   T2b     root x0 of u2(x) = q x^{q-p} + (q-p) x^q - p in (0,1)
//   T2c     two-sided ratio bounds for Pt/Mt/Lt/Tt between orders p < q
//   T3      product bounds  Pt_p Mt_p <= Pt_2p^2 <= k(x,p) Pt_p Mt_p
//   T4      sum bound (Diaz-Metcalf) and the R(x,p) power-sum bound
//   T5      Chebyshev/Gruss bounds  A Lt_2p >= Tt_p Lt_p  and remainder
//   T6      single-mean two-sided bounds for Tt_p/A and Lt_p/A
//   T7      single-mean two-sided bounds for A/Pt_p and A/Mt_p
//   T8      constant-ratio bounds  (b_p/c_p) Tt < Mt < Tt  etc.
//   C1..C6  corollaries (log sandwiches, Turan, geometric convexity, ...)
//   L1..L6  classical integral inequalities on the concrete integrand
//           pairs (Cauchy-Bouniakowski, Polya-Szego/Schweizer, Chebyshev,
//           Gruss, Minkowski, Diaz-Metcalf), evaluated by quadrature
//
// Every elementary inequality is oriented so margin = rhs - lhs >= 0
// means "holds".  Clauses whose stated form disagrees with what their
// own derivation supports carry two variants, "as-printed" and
// "as-derived"; the harness reports both and never silently repairs a
// stated form.  All mean-level claims run in normalized coordinates
// a + b = 2 (A = 1), which is where the dimensionally inconsistent
// stated forms are coherent; content is unchanged by homogeneity.

#include <iosfwd>
#include <string>
#include <vector>

namespace pmeans::ineq {

enum class Status { holds, holds_equality, violated, error };

const char* to_string(Status s);
Status status_from_string(const std::string& s);

inline constexpr const char* kVariantDerived = "as-derived";
inline constexpr const char* kVariantPrinted = "as-printed";

struct ClaimReport {
  std::string claim_id;  // elementary id, e.g. "T1.2"
  std::string variant;   // as-derived / as-printed
  double p, q;           // NaN when not applicable
  double a, b;           // normalized pair (1+x, 1-x); NaN when x is
  double x;
  double lhs, rhs;
  double margin;         // rhs - lhs
  Status status;
  std::string note;      // diagnostic text for error rows
};

struct Tolerances {
  // |margin| <= equality  => holds-with-equality; margin < -equality => violated
  double equality = 1e-12;
};

// Inclusive linear or logarithmic axis; count == 1 collapses to {lo}.
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;  // 0 == axis absent
  bool log_spacing = false;
  std::vector<double> points() const;
};

struct GridSpec {
  Axis p;
  Axis q;
  Axis x;
};

struct ClaimInfo {
  std::string family;  // "T1", "T2a", ...
  std::string title;
  bool needs_p;
  bool needs_q;
  bool needs_x;
  double min_p;  // smallest admissible p (domain guard); p > 1 always
};

const std::vector<ClaimInfo>& claim_registry();

// ---- direct checkers (normalized coordinates, A = 1) ----

double u2(double p, double q, double x);
// Unique root of u2 in (0,1); |u2(root)| <= 1e-12.
double solve_x0(double p, double q);
// Stationary point of f4 = arctan_p/arctan_q in (x0, 1) (as-derived flip).
double solve_f4_flip(double p, double q);
// Crossing of arctan_q(x)/arctan_p(x) with b_q/b_p in (0,1) (as-derived split).
double solve_t_ratio_crossing(double p, double q);

std::vector<ClaimReport> check_chain(double p, double x, const Tolerances& tol = {});
std::vector<ClaimReport> check_ratio_monotonicity(int pair_index, double p, double q,
                                                  const std::vector<double>& xs,
                                                  const Tolerances& tol = {});
std::vector<ClaimReport> check_x0(double p, double q, const Tolerances& tol = {});
std::vector<ClaimReport> check_ratio_bounds(double p, double q, double x,
                                            const Tolerances& tol = {});
std::vector<ClaimReport> check_product_bounds(double p, double x, const Tolerances& tol = {});
std::vector<ClaimReport> check_sum_bounds(double p, double x, const Tolerances& tol = {});
std::vector<ClaimReport> check_chebyshev_gruss(double p, double x, const Tolerances& tol = {});
std::vector<ClaimReport> check_single_bounds_TL(double p, double x, const Tolerances& tol = {});
std::vector<ClaimReport> check_single_bounds_PM(double p, double x, const Tolerances& tol = {});
std::vector<ClaimReport> check_constant_ratio_bounds(double p, double x,
                                                     const Tolerances& tol = {});
// All corollary families at one point; C4 uses q (NaN q skips C4),
// C5 ignores p.
std::vector<ClaimReport> check_corollaries(double p, double q, double x,
                                           const Tolerances& tol = {});
std::vector<ClaimReport> check_integral_lemmas(double p, double x, const Tolerances& tol = {});

// ---- grid scan ----

// families: registry family names ("T1", "C3", ...); empty selects all.
// Deterministic report order: registry order, then p, q, x ascending,
// then variant.  Evaluator failures become status == error rows.
std::vector<ClaimReport> scan(const std::vector<std::string>& families, const GridSpec& grid,
                              const Tolerances& tol = {});

struct SummaryRow {
  std::string claim_id;
  std::string variant;
  long points = 0;
  double min_margin = 0.0;
  long violations = 0;
  long errors = 0;
};

struct Summary {
  std::vector<SummaryRow> rows;
  long derived_violations = 0;
  long printed_violations = 0;
  long errors = 0;
};

Summary summarize(const std::vector<ClaimReport>& reports);

}  // namespace pmeans::ineq
