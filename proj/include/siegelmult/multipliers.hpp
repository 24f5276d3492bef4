#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "siegelmult/cocycle.hpp"

namespace siegelmult {

constexpr double kMultiplierTolerance = 1e-9;
constexpr double kSeriesTolerance = 1e-14;

// Exponent of the theta series: Standard e^{pi i n'Zn}, Doubled e^{2 pi i n'Zn}.
enum class ThetaConvention { Standard, Doubled };
std::string to_string(ThetaConvention c);

struct SeriesTruncation {
  int radius = 12;          // |n_i| <= radius
  double tail_bound = 0.0;  // bound on the omitted terms (filled in by the evaluator)
};

// Rigorous bound on the terms outside the box |n_i| <= radius.
double theta_box_tail(const SiegelPoint& z, int radius, ThetaConvention convention);
// Least radius whose box tail is below tolerance.
int theta_radius_for(const SiegelPoint& z, ThetaConvention convention, double tolerance = 1e-15);

// Truncated lattice sum. Terms with c n'(Im Z)n beyond a pruning threshold are skipped and
// accounted for in the reported tail. Throws TruncationError if the tail is not below 1e-14.
Complex theta_value(const SiegelPoint& z, SeriesTruncation& trunc,
                    ThetaConvention convention = ThetaConvention::Standard);
Complex theta_value(const SiegelPoint& z, ThetaConvention convention = ThetaConvention::Standard);

// AB' and CD' have even diagonal.
bool is_theta_group(const SymplecticMatrix& m);

struct BranchLog {
  double log_abs = 0.0;  // log |J(M, Z)|
  double arg = 0.0;      // L(M, Z)
};

struct MultiplierEvaluation {
  Complex value{1.0, 0.0};
  double deviation = 0.0;              // max pairwise distance across samples
  std::vector<Complex> sample_values;
  std::vector<BranchLog> branch_log;   // per sample
};

// Sample points Z = M^{-1}(W) for five fixed W near iE. Then MZ = W, and Z lies near the cusp
// M^{-1}(infinity) where |theta| is large, so neither lattice sum cancels badly.
std::vector<SiegelPoint> theta_samples(const SymplecticMatrix& m);

// v(M) = theta(MZ) / (exp((log|J| + i L(M,Z)) / 2) theta(Z)) at each sample, no deviation check.
MultiplierEvaluation evaluate_theta_multiplier(const SymplecticMatrix& m, const std::vector<SiegelPoint>& samples,
                                               ThetaConvention convention = ThetaConvention::Standard);
// Same, requiring is_theta_group and deviation < 1e-9 (MultiplierError otherwise).
MultiplierEvaluation theta_multiplier(const SymplecticMatrix& m, const std::vector<SiegelPoint>& samples,
                                      ThetaConvention convention = ThetaConvention::Standard);
// As above on theta_samples(m); genus 1 matrices and iota1 / iota2 images whose block has
// |c| > kClassicalFrom go through theta_multiplier_classical instead.
MultiplierEvaluation theta_multiplier(const SymplecticMatrix& m,
                                      ThetaConvention convention = ThetaConvention::Standard);

// Standard exponent, genus 1 and the iota1 / iota2 images (whose value is that of the block).
// For c > 0 even, v = eps_d^{-1} (2c / |d|) with eps_d = 1 or i as d = 1 or 3 mod 4; the other
// cases reduce to this one through S and -E with the exact genus 1 cocycle.
constexpr long kClassicalFrom = 1000;
MultiplierEvaluation theta_multiplier_classical(const SymplecticMatrix& m);

// 24 sum_{n > terms} |log(1 - q^n)| bound.
double delta_tail(const SiegelPoint& z, int terms);
int delta_terms_for(const SiegelPoint& z, double tolerance = kSeriesTolerance / 10);

// log Delta(z) = 2 pi i z + 24 sum log(1 - e^{2 pi i n z}). Throws TruncationError if the tail is
// not below 1e-14.
Complex delta_log(const SiegelPoint& z, int terms);
Complex delta_log(const SiegelPoint& z);

struct RademacherValue {
  long d = 0;
  double residual = 0.0;           // worst |raw - d| over samples
  std::vector<Complex> raw;        // per-sample unrounded value
  std::vector<SiegelPoint> samples;
};

// d(M) = (log Delta(Mz) - log Delta(z) - 12 (log|J| + i L(M,z))) / 2 pi i at three sample points.
RademacherValue rademacher_value(const SymplecticMatrix& m);
long rademacher_integer(const SymplecticMatrix& m);

// v_r(M) = exp(2 pi i r d(M) / 12); deviation from the unrounded per-sample d.
MultiplierEvaluation delta_multiplier(double r, const SymplecticMatrix& m);

using MultiplierEvaluator = std::function<MultiplierEvaluation(const SymplecticMatrix&)>;

struct RelationRecord {
  SymplecticMatrix m, n;
  long w = 0;  // automorphy convention
  Complex lhs, rhs;
  double deviation = 0.0;
};

struct RelationReport {
  double r = 0.0;
  double worst_deviation = 0.0;
  bool holds = true;
  std::vector<RelationRecord> records;
};

// v(MN) = v(M) v(N) sigma_r(M, N) within tolerance, per pair.
RelationReport verify_multiplier_relation(const MultiplierEvaluator& evaluator, double r,
                                          const std::vector<std::pair<SymplecticMatrix, SymplecticMatrix>>& pairs,
                                          double tolerance = kMultiplierTolerance);

}  // namespace siegelmult
