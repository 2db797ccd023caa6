#ifndef ERGOLAB_EXPERIMENTS_HPP
#define ERGOLAB_EXPERIMENTS_HPP

// End-to-end drivers: covering curves for unions of shifted copies, the
// block-set union stability table, complement correlation witnesses, and the
// sweeping-out evidence classifier.

#include <string>
#include <vector>

#include "density.hpp"
#include "folner.hpp"
#include "lazy_set.hpp"
#include "rational.hpp"
#include "sequences.hpp"

namespace ergo {

struct CoveringPoint {
  i64 K = 0;           // union of the first K shifts
  Rational best;       // best-window density of union_{n<=K} (E - k_n)
  Window witness{0, 1};
};

struct CoveringReport {
  std::string seq_id;
  std::vector<CoveringPoint> points;  // best is non-decreasing in K
};

CoveringReport covering_curve(const LazySet& E, const IntSequence& seq,
                              const std::vector<i64>& Ks, i64 L, i64 B,
                              i64 stride);

struct StabilityRow {
  i64 K = 0;
  int N = 0;
  Rational value;   // window density of union_{i=0}^{K} (E - i), F_N dyadic
  Rational bound;   // (K+1)(N+1)/2^{2N+1} + 4^{-N}
  bool within = false;  // |value - 2/3| <= bound
};

// The union of consecutive shifts of the block set keeps window density near
// 2/3 along the dyadic family, for every K.
std::vector<StabilityRow> hindman_counterexample(int Nmax, const std::vector<i64>& Ks);

struct WitnessResult {
  bool found = false;
  i64 h = 0;
  Rational value;
  Window witness{0, 1};
};

// Best h in [1, hMax] for the lower-bound scan of complement(E) intersect (E-h).
WitnessResult complement_witness_search(const LazySet& E, i64 hMax, i64 L, i64 B,
                                        i64 stride);

struct ScanParams {
  i64 L = 1024;
  i64 B = 65536;
  i64 stride = 0;  // 0 means L/2
};

enum class Verdict { SweepingEvidence, Obstructed, Inconclusive };
std::string verdict_name(Verdict v);

struct ClassifierEntry {
  std::string set_id;
  CoveringReport curve;
  Verdict verdict = Verdict::Inconclusive;
};

struct ClassifierReport {
  std::vector<ClassifierEntry> entries;
  std::string overall;  // heuristic evidence summary, never a proof
};

// Thresholds: evidence when the curve exceeds 0.95; obstruction when it
// plateaus (final - midpoint < 0.01) below 0.9. Finite runs only gather
// evidence; a desk-scale plateau does not refute sweeping out.
ClassifierReport sweeping_classifier(const IntSequence& seq,
                                     const std::vector<std::string>& set_ids,
                                     const std::vector<LazySetPtr>& test_sets,
                                     const std::vector<i64>& Ks,
                                     const ScanParams& params);

}  // namespace ergo

#endif
