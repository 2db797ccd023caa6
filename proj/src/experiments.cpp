#include "experiments.hpp"

#include <algorithm>
#include <stdexcept>

#include "constructions.hpp"
#include "shift_expr.hpp"

namespace ergo {

namespace {

ShiftExprPtr union_of_shifts(const std::vector<i64>& shifts) {
  ShiftExprPtr e;
  for (i64 h : shifts) {
    ShiftExprPtr a = ShiftExpr::atom(h);
    e = e ? ShiftExpr::unite(e, a) : a;
  }
  return e;
}

}  // namespace

CoveringReport covering_curve(const LazySet& E, const IntSequence& seq,
                              const std::vector<i64>& Ks, i64 L, i64 B,
                              i64 stride) {
  if (Ks.empty() || !std::is_sorted(Ks.begin(), Ks.end()) || Ks.front() < 1)
    throw std::invalid_argument("checkpoints must be increasing and >= 1");
  std::vector<i64> kv = seq.values_up_to(Ks.back());

  CoveringReport rep;
  rep.seq_id = seq.name();
  for (i64 K : Ks) {
    ShiftExprPtr expr =
        union_of_shifts({kv.begin(), kv.begin() + static_cast<std::ptrdiff_t>(K)});
    BanachBound b = banach_lower_bound(*expr, E, L, B, stride);
    rep.points.push_back({K, b.value, b.witness});
  }
  return rep;
}

std::vector<StabilityRow> hindman_counterexample(int Nmax,
                                                 const std::vector<i64>& Ks) {
  if (Nmax < 1) throw std::out_of_range("Nmax must be >= 1");
  LazySetPtr E = hindman_set();
  FolnerFamily fam = FolnerFamily::dyadic_even();
  Rational two_thirds(2, 3);

  std::vector<StabilityRow> rows;
  for (i64 K : Ks) {
    if (K < 0) throw std::invalid_argument("K must be >= 0");
    std::vector<i64> shifts(static_cast<std::size_t>(K + 1));
    for (i64 i = 0; i <= K; ++i) shifts[static_cast<std::size_t>(i)] = i;
    UpperDensityScan scan = upper_density_along(*union_of_shifts(shifts), *E, fam, Nmax);
    for (const DensityTerm& t : scan.terms) {
      StabilityRow row;
      row.K = K;
      row.N = t.N;
      row.value = t.value;
      i128 pow4 = i128(1) << (2 * t.N);  // 4^N
      row.bound = Rational(i128(K + 1) * (t.N + 1), 2 * pow4) + Rational(1, pow4);
      Rational gap = t.value - two_thirds;
      if (gap < Rational(0)) gap = Rational(0) - gap;
      row.within = gap <= row.bound;
      rows.push_back(row);
    }
  }
  return rows;
}

WitnessResult complement_witness_search(const LazySet& E, i64 hMax, i64 L, i64 B,
                                        i64 stride) {
  if (hMax < 1) throw std::out_of_range("hMax must be >= 1");
  WitnessResult best;
  for (i64 h = 1; h <= hMax; ++h) {
    ShiftExprPtr expr =
        ShiftExpr::intersect(ShiftExpr::atom(0, true), ShiftExpr::atom(h, false));
    BanachBound b = banach_lower_bound(*expr, E, L, B, stride);
    if (b.value.num == 0) continue;
    if (!best.found || b.value > best.value) {
      best.found = true;
      best.h = h;
      best.value = b.value;
      best.witness = b.witness;
    }
  }
  return best;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SweepingEvidence: return "SWEEPING-EVIDENCE";
    case Verdict::Obstructed: return "OBSTRUCTED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

ClassifierReport sweeping_classifier(const IntSequence& seq,
                                     const std::vector<std::string>& set_ids,
                                     const std::vector<LazySetPtr>& test_sets,
                                     const std::vector<i64>& Ks,
                                     const ScanParams& params) {
  if (set_ids.size() != test_sets.size())
    throw std::invalid_argument("set id / set list length mismatch");
  i64 stride = params.stride > 0 ? params.stride : std::max<i64>(1, params.L / 2);

  ClassifierReport rep;
  bool all_sweep = true;
  std::string obstructed_list;
  for (std::size_t i = 0; i < test_sets.size(); ++i) {
    ClassifierEntry entry;
    entry.set_id = set_ids[i];
    entry.curve = covering_curve(*test_sets[i], seq, Ks, params.L, params.B, stride);
    const auto& pts = entry.curve.points;
    double final_v = pts.back().best.to_double();
    double mid_v = pts[pts.size() / 2].best.to_double();
    bool plateau = final_v - mid_v < 0.01;
    if (final_v > 0.95) {
      entry.verdict = Verdict::SweepingEvidence;
    } else if (plateau && final_v < 0.9) {
      entry.verdict = Verdict::Obstructed;
    } else {
      entry.verdict = Verdict::Inconclusive;
    }
    if (entry.verdict != Verdict::SweepingEvidence) all_sweep = false;
    if (entry.verdict == Verdict::Obstructed) {
      if (!obstructed_list.empty()) obstructed_list += ',';
      obstructed_list += entry.set_id;
    }
    rep.entries.push_back(std::move(entry));
  }
  if (all_sweep) {
    rep.overall = "SWEEPING-EVIDENCE (heuristic thresholds; not a proof)";
  } else if (!obstructed_list.empty()) {
    rep.overall = "OBSTRUCTED(" + obstructed_list +
                  ") (desk-scale plateau; slow coverage is not refuted)";
  } else {
    rep.overall = "INCONCLUSIVE (desk-scale scan; larger windows may decide)";
  }
  return rep;
}

}  // namespace ergo
