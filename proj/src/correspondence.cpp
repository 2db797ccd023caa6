#include "correspondence.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"

namespace ergo {

CylinderSpec::CylinderSpec(std::vector<i64> s, std::vector<bool> w)
    : shifts(std::move(s)), word(std::move(w)) {
  if (shifts.size() != word.size())
    throw std::invalid_argument("cylinder spec: shift/word length mismatch");
  for (std::size_t i = 1; i < shifts.size(); ++i)
    if (shifts[i - 1] >= shifts[i])
      throw std::invalid_argument("cylinder spec: shifts must be strictly increasing");
}

std::string CylinderSpec::key() const {
  std::string out;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(shifts[i]);
    out += word[i] ? ":1" : ":0";
  }
  return out;
}

namespace {

Window padded_window(Window w, const std::vector<i64>& shifts) {
  i64 lo = 0, hi = 0;
  for (i64 h : shifts) {
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  return {w.lo + lo, w.hi + hi};
}

Rational frequency_from_base(const WindowSet& base, const CylinderSpec& spec,
                             Window w) {
  WindowSet acc = WindowSet::full(w);
  for (std::size_t i = 0; i < spec.shifts.size(); ++i) {
    WindowSet s = shift_restrict(base, spec.shifts[i], w);
    if (!spec.word[i]) s = set_complement(s);
    acc = set_intersect(acc, s);
    if (acc.count() == 0) break;
  }
  return density(acc);
}

}  // namespace

Rational cylinder_frequency(const LazySet& E, const CylinderSpec& spec, Window w) {
  check_window(w);
  if (spec.shifts.empty()) return Rational(1);
  WindowSet base = restrict_to(E, padded_window(w, spec.shifts));
  return frequency_from_base(base, spec, w);
}

EmpiricalMeasure::EmpiricalMeasure(LazySetPtr source, Window w)
    : source_(std::move(source)), window_(w) {
  check_window(w);
}

Rational EmpiricalMeasure::frequency(const CylinderSpec& spec) {
  std::string k = spec.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    if (frozen_) throw std::logic_error("empirical measure is frozen");
  }
  Rational v = cylinder_frequency(*source_, spec, window_);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(std::move(k), v);
  return v;
}

Rational EmpiricalMeasure::frequency_frozen(const CylinderSpec& spec) const {
  if (!frozen_) throw std::logic_error("empirical measure not frozen");
  auto it = memo_.find(spec.key());
  if (it == memo_.end()) throw std::out_of_range("cylinder spec not memoized");
  return it->second;
}

Rational expr_via_cylinders(const LazySet& E, const ShiftExpr& expr, Window w) {
  check_window(w);
  std::vector<i64> shifts = distinct_shifts(expr);
  if (shifts.size() > 20)
    throw std::invalid_argument("expression has more than 20 distinct shifts");
  WindowSet base = restrict_to(E, padded_window(w, shifts));

  std::size_t k = shifts.size();
  i128 total = 0;
  std::vector<bool> bits(k);
  for (std::uint64_t word = 0; word < (1ull << k); ++word) {
    for (std::size_t i = 0; i < k; ++i) bits[i] = (word >> i) & 1u;
    if (!eval_expr_word(expr, shifts, bits)) continue;
    CylinderSpec spec(shifts, bits);
    Rational f = frequency_from_base(base, spec, w);
    total += f.num * (w.length() / f.den);
  }
  return Rational(total, w.length());
}

CorrespondenceTable correspondence_table(const LazySet& E,
                                         const std::vector<ShiftExprPtr>& exprs,
                                         const FolnerFamily& fam, int Nmax,
                                         double eps) {
  std::vector<UpperDensityScan> scans(exprs.size());
  parallel_for(exprs.size(), [&](std::size_t i) {
    scans[i] = upper_density_along(*exprs[i], E, fam, Nmax);
  });
  CorrespondenceTable table;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    std::string id = format_expr(*exprs[i]);
    double final_max = scans[i].running_max.to_double();
    for (const DensityTerm& t : scans[i].terms) {
      CorrespondenceRow row;
      row.expr_id = id;
      row.N = t.N;
      row.value = t.value;
      row.monotone_gap = final_max - t.value.to_double() > eps;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

CorrelationAverages averaged_correlation(const LazySet& E, Window w, i64 H) {
  if (H < 1) throw std::out_of_range("H must be >= 1");
  check_window(w);
  WindowSet base = restrict_to(E, {w.lo, w.hi + H});
  WindowSet Ew = shift_restrict(base, 0, w);

  std::vector<i128> counts(static_cast<std::size_t>(H));
  parallel_for(static_cast<std::size_t>(H), [&](std::size_t g) {
    WindowSet shifted = shift_restrict(base, static_cast<i64>(g), w);
    counts[g] = set_intersect(Ew, shifted).count();
  });

  CorrelationAverages out;
  out.partial.reserve(static_cast<std::size_t>(H));
  i128 prefix = 0;
  for (i64 h = 1; h <= H; ++h) {
    prefix += counts[static_cast<std::size_t>(h - 1)];
    out.partial.emplace_back(prefix, static_cast<i128>(h) * w.length());
  }
  Rational d = density(Ew);
  out.reference = d * d;
  return out;
}

}  // namespace ergo
