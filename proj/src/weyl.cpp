#include "weyl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace ergo {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double v) {
    double y = v - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// frac(k * x) with the product formed in double-double; k up to ~2^60 would
// otherwise shed the fractional part entirely.
double frac_mul(i64 k, double x) {
  return dd_frac(dd_mul(dd_from_i64(k), DD(x))).to_double();
}

double frac_mul_dd(i64 k, DD x) { return dd_frac(dd_mul(dd_from_i64(k), x)).to_double(); }

}  // namespace

double weyl_sum_magnitude(const std::vector<i64>& k_values, i64 N, double x) {
  if (N < 1 || N > static_cast<i64>(k_values.size()))
    throw std::out_of_range("weyl sum length out of range");
  Kahan re, im;
  for (i64 n = 0; n < N; ++n) {
    double ph = kTwoPi * frac_mul(k_values[static_cast<std::size_t>(n)], x);
    re.add(std::cos(ph));
    im.add(std::sin(ph));
  }
  double a = re.sum / static_cast<double>(N), b = im.sum / static_cast<double>(N);
  return std::sqrt(a * a + b * b);
}

double weyl_sum_magnitude(const IntSequence& seq, i64 N, double x) {
  return weyl_sum_magnitude(seq.values_up_to(N), N, x);
}

std::vector<double> default_weyl_grid() {
  std::vector<double> grid;
  for (int i = 1; i < 20; ++i) {
    if (i == 5 || i == 10 || i == 15) continue;  // denominators <= 4
    grid.push_back(static_cast<double>(i) / 20.0);
  }
  return grid;
}

WeylReport ergodicity_scan(const IntSequence& seq, std::vector<i64> checkpoints,
                           std::vector<double> grid) {
  if (checkpoints.empty() || !std::is_sorted(checkpoints.begin(), checkpoints.end()))
    throw std::invalid_argument("checkpoints must be non-empty and increasing");
  if (grid.empty()) grid = default_weyl_grid();
  i64 maxN = checkpoints.back();
  std::vector<i64> kv = seq.values_up_to(maxN);

  WeylReport rep;
  rep.seq_id = seq.name();
  rep.checkpoints = checkpoints;
  rep.grid = grid;
  rep.magnitudes.assign(checkpoints.size(), std::vector<double>(grid.size(), 0.0));

  parallel_for(grid.size(), [&](std::size_t gi) {
    double x = grid[gi];
    Kahan re, im;
    std::size_t ci = 0;
    for (i64 n = 0; n < maxN; ++n) {
      double ph = kTwoPi * frac_mul(kv[static_cast<std::size_t>(n)], x);
      re.add(std::cos(ph));
      im.add(std::sin(ph));
      while (ci < checkpoints.size() && n + 1 == checkpoints[ci]) {
        double a = re.sum / static_cast<double>(n + 1);
        double b = im.sum / static_cast<double>(n + 1);
        rep.magnitudes[ci][gi] = std::sqrt(a * a + b * b);
        ++ci;
      }
    }
  });

  rep.decay_ratio.resize(grid.size());
  rep.decaying.resize(grid.size());
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    double first = std::max(rep.magnitudes.front()[gi], 1e-12);
    double ratio = rep.magnitudes.back()[gi] / first;
    rep.decay_ratio[gi] = ratio;
    rep.decaying[gi] = ratio <= 1.0 / 3.0;
  }
  return rep;
}

std::complex<double> TrigPoly::eval(double y) const {
  std::complex<double> z = std::polar(1.0, kTwoPi * y);
  // Horner over z^{-J} .. z^{J}
  std::complex<double> acc = c.back();
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i)
    acc = acc * z + c[static_cast<std::size_t>(i)];
  return acc * std::pow(z, -degree);
}

TrigPoly TrigPoly::random(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  TrigPoly f;
  f.degree = degree;
  f.c.resize(static_cast<std::size_t>(2 * degree + 1));
  for (auto& cj : f.c) cj = {coeff(rng), coeff(rng)};
  return f;
}

SpectralCheck spectral_identity_check(const IntSequence& seq, DD alpha,
                                      const TrigPoly& f, i64 N, int grid_size) {
  int J = f.degree;
  if (grid_size <= 4 * J)
    throw std::invalid_argument("quadrature grid too small for polynomial degree");
  std::vector<i64> kv = seq.values_up_to(N);
  std::vector<double> theta(static_cast<std::size_t>(N));
  for (i64 n = 0; n < N; ++n)
    theta[static_cast<std::size_t>(n)] = frac_mul_dd(kv[static_cast<std::size_t>(n)], alpha);

  // Left side: sample the orbit-averaged function on the uniform grid and
  // integrate |g - integral f|^2 (exact quadrature at this grid size).
  std::vector<double> cell(static_cast<std::size_t>(grid_size));
  parallel_for(static_cast<std::size_t>(grid_size), [&](std::size_t t) {
    double y = static_cast<double>(t) / static_cast<double>(grid_size);
    Kahan re, im;
    for (i64 n = 0; n < N; ++n) {
      std::complex<double> v = f.eval(y + theta[static_cast<std::size_t>(n)]);
      re.add(v.real());
      im.add(v.imag());
    }
    std::complex<double> g{re.sum / static_cast<double>(N), im.sum / static_cast<double>(N)};
    std::complex<double> dev = g - f.coeff(0);
    cell[t] = std::norm(dev);
  });
  Kahan lhs_acc;
  for (double v : cell) lhs_acc.add(v);
  double lhs = lhs_acc.sum / static_cast<double>(grid_size);

  // Right side: the spectral measure of f under the rotation is atomic at
  // j*alpha with mass |c_j|^2.
  std::vector<Kahan> re_j(static_cast<std::size_t>(2 * J + 1)), im_j(re_j.size());
  for (i64 n = 0; n < N; ++n) {
    std::complex<double> w = std::polar(1.0, kTwoPi * theta[static_cast<std::size_t>(n)]);
    std::complex<double> p{1.0, 0.0};
    for (int j = 1; j <= J; ++j) {
      p *= w;
      re_j[static_cast<std::size_t>(J + j)].add(p.real());
      im_j[static_cast<std::size_t>(J + j)].add(p.imag());
      re_j[static_cast<std::size_t>(J - j)].add(p.real());
      im_j[static_cast<std::size_t>(J - j)].add(-p.imag());
    }
  }
  Kahan rhs_acc;
  for (int j = -J; j <= J; ++j) {
    if (j == 0) continue;
    double a = re_j[static_cast<std::size_t>(J + j)].sum / static_cast<double>(N);
    double b = im_j[static_cast<std::size_t>(J + j)].sum / static_cast<double>(N);
    rhs_acc.add(std::norm(f.coeff(j)) * (a * a + b * b));
  }
  double rhs = rhs_acc.sum;
  return {lhs, rhs, std::fabs(lhs - rhs)};
}

CorrelationResult correlation_vs_product(const IntSequence& seq, const LazySet& E,
                                         i64 N_avg, Window w) {
  if (N_avg < 1) throw std::out_of_range("N_avg must be >= 1");
  check_window(w);
  std::vector<i64> kv = seq.values_up_to(N_avg);
  i64 kmin = *std::min_element(kv.begin(), kv.end());
  i64 kmax = *std::max_element(kv.begin(), kv.end());
  WindowSet base =
      restrict_to(E, {w.lo + std::min<i64>(kmin, 0), w.hi + std::max<i64>(kmax, 0)});
  WindowSet Ew = shift_restrict(base, 0, w);
  Rational dE = density(Ew);

  CorrelationResult out;
  out.terms.resize(static_cast<std::size_t>(N_avg));
  parallel_for(static_cast<std::size_t>(N_avg), [&](std::size_t i) {
    WindowSet shifted = shift_restrict(base, kv[i], w);
    out.terms[i] = density(set_intersect(Ew, shifted));
  });
  i128 total = 0;
  for (const Rational& t : out.terms) total += t.num * (w.length() / t.den);
  out.average = Rational(total, static_cast<i128>(N_avg) * w.length());
  out.set_density = dE;
  out.product = dE * dE;
  return out;
}

}  // namespace ergo
