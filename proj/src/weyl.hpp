#ifndef ERGOLAB_WEYL_HPP
#define ERGOLAB_WEYL_HPP

// Weyl exponential sums S_N(x) = (1/N) sum e^{2 pi i k_n x}, decay scans over
// an x-grid, and the exact spectral identity for circle rotations acting on
// trigonometric polynomials.

#include <complex>
#include <random>
#include <vector>

#include "folner.hpp"
#include "lazy_set.hpp"
#include "rational.hpp"
#include "sequences.hpp"

namespace ergo {

// |S_N(x)|, compensated (Kahan) summation of both components.
double weyl_sum_magnitude(const IntSequence& seq, i64 N, double x);
double weyl_sum_magnitude(const std::vector<i64>& k_values, i64 N, double x);

// x-grid 0.05..0.95 step 0.05 minus rationals with denominator <= 4.
std::vector<double> default_weyl_grid();

struct WeylReport {
  std::string seq_id;
  std::vector<i64> checkpoints;
  std::vector<double> grid;
  std::vector<std::vector<double>> magnitudes;  // [checkpoint][grid index]
  std::vector<double> decay_ratio;              // per x: |S_last| / max(|S_first|, 1e-12)
  std::vector<bool> decaying;                   // ratio-based verdict (factor >= 3)
};

WeylReport ergodicity_scan(const IntSequence& seq, std::vector<i64> checkpoints,
                           std::vector<double> grid);

struct TrigPoly {
  int degree = 0;                        // frequencies -J..J
  std::vector<std::complex<double>> c;   // c[j + degree]

  std::complex<double> coeff(int j) const { return c[static_cast<std::size_t>(j + degree)]; }
  std::complex<double> eval(double y) const;
  static TrigPoly random(std::mt19937_64& rng, int degree);
};

struct SpectralCheck {
  double lhs = 0;  // || (1/N) sum T^{k_n} f - integral f ||^2 by grid quadrature
  double rhs = 0;  // sum_{j != 0} |c_j|^2 |S_N(j alpha)|^2
  double gap = 0;
};

// Rotation by alpha; grid_size must exceed 4 * degree (and stay a power of two).
SpectralCheck spectral_identity_check(const IntSequence& seq, DD alpha,
                                      const TrigPoly& f, i64 N, int grid_size);

struct CorrelationResult {
  std::vector<Rational> terms;     // density(E cap (E - k_n)) per n
  Rational average;                // (1/N_avg) sum of terms
  Rational set_density;            // density(E) on the window
  Rational product;                // set_density^2
};

// Empirical check of the correlation-average criterion on a window.
CorrelationResult correlation_vs_product(const IntSequence& seq, const LazySet& E,
                                         i64 N_avg, Window w);

}  // namespace ergo

#endif
