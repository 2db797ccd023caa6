#include "ergolab.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "correspondence.hpp"
#include "density.hpp"
#include "experiments.hpp"
#include "keyval.hpp"
#include "report.hpp"
#include "selftest.hpp"
#include "sequences.hpp"
#include "weyl.hpp"

struct ergolab_set {
  ergo::LazySetPtr impl;
};
struct ergolab_seq {
  ergo::IntSequence impl;
};
struct ergolab_expr {
  ergo::ShiftExprPtr impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
ergolab_status wrap(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return ERGOLAB_OK;
  } catch (const ergo::PrecisionError& e) {
    g_last_error = e.what();
    return ERGOLAB_EPRECISION;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return ERGOLAB_EPARSE;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return ERGOLAB_ERANGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ERGOLAB_EFAIL;
  }
}

std::vector<ergo::i64> int_list(const char* csv, const char* what) {
  if (!csv || !*csv) throw std::invalid_argument(std::string(what) + " list is empty");
  std::vector<ergo::i64> out;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    // accept 1e6-style scientific shorthand for round counts
    if (item.find('e') != std::string::npos || item.find('E') != std::string::npos) {
      double v = std::stod(item);
      if (v != static_cast<double>(static_cast<long long>(v)))
        throw std::invalid_argument("non-integer checkpoint: " + item);
      out.push_back(static_cast<long long>(v));
    } else {
      out.push_back(std::stoll(item));
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + " list is empty");
  return out;
}

std::vector<double> double_list(const char* csv) {
  std::vector<double> out;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(std::stod(item));
  return out;
}

std::vector<std::string> split_semicolons(const char* text, const char* what) {
  if (!text || !*text) throw std::invalid_argument(std::string(what) + " list is empty");
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ';'))
    if (!item.empty()) out.push_back(item);
  if (out.empty()) throw std::invalid_argument(std::string(what) + " list is empty");
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("null argument: ") + what);
}

}  // namespace

extern "C" {

const char* ergolab_last_error(void) { return g_last_error.c_str(); }

void ergolab_free(char* text) { std::free(text); }

ergolab_status ergolab_set_create(const char* spec, ergolab_set** out) {
  return wrap([&] {
    require(spec && out, "set_create");
    *out = new ergolab_set{ergo::parse_set(spec)};
  });
}

void ergolab_set_destroy(ergolab_set* set) { delete set; }

ergolab_status ergolab_seq_create(const char* spec, ergolab_seq** out) {
  return wrap([&] {
    require(spec && out, "seq_create");
    *out = new ergolab_seq{ergo::IntSequence::parse(spec)};
  });
}

void ergolab_seq_destroy(ergolab_seq* seq) { delete seq; }

ergolab_status ergolab_expr_create(const char* text, ergolab_expr** out) {
  return wrap([&] {
    require(text && out, "expr_create");
    *out = new ergolab_expr{ergo::parse_expr(text)};
  });
}

void ergolab_expr_destroy(ergolab_expr* expr) { delete expr; }

ergolab_status ergolab_density_scan(const ergolab_set* set, const ergolab_expr* expr,
                                    const char* folner_spec, int nmax,
                                    const char* format, char** out) {
  return wrap([&] {
    require(set && expr && folner_spec && format && out, "density_scan");
    ergo::FolnerFamily fam = ergo::FolnerFamily::parse(folner_spec);
    ergo::UpperDensityScan scan =
        ergo::upper_density_along(*expr->impl, *set->impl, fam, nmax);
    *out = dup_string(ergo::report_density(scan, ergo::parse_format(format)));
  });
}

ergolab_status ergolab_banach(const ergolab_set* set, const ergolab_expr* expr,
                              long long L, long long B, long long stride,
                              const char* format, char** out) {
  return wrap([&] {
    require(set && expr && format && out, "banach");
    ergo::BanachBound b = ergo::banach_lower_bound(*expr->impl, *set->impl, L, B, stride);
    *out = dup_string(ergo::report_banach(b, ergo::parse_format(format)));
  });
}

ergolab_status ergolab_cover(const ergolab_set* set, const ergolab_seq* seq,
                             const char* ks_csv, long long L, long long B,
                             long long stride, const char* format, char** out) {
  return wrap([&] {
    require(set && seq && format && out, "cover");
    ergo::CoveringReport rep = ergo::covering_curve(
        *set->impl, seq->impl, int_list(ks_csv, "checkpoint"), L, B, stride);
    *out = dup_string(ergo::report_cover(rep, ergo::parse_format(format)));
  });
}

ergolab_status ergolab_counterexample(const char* ks_csv, int nmax,
                                      const char* format, char** out) {
  return wrap([&] {
    require(format && out, "counterexample");
    auto rows = ergo::hindman_counterexample(nmax, int_list(ks_csv, "checkpoint"));
    *out = dup_string(ergo::report_counterexample(rows, ergo::parse_format(format)));
  });
}

ergolab_status ergolab_weyl_scan(const ergolab_seq* seq, const char* ns_csv,
                                 const char* grid_csv, const char* format,
                                 char** out) {
  return wrap([&] {
    require(seq && format && out, "weyl_scan");
    std::vector<double> grid;
    if (grid_csv && *grid_csv && std::string(grid_csv) != "default")
      grid = double_list(grid_csv);
    ergo::WeylReport rep =
        ergo::ergodicity_scan(seq->impl, int_list(ns_csv, "checkpoint"), grid);
    *out = dup_string(ergo::report_weyl(rep, ergo::parse_format(format)));
  });
}

ergolab_status ergolab_spectral(const ergolab_seq* seq, const char* alpha,
                                int degree, long long N, int grid_size,
                                unsigned long long seed, int trials,
                                const char* format, char** out) {
  return wrap([&] {
    require(seq && alpha && format && out, "spectral");
    if (trials < 1 || degree < 1) throw std::out_of_range("trials and degree must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(1, degree);
    std::uniform_real_distribution<double> ang(0.01, 0.99);
    bool random_alpha = std::string(alpha) == "random";
    ergo::DD fixed_alpha =
        random_alpha ? ergo::DD(0.0) : ergo::parse_angle(alpha);
    std::vector<ergo::SpectralCheck> checks;
    for (int t = 0; t < trials; ++t) {
      ergo::TrigPoly f = ergo::TrigPoly::random(rng, deg(rng));
      ergo::DD a = random_alpha ? ergo::DD(ang(rng)) : fixed_alpha;
      checks.push_back(ergo::spectral_identity_check(seq->impl, a, f, N, grid_size));
    }
    *out = dup_string(ergo::report_spectral(checks, ergo::parse_format(format)));
  });
}

ergolab_status ergolab_correlate(const ergolab_set* set, long long lo,
                                 long long hi, long long H, const char* format,
                                 char** out) {
  return wrap([&] {
    require(set && format && out, "correlate");
    ergo::CorrelationAverages c =
        ergo::averaged_correlation(*set->impl, {lo, hi}, H);
    *out = dup_string(ergo::report_correlate(c, ergo::parse_format(format)));
  });
}

ergolab_status ergolab_cylinder_table(const ergolab_set* set,
                                      const char* exprs_semicolon,
                                      const char* folner_spec, int nmax,
                                      const char* format, char** out) {
  return wrap([&] {
    require(set && folner_spec && format && out, "cylinder_table");
    std::vector<ergo::ShiftExprPtr> exprs;
    for (const std::string& e : split_semicolons(exprs_semicolon, "expression"))
      exprs.push_back(ergo::parse_expr(e));
    ergo::CorrespondenceTable table = ergo::correspondence_table(
        *set->impl, exprs, ergo::FolnerFamily::parse(folner_spec), nmax);
    *out = dup_string(ergo::report_cylinder(table, ergo::parse_format(format)));
  });
}

ergolab_status ergolab_witness(const ergolab_set* set, long long hmax,
                               long long L, long long B, long long stride,
                               const char* format, char** out) {
  return wrap([&] {
    require(set && format && out, "witness");
    ergo::WitnessResult w =
        ergo::complement_witness_search(*set->impl, hmax, L, B, stride);
    *out = dup_string(ergo::report_witness(w, ergo::parse_format(format)));
  });
}

ergolab_status ergolab_classify(const ergolab_seq* seq, const char* sets_semicolon,
                                const char* ks_csv, long long L, long long B,
                                long long stride, const char* format, char** out) {
  return wrap([&] {
    require(seq && format && out, "classify");
    std::vector<std::string> ids = split_semicolons(sets_semicolon, "set");
    std::vector<ergo::LazySetPtr> sets;
    for (const std::string& s : ids) sets.push_back(ergo::parse_set(s));
    ergo::ScanParams params{L, B, stride};
    ergo::ClassifierReport rep = ergo::sweeping_classifier(
        seq->impl, ids, sets, int_list(ks_csv, "checkpoint"), params);
    *out = dup_string(ergo::report_classify(rep, ergo::parse_format(format)));
  });
}

ergolab_status ergolab_selftest(unsigned long long seed, char** out) {
  ergo::SelftestResult r;
  ergolab_status st = wrap([&] {
    require(out != nullptr, "selftest");
    r = ergo::run_selftest(seed);
    *out = dup_string(r.report);
  });
  if (st != ERGOLAB_OK) return st;
  if (r.failures > 0) {
    g_last_error = "selftest failures: " + std::to_string(r.failures);
    return ERGOLAB_EFAIL;
  }
  return ERGOLAB_OK;
}

}  // extern "C"
