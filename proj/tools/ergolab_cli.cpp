// Command-line front end over the C API. Every subcommand prints CSV or JSON
// to stdout (or --out FILE) and exits 0 on success, 1 on selftest failure,
// 2 on parse or range errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "ergolab.h"

namespace {

struct SetHandle {
  ergolab_set* p = nullptr;
  ~SetHandle() { ergolab_set_destroy(p); }
};
struct SeqHandle {
  ergolab_seq* p = nullptr;
  ~SeqHandle() { ergolab_seq_destroy(p); }
};
struct ExprHandle {
  ergolab_expr* p = nullptr;
  ~ExprHandle() { ergolab_expr_destroy(p); }
};

int status_to_exit(ergolab_status st) {
  switch (st) {
    case ERGOLAB_OK: return 0;
    case ERGOLAB_EPARSE:
    case ERGOLAB_ERANGE: return 2;
    default: return 1;
  }
}

int fail(ergolab_status st) {
  std::cerr << "error: " << ergolab_last_error() << "\n";
  return status_to_exit(st);
}

int emit(char* text, const std::string& out_path) {
  if (!text) return 1;
  if (out_path.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open output file " << out_path << "\n";
      ergolab_free(text);
      return 1;
    }
    f << text;
  }
  ergolab_free(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ergolab: exact window densities, covering curves, exponential sums and "
      "cylinder frequencies for structured subsets of the integers.\n"
      "Set ERGOLAB_THREADS to override the worker thread count; results do not "
      "depend on it."};
  app.require_subcommand(1);

  std::string set_spec, seq_spec = "id", expr_text = "E", exprs_list, sets_list;
  std::string folner = "dyadic", format = "csv", out_path, ks, ns, grid = "default";
  std::string alpha = "random";
  int nmax = 10, degree = 8, grid_size = 64, trials = 1;
  long long L = 1024, B = 65536, stride = 0, H = 1000, hmax = 10;
  long long win_lo = 0, win_hi = 1000000, N = 10000;
  unsigned long long seed = 1;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", format, "csv or json");
    c->add_option("--out", out_path, "output file (default stdout)");
  };
  auto add_scan = [&](CLI::App* c) {
    c->add_option("--L", L, "window length");
    c->add_option("--B", B, "scan bound");
    c->add_option("--stride", stride, "window start step (default L/2)");
  };

  CLI::App* density = app.add_subcommand("density", "window densities along a Folner family");
  density->add_option("--set", set_spec, "set spec")->required();
  density->add_option("--expr", expr_text, "shift expression (default E)");
  density->add_option("--folner", folner, "segments | dyadic | explicit ...");
  density->add_option("--nmax", nmax, "largest family index");
  add_common(density);

  CLI::App* banach = app.add_subcommand("banach", "best-window density lower bound");
  banach->add_option("--set", set_spec, "set spec")->required();
  banach->add_option("--expr", expr_text, "shift expression (default E)");
  add_scan(banach);
  add_common(banach);

  CLI::App* cover = app.add_subcommand("cover", "covering curve for unions of shifts");
  cover->add_option("--set", set_spec, "set spec")->required();
  cover->add_option("--seq", seq_spec, "shift sequence spec");
  cover->add_option("--ks", ks, "checkpoints, e.g. 1,16,64")->required();
  add_scan(cover);
  add_common(cover);

  CLI::App* cex = app.add_subcommand("counterexample", "union stability of the block set");
  cex->add_option("--ks", ks, "union sizes K")->required();
  cex->add_option("--nmax", nmax, "largest dyadic index");
  add_common(cex);

  CLI::App* weyl = app.add_subcommand("weyl", "exponential sum decay scan");
  weyl->add_option("--seq", seq_spec, "sequence spec")->required();
  weyl->add_option("--ns", ns, "sum lengths, e.g. 1e4,1e6")->required();
  weyl->add_option("--grid", grid, "x values or 'default'");
  add_common(weyl);

  CLI::App* spectral = app.add_subcommand("spectral", "rotation spectral identity trials");
  spectral->add_option("--seq", seq_spec, "sequence spec");
  spectral->add_option("--alpha", alpha, "angle (decimal, golden, sqrt2, sqrt3, random)");
  spectral->add_option("--degree", degree, "max polynomial degree");
  spectral->add_option("--N", N, "orbit average length");
  spectral->add_option("--grid-size", grid_size, "quadrature points (> 4*degree)");
  spectral->add_option("--seed", seed, "rng seed");
  spectral->add_option("--trials", trials, "number of random polynomials");
  add_common(spectral);

  CLI::App* corr = app.add_subcommand("correlate", "averaged correlation vs density^2");
  corr->add_option("--set", set_spec, "set spec")->required();
  corr->add_option("--lo", win_lo, "window start");
  corr->add_option("--hi", win_hi, "window end (exclusive)");
  corr->add_option("--H", H, "number of shifts averaged");
  add_common(corr);

  CLI::App* cyl = app.add_subcommand("cylinder", "expression densities along a family");
  cyl->add_option("--set", set_spec, "set spec")->required();
  cyl->add_option("--exprs", exprs_list, "semicolon-separated expressions")->required();
  cyl->add_option("--folner", folner, "segments | dyadic | explicit ...");
  cyl->add_option("--nmax", nmax, "largest family index");
  add_common(cyl);

  CLI::App* wit = app.add_subcommand("witness", "complement correlation witness search");
  wit->add_option("--set", set_spec, "set spec")->required();
  wit->add_option("--hmax", hmax, "largest shift tried");
  add_scan(wit);
  add_common(wit);

  CLI::App* cls = app.add_subcommand("classify", "sweeping-out evidence classifier");
  cls->add_option("--seq", seq_spec, "shift sequence spec");
  cls->add_option("--sets", sets_list, "semicolon-separated set specs")->required();
  cls->add_option("--ks", ks, "checkpoints")->required();
  add_scan(cls);
  add_common(cls);

  CLI::App* self = app.add_subcommand("selftest", "seeded property suite");
  self->add_option("--seed", seed, "rng seed");
  self->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (stride == 0) stride = L / 2 > 0 ? L / 2 : 1;
  char* text = nullptr;
  ergolab_status st = ERGOLAB_OK;

  if (app.got_subcommand(self)) {
    st = ergolab_selftest(seed, &text);
    int rc = emit(text, out_path);
    if (st != ERGOLAB_OK) {
      std::cerr << "error: " << ergolab_last_error() << "\n";
      return status_to_exit(st);
    }
    return rc;
  }

  SetHandle set;
  SeqHandle seq;
  ExprHandle expr;
  if (!set_spec.empty()) {
    st = ergolab_set_create(set_spec.c_str(), &set.p);
    if (st != ERGOLAB_OK) return fail(st);
  }
  st = ergolab_seq_create(seq_spec.c_str(), &seq.p);
  if (st != ERGOLAB_OK) return fail(st);
  st = ergolab_expr_create(expr_text.c_str(), &expr.p);
  if (st != ERGOLAB_OK) return fail(st);

  const char* fmt = format.c_str();
  if (app.got_subcommand(density)) {
    st = ergolab_density_scan(set.p, expr.p, folner.c_str(), nmax, fmt, &text);
  } else if (app.got_subcommand(banach)) {
    st = ergolab_banach(set.p, expr.p, L, B, stride, fmt, &text);
  } else if (app.got_subcommand(cover)) {
    st = ergolab_cover(set.p, seq.p, ks.c_str(), L, B, stride, fmt, &text);
  } else if (app.got_subcommand(cex)) {
    st = ergolab_counterexample(ks.c_str(), nmax, fmt, &text);
  } else if (app.got_subcommand(weyl)) {
    st = ergolab_weyl_scan(seq.p, ns.c_str(), grid.c_str(), fmt, &text);
  } else if (app.got_subcommand(spectral)) {
    st = ergolab_spectral(seq.p, alpha.c_str(), degree, N, grid_size, seed, trials,
                          fmt, &text);
  } else if (app.got_subcommand(corr)) {
    st = ergolab_correlate(set.p, win_lo, win_hi, H, fmt, &text);
  } else if (app.got_subcommand(cyl)) {
    st = ergolab_cylinder_table(set.p, exprs_list.c_str(), folner.c_str(), nmax, fmt,
                                &text);
  } else if (app.got_subcommand(wit)) {
    st = ergolab_witness(set.p, hmax, L, B, stride, fmt, &text);
  } else if (app.got_subcommand(cls)) {
    st = ergolab_classify(seq.p, sets_list.c_str(), ks.c_str(), L, B, stride, fmt,
                          &text);
  }

  if (st != ERGOLAB_OK) return fail(st);
  return emit(text, out_path);
}
