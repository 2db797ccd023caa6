#include "report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ergo {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json rational_json(const Rational& r) {
  return json{{"fraction", r.to_fraction_string()}, {"decimal", r.to_decimal_string()}};
}

std::string rational_csv(const Rational& r) {
  return i128_to_string(r.num) + "," + i128_to_string(r.den) + "," + r.to_decimal_string();
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown output format: " + text);
}

std::string report_density(const UpperDensityScan& scan, Format f) {
  if (f == Format::Csv) {
    std::string out = "N,numer,denom,decimal\n";
    for (const DensityTerm& t : scan.terms)
      out += std::to_string(t.N) + "," + rational_csv(t.value) + "\n";
    return out;
  }
  json rows = json::array();
  for (const DensityTerm& t : scan.terms)
    rows.push_back({{"N", t.N}, {"value", rational_json(t.value)}});
  return json{{"rows", rows}, {"running_max", rational_json(scan.running_max)}}.dump(2) + "\n";
}

std::string report_banach(const BanachBound& b, Format f) {
  if (f == Format::Csv) {
    return "numer,denom,decimal,witness_lo,witness_hi\n" + rational_csv(b.value) + "," +
           std::to_string(b.witness.lo) + "," + std::to_string(b.witness.hi) + "\n";
  }
  return json{{"value", rational_json(b.value)},
              {"witness", {{"lo", b.witness.lo}, {"hi", b.witness.hi}}}}
             .dump(2) +
         "\n";
}

std::string report_cover(const CoveringReport& rep, Format f) {
  if (f == Format::Csv) {
    std::string out = "K,numer,denom,decimal,witness_lo,witness_hi\n";
    for (const CoveringPoint& p : rep.points)
      out += std::to_string(p.K) + "," + rational_csv(p.best) + "," +
             std::to_string(p.witness.lo) + "," + std::to_string(p.witness.hi) + "\n";
    return out;
  }
  json pts = json::array();
  for (const CoveringPoint& p : rep.points)
    pts.push_back({{"K", p.K},
                   {"best", rational_json(p.best)},
                   {"witness", {{"lo", p.witness.lo}, {"hi", p.witness.hi}}}});
  return json{{"seq", rep.seq_id}, {"points", pts}}.dump(2) + "\n";
}

std::string report_counterexample(const std::vector<StabilityRow>& rows, Format f) {
  if (f == Format::Csv) {
    std::string out = "K,N,numer,denom,decimal,bound_numer,bound_denom,within\n";
    for (const StabilityRow& r : rows)
      out += std::to_string(r.K) + "," + std::to_string(r.N) + "," +
             rational_csv(r.value) + "," + i128_to_string(r.bound.num) + "," +
             i128_to_string(r.bound.den) + "," + (r.within ? "1" : "0") + "\n";
    return out;
  }
  json arr = json::array();
  for (const StabilityRow& r : rows)
    arr.push_back({{"K", r.K},
                   {"N", r.N},
                   {"value", rational_json(r.value)},
                   {"bound", r.bound.to_fraction_string()},
                   {"within", r.within}});
  return json{{"rows", arr}}.dump(2) + "\n";
}

std::string report_weyl(const WeylReport& rep, Format f) {
  if (f == Format::Csv) {
    std::string out = "N,x,magnitude\n";
    for (std::size_t ci = 0; ci < rep.checkpoints.size(); ++ci)
      for (std::size_t gi = 0; gi < rep.grid.size(); ++gi)
        out += std::to_string(rep.checkpoints[ci]) + "," + fmt_double(rep.grid[gi]) +
               "," + fmt_double(rep.magnitudes[ci][gi]) + "\n";
    out += "\nx,ratio,decaying\n";
    for (std::size_t gi = 0; gi < rep.grid.size(); ++gi)
      out += fmt_double(rep.grid[gi]) + "," + fmt_double(rep.decay_ratio[gi]) + "," +
             (rep.decaying[gi] ? "1" : "0") + "\n";
    return out;
  }
  json mags = json::array();
  for (std::size_t ci = 0; ci < rep.checkpoints.size(); ++ci) {
    json row = json::array();
    for (double m : rep.magnitudes[ci]) row.push_back(m);
    mags.push_back(row);
  }
  json verdicts = json::array();
  for (std::size_t gi = 0; gi < rep.grid.size(); ++gi)
    verdicts.push_back({{"x", rep.grid[gi]},
                        {"ratio", rep.decay_ratio[gi]},
                        {"decaying", static_cast<bool>(rep.decaying[gi])}});
  return json{{"seq", rep.seq_id},
              {"checkpoints", rep.checkpoints},
              {"grid", rep.grid},
              {"magnitudes", mags},
              {"verdicts", verdicts}}
             .dump(2) +
         "\n";
}

std::string report_spectral(const std::vector<SpectralCheck>& checks, Format f) {
  if (f == Format::Csv) {
    std::string out = "trial,lhs,rhs,gap\n";
    for (std::size_t i = 0; i < checks.size(); ++i)
      out += std::to_string(i) + "," + fmt_double(checks[i].lhs) + "," +
             fmt_double(checks[i].rhs) + "," + fmt_double(checks[i].gap) + "\n";
    return out;
  }
  json arr = json::array();
  for (const SpectralCheck& c : checks)
    arr.push_back({{"lhs", c.lhs}, {"rhs", c.rhs}, {"gap", c.gap}});
  return json{{"trials", arr}}.dump(2) + "\n";
}

std::string report_correlate(const CorrelationAverages& c, Format f) {
  if (f == Format::Csv) {
    std::string out = "h,numer,denom,decimal\n";
    for (std::size_t i = 0; i < c.partial.size(); ++i)
      out += std::to_string(i + 1) + "," + rational_csv(c.partial[i]) + "\n";
    out += "\nref_numer,ref_denom,ref_decimal\n" + rational_csv(c.reference) + "\n";
    return out;
  }
  json arr = json::array();
  for (std::size_t i = 0; i < c.partial.size(); ++i)
    arr.push_back({{"h", i + 1}, {"average", rational_json(c.partial[i])}});
  return json{{"partial_averages", arr}, {"reference", rational_json(c.reference)}}
             .dump(2) +
         "\n";
}

std::string report_cylinder(const CorrespondenceTable& table, Format f) {
  if (f == Format::Csv) {
    std::string out = "exprId,N,numer,denom,decimal\n";
    for (const CorrespondenceRow& r : table.rows)
      out += "\"" + r.expr_id + "\"," + std::to_string(r.N) + "," +
             rational_csv(r.value) + "\n";
    return out;
  }
  json arr = json::array();
  for (const CorrespondenceRow& r : table.rows)
    arr.push_back({{"expr", r.expr_id},
                   {"N", r.N},
                   {"value", rational_json(r.value)},
                   {"monotone_gap", r.monotone_gap}});
  return json{{"rows", arr}}.dump(2) + "\n";
}

std::string report_witness(const WitnessResult& w, Format f) {
  if (f == Format::Csv) {
    std::string out = "found,h,numer,denom,decimal,witness_lo,witness_hi\n";
    if (!w.found) return out + "0,,,,,,\n";
    return out + "1," + std::to_string(w.h) + "," + rational_csv(w.value) + "," +
           std::to_string(w.witness.lo) + "," + std::to_string(w.witness.hi) + "\n";
  }
  if (!w.found) return json{{"found", false}}.dump(2) + "\n";
  return json{{"found", true},
              {"h", w.h},
              {"value", rational_json(w.value)},
              {"witness", {{"lo", w.witness.lo}, {"hi", w.witness.hi}}}}
             .dump(2) +
         "\n";
}

std::string report_classify(const ClassifierReport& rep, Format f) {
  if (f == Format::Csv) {
    std::string out = "set,K,numer,denom,decimal\n";
    for (const ClassifierEntry& e : rep.entries)
      for (const CoveringPoint& p : e.curve.points)
        out += e.set_id + "," + std::to_string(p.K) + "," + rational_csv(p.best) + "\n";
    out += "\nset,verdict\n";
    for (const ClassifierEntry& e : rep.entries)
      out += e.set_id + "," + verdict_name(e.verdict) + "\n";
    out += "\noverall," + rep.overall + "\n";
    return out;
  }
  json entries = json::array();
  for (const ClassifierEntry& e : rep.entries) {
    json pts = json::array();
    for (const CoveringPoint& p : e.curve.points)
      pts.push_back({{"K", p.K}, {"best", rational_json(p.best)}});
    entries.push_back(
        {{"set", e.set_id}, {"points", pts}, {"verdict", verdict_name(e.verdict)}});
  }
  return json{{"entries", entries}, {"overall", rep.overall}}.dump(2) + "\n";
}

}  // namespace ergo
