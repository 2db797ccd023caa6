#ifndef ERGOLAB_REPORT_HPP
#define ERGOLAB_REPORT_HPP

// Renders driver results as CSV or JSON. Rationals appear as numer/denom
// columns plus 12-place decimals; doubles are printed with %.17g so identical
// runs produce identical bytes.

#include <string>
#include <vector>

#include "correspondence.hpp"
#include "density.hpp"
#include "experiments.hpp"
#include "weyl.hpp"

namespace ergo {

enum class Format { Csv, Json };
Format parse_format(const std::string& text);  // "csv" | "json"

std::string report_density(const UpperDensityScan& scan, Format f);
std::string report_banach(const BanachBound& b, Format f);
std::string report_cover(const CoveringReport& rep, Format f);
std::string report_counterexample(const std::vector<StabilityRow>& rows, Format f);
std::string report_weyl(const WeylReport& rep, Format f);
std::string report_spectral(const std::vector<SpectralCheck>& checks, Format f);
std::string report_correlate(const CorrelationAverages& c, Format f);
std::string report_cylinder(const CorrespondenceTable& table, Format f);
std::string report_witness(const WitnessResult& w, Format f);
std::string report_classify(const ClassifierReport& rep, Format f);

}  // namespace ergo

#endif
