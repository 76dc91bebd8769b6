#pragma once

#include <string>

#include "cosetcurv/bounds.hpp"
#include "cosetcurv/curvature.hpp"
#include "cosetcurv/montecarlo.hpp"

namespace cosetcurv {

// Serializers for the analysis report. The JSON form is the machine contract:
// top-level keys "code", "measured", "bounds", "timing"; rationals rendered
// as "p/q" strings; null for unavailable quantities. Output is byte-stable
// for identical inputs as long as timings were not requested.
std::string report_to_json(const AnalysisReport& rep);

// One CSV row per bound entry; RFC-4180 quoting.
std::string report_to_csv(const AnalysisReport& rep);

// Human-readable rendering of the same content.
std::string report_to_text(const AnalysisReport& rep);

// Per-direction curvature listing for the `curvature` subcommand.
std::string curvature_to_json(const CurvatureReport& rep, const std::string& source);
std::string curvature_to_text(const CurvatureReport& rep, const std::string& source);

// Random-subset ensemble summary for the `montecarlo` subcommand.
struct EnsembleContext {
    std::string source;
    int q = 3;
    Rat a;
    std::uint64_t seed = 0;
};
std::string ensemble_to_json(const SubsetEnsemble& e, const EnsembleContext& ctx);
std::string ensemble_to_text(const SubsetEnsemble& e, const EnsembleContext& ctx);

} // namespace cosetcurv
