#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "realhur/config.hpp"
#include "realhur/coverings.hpp"
#include "realhur/factorizations.hpp"
#include "realhur/polysolve.hpp"
#include "realhur/real_signs.hpp"
#include "realhur/series.hpp"
#include "realhur/verify.hpp"

namespace realhur {

using ojson = nlohmann::ordered_json;

ojson to_json(const BranchSpec& spec);
ojson to_json(const HurwitzCount& count);
ojson to_json(const SolutionSet& set, double realness_tol);
ojson to_json(const RealPolynomial& p);
ojson to_json(const SNumber& s);
ojson to_json(const RealHurwitz& hr);
ojson to_json(const TheoremReport& report);
ojson to_json(const SeriesTable& table);
ojson to_json(const BasisFit& fit);
ojson to_json(const VerifyRecord& record);
ojson to_json(const VerifyReport& report);

/// {"command", "config", "result"}: every artifact carries its run settings.
ojson envelope(const std::string& command, const RunConfig& config, ojson result);

}  // namespace realhur
