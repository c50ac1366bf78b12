#pragma once

#include <string>

#include "kmat/kgraph.hpp"
#include "kmat/oracle.hpp"
#include "kmat/spectra.hpp"

// Vendored single-header nlohmann/json.
#include "json.hpp"

namespace kmat {

using Json = nlohmann::ordered_json;

Json irrep_json(const Irrep& rep);  // {family, rank, labels}
Json pair_json(const SymmetricPair& pair);
Json spectral_json(const SpectralDecomposition& spec);
Json crossing_json(const SymmetricPair& pair, const Irrep& rep,
                   const CrossingReport& report);
Json mass_table_json(const GrassmannianFamily& fam, const MassTable& table);
Json oracle_report_json(const std::string& check, const std::string& subject,
                        const std::vector<ComplexTheta>& thetas,
                        const Json& residuals, bool pass);
Json theta_json(const ComplexTheta& theta);

std::string spectral_dot(const SpectralDecomposition& spec);
std::string mass_table_csv(const MassTable& table);

/// Short human form "3" / "1/2" (JSON always uses strict "p/q").
std::string rat_pretty(const Rat& r);

}  // namespace kmat
