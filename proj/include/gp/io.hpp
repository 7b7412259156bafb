// io.hpp -- CSV and JSON renderings of the result types.  All output is
// deterministic: fixed key order, fixed significant digits (12 for
// eigenvalues and gaps, 6 for ratios), newline-terminated.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gp/dirichlet.hpp"
#include "gp/expansion.hpp"
#include "gp/numbertheory.hpp"
#include "gp/spectrum.hpp"

namespace gp {

// printf("%.<sig>g") rendering.
std::string format_sig(double v, int sig);

std::string spectrum_to_csv(const Spectrum& s);
nlohmann::ordered_json spectrum_to_json(const Spectrum& s);

std::string gap_rows_to_csv(const std::vector<GapRow>& rows);
nlohmann::ordered_json gap_rows_to_json(const std::vector<GapRow>& rows);

std::string census_to_csv(const std::vector<CensusRecord>& recs);
nlohmann::ordered_json census_to_json(const std::vector<CensusRecord>& recs);

std::string witnesses_to_csv(const std::vector<DirichletWitness>& ws);
nlohmann::ordered_json witnesses_to_json(const std::vector<DirichletWitness>& ws);

// count = count_near_valency at the same eps, floor = floor(n/q^2).
std::string cluster_to_csv(const GoodIndexSet& s, std::int64_t count, std::int64_t floor_m);
nlohmann::ordered_json cluster_to_json(const GoodIndexSet& s, std::int64_t count,
                                       std::int64_t floor_m);

// skip_h: render h/witness as not computed (enumeration refused).
std::string expansion_to_csv(const GpParams& p, const ExpansionResult& r, bool skip_h,
                             bool sandwich_ok);
nlohmann::ordered_json expansion_to_json(const GpParams& p, const ExpansionResult& r,
                                         bool skip_h, bool sandwich_ok);

}  // namespace gp
