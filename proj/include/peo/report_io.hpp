#pragma once

#include "peo/analytic.hpp"
#include "peo/solver.hpp"

#include <nlohmann/json_fwd.hpp>
#include <filesystem>
#include <string>

namespace peo {

/// Shortest decimal form that round-trips the exact double (to_chars), so
/// identical runs produce byte-identical artifacts.
std::string format_double(double v);

/// run.csv: one row per sample, columns t,alpha,eta,S,psi,h. Repeated t
/// rows carry the one-sided values across a jump; eta is the density of the
/// gap starting at the row (0 on the final row and across jumps).
std::string run_csv(const ProblemData& p, const EffortProfile& a);

/// Profile-only CSV (t, alpha, eta), same row convention.
std::string profile_csv(const EffortProfile& a);

nlohmann::json atoms_json(const std::vector<Atom>& atoms);
nlohmann::json support_json(const SupportSet& s);

/// Cumulative profile read back from a (t, alpha[, ...]) CSV, resampled
/// onto the target grid; repeated t rows become jumps.
EffortProfile profile_from_csv(const std::string& text, std::shared_ptr<const Grid> grid);

void write_file(const std::filesystem::path& path, const std::string& content);

} // namespace peo
