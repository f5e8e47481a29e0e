#ifndef SIGNREP_PRESETS_HPP
#define SIGNREP_PRESETS_HPP

#include "signrep/search.hpp"

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace signrep {

struct PresetCase {
    std::string label;
    nlohmann::json parameters = nlohmann::json::object();
    std::string quantity;
    nlohmann::json computed;
    nlohmann::json expected;
    std::string relation = "=";  ///< "=", ">=", ">" or "<="
    bool pass = false;
    std::string claim;  ///< the statement the expected value comes from
    std::string error;  ///< set when the case could not run (e.g. a cap was hit)
};

struct RunReport {
    std::string preset;
    std::string criterion;
    std::vector<PresetCase> cases;
    bool pass = false;
    SearchStats stats;
    double wall_seconds = 0;
};

struct PresetOptions {
    std::uint64_t seed = 1;         ///< randomized suites only
    std::size_t instances = 1000;   ///< randomized suites only
    unsigned workers = 1;
    bool symmetry = false;
    std::uint64_t subset_cap = std::uint64_t{1} << 20;
    std::size_t grid_cap = kDefaultGridCap;
};

/// Names of all presets, in the order `run_all` executes them.
const std::vector<std::string>& preset_names();

/// Throws std::invalid_argument for an unknown name. Case-level failures (including
/// exceeded caps) are recorded in the report instead of thrown.
RunReport run_preset(const std::string& name, const PresetOptions& options = {});

enum class OutputFormat { Json, Csv, Table };
OutputFormat parse_output_format(const std::string& text);

nlohmann::json to_json(const RunReport& r, bool timing = false);
/// Byte-identical for identical reports unless `timing` adds the wall-clock field.
void emit(const RunReport& r, OutputFormat format, std::ostream& os, bool timing = false);
void emit(const std::vector<RunReport>& reports, OutputFormat format, std::ostream& os, bool timing = false);

}  // namespace signrep

#endif  // SIGNREP_PRESETS_HPP
