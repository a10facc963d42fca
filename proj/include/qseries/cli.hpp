#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qseries/series.hpp"
#include "qseries/verify.hpp"

namespace qseries::cli {

enum class OutputFormat { Json, Csv };

inline constexpr unsigned kMaxPartitionCap = 60;

/// Every environment variable read by the CLI starts with this prefix.
inline constexpr const char *kEnvPrefix = "QSERIES_";

struct CliConfig {
    std::size_t default_order = 100;
    unsigned partition_cap = 40;
    OutputFormat output_format = OutputFormat::Json;
    /// 0 means "auto".
    int worker_count = 0;
    std::size_t max_counterexamples = 16;
};

/// Raised for malformed config values; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Applies one key=value setting. Keys: default_order, partition_cap,
/// output_format (json|csv), worker_count (integer or "auto"),
/// max_counterexamples.
void apply_setting(CliConfig &config, const std::string &key, const std::string &value);

/// Reads key=value lines; blank lines and lines starting with '#' are ignored.
void apply_config_file(CliConfig &config, const std::string &path);

/// Environment lookup; returns nullopt for unset variables.
using EnvLookup = std::function<std::optional<std::string>(const std::string &)>;

/// Reads QSERIES_DEFAULT_ORDER, QSERIES_PARTITION_CAP, QSERIES_OUTPUT_FORMAT,
/// QSERIES_WORKER_COUNT and QSERIES_MAX_COUNTEREXAMPLES through `lookup`.
void apply_environment(CliConfig &config, const EnvLookup &lookup);

/// {"spec": ..., "order": ..., "coeffs": [[index, "value"], ...]}, nonzero
/// entries only, ascending by index.
nlohmann::ordered_json expansion_json(const std::string &spec_text, const TruncatedSeries &s);

/// "index,value" header followed by one row per nonzero coefficient.
std::string expansion_csv(const TruncatedSeries &s);

/// Writes reports in the configured format (a JSON array when as_array,
/// otherwise one JSON object per line). Returns 1 if any report failed, else 0.
int write_reports(const CliConfig &config, std::ostream &out, const std::vector<VerificationReport> &reports,
                  bool as_array);

/// Entry point. args excludes the program name. Returns 0 on success or
/// pass, 1 if any emitted report failed, 2 on usage or input errors.
/// Settings resolve as defaults < environment < --config file < flags.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const EnvLookup &env);

/// As above with an empty environment.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Same, reading configuration from the process environment.
int run(int argc, const char *const *argv);

} // namespace qseries::cli
