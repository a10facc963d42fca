#include "qseries/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qseries/cmforms.hpp"
#include "qseries/etaq.hpp"
#include "qseries/partitions.hpp"
#include "qseries/verify.hpp"

namespace qseries::cli {

namespace {

template <class T>
T parse_number(const std::string &key, const std::string &value)
{
    T out{};
    const auto *end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("invalid value '" + value + "' for " + key);
    }
    return out;
}

std::string trim(const std::string &s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

OutputFormat parse_format(const std::string &v)
{
    if (v == "json") {
        return OutputFormat::Json;
    }
    if (v == "csv") {
        return OutputFormat::Csv;
    }
    throw ConfigError("output format must be json or csv, got '" + v + "'");
}

std::vector<long> parse_z_list(const std::string &text)
{
    std::vector<long> zs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        zs.push_back(parse_number<long>("--z", trim(item)));
    }
    if (zs.empty()) {
        throw ConfigError("--z needs at least one integer");
    }
    return zs;
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

struct Invocation {
    std::optional<std::string> config_path;
    std::optional<std::string> format;
    std::optional<std::string> workers;
    std::string spec;
    std::optional<std::size_t> order;
    std::string form;
    std::uint64_t index = 0;
    std::optional<unsigned> limit;
    std::uint64_t prime_limit = defaults::kDivisibilityPrimeLimit;
    std::optional<std::string> z;
};

class Runner
{
public:
    explicit Runner(std::ostream &out) : out_(out) {}

    void emit_table(const char *oracle, unsigned limit, const std::vector<std::pair<unsigned, std::string>> &rows)
    {
        if (config_.output_format == OutputFormat::Csv) {
            out_ << "index,value\n";
            for (const auto &[n, v] : rows) {
                out_ << n << ',' << v << '\n';
            }
            return;
        }
        nlohmann::ordered_json j;
        j["oracle"] = oracle;
        j["limit"] = limit;
        auto values = nlohmann::ordered_json::array();
        for (const auto &[n, v] : rows) {
            values.push_back(nlohmann::ordered_json::array({n, v}));
        }
        j["values"] = std::move(values);
        out_ << j.dump() << '\n';
    }

    VerifyOptions verify_options() const
    {
        VerifyOptions o;
        o.max_counterexamples = config_.max_counterexamples;
        o.workers = config_.worker_count;
        o.partition_cap = config_.partition_cap;
        return o;
    }

    CliConfig config_;
    std::ostream &out_;
};

} // namespace

void apply_setting(CliConfig &config, const std::string &key, const std::string &value)
{
    if (key == "default_order") {
        const auto v = parse_number<std::size_t>(key, value);
        if (v == 0) {
            throw ConfigError("default_order must be positive");
        }
        config.default_order = v;
    } else if (key == "partition_cap") {
        const auto v = parse_number<unsigned>(key, value);
        if (v == 0 || v > kMaxPartitionCap) {
            throw ConfigError("partition_cap must be between 1 and " + std::to_string(kMaxPartitionCap));
        }
        config.partition_cap = v;
    } else if (key == "output_format") {
        config.output_format = parse_format(value);
    } else if (key == "worker_count") {
        if (value == "auto") {
            config.worker_count = 0;
        } else {
            const auto v = parse_number<int>(key, value);
            if (v <= 0) {
                throw ConfigError("worker_count must be positive or 'auto'");
            }
            config.worker_count = v;
        }
    } else if (key == "max_counterexamples") {
        const auto v = parse_number<std::size_t>(key, value);
        if (v == 0) {
            throw ConfigError("max_counterexamples must be positive");
        }
        config.max_counterexamples = v;
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

void apply_config_file(CliConfig &config, const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        apply_setting(config, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

void apply_environment(CliConfig &config, const EnvLookup &lookup)
{
    for (const char *key : {"default_order", "partition_cap", "output_format", "worker_count", "max_counterexamples"}) {
        std::string var = kEnvPrefix;
        for (const char *c = key; *c; ++c) {
            var += static_cast<char>(std::toupper(static_cast<unsigned char>(*c)));
        }
        if (const auto v = lookup(var)) {
            apply_setting(config, key, *v);
        }
    }
}

int write_reports(const CliConfig &config, std::ostream &out, const std::vector<VerificationReport> &reports,
                  bool as_array)
{
    if (config.output_format == OutputFormat::Csv) {
        out << "check_id,range,status,counterexamples,elapsed_ms\n";
        for (const auto &r : reports) {
            out << csv_field(r.check_id) << ',' << csv_field(r.range) << ',' << r.status() << ','
                << r.counterexamples.size() << ',' << r.elapsed_ms << '\n';
        }
    } else if (as_array) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &r : reports) {
            arr.push_back(to_json(r));
        }
        out << arr.dump() << '\n';
    } else {
        for (const auto &r : reports) {
            out << to_json(r).dump() << '\n';
        }
    }
    const bool failed = std::any_of(reports.begin(), reports.end(), [](const auto &r) { return !r.passed(); });
    return failed ? 1 : 0;
}

nlohmann::ordered_json expansion_json(const std::string &spec_text, const TruncatedSeries &s)
{
    nlohmann::ordered_json j;
    j["spec"] = spec_text;
    j["order"] = s.order();
    auto coeffs = nlohmann::ordered_json::array();
    for (const std::size_t i : s.support()) {
        coeffs.push_back(nlohmann::ordered_json::array({i, to_decimal(s[i])}));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

std::string expansion_csv(const TruncatedSeries &s)
{
    std::string out = "index,value\n";
    for (const std::size_t i : s.support()) {
        out += std::to_string(i) + ',' + to_decimal(s[i]) + '\n';
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    return run(args, out, err, [](const std::string &) { return std::optional<std::string>(); });
}

int run(int argc, const char *const *argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr, [](const std::string &name) -> std::optional<std::string> {
        if (const char *v = std::getenv(name.c_str())) {
            return std::string(v);
        }
        return std::nullopt;
    });
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const EnvLookup &env)
{
    CLI::App app{"q-series expansion, closed-form coefficients and verification harness", "qseries"};
    app.fallthrough();
    app.require_subcommand(1);

    Invocation inv;
    app.add_option("--config", inv.config_path, "key=value config file (overridden by flags)");
    app.add_option("--format", inv.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--workers", inv.workers, "worker threads for verify (integer or auto)");

    auto *expand_cmd = app.add_subcommand("expand", "expand an eta-quotient spec as a q-series");
    expand_cmd->add_option("--spec", inv.spec, "eta-quotient, e.g. \"9^3*3^-1\"")->required();
    expand_cmd->add_option("--order", inv.order, "exclusive truncation order");

    auto *coeff_cmd = app.add_subcommand("coeff", "closed-form coefficient of a named form");
    coeff_cmd->add_option("--form", inv.form, "A, B or C")->required()->check(CLI::IsMember({"A", "B", "C"}));
    coeff_cmd->add_option("--index", inv.index, "positive index n")->required();

    auto *oracle_cmd = app.add_subcommand("oracle", "brute-force partition oracles");
    oracle_cmd->require_subcommand(1);
    auto *oracle_core = oracle_cmd->add_subcommand("three-core", "3-core partition counts for n <= limit");
    oracle_core->add_option("--limit", inv.limit, "largest n");
    auto *oracle_hook = oracle_cmd->add_subcommand("hook-sum", "hook-length sums for n <= limit");
    oracle_hook->add_option("--limit", inv.limit, "largest n");
    oracle_hook->add_option("--z", inv.z, "comma-separated integers");

    auto *verify_cmd = app.add_subcommand("verify", "run verification checks");
    verify_cmd->require_subcommand(1);
    auto *v_supports = verify_cmd->add_subcommand("supports", "equal supports of A, B, C");
    v_supports->add_option("--limit", inv.limit, "largest n");
    auto *v_closed = verify_cmd->add_subcommand("closed-forms", "closed forms against expansions");
    v_closed->add_option("--limit", inv.limit, "exclusive order");
    auto *v_ident = verify_cmd->add_subcommand("identities", "hook-length sums against Euler powers");
    v_ident->add_option("--limit", inv.limit, "largest n");
    v_ident->add_option("--z", inv.z, "comma-separated integers");
    auto *v_core = verify_cmd->add_subcommand("three-core", "3-core counts against B");
    v_core->add_option("--limit", inv.limit, "largest n");
    auto *v_div = verify_cmd->add_subcommand("divisibility", "c*(p) | a*(p) for split primes");
    v_div->add_option("--prime-limit", inv.prime_limit, "largest prime tested");
    auto *v_all = verify_cmd->add_subcommand("all", "every check at its default limit");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    Runner runner(out);
    try {
        apply_environment(runner.config_, env);
        if (inv.config_path) {
            apply_config_file(runner.config_, *inv.config_path);
        }
        if (inv.format) {
            apply_setting(runner.config_, "output_format", *inv.format);
        }
        if (inv.workers) {
            apply_setting(runner.config_, "worker_count", *inv.workers);
        }
        const CliConfig &cfg = runner.config_;

        if (*expand_cmd) {
            const auto spec = parse_spec(inv.spec);
            const auto series = expand(spec, inv.order.value_or(cfg.default_order));
            if (cfg.output_format == OutputFormat::Csv) {
                out << expansion_csv(series);
            } else {
                out << expansion_json(inv.spec, series).dump() << '\n';
            }
            return 0;
        }

        if (*coeff_cmd) {
            if (inv.index == 0) {
                throw ConfigError("--index must be positive");
            }
            const auto value = coeff(parse_form_id(inv.form), inv.index);
            if (!inv.format) {
                out << to_decimal(value) << '\n';
            } else if (cfg.output_format == OutputFormat::Csv) {
                out << "index,value\n" << inv.index << ',' << to_decimal(value) << '\n';
            } else {
                nlohmann::ordered_json j;
                j["form"] = inv.form;
                j["index"] = inv.index;
                j["value"] = to_decimal(value);
                out << j.dump() << '\n';
            }
            return 0;
        }

        if (*oracle_core) {
            const unsigned limit = inv.limit.value_or(defaults::kThreeCoreLimit);
            std::vector<std::pair<unsigned, std::string>> rows;
            for (unsigned n = 0; n <= limit; ++n) {
                rows.emplace_back(n, to_decimal(three_core_count(n, cfg.partition_cap)));
            }
            runner.emit_table("three-core", limit, rows);
            return 0;
        }

        if (*oracle_hook) {
            const unsigned limit = inv.limit.value_or(defaults::kIdentitiesLimit);
            const auto zs = parse_z_list(inv.z.value_or("9"));
            if (cfg.output_format == OutputFormat::Csv) {
                out << "z,index,value\n";
            }
            nlohmann::ordered_json j;
            j["oracle"] = "hook-sum";
            j["limit"] = limit;
            j["z"] = zs;
            auto values = nlohmann::ordered_json::array();
            for (const long z : zs) {
                for (unsigned n = 0; n <= limit; ++n) {
                    const auto v = nekrasov_okounkov_sum(Rational(z), n, cfg.partition_cap).get_str();
                    if (cfg.output_format == OutputFormat::Csv) {
                        out << z << ',' << n << ',' << v << '\n';
                    } else {
                        values.push_back(nlohmann::ordered_json::array({z, n, v}));
                    }
                }
            }
            if (cfg.output_format == OutputFormat::Json) {
                j["values"] = std::move(values);
                out << j.dump() << '\n';
            }
            return 0;
        }

        const auto opts = runner.verify_options();
        if (*v_supports) {
            return write_reports(runner.config_, out, {verify_supports(inv.limit.value_or(defaults::kSupportsLimit), opts)}, false);
        }
        if (*v_closed) {
            return write_reports(runner.config_, out, {verify_closed_forms(inv.limit.value_or(defaults::kClosedFormsLimit), opts)},
                                       false);
        }
        if (*v_ident) {
            const auto zs = inv.z ? parse_z_list(*inv.z) : defaults::kIdentityZs;
            return write_reports(runner.config_, out, 
                {verify_identities(inv.limit.value_or(defaults::kIdentitiesLimit), zs, opts)}, false);
        }
        if (*v_core) {
            return write_reports(runner.config_, out, 
                {verify_three_core_oracle(inv.limit.value_or(defaults::kThreeCoreLimit), opts)}, false);
        }
        if (*v_div) {
            return write_reports(runner.config_, out, {verify_divisibility(inv.prime_limit, opts)}, false);
        }
        if (*v_all) {
            return write_reports(runner.config_, out, verify_all(opts), true);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << app.help();
    return 2;
}

} // namespace qseries::cli
