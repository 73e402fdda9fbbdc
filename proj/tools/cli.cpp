#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "coloreul/descent_algebra.hpp"
#include "coloreul/json_io.hpp"
#include "coloreul/poset.hpp"
#include "coloreul/ppartition.hpp"
#include "suites.hpp"

namespace coloreul::cli {

namespace {

struct RunConfig {
    int r = 2;
    int n = -1;  // unset: each command picks its own default
    std::string j;
    std::string k;
    std::uint64_t seed = 0;
    int cases = 100;
    std::string format = "text";
    std::string cache;
    unsigned jobs = 1;
    std::uint64_t max_group_size = Limits{}.max_group_size;
    std::string out;
    bool no_timing = false;

    // subcommand specific
    std::string suite;
    std::string pi;
    std::string poset_file;
    bool floating = false;
    std::string partition = "des";
};

int n_or(const RunConfig& c, int fallback) { return c.n >= 0 ? c.n : fallback; }

// Empty when neither the flag nor the fallback gives values.
std::vector<int> range_or(const std::string& text, const std::string& fallback) {
    if (text.empty() && fallback.empty()) return {};
    return parse_range(text.empty() ? fallback : text);
}

Limits limits_of(const RunConfig& c) {
    Limits limits;
    limits.max_group_size = c.max_group_size;
    return limits;
}

Json config_json(const RunConfig& c, int n, const std::vector<int>& j, const std::vector<int>& k) {
    Json doc{{"r", c.r}, {"n", n}};
    if (!j.empty()) doc["j"] = j;
    if (!k.empty()) doc["k"] = k;
    doc["cases"] = c.cases;
    doc["jobs"] = c.jobs;
    doc["max_group_size"] = c.max_group_size;
    doc["format"] = c.format;
    return doc;
}

class Stopwatch {
public:
    explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        if (!enabled_) return 0;
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

Json make_report(const std::string& command, const Json& config, const RunConfig& c, bool passed,
                 const Stopwatch& clock, Json result) {
    Json report{{"command", command},
                {"config", config},
                {"seed", c.seed},
                {"version", COLOREUL_VERSION},
                {"status", passed ? "pass" : "fail"},
                {"duration_ms", clock.elapsed_ms()},
                {"result", std::move(result)}};
    validate_json(report, "report");
    return report;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

Json positions_json(PositionSet set) { return set.elements(); }

std::string bracket_list(const std::vector<std::string>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i];
    return out + "]";
}

std::string compact(const Json& doc) { return doc.dump(); }

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
    const Stopwatch clock(!c.no_timing);
    const int n = n_or(c, 2);
    const auto limits = limits_of(c);
    check_group_size(c.r, n, limits);
    if (c.format == "csv") out << "rank,permutation,descent_set,des,internal_descent_set,intdes,mr_key\n";
    Json records = Json::array();
    std::uint64_t index = 0;
    for_each_element(c.r, n, [&](const ColoredPermutation& pi) {
        const auto profile = descent_profile(pi);
        const auto key = mr_key(pi);
        if (c.format == "json") {
            Json parts = Json::array();
            for (const auto& part : key.parts) parts.push_back({part.length, part.color});
            records.push_back({{"rank", index},
                               {"permutation", to_json(pi)},
                               {"one_line", to_string(pi)},
                               {"descent_set", positions_json(profile.descent_set)},
                               {"des", profile.des},
                               {"internal_descent_set", positions_json(profile.internal_descent_set)},
                               {"intdes", profile.intdes},
                               {"mr_key", std::move(parts)}});
        } else if (c.format == "csv") {
            out << index << ',' << csv_field(to_string(pi)) << ',' << csv_field(to_string(profile.descent_set)) << ','
                << profile.des << ',' << csv_field(to_string(profile.internal_descent_set)) << ',' << profile.intdes
                << ',' << csv_field(to_string(key)) << '\n';
        } else {
            out << (pi.n() == 0 ? "()" : to_string(pi)) << "\tDes=" << to_string(profile.descent_set)
                << "\tdes=" << profile.des << "\tintDes=" << to_string(profile.internal_descent_set)
                << "\tintdes=" << profile.intdes << "\tmr=" << to_string(key) << '\n';
        }
        ++index;
    }, limits);
    if (c.format == "json") {
        Json result{{"count", index}, {"records", std::move(records)}};
        out << make_report("enumerate", config_json(c, n, {}, {}), c, true, clock, std::move(result)).dump(2) << '\n';
    }
    return kPass;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    const Stopwatch clock(!c.no_timing);
    struct Defaults {
        int n;
        const char* j;
        const char* k;
    };
    static const std::map<std::string, Defaults> defaults{
        {"ftcpp", {4, "0..3", ""}},         {"order-poly", {3, "0..3", ""}},   {"zigzag", {3, "", ""}},
        {"chain", {3, "", ""}},              {"barred", {3, "0..3", "0..3"}},   {"steingrimsson", {4, "0..4", ""}},
        {"closure-des", {2, "", ""}},        {"closure-mr", {2, "", ""}},       {"closure-desset", {2, "", ""}},
        {"phi", {3, "0..2", "0..2"}},        {"idempotents", {3, "", ""}},      {"variants", {2, "", ""}}};
    const auto& d = defaults.at(c.suite);

    SuiteConfig config;
    config.r = c.r;
    config.n = n_or(c, d.n);
    config.j_values = range_or(c.j, d.j);
    config.k_values = range_or(c.k, d.k);
    config.seed = c.seed;
    config.cases = c.cases;
    config.jobs = c.jobs;
    config.limits = limits_of(c);

    const auto outcome = run_suite(c.suite, config);
    Json result{{"suite", c.suite},
                {"checks", outcome.checks},
                {"failure_count", outcome.failure_count},
                {"failures", outcome.failures},
                {"details", outcome.details}};
    const auto report = make_report("verify", config_json(c, config.n, config.j_values, config.k_values), c,
                                    outcome.passed(), clock, std::move(result));
    if (c.format == "json") {
        out << report.dump(2) << '\n';
    } else if (c.format == "csv") {
        out << "suite,r,n,checks,failures,status\n"
            << c.suite << ',' << c.r << ',' << config.n << ',' << outcome.checks << ',' << outcome.failure_count << ','
            << (outcome.passed() ? "pass" : "fail") << '\n';
    } else {
        out << "verify " << c.suite << " r=" << c.r << " n=" << config.n << ": "
            << (outcome.passed() ? "pass" : "FAIL") << " (" << outcome.checks << " checks, " << outcome.failure_count
            << " failures)\n";
        for (const auto& failure : outcome.failures) out << "  witness " << compact(failure) << '\n';
        if (outcome.details.contains("rendered")) {
            for (const auto& line : outcome.details["rendered"]) out << "  " << line.get<std::string>() << '\n';
        }
    }
    return outcome.passed() ? kPass : kVerificationFailed;
}

int cmd_idempotents(const RunConfig& c, std::ostream& out) {
    const int n = n_or(c, 3);
    check_group_size(c.r, n, limits_of(c));
    const auto table = eulerian_idempotent_table(c.r, n);
    if (c.format == "json") {
        out << to_json(table).dump(2) << '\n';
    } else if (c.format == "csv") {
        out << "i,des,coefficient\n";
        for (std::size_t i = 0; i < table.alpha.size(); ++i) {
            for (std::size_t d = 0; d < table.alpha[i].size(); ++d) {
                out << i << ',' << d << ',' << to_string(table.alpha[i][d]) << '\n';
            }
        }
    } else {
        for (std::size_t i = 0; i < table.alpha.size(); ++i) out << render_idempotent(table, i) << '\n';
    }
    return kPass;
}

int cmd_eulerian_poly(const RunConfig& c, std::ostream& out) {
    const int n = n_or(c, 2);
    const auto series = eulerian_polynomial(c.r, n, limits_of(c));
    if (c.format == "json") {
        out << to_json(series).dump() << '\n';
    } else if (c.format == "csv") {
        out << "des,count\n";
        for (std::size_t d = 0; d < series.coefficients().size(); ++d) out << d << ',' << series[d] << '\n';
    } else {
        std::vector<std::string> values;
        for (const auto& v : series.coefficients()) values.push_back(to_string(v));
        out << bracket_list(values) << '\n';
    }
    return kPass;
}

int cmd_order_poly(const RunConfig& c, std::ostream& out) {
    const auto js = range_or(c.j, "0..3");
    const auto limits = limits_of(c);
    std::string op;
    Json params;
    std::function<BigInt(int)> value;
    if (!c.poset_file.empty()) {
        std::ifstream in(c.poset_file);
        if (!in) throw std::invalid_argument("cannot read " + c.poset_file);
        const auto poset = poset_from_json(Json::parse(in));
        op = "ppartitions_bruteforce";
        params = {{"poset", to_json(poset)}};
        value = [poset, limits](int j) { return count_ppartitions_bruteforce(poset, j, limits); };
    } else {
        if (c.pi.empty()) throw std::invalid_argument("order-poly needs --pi or --poset");
        const auto pi = ColoredPermutation::parse(c.r, c.pi);
        op = c.floating ? "omega_floating_chain" : "omega_pi";
        params = {{"pi", to_string(pi)}, {"r", c.r}};
        value = [pi, floating = c.floating](int j) { return floating ? omega_floating_chain(pi, j) : omega_pi(pi, j); };
    }
    if (c.format == "json") {
        Json records = Json::array();
        for (int j : js) {
            Json p = params;
            p["j"] = j;
            records.push_back(count_record(op, std::move(p), value(j)));
        }
        out << records.dump(2) << '\n';
    } else if (c.format == "csv") {
        out << "j,count\n";
        for (int j : js) out << j << ',' << value(j) << '\n';
    } else {
        std::vector<std::string> values;
        for (int j : js) values.push_back(to_string(value(j)));
        out << bracket_list(values) << '\n';
    }
    return kPass;
}

std::filesystem::path cache_path(const RunConfig& c, int n) {
    return std::filesystem::path(c.cache) / ("structure_constants_r" + std::to_string(c.r) + "_n" + std::to_string(n) +
                                             "_" + c.partition + "_v" + COLOREUL_VERSION + ".json");
}

int cmd_structure_constants(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const int n = n_or(c, 2);
    const auto limits = limits_of(c);
    ClassPartition partition = c.partition == "mr"       ? mr_partition(c.r, n, limits)
                               : c.partition == "desset" ? descent_set_partition(c.r, n, limits)
                                                         : des_partition(c.r, n, limits);
    Json labels = Json::array();
    for (const auto& info : partition.classes()) labels.push_back(info.label);

    std::optional<StructureTensor> tensor;
    if (!c.cache.empty()) {
        const auto path = cache_path(c, n);
        if (std::ifstream in(path); in) {
            const auto doc = Json::parse(in);
            if (doc.value("r", -1) == c.r && doc.value("n", -1) == n && doc.value("partition", "") == c.partition &&
                doc.value("version", "") == COLOREUL_VERSION && doc.value("classes", Json()) == labels) {
                tensor = tensor_from_json(doc["tensor"]);
                err << "cache hit: " << path.string() << '\n';
            }
        }
    }
    if (!tensor) {
        auto report = verify_closure(partition, limits, c.jobs);
        if (!report.closed()) {
            const auto* failure = report.first_failure();
            err << "partition " << c.partition << " is not closed under multiplication";
            if (failure && failure->witness) err << ": witness " << compact(to_json(*failure->witness));
            err << '\n';
            return kVerificationFailed;
        }
        tensor = structure_constants(*report.closed_partition);
        if (!c.cache.empty()) {
            const auto path = cache_path(c, n);
            std::filesystem::create_directories(path.parent_path());
            Json doc{{"r", c.r},     {"n", n},           {"partition", c.partition}, {"version", COLOREUL_VERSION},
                     {"classes", labels}, {"tensor", tensor_to_json(*tensor)}};
            std::ofstream(path) << doc.dump() << '\n';
            err << "cache store: " << path.string() << '\n';
        }
    }

    if (c.format == "json") {
        Json doc{{"r", c.r}, {"n", n}, {"partition", c.partition}, {"classes", labels},
                 {"tensor", tensor_to_json(*tensor)}};
        out << doc.dump(2) << '\n';
    } else if (c.format == "csv") {
        out << "j,k,i,value\n";
        for (std::size_t j = 0; j < tensor->size(); ++j) {
            for (std::size_t k = 0; k < tensor->size(); ++k) {
                for (std::size_t i = 0; i < tensor->size(); ++i) {
                    out << j << ',' << k << ',' << i << ',' << (*tensor)[j][k][i] << '\n';
                }
            }
        }
    } else {
        for (std::size_t j = 0; j < tensor->size(); ++j) {
            for (std::size_t k = 0; k < tensor->size(); ++k) {
                std::vector<std::string> row;
                for (const auto& v : (*tensor)[j][k]) row.push_back(to_string(v));
                out << labels[j].get<std::string>() << " * " << labels[k].get<std::string>() << " = "
                    << bracket_list(row) << '\n';
            }
        }
    }
    return kPass;
}

void add_common(CLI::App* app, RunConfig& c) {
    app->add_option("--r", c.r, "number of colors")->envname("COLOREUL_R")->check(CLI::Range(1, 64));
    app->add_option("--n", c.n, "permutation length")->envname("COLOREUL_N")->check(CLI::Range(0, 62));
    app->add_option("--j", c.j, "j values, e.g. 0..3 or 0,2")->envname("COLOREUL_J");
    app->add_option("--k", c.k, "k values, e.g. 0..3")->envname("COLOREUL_K");
    app->add_option("--seed", c.seed, "random seed")->envname("COLOREUL_SEED");
    app->add_option("--cases", c.cases, "random cases")->envname("COLOREUL_CASES")->check(CLI::PositiveNumber);
    app->add_option("--format", c.format, "json, csv or text")
        ->envname("COLOREUL_FORMAT")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app->add_option("--cache", c.cache, "structure constant cache directory")->envname("COLOREUL_CACHE");
    app->add_option("--jobs", c.jobs, "worker threads")->envname("COLOREUL_JOBS")->check(CLI::Range(1u, 1024u));
    app->add_option("--max-group-size", c.max_group_size, "largest group to enumerate")
        ->envname("COLOREUL_MAX_GROUP_SIZE")
        ->check(CLI::PositiveNumber);
    app->add_option("--out", c.out, "write the result to this file")->envname("COLOREUL_OUT");
    app->add_flag("--no-timing", c.no_timing, "report duration_ms as 0")->envname("COLOREUL_NO_TIMING");
}

}  // namespace

std::vector<int> parse_range(const std::string& text) {
    auto to_int = [&](const std::string& part) {
        std::size_t used = 0;
        int value = -1;
        try {
            value = std::stoi(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != part.size() || value < 0) throw std::invalid_argument("bad range \"" + text + "\"");
        return value;
    };
    std::vector<int> out;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = to_int(text.substr(0, dots));
        const int hi = to_int(text.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty range \"" + text + "\"");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, ',');) out.push_back(to_int(part));
    if (out.empty()) throw std::invalid_argument("empty range");
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Colored permutation statistics, P-partitions and Eulerian descent algebras", "coloreul"};
    app.set_version_flag("--version", COLOREUL_VERSION);
    app.require_subcommand(1);
    RunConfig c;

    auto* enumerate = app.add_subcommand("enumerate", "list G_{r,n} with descent statistics");
    add_common(enumerate, c);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, c);
    verify->add_option("suite", c.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));

    auto* idempotents = app.add_subcommand("idempotents", "colored Eulerian idempotents by descent class");
    add_common(idempotents, c);

    auto* eulerian = app.add_subcommand("eulerian-poly", "distribution of des over G_{r,n}");
    add_common(eulerian, c);

    auto* order = app.add_subcommand("order-poly", "order polynomial values over a grid of j");
    add_common(order, c);
    order->add_option("--pi", c.pi, "permutation, e.g. \"2_1 1_1\"")->envname("COLOREUL_PI");
    order->add_option("--poset", c.poset_file, "poset JSON file (brute force)")->envname("COLOREUL_POSET");
    order->add_flag("--floating", c.floating, "use the floating chain P(pi)")->envname("COLOREUL_FLOATING");

    auto* constants = app.add_subcommand("structure-constants", "multiplication table of a closed class partition");
    add_common(constants, c);
    constants->add_option("--partition", c.partition, "des, mr or desset")
        ->envname("COLOREUL_PARTITION")
        ->check(CLI::IsMember({"des", "mr", "desset"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    std::ostringstream buffer;
    std::ostream& sink = c.out.empty() ? out : buffer;
    int code = kPass;
    try {
        if (*enumerate) code = cmd_enumerate(c, sink);
        else if (*verify) code = cmd_verify(c, sink);
        else if (*idempotents) code = cmd_idempotents(c, sink);
        else if (*eulerian) code = cmd_eulerian_poly(c, sink);
        else if (*order) code = cmd_order_poly(c, sink);
        else if (*constants) code = cmd_structure_constants(c, sink, err);
    } catch (const CapExceeded& e) {
        err << "resource cap: " << e.what() << '\n';
        return kCap;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (!c.out.empty()) {
        std::ofstream file(c.out);
        if (!file) {
            err << "error: cannot write " << c.out << '\n';
            return kUsage;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace coloreul::cli
