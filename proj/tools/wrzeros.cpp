// wrzeros: exact zero counting and formula verification for Wronskians of
// orthogonal polynomials. See README.md for the full interface.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrz/report.hpp"
#include "wrz/sweep.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitDataError = 3;
constexpr int kExitUsage = 64;

struct FamilyFlags {
    std::string family = "hermite";
    std::string alpha;
    std::string beta;
    std::string moments_path;
    std::string interval;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& flags) {
    cmd->add_option("--family", flags.family, "hermite | laguerre | jacobi | moments")
        ->default_str("hermite");
    cmd->add_option("--alpha", flags.alpha, "Laguerre/Jacobi parameter, rational 'p/q'");
    cmd->add_option("--beta", flags.beta, "Jacobi parameter, rational 'p/q'");
    cmd->add_option("--moments", flags.moments_path,
                    "JSON file: array of rationals as strings, m_k = L[x^k]");
    cmd->add_option("--interval", flags.interval,
                    "support 'lo,hi' for a moments family; endpoints may be -inf/inf");
}

std::vector<wrz::Rational> load_moments_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw wrz::parameter_error("cannot open moments file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw wrz::parameter_error("bad JSON in '" + path + "': " + e.what());
    }
    if (!j.is_array()) throw wrz::parameter_error("moments file must hold a JSON array");
    std::vector<wrz::Rational> moments;
    for (const auto& item : j) {
        if (item.is_string())
            moments.push_back(wrz::rat_from_string(item.get<std::string>()));
        else if (item.is_number_integer())
            moments.push_back(wrz::Rational(item.get<long>()));
        else
            throw wrz::parameter_error("moments must be strings like \"1/3\"");
    }
    return moments;
}

wrz::Interval parse_interval(const std::string& text) {
    size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw wrz::parameter_error("interval must look like 'lo,hi'");
    std::string lo = text.substr(0, comma);
    std::string hi = text.substr(comma + 1);
    auto endpoint = [](const std::string& s) -> std::optional<wrz::Rational> {
        std::string t;
        for (char c : s)
            if (c != ' ' && c != '\t') t += c;
        if (t == "-inf" || t == "inf" || t == "+inf") return std::nullopt;
        return wrz::rat_from_string(t);
    };
    auto l = endpoint(lo);
    auto h = endpoint(hi);
    if (l && h) return wrz::Interval::open(*l, *h);
    if (l) return wrz::Interval::greater_than(*l);
    if (h) return wrz::Interval::less_than(*h);
    return wrz::Interval::whole();
}

wrz::FamilySpec build_family(const FamilyFlags& flags) {
    if (flags.family == "hermite") return wrz::FamilySpec::hermite();
    if (flags.family == "laguerre") {
        if (flags.alpha.empty())
            throw wrz::parameter_error("laguerre needs --alpha");
        return wrz::FamilySpec::laguerre(wrz::rat_from_string(flags.alpha));
    }
    if (flags.family == "jacobi") {
        if (flags.alpha.empty() || flags.beta.empty())
            throw wrz::parameter_error("jacobi needs --alpha and --beta");
        return wrz::FamilySpec::jacobi(wrz::rat_from_string(flags.alpha),
                                       wrz::rat_from_string(flags.beta));
    }
    if (flags.family == "moments") {
        if (flags.moments_path.empty() || flags.interval.empty())
            throw wrz::parameter_error("moments family needs --moments and --interval");
        return wrz::FamilySpec::from_moments(load_moments_file(flags.moments_path),
                                             parse_interval(flags.interval));
    }
    throw wrz::parameter_error("unknown family '" + flags.family + "'");
}

int default_jobs() {
    if (const char* env = std::getenv("WRZEROS_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

int report_outcome(const wrz::VerificationReport& rep) {
    if (rep.degenerate) return kExitDegenerate;
    return rep.pass ? kExitPass : kExitMismatch;
}

int run_verify(const FamilyFlags& flags, const std::string& partition_text, int probes,
               bool as_json) {
    wrz::FamilySpec fam = build_family(flags);
    wrz::Partition lam = wrz::parse_partition(partition_text);
    wrz::VerificationReport rep = wrz::verify_partition(fam, lam, probes);
    if (as_json)
        std::cout << wrz::report_to_json(rep).dump(2) << "\n";
    else
        std::cout << wrz::render_report_text(rep);
    return report_outcome(rep);
}

struct SweepFlags {
    FamilyFlags family;
    int max_weight = -1;
    int max_length = -1;
    int probes = 2;
    int jobs = 0;
    std::string output;
    std::string format = "csv";
    std::string config_path;
};

// --config supplies defaults with the same keys as the flags; anything
// given on the command line wins.
void merge_config(const CLI::App* cmd, SweepFlags& fl) {
    if (fl.config_path.empty()) return;
    std::ifstream in(fl.config_path);
    if (!in) throw wrz::parameter_error("cannot open config '" + fl.config_path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw wrz::parameter_error("bad JSON config: " + std::string(e.what()));
    }
    auto absent = [&](const std::string& flag) { return cmd->count(flag) == 0; };
    if (j.contains("family") && absent("--family")) fl.family.family = j["family"];
    if (j.contains("alpha") && absent("--alpha")) fl.family.alpha = j["alpha"];
    if (j.contains("beta") && absent("--beta")) fl.family.beta = j["beta"];
    if (j.contains("moments") && absent("--moments")) fl.family.moments_path = j["moments"];
    if (j.contains("interval") && absent("--interval")) fl.family.interval = j["interval"];
    if (j.contains("max_weight") && absent("--max-weight")) fl.max_weight = j["max_weight"];
    if (j.contains("max_length") && absent("--max-length")) fl.max_length = j["max_length"];
    if (j.contains("probes") && absent("--probes")) fl.probes = j["probes"];
    if (j.contains("jobs") && absent("--jobs")) fl.jobs = j["jobs"];
    if (j.contains("output") && absent("--output")) fl.output = j["output"];
    if (j.contains("format") && absent("--format")) fl.format = j["format"];
}

int run_sweep_cmd(const CLI::App* cmd, SweepFlags& fl) {
    merge_config(cmd, fl);
    if (fl.max_weight < 1 || fl.max_length < 1)
        throw wrz::parameter_error("sweep needs --max-weight >= 1 and --max-length >= 1");
    if (fl.format != "csv" && fl.format != "json")
        throw wrz::parameter_error("--format must be csv or json");
    if (cmd->count("--jobs") > 0 && fl.jobs < 1)
        throw wrz::parameter_error("--jobs must be >= 1");

    wrz::SweepConfig config{build_family(fl.family), fl.max_weight, fl.max_length,
                            fl.probes, fl.jobs > 0 ? fl.jobs : default_jobs()};
    std::vector<wrz::VerificationReport> reports;
    wrz::SweepSummary summary = wrz::run_sweep(config, reports);

    std::string payload;
    if (fl.format == "csv") {
        payload = wrz::csv_header() + "\n";
        for (const auto& rep : reports) payload += wrz::report_to_csv_row(rep) + "\n";
    } else {
        nlohmann::json j;
        j["family"] = config.family.name();
        j["max_weight"] = config.max_weight;
        j["max_length"] = config.max_length;
        j["reports"] = nlohmann::json::array();
        for (const auto& rep : reports) j["reports"].push_back(wrz::report_to_json(rep));
        j["summary"] = {{"total", summary.total},
                        {"passed", summary.passed},
                        {"degenerate_skipped", summary.degenerate_skipped},
                        {"failed", summary.failed}};
        payload = j.dump(2) + "\n";
    }

    if (fl.output.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(fl.output);
        if (!out) throw wrz::parameter_error("cannot write '" + fl.output + "'");
        out << payload;
    }
    std::cout << "summary: total=" << summary.total << " passed=" << summary.passed
              << " degenerate=" << summary.degenerate_skipped
              << " failed=" << summary.failed << "\n";
    return summary.failed == 0 ? kExitPass : kExitMismatch;
}

int run_felder(const std::string& mu_text) {
    std::vector<int> mu = wrz::parse_int_list(mu_text);
    wrz::FelderCounts got = wrz::felder_counts(mu);
    int odd = 0;
    for (int m : mu)
        if (m % 2 == 1) ++odd;
    int expect_imag = 2 * odd;
    std::cout << "mu=(" << mu_text << ")  real " << got.real_roots << " = expected 0"
              << (got.real_roots == 0 ? "" : "  <-- MISMATCH") << "\n";
    std::cout << "        imaginary " << got.imaginary_roots << " = expected "
              << expect_imag << (got.imaginary_roots == expect_imag ? "" : "  <-- MISMATCH")
              << "\n";
    return (got.real_roots == 0 && got.imaginary_roots == expect_imag) ? kExitPass
                                                                       : kExitMismatch;
}

int run_duality(const std::string& partition_text) {
    wrz::Partition lam = wrz::parse_partition(partition_text);
    wrz::DualityResult res = wrz::duality_check(lam);
    if (res.holds)
        std::cout << "duality holds for (" << wrz::to_string(lam) << "), constant "
                  << wrz::rat_to_string(res.constant) << "\n";
    else
        std::cout << "duality FAILED for (" << wrz::to_string(lam) << ")\n";
    return res.holds ? kExitPass : kExitMismatch;
}

int run_karlin(const FamilyFlags& flags, int n, int ell) {
    wrz::FamilySpec fam = build_family(flags);
    wrz::KarlinResult res = wrz::karlin_szego_check(fam, n, ell);
    bool ok;
    if (ell % 2 == 0) {
        ok = res.count == 0;
        std::cout << fam.name() << " W(" << n << "," << ell << "): " << res.count
                  << " roots, expected 0 (even blocks are sign-definite)\n";
    } else {
        bool inter = res.interlaces_with_next.value_or(false);
        ok = res.count == n && inter;
        std::cout << fam.name() << " W(" << n << "," << ell << "): " << res.count
                  << " roots, expected " << n << "; interlaces with W(" << n + 1 << ","
                  << ell << "): " << (inter ? "true" : "false") << "\n";
    }
    return ok ? kExitPass : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact zero counts for Wronskians of orthogonal polynomials"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "verify one partition against the predictors");
    FamilyFlags verify_family;
    std::string verify_partition_text;
    int verify_probes = 2;
    bool verify_json = false;
    add_family_flags(verify, verify_family);
    verify->add_option("--partition", verify_partition_text,
                       "nondecreasing parts '1,3' or multi-index 'k=1,4'")
        ->required();
    verify->add_option("--probes", verify_probes, "degeneracy probe count (default 2)");
    verify->add_flag("--json", verify_json, "emit the report as JSON");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "verify every partition up to the bounds");
    SweepFlags sweep_flags;
    add_family_flags(sweep, sweep_flags.family);
    sweep->add_option("--max-weight", sweep_flags.max_weight, "bound on |lambda|");
    sweep->add_option("--max-length", sweep_flags.max_length, "bound on the length of lambda");
    sweep->add_option("--probes", sweep_flags.probes, "degeneracy probe count (default 2)");
    sweep->add_option("--jobs", sweep_flags.jobs,
                      "worker count (default: WRZEROS_JOBS or 1)");
    sweep->add_option("--output", sweep_flags.output, "write rows to this path");
    sweep->add_option("--format", sweep_flags.format, "csv | json (default csv)");
    sweep->add_option("--config", sweep_flags.config_path,
                      "JSON config supplying any of the flags above");

    // felder
    auto* felder = app.add_subcommand("felder", "doubled-partition real/imaginary root counts");
    std::string mu_text;
    felder->add_option("--mu", mu_text, "strictly increasing positive list, e.g. '1,3'")
        ->required();

    // duality
    auto* duality = app.add_subcommand("duality", "Hermite conjugate-partition duality");
    std::string duality_partition;
    duality->add_option("--partition", duality_partition, "partition, e.g. '1,1'")->required();

    // karlin
    auto* karlin = app.add_subcommand("karlin", "consecutive-sequence counts and interlacing");
    FamilyFlags karlin_family;
    int karlin_n = 0;
    int karlin_ell = 2;
    add_family_flags(karlin, karlin_family);
    karlin->add_option("--n", karlin_n, "starting degree")->required();
    karlin->add_option("--ell", karlin_ell, "sequence length")->required();

    // moments
    auto* moments = app.add_subcommand("moments", "verify a partition for a moment family");
    std::string moments_file;
    std::string moments_interval;
    std::string moments_partition;
    bool moments_json = false;
    int moments_probes = 2;
    moments->add_option("--file", moments_file, "JSON array of rationals as strings")
        ->required();
    moments->add_option("--interval", moments_interval, "support 'lo,hi'")->required();
    moments->add_option("--partition", moments_partition, "partition or 'k=...' form")
        ->required();
    moments->add_option("--probes", moments_probes, "degeneracy probe count (default 2)");
    moments->add_flag("--json", moments_json, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed())
            return run_verify(verify_family, verify_partition_text, verify_probes, verify_json);
        if (sweep->parsed()) return run_sweep_cmd(sweep, sweep_flags);
        if (felder->parsed()) return run_felder(mu_text);
        if (duality->parsed()) return run_duality(duality_partition);
        if (karlin->parsed()) return run_karlin(karlin_family, karlin_n, karlin_ell);
        if (moments->parsed()) {
            FamilyFlags flags;
            flags.family = "moments";
            flags.moments_path = moments_file;
            flags.interval = moments_interval;
            return run_verify(flags, moments_partition, moments_probes, moments_json);
        }
    } catch (const wrz::moments_error& e) {
        std::cerr << "error: " << e.what() << " (Hankel order " << e.failing_order << ")\n";
        return kExitDataError;
    } catch (const wrz::parameter_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const wrz::not_increasing_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const wrz::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
