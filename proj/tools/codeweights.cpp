#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "codeweights/report.hpp"
#include "codeweights/version.hpp"

namespace {

using namespace codeweights;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

struct CommonOpts {
    std::uint32_t p = 3;
    std::uint32_t e = 2;
    int i = 0;
    std::string format = "text";
    std::uint64_t budget = 1'000'000'000;
    int jobs = 0;
    std::string modulus;
};

std::uint64_t default_budget() {
    if (const char* env = std::getenv("CODEWEIGHTS_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed CODEWEIGHTS_BUDGET\n";
    }
    return 1'000'000'000;
}

std::vector<std::uint32_t> parse_modulus(const std::string& text) {
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(std::stoul(item));
    return coeffs;
}

FieldCtx make_field(const CommonOpts& o) {
    if (o.modulus.empty()) return FieldCtx::make(o.p, o.e);
    return FieldCtx::with_modulus(o.p, o.e, parse_modulus(o.modulus));
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_class) {
    cmd->add_option("-p,--prime", o.p, "odd prime p")->required();
    cmd->add_option("-e,--degree", o.e, "extension degree e")->required();
    if (with_class) cmd->add_option("-i,--class", o.i, "cyclotomic class index (0 or 1)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--budget", o.budget, "work budget in scalar operations");
    cmd->add_option("--jobs", o.jobs, "worker threads (0 = hardware default)");
    cmd->add_option("--modulus", o.modulus,
                    "modulus coefficients, constant term first, e.g. \"1,0,2,1\"");
}

void apply_jobs(int jobs) {
    if (jobs > 0) omp_set_num_threads(jobs);
}

int run_construct(const CommonOpts& o) {
    const FieldCtx ctx = make_field(o);
    const CodeSummary s = summarize(ctx, o.i, WeightOptions{o.budget, true});
    if (o.format == "json")
        std::cout << construct_json(ctx, o.i, s).dump(2) << "\n";
    else if (o.format == "csv")
        std::cout << construct_csv(s);
    else
        std::cout << construct_text(ctx, o.i, s);
    return kExitOk;
}

int run_verify(const CommonOpts& o) {
    const FieldCtx ctx = make_field(o);
    const VerifyReport rep = verify(ctx, o.i, WeightOptions{o.budget, true});
    if (o.format == "json")
        std::cout << verify_json(ctx, rep).dump(2) << "\n";
    else if (o.format == "csv")
        std::cout << verify_csv(rep);
    else
        std::cout << verify_text(ctx, rep);
    return rep.verdict == Verdict::kMatch ? kExitOk : kExitMismatch;
}

struct SweepCase {
    std::uint32_t p, e;
    int i;
    std::string status;  // MATCH / MISMATCH / FORMULA_ANOMALY / SKIPPED / ERROR
    std::string detail;
    std::vector<std::uint32_t> modulus;
    double wall_ms = 0;
    Json payload;
};

int run_sweep(const std::vector<std::uint32_t>& primes,
              const std::vector<std::uint32_t>& degrees, std::vector<int> classes,
              const CommonOpts& o) {
    std::vector<SweepCase> cases;
    for (auto p : primes)
        for (auto e : degrees)
            for (auto i : classes) cases.push_back({p, e, i, "", "", {}, 0, {}});

    const std::int64_t total = static_cast<std::int64_t>(cases.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        SweepCase& c = cases[static_cast<std::size_t>(idx)];
        const auto start = std::chrono::steady_clock::now();
        try {
            const FieldCtx ctx = FieldCtx::make(c.p, c.e);
            c.modulus = ctx.modulus();
            const DefiningSet set = defining_set(ctx, c.i);
            const std::uint64_t n = set.elements.size();
            if (n > 0 && ctx.q() > o.budget / n) {
                c.status = "SKIPPED";
                c.detail = "over work budget";
            } else {
                const VerifyReport rep = verify(ctx, c.i, WeightOptions{o.budget, true});
                c.status = to_string(rep.verdict);
                c.payload = verify_json(ctx, rep);
            }
        } catch (const std::exception& ex) {
            c.status = "ERROR";
            c.detail = ex.what();
        }
        c.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    }

    std::size_t match = 0, mismatch = 0, skipped = 0, errors = 0;
    for (const auto& c : cases) {
        if (c.status == "MATCH") ++match;
        else if (c.status == "SKIPPED") ++skipped;
        else if (c.status == "ERROR") ++errors;
        else ++mismatch;
    }

    if (o.format == "json") {
        Json out;
        out["tool_version"] = kVersion;
        out["schema_version"] = kSchemaVersion;
        Json arr = Json::array();
        for (const auto& c : cases) {
            Json rec{{"p", c.p}, {"e", c.e}, {"i", c.i}, {"status", c.status},
                     {"wall_ms", c.wall_ms}};
            if (!c.modulus.empty()) rec["modulus"] = c.modulus;
            if (!c.detail.empty()) rec["detail"] = c.detail;
            if (!c.payload.is_null()) rec["report"] = c.payload;
            arr.push_back(std::move(rec));
        }
        out["cases"] = arr;
        out["summary"] = Json{{"match", match},
                              {"mismatch", mismatch},
                              {"skipped", skipped},
                              {"errors", errors}};
        std::cout << out.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "p,e,i,status,n,k,d,wall_ms\n";
        for (const auto& c : cases) {
            std::cout << c.p << "," << c.e << "," << c.i << "," << c.status << ",";
            if (c.payload.is_object())
                std::cout << c.payload["n"] << "," << c.payload["k"] << ","
                          << c.payload["d"];
            else
                std::cout << ",,";
            std::cout << "," << c.wall_ms << "\n";
        }
    } else {
        for (const auto& c : cases) {
            std::cout << "p=" << c.p << " e=" << c.e << " i=" << c.i << ": " << c.status;
            if (c.payload.is_object())
                std::cout << "  [n,k,d]=[" << c.payload["n"] << "," << c.payload["k"]
                          << "," << c.payload["d"] << "]";
            if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
            std::cout << "\n";
        }
        std::cout << "summary: " << match << " MATCH, " << mismatch << " MISMATCH, "
                  << skipped << " SKIPPED, " << errors << " ERROR\n";
    }
    if (mismatch > 0) return kExitMismatch;
    if (errors > 0) return kExitError;
    return kExitOk;
}

int run_field_info(const CommonOpts& o) {
    const FieldCtx ctx = make_field(o);
    if (o.format == "json")
        std::cout << field_info_json(ctx).dump(2) << "\n";
    else
        std::cout << field_info_text(ctx);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace-defined linear codes: exact weight distributions and "
                 "closed-form verification"};
    app.set_version_flag("--version", codeweights::kVersion);
    app.require_subcommand(1);

    CommonOpts construct_opts, verify_opts, info_opts, sweep_opts;
    construct_opts.budget = verify_opts.budget = sweep_opts.budget = default_budget();

    auto* c_construct =
        app.add_subcommand("construct", "build the code and report [n,k,d] and enumerator");
    add_common(c_construct, construct_opts, true);

    auto* c_verify =
        app.add_subcommand("verify", "diff the closed-form table against enumeration");
    add_common(c_verify, verify_opts, true);

    std::vector<std::uint32_t> primes{3, 5, 7};
    std::vector<std::uint32_t> degrees{2, 3, 4, 5};
    std::vector<int> classes{0, 1};
    auto* c_sweep = app.add_subcommand("sweep", "verify a (p, e, i) grid");
    c_sweep->add_option("--primes", primes, "primes to sweep");
    c_sweep->add_option("--degrees", degrees, "degrees to sweep");
    c_sweep->add_option("--classes", classes, "class indices to sweep");
    c_sweep->add_option("--format", sweep_opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    c_sweep->add_option("--budget", sweep_opts.budget, "work budget per case");
    c_sweep->add_option("--jobs", sweep_opts.jobs, "worker threads");

    auto* c_info = app.add_subcommand("field-info", "print the field and its modulus");
    add_common(c_info, info_opts, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_construct->parsed()) {
            apply_jobs(construct_opts.jobs);
            return run_construct(construct_opts);
        }
        if (c_verify->parsed()) {
            apply_jobs(verify_opts.jobs);
            return run_verify(verify_opts);
        }
        if (c_sweep->parsed()) {
            apply_jobs(sweep_opts.jobs);
            return run_sweep(primes, degrees, classes, sweep_opts);
        }
        if (c_info->parsed()) return run_field_info(info_opts);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
