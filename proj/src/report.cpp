#include "codeweights/report.hpp"

#include <sstream>

#include "codeweights/version.hpp"

namespace codeweights {

Json json_number(const BigInt& v) {
    static const BigInt kLimit = BigInt(1) << 53;
    if (v > -kLimit && v < kLimit) return static_cast<std::int64_t>(v);
    return v.str();
}

std::string modulus_string(const FieldCtx& ctx) {
    std::ostringstream os;
    for (std::size_t j = 0; j < ctx.modulus().size(); ++j) {
        if (j > 0) os << ",";
        os << ctx.modulus()[j];
    }
    return os.str();
}

CodeSummary summarize(const FieldCtx& ctx, int class_index, const WeightOptions& opts) {
    const DefiningSet set = defining_set(ctx, class_index);
    CodeSummary s;
    s.wd = weight_distribution(ctx, set, opts);
    if (s.wd.k >= 1) {
        s.griesmer_verdict = griesmer(s.wd);
        s.ratio = wt_ratio(s.wd);
    }
    return s;
}

namespace {

Json base_json(const FieldCtx& ctx, int class_index) {
    Json j;
    j["tool_version"] = kVersion;
    j["schema_version"] = kSchemaVersion;
    j["p"] = ctx.p();
    j["e"] = ctx.e();
    j["i"] = class_index;
    j["modulus"] = ctx.modulus();
    return j;
}

Json distribution_json(const WeightDistribution& wd) {
    Json rows = Json::array();
    for (const auto& [w, c] : wd.counts) rows.push_back({json_number(w), json_number(c)});
    return rows;
}

Json griesmer_json(const GriesmerVerdict& g) {
    return Json{{"bound", json_number(g.bound_n)},
                {"passes", g.passes},
                {"next_passes", g.next_passes},
                {"classification", to_string(g.classification)}};
}

Json ratio_json(const WtRatio& r) {
    return Json{{"wt_min", json_number(r.wt_min)},
                {"wt_max", json_number(r.wt_max)},
                {"exceeds", r.exceeds}};
}

}  // namespace

Json construct_json(const FieldCtx& ctx, int class_index, const CodeSummary& s) {
    Json j = base_json(ctx, class_index);
    j["n"] = json_number(s.wd.n);
    j["k"] = s.wd.k;
    j["d"] = json_number(s.wd.d);
    j["enumerator"] = distribution_json(s.wd);
    j["griesmer"] = griesmer_json(s.griesmer_verdict);
    j["wt_ratio"] = ratio_json(s.ratio);
    return j;
}

std::string construct_text(const FieldCtx& ctx, int class_index, const CodeSummary& s) {
    std::ostringstream os;
    os << "[" << s.wd.n << "," << s.wd.k << "," << s.wd.d << "] over F_" << ctx.p()
       << " (q=" << ctx.q() << ", modulus " << modulus_string(ctx) << ", i=" << class_index
       << ")\n";
    os << "enumerator: " << enumerator_string(s.wd) << "\n";
    os << "griesmer: bound " << s.griesmer_verdict.bound_n
       << (s.griesmer_verdict.passes ? ", passes" : ", VIOLATED") << ", "
       << to_string(s.griesmer_verdict.classification) << "\n";
    os << "wt-ratio: " << s.ratio.wt_min << "/" << s.ratio.wt_max << " > " << ctx.p() - 1
       << "/" << ctx.p() << ": " << (s.ratio.exceeds ? "yes" : "no") << "\n";
    return os.str();
}

std::string construct_csv(const CodeSummary& s) { return to_csv(s.wd); }

Json verify_json(const FieldCtx& ctx, const VerifyReport& rep) {
    Json j = base_json(ctx, rep.key.i);
    j["theorem"] = rep.predicted.theorem;
    j["table"] = rep.predicted.table;
    j["legendre_e"] = rep.key.legendre_e;
    j["legendre_neg_e"] = rep.key.legendre_neg_e;
    j["eta_minus1"] = rep.key.eta_minus1;
    j["claimed_n"] = json_number(rep.predicted.claimed_n);
    j["claimed_k"] = rep.predicted.claimed_k;
    j["n"] = json_number(rep.enumerated.n);
    j["k"] = rep.enumerated.k;
    j["d"] = json_number(rep.enumerated.d);
    j["parameter_match"] = rep.parameter_match;
    j["enumerator"] = distribution_json(rep.enumerated);
    Json predicted = Json::array();
    for (const auto& row : rep.predicted.rows) {
        Json r;
        r["weight_expr"] = row.weight_expr;
        r["mult_expr"] = row.mult_expr;
        if (row.valid) {
            r["weight"] = json_number(row.weight);
            r["multiplicity"] = json_number(row.multiplicity);
        }
        if (!row.anomaly.empty()) r["anomaly"] = row.anomaly;
        predicted.push_back(std::move(r));
    }
    j["predicted_rows"] = predicted;
    const auto diff_rows = [](const std::vector<RowDiff>& rows) {
        Json arr = Json::array();
        for (const auto& d : rows)
            arr.push_back({{"weight", json_number(d.weight)},
                           {"predicted", json_number(d.predicted)},
                           {"enumerated", json_number(d.enumerated)}});
        return arr;
    };
    j["rows_mismatched"] = diff_rows(rep.rows_mismatched);
    j["rows_matched"] = diff_rows(rep.rows_matched);
    j["anomalies"] = rep.predicted.anomalies;
    j["verdict"] = to_string(rep.verdict);
    j["griesmer"] = griesmer_json(rep.griesmer_verdict);
    j["wt_ratio"] = ratio_json(rep.ratio);
    return j;
}

std::string verify_text(const FieldCtx& ctx, const VerifyReport& rep) {
    std::ostringstream os;
    os << "case p=" << ctx.p() << " e=" << ctx.e() << " i=" << rep.key.i << " (modulus "
       << modulus_string(ctx) << ")\n";
    os << "dispatch: theorem " << rep.predicted.theorem << ", table " << rep.predicted.table
       << "  [(e/p)=" << rep.key.legendre_e << ", (-e/p)=" << rep.key.legendre_neg_e
       << ", (-1/p)=" << rep.key.eta_minus1 << "]\n";
    os << "claimed [n,k]=[" << rep.predicted.claimed_n << "," << rep.predicted.claimed_k
       << "]  enumerated [n,k,d]=[" << rep.enumerated.n << "," << rep.enumerated.k << ","
       << rep.enumerated.d << "]  parameter_match="
       << (rep.parameter_match ? "yes" : "no") << "\n";
    os << "enumerator: " << enumerator_string(rep.enumerated) << "\n";
    for (const auto& d : rep.rows_mismatched)
        os << "  diff weight " << d.weight << ": predicted " << d.predicted
           << ", enumerated " << d.enumerated << "\n";
    for (const auto& a : rep.predicted.anomalies) os << "  anomaly: " << a << "\n";
    os << "verdict: " << to_string(rep.verdict) << "\n";
    return os.str();
}

std::string verify_csv(const VerifyReport& rep) {
    std::ostringstream os;
    os << "weight,predicted,enumerated,status\n";
    auto emit = [&](const RowDiff& d, const char* status) {
        os << d.weight << "," << d.predicted << "," << d.enumerated << "," << status << "\n";
    };
    for (const auto& d : rep.rows_matched) emit(d, "match");
    for (const auto& d : rep.rows_mismatched) emit(d, "mismatch");
    return os.str();
}

Json field_info_json(const FieldCtx& ctx) {
    Json j;
    j["tool_version"] = kVersion;
    j["schema_version"] = kSchemaVersion;
    j["p"] = ctx.p();
    j["e"] = ctx.e();
    j["q"] = json_number(ctx.q());
    j["modulus"] = ctx.modulus();
    return j;
}

std::string field_info_text(const FieldCtx& ctx) {
    std::ostringstream os;
    os << "F_" << ctx.p() << "^" << ctx.e() << " with q=" << ctx.q() << "\n";
    os << "modulus (constant term first): " << modulus_string(ctx) << "\n";
    return os.str();
}

}  // namespace codeweights
