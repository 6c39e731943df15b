#pragma once

#include <json.hpp>
#include <string>

#include "codeweights/codes.hpp"
#include "codeweights/gf.hpp"
#include "codeweights/theory.hpp"

namespace codeweights {

using Json = nlohmann::json;

// Values above 2^53 are emitted as decimal strings so JSON consumers that
// parse into doubles cannot lose precision.
Json json_number(const BigInt& v);
inline Json json_number(std::uint64_t v) { return json_number(BigInt(v)); }

std::string modulus_string(const FieldCtx& ctx);

/// Everything cmd_construct reports about one code.
struct CodeSummary {
    WeightDistribution wd;
    GriesmerVerdict griesmer_verdict;
    WtRatio ratio;
};

CodeSummary summarize(const FieldCtx& ctx, int class_index, const WeightOptions& opts = {});

Json construct_json(const FieldCtx& ctx, int class_index, const CodeSummary& s);
std::string construct_text(const FieldCtx& ctx, int class_index, const CodeSummary& s);
std::string construct_csv(const CodeSummary& s);

Json verify_json(const FieldCtx& ctx, const VerifyReport& rep);
std::string verify_text(const FieldCtx& ctx, const VerifyReport& rep);
std::string verify_csv(const VerifyReport& rep);

Json field_info_json(const FieldCtx& ctx);
std::string field_info_text(const FieldCtx& ctx);

}  // namespace codeweights
