#include "codeweights/codes.hpp"

#include <sstream>

#include "codeweights/kernels.hpp"

namespace codeweights {

DefiningSet defining_set(const FieldCtx& ctx, int class_index) {
    if (ctx.q() > kernels::kBruteForceLimit)
        throw FieldTooLargeError("defining set requires full field enumeration");
    if (class_index != 0 && class_index != 1)
        throw OutOfScopeError("class index must be 0 or 1");
    DefiningSet set{class_index, {}};
    for (std::uint64_t idx = 0; idx < ctx.q(); ++idx) {
        const FFElem x = ctx.element(idx);
        const FFElem w = ctx.sub(ctx.pow(x, ctx.p() + 1), x);
        const PrimeElem t = ctx.trace(w);
        if (t.value == 0) continue;
        if (cyclotomic_class(t, ctx.p()) == class_index) set.elements.push_back(x);
    }
    return set;
}

std::vector<std::uint32_t> codeword(const FieldCtx& ctx, const FFElem& a,
                                    const DefiningSet& set) {
    std::vector<std::uint32_t> word;
    word.reserve(set.elements.size());
    for (const FFElem& x : set.elements) word.push_back(ctx.trace(ctx.mul(a, x)).value);
    return word;
}

WeightDistribution weight_distribution(const FieldCtx& ctx, const DefiningSet& set,
                                       const WeightOptions& opts) {
    const std::uint64_t n = set.elements.size();
    if (n > 0 && ctx.q() > opts.work_budget / n)
        throw WorkBudgetExceededError("q * |D| exceeds the work budget");
    const auto raw = opts.parallel ? kernels::weight_histogram_buckets_parallel(ctx, set)
                                   : kernels::weight_histogram_buckets_serial(ctx, set);
    // raw counts every a in F_q; each codeword is hit once per element of the
    // kernel of a -> c(a), whose size raw[0] is a power of p.
    const std::uint64_t z = raw[0];
    std::uint32_t m = 0;
    std::uint64_t zz = z;
    while (zz % ctx.p() == 0) {
        zz /= ctx.p();
        ++m;
    }
    if (zz != 1) throw Error("weight-0 input count is not a power of p");
    WeightDistribution wd;
    wd.n = n;
    wd.k = ctx.e() - m;
    wd.p = ctx.p();
    for (std::uint64_t w = 0; w < raw.size(); ++w) {
        if (raw[w] == 0) continue;
        if (raw[w] % z != 0) throw Error("weight multiplicity not divisible by kernel size");
        wd.counts[w] = raw[w] / z;
        if (w > 0 && wd.d == 0) wd.d = w;
    }
    return wd;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> enumerator_polynomial(
    const WeightDistribution& wd) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
    rows.reserve(wd.counts.size());
    for (const auto& [w, c] : wd.counts)
        if (c > 0) rows.emplace_back(w, c);
    return rows;
}

std::string enumerator_string(const WeightDistribution& wd) {
    std::ostringstream os;
    os << "1";
    for (const auto& [w, c] : wd.counts) {
        if (w == 0) continue;
        os << "+" << c << "z^" << w;
    }
    return os.str();
}

std::string to_csv(const WeightDistribution& wd) {
    std::ostringstream os;
    os << "weight,multiplicity\n";
    for (const auto& [w, c] : wd.counts) os << w << "," << c << "\n";
    return os.str();
}

std::string to_string(GriesmerClass c) {
    switch (c) {
        case GriesmerClass::kOptimalCandidate: return "griesmer-optimal-candidate";
        case GriesmerClass::kAlmostOptimalCandidate: return "almost-optimal-candidate";
        case GriesmerClass::kInconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

std::uint64_t griesmer_bound(std::uint64_t d, std::uint32_t k, std::uint32_t p) {
    std::uint64_t bound = 0;
    std::uint64_t pk = 1;
    for (std::uint32_t j = 0; j < k; ++j) {
        bound += (d + pk - 1) / pk;
        if (pk <= d) pk *= p;  // once p^j > d every term is 1
    }
    return bound;
}

}  // namespace

GriesmerVerdict griesmer(const WeightDistribution& wd) {
    if (wd.k < 1) throw OutOfScopeError("Griesmer bound needs k >= 1");
    GriesmerVerdict v;
    v.bound_n = griesmer_bound(wd.d, wd.k, wd.p);
    v.passes = wd.n >= v.bound_n;
    v.next_passes = wd.n >= griesmer_bound(wd.d + 1, wd.k, wd.p);
    if (!v.next_passes) {
        v.classification = GriesmerClass::kOptimalCandidate;
    } else if (wd.n < griesmer_bound(wd.d + 2, wd.k, wd.p)) {
        v.classification = GriesmerClass::kAlmostOptimalCandidate;
    } else {
        v.classification = GriesmerClass::kInconclusive;
    }
    return v;
}

WtRatio wt_ratio(const WeightDistribution& wd) {
    if (wd.k < 1) throw OutOfScopeError("wt_ratio needs k >= 1");
    WtRatio r;
    r.wt_min = wd.d;
    for (const auto& [w, c] : wd.counts)
        if (w > 0 && c > 0) r.wt_max = std::max(r.wt_max, w);
    // wt_min / wt_max > (p-1)/p  <=>  p * wt_min > (p-1) * wt_max
    r.exceeds = static_cast<unsigned __int128>(wd.p) * r.wt_min >
                static_cast<unsigned __int128>(wd.p - 1) * r.wt_max;
    return r;
}

}  // namespace codeweights
