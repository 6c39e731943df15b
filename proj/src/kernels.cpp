#include "codeweights/kernels.hpp"

#include <omp.h>

#include "codeweights/codes.hpp"

namespace codeweights::kernels {

namespace {

// Tr(a * x^j) for j = 0..e-1; with these the trace of a times any element is
// a digit dot product mod p, no field multiplication in the inner loop.
std::vector<std::uint32_t> trace_form(const FieldCtx& ctx, const FFElem& a) {
    std::vector<std::uint32_t> form(ctx.e());
    FFElem basis = ctx.one();
    for (std::uint32_t j = 0; j < ctx.e(); ++j) {
        form[j] = ctx.trace(ctx.mul(a, basis)).value;
        if (j + 1 < ctx.e()) basis = ctx.mul(basis, ctx.element(ctx.p()));
    }
    return form;
}

std::uint32_t dot_mod(const std::uint32_t* digits, const std::uint32_t* form,
                      std::uint32_t e, std::uint32_t p) {
    std::uint64_t acc = 0;
    for (std::uint32_t j = 0; j < e; ++j) acc += std::uint64_t{digits[j]} * form[j];
    return static_cast<std::uint32_t>(acc % p);
}

// Coordinate buckets of a defining set: the distinct trace coordinate vectors
// of its elements with their multiplicities, flattened row-major.
struct Buckets {
    std::uint32_t e;
    std::vector<std::uint32_t> vecs;    // rows of e digits
    std::vector<std::uint32_t> counts;  // one per row
};

Buckets build_buckets(const FieldCtx& ctx, const FieldTables& t, const DefiningSet& set) {
    const std::uint32_t e = ctx.e();
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(set.elements.size());
    for (const FFElem& x : set.elements) {
        std::vector<std::uint32_t> v(e);
        FFElem basis = ctx.one();
        for (std::uint32_t j = 0; j < e; ++j) {
            v[j] = t.trace_of[ctx.index_of(ctx.mul(basis, x))];
            if (j + 1 < e) basis = ctx.mul(basis, ctx.element(ctx.p()));
        }
        rows.push_back(std::move(v));
    }
    std::sort(rows.begin(), rows.end());
    Buckets b{e, {}, {}};
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0 && rows[r] == rows[r - 1]) {
            ++b.counts.back();
        } else {
            b.vecs.insert(b.vecs.end(), rows[r].begin(), rows[r].end());
            b.counts.push_back(1);
        }
    }
    return b;
}

// wt(c(a)) = n - sum of bucket counts whose coordinate vector is orthogonal
// to the digit vector of a. Identical to evaluating the codeword directly.
std::uint64_t bucket_weight(const Buckets& b, const std::uint32_t* a_digits,
                            std::uint64_t n, std::uint32_t p) {
    std::uint64_t zeros = 0;
    const std::size_t m = b.counts.size();
    for (std::size_t r = 0; r < m; ++r) {
        const std::uint32_t* v = b.vecs.data() + r * b.e;
        std::uint64_t acc = 0;
        for (std::uint32_t j = 0; j < b.e; ++j) acc += std::uint64_t{v[j]} * a_digits[j];
        if (acc % p == 0) zeros += b.counts[r];
    }
    return n - zeros;
}

}  // namespace

FieldTables::FieldTables(const FieldCtx& ctx)
    : p(ctx.p()), e(ctx.e()), q(ctx.q()) {
    if (q > kBruteForceLimit)
        throw FieldTooLargeError("field too large for exhaustive enumeration");
    digits.resize(q * e);
    trace_of.resize(q);
    // Digits count up in base p; traces are linear, so extend from the traces
    // of the basis monomials.
    std::vector<std::uint32_t> basis_trace(e);
    for (std::uint32_t j = 0; j < e; ++j) {
        FFElem b = ctx.zero();
        b.coeffs[j] = 1;
        basis_trace[j] = ctx.trace(b).value;
    }
    std::vector<std::uint32_t> cur(e, 0);
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        std::uint32_t tr = 0;
        for (std::uint32_t j = 0; j < e; ++j) {
            digits[idx * e + j] = cur[j];
            tr = static_cast<std::uint32_t>(
                (tr + static_cast<std::uint64_t>(cur[j]) * basis_trace[j]) % p);
        }
        trace_of[idx] = tr;
        for (std::uint32_t j = 0; j < e; ++j) {
            if (++cur[j] < p) break;
            cur[j] = 0;
        }
    }
}

std::vector<std::uint32_t> power_map(const FieldCtx& ctx, const FieldTables& t,
                                     std::uint32_t l) {
    std::uint64_t exp = 1;
    for (std::uint32_t k = 0; k < l; ++k) exp *= ctx.p();
    exp += 1;  // p^l + 1
    std::vector<std::uint32_t> map(t.q);
    for (std::uint64_t idx = 0; idx < t.q; ++idx)
        map[idx] = static_cast<std::uint32_t>(ctx.index_of(ctx.pow(ctx.element(idx), exp)));
    return map;
}

std::vector<std::uint64_t> weil_exponent_histogram_serial(
    const FieldCtx& ctx, const FieldTables& t, const std::vector<std::uint32_t>& powmap,
    const FFElem& alpha, const FFElem& beta) {
    const std::uint32_t p = t.p, e = t.e;
    const auto fa = trace_form(ctx, alpha);
    const auto fb = trace_form(ctx, beta);
    std::vector<std::uint64_t> hist(p, 0);
    for (std::uint64_t x = 0; x < t.q; ++x) {
        const std::uint32_t u = powmap[x];
        std::uint32_t k = dot_mod(t.row(u), fa.data(), e, p) +
                          dot_mod(t.row(x), fb.data(), e, p);
        if (k >= p) k -= p;
        ++hist[k];
    }
    return hist;
}

std::vector<std::uint64_t> weil_exponent_histogram_parallel(
    const FieldCtx& ctx, const FieldTables& t, const std::vector<std::uint32_t>& powmap,
    const FFElem& alpha, const FFElem& beta) {
    const std::uint32_t p = t.p, e = t.e;
    const auto fa = trace_form(ctx, alpha);
    const auto fb = trace_form(ctx, beta);
    std::vector<std::uint64_t> hist(p, 0);
    const std::int64_t q = static_cast<std::int64_t>(t.q);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(p, 0);
#pragma omp for nowait
        for (std::int64_t x = 0; x < q; ++x) {
            const std::uint32_t u = powmap[static_cast<std::uint64_t>(x)];
            std::uint32_t k = dot_mod(t.row(u), fa.data(), e, p) +
                              dot_mod(t.row(static_cast<std::uint64_t>(x)), fb.data(), e, p);
            if (k >= p) k -= p;
            ++local[k];
        }
#pragma omp critical
        for (std::uint32_t k = 0; k < p; ++k) hist[k] += local[k];
    }
    return hist;
}

std::vector<std::uint64_t> weight_histogram_direct_serial(const FieldCtx& ctx,
                                                          const DefiningSet& set) {
    const std::uint64_t n = set.elements.size();
    std::vector<std::uint64_t> hist(n + 1, 0);
    for (std::uint64_t idx = 0; idx < ctx.q(); ++idx) {
        const FFElem a = ctx.element(idx);
        std::uint64_t w = 0;
        for (const FFElem& x : set.elements)
            if (ctx.trace(ctx.mul(a, x)).value != 0) ++w;
        ++hist[w];
    }
    return hist;
}

std::vector<std::uint64_t> weight_histogram_buckets_serial(const FieldCtx& ctx,
                                                           const DefiningSet& set) {
    const FieldTables t(ctx);
    const Buckets b = build_buckets(ctx, t, set);
    const std::uint64_t n = set.elements.size();
    std::vector<std::uint64_t> hist(n + 1, 0);
    for (std::uint64_t idx = 0; idx < t.q; ++idx)
        ++hist[bucket_weight(b, t.row(idx), n, t.p)];
    return hist;
}

std::vector<std::uint64_t> weight_histogram_buckets_parallel(const FieldCtx& ctx,
                                                             const DefiningSet& set) {
    const FieldTables t(ctx);
    const Buckets b = build_buckets(ctx, t, set);
    const std::uint64_t n = set.elements.size();
    std::vector<std::uint64_t> hist(n + 1, 0);
    const std::int64_t q = static_cast<std::int64_t>(t.q);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for nowait
        for (std::int64_t idx = 0; idx < q; ++idx)
            ++local[bucket_weight(b, t.row(static_cast<std::uint64_t>(idx)), n, t.p)];
#pragma omp critical
        for (std::uint64_t w = 0; w <= n; ++w) hist[w] += local[w];
    }
    return hist;
}

}  // namespace codeweights::kernels
