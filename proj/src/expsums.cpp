#include "codeweights/expsums.hpp"

#include "codeweights/kernels.hpp"

namespace codeweights {

namespace {

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * base) % m);
        base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % m);
        exp >>= 1;
    }
    return r;
}

// x^{p^k} for a field element, exponent reduced mod q-1 so any k is safe.
FFElem frobenius_power(const FieldCtx& ctx, const FFElem& x, std::uint64_t k) {
    if (ctx.is_zero(x)) return x;
    return ctx.pow(x, powmod_u64(ctx.p(), k, ctx.q() - 1));
}

CycInt cyc_from_histogram(std::uint32_t p, const std::vector<std::uint64_t>& hist) {
    CycInt total(p);
    for (std::uint32_t k = 0; k < p; ++k) {
        if (hist[k] == 0) continue;
        CycInt r = CycInt::root(p, k);
        r.scale(BigInt(hist[k]));
        total += r;
    }
    return total;
}

}  // namespace

WeilParams WeilParams::make(const FieldCtx& ctx, FFElem alpha, FFElem beta,
                            std::uint32_t l) {
    if (ctx.is_zero(alpha)) throw ZeroArgumentError("Weil sum needs alpha != 0");
    if (l == 0) throw UnsupportedExponentError("l must be positive");
    return WeilParams{ctx, std::move(alpha), std::move(beta), l,
                      std::gcd(l, ctx.e())};
}

CycInt weil_sum_bruteforce(const WeilParams& params) {
    const FieldCtx& F = params.ctx;
    const kernels::FieldTables t(F);
    const auto powmap = kernels::power_map(F, t, params.l);
    const auto hist =
        kernels::weil_exponent_histogram_parallel(F, t, powmap, params.alpha, params.beta);
    return cyc_from_histogram(F.p(), hist);
}

LinearSolveResult solve_linearized(const FieldCtx& ctx, const FFElem& alpha,
                                   const FFElem& beta, std::uint32_t l) {
    const std::uint32_t p = ctx.p();
    const std::uint32_t e = ctx.e();
    const FFElem a_pl = frobenius_power(ctx, alpha, l);
    // Column j is the image of the basis monomial x^j under
    // X -> alpha^{p^l} X^{p^{2l}} + alpha X.
    std::vector<std::vector<std::uint64_t>> aug(e, std::vector<std::uint64_t>(e + 1, 0));
    for (std::uint32_t j = 0; j < e; ++j) {
        FFElem b = ctx.zero();
        b.coeffs[j] = 1;
        const FFElem img =
            ctx.add(ctx.mul(a_pl, frobenius_power(ctx, b, 2 * l)), ctx.mul(alpha, b));
        for (std::uint32_t r = 0; r < e; ++r) aug[r][j] = img.coeffs[r];
    }
    const FFElem rhs = ctx.neg(frobenius_power(ctx, beta, l));
    for (std::uint32_t r = 0; r < e; ++r) aug[r][e] = rhs.coeffs[r];

    // Gauss-Jordan over F_p.
    std::vector<int> pivot_col(e, -1);
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < e && rank < e; ++col) {
        std::uint32_t sel = rank;
        while (sel < e && aug[sel][col] == 0) ++sel;
        if (sel == e) continue;
        std::swap(aug[rank], aug[sel]);
        const std::uint64_t inv = powmod_u64(aug[rank][col], p - 2, p);
        for (auto& v : aug[rank]) v = v * inv % p;
        for (std::uint32_t r = 0; r < e; ++r) {
            if (r == rank || aug[r][col] == 0) continue;
            const std::uint64_t f = aug[r][col];
            for (std::uint32_t cc = 0; cc <= e; ++cc)
                aug[r][cc] = (aug[r][cc] + (p - f) * aug[rank][cc]) % p;
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    for (std::uint32_t r = rank; r < e; ++r)
        if (aug[r][e] != 0) return {};  // inconsistent

    LinearSolveResult out;
    out.solvable = true;
    out.particular = ctx.zero();
    for (std::uint32_t r = 0; r < rank; ++r)
        out.particular.coeffs[static_cast<std::uint32_t>(pivot_col[r])] =
            static_cast<std::uint32_t>(aug[r][e]);
    std::vector<bool> is_pivot(e, false);
    for (std::uint32_t r = 0; r < rank; ++r)
        is_pivot[static_cast<std::uint32_t>(pivot_col[r])] = true;
    for (std::uint32_t col = 0; col < e; ++col) {
        if (is_pivot[col]) continue;
        FFElem k = ctx.zero();
        k.coeffs[col] = 1;
        for (std::uint32_t r = 0; r < rank; ++r) {
            const std::uint64_t v = aug[r][col];
            if (v != 0)
                k.coeffs[static_cast<std::uint32_t>(pivot_col[r])] =
                    static_cast<std::uint32_t>((p - v) % p);
        }
        out.kernel_basis.push_back(std::move(k));
    }
    return out;
}

SolvabilityReport solve_affine(const FieldCtx& ctx, const FFElem& alpha,
                               const FFElem& beta, std::uint32_t l) {
    if (ctx.q() > kernels::kBruteForceLimit)
        throw FieldTooLargeError("affine solvability scan requires full enumeration");
    const FFElem a_pl = frobenius_power(ctx, alpha, l);
    const FFElem rhs = ctx.neg(frobenius_power(ctx, beta, l));
    SolvabilityReport rep;
    for (std::uint64_t idx = 0; idx < ctx.q(); ++idx) {
        const FFElem x = ctx.element(idx);
        const FFElem lhs =
            ctx.add(ctx.mul(a_pl, frobenius_power(ctx, x, 2 * l)), ctx.mul(alpha, x));
        if (lhs == rhs) rep.solutions.push_back(x);
    }
    rep.count = rep.solutions.size();
    rep.solvable = rep.count > 0;
    return rep;
}

CycInt weil_sum_closed(const WeilParams& params) {
    if (params.l != 1)
        throw UnsupportedExponentError("closed form implemented for l = 1 only");
    const FieldCtx& F = params.ctx;
    const std::uint32_t p = F.p();
    const std::uint32_t e = F.e();

    const auto neg_trace = [&](const FFElem& x0) {
        return F.trace(F.neg(F.mul(params.alpha, F.pow(x0, p + 1)))).value;
    };

    if (e % 2 == 1) {
        // The linearized map is a permutation, so the equation has exactly
        // one solution and S = G^e eta'(alpha) zeta^{Tr(-alpha x0^{p+1})}.
        const auto sol = solve_linearized(F, params.alpha, params.beta, 1);
        if (!sol.solvable || !sol.kernel_basis.empty())
            throw Error("odd-degree linearized map was not bijective");
        CycInt g = GaussPower(p, e).as_cyclotomic();
        if (F.quad_char_ext(params.alpha) < 0) g = -g;
        return g * CycInt::root(p, neg_trace(sol.particular));
    }

    const std::uint32_t m = e / 2;
    const FFElem marker = F.pow(params.alpha, (F.q() - 1) / (p + 1));
    const FFElem want = m % 2 == 0 ? F.one() : F.from_prime(p - 1);  // (-1)^m
    const bool special = marker == want;
    const int sign = (m % 2 == 0 ? 1 : -1) * (special ? -1 : 1);
    BigInt mag = pow(BigInt(p), special ? m + 1 : m);
    if (sign < 0) mag = -mag;

    if (F.is_zero(params.beta)) return CycInt::integer(p, mag);

    const auto sol = solve_linearized(F, params.alpha, params.beta, 1);
    if (!sol.solvable) {
        if (!special) throw Error("bijective linearized map reported unsolvable");
        return CycInt(p);
    }
    if (!special && !sol.kernel_basis.empty())
        throw Error("unique-solution case produced a kernel");
    const std::uint32_t t = neg_trace(sol.particular);
    // Every solution must give the same trace; verified over the full
    // solution set rather than assumed.
    const std::size_t dim = sol.kernel_basis.size();
    std::uint64_t combos = 1;
    for (std::size_t j = 0; j < dim; ++j) combos *= p;
    if (combos <= (std::uint64_t{1} << 22)) {
        std::vector<std::uint32_t> sel(dim, 0);
        for (std::uint64_t c = 1; c < combos; ++c) {
            std::size_t j = 0;
            while (j < dim && ++sel[j] == p) sel[j++] = 0;
            FFElem x0 = sol.particular;
            for (std::size_t d = 0; d < dim; ++d)
                if (sel[d] != 0)
                    x0 = F.add(x0, F.mul(sol.kernel_basis[d], F.from_prime(sel[d])));
            if (neg_trace(x0) != t)
                throw Error("solution set gave inconsistent traces");
        }
    }
    CycInt r = CycInt::root(p, t);
    r.scale(mag);
    return r;
}

BigInt delta1(const FieldCtx& ctx, int class_index) {
    const std::uint32_t p = ctx.p();
    const kernels::FieldTables t(ctx);
    const auto powmap = kernels::power_map(ctx, t, 1);
    std::vector<std::uint64_t> acc(p, 0);
    for (std::uint32_t y = 1; y < p; ++y) {
        const FFElem ay = ctx.from_prime(y);
        const auto hist =
            kernels::weil_exponent_histogram_parallel(ctx, t, powmap, ay, ctx.neg(ay));
        for (std::uint32_t c = 1; c < p; ++c) {
            if (cyclotomic_class(PrimeElem{c}, p) != class_index) continue;
            const std::uint32_t shift = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(c) * y) % p);
            for (std::uint32_t k = 0; k < p; ++k)
                acc[(k + p - shift) % p] += hist[k];
        }
    }
    const auto rat = cyc_from_histogram(p, acc).rational_part();
    if (!rat) throw NonRationalSumError("delta_1 did not reduce to an integer");
    return *rat;
}

BigInt delta1_closed(std::uint32_t p, std::uint32_t e, int class_index) {
    const int si = class_index == 0 ? 1 : -1;  // (-1)^i
    const int eta_m1 = legendre(p - 1, p);
    const bool p_divides_e = e % p == 0;
    if (e % 2 == 1) {
        const BigInt g = GaussPower(p, e + 1).value();
        if (p_divides_e) return BigInt(si) * eta_m1 * ((p - 1) / 2) * g;
        const int eta_e = legendre(e % p, p);
        return BigInt(-((si + eta_e) / 2) * eta_m1) * g;
    }
    const BigInt pw = pow(BigInt(p), e / 2 + (e % 4 == 0 ? 1 : 0));
    if (p_divides_e) return BigInt((p - 1) / 2) * pw;
    const int eta_ne = legendre((p - e % p) % p, p);
    return BigInt(-(si * eta_ne * static_cast<std::int64_t>(p) + 1) / 2) * pw;
}

CycInt delta2_bruteforce(const FieldCtx& ctx, int class_index, const FFElem& a) {
    const std::uint32_t p = ctx.p();
    if (ctx.q() > kernels::kBruteForceLimit)
        throw FieldTooLargeError("delta_2 scan requires full enumeration");
    std::vector<std::uint64_t> hist(p, 0);
    for (std::uint32_t z = 1; z < p; ++z) {
        const FFElem az = ctx.mul(a, ctx.from_prime(z));
        for (std::uint64_t idx = 0; idx < ctx.q(); ++idx)
            ++hist[ctx.trace(ctx.mul(az, ctx.element(idx))).value];
    }
    // The summand does not involve c, so the c-sum contributes |C_i| copies.
    std::uint64_t class_size = 0;
    for (std::uint32_t c = 1; c < p; ++c)
        if (cyclotomic_class(PrimeElem{c}, p) == class_index) ++class_size;
    CycInt total = cyc_from_histogram(p, hist);
    total.scale(BigInt(class_size));
    return total;
}

}  // namespace codeweights
