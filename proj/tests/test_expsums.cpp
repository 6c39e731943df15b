#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "codeweights/expsums.hpp"
#include "codeweights/kernels.hpp"

using namespace codeweights;

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t x, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (x) {
        if (x & 1) r = r * b % m;
        b = b * b % m;
        x >>= 1;
    }
    return r;
}

// Naive reference: accumulate zeta^{Tr(alpha x^{p^l+1} + beta x)} term by
// term, no histograms. Deliberately independent of the kernel path.
CycInt weil_sum_naive(const FieldCtx& f, const FFElem& alpha, const FFElem& beta,
                      std::uint32_t l) {
    std::uint64_t exp = 1;
    for (std::uint32_t k = 0; k < l; ++k) exp *= f.p();
    exp += 1;
    CycInt total(f.p());
    for (std::uint64_t idx = 0; idx < f.q(); ++idx) {
        const FFElem x = f.element(idx);
        const FFElem arg = f.add(f.mul(alpha, f.pow(x, exp)), f.mul(beta, x));
        total += CycInt::root(f.p(), f.trace(arg).value);
    }
    return total;
}

}  // namespace

TEST_CASE("closed form equals brute force on two full fields") {
    for (const auto& [p, e] : {std::pair<std::uint32_t, std::uint32_t>{3, 3}, {3, 4}}) {
        const FieldCtx f = FieldCtx::make(p, e);
        const FFElem beta1 = f.one();
        for (std::uint64_t ia = 1; ia < f.q(); ++ia) {
            const FFElem alpha = f.element(ia);
            for (const FFElem& beta : {f.zero(), beta1}) {
                const WeilParams params = WeilParams::make(f, alpha, beta, 1);
                CHECK(weil_sum_closed(params) == weil_sum_bruteforce(params));
            }
        }
    }
}

TEST_CASE("S(y,-y) follows the three-branch closed form") {
    // odd e: G^e eta(y) zeta^{-ey/4}; e = 2 mod 4: -p^{e/2} zeta^{-ey/4};
    // e = 0 mod 4: -p^{e/2+1} zeta^{-ey/4}, with 1/4 the inverse of 4 mod p.
    for (const auto& [p, e] :
         {std::pair<std::uint32_t, std::uint32_t>{3, 3}, {5, 2}, {3, 4}, {5, 3}}) {
        const FieldCtx f = FieldCtx::make(p, e);
        const std::uint64_t inv4 = powmod(4 % p, p - 2, p);
        for (std::uint32_t y = 1; y < p; ++y) {
            const std::uint64_t root_exp =
                (p - static_cast<std::uint64_t>(e) % p * y % p * inv4 % p) % p;
            CycInt expected = CycInt::root(p, root_exp);
            if (e % 2 == 1) {
                CycInt g = GaussPower(p, e).as_cyclotomic();
                if (legendre(y, p) < 0) g = -g;
                expected = g * expected;
            } else {
                BigInt mag = -pow(BigInt(p), e / 2 + (e % 4 == 0 ? 1 : 0));
                expected.scale(mag);
            }
            const FFElem ye = f.from_prime(y);
            const WeilParams params = WeilParams::make(f, ye, f.neg(ye), 1);
            CHECK(weil_sum_closed(params) == expected);
            CHECK(weil_sum_bruteforce(params) == expected);
        }
    }
}

TEST_CASE("histogram kernels agree with the naive sum, including l = 2") {
    const FieldCtx f = FieldCtx::make(3, 4);
    const kernels::FieldTables t(f);
    for (std::uint32_t l : {1u, 2u}) {
        const auto powmap = kernels::power_map(f, t, l);
        for (std::uint64_t ia : {1, 5, 77}) {
            const FFElem alpha = f.element(ia % f.q());
            const FFElem beta = f.element((3 * ia + 2) % f.q());
            const auto hs = kernels::weil_exponent_histogram_serial(f, t, powmap, alpha, beta);
            const auto hp =
                kernels::weil_exponent_histogram_parallel(f, t, powmap, alpha, beta);
            CHECK(hs == hp);
            const WeilParams params = WeilParams::make(f, alpha, beta, l);
            CHECK(weil_sum_bruteforce(params) == weil_sum_naive(f, alpha, beta, l));
        }
    }
    // zero alpha and beta degenerate to the trivial character: sum = q
    const auto powmap = kernels::power_map(f, t, 1);
    const auto hist =
        kernels::weil_exponent_histogram_serial(f, t, powmap, f.zero(), f.zero());
    CHECK(hist[0] == f.q());
}

TEST_CASE("parameter validation") {
    const FieldCtx f = FieldCtx::make(3, 3);
    CHECK_THROWS_AS(WeilParams::make(f, f.zero(), f.one(), 1), ZeroArgumentError);
    CHECK_THROWS_AS(weil_sum_closed(WeilParams::make(f, f.one(), f.one(), 2)),
                    UnsupportedExponentError);
    CHECK(WeilParams::make(f, f.one(), f.one(), 2).s == 1);
    const FieldCtx f34 = FieldCtx::make(3, 4);
    CHECK(WeilParams::make(f34, f34.one(), f34.zero(), 2).s == 2);
    const FieldCtx big = FieldCtx::make(3, 13);
    CHECK_THROWS_AS(weil_sum_bruteforce(WeilParams::make(big, big.one(), big.zero(), 1)),
                    FieldTooLargeError);
}

TEST_CASE("x = 1/2 solves the affine equation for (y, -y)") {
    for (const auto& [p, e] :
         {std::pair<std::uint32_t, std::uint32_t>{3, 3}, {5, 2}, {3, 4}}) {
        const FieldCtx f = FieldCtx::make(p, e);
        const FFElem half = f.inv(f.from_prime(2));
        for (std::uint32_t y = 1; y < p; ++y) {
            const FFElem ye = f.from_prime(y);
            const auto rep = solve_affine(f, ye, f.neg(ye), 1);
            REQUIRE(rep.solvable);
            CHECK(std::find(rep.solutions.begin(), rep.solutions.end(), half) !=
                  rep.solutions.end());
            if (e % 4 != 0) CHECK(rep.count == 1);
        }
    }
}

TEST_CASE("linearized solver matches the exhaustive scan") {
    for (const auto& [p, e] : {std::pair<std::uint32_t, std::uint32_t>{3, 4}, {5, 2}}) {
        const FieldCtx f = FieldCtx::make(p, e);
        for (std::uint64_t ia = 1; ia < f.q(); ia += 3) {
            const FFElem alpha = f.element(ia);
            for (std::uint64_t ib = 0; ib < f.q(); ib += 5) {
                const FFElem beta = f.element(ib);
                const auto brute = solve_affine(f, alpha, beta, 1);
                const auto fast = solve_linearized(f, alpha, beta, 1);
                CHECK(brute.solvable == fast.solvable);
                if (!brute.solvable) continue;
                std::uint64_t span = 1;
                for (std::size_t d = 0; d < fast.kernel_basis.size(); ++d) span *= p;
                CHECK(span == brute.count);
                CHECK(std::find(brute.solutions.begin(), brute.solutions.end(),
                                fast.particular) != brute.solutions.end());
            }
        }
    }
}

TEST_CASE("solvability structure at e = 0 mod 4") {
    const FieldCtx f = FieldCtx::make(3, 4);
    std::uint64_t unsolvable = 0;
    for (std::uint64_t ia = 0; ia < f.q(); ++ia) {
        const FFElem a = f.element(ia);
        // x^{p^2} + x = -a^p
        const auto rep = solve_affine(f, f.one(), a, 1);
        if (!rep.solvable) {
            ++unsolvable;
        } else {
            CHECK(rep.count == 9);  // p^2 solutions on every solvable instance
        }
        CHECK((rep.count == 0 || rep.count == 1 || rep.count == 9));
    }
    CHECK(unsolvable == f.q() - f.q() / 9);  // p^e - p^{e-2}
}

TEST_CASE("solution counts stay in {0, 1, p^2} over the whole (alpha, beta) grid") {
    const FieldCtx f = FieldCtx::make(3, 4);
    for (std::uint64_t ia = 1; ia < f.q(); ++ia) {
        const FFElem alpha = f.element(ia);
        for (std::uint64_t ib = 0; ib < f.q(); ++ib) {
            const auto rep = solve_affine(f, alpha, f.element(ib), 1);
            CHECK((rep.count == 0 || rep.count == 1 || rep.count == 9));
        }
    }
}

TEST_CASE("delta_1 brute force and closed form") {
    const FieldCtx f33 = FieldCtx::make(3, 3);
    CHECK(delta1(f33, 0) == -9);
    CHECK(delta1(f33, 1) == 9);
    // (3,6) and (3,12) cover the two even-degree branches with p | e
    for (const auto& [p, e] :
         {std::pair<std::uint32_t, std::uint32_t>{3, 3}, {3, 5}, {5, 3}, {3, 2}, {5, 2},
          {7, 2}, {3, 4}, {5, 4}, {7, 4}, {3, 6}, {3, 12}}) {
        const FieldCtx f = FieldCtx::make(p, e);
        for (int i : {0, 1}) CHECK(delta1(f, i) == delta1_closed(p, e, i));
    }
    // e = 2 mod 4, p coprime branch: -((-1)^i eta(-e) p + 1)/2 * p^{e/2}
    for (int i : {0, 1}) {
        const int si = i == 0 ? 1 : -1;
        const int eta_ne = legendre((5 - 2 % 5) % 5, 5);
        CHECK(delta1_closed(5, 2, i) == BigInt(-(si * eta_ne * 5 + 1) / 2) * 5);
    }
}

TEST_CASE("delta_2 vanishes for nonzero a") {
    for (const auto& [p, e] : {std::pair<std::uint32_t, std::uint32_t>{3, 3}, {5, 2}}) {
        const FieldCtx f = FieldCtx::make(p, e);
        for (std::uint64_t ia = 1; ia < f.q(); ++ia)
            for (int i : {0, 1})
                CHECK(delta2_bruteforce(f, i, f.element(ia)).is_zero());
    }
}

TEST_CASE("complete quadratic sums collapse to a Gauss-sum multiple") {
    // sum_x zeta^{Tr(a2 x^2 + a1 x + a0)} equals
    // zeta^{Tr(a0 - a1^2/(4 a2))} * eta'(a2) * G', G' = (-1)^{e-1} sqrt(p*)^e
    for (const auto& [p, e] :
         {std::pair<std::uint32_t, std::uint32_t>{3, 3}, {5, 2}, {3, 4}}) {
        const FieldCtx f = FieldCtx::make(p, e);
        CycInt gprime = GaussPower(p, e).as_cyclotomic();
        if (e % 2 == 0) gprime = -gprime;  // (-1)^{e-1}
        for (std::uint64_t ia2 = 1; ia2 < f.q(); ia2 += 7) {
            for (std::uint64_t ia1 = 0; ia1 < f.q(); ia1 += 11) {
                for (std::uint64_t ia0 : {std::uint64_t{0}, std::uint64_t{1}}) {
                    const FFElem a2 = f.element(ia2);
                    const FFElem a1 = f.element(ia1 % f.q());
                    const FFElem a0 = f.element(ia0);
                    CycInt lhs(p);
                    for (std::uint64_t ix = 0; ix < f.q(); ++ix) {
                        const FFElem x = f.element(ix);
                        const FFElem v =
                            f.add(f.add(f.mul(a2, f.mul(x, x)), f.mul(a1, x)), a0);
                        lhs += CycInt::root(p, f.trace(v).value);
                    }
                    const FFElem shift = f.sub(
                        a0, f.mul(f.mul(a1, a1), f.inv(f.mul(f.from_prime(4), a2))));
                    CycInt rhs = gprime * CycInt::root(p, f.trace(shift).value);
                    if (f.quad_char_ext(a2) < 0) rhs = -rhs;
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("quadratic character sums over quadratic arguments") {
    // sum_x eta'(a2 x^2 + a1 x + a0) is -eta'(a2) when the discriminant is
    // nonzero and (q-1) eta'(a2) when it vanishes
    for (const auto& [p, e] : {std::pair<std::uint32_t, std::uint32_t>{3, 3}, {5, 2}}) {
        const FieldCtx f = FieldCtx::make(p, e);
        for (std::uint64_t ia2 = 1; ia2 < f.q(); ia2 += 5) {
            for (std::uint64_t ia1 = 0; ia1 < f.q(); ia1 += 7) {
                for (std::uint64_t ia0 = 0; ia0 < f.q(); ia0 += 11) {
                    const FFElem a2 = f.element(ia2);
                    const FFElem a1 = f.element(ia1 % f.q());
                    const FFElem a0 = f.element(ia0 % f.q());
                    std::int64_t lhs = 0;
                    for (std::uint64_t ix = 0; ix < f.q(); ++ix) {
                        const FFElem x = f.element(ix);
                        const FFElem v =
                            f.add(f.add(f.mul(a2, f.mul(x, x)), f.mul(a1, x)), a0);
                        lhs += f.quad_char_ext(v);
                    }
                    const FFElem disc =
                        f.sub(f.mul(a1, a1), f.mul(f.from_prime(4), f.mul(a0, a2)));
                    const std::int64_t expected =
                        f.is_zero(disc)
                            ? static_cast<std::int64_t>(f.q() - 1) * f.quad_char_ext(a2)
                            : -f.quad_char_ext(a2);
                    CHECK(lhs == expected);
                }
            }
        }
    }
}
