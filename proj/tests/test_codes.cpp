#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "codeweights/codes.hpp"
#include "codeweights/kernels.hpp"

using namespace codeweights;

namespace {

using Dist = std::map<std::uint64_t, std::uint64_t>;

WeightDistribution dist_of(std::uint32_t p, std::uint32_t e, int i) {
    const FieldCtx f = FieldCtx::make(p, e);
    return weight_distribution(f, defining_set(f, i));
}

// Next irreducible modulus after the default, in the same constant-first
// lexicographic order the default selection uses.
std::vector<std::uint32_t> second_modulus(std::uint32_t p, std::uint32_t e) {
    std::vector<std::uint32_t> cand = smallest_irreducible(p, e);
    while (true) {
        std::size_t j = e;
        while (j-- > 0) {
            if (++cand[j] < p) break;
            cand[j] = 0;
        }
        if (is_irreducible(cand, p)) return cand;
    }
}

}  // namespace

TEST_CASE("defining sets have the expected sizes and members") {
    const FieldCtx f33 = FieldCtx::make(3, 3);
    const DefiningSet d0 = defining_set(f33, 0);
    const DefiningSet d1 = defining_set(f33, 1);
    CHECK(d0.elements.size() == 6);
    CHECK(d1.elements.size() == 12);

    // every member satisfies its class condition, the two sets are disjoint,
    // and together with the zero-trace fiber they partition F_q
    std::uint64_t zero_fiber = 0;
    std::set<std::uint64_t> seen;
    for (std::uint64_t idx = 0; idx < f33.q(); ++idx) {
        const FFElem x = f33.element(idx);
        const PrimeElem t = f33.trace(f33.sub(f33.pow(x, 4), x));
        if (t.value == 0) ++zero_fiber;
    }
    for (const FFElem& x : d0.elements) {
        const PrimeElem t = f33.trace(f33.sub(f33.pow(x, 4), x));
        CHECK(cyclotomic_class(t, 3) == 0);
        seen.insert(f33.index_of(x));
    }
    for (const FFElem& x : d1.elements) {
        const PrimeElem t = f33.trace(f33.sub(f33.pow(x, 4), x));
        CHECK(cyclotomic_class(t, 3) == 1);
        CHECK_FALSE(seen.count(f33.index_of(x)));
    }
    CHECK(d0.elements.size() + d1.elements.size() + zero_fiber == f33.q());

    const FieldCtx f74 = FieldCtx::make(7, 4);
    CHECK(defining_set(f74, 0).elements.size() == 1176);
    CHECK(defining_set(f74, 1).elements.size() == 833);
}

TEST_CASE("codewords are linear in a with coordinates in set order") {
    const FieldCtx f = FieldCtx::make(3, 3);
    const DefiningSet d0 = defining_set(f, 0);
    CHECK(codeword(f, f.zero(), d0) == std::vector<std::uint32_t>(d0.elements.size(), 0));
    for (std::uint64_t ia = 0; ia < f.q(); ia += 2) {
        for (std::uint64_t ib = 0; ib < f.q(); ib += 3) {
            const FFElem a = f.element(ia), b = f.element(ib);
            const auto ca = codeword(f, a, d0);
            const auto cb = codeword(f, b, d0);
            const auto cab = codeword(f, f.add(a, b), d0);
            for (std::size_t j = 0; j < ca.size(); ++j)
                CHECK(cab[j] == (ca[j] + cb[j]) % 3);
        }
    }
    const auto c1 = codeword(f, f.one(), d0);
    std::uint64_t wt = 0;
    for (auto v : c1)
        if (v != 0) ++wt;
    CHECK(wt >= 3);
    CHECK(wt <= 6);
}

TEST_CASE("weight equals n minus the zero-coordinate count") {
    const FieldCtx f = FieldCtx::make(5, 2);
    for (int i : {0, 1}) {
        const DefiningSet d = defining_set(f, i);
        for (std::uint64_t ia = 0; ia < f.q(); ++ia) {
            const FFElem a = f.element(ia);
            std::uint64_t zeros = 0;
            for (const FFElem& x : d.elements)
                if (f.trace(f.mul(a, x)).value == 0) ++zeros;
            const auto word = codeword(f, a, d);
            std::uint64_t wt = 0;
            for (auto v : word)
                if (v != 0) ++wt;
            CHECK(wt == d.elements.size() - zeros);
        }
    }
}

TEST_CASE("golden weight distributions") {
    const WeightDistribution a = dist_of(3, 3, 0);
    CHECK(a.n == 6);
    CHECK(a.k == 3);
    CHECK(a.d == 3);
    CHECK(a.counts == Dist{{0, 1}, {3, 6}, {4, 12}, {5, 6}, {6, 2}});

    const WeightDistribution b = dist_of(3, 3, 1);
    CHECK(b.n == 12);
    CHECK(b.k == 3);
    CHECK(b.d == 6);
    CHECK(b.counts == Dist{{0, 1}, {6, 2}, {7, 6}, {8, 6}, {9, 6}, {10, 6}});

    const WeightDistribution c = dist_of(5, 2, 0);
    CHECK(c.n == 12);
    CHECK(c.k == 2);
    CHECK(c.counts == Dist{{0, 1}, {8, 4}, {10, 12}, {11, 8}});

    const WeightDistribution d = dist_of(5, 2, 1);
    CHECK(d.n == 7);
    CHECK(d.counts == Dist{{0, 1}, {5, 8}, {6, 12}, {7, 4}});
}

TEST_CASE("degenerate dimensions are computed, not assumed") {
    const WeightDistribution a = dist_of(3, 2, 0);
    CHECK(a.n == 1);
    CHECK(a.k == 1);  // kernel of a -> c(a) is nontrivial here
    CHECK(a.d == 1);
    CHECK(a.counts == Dist{{0, 1}, {1, 2}});

    const WeightDistribution b = dist_of(3, 4, 1);
    CHECK(b.n == 9);
    CHECK(b.k == 3);
    CHECK(b.counts == Dist{{0, 1}, {6, 24}, {9, 2}});
}

TEST_CASE("bucket kernel equals direct evaluation and its parallel twin") {
    for (const auto& [p, e] :
         {std::pair<std::uint32_t, std::uint32_t>{3, 3}, {5, 2}, {3, 4}}) {
        const FieldCtx f = FieldCtx::make(p, e);
        for (int i : {0, 1}) {
            const DefiningSet d = defining_set(f, i);
            const auto direct = kernels::weight_histogram_direct_serial(f, d);
            const auto serial = kernels::weight_histogram_buckets_serial(f, d);
            const auto parallel = kernels::weight_histogram_buckets_parallel(f, d);
            CHECK(direct == serial);
            CHECK(serial == parallel);
        }
    }
}

TEST_CASE("distribution is independent of the modulus") {
    const std::vector<std::uint32_t> second = second_modulus(3, 3);
    const FieldCtx reference = FieldCtx::make(3, 3);
    const FieldCtx other = FieldCtx::with_modulus(3, 3, second);
    REQUIRE(reference.modulus() != other.modulus());
    for (int i : {0, 1}) {
        const auto wa = weight_distribution(reference, defining_set(reference, i));
        const auto wb = weight_distribution(other, defining_set(other, i));
        CHECK(wa.counts == wb.counts);
        CHECK(wa.n == wb.n);
        CHECK(wa.k == wb.k);
    }
}

TEST_CASE("enumerator polynomial and CSV forms") {
    const WeightDistribution a = dist_of(3, 3, 0);
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> expect{
        {0, 1}, {3, 6}, {4, 12}, {5, 6}, {6, 2}};
    CHECK(enumerator_polynomial(a) == expect);
    CHECK(enumerator_string(a) == "1+6z^3+12z^4+6z^5+2z^6");
    CHECK(to_csv(a) == "weight,multiplicity\n0,1\n3,6\n4,12\n5,6\n6,2\n");

    const WeightDistribution c = dist_of(5, 2, 0);
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> expect2{
        {0, 1}, {8, 4}, {10, 12}, {11, 8}};
    CHECK(enumerator_polynomial(c) == expect2);

    WeightDistribution zero;
    zero.n = 0;
    zero.k = 0;
    zero.p = 3;
    zero.counts = {{0, 1}};
    CHECK(enumerator_polynomial(zero) ==
          std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 1}});
}

TEST_CASE("griesmer verdicts") {
    const WeightDistribution a = dist_of(3, 3, 0);  // [6,3,3] over F_3
    const GriesmerVerdict ga = griesmer(a);
    CHECK(ga.bound_n == 5);
    CHECK(ga.passes);
    CHECK_FALSE(ga.next_passes);  // [6,3,4] would need n >= 7
    CHECK(ga.classification == GriesmerClass::kOptimalCandidate);

    const WeightDistribution b = dist_of(5, 2, 1);  // [7,2,5] over F_5
    const GriesmerVerdict gb = griesmer(b);
    CHECK(gb.bound_n == 6);
    CHECK(gb.passes);
    CHECK(gb.classification == GriesmerClass::kOptimalCandidate);

    // repetition code [n,1,n] meets the bound with equality
    const WeightDistribution r = dist_of(3, 2, 0);
    const GriesmerVerdict gr = griesmer(r);
    CHECK(gr.bound_n == r.n);
    CHECK(gr.passes);

    const GriesmerVerdict g12 = griesmer(dist_of(3, 3, 1));  // [12,3,6]
    CHECK(g12.passes);
    CHECK(g12.classification == GriesmerClass::kInconclusive);
}

TEST_CASE("wt ratio is exact") {
    const WtRatio a = wt_ratio(dist_of(3, 3, 0));
    CHECK(a.wt_min == 3);
    CHECK(a.wt_max == 6);
    CHECK_FALSE(a.exceeds);  // 3/6 is not above 2/3

    const WtRatio b = wt_ratio(dist_of(7, 4, 0));
    CHECK(b.wt_min == 882);
    CHECK(b.wt_max == 1078);

    const WtRatio c = wt_ratio(dist_of(3, 2, 0));  // equal-weight code
    CHECK(c.wt_min == c.wt_max);
    CHECK(c.exceeds);
}

TEST_CASE("work budget is enforced") {
    const FieldCtx f = FieldCtx::make(3, 3);
    const DefiningSet d = defining_set(f, 1);
    CHECK_THROWS_AS(weight_distribution(f, d, WeightOptions{10, true}),
                    WorkBudgetExceededError);
}
