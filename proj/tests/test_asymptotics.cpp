#include "growthlab/asymptotics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

using namespace growthlab;

namespace {

FunctionTable table_of(std::vector<std::int64_t> vals)
{
    std::vector<BigInt> v(vals.begin(), vals.end());
    return FunctionTable(std::move(v));
}

/* enumeration oracle: max over all partitions of r of the part sums */
BigInt brute_closure(const FunctionTable& f, int r)
{
    std::function<BigInt(int, int)> rec = [&](int rest, int max_part) -> BigInt {
        if (rest == 0)
            return 0;
        BigInt best = -1;
        for (int part = std::min(rest, max_part); part >= 1; --part) {
            BigInt cand = f.at(part) + rec(rest - part, part);
            if (cand > best)
                best = cand;
        }
        return best;
    };
    return rec(r, r);
}

std::int64_t brute_partitions(int r)
{
    std::function<std::int64_t(int, int)> rec = [&](int rest, int max_part) -> std::int64_t {
        if (rest == 0)
            return 1;
        std::int64_t c = 0;
        for (int part = std::min(rest, max_part); part >= 1; --part)
            c += rec(rest - part, part);
        return c;
    };
    return rec(r, r);
}

FunctionTable random_table(std::mt19937_64& rng, int horizon, std::int64_t hi)
{
    return FunctionTable::from_generator(
        horizon, [&](int) { return BigInt(static_cast<std::int64_t>(rng() % (hi + 1))); });
}

} // namespace

TEST_CASE("superadditive closure of the constant-one table is the identity map")
{
    const auto f = FunctionTable::from_generator(10, [](int) { return BigInt(1); });
    const auto g = superadditive_closure(f);
    for (int r = 1; r <= 10; ++r)
        CHECK(g.at(r) == r); // partition into r ones
}

TEST_CASE("closure fixes an already superadditive table")
{
    const auto f = FunctionTable::from_generator(12, [](int r) { return BigInt(r); });
    CHECK(superadditive_closure(f) == f);
    const auto q = FunctionTable::from_generator(12, [](int r) { return BigInt(r) * r; });
    CHECK(superadditive_closure(q) == q);
}

TEST_CASE("closure agrees with explicit partition enumeration")
{
    const auto f = table_of({1, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10});
    const auto g = superadditive_closure(f);
    for (int r = 1; r <= 12; ++r)
        CHECK(g.at(r) == brute_closure(f, r));
    CHECK(g.at(4) == brute_closure(f, 4)); // max over the 5 partitions of 4

    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const auto h = random_table(rng, 14, 30);
        const auto cl = superadditive_closure(h);
        for (int r = 1; r <= 14; ++r)
            REQUIRE(cl.at(r) == brute_closure(h, r));
    }
}

TEST_CASE("closure is idempotent and superadditive")
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 25; ++t) {
        const auto f = random_table(rng, 20, 40);
        const auto g = superadditive_closure(f);
        CHECK(is_superadditive(g).ok);
        CHECK(superadditive_closure(g) == g);
        for (int r = 1; r <= 20; ++r)
            CHECK(g.at(r) >= f.at(r));
    }
}

TEST_CASE("closure is minimal among superadditive majorants")
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        const auto f = random_table(rng, 20, 40);
        const auto g = superadditive_closure(f);
        /* majorant from nondecreasing increments (hence superadditive),
         * lifted by a multiple of the identity to dominate f */
        std::vector<BigInt> h(20);
        BigInt step = rng() % 3, acc = 0;
        for (int r = 1; r <= 20; ++r) {
            step += rng() % 3;
            acc += step;
            h[static_cast<std::size_t>(r - 1)] = acc;
        }
        BigInt lift = 0;
        for (int r = 1; r <= 20; ++r) {
            const BigInt need = ceil_div(f.at(r) - h[static_cast<std::size_t>(r - 1)], BigInt(r));
            if (need > lift)
                lift = need;
        }
        FunctionTable maj = FunctionTable::from_generator(20, [&](int r) {
            return h[static_cast<std::size_t>(r - 1)] + lift * r;
        });
        REQUIRE(is_superadditive(maj).ok);
        for (int r = 1; r <= 20; ++r) {
            REQUIRE(maj.at(r) >= f.at(r));
            CHECK(maj.at(r) >= g.at(r));
        }
    }
}

TEST_CASE("superadditivity and subadditivity predicates with least witnesses")
{
    const auto sq = FunctionTable::from_generator(30, [](int r) { return BigInt(r) * r; });
    CHECK(is_superadditive(sq).ok);

    const auto bad = table_of({3, 1, 9, 9});
    const auto v = is_superadditive(bad);
    REQUIRE_FALSE(v.ok);
    CHECK(v.violation->r == 1);
    CHECK(v.violation->s == 1); // f(2) = 1 < 3 + 3

    const auto log2t = FunctionTable::from_generator(64, [](int r) {
        int b = 0;
        while ((1 << b) < r + 1)
            ++b;
        return BigInt(b);
    });
    CHECK(is_subadditive(log2t).ok);

    const auto id = FunctionTable::from_generator(16, [](int r) { return BigInt(r); });
    CHECK(is_subadditive(id).ok);
    CHECK(is_superadditive(id).ok);

    const auto sub_bad = table_of({1, 3, 4});
    const auto w = is_subadditive(sub_bad);
    REQUIRE_FALSE(w.ok);
    CHECK(w.violation->r == 1);
    CHECK(w.violation->s == 1);

    CHECK(is_nondecreasing(id).ok);
    CHECK_FALSE(is_nondecreasing(table_of({2, 1})).ok);
}

TEST_CASE("sim-order witnesses")
{
    const auto id = FunctionTable::from_generator(40, [](int r) { return BigInt(r); });
    const auto dbl = FunctionTable::from_generator(40, [](int r) { return BigInt(2) * r; });

    auto w = preceq_sim(id, dbl, 8);
    REQUIRE(w);
    CHECK(w->c == 1);
    CHECK(w->r_max == 40);

    w = preceq_sim(dbl, id, 8);
    REQUIRE(w);
    CHECK(w->c == 2); // 2r <= id(2r)
    CHECK(w->r_max == 20);

    /* r^2 against 2^r: c = 1 fails at r = 3 (9 > 8), c = 2 works */
    const auto sq = FunctionTable::from_generator(20, [](int r) { return BigInt(r) * r; });
    const auto ex = FunctionTable::from_generator(20, [](int r) { return BigInt(1) << r; });
    w = preceq_sim(sq, ex, 8);
    REQUIRE(w);
    CHECK(w->c == 2);
}

TEST_CASE("approx-order witnesses and two-sided search")
{
    const auto id = FunctionTable::from_generator(60, [](int r) { return BigInt(r); });
    const auto aff = FunctionTable::from_generator(60, [](int r) { return BigInt(3) * r + 2; });
    auto w = preceq_approx(id, aff, 8);
    REQUIRE(w);
    CHECK(w->c == 1);

    /* r^2 is not approx-below r at any c <= 5 on a long horizon */
    const auto sq = FunctionTable::from_generator(1000, [](int r) { return BigInt(r) * r; });
    const auto lin = FunctionTable::from_generator(1000, [](int r) { return BigInt(r); });
    CHECK_FALSE(preceq_approx(sq, lin, 5));

    const auto both = approx_equiv(id, id, 4);
    REQUIRE(both);
    CHECK(both->first.c == 1);
    CHECK(both->second.c == 1);
}

TEST_CASE("theta equivalence is pointwise and requires matching horizons")
{
    const auto id = FunctionTable::from_generator(100, [](int r) { return BigInt(r); });
    const auto dbl = FunctionTable::from_generator(100, [](int r) { return BigInt(2) * r; });
    auto w = theta_equiv(id, id, 4);
    REQUIRE(w);
    CHECK(w->c == 1);

    w = theta_equiv(dbl, id, 4);
    REQUIRE(w);
    CHECK(w->c == 2);

    const auto sq = FunctionTable::from_generator(100, [](int r) { return BigInt(r) * r; });
    CHECK_FALSE(theta_equiv(id, sq, 50)); // fails pointwise beyond r = 50

    const auto shorter = FunctionTable::from_generator(60, [](int r) { return BigInt(r); });
    CHECK_THROWS_AS(theta_equiv(id, shorter, 4), std::invalid_argument);
}

TEST_CASE("witnesses compose transitively with constant c1*c2")
{
    std::mt19937_64 rng(14);
    for (int t = 0; t < 20; ++t) {
        /* nondecreasing random tables with enough headroom for witnesses */
        const int N = 120;
        std::vector<BigInt> fv, gv, hv;
        BigInt f = 1, g = 1, h = 1;
        for (int r = 1; r <= N; ++r) {
            f += rng() % 3;
            g = std::max(g + rng() % 4, f); // g >= f pointwise
            h = std::max(h + rng() % 5, g);
            fv.push_back(f);
            gv.push_back(g);
            hv.push_back(h);
        }
        const FunctionTable F(fv), G(gv), H(hv);
        const auto w1 = preceq_approx(F, G, 6);
        const auto w2 = preceq_approx(G, H, 6);
        REQUIRE(w1);
        REQUIRE(w2);
        const int c = w1->c * w2->c;
        REQUIRE(c <= w1->c * w2->c * (w1->c + w2->c));
        for (int r = 1; r * c <= N; ++r)
            CHECK(F.at(r) <= c * H.at(c * r));
    }
}

TEST_CASE("a nonzero superadditive table dominates the identity")
{
    std::mt19937_64 rng(15);
    for (int t = 0; t < 20; ++t) {
        const auto base = random_table(rng, 30, 10);
        auto f = superadditive_closure(base);
        if (f.at(1) < 1)
            f = FunctionTable::from_generator(30, [&](int r) { return f.at(r) + r; });
        REQUIRE(is_superadditive(f).ok);
        REQUIRE(f.at(1) >= 1);
        const auto id = FunctionTable::from_generator(30, [](int r) { return BigInt(r); });
        CHECK(preceq_sim(id, f, 4).has_value());
    }
}

TEST_CASE("partition counts")
{
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(5) == 7);
    for (int r = 0; r <= 30; ++r)
        CHECK(partition_count(r) == brute_partitions(r));

    /* bounded-part table columns: t[r][n] telescopes to p(n) at r = n */
    const auto t = partition_table(20);
    for (int n = 0; n <= 20; ++n)
        CHECK(t[20][static_cast<std::size_t>(n)] == partition_count(n));

    /* exponential-of-sqrt envelope on the tested horizon */
    bool found = false;
    for (int c = 1; c <= 10 && !found; ++c) {
        bool ok = true;
        for (int r = 1; r <= 200 && ok; ++r)
            ok = partition_count(r) <=
                 BigInt(c) * pow_big(2, static_cast<std::uint64_t>(
                                            isqrt64(static_cast<std::int64_t>(c) * r)));
        found = ok;
    }
    CHECK(found);
}
