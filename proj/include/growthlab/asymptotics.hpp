#pragma once

/* Finite-horizon algebra of growth-type functions: the superadditive
 * closure, monotonicity predicates, the three comparison relations and
 * the integer partition function.
 *
 * Every verdict here is a finite-horizon verdict.  Witnesses carry the
 * range of arguments that was actually checked, so callers can tell
 * "verified up to N" apart from an asymptotic statement.
 */

#include "growthlab/function_table.hpp"

#include <optional>
#include <utility>

namespace growthlab {

/* ------------------------------------------------------------------ */
/* closure and predicates                                              */

/* Least superadditive majorant of f, tabulated on f's horizon:
 *   g(r) = max over partitions r = n_1+...+n_s of  f(n_1)+...+f(n_s),
 * computed by g(r) = max(f(r), max_{1<=k<=r/2} g(k)+g(r-k)).
 */
inline FunctionTable superadditive_closure(const FunctionTable& f)
{
    const int n = f.horizon();
    std::vector<BigInt> g(static_cast<std::size_t>(n));
    for (int r = 1; r <= n; ++r) {
        BigInt best = f.at(r);
        for (int k = 1; k <= r / 2; ++k) {
            BigInt cand = g[static_cast<std::size_t>(k - 1)] +
                          g[static_cast<std::size_t>(r - k - 1)];
            if (cand > best)
                best = std::move(cand);
        }
        g[static_cast<std::size_t>(r - 1)] = std::move(best);
    }
    return FunctionTable(std::move(g));
}

struct PairViolation {
    int r = 0;
    int s = 0;
};

struct PredicateVerdict {
    bool ok = true;
    std::optional<PairViolation> violation; // lexicographically least
};

inline PredicateVerdict is_superadditive(const FunctionTable& f)
{
    const int n = f.horizon();
    for (int r = 1; r < n; ++r)
        for (int s = 1; r + s <= n; ++s)
            if (f.at(r + s) < f.at(r) + f.at(s))
                return {false, PairViolation{r, s}};
    return {};
}

inline PredicateVerdict is_subadditive(const FunctionTable& f)
{
    const int n = f.horizon();
    for (int r = 1; r < n; ++r)
        for (int s = 1; r + s <= n; ++s)
            if (f.at(r + s) > f.at(r) + f.at(s))
                return {false, PairViolation{r, s}};
    return {};
}

inline PredicateVerdict is_nondecreasing(const FunctionTable& f)
{
    for (int r = 1; r < f.horizon(); ++r)
        if (f.at(r + 1) < f.at(r))
            return {false, PairViolation{r, r + 1}};
    return {};
}

/* ------------------------------------------------------------------ */
/* comparison relations                                                */

enum class Relation { Sim, Approx, Theta };

struct EquivalenceWitness {
    Relation relation = Relation::Sim;
    int c = 1;          // the constant found, smallest first
    int r_min = 1;      // range of r on which the inequality was checked
    int r_max = 0;
};

/* f(r) <= g(c r): least c <= c_max making the inequality hold on the
 * whole evaluable range.  A witness is only produced when at least one
 * argument was checkable; an empty range is not a success. */
inline std::optional<EquivalenceWitness>
preceq_sim(const FunctionTable& f, const FunctionTable& g, int c_max)
{
    if (c_max < 1)
        throw std::invalid_argument("preceq_sim: c_max must be >= 1");
    for (int c = 1; c <= c_max; ++c) {
        const int r_max = std::min(f.horizon(), g.horizon() / c);
        if (r_max < 1)
            break;
        bool ok = true;
        for (int r = 1; r <= r_max && ok; ++r)
            ok = f.at(r) <= g.at(c * r);
        if (ok)
            return EquivalenceWitness{Relation::Sim, c, 1, r_max};
    }
    return std::nullopt;
}

/* f(r) <= c * g(c r) */
inline std::optional<EquivalenceWitness>
preceq_approx(const FunctionTable& f, const FunctionTable& g, int c_max)
{
    if (c_max < 1)
        throw std::invalid_argument("preceq_approx: c_max must be >= 1");
    for (int c = 1; c <= c_max; ++c) {
        const int r_max = std::min(f.horizon(), g.horizon() / c);
        if (r_max < 1)
            break;
        bool ok = true;
        for (int r = 1; r <= r_max && ok; ++r)
            ok = f.at(r) <= c * g.at(c * r);
        if (ok)
            return EquivalenceWitness{Relation::Approx, c, 1, r_max};
    }
    return std::nullopt;
}

inline std::optional<std::pair<EquivalenceWitness, EquivalenceWitness>>
approx_equiv(const FunctionTable& f, const FunctionTable& g, int c_max)
{
    auto fw = preceq_approx(f, g, c_max);
    if (!fw)
        return std::nullopt;
    auto gw = preceq_approx(g, f, c_max);
    if (!gw)
        return std::nullopt;
    return std::make_pair(*fw, *gw);
}

/* pointwise two-sided bound, no argument rescaling; horizons must agree */
inline std::optional<EquivalenceWitness>
theta_equiv(const FunctionTable& f, const FunctionTable& g, int c_max)
{
    if (f.horizon() != g.horizon())
        throw std::invalid_argument("theta_equiv: horizons differ");
    if (c_max < 1)
        throw std::invalid_argument("theta_equiv: c_max must be >= 1");
    const int n = f.horizon();
    for (int c = 1; c <= c_max; ++c) {
        bool ok = true;
        for (int r = 1; r <= n && ok; ++r)
            ok = f.at(r) <= c * g.at(r) && g.at(r) <= c * f.at(r);
        if (ok)
            return EquivalenceWitness{Relation::Theta, c, 1, n};
    }
    return std::nullopt;
}

/* ------------------------------------------------------------------ */
/* partition function                                                  */

/* p(r): number of partitions of r into positive summands, p(0) = 1.
 * Bounded-part dynamic program, exact. */
inline BigInt partition_count(int r)
{
    if (r < 0)
        throw std::invalid_argument("partition_count: negative argument");
    std::vector<BigInt> dp(static_cast<std::size_t>(r) + 1, BigInt(0));
    dp[0] = 1;
    for (int part = 1; part <= r; ++part)
        for (int n = part; n <= r; ++n)
            dp[static_cast<std::size_t>(n)] += dp[static_cast<std::size_t>(n - part)];
    return dp[static_cast<std::size_t>(r)];
}

/* Full bounded-part table: row[k][n] = #partitions of n into parts <= k.
 * Exposed for the recurrence cross-checks in the tests. */
inline std::vector<std::vector<BigInt>> partition_table(int r)
{
    std::vector<std::vector<BigInt>> t(
        static_cast<std::size_t>(r) + 1,
        std::vector<BigInt>(static_cast<std::size_t>(r) + 1, BigInt(0)));
    for (int k = 0; k <= r; ++k)
        t[static_cast<std::size_t>(k)][0] = 1;
    for (int k = 1; k <= r; ++k)
        for (int n = 1; n <= r; ++n) {
            t[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] =
                t[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n)];
            if (n >= k)
                t[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] +=
                    t[static_cast<std::size_t>(k)][static_cast<std::size_t>(n - k)];
        }
    return t;
}

} // namespace growthlab
