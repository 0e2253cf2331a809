#pragma once

/* Length functions on group carriers:
 *
 *  - check_D over any carrier exposing size / length / inverse / product,
 *    with adapters for Cayley balls and for truncations of an infinite
 *    direct sum of Z/2Z;
 *  - extension_length: L(g) = min over factorizations of g into ambient
 *    generators (weight 1) and subgroup elements (weight l), computed as
 *    a shortest path on the ball graph with deterministic tie-breaking
 *    by canonical key order;
 *  - specialness_profile: the max/min profile f1, f2 of a length against
 *    intrinsic subgroup length, and the cube-gap witness pairs.
 */

#include "growthlab/ball.hpp"
#include "growthlab/lenfun.hpp"

#include <map>
#include <numeric>

namespace growthlab {

class IncompleteTabulation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* ------------------------------------------------------------------ */
/* carriers for the (D) condition                                      */

template <class G>
struct BallLengthCarrier {
    const BallIndex<G>* ball = nullptr;
    std::vector<std::int64_t> values; // aligned with ball->elems

    std::size_t size() const { return values.size(); }
    std::int64_t length(std::size_t i) const { return values[i]; }
    std::size_t identity() const { return 0; } // BFS discovers identity first

    std::size_t inverse(std::size_t i) const
    {
        auto it = ball->index.find(ball->group->inv(ball->elems[i]));
        if (it == ball->index.end())
            throw std::logic_error("BallLengthCarrier: ball is not symmetric");
        return static_cast<std::size_t>(it->second);
    }

    std::optional<std::size_t> product(std::size_t i, std::size_t j) const
    {
        auto it = ball->index.find(ball->group->mul(ball->elems[i], ball->elems[j]));
        if (it == ball->index.end())
            return std::nullopt;
        return static_cast<std::size_t>(it->second);
    }
};

struct DirectSumZ2Carrier {
    const LocallyFiniteLength* lf = nullptr;

    std::size_t size() const { return std::size_t(1) << lf->levels.size(); }
    std::int64_t length(std::size_t i) const
    {
        return lf->length(static_cast<std::uint32_t>(i));
    }
    std::size_t identity() const { return 0; }
    std::size_t inverse(std::size_t i) const { return i; } // involutions
    std::optional<std::size_t> product(std::size_t i, std::size_t j) const
    {
        return i ^ j;
    }
};

/* exhaustive (D) check over every enumerated pair whose product is
 * enumerated */
template <class Carrier>
CDReport check_D(const Carrier& c)
{
    CDReport rep;
    const std::size_t n = c.size();

    for (std::size_t i = 0; i < n && rep.sym_ok; ++i) {
        const bool is_id = i == c.identity();
        if ((c.length(i) == 0) != is_id || c.length(i) != c.length(c.inverse(i))) {
            rep.sym_ok = false;
            rep.sym_witness = static_cast<std::int64_t>(i);
        }
    }

    for (std::size_t i = 0; i < n && rep.subadd_ok; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto p = c.product(i, j);
            if (!p)
                continue;
            ++rep.checked_pairs;
            if (c.length(*p) > c.length(i) + c.length(j)) {
                rep.subadd_ok = false;
                rep.subadd_witness = {static_cast<std::int64_t>(i),
                                      static_cast<std::int64_t>(j)};
                break;
            }
        }

    std::vector<std::int64_t> sorted;
    sorted.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        sorted.push_back(c.length(i));
    std::sort(sorted.begin(), sorted.end());
    const std::int64_t r_top = std::min<std::int64_t>(sorted.back(), 4000);
    std::vector<std::int64_t> counts;
    for (std::int64_t r = 1; r <= r_top; ++r) {
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), r);
        counts.push_back(it - sorted.begin());
    }
    rep.base = detail::level_set_base(counts);
    return rep;
}

/* ------------------------------------------------------------------ */
/* extension of a subgroup length to the ambient ball                  */

/* L(g) = min over factorizations g = x_1 ... x_k, where x_i is an
 * ambient generator (weight 1) or a subgroup element (weight l of its
 * exponent).  Computed as a Dijkstra run from the identity over the
 * ball graph: unit edges to generator neighbors, jump edges between
 * members of the same left coset of the subgroup.  Throws
 * IncompleteTabulation if a jump offset falls outside l's horizon. */
template <class G>
std::vector<std::int64_t> extension_length(const BallIndex<G>& b,
                                           const CyclicSubgroup<G>& sub,
                                           const LengthTable& l)
{
    const G& g = *b.group;
    const std::size_t n = b.size();
    const auto gens = g.generators();

    /* deterministic tie order: rank by canonical key */
    std::vector<std::size_t> by_key(n);
    std::iota(by_key.begin(), by_key.end(), std::size_t(0));
    std::vector<std::string> keys(n);
    for (std::size_t i = 0; i < n; ++i)
        keys[i] = g.key(b.elems[i]);
    std::sort(by_key.begin(), by_key.end(),
              [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
    std::vector<std::int64_t> rank(n);
    for (std::size_t r = 0; r < n; ++r)
        rank[by_key[r]] = static_cast<std::int64_t>(r);

    /* coset classes with the subgroup exponent of each member relative
     * to the first member seen */
    std::map<std::string, std::vector<std::pair<std::size_t, BigInt>>> cosets;
    std::vector<const std::vector<std::pair<std::size_t, BigInt>>*> coset_of(n, nullptr);
    for (std::size_t i = 0; i < n; ++i) {
        auto& members = cosets[coset_key(g, sub.generator(), b.elems[i])];
        BigInt t = 0;
        if (!members.empty()) {
            const auto anchor = members.front().first;
            const auto off =
                sub.exponent_of(g.mul(g.inv(b.elems[anchor]), b.elems[i]));
            if (!off)
                throw std::logic_error("extension_length: inconsistent coset key");
            t = *off;
        }
        members.emplace_back(i, t);
    }
    for (auto& [key, members] : cosets)
        for (const auto& [i, t] : members)
            coset_of[i] = &members;

    constexpr std::int64_t INF = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(n, INF);
    std::vector<char> settled(n, 0);
    using QE = std::pair<std::int64_t, std::pair<std::int64_t, std::size_t>>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;

    const auto id_it = b.index.find(g.identity());
    if (id_it == b.index.end())
        throw std::logic_error("extension_length: ball without identity");
    const auto src = static_cast<std::size_t>(id_it->second);
    dist[src] = 0;
    pq.push({0, {rank[src], src}});

    const auto relax = [&](std::size_t v, std::int64_t nd) {
        if (nd < dist[v]) {
            dist[v] = nd;
            pq.push({nd, {rank[v], v}});
        }
    };

    BigInt my_exp_cache;
    while (!pq.empty()) {
        const auto [d, rv] = pq.top();
        const std::size_t u = rv.second;
        pq.pop();
        if (settled[u])
            continue;
        settled[u] = 1;
        for (const auto& s : gens) {
            auto it = b.index.find(g.mul(b.elems[u], s));
            if (it != b.index.end())
                relax(static_cast<std::size_t>(it->second), d + 1);
        }
        const auto& members = *coset_of[u];
        const BigInt* my_t = nullptr;
        for (const auto& [i, t] : members)
            if (i == u) {
                my_t = &t;
                break;
            }
        for (const auto& [v, t] : members) {
            if (v == u)
                continue;
            const BigInt off = t - *my_t;
            const BigInt mag = off < 0 ? BigInt(-off) : off;
            if (mag > l.horizon)
                throw IncompleteTabulation(
                    "extension_length: jump offset " + mag.str() +
                    " beyond the tabulated subgroup length (horizon " +
                    std::to_string(l.horizon) + ")");
            relax(v, d + l.l(mag.convert_to<std::int64_t>()));
        }
    }
    return dist;
}

/* ------------------------------------------------------------------ */
/* specialness profile                                                 */

struct ProfileEntry {
    BigInt intrinsic;   // |h|_Y
    std::int64_t value; // l(h)
};

struct SpecialnessProfile {
    FunctionTable f1;   // max l over the intrinsic sphere of radius r
    FunctionTable f2;   // min l over intrinsic length >= r (within horizon)
    Rational ratio_max; // max over r of f1(r)/f2(r)
    int ratio_argmax = 0;

    struct CubeGap {
        int k;
        int r;       // witness radius with f1(r) > k^3 f2(r)
        BigInt f1v, f2v;
    };
    std::vector<CubeGap> pairs;
};

/* entries must cover every intrinsic sphere 1..horizon of the carrier */
inline SpecialnessProfile specialness_profile(const std::vector<ProfileEntry>& entries,
                                              int horizon)
{
    std::vector<std::optional<std::int64_t>> mx(static_cast<std::size_t>(horizon) + 1),
        mn(static_cast<std::size_t>(horizon) + 1);
    for (const auto& e : entries) {
        if (e.intrinsic < 1 || e.intrinsic > horizon)
            continue;
        const auto r = e.intrinsic.convert_to<std::size_t>();
        if (!mx[r] || e.value > *mx[r])
            mx[r] = e.value;
        if (!mn[r] || e.value < *mn[r])
            mn[r] = e.value;
    }
    std::vector<BigInt> f1, f2;
    std::vector<std::int64_t> sphere_min(static_cast<std::size_t>(horizon) + 1);
    for (int r = 1; r <= horizon; ++r) {
        if (!mx[static_cast<std::size_t>(r)])
            throw std::invalid_argument("specialness_profile: sphere " + std::to_string(r) +
                                        " is not covered");
        f1.push_back(BigInt(*mx[static_cast<std::size_t>(r)]));
        sphere_min[static_cast<std::size_t>(r)] = *mn[static_cast<std::size_t>(r)];
    }
    std::vector<std::int64_t> suffix(static_cast<std::size_t>(horizon) + 2,
                                     std::numeric_limits<std::int64_t>::max());
    for (int r = horizon; r >= 1; --r)
        suffix[static_cast<std::size_t>(r)] =
            std::min(suffix[static_cast<std::size_t>(r) + 1],
                     sphere_min[static_cast<std::size_t>(r)]);
    for (int r = 1; r <= horizon; ++r)
        f2.push_back(BigInt(suffix[static_cast<std::size_t>(r)]));

    SpecialnessProfile out;
    out.f1 = FunctionTable(std::move(f1));
    out.f2 = FunctionTable(std::move(f2));
    out.ratio_max = Rational(out.f1.at(1), out.f2.at(1));
    out.ratio_argmax = 1;
    for (int r = 2; r <= horizon; ++r) {
        Rational cand(out.f1.at(r), out.f2.at(r));
        if (out.ratio_max < cand) {
            out.ratio_max = cand;
            out.ratio_argmax = r;
        }
    }
    for (int k = 1;; ++k) {
        const BigInt cube = BigInt(k) * k * k;
        std::optional<int> witness;
        for (int r = 1; r <= horizon && !witness; ++r)
            if (out.f1.at(r) > cube * out.f2.at(r))
                witness = r;
        if (!witness)
            break;
        out.pairs.push_back(
            {k, *witness, out.f1.at(*witness), out.f2.at(*witness)});
    }
    return out;
}

} // namespace growthlab
