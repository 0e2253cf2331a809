#pragma once

/* Exact Cayley-ball enumeration by breadth-first search, and the
 * growth / relative-growth / distortion tabulators built on top of it.
 *
 * The search is sequential and the neighbor order is the fixed
 * generator order, so runs are reproducible.  A configurable cap on
 * the number of indexed elements makes exponential-growth groups fail
 * loudly instead of exhausting memory.
 */

#include "growthlab/function_table.hpp"
#include "growthlab/subgroup.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace growthlab {

inline constexpr std::size_t kDefaultBallBudget = 5'000'000;

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(int radius_reached, std::size_t elements)
        : std::runtime_error("ball budget exceeded after radius " +
                             std::to_string(radius_reached) + " (" +
                             std::to_string(elements) + " elements)"),
          radius_reached_(radius_reached), elements_(elements)
    {
    }
    int radius_reached() const { return radius_reached_; }
    std::size_t elements() const { return elements_; }

private:
    int radius_reached_;
    std::size_t elements_;
};

template <class G>
struct BallIndex {
    const G* group = nullptr;
    int radius = 0;
    std::vector<typename G::Elem> elems; // BFS discovery order, identity first
    std::vector<int> len;                // exact word length per element
    std::unordered_map<typename G::Elem, int, typename G::Hash> index;

    std::size_t size() const { return elems.size(); }

    std::optional<int> length_of(const typename G::Elem& e) const
    {
        auto it = index.find(e);
        if (it == index.end())
            return std::nullopt;
        return len[static_cast<std::size_t>(it->second)];
    }

    /* g_G(r) = #B_G(r) for r = 1..radius */
    FunctionTable growth() const
    {
        std::vector<BigInt> counts(static_cast<std::size_t>(radius), BigInt(0));
        std::vector<std::int64_t> per_len(static_cast<std::size_t>(radius) + 1, 0);
        for (int l : len)
            ++per_len[static_cast<std::size_t>(l)];
        BigInt acc = per_len[0];
        for (int r = 1; r <= radius; ++r) {
            acc += per_len[static_cast<std::size_t>(r)];
            counts[static_cast<std::size_t>(r - 1)] = acc;
        }
        return FunctionTable(std::move(counts));
    }

    /* CSV rows sorted by (length, key); keys are quoted because the
     * canonical text forms contain commas */
    std::string to_csv() const
    {
        std::vector<std::pair<int, std::string>> rows;
        rows.reserve(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i)
            rows.emplace_back(len[i], group->key(elems[i]));
        std::sort(rows.begin(), rows.end());
        std::ostringstream out;
        out << "key,length\n";
        for (const auto& [l, k] : rows)
            out << "\"" << k << "\"," << l << "\n";
        return out.str();
    }
};

template <class G>
BallIndex<G> ball(const G& g, int radius, std::size_t budget = kDefaultBallBudget)
{
    if (radius < 0)
        throw std::invalid_argument("ball: negative radius");
    BallIndex<G> b;
    b.group = &g;
    b.radius = radius;
    const auto gens = g.generators();

    b.elems.push_back(g.identity());
    b.len.push_back(0);
    b.index.emplace(g.identity(), 0);

    std::size_t head = 0;
    while (head < b.elems.size()) {
        const auto cur = b.elems[head];
        const int cur_len = b.len[head];
        ++head;
        if (cur_len == radius)
            continue;
        for (const auto& s : gens) {
            auto next = g.mul(cur, s);
            if (b.index.find(next) != b.index.end())
                continue;
            if (b.elems.size() >= budget)
                throw BudgetExceeded(cur_len, b.elems.size());
            b.index.emplace(next, static_cast<int>(b.elems.size()));
            b.elems.push_back(std::move(next));
            b.len.push_back(cur_len + 1);
        }
    }
    return b;
}

template <class G>
FunctionTable growth_function(const G& g, int radius,
                              std::size_t budget = kDefaultBallBudget)
{
    return ball(g, radius, budget).growth();
}

/* g_H^G(r) = #(B_G(r) ∩ H) for r = 1..radius */
template <class G>
FunctionTable relative_growth(const BallIndex<G>& b, const CyclicSubgroup<G>& sub)
{
    std::vector<std::int64_t> per_len(static_cast<std::size_t>(b.radius) + 1, 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (sub.contains(b.elems[i]))
            ++per_len[static_cast<std::size_t>(b.len[i])];
    std::vector<BigInt> counts;
    BigInt acc = per_len[0];
    for (int r = 1; r <= b.radius; ++r) {
        acc += per_len[static_cast<std::size_t>(r)];
        counts.push_back(acc);
    }
    return FunctionTable(std::move(counts));
}

/* Δ_H^G(r) = max{ |h|_Y : h in H, |h|_X <= r } for r = 1..radius */
template <class G>
FunctionTable distortion(const BallIndex<G>& b, const CyclicSubgroup<G>& sub)
{
    std::vector<BigInt> max_per_len(static_cast<std::size_t>(b.radius) + 1, BigInt(0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        auto n = sub.exponent_of(b.elems[i]);
        if (!n)
            continue;
        BigInt v = *n < 0 ? BigInt(-*n) : *n;
        auto& slot = max_per_len[static_cast<std::size_t>(b.len[i])];
        if (v > slot)
            slot = std::move(v);
    }
    std::vector<BigInt> table;
    BigInt acc = max_per_len[0];
    for (int r = 1; r <= b.radius; ++r) {
        if (max_per_len[static_cast<std::size_t>(r)] > acc)
            acc = max_per_len[static_cast<std::size_t>(r)];
        table.push_back(acc);
    }
    return FunctionTable(std::move(table));
}

/* exact |e|_X when it is <= the index radius */
template <class G>
std::optional<int> word_length(const BallIndex<G>& b, const typename G::Elem& e)
{
    return b.length_of(e);
}

} // namespace growthlab
