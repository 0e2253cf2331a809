#pragma once

/* Cyclic subgroups of the concrete groups, given by a generator of
 * infinite order.  Membership is decided exactly: a candidate exponent
 * is read off the canonical form and then verified by binary powering,
 * so a positive answer always comes with the unique n such that
 * h = g0^n.  Intrinsic length is |n|.
 *
 * The named presets are
 *   z^d   "axis:i"   coordinate axis  <e_i>
 *   heis3 "center"   <c>, the commutator subgroup
 *   bs12  "a"        <a>, exponentially distorted
 */

#include "growthlab/groups.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace growthlab {

/* exact exponent solvers; nullopt when h is not a power of g0 */

inline std::optional<BigInt> cyclic_exponent(const ZdGroup& g, const ZdGroup::Elem& g0,
                                             const ZdGroup::Elem& h)
{
    std::size_t pivot = g0.size();
    for (std::size_t i = 0; i < g0.size(); ++i)
        if (g0[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot == g0.size())
        throw std::invalid_argument("cyclic_exponent: generator has infinite order required");
    if (h[pivot] % g0[pivot] != 0)
        return std::nullopt;
    const std::int64_t n = h[pivot] / g0[pivot];
    for (std::size_t i = 0; i < g0.size(); ++i)
        if (h[i] != n * g0[i])
            return std::nullopt;
    (void)g;
    return BigInt(n);
}

inline std::optional<BigInt> cyclic_exponent(const HeisenbergGroup& g,
                                             const HeisenbergGroup::Elem& g0,
                                             const HeisenbergGroup::Elem& h)
{
    std::int64_t n = 0;
    if (g0.x != 0) {
        if (h.x % g0.x != 0)
            return std::nullopt;
        n = h.x / g0.x;
    } else if (g0.y != 0) {
        if (h.y % g0.y != 0)
            return std::nullopt;
        n = h.y / g0.y;
    } else if (g0.z != 0) {
        if (h.x != 0 || h.y != 0 || h.z % g0.z != 0)
            return std::nullopt;
        n = h.z / g0.z;
    } else {
        throw std::invalid_argument("cyclic_exponent: trivial generator");
    }
    return (group_pow(g, g0, BigInt(n)) == h) ? std::optional<BigInt>(BigInt(n))
                                              : std::nullopt;
}

inline std::optional<BigInt> cyclic_exponent(const BS12Group& g, const BS12Group::Elem& g0,
                                             const BS12Group::Elem& h)
{
    if (g0.k != 0) {
        if (h.k % g0.k != 0)
            return std::nullopt;
        const BigInt n(h.k / g0.k);
        return (group_pow(g, g0, n) == h) ? std::optional<BigInt>(n) : std::nullopt;
    }
    if (g0.m.p == 0)
        throw std::invalid_argument("cyclic_exponent: trivial generator");
    /* translation by m0: h must be the translation by n*m0 */
    if (h.k != 0)
        return std::nullopt;
    /* n = h.m / g0.m = (h.p * 2^{g0.q}) / (g0.p * 2^{h.q}) */
    BigInt num = h.m.p << g0.m.q;
    BigInt den = g0.m.p << h.m.q;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num % den != 0)
        return std::nullopt;
    const BigInt n = num / den;
    return (group_pow(g, g0, n) == h) ? std::optional<BigInt>(n) : std::nullopt;
}

inline std::optional<BigInt> cyclic_exponent(const FreeGroup& g, const FreeGroup::Elem& g0,
                                             const FreeGroup::Elem& h)
{
    if (g0.empty())
        throw std::invalid_argument("cyclic_exponent: trivial generator");
    /* cyclically reduce g0 = u v u^-1 */
    FreeGroup::Elem w = g0;
    FreeGroup::Elem u;
    while (w.size() >= 2 && w.front() == -w.back()) {
        u.push_back(w.front());
        w.erase(w.begin());
        w.pop_back();
    }
    if (h == g.identity())
        return BigInt(0);
    const std::size_t core = w.size();
    if (h.size() < 2 * u.size() + core)
        return std::nullopt;
    if ((h.size() - 2 * u.size()) % core != 0)
        return std::nullopt;
    const auto n_abs = static_cast<std::int64_t>((h.size() - 2 * u.size()) / core);
    for (const std::int64_t n : {n_abs, -n_abs}) {
        if (group_pow(g, g0, BigInt(n)) == h)
            return BigInt(n);
    }
    return std::nullopt;
}

/* ------------------------------------------------------------------ */

template <class G>
class CyclicSubgroup {
public:
    using Elem = typename G::Elem;

    CyclicSubgroup(const G& group, Elem generator, std::string id)
        : group_(&group), gen_(std::move(generator)), id_(std::move(id))
    {
    }

    const std::string& id() const { return id_; }
    const Elem& generator() const { return gen_; }

    std::optional<BigInt> exponent_of(const Elem& h) const
    {
        return cyclic_exponent(*group_, gen_, h);
    }

    bool contains(const Elem& h) const { return exponent_of(h).has_value(); }

    /* |g0^n|_Y = |n| for the one-generator set Y = {g0} */
    BigInt intrinsic_length(const Elem& h) const
    {
        auto n = exponent_of(h);
        if (!n)
            throw std::invalid_argument("intrinsic_length: element not in subgroup");
        return *n < 0 ? BigInt(-*n) : *n;
    }

    Elem power(const BigInt& n) const { return group_pow(*group_, gen_, n); }

    /* word-length of the generator in the ambient generating set; the
     * change-of-generators constant for the nesting g_H(r) <= g_H^G(cr) */
    int generator_ambient_cost() const { return ambient_cost_; }
    void set_generator_ambient_cost(int c) { ambient_cost_ = c; }

private:
    const G* group_;
    Elem gen_;
    std::string id_;
    int ambient_cost_ = 1;
};

/* left-coset key of e modulo <g0>, used to place jump edges in the
 * extension-length graph; supported for the preset subgroups only */

inline std::string coset_key(const ZdGroup& g, const ZdGroup::Elem& g0,
                             const ZdGroup::Elem& e)
{
    std::size_t pivot = g0.size();
    int nonzero = 0;
    for (std::size_t i = 0; i < g0.size(); ++i)
        if (g0[i] != 0) {
            ++nonzero;
            pivot = i;
        }
    if (nonzero != 1 || (g0[pivot] != 1 && g0[pivot] != -1))
        throw std::invalid_argument("coset_key: only coordinate axes supported in " + g.name());
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i == pivot)
            continue;
        s += std::to_string(e[i]);
        s += ";";
    }
    return s;
}

inline std::string coset_key(const HeisenbergGroup&, const HeisenbergGroup::Elem& g0,
                             const HeisenbergGroup::Elem& e)
{
    if (g0.x != 0 || g0.y != 0)
        throw std::invalid_argument("coset_key: only central subgroups supported in heis3");
    const std::int64_t step = g0.z < 0 ? -g0.z : g0.z;
    const std::int64_t rem = ((e.z % step) + step) % step;
    return std::to_string(e.x) + ";" + std::to_string(e.y) + ";" + std::to_string(rem);
}

inline std::string coset_key(const BS12Group&, const BS12Group::Elem& g0,
                             const BS12Group::Elem& e)
{
    if (g0.k != 0 || !(g0.m == Dyadic(1, 0)))
        throw std::invalid_argument("coset_key: only <a> supported in bs12");
    /* e * a^n = (k, m + 2^k n): the coset is k together with m mod 2^k */
    BigInt rem = 0;
    if (e.k + e.m.q > 0) {
        const BigInt mod = BigInt(1) << static_cast<unsigned>(e.k + e.m.q);
        rem = ((e.m.p % mod) + mod) % mod;
    }
    return std::to_string(e.k) + ";" + rem.str() + ";" + std::to_string(e.m.q);
}

inline std::string coset_key(const FreeGroup& g, const FreeGroup::Elem&,
                             const FreeGroup::Elem&)
{
    throw std::invalid_argument("coset_key: not supported for " + g.name());
}

/* subgroup presets by id */

inline CyclicSubgroup<ZdGroup> make_subgroup(const ZdGroup& g, const std::string& id)
{
    if (id.rfind("axis:", 0) == 0 || id == "axis") {
        const int i = (id == "axis") ? 0 : std::stoi(id.substr(5));
        if (i < 0 || i >= g.d)
            throw std::invalid_argument("make_subgroup: axis index out of range");
        auto e = g.identity();
        e[static_cast<std::size_t>(i)] = 1;
        return {g, e, "axis:" + std::to_string(i)};
    }
    throw std::invalid_argument("make_subgroup: unknown subgroup '" + id + "' for " + g.name());
}

inline CyclicSubgroup<HeisenbergGroup> make_subgroup(const HeisenbergGroup& g,
                                                     const std::string& id)
{
    if (id == "center" || id == "cyclic:c") {
        CyclicSubgroup<HeisenbergGroup> s(g, HeisenbergGroup::gen_c(), "center");
        /* with X = {a,b} the cheapest word for c is the commutator [a,b] */
        s.set_generator_ambient_cost(g.with_c ? 1 : 4);
        return s;
    }
    throw std::invalid_argument("make_subgroup: unknown subgroup '" + id + "' for heis3");
}

inline CyclicSubgroup<BS12Group> make_subgroup(const BS12Group& g, const std::string& id)
{
    if (id == "a" || id == "cyclic:a")
        return {g, BS12Group::gen_a(), "a"};
    throw std::invalid_argument("make_subgroup: unknown subgroup '" + id + "' for bs12");
}

inline CyclicSubgroup<FreeGroup> make_subgroup(const FreeGroup& g, const std::string& id)
{
    if (id.rfind("cyclic:", 0) == 0 && id.size() == 8) {
        const char ch = id[7];
        if (ch >= 'a' && ch < 'a' + g.rank)
            return {g, FreeGroup::Elem{static_cast<std::int8_t>(ch - 'a' + 1)},
                    std::string("cyclic:") + ch};
    }
    throw std::invalid_argument("make_subgroup: unknown subgroup '" + id + "' for " + g.name());
}

} // namespace growthlab
