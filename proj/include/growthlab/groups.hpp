#pragma once

/* Canonical-form arithmetic for the concrete groups the experiments
 * run on.  Each group type provides:
 *
 *   Elem                   unique canonical form, equality = identity
 *   identity / mul / inv   exact group operations
 *   generators()           symmetrized standard generating set, fixed order
 *   key(e)                 documented text form, e.g. "heis3:x,y,z"
 *   Hash                   hash functor over canonical forms
 *
 * Elements are immutable values and safe to share across threads.
 */

#include "growthlab/bigint.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace growthlab {

namespace detail {
inline void hash_combine(std::size_t& seed, std::size_t v)
{
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}
} // namespace detail

/* ------------------------------------------------------------------ */
/* Z^d, free abelian with the d coordinate generators                  */

struct ZdGroup {
    int d = 1;

    using Elem = std::vector<std::int64_t>;

    explicit ZdGroup(int dim) : d(dim)
    {
        if (d < 1)
            throw std::invalid_argument("ZdGroup: d must be >= 1");
    }

    std::string name() const { return "z^" + std::to_string(d); }

    Elem identity() const { return Elem(static_cast<std::size_t>(d), 0); }

    Elem mul(const Elem& a, const Elem& b) const
    {
        Elem r(a);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] += b[i];
        return r;
    }

    Elem inv(const Elem& a) const
    {
        Elem r(a);
        for (auto& v : r)
            v = -v;
        return r;
    }

    std::vector<Elem> generators() const
    {
        std::vector<Elem> gens;
        for (int i = 0; i < d; ++i) {
            Elem e = identity();
            e[static_cast<std::size_t>(i)] = 1;
            gens.push_back(e);
            e[static_cast<std::size_t>(i)] = -1;
            gens.push_back(e);
        }
        return gens;
    }

    std::string key(const Elem& e) const
    {
        std::string s = name() + ":";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(e[i]);
        }
        return s;
    }

    struct Hash {
        std::size_t operator()(const Elem& e) const
        {
            std::size_t h = 0x5bd1e995;
            for (auto v : e)
                detail::hash_combine(h, std::hash<std::int64_t>{}(v));
            return h;
        }
    };
};

/* ------------------------------------------------------------------ */
/* free group of rank k; elements are freely reduced words             */

struct FreeGroup {
    int rank = 2;

    /* letters 1..k, inverses -1..-k, no adjacent cancelling pair */
    using Elem = std::vector<std::int8_t>;

    explicit FreeGroup(int k) : rank(k)
    {
        if (k < 1 || k > 26)
            throw std::invalid_argument("FreeGroup: rank must be in [1, 26]");
    }

    std::string name() const { return "free:" + std::to_string(rank); }

    Elem identity() const { return {}; }

    Elem mul(const Elem& a, const Elem& b) const
    {
        Elem r(a);
        for (auto letter : b) {
            if (!r.empty() && r.back() == -letter)
                r.pop_back();
            else
                r.push_back(letter);
        }
        return r;
    }

    Elem inv(const Elem& a) const
    {
        Elem r;
        r.reserve(a.size());
        for (auto it = a.rbegin(); it != a.rend(); ++it)
            r.push_back(static_cast<std::int8_t>(-*it));
        return r;
    }

    std::vector<Elem> generators() const
    {
        std::vector<Elem> gens;
        for (int i = 1; i <= rank; ++i) {
            gens.push_back(Elem{static_cast<std::int8_t>(i)});
            gens.push_back(Elem{static_cast<std::int8_t>(-i)});
        }
        return gens;
    }

    /* lower case = generator, upper case = inverse: "abA" */
    std::string key(const Elem& e) const
    {
        std::string s = name() + ":";
        for (auto letter : e)
            s += static_cast<char>(letter > 0 ? ('a' + letter - 1) : ('A' - letter - 1));
        return s;
    }

    struct Hash {
        std::size_t operator()(const Elem& e) const
        {
            std::size_t h = 0x9747b28c;
            for (auto v : e)
                detail::hash_combine(h, static_cast<std::size_t>(static_cast<int>(v) + 32));
            return h;
        }
    };
};

/* ------------------------------------------------------------------ */
/* discrete Heisenberg group H^3 = <a,b,c | c=[a,b], [a,c]=[b,c]=1>    */

struct HeisElem {
    std::int64_t x = 0, y = 0, z = 0;
    bool operator==(const HeisElem&) const = default;
};

struct HeisenbergGroup {
    /* standard set is {a,b,c}; the {a,b} variant is exposed because
     * c = [a,b] already generates, and tables record which set was used */
    bool with_c = true;

    using Elem = HeisElem;

    std::string name() const { return with_c ? "heis3" : "heis3:ab"; }

    Elem identity() const { return {}; }

    /* same law as multiplying upper unitriangular 3x3 integer matrices
     * [[1,x,z],[0,1,y],[0,0,1]] */
    Elem mul(const Elem& a, const Elem& b) const
    {
        return {a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y};
    }

    Elem inv(const Elem& a) const { return {-a.x, -a.y, -a.z + a.x * a.y}; }

    static Elem gen_a() { return {1, 0, 0}; }
    static Elem gen_b() { return {0, 1, 0}; }
    static Elem gen_c() { return {0, 0, 1}; }

    std::vector<Elem> generators() const
    {
        std::vector<Elem> gens = {gen_a(), inv(gen_a()), gen_b(), inv(gen_b())};
        if (with_c) {
            gens.push_back(gen_c());
            gens.push_back(inv(gen_c()));
        }
        return gens;
    }

    std::string key(const Elem& e) const
    {
        return "heis3:" + std::to_string(e.x) + "," + std::to_string(e.y) + "," +
               std::to_string(e.z);
    }

    struct Hash {
        std::size_t operator()(const Elem& e) const
        {
            std::size_t h = std::hash<std::int64_t>{}(e.x);
            detail::hash_combine(h, std::hash<std::int64_t>{}(e.y));
            detail::hash_combine(h, std::hash<std::int64_t>{}(e.z));
            return h;
        }
    };
};

/* ------------------------------------------------------------------ */
/* Baumslag-Solitar BS(1,2) = <a,b | b a b^-1 = a^2>                   */

/* dyadic rational p / 2^q in lowest terms: q >= 0 and (q == 0 or p odd);
 * numerators are exact big integers since they grow like 2^radius */
struct Dyadic {
    BigInt p{0};
    int q = 0;

    Dyadic() = default;
    Dyadic(BigInt num, int den_exp) : p(std::move(num)), q(den_exp) { normalize(); }

    void normalize()
    {
        if (p == 0) {
            q = 0;
            return;
        }
        while (q > 0 && (p & 1) == 0) {
            p >>= 1;
            --q;
        }
        if (q < 0) {
            p <<= -q;
            q = 0;
        }
    }

    Dyadic operator+(const Dyadic& o) const
    {
        const int qq = std::max(q, o.q);
        return Dyadic((p << (qq - q)) + (o.p << (qq - o.q)), qq);
    }

    Dyadic operator-() const
    {
        Dyadic r(*this);
        r.p = -r.p;
        return r;
    }

    /* value * 2^k, k may be negative */
    Dyadic shifted(std::int64_t k) const
    {
        if (p == 0)
            return {};
        if (k >= 0) {
            const int drop = static_cast<int>(std::min<std::int64_t>(k, q));
            return Dyadic(p << (k - drop), q - drop);
        }
        return Dyadic(p, q + static_cast<int>(-k));
    }

    bool operator==(const Dyadic&) const = default;
};

/* element t -> 2^k t + m acting on dyadic rationals; a = (0, 1), b = (1, 0) */
struct BS12Elem {
    std::int64_t k = 0;
    Dyadic m;
    bool operator==(const BS12Elem&) const = default;
};

struct BS12Group {
    using Elem = BS12Elem;

    std::string name() const { return "bs12"; }

    Elem identity() const { return {}; }

    /* composition of affine maps, right factor applied first:
     * (k1,m1)(k2,m2) = (k1+k2, 2^{k1} m2 + m1); under this law
     * b a b^-1 = (0, 2) = a^2, the defining relation */
    Elem mul(const Elem& a, const Elem& b) const
    {
        return {a.k + b.k, b.m.shifted(a.k) + a.m};
    }

    Elem inv(const Elem& a) const { return {-a.k, (-a.m).shifted(-a.k)}; }

    static Elem gen_a() { return {0, Dyadic(1, 0)}; }
    static Elem gen_b() { return {1, Dyadic(0, 0)}; }

    std::vector<Elem> generators() const
    {
        return {gen_a(), inv(gen_a()), gen_b(), inv(gen_b())};
    }

    std::string key(const Elem& e) const
    {
        return "bs12:" + std::to_string(e.k) + "," + e.m.p.str() + "," +
               std::to_string(e.m.q);
    }

    struct Hash {
        std::size_t operator()(const Elem& e) const
        {
            std::size_t h = std::hash<std::int64_t>{}(e.k);
            detail::hash_combine(h, boost::hash<BigInt>{}(e.m.p));
            detail::hash_combine(h, std::hash<int>{}(e.m.q));
            return h;
        }
    };
};

/* ------------------------------------------------------------------ */

/* e^n by binary powering; n may be negative */
template <class G>
typename G::Elem group_pow(const G& g, typename G::Elem base, BigInt n)
{
    if (n < 0) {
        base = g.inv(base);
        n = -n;
    }
    typename G::Elem r = g.identity();
    while (n > 0) {
        if ((n & 1) != 0)
            r = g.mul(r, base);
        base = g.mul(base, base);
        n >>= 1;
    }
    return r;
}

/* evaluate a word given as indices into gens() left to right */
template <class G>
typename G::Elem eval_word(const G& g, const std::vector<typename G::Elem>& gens,
                           const std::vector<int>& word)
{
    typename G::Elem r = g.identity();
    for (int i : word)
        r = g.mul(r, gens[static_cast<std::size_t>(i)]);
    return r;
}

} // namespace growthlab
