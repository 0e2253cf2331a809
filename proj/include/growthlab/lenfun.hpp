#pragma once

/* Candidate length functions on Z: construction and verification.
 *
 *  - LengthTable: symmetric tabulation of l on 0..M with exactness
 *    metadata (which entries are certified true minima, and up to
 *    which level the set {n : l(n) <= r} is provably complete).
 *  - check_C: symmetry / subadditivity / exponential-level-set report.
 *  - signed_sum_length: l(n) = min total weight of a signed sum of
 *    system values reaching n, by Dijkstra on a bounded window.
 *  - build_from_superadditive: l(r) = min{m : f(m) >= r}.
 *  - ps_system_from_target: the doubling weight system driving a
 *    prescribed distortion.
 *  - locally_finite_length: weighted lengths on an infinite direct sum
 *    of Z/2Z, truncated to its first i_max coordinates.
 */

#include "growthlab/asymptotics.hpp"
#include "growthlab/function_table.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <queue>
#include <sstream>

namespace growthlab {

class HorizonExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* ------------------------------------------------------------------ */
/* LengthTable                                                         */

struct LengthTable {
    std::int64_t horizon = 0;      // M
    std::vector<std::int64_t> v;   // l(0..M); l(-n) = l(n) by construction

    /* entries with value <= exact_value_bound are certified true minima,
     * and every integer n with l(n) <= exact_value_bound appears in the
     * table provided escape_ratio * r stays within the horizon */
    std::int64_t exact_value_bound = std::numeric_limits<std::int64_t>::max();
    std::optional<Rational> escape_ratio; // max |n| gained per unit of weight
    bool nondecreasing = false;           // verified by the producing builder

    std::int64_t l(std::int64_t n) const
    {
        if (n < 0)
            n = -n;
        if (n > horizon)
            throw std::out_of_range("LengthTable::l: |n| beyond horizon");
        return v[static_cast<std::size_t>(n)];
    }

    /* largest r such that {n : l(n) <= r} is provably complete in the table */
    std::int64_t complete_level() const
    {
        std::int64_t bound = exact_value_bound;
        if (escape_ratio && escape_ratio->num > 0) {
            const BigInt by_ratio = floor_div(BigInt(horizon) * escape_ratio->den,
                                              escape_ratio->num);
            if (by_ratio < bound)
                bound = to_i64_checked(by_ratio, "complete_level");
        }
        return bound;
    }

    std::string to_csv() const
    {
        std::ostringstream out;
        out << "n,l\n";
        for (std::int64_t n = 0; n <= horizon; ++n)
            out << n << "," << v[static_cast<std::size_t>(n)] << "\n";
        return out.str();
    }

    static LengthTable from_csv_text(const std::string& text)
    {
        std::istringstream in(text);
        std::string line;
        if (!std::getline(in, line))
            throw std::invalid_argument("LengthTable: empty CSV");
        if (line != "n,l" && line != "n,l\r")
            throw std::invalid_argument("LengthTable: expected header 'n,l'");
        LengthTable t;
        std::int64_t expected = 0;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            const auto comma = line.find(',');
            const std::int64_t n = std::stoll(line.substr(0, comma));
            if (n != expected)
                throw std::invalid_argument("LengthTable: rows must be 0..M without gaps");
            t.v.push_back(std::stoll(line.substr(comma + 1)));
            ++expected;
        }
        if (t.v.empty())
            throw std::invalid_argument("LengthTable: no rows");
        t.horizon = static_cast<std::int64_t>(t.v.size()) - 1;
        if (t.v[0] != 0)
            throw std::invalid_argument("LengthTable: l(0) must be 0");
        t.nondecreasing = std::is_sorted(t.v.begin(), t.v.end());
        return t;
    }
};

/* ------------------------------------------------------------------ */
/* the (C) condition report                                            */

struct CDReport {
    bool sym_ok = true;                 // (C1)/(D1): symmetry and l = 0 iff identity
    std::optional<std::int64_t> sym_witness;
    bool subadd_ok = true;              // (C2)/(D2)
    std::optional<std::pair<std::int64_t, std::int64_t>> subadd_witness;
    std::optional<int> base;            // (C3)/(D3): least a >= 2, absent if > 64
    std::int64_t checked_pairs = 0;

    bool all_ok() const { return sym_ok && subadd_ok && base.has_value(); }

    std::string to_json() const
    {
        nlohmann::json j;
        j["c1_ok"] = sym_ok;
        if (sym_witness)
            j["c1_witness"] = *sym_witness;
        j["c2_ok"] = subadd_ok;
        if (subadd_witness)
            j["c2_witness"] = {subadd_witness->first, subadd_witness->second};
        if (base)
            j["c3_base"] = *base;
        else
            j["c3_base"] = nullptr;
        j["checked_pairs"] = checked_pairs;
        return j.dump();
    }
};

namespace detail {

/* least a in [2, 64] with counts(r) <= a^r for all r; counts must be
 * nondecreasing in r */
inline std::optional<int> level_set_base(const std::vector<std::int64_t>& counts)
{
    const auto total = counts.empty() ? 0 : counts.back();
    for (int a = 2; a <= 64; ++a) {
        BigInt pw = 1;
        bool ok = true;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            pw *= a;
            if (BigInt(counts[i]) > pw) {
                ok = false;
                break;
            }
            if (pw > total)
                break; // counts are capped by the carrier size, rest pass
        }
        if (ok)
            return a;
    }
    return std::nullopt;
}

} // namespace detail

/* Exhaustive (C) check.  The subadditivity scan is quadratic in the
 * horizon; for long nondecreasing tables it switches to an equivalent
 * check over value blocks (the worst pair for a pair of values is
 * attained at the right ends of their blocks). */
inline CDReport check_C(const LengthTable& t)
{
    CDReport rep;
    const std::int64_t M = t.horizon;

    if (t.v[0] != 0) {
        rep.sym_ok = false;
        rep.sym_witness = 0;
    }
    for (std::int64_t n = 1; n <= M && rep.sym_ok; ++n)
        if (t.v[static_cast<std::size_t>(n)] < 1) {
            rep.sym_ok = false;
            rep.sym_witness = n;
        }

    const bool nondec = t.nondecreasing || std::is_sorted(t.v.begin(), t.v.end());
    if (nondec) {
        /* value blocks: (value, first index, last index) */
        std::vector<std::array<std::int64_t, 3>> blocks;
        for (std::int64_t n = 1; n <= M; ++n) {
            const std::int64_t val = t.v[static_cast<std::size_t>(n)];
            if (blocks.empty() || blocks.back()[0] != val)
                blocks.push_back({val, n, n});
            else
                blocks.back()[2] = n;
        }
        for (std::size_t i = 0; i < blocks.size() && rep.subadd_ok; ++i)
            for (std::size_t j = i; j < blocks.size() && rep.subadd_ok; ++j) {
                const auto [u, su, fu] = blocks[i];
                const auto [w, sw, fw] = blocks[j];
                ++rep.checked_pairs;
                std::int64_t n, m;
                if (fu + fw <= M) {
                    n = fu;
                    m = fw;
                } else if (su + sw <= M) {
                    n = std::max(su, M - fw);
                    m = M - n;
                } else {
                    continue;
                }
                if (t.l(n + m) > u + w) {
                    rep.subadd_ok = false;
                    rep.subadd_witness = {n, m};
                }
            }
        /* the difference case l(m-n) <= l(n)+l(m) is implied by
         * monotonicity together with l >= 0 */
    } else {
        if (M > 5000)
            throw std::invalid_argument(
                "check_C: table too large for the exhaustive pair scan");
        for (std::int64_t n = 1; n <= M && rep.subadd_ok; ++n)
            for (std::int64_t m = n; m <= M && rep.subadd_ok; ++m) {
                ++rep.checked_pairs;
                if (n + m <= M && t.l(n + m) > t.l(n) + t.l(m)) {
                    rep.subadd_ok = false;
                    rep.subadd_witness = {n, m};
                    break;
                }
                if (t.l(m - n) > t.l(n) + t.l(m)) {
                    rep.subadd_ok = false;
                    rep.subadd_witness = {n, -m};
                    break;
                }
            }
    }

    /* (C3): counts over the symmetric tabulated domain */
    std::vector<std::int64_t> sorted(t.v.begin() + 1, t.v.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::int64_t> counts;
    const std::int64_t r_top = std::min<std::int64_t>(M, 4000);
    counts.reserve(static_cast<std::size_t>(r_top));
    for (std::int64_t r = 1; r <= r_top; ++r) {
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), r);
        counts.push_back(1 + 2 * (it - sorted.begin()));
    }
    rep.base = detail::level_set_base(counts);
    return rep;
}

/* ------------------------------------------------------------------ */
/* weighted systems and the signed-sum engine                          */

struct WeightedSystem {
    struct Term {
        BigInt n; // generator value, strictly increasing, n_1 = 1
        BigInt a; // positive weight
    };
    std::vector<Term> terms;

    void validate() const
    {
        if (terms.empty())
            throw std::invalid_argument("WeightedSystem: empty");
        if (terms.front().n != 1)
            throw std::invalid_argument("WeightedSystem: n_1 must be 1");
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (terms[i].a < 1)
                throw std::invalid_argument("WeightedSystem: weights must be positive");
            if (i > 0 && terms[i].n <= terms[i - 1].n)
                throw std::invalid_argument("WeightedSystem: values must strictly increase");
        }
    }

    std::string to_json() const
    {
        std::ostringstream out;
        out << "{\"pairs\": [";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i)
                out << ", ";
            out << "[\"" << terms[i].n.str() << "\", \"" << terms[i].a.str() << "\"]";
        }
        out << "]}";
        return out.str();
    }

    static WeightedSystem from_json(const std::string& text)
    {
        const auto j = nlohmann::json::parse(text);
        WeightedSystem sys;
        auto num = [](const nlohmann::json& x) {
            return x.is_string() ? parse_bigint(x.get<std::string>())
                                 : BigInt(x.get<std::int64_t>());
        };
        for (const auto& p : j.at("pairs"))
            sys.terms.push_back({num(p.at(0)), num(p.at(1))});
        sys.validate();
        return sys;
    }
};

struct SignedSumOptions {
    /* terms with weight above the cap are dropped; values up to
     * min(dropped weights) - 1 are then still exact minima */
    std::int64_t weight_cap = std::numeric_limits<std::int64_t>::max();
    bool keep_predecessors = false;
    std::int64_t max_window_nodes = 12'000'000;
};

struct SignedSumTable {
    LengthTable table;
    std::vector<std::size_t> kept;      // original indices of participating terms
    std::vector<std::int64_t> kept_n;
    std::vector<std::int64_t> kept_a;
    std::int64_t window = 0;            // states cover [-window, window]
    std::vector<std::int64_t> dist;     // per state, index = value + window
    std::vector<std::int32_t> pred;     // edge code, 0 = source, else slot*2+dir+1

    /* coefficients (original term index, signed count) of one minimal
     * representation of n, recovered from the shortest-path tree */
    std::vector<std::pair<std::size_t, std::int64_t>>
    representation(std::int64_t n) const
    {
        if (pred.empty())
            throw std::logic_error("representation: predecessors were not kept");
        std::vector<std::int64_t> coeff(kept.size(), 0);
        std::int64_t cur = n;
        while (cur != 0) {
            const std::int32_t code = pred[static_cast<std::size_t>(cur + window)];
            if (code == 0)
                throw std::logic_error("representation: broken predecessor chain");
            const std::size_t slot = static_cast<std::size_t>((code - 1) / 2);
            const int dir = (code - 1) % 2; // 0: arrived via +n, 1: via -n
            coeff[slot] += dir == 0 ? 1 : -1;
            cur -= dir == 0 ? kept_n[slot] : -kept_n[slot];
        }
        std::vector<std::pair<std::size_t, std::int64_t>> out;
        for (std::size_t s = 0; s < coeff.size(); ++s)
            if (coeff[s] != 0)
                out.emplace_back(kept[s], coeff[s]);
        return out;
    }
};

/* l(n) = min { sum of a_i over a signed multiset of system values
 * summing to n }, for |n| <= M.  Single-source shortest path from 0 on
 * the window [-(M+n_max), M+n_max]: any signed sum can be reordered so
 * its partial sums stay within max-term distance of [min(0,n), max(0,n)]
 * (always step toward the target when overshooting), so the windowed
 * distances are the exact unbounded minima for every participating
 * term set. */
inline SignedSumTable signed_sum_length(const WeightedSystem& sys, std::int64_t M,
                                        SignedSumOptions opts = {})
{
    sys.validate();
    if (M < 0)
        throw std::invalid_argument("signed_sum_length: negative horizon");

    SignedSumTable out;
    std::optional<BigInt> min_dropped;
    for (std::size_t i = 0; i < sys.terms.size(); ++i) {
        if (sys.terms[i].a <= opts.weight_cap) {
            out.kept.push_back(i);
            out.kept_n.push_back(to_i64_checked(sys.terms[i].n, "signed_sum_length term"));
            out.kept_a.push_back(to_i64_checked(sys.terms[i].a, "signed_sum_length weight"));
        } else if (!min_dropped || sys.terms[i].a < *min_dropped) {
            min_dropped = sys.terms[i].a;
        }
    }
    if (out.kept.empty() || out.kept_n.front() != 1)
        throw std::invalid_argument("signed_sum_length: weight cap drops the unit term");

    const std::int64_t n_max = *std::max_element(out.kept_n.begin(), out.kept_n.end());
    out.window = M + n_max;
    const std::int64_t nodes = 2 * out.window + 1;
    if (nodes > opts.max_window_nodes)
        throw std::runtime_error("signed_sum_length: window of " + std::to_string(nodes) +
                                 " states exceeds the configured limit");

    constexpr std::int64_t INF = std::numeric_limits<std::int64_t>::max();
    out.dist.assign(static_cast<std::size_t>(nodes), INF);
    if (opts.keep_predecessors)
        out.pred.assign(static_cast<std::size_t>(nodes), 0);

    using QE = std::pair<std::int64_t, std::int64_t>; // (dist, state index)
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
    const std::int64_t src = out.window;
    out.dist[static_cast<std::size_t>(src)] = 0;
    pq.emplace(0, src);
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d != out.dist[static_cast<std::size_t>(u)])
            continue;
        for (std::size_t s = 0; s < out.kept_n.size(); ++s) {
            for (int dir = 0; dir < 2; ++dir) {
                const std::int64_t v = u + (dir == 0 ? out.kept_n[s] : -out.kept_n[s]);
                if (v < 0 || v >= nodes)
                    continue;
                const std::int64_t nd = d + out.kept_a[s];
                if (nd < out.dist[static_cast<std::size_t>(v)]) {
                    out.dist[static_cast<std::size_t>(v)] = nd;
                    if (opts.keep_predecessors)
                        out.pred[static_cast<std::size_t>(v)] =
                            static_cast<std::int32_t>(2 * s + dir + 1);
                    pq.emplace(nd, v);
                }
            }
        }
    }

    out.table.horizon = M;
    out.table.v.resize(static_cast<std::size_t>(M) + 1);
    for (std::int64_t n = 0; n <= M; ++n)
        out.table.v[static_cast<std::size_t>(n)] =
            out.dist[static_cast<std::size_t>(n + out.window)];
    if (min_dropped) {
        const BigInt bound = *min_dropped - 1;
        out.table.exact_value_bound =
            bound > std::numeric_limits<std::int64_t>::max()
                ? std::numeric_limits<std::int64_t>::max()
                : bound.convert_to<std::int64_t>();
    }
    Rational ratio(BigInt(out.kept_n[0]), BigInt(out.kept_a[0]));
    for (std::size_t s = 1; s < out.kept_n.size(); ++s) {
        Rational cand(BigInt(out.kept_n[s]), BigInt(out.kept_a[s]));
        if (ratio < cand)
            ratio = cand;
    }
    out.table.escape_ratio = ratio;
    return out;
}

/* #{ n in Z : l(n) <= r }, exact when r is within the table's complete level */
inline std::int64_t count_level_set(const LengthTable& t, std::int64_t r)
{
    if (r > t.complete_level())
        throw std::invalid_argument("count_level_set: r beyond the certified level");
    std::int64_t cnt = 0;
    for (std::int64_t n = 1; n <= t.horizon; ++n)
        if (t.v[static_cast<std::size_t>(n)] <= r)
            ++cnt;
    return 2 * cnt + 1;
}

/* ------------------------------------------------------------------ */
/* distortion / growth profiles of a tabulated length on Z             */

struct ProfiledTable {
    FunctionTable table;
    int exact_r_max = 0; // entries above this r may miss untabulated integers
};

inline ProfiledTable distortion_of_length(const LengthTable& t, int r_max)
{
    std::vector<BigInt> d(static_cast<std::size_t>(r_max), BigInt(0));
    std::vector<std::int64_t> best(static_cast<std::size_t>(r_max) + 1, 0);
    for (std::int64_t n = t.horizon; n >= 1; --n) {
        const std::int64_t l = t.v[static_cast<std::size_t>(n)];
        if (l <= r_max && best[static_cast<std::size_t>(l)] == 0)
            best[static_cast<std::size_t>(l)] = n;
    }
    BigInt acc = 0;
    for (int r = 1; r <= r_max; ++r) {
        if (best[static_cast<std::size_t>(r)] > acc)
            acc = best[static_cast<std::size_t>(r)];
        d[static_cast<std::size_t>(r - 1)] = acc;
    }
    ProfiledTable out{FunctionTable(std::move(d)), 0};
    out.exact_r_max = static_cast<int>(std::min<std::int64_t>(r_max, t.complete_level()));
    return out;
}

inline ProfiledTable growth_of_length(const LengthTable& t, int r_max)
{
    std::vector<std::int64_t> sorted(t.v.begin() + 1, t.v.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<BigInt> g(static_cast<std::size_t>(r_max));
    for (int r = 1; r <= r_max; ++r) {
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), r);
        g[static_cast<std::size_t>(r - 1)] = BigInt(1 + 2 * (it - sorted.begin()));
    }
    ProfiledTable out{FunctionTable(std::move(g)), 0};
    out.exact_r_max = static_cast<int>(std::min<std::int64_t>(r_max, t.complete_level()));
    return out;
}

/* ------------------------------------------------------------------ */
/* inverse of a superadditive target                                   */

/* l(0) = 0, l(r) = min{ m : f(m) >= r } for 1 <= r <= min(f(N), cap).
 * Subadditivity follows from superadditivity of f; the count identity
 * #{r > 0 : l(r) <= n} = f(n) holds for every n with f(n) <= horizon. */
inline LengthTable build_from_superadditive(const FunctionTable& f,
                                            std::int64_t horizon_cap = 2'000'000)
{
    const auto verdict = is_superadditive(f);
    if (!verdict.ok)
        throw std::invalid_argument(
            "build_from_superadditive: target is not superadditive at (" +
            std::to_string(verdict.violation->r) + "," +
            std::to_string(verdict.violation->s) + ")");
    const int N = f.horizon();
    if (f.at(N) == 0)
        throw std::invalid_argument("build_from_superadditive: target is identically zero");

    const BigInt full = f.at(N);
    const std::int64_t M =
        full > horizon_cap ? horizon_cap : full.convert_to<std::int64_t>();

    LengthTable t;
    t.horizon = M;
    t.v.resize(static_cast<std::size_t>(M) + 1);
    t.v[0] = 0;
    int m = 1;
    for (std::int64_t r = 1; r <= M; ++r) {
        while (f.at(m) < r)
            ++m; // safe: r <= f(N)
        t.v[static_cast<std::size_t>(r)] = m;
    }
    t.nondecreasing = true;
    int complete = 0;
    while (complete < N && f.at(complete + 1) <= M)
        ++complete;
    t.exact_value_bound = complete;
    return t;
}

/* ------------------------------------------------------------------ */
/* the doubling system of a prescribed increasing superadditive target */

/* Pairs (f(l_i), l_i) with l_1 = 2 and l_{i+1} minimal such that
 * f(l_{i+1}) >= 2 f(l_i), preceded by the unit pair (1,1) for the
 * generator of Z itself.  Stops when the target's horizon is exhausted;
 * if min_terms is set, failing to reach it raises HorizonExhausted. */
inline WeightedSystem ps_system_from_target(const FunctionTable& f, int min_terms = 0)
{
    const int N = f.horizon();
    if (f.at(1) < 1)
        throw std::invalid_argument("ps_system_from_target: target must take values >= 1");
    for (int r = 1; r < N; ++r)
        if (f.at(r + 1) <= f.at(r))
            throw std::invalid_argument("ps_system_from_target: target must be increasing");
    const auto verdict = is_superadditive(f);
    if (!verdict.ok)
        throw std::invalid_argument("ps_system_from_target: target is not superadditive");
    if (N < 2)
        throw HorizonExhausted("ps_system_from_target: horizon < 2");

    WeightedSystem sys;
    sys.terms.push_back({BigInt(1), 1});
    int l = 2;
    while (true) {
        sys.terms.push_back({f.at(l), l});
        const BigInt target = 2 * f.at(l);
        int next = -1;
        for (int cand = l + 1; cand <= N; ++cand)
            if (f.at(cand) >= target) {
                next = cand;
                break;
            }
        if (next < 0)
            break;
        if (next > 2 * l)
            throw std::logic_error("ps_system_from_target: minimality bound violated");
        l = next;
    }
    if (min_terms > 0 && static_cast<int>(sys.terms.size()) - 1 < min_terms)
        throw HorizonExhausted("ps_system_from_target: horizon too short for " +
                               std::to_string(min_terms) + " terms");
    sys.validate();
    return sys;
}

/* ------------------------------------------------------------------ */
/* locally finite construction over an infinite direct sum of Z/2Z     */

/* H_i = first i coordinates, n_i = #H_i = 2^i.  Each generator h_i gets
 * the minimal level l_i with l_i > l_{i-1} and min(l_i, F(floor(sqrt(l_i))))
 * > n_i; the length of an element is the sum of the levels over its
 * support (minimal because the generators are independent commuting
 * involutions). */
struct LocallyFiniteLength {
    std::vector<std::int64_t> levels; // l_i for i = 1..i_max

    std::int64_t length(std::uint32_t mask) const
    {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < levels.size(); ++i)
            if (mask & (1u << i))
                s += levels[i];
        return s;
    }
};

inline LocallyFiniteLength locally_finite_length(const FunctionTable& F, int i_max)
{
    if (i_max < 1 || i_max > 20)
        throw std::invalid_argument("locally_finite_length: i_max must be in [1, 20]");
    if (!is_nondecreasing(F).ok)
        throw std::invalid_argument("locally_finite_length: F must be nondecreasing");
    const std::int64_t arg_cap = static_cast<std::int64_t>(F.horizon());

    LocallyFiniteLength lf;
    std::int64_t prev = 0;
    for (int i = 1; i <= i_max; ++i) {
        const BigInt n_i = BigInt(1) << i;
        std::int64_t l = prev + 1;
        for (;; ++l) {
            const std::int64_t root = isqrt64(l);
            if (root > arg_cap)
                throw HorizonExhausted("locally_finite_length: F horizon exhausted at i=" +
                                       std::to_string(i));
            if (BigInt(l) > n_i && F.at(static_cast<int>(root)) > n_i)
                break;
        }
        lf.levels.push_back(l);
        prev = l;
    }
    return lf;
}

} // namespace growthlab
