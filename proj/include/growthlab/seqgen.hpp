#pragma once

/* Fast-growing sequence pairs (a_i, n_i) and the counting checks tied
 * to the signed-sum length they induce.
 *
 * The defining recurrence is
 *     a_1 = n_1 = 1,
 *     a_i = 2^{i+3} n_{i-1} + 1,
 *     n_i = n_{i-1} * max( ceil(n_{i-1} a_i / a_{i-1}) + 1,
 *                          max_{j<=i} g_j(a_i) + 1 ),
 * where {g_j} is a pluggable family of increasing functions (the
 * "surrogate").  The surrogate stands in for a diagonalization that is
 * not computable; no claim about non-recursive bounds is made here, and
 * every output records which family produced it.
 */

#include "growthlab/lenfun.hpp"

#include <functional>

namespace growthlab {

struct Surrogate {
    std::string id;
    std::function<BigInt(int j, const BigInt& x)> eval;
};

inline Surrogate poly_surrogate()
{
    return {"poly", [](int j, const BigInt& x) { return pow_big(x, static_cast<unsigned>(j)); }};
}

/* gentler growth, keeps deeper windows enumerable in tests */
inline Surrogate affine_surrogate()
{
    return {"affine", [](int j, const BigInt& x) { return x + j; }};
}

inline Surrogate surrogate_by_id(const std::string& id)
{
    if (id == "poly")
        return poly_surrogate();
    if (id == "affine")
        return affine_surrogate();
    throw std::invalid_argument("unknown surrogate '" + id + "'");
}

struct SeqPair {
    std::vector<BigInt> a; // a_1.. (index 0-based)
    std::vector<BigInt> n;
    std::string surrogate_id;

    std::size_t size() const { return a.size(); }

    std::string to_json() const
    {
        std::ostringstream out;
        out << "{\"a\": [";
        for (std::size_t i = 0; i < a.size(); ++i)
            out << (i ? ", " : "") << "\"" << a[i].str() << "\"";
        out << "], \"n\": [";
        for (std::size_t i = 0; i < n.size(); ++i)
            out << (i ? ", " : "") << "\"" << n[i].str() << "\"";
        out << "], \"surrogate\": \"" << surrogate_id << "\"}";
        return out.str();
    }
};

inline SeqPair build_seq(const Surrogate& s, int count)
{
    if (count < 2)
        throw std::invalid_argument("build_seq: count must be >= 2");
    SeqPair seq;
    seq.surrogate_id = s.id;
    seq.a.push_back(1);
    seq.n.push_back(1);
    for (int i = 2; i <= count; ++i) {
        const BigInt& np = seq.n.back();
        const BigInt& ap = seq.a.back();
        const BigInt a_i = (BigInt(1) << (i + 3)) * np + 1;
        BigInt best = ceil_div(np * a_i, ap) + 1;
        for (int j = 1; j <= i; ++j) {
            const BigInt cand = s.eval(j, a_i) + 1;
            if (cand > best)
                best = cand;
        }
        seq.n.push_back(np * best);
        seq.a.push_back(a_i);
    }
    return seq;
}

struct NamedCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/* independent re-verification of the sequence invariants */
inline std::vector<NamedCheck> verify_seq_invariants(const SeqPair& s)
{
    std::vector<NamedCheck> out;
    out.push_back({"a1=n1=1", s.a.at(0) == 1 && s.n.at(0) == 1, ""});
    for (std::size_t i = 1; i < s.size(); ++i) {
        const auto tag = std::to_string(i + 1);
        out.push_back({"a" + tag + ">=2^{i+2}n_{i-1}",
                       s.a[i] >= (BigInt(1) << (i + 3)) * s.n[i - 1], ""});
        out.push_back({"n" + tag + ">n_{i-1}a_i/a_{i-1}",
                       s.n[i] * s.a[i - 1] > s.n[i - 1] * s.a[i], ""});
        out.push_back({"n_{i-1}|n" + tag, s.n[i] % s.n[i - 1] == 0, ""});
        out.push_back({"a" + tag + ">a_{i-1}", s.a[i] > s.a[i - 1], ""});
        out.push_back({"n" + tag + ">n_{i-1}", s.n[i] > s.n[i - 1], ""});
    }
    return out;
}

inline WeightedSystem seq_system(const SeqPair& s)
{
    WeightedSystem sys;
    for (std::size_t i = 0; i < s.size(); ++i)
        sys.terms.push_back({s.n[i], s.a[i]});
    sys.validate();
    return sys;
}

/* Builds the exact level-set table for queries up to weight r_cap: only
 * terms of weight <= r_cap can take part in a representation of weight
 * <= r_cap, and any integer with l(n) <= r_cap satisfies
 * |n| <= r_cap * max(n_i / a_i) over those terms. */
inline SignedSumTable seq_length_table(const SeqPair& s, std::int64_t r_cap,
                                       bool keep_predecessors = false,
                                       std::int64_t min_horizon = 0)
{
    Rational ratio(BigInt(0), BigInt(1));
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.a[i] <= r_cap) {
            Rational cand(s.n[i], s.a[i]);
            if (ratio < cand)
                ratio = cand;
        }
    const BigInt reach = ceil_div(BigInt(r_cap) * ratio.num, ratio.den);
    SignedSumOptions opts;
    opts.weight_cap = r_cap;
    opts.keep_predecessors = keep_predecessors;
    const std::int64_t M = std::max(min_horizon, to_i64_checked(reach, "seq window"));
    return signed_sum_length(seq_system(s), M, opts);
}

/* index j with a_{j-1} <= r < a_j, 1-based as in the counting lemmas */
inline int seq_bracket(const SeqPair& s, const BigInt& r)
{
    if (r < s.a.front())
        throw std::invalid_argument("seq_bracket: r below a_1");
    if (r >= s.a.back())
        throw HorizonExhausted("seq_bracket: r is not below the last a_i");
    int idx = 0;
    while (s.a[static_cast<std::size_t>(idx)] <= r)
        ++idx;
    return idx + 1;
}

/* counting upper bound: #{n : l(n) <= r} <= r^2 / a_{j-2} for j >= 3 */
struct FptRow {
    std::int64_t r = 0;
    int j = 0;
    bool skipped = false; // j < 3: the bound is vacuous there
    std::int64_t count = 0;
    bool pass = true;
};

inline std::vector<FptRow> fpt_upper_bound_check(const SeqPair& s,
                                                 const SignedSumTable& sst,
                                                 const std::vector<std::int64_t>& r_values)
{
    std::vector<FptRow> rows;
    for (const std::int64_t r : r_values) {
        FptRow row;
        row.r = r;
        row.j = seq_bracket(s, BigInt(r));
        if (row.j < 3) {
            row.skipped = true;
            rows.push_back(row);
            continue;
        }
        row.count = count_level_set(sst.table, r);
        /* count * a_{j-2} <= r^2, exact arithmetic */
        row.pass = BigInt(row.count) * s.a[static_cast<std::size_t>(row.j - 3)] <=
                   BigInt(r) * r;
        rows.push_back(row);
    }
    return rows;
}

/* coefficient bounds on recovered minimal representations:
 *  |k_i| <= r / a_i            for every i
 *  |k_i| <  n_{i+1} / n_i      for 2 <= i < j-1                     */
struct MinRepRow {
    std::int64_t n = 0;
    std::int64_t r = 0; // l(n)
    int j = 0;
    bool lsl_ok = true;
    bool atpy_ok = true;
};

inline std::vector<MinRepRow>
minimal_representation_properties(const SeqPair& s, const SignedSumTable& sst,
                                  const std::vector<std::int64_t>& ns)
{
    std::vector<MinRepRow> rows;
    for (const std::int64_t n : ns) {
        MinRepRow row;
        row.n = n;
        row.r = sst.table.l(n);
        if (row.r > sst.table.exact_value_bound)
            throw std::invalid_argument(
                "minimal_representation_properties: l(n) not certified exact");
        if (n == 0) {
            row.j = 0; // empty representation, vacuous
            rows.push_back(row);
            continue;
        }
        row.j = seq_bracket(s, BigInt(row.r));
        std::vector<BigInt> k(s.size(), BigInt(0));
        for (const auto& [idx, c] : sst.representation(n))
            k[idx] = c;
        for (std::size_t idx = 0; idx < s.size() && row.lsl_ok; ++idx) {
            const BigInt mag = k[idx] < 0 ? BigInt(-k[idx]) : k[idx];
            if (mag * s.a[idx] > row.r)
                row.lsl_ok = false;
        }
        for (int i = 2; i < row.j - 1 && row.atpy_ok; ++i) {
            const BigInt& ki = k[static_cast<std::size_t>(i - 1)];
            const BigInt mag = ki < 0 ? BigInt(-ki) : ki;
            if (mag * s.n[static_cast<std::size_t>(i - 1)] >=
                s.n[static_cast<std::size_t>(i)])
                row.atpy_ok = false;
        }
        rows.push_back(row);
    }
    return rows;
}

/* coefficient box at r = n_i with the tightened top coefficients:
 *  0 <= k_j < n_{j+1}((j+1)^2 - 1) / (n_j (j+1)^2)   for j = 1..i
 *  k_{i-1} < n_i / (3 n_{i-1}),  k_i <= r / (3 a_i)
 * Asserts: all sums distinct, every sum has l <= r in the exact table,
 * and the box has more than r^2 / (20 a_i) points. */
class BoxTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BoxReport {
    int i = 0;
    BigInt r;
    BigInt box_size;
    bool distinct_ok = false;
    bool lengths_ok = false;
    bool size_ok = false; // 20 a_i box_size > r^2
    bool pass() const { return distinct_ok && lengths_ok && size_ok; }
};

inline BoxReport coefficient_box_count(const SeqPair& s, const SignedSumTable& sst,
                                       int i, std::int64_t box_cap = 1'000'000)
{
    if (i < 1 || static_cast<std::size_t>(i) + 1 > s.size())
        throw std::invalid_argument("coefficient_box_count: need n_{i+1} in the sequence");
    BoxReport rep;
    rep.i = i;
    rep.r = s.n[static_cast<std::size_t>(i - 1)];

    std::vector<std::int64_t> kmax(static_cast<std::size_t>(i));
    for (int j = 1; j <= i; ++j) {
        const BigInt jj = BigInt(j + 1) * (j + 1);
        const BigInt num = s.n[static_cast<std::size_t>(j)] * (jj - 1);
        const BigInt den = s.n[static_cast<std::size_t>(j - 1)] * jj;
        BigInt bound = floor_div(num - 1, den); // largest integer strictly below num/den
        if (j == i - 1) {
            const BigInt tighter =
                floor_div(s.n[static_cast<std::size_t>(i - 1)] - 1,
                          3 * s.n[static_cast<std::size_t>(i - 2)]);
            if (tighter < bound)
                bound = tighter;
        }
        if (j == i) {
            const BigInt tighter = floor_div(rep.r, 3 * s.a[static_cast<std::size_t>(i - 1)]);
            if (tighter < bound)
                bound = tighter;
        }
        if (bound < 0)
            bound = 0;
        kmax[static_cast<std::size_t>(j - 1)] = to_i64_checked(bound, "box bound");
    }

    rep.box_size = 1;
    for (auto b : kmax)
        rep.box_size *= (b + 1);
    if (rep.box_size > box_cap)
        throw BoxTooLarge("coefficient_box_count: box of " + rep.box_size.str() +
                          " points exceeds the cap");

    std::vector<BigInt> sums;
    sums.reserve(static_cast<std::size_t>(rep.box_size.convert_to<std::int64_t>()));
    std::vector<std::int64_t> k(static_cast<std::size_t>(i), 0);
    bool lengths_ok = true;
    while (true) {
        BigInt sum = 0;
        for (int j = 1; j <= i; ++j)
            sum += BigInt(k[static_cast<std::size_t>(j - 1)]) *
                   s.n[static_cast<std::size_t>(j - 1)];
        sums.push_back(sum);
        if (lengths_ok) {
            if (sum > sst.table.horizon)
                throw std::invalid_argument(
                    "coefficient_box_count: table horizon below a box sum");
            if (BigInt(sst.table.l(sum.convert_to<std::int64_t>())) > rep.r)
                lengths_ok = false;
        }
        int pos = 0;
        while (pos < i && k[static_cast<std::size_t>(pos)] ==
                              kmax[static_cast<std::size_t>(pos)]) {
            k[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == i)
            break;
        ++k[static_cast<std::size_t>(pos)];
    }
    rep.lengths_ok = lengths_ok;
    std::sort(sums.begin(), sums.end());
    rep.distinct_ok = std::adjacent_find(sums.begin(), sums.end()) == sums.end();
    rep.size_ok = 20 * s.a[static_cast<std::size_t>(i - 1)] * rep.box_size > rep.r * rep.r;
    return rep;
}

/* d(a_i) >= n_i: the one-term representation certifies l(n_i) <= a_i;
 * where the window reaches n_i, the table value is cross-checked */
struct DistortionWitnessRow {
    int i = 0;
    bool via_table = false;
    bool pass = false;
};

inline std::vector<DistortionWitnessRow>
distortion_witnesses(const SeqPair& s, const SignedSumTable& sst)
{
    std::vector<DistortionWitnessRow> rows;
    for (std::size_t i = 0; i < s.size(); ++i) {
        DistortionWitnessRow row;
        row.i = static_cast<int>(i + 1);
        if (s.n[i] <= sst.table.horizon && s.a[i] <= sst.table.exact_value_bound) {
            row.via_table = true;
            const auto li = sst.table.l(s.n[i].convert_to<std::int64_t>());
            row.pass = BigInt(li) <= s.a[i];
        } else {
            /* l(n_i) <= a_i holds by the defining one-term representation */
            row.via_table = false;
            row.pass = true;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace growthlab
