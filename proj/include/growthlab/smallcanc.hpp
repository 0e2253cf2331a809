#pragma once

/* Word combinatorics behind the C'(1/10) small-cancellation argument:
 * the exponent words v_k = prod_{i=1..k} (1^i 2), their repeated-subword
 * structure, and the exact syllable-count ratio.
 *
 * The load-bearing fact is that every subword of length 2k-1 occurs at
 * most once in v_k (so pieces have at most 2k-2 letters, syllabic length
 * at most 4k-4 against a relator of syllabic length k(k+3)).  The
 * checker also classifies every repeated subword: each one embeds in
 * 1^{k-1} 2 1^{k-1}.  The tighter superword 1^{k-2} 2 1^{k-1} fails for
 * the boundary subword 1^{k-1} 2 (it occurs both at block k-1 and inside
 * block k), and the report records that witness explicitly.
 */

#include "growthlab/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace growthlab {

struct VkWord {
    int k = 0;
    std::string letters; // over the alphabet {'1', '2'}

    std::int64_t length() const { return static_cast<std::int64_t>(letters.size()); }
};

inline VkWord build_vk(int k)
{
    if (k < 1)
        throw std::invalid_argument("build_vk: k must be >= 1");
    VkWord v;
    v.k = k;
    v.letters.reserve(static_cast<std::size_t>(k) * (k + 3) / 2);
    for (int i = 1; i <= k; ++i) {
        v.letters.append(static_cast<std::size_t>(i), '1');
        v.letters.push_back('2');
    }
    return v;
}

struct SubwordReport {
    int k = 0;
    bool unique_2km1 = false;      // every subword of length 2k-1 occurs once
    std::int64_t max_repeated = 0; // longest subword occurring twice
    bool repeats_embed = false;    // every repeated subword lies in 1^{k-1} 2 1^{k-1}
    bool strict_variant_ok = false; // same against 1^{k-2} 2 1^{k-1}
    std::optional<std::string> strict_violation; // a repeated subword outside it

    bool pass() const { return unique_2km1 && repeats_embed; }
};

/* exhaustive scan over all position pairs via a longest-common-extension
 * table; a repeated subword is always a prefix of the maximal common
 * extension of two positions, and substring containment in 1^p 2 1^q is
 * decided from the run lengths around the (at most one) letter '2' */
inline SubwordReport subword_uniqueness(const VkWord& v)
{
    if (v.k < 2)
        throw std::invalid_argument("subword_uniqueness: k must be >= 2");
    SubwordReport rep;
    rep.k = v.k;
    const auto m = static_cast<std::size_t>(v.length());
    const std::string& w = v.letters;

    /* lce[i][j] = length of the longest common prefix of w[i..], w[j..] */
    std::vector<std::vector<std::int32_t>> lce(
        m + 1, std::vector<std::int32_t>(m + 1, 0));
    for (std::size_t i = m; i-- > 0;)
        for (std::size_t j = m; j-- > 0;)
            if (w[i] == w[j])
                lce[i][j] = lce[i + 1][j + 1] + 1;

    /* prefix counts of '2' and position of the first '2' at or after i */
    std::vector<std::int32_t> twos(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i)
        twos[i + 1] = twos[i] + (w[i] == '2');
    std::vector<std::int32_t> next2(m + 1, static_cast<std::int32_t>(m));
    for (std::size_t i = m; i-- > 0;)
        next2[i] = w[i] == '2' ? static_cast<std::int32_t>(i) : next2[i + 1];

    rep.unique_2km1 = true;
    rep.repeats_embed = true;
    rep.strict_variant_ok = true;
    const std::int64_t embed_left = v.k - 1;  // 1^{k-1} 2 1^{k-1}
    const std::int64_t strict_left = v.k - 2; // 1^{k-2} 2 1^{k-1}
    const std::int64_t right = v.k - 1;

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const std::int64_t len = lce[i][j];
            if (len == 0)
                continue;
            rep.max_repeated = std::max(rep.max_repeated, len);
            if (len >= 2 * v.k - 1)
                rep.unique_2km1 = false;
            const std::int32_t n2 = twos[i + static_cast<std::size_t>(len)] - twos[i];
            std::int64_t left_run, right_run;
            if (n2 == 0) {
                left_run = len;
                right_run = 0;
            } else if (n2 == 1) {
                left_run = next2[i] - static_cast<std::int32_t>(i);
                right_run = len - left_run - 1;
            } else {
                /* two '2's pin the block index, so such a subword cannot
                 * repeat; record it as a failure of both embeddings */
                left_run = right_run = std::numeric_limits<std::int32_t>::max();
            }
            const bool embeds =
                n2 == 0 ? left_run <= std::max(embed_left, right)
                        : left_run <= embed_left && right_run <= right;
            const bool strict =
                n2 == 0 ? left_run <= std::max(strict_left, right)
                        : left_run <= strict_left && right_run <= right;
            if (!embeds)
                rep.repeats_embed = false;
            if (!strict && rep.strict_variant_ok) {
                rep.strict_variant_ok = false;
                rep.strict_violation = w.substr(i, static_cast<std::size_t>(len));
            }
        }
    return rep;
}

/* letter counts: k occurrences of '2' and k(k+1)/2 of '1' */
inline std::pair<std::int64_t, std::int64_t> letter_counts(const VkWord& v)
{
    std::int64_t ones = 0, twos = 0;
    for (char ch : v.letters)
        (ch == '1' ? ones : twos)++;
    return {ones, twos};
}

/* exact piece ratio (4k-4) / (k(k+3)); the relator w_k has syllabic
 * length 2 m_k = k(k+3) while a piece has at most 2(2k-2) syllables */
struct CPrimeRatio {
    std::int64_t k = 0;
    Rational ratio;
    bool degenerate = false; // k < 2: no pieces at all
    bool below_tenth = false;
};

inline CPrimeRatio c_prime_ratio(std::int64_t k)
{
    if (k < 1)
        throw std::invalid_argument("c_prime_ratio: k must be >= 1");
    CPrimeRatio out;
    out.k = k;
    out.ratio = Rational(BigInt(4 * k - 4), BigInt(k) * (k + 3));
    out.degenerate = k < 2;
    out.below_tenth = out.ratio < Rational(BigInt(1), BigInt(10));
    return out;
}

} // namespace growthlab
