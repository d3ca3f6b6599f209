#ifndef FREELOG_WORDS_HPP
#define FREELOG_WORDS_HPP

#include "freelog/numeric.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace freelog {

/// One letter of the free group on n generators: generator index in 1..n and
/// a sign, +1 for the generator itself, -1 for its inverse.
///
/// Letters are totally ordered with A_1 < A_1^{-1} < A_2 < A_2^{-1} < ...,
/// i.e. by the flat index 2*(generator-1) + (sign < 0). That order fixes the
/// alphabet layout used by the transfer matrices and by enumeration.
struct Letter {
    int generator = 1;
    int sign = 1;

    Letter() = default;
    Letter(int gen, int sgn);

    int index() const { return 2 * (generator - 1) + (sign < 0 ? 1 : 0); }
    static Letter from_index(int idx);

    Letter inverse() const { return Letter(generator, -sign); }

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter& other) const { return index() <=> other.index(); }
};

/// A freely reduced word: no letter is followed by its inverse. The empty
/// word is allowed. Construction validates reducedness and letter range.
class ReducedWord {
public:
    ReducedWord() = default;
    ReducedWord(std::vector<Letter> letters, int rank);

    /// Free reduction of an arbitrary letter string (iterated cancellation).
    static ReducedWord reduce(std::span<const Letter> letters, int rank);

    int rank() const { return rank_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }

    bool is_cyclically_reduced() const;

    bool operator==(const ReducedWord&) const = default;

private:
    std::vector<Letter> letters_;
    int rank_ = 2;
};

/// A cyclically reduced word: freely reduced and, unless trivial or of
/// length one, its last letter is not the inverse of its first.
class CyclicWord {
public:
    CyclicWord() = default;
    CyclicWord(std::vector<Letter> letters, int rank);

    /// Conjugate a reduced word to its cyclically reduced core.
    static CyclicWord cyclic_reduce(const ReducedWord& word);

    int rank() const { return word_.rank(); }
    int length() const { return word_.length(); }
    const std::vector<Letter>& letters() const { return word_.letters(); }
    const ReducedWord& as_reduced() const { return word_; }

    bool operator==(const CyclicWord&) const = default;

private:
    ReducedWord word_;
};

/// Signed count of generator j in a word: +1 per A_j, -1 per A_j^{-1}.
long long discrete_log(const ReducedWord& word, int j);
long long discrete_log(const CyclicWord& word, int j);

/// The normalized count sqrt((rank-1)/length) * discrete_log, kept in exact
/// pieces so callers can compare against rational thresholds without any
/// rounding: the value is sign(log_value) * sqrt(radicand * log_value^2).
struct NormalizedLog {
    long long log_value;
    Rational radicand;  // (rank-1)/length

    double value() const;
};

/// Exact pieces of the normalized count. Throws on the empty word.
NormalizedLog normalized_log_parts(const CyclicWord& word, int j);

/// sqrt((rank-1)/length) * discrete_log as a double, for display; use
/// normalized_log_parts where exactness matters. Throws on the empty word.
double normalized_log(const CyclicWord& word, int j);

/// Number of cyclically reduced words of length m in rank n, via the closed
/// form (2n-1)^m + 1 + (n-1)(1 + (-1)^m); m = 0 counts the empty word once.
Int cyclic_word_count(int rank, int m);

/// All cyclically reduced words of length m in lexicographic order (by the
/// letter order above); m = 0 yields nothing. Cost is (2n-1)^m, so calls
/// with (2n-1)^m > 3^16 are refused unless allow_large is passed.
std::vector<CyclicWord> enumerate_cyclic(int rank, int m, bool allow_large = false);

/// Streaming form of enumerate_cyclic: visits each word's letters in the
/// same order without materializing the list. Every visited span is a valid
/// cyclically reduced word.
void for_each_cyclic(int rank, int m, const std::function<void(std::span<const Letter>)>& visit,
                     bool allow_large = false);

/// Dense square matrix of big integers, indexed [row][col] over the flat
/// letter alphabet of size 2n. Just enough linear algebra for traces.
class IntMatrix {
public:
    explicit IntMatrix(int size) : size_(size), data_(static_cast<size_t>(size) * size) {}

    int size() const { return size_; }
    Int& at(int r, int c) { return data_[static_cast<size_t>(r) * size_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<size_t>(r) * size_ + c]; }

    IntMatrix multiply(const IntMatrix& other) const;
    IntMatrix power(int e) const;
    Int trace() const;

private:
    int size_;
    std::vector<Int> data_;
};

/// Adjacency matrix over the 2n letters: entry (x, y) is 1 when y may follow
/// x in a reduced word, i.e. y != x^{-1}. trace(M^m) counts cyclically
/// reduced words of length m for m >= 1 (closed non-backtracking walks).
IntMatrix transfer_matrix(int rank);

/// Count via trace(M^m); m = 0 returns 1 for the empty word.
Int count_via_trace(int rank, int m);

/// Distribution of the signed generator-j count over cyclically reduced words
/// of one length: histogram[v] = number of such words with discrete_log = v.
using LogHistogram = std::map<long long, Int>;

/// Histogram at a single length via the sign-twisted transfer recurrence
/// (no enumeration; cost polynomial in m).
LogHistogram histogram_at_length(int rank, int j, int m);

/// Histograms for every length 1..max_len in one pass. Much cheaper than
/// max_len separate calls because the recurrence state is shared.
std::vector<LogHistogram> histogram_table(int rank, int j, int max_len);

/// k-th power sum of the signed count over all cyclically reduced words of
/// length m, computed from a histogram.
Int power_sum_from_histogram(const LogHistogram& hist, int k);

/// Exact uniform sampler over cyclically reduced words of fixed length.
/// Deterministic for a fixed seed across runs and platforms: the generator
/// is mt19937_64 (bit-exact by the standard) and uniform integers below a
/// big bound are drawn by chunked rejection, never via distribution objects.
class CyclicWordSampler {
public:
    CyclicWordSampler(int rank, int length, std::uint64_t seed);

    CyclicWord sample();

    /// Number of words of this rank and length (the sample space size).
    const Int& total() const { return total_; }

    /// Unranking bijection from [0, total) to words in lexicographic order;
    /// sample() draws a uniform index and decodes it through this.
    CyclicWord word_at(Int index) const;

private:
    Int uniform_below(const Int& bound);

    int rank_;
    int length_;
    std::mt19937_64 rng_;
    // weights_[f][r][y]: number of reduced suffixes of length r that start at
    // letter y and end at a letter other than f^{-1} (so the word closes up
    // cyclically); first letter f is drawn from the marginal first.
    std::vector<std::vector<std::vector<Int>>> weights_;
    std::vector<Int> first_letter_weight_;
    Int total_;
};

/// One uniform draw with a throwaway sampler; build a CyclicWordSampler
/// directly when drawing more than once, the DP tables are reusable.
CyclicWord sample_uniform(int rank, int length, std::uint64_t seed);

/// Token round-trip: "a3" is the third generator, "a3'" its inverse; letters
/// are joined by single spaces. The empty word prints as "-".
std::string format_word(const CyclicWord& word);
std::string format_word(const ReducedWord& word);
ReducedWord parse_word(const std::string& text, int rank);

}  // namespace freelog

#endif
