#include "freelog/words.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace freelog {

namespace {

void check_rank(int rank) {
    if (rank < 2) throw std::domain_error("rank must be at least 2");
}

void check_length(int m) {
    if (m < 0) throw std::domain_error("word length must be nonnegative");
}

}  // namespace

Letter::Letter(int gen, int sgn) : generator(gen), sign(sgn) {
    if (gen < 1) throw std::domain_error("generator index must be positive");
    if (sgn != 1 && sgn != -1) throw std::domain_error("letter sign must be +1 or -1");
}

Letter Letter::from_index(int idx) {
    if (idx < 0) throw std::domain_error("letter index must be nonnegative");
    return Letter(idx / 2 + 1, (idx % 2 == 0) ? 1 : -1);
}

ReducedWord::ReducedWord(std::vector<Letter> letters, int rank)
    : letters_(std::move(letters)), rank_(rank) {
    check_rank(rank);
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i].generator > rank)
            throw std::domain_error("letter outside alphabet of given rank");
        if (i > 0 && letters_[i] == letters_[i - 1].inverse())
            throw std::domain_error("word is not freely reduced");
    }
}

ReducedWord ReducedWord::reduce(std::span<const Letter> letters, int rank) {
    check_rank(rank);
    std::vector<Letter> stack;
    stack.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.generator > rank) throw std::domain_error("letter outside alphabet of given rank");
        if (!stack.empty() && stack.back() == l.inverse())
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return ReducedWord(std::move(stack), rank);
}

bool ReducedWord::is_cyclically_reduced() const {
    if (letters_.size() < 2) return true;
    return letters_.back() != letters_.front().inverse();
}

CyclicWord::CyclicWord(std::vector<Letter> letters, int rank) : word_(std::move(letters), rank) {
    if (!word_.is_cyclically_reduced())
        throw std::domain_error("word is not cyclically reduced");
}

CyclicWord CyclicWord::cyclic_reduce(const ReducedWord& word) {
    std::vector<Letter> l = word.letters();
    size_t lo = 0;
    size_t hi = l.size();
    while (hi - lo >= 2 && l[hi - 1] == l[lo].inverse()) {
        ++lo;
        --hi;
    }
    return CyclicWord(std::vector<Letter>(l.begin() + lo, l.begin() + hi), word.rank());
}

namespace {

long long signed_count(const std::vector<Letter>& letters, int rank, int j) {
    if (j < 1 || j > rank) throw std::domain_error("generator index out of range");
    long long v = 0;
    for (const Letter& l : letters)
        if (l.generator == j) v += l.sign;
    return v;
}

}  // namespace

long long discrete_log(const ReducedWord& word, int j) {
    return signed_count(word.letters(), word.rank(), j);
}

long long discrete_log(const CyclicWord& word, int j) {
    return signed_count(word.letters(), word.rank(), j);
}

double NormalizedLog::value() const {
    return std::sqrt(to_double(radicand)) * static_cast<double>(log_value);
}

NormalizedLog normalized_log_parts(const CyclicWord& word, int j) {
    if (word.length() == 0) throw std::domain_error("normalized log of the empty word");
    return {discrete_log(word, j), Rational(word.rank() - 1, word.length())};
}

double normalized_log(const CyclicWord& word, int j) {
    return normalized_log_parts(word, j).value();
}

Int cyclic_word_count(int rank, int m) {
    check_rank(rank);
    check_length(m);
    if (m == 0) return 1;
    Int count = int_pow(Int(2 * rank - 1), static_cast<unsigned>(m)) + 1;
    count += Int(rank - 1) * (1 + (m % 2 == 0 ? 1 : -1));
    return count;
}

void for_each_cyclic(int rank, int m, const std::function<void(std::span<const Letter>)>& visit,
                     bool allow_large) {
    check_rank(rank);
    check_length(m);
    if (m == 0) return;
    if (!allow_large && int_pow(Int(2 * rank - 1), static_cast<unsigned>(m)) > 43'046'721)
        throw std::domain_error("enumeration too large; pass allow_large to override");

    const int alphabet = 2 * rank;
    std::vector<Letter> stack;
    stack.reserve(m);
    // Depth-first over letter indices in increasing order, so the visit order
    // is lexicographic. Reducedness is enforced on the way down, the cyclic
    // closure condition at the leaves.
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == m) {
            if (m == 1 || stack.back() != stack.front().inverse()) visit(stack);
            return;
        }
        for (int idx = 0; idx < alphabet; ++idx) {
            Letter l = Letter::from_index(idx);
            if (depth > 0 && l == stack.back().inverse()) continue;
            stack.push_back(l);
            self(self, depth + 1);
            stack.pop_back();
        }
    };
    dfs(dfs, 0);
}

std::vector<CyclicWord> enumerate_cyclic(int rank, int m, bool allow_large) {
    std::vector<CyclicWord> out;
    for_each_cyclic(
        rank, m,
        [&](std::span<const Letter> letters) {
            out.emplace_back(std::vector<Letter>(letters.begin(), letters.end()), rank);
        },
        allow_large);
    return out;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
    if (size_ != other.size_) throw std::domain_error("matrix size mismatch");
    IntMatrix out(size_);
    for (int i = 0; i < size_; ++i)
        for (int k = 0; k < size_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < size_; ++j) out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::power(int e) const {
    if (e < 0) throw std::domain_error("matrix power must be nonnegative");
    IntMatrix result(size_);
    for (int i = 0; i < size_; ++i) result.at(i, i) = 1;
    IntMatrix base = *this;
    while (e != 0) {
        if (e & 1) result = result.multiply(base);
        base = base.multiply(base);
        e >>= 1;
    }
    return result;
}

Int IntMatrix::trace() const {
    Int t = 0;
    for (int i = 0; i < size_; ++i) t += at(i, i);
    return t;
}

IntMatrix transfer_matrix(int rank) {
    check_rank(rank);
    IntMatrix m(2 * rank);
    for (int x = 0; x < 2 * rank; ++x)
        for (int y = 0; y < 2 * rank; ++y)
            m.at(x, y) = (y == (x ^ 1)) ? 0 : 1;  // x^1 flips the sign bit: the inverse letter
    return m;
}

Int count_via_trace(int rank, int m) {
    check_rank(rank);
    check_length(m);
    if (m == 0) return 1;
    return transfer_matrix(rank).power(m).trace();
}

namespace {

// State for the sign-twisted transfer recurrence. Entry (x, y) of the m-th
// twisted matrix power is a Laurent polynomial in t recording, over reduced
// paths x -> y of m steps, the distribution of the signed generator-j count
// of the letters after x. Stored densely with exponent v at slot v + max_len.
struct TwistedState {
    int alphabet;
    int max_len;
    int width;
    std::vector<std::vector<Int>> p;  // [x * alphabet + y][slot]

    TwistedState(int alpha, int len)
        : alphabet(alpha),
          max_len(len),
          width(2 * len + 1),
          p(static_cast<size_t>(alpha) * alpha, std::vector<Int>(width)) {
        for (int x = 0; x < alphabet; ++x) p[static_cast<size_t>(x) * alphabet + x][len] = 1;
    }
};

int letter_shift(int letter_index, int j) {
    if (letter_index == 2 * (j - 1)) return 1;
    if (letter_index == 2 * (j - 1) + 1) return -1;
    return 0;
}

// One multiplication by the twisted matrix on the right:
//   P'[x][y] = t^{shift(y)} * (sum_z P[x][z] - P[x][inv(y)])
// using that column y of the twisted matrix is t^{shift(y)} everywhere
// except for a zero in row inv(y).
void twisted_step(TwistedState& s, int j, int m) {
    const int a = s.alphabet;
    const int lo = s.max_len - (m - 1);
    const int hi = s.max_len + (m - 1);  // inclusive slot window before the step
    std::vector<Int> rowsum(s.width);
    std::vector<std::vector<Int>> next(s.p.size(), std::vector<Int>(s.width));
    for (int x = 0; x < a; ++x) {
        std::fill(rowsum.begin() + lo, rowsum.begin() + hi + 1, Int(0));
        for (int z = 0; z < a; ++z) {
            const auto& row = s.p[static_cast<size_t>(x) * a + z];
            for (int slot = lo; slot <= hi; ++slot) rowsum[slot] += row[slot];
        }
        for (int y = 0; y < a; ++y) {
            const auto& excl = s.p[static_cast<size_t>(x) * a + (y ^ 1)];
            auto& out = next[static_cast<size_t>(x) * a + y];
            const int d = letter_shift(y, j);
            for (int slot = lo; slot <= hi; ++slot) {
                Int v = rowsum[slot] - excl[slot];
                if (v != 0) out[slot + d] = std::move(v);
            }
        }
    }
    s.p = std::move(next);
}

LogHistogram trace_histogram(const TwistedState& s) {
    LogHistogram hist;
    for (int x = 0; x < s.alphabet; ++x) {
        const auto& row = s.p[static_cast<size_t>(x) * s.alphabet + x];
        for (int slot = 0; slot < s.width; ++slot)
            if (row[slot] != 0) hist[slot - s.max_len] += row[slot];
    }
    return hist;
}

void check_generator(int rank, int j) {
    if (j < 1 || j > rank) throw std::domain_error("generator index out of range");
}

}  // namespace

LogHistogram histogram_at_length(int rank, int j, int m) {
    check_rank(rank);
    check_generator(rank, j);
    if (m < 1) throw std::domain_error("histogram needs length at least 1");
    TwistedState s(2 * rank, m);
    for (int step = 1; step <= m; ++step) twisted_step(s, j, step);
    return trace_histogram(s);
}

std::vector<LogHistogram> histogram_table(int rank, int j, int max_len) {
    check_rank(rank);
    check_generator(rank, j);
    if (max_len < 1) throw std::domain_error("histogram table needs length at least 1");
    std::vector<LogHistogram> out;
    out.reserve(max_len);
    TwistedState s(2 * rank, max_len);
    for (int step = 1; step <= max_len; ++step) {
        twisted_step(s, j, step);
        out.push_back(trace_histogram(s));
    }
    return out;
}

Int power_sum_from_histogram(const LogHistogram& hist, int k) {
    if (k < 0) throw std::domain_error("power sum order must be nonnegative");
    Int sum = 0;
    for (const auto& [value, count] : hist) {
        if (k == 0) {
            sum += count;
            continue;
        }
        Int v = int_pow(Int(value), static_cast<unsigned>(k));
        sum += v * count;
    }
    return sum;
}

CyclicWordSampler::CyclicWordSampler(int rank, int length, std::uint64_t seed)
    : rank_(rank), length_(length), rng_(seed) {
    check_rank(rank);
    if (length < 1) throw std::domain_error("sampler needs length at least 1");
    const int a = 2 * rank;
    first_letter_weight_.assign(a, 0);
    weights_.assign(a, {});
    if (length == 1) {
        for (int f = 0; f < a; ++f) first_letter_weight_[f] = 1;
        total_ = a;
        return;
    }
    // For each first letter f, suffix[r][y] counts reduced runs of r letters
    // that begin with y and end anywhere except f^{-1}, so the run can be
    // appended to f and close up cyclically.
    for (int f = 0; f < a; ++f) {
        auto& suffix = weights_[f];
        suffix.assign(static_cast<size_t>(length), std::vector<Int>(a));
        Int total_prev = 0;
        for (int y = 0; y < a; ++y) {
            suffix[1][y] = (y == (f ^ 1)) ? 0 : 1;
            total_prev += suffix[1][y];
        }
        for (int r = 2; r < length; ++r) {
            Int total_cur = 0;
            for (int y = 0; y < a; ++y) {
                suffix[r][y] = total_prev - suffix[r - 1][y ^ 1];
                total_cur += suffix[r][y];
            }
            total_prev = std::move(total_cur);
        }
        for (int y = 0; y < a; ++y)
            if (y != (f ^ 1)) first_letter_weight_[f] += suffix[length - 1][y];
    }
    total_ = 0;
    for (int f = 0; f < a; ++f) total_ += first_letter_weight_[f];
}

Int CyclicWordSampler::uniform_below(const Int& bound) {
    if (bound <= 0) throw std::logic_error("uniform_below: empty range");
    const unsigned bits = boost::multiprecision::msb(bound) + 1;
    const unsigned chunks = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (chunks - 1);
    const std::uint64_t top_mask =
        top_bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
    for (;;) {
        Int draw = 0;
        for (unsigned c = 0; c < chunks; ++c) {
            std::uint64_t word = rng_();
            if (c == chunks - 1) word &= top_mask;
            draw <<= 64;
            draw |= word;
        }
        if (draw < bound) return draw;
    }
}

CyclicWord CyclicWordSampler::sample() { return word_at(uniform_below(total_)); }

CyclicWord CyclicWordSampler::word_at(Int index) const {
    if (index < 0 || index >= total_) throw std::domain_error("word index out of range");
    Int x = std::move(index);
    const int a = 2 * rank_;
    std::vector<Letter> letters;
    letters.reserve(static_cast<size_t>(length_));

    int f = 0;
    while (x >= first_letter_weight_[f]) {
        x -= first_letter_weight_[f];
        ++f;
    }
    letters.push_back(Letter::from_index(f));
    if (length_ == 1) return CyclicWord(std::move(letters), rank_);

    // Thread the one index through the cumulative suffix counts; this decodes
    // it as the rank of a word in lexicographic order.
    const auto& suffix = weights_[f];
    int prev = f;
    for (int remaining = length_ - 1; remaining >= 1; --remaining) {
        int pick = -1;
        for (int y = 0; y < a; ++y) {
            if (y == (prev ^ 1)) continue;
            const Int& w = suffix[remaining][y];
            if (x < w) {
                pick = y;
                break;
            }
            x -= w;
        }
        if (pick < 0) throw std::logic_error("sampler: index exceeded suffix weights");
        letters.push_back(Letter::from_index(pick));
        prev = pick;
    }
    return CyclicWord(std::move(letters), rank_);
}

CyclicWord sample_uniform(int rank, int length, std::uint64_t seed) {
    return CyclicWordSampler(rank, length, seed).sample();
}

std::string format_word(const ReducedWord& word) {
    if (word.empty()) return "-";
    std::ostringstream out;
    bool first = true;
    for (const Letter& l : word.letters()) {
        if (!first) out << ' ';
        first = false;
        out << 'a' << l.generator;
        if (l.sign < 0) out << '\'';
    }
    return out.str();
}

std::string format_word(const CyclicWord& word) { return format_word(word.as_reduced()); }

ReducedWord parse_word(const std::string& text, int rank) {
    check_rank(rank);
    if (text == "-") return ReducedWord({}, rank);
    std::vector<Letter> letters;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        bool inverse = false;
        if (token.size() > 1 && token.back() == '\'') {
            inverse = true;
            token.pop_back();
        }
        if (token.size() < 2 || token[0] != 'a')
            throw std::domain_error("bad letter token: " + token);
        size_t pos = 0;
        int gen = 0;
        try {
            gen = std::stoi(token.substr(1), &pos);
        } catch (const std::exception&) {
            throw std::domain_error("bad letter token: " + token);
        }
        if (pos != token.size() - 1 || gen < 1 || gen > rank)
            throw std::domain_error("bad letter token: " + token);
        letters.emplace_back(gen, inverse ? -1 : 1);
    }
    if (letters.empty()) throw std::domain_error("empty word text; use - for the empty word");
    return ReducedWord(std::move(letters), rank);
}

}  // namespace freelog
