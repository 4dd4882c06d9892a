#include "bgwc/arrays.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bgwc/parallel.hpp"

namespace bgwc {

SymbolArray::SymbolArray(std::size_t k, std::uint32_t a) : k_(k), a_(a) {
    if (a < 2) throw std::invalid_argument("alphabet must have at least two symbols");
}

void SymbolArray::push_row(Word row) {
    if (row.size() != k_) throw std::invalid_argument("array row length mismatch");
    for (Entry e : row)
        if (e.symbol() >= a_) throw std::invalid_argument("array symbol outside the alphabet");
    grid_.push_back(std::move(row));
}

void SymbolArray::erase_row(std::size_t i) { grid_.erase(grid_.begin() + static_cast<std::ptrdiff_t>(i)); }

SymbolArray append_zero_word(const Code& C) {
    if (C.size() == 0) throw std::invalid_argument("append_zero_word: empty code");
    const Word zero(C.length(), Entry::zero());
    if (C.contains(zero)) throw std::invalid_argument("append_zero_word: code already contains the zero word");
    SymbolArray A(C.length(), C.alphabet_size());
    for (const auto& w : C.words()) A.push_row(w);
    A.push_row(zero);
    return A;
}

std::string ArrayFailure::message() const {
    std::ostringstream os;
    os << "columns (";
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << ") tuple (";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        os << (i ? "," : "");
        if (tuple[i] == 0)
            os << "0";
        else
            os << "w^" << tuple[i] - 1;
    }
    os << ") occurs " << count << " times, required " << required;
    return os.str();
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t k, std::size_t t) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> c(t);
    for (std::size_t i = 0; i < t; ++i) c[i] = i;
    if (t > k) return out;
    while (true) {
        out.push_back(c);
        std::size_t i = t;
        while (i > 0 && c[i - 1] == k - t + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < t; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

std::uint64_t checked_power(std::uint64_t a, std::size_t t) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < t; ++i) {
        if (r > (std::uint64_t{1} << 32) / a) throw std::invalid_argument("a^t too large to tabulate");
        r *= a;
    }
    return r;
}

ArrayVerdict verify_strength(const SymbolArray& A, std::size_t t, std::size_t lambda, ArrayKind kind,
                             unsigned threads) {
    if (t == 0 || t > A.cols()) throw std::invalid_argument("strength t must be in [1, k]");
    const std::uint64_t a = A.alphabet_size();
    const std::uint64_t tuples = checked_power(a, t);
    if (lambda == 0) throw std::invalid_argument("index lambda must be positive");

    const auto sets = combinations(A.cols(), t);
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    const unsigned workers = std::max(1u, threads);
    std::vector<std::size_t> first_bad(workers, none);

    auto count_for = [&](std::size_t s, std::vector<std::size_t>& counts) {
        std::fill(counts.begin(), counts.end(), 0);
        const auto& cols = sets[s];
        for (std::size_t r = 0; r < A.rows(); ++r) {
            std::uint64_t idx = 0;
            for (auto c : cols) idx = idx * a + A(r, c).symbol();
            ++counts[idx];
        }
    };
    auto bad = [&](std::size_t c) { return kind == ArrayKind::OA ? c != lambda : c < lambda; };

    parallel_for(sets.size(), workers, [&](unsigned w, std::size_t s) {
        if (first_bad[w] != none) return;
        std::vector<std::size_t> counts(tuples);
        count_for(s, counts);
        if (std::any_of(counts.begin(), counts.end(), bad)) first_bad[w] = s;
    });

    const std::size_t s = *std::min_element(first_bad.begin(), first_bad.end());
    if (s == none) return ArrayCert{kind, A.rows(), A.cols(), t, lambda};

    std::vector<std::size_t> counts(tuples);
    count_for(s, counts);
    const auto it = std::find_if(counts.begin(), counts.end(), bad);
    ArrayFailure f;
    f.columns = sets[s];
    f.tuple.resize(t);
    std::uint64_t idx = static_cast<std::uint64_t>(it - counts.begin());
    for (std::size_t i = t; i-- > 0;) {
        f.tuple[i] = static_cast<std::uint32_t>(idx % a);
        idx /= a;
    }
    f.count = *it;
    f.required = lambda;
    return f;
}

} // namespace

ArrayVerdict verify_oa(const SymbolArray& A, std::size_t t, std::size_t lambda, unsigned threads) {
    return verify_strength(A, t, lambda, ArrayKind::OA, threads);
}

ArrayVerdict verify_ca(const SymbolArray& A, std::size_t t, std::size_t lambda, unsigned threads) {
    return verify_strength(A, t, lambda, ArrayKind::CA, threads);
}

// ---------------------------------------------------------------------------

LatinSquare::LatinSquare(std::size_t n) : n_(n), grid_(n * n, Entry::zero()) {
    if (n == 0) throw std::invalid_argument("Latin square order must be positive");
}

LatinSquare LatinSquare::from_rows(const std::vector<Word>& rows) {
    LatinSquare L(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw std::invalid_argument("Latin square must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) L.set(i, j, rows[i][j]);
    }
    return L;
}

void LatinSquare::set(std::size_t i, std::size_t j, Entry e) {
    if (e.symbol() >= n_) throw std::invalid_argument("Latin square symbol outside the alphabet");
    grid_[i * n_ + j] = e;
}

Word LatinSquare::row(std::size_t i) const {
    return Word(grid_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                grid_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

namespace {

// Row (by_row) or column `idx` is a permutation of the alphabet.
bool is_permutation_line(const LatinSquare& L, bool by_row, std::size_t idx) {
    const std::size_t n = L.order();
    std::vector<bool> seen(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        const std::uint32_t s = (by_row ? L(idx, x) : L(x, idx)).symbol();
        if (seen[s]) return false;
        seen[s] = true;
    }
    return true;
}

} // namespace

bool verify_latin(const LatinSquare& L) {
    for (std::size_t i = 0; i < L.order(); ++i)
        if (!is_permutation_line(L, true, i) || !is_permutation_line(L, false, i)) return false;
    return true;
}

bool suitable(const LatinSquare& L, const LatinSquare& M) {
    if (L.order() != M.order()) throw std::invalid_argument("suitable: order mismatch");
    for (std::size_t i = 0; i < L.order(); ++i) {
        std::size_t hits = 0;
        for (std::size_t j = 0; j < L.order(); ++j) hits += L(i, j) == M(i, j);
        if (hits != 1) return false;
    }
    return true;
}

MslsReport verify_msls(const std::vector<LatinSquare>& S) {
    if (S.size() < 2) throw std::invalid_argument("verify_msls: need at least two squares");
    MslsReport r;
    for (std::size_t i = 0; i < S.size() && !r.first_failing_pair; ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            if (!suitable(S[i], S[j])) {
                r.first_failing_pair = std::pair{i, j};
                break;
            }
    r.mutually_suitable = !r.first_failing_pair;
    r.complete = r.mutually_suitable && S.size() + 1 == S.front().order();
    return r;
}

std::string MslsFailure::message() const {
    std::ostringstream os;
    os << "block for symbol w^" << symbol - 1 << ": " << (in_row ? "row " : "column ") << index
       << " is not a permutation";
    return os.str();
}

std::vector<LatinSquare> block_squares(const SymbolArray& A) {
    const std::size_t n = A.alphabet_size();
    if (A.rows() != n * n || A.cols() != n + 1) throw std::invalid_argument("extract_msls: array must be n^2 x (n+1)");
    const auto oa = verify_oa(A, 2, 1);
    if (!oa) throw std::invalid_argument("extract_msls: not an OA(n^2, n+1, 2, 1): " + oa.failure().message());

    std::vector<std::vector<Word>> blocks(n);
    for (std::size_t r = 0; r < A.rows(); ++r) {
        const Word& row = A.row(r);
        blocks[row[0].symbol()].emplace_back(row.begin() + 1, row.end());
    }
    std::vector<LatinSquare> out;
    for (std::uint32_t s = 1; s < n; ++s) out.push_back(LatinSquare::from_rows(blocks[s]));
    return out;
}

MslsExtraction extract_msls(const SymbolArray& A) {
    std::vector<LatinSquare> out = block_squares(A);
    for (std::uint32_t s = 1; s <= out.size(); ++s) {
        const LatinSquare& L = out[s - 1];
        for (std::size_t i = 0; i < L.order(); ++i) {
            if (!is_permutation_line(L, true, i)) return MslsFailure{s, true, i};
            if (!is_permutation_line(L, false, i)) return MslsFailure{s, false, i};
        }
    }
    return out;
}

SymbolArray latin_as_array(const LatinSquare& L) {
    const std::size_t n = L.order();
    SymbolArray A(3, static_cast<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A.push_row({Entry::from_symbol(static_cast<std::uint32_t>(i)), Entry::from_symbol(static_cast<std::uint32_t>(j)), L(i, j)});
    return A;
}

} // namespace bgwc
