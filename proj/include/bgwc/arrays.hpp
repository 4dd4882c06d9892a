#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bgwc/checked.hpp"
#include "bgwc/cwcode.hpp"
#include "bgwc/entry.hpp"

namespace bgwc {

/// N × k array over the alphabet {Zero, ω^0, …, ω^(a-2)}; symbol indices are
/// Entry::symbol() values in [0, a).
class SymbolArray {
public:
    SymbolArray(std::size_t k, std::uint32_t a);

    void push_row(Word row);
    std::size_t rows() const { return grid_.size(); }
    std::size_t cols() const { return k_; }
    std::uint32_t alphabet_size() const { return a_; }
    Entry operator()(std::size_t i, std::size_t j) const { return grid_[i][j]; }
    const Word& row(std::size_t i) const { return grid_[i]; }
    void erase_row(std::size_t i);

    bool operator==(const SymbolArray&) const = default;

private:
    std::size_t k_;
    std::uint32_t a_;
    std::vector<Word> grid_;
};

/// The code's words followed by the all-Zero word. Throws when C is empty or
/// already contains the zero word.
SymbolArray append_zero_word(const Code& C);

enum class ArrayKind { OA, CA };

struct ArrayCert {
    ArrayKind kind;
    std::size_t N;
    std::size_t k;
    std::size_t t;
    std::size_t lambda;
};

/// A wrong row count always shows up as some tuple with the wrong count, so
/// every failure names one.
struct ArrayFailure {
    std::vector<std::size_t> columns;
    std::vector<std::uint32_t> tuple;  // symbol indices
    std::size_t count = 0;
    std::size_t required = 0;

    std::string message() const;
};

using ArrayVerdict = Checked<ArrayCert, ArrayFailure>;

/// Every t-tuple occurs exactly λ times in every t-column projection. The
/// witness is the lexicographically smallest (column set, tuple).
ArrayVerdict verify_oa(const SymbolArray& A, std::size_t t, std::size_t lambda, unsigned threads = 1);
/// Every t-tuple occurs at least λ times in every t-column projection.
ArrayVerdict verify_ca(const SymbolArray& A, std::size_t t, std::size_t lambda, unsigned threads = 1);

/// n × n square over the symbols [0, n).
class LatinSquare {
public:
    explicit LatinSquare(std::size_t n);
    static LatinSquare from_rows(const std::vector<Word>& rows);

    std::size_t order() const { return n_; }
    Entry operator()(std::size_t i, std::size_t j) const { return grid_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, Entry e);
    Word row(std::size_t i) const;

    bool operator==(const LatinSquare&) const = default;

private:
    std::size_t n_;
    std::vector<Entry> grid_;
};

bool verify_latin(const LatinSquare& L);

/// Exactly one coincidence per row when L is superimposed on M.
bool suitable(const LatinSquare& L, const LatinSquare& M);

struct MslsReport {
    bool mutually_suitable = false;
    /// n-1 squares that are mutually suitable.
    bool complete = false;
    std::optional<std::pair<std::size_t, std::size_t>> first_failing_pair;
};

MslsReport verify_msls(const std::vector<LatinSquare>& S);

struct MslsFailure {
    std::uint32_t symbol;  // column-0 symbol of the block
    bool in_row;           // otherwise a column
    std::size_t index;

    std::string message() const;
};

using MslsExtraction = Checked<std::vector<LatinSquare>, MslsFailure>;

/// Groups the rows of an OA(n², n+1, 2, 1) by column 0. For each nonzero
/// symbol in ascending order, its n rows restricted to columns 1..n form a
/// square. Throws std::invalid_argument when A is not such an OA.
MslsExtraction extract_msls(const SymbolArray& A);

/// The n-1 block squares of extract_msls without the Latin check.
std::vector<LatinSquare> block_squares(const SymbolArray& A);

/// L as the n² × 3 array of (row, column, symbol) triples, rows in row-major order.
SymbolArray latin_as_array(const LatinSquare& L);

} // namespace bgwc
