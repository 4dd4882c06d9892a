#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bgwc/checked.hpp"
#include "bgwc/entry.hpp"

namespace bgwc {

/// Dense (0,G)-matrix over the cyclic group of order u, row-major.
class GMatrix {
public:
    GMatrix(std::size_t rows, std::size_t cols, std::uint32_t u);
    /// Throws std::invalid_argument on ragged rows or exponents ≥ u.
    static GMatrix from_rows(const std::vector<Word>& rows, std::uint32_t u);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t group_order() const { return u_; }
    bool square() const { return rows_ == cols_; }

    Entry operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Entry e);
    Word row(std::size_t i) const;
    const std::vector<Entry>& data() const { return data_; }

    /// Exponent c when the matrix is declared ω^c-circulant.
    std::optional<std::uint32_t> circulant_shift() const { return shift_; }
    /// Checks the ω^c-circulant rule against row 0 before recording it.
    void declare_circulant(std::uint32_t c);
    void clear_circulant() { shift_.reset(); }

    bool operator==(const GMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint32_t u_;
    std::vector<Entry> data_;
    std::optional<std::uint32_t> shift_;
};

struct ClassicalParams {
    std::uint64_t v;
    std::uint64_t k;
    std::uint64_t lambda;
    bool operator==(const ClassicalParams&) const = default;
};

/// ((q^(m+1)-1)/(q-1), q^m, q^m - q^(m-1)); q must be an odd prime power.
ClassicalParams classical_params(std::uint64_t q, std::uint32_t m);

/// First row of the trace construction over GF(q^(m+1)), length v, with
/// entries encoded as powers of ω = β^v (group order q-1). Entry i is
/// Tr(β^-i), which makes the ω-circulant on this row a BGW.
std::vector<Entry> trace_row(std::uint64_t q, std::uint32_t m);

/// v × v matrix with A[i][j] = α_(j-i) for i ≤ j and ω^c α_(j-i mod v) for j < i.
GMatrix omega_circulant(const std::vector<Entry>& first_row, std::uint32_t u, std::uint32_t c);

struct BgwCert {
    std::uint64_t v;
    std::uint64_t k;
    std::uint64_t lambda;
    std::uint32_t u;
    bool operator==(const BgwCert&) const = default;
};

struct BgwFailure {
    enum class Reason {
        NotSquare,
        TooSmall,
        EmptyRow,
        UnequalRowWeight,
        ZeroBalance,
        IndivisibleBalance,
        PairSize,
        Imbalance,
        CountingIdentity,
    };
    Reason reason;
    std::size_t row_i = 0;
    std::size_t row_j = 0;
    /// Offending group exponent for Imbalance.
    std::uint32_t element = 0;
    /// Observed count (row weight, pair size or element multiplicity).
    std::uint64_t observed = 0;
    std::uint64_t expected = 0;

    std::string message() const;
};

using BgwVerdict = Checked<BgwCert, BgwFailure>;

/// Exhaustive Θ(v²k) balance check. The witness is the lexicographically
/// smallest failing pair for any thread count.
BgwVerdict verify_bgw(const GMatrix& W, unsigned threads = 1);

/// Row/column permutations are stored as images: row r of the input lands at
/// row_perm[r]. Scalars are exponents of ω; aut_exp t acts as x ↦ x^t.
struct MonomialTransform {
    std::vector<std::size_t> row_perm;
    std::vector<std::size_t> col_perm;
    std::vector<std::uint32_t> row_scalars;
    std::vector<std::uint32_t> col_scalars;
    std::uint32_t aut_exp = 1;

    static MonomialTransform identity(std::size_t rows, std::size_t cols);
    bool operator==(const MonomialTransform&) const = default;
};

/// Validates permutations, scalar ranges and gcd(t, u) = 1.
void validate(const MonomialTransform& T, std::size_t rows, std::size_t cols, std::uint32_t u);

/// out[i][j] = ω^row_scalars[i] · W[π⁻¹i][σ⁻¹j]^t · ω^col_scalars[j].
GMatrix apply_monomial_equivalence(const GMatrix& W, const MonomialTransform& T);

/// The transform equivalent to applying `first` and then `second`.
MonomialTransform compose(const MonomialTransform& second, const MonomialTransform& first, std::uint32_t u);
MonomialTransform inverse(const MonomialTransform& T, std::uint32_t u);

struct NormalForm {
    GMatrix residual;  // (v-k) × (v-1)
    GMatrix derived;   // k × (v-1)
    MonomialTransform transform;

    /// [[0-column, R], [1-column, D]].
    GMatrix block_matrix() const;
};

/// Moves rows with Zero in column 0 to the top (stable) and scales the rest so
/// column 0 reads 1. Throws std::invalid_argument when W is not a BGW.
NormalForm normalize(const GMatrix& W, unsigned threads = 1);

/// Entrywise ω^e ↦ ω'^(e mod g) onto the subgroup of order g, Zero fixed.
/// A declared circulant shift c becomes c mod g.
GMatrix reduce_group(const GMatrix& W, std::uint32_t g);

/// ω^c · W.
GMatrix scaled(const GMatrix& W, std::uint32_t c);

/// The ω-circulant trace matrix for (q, m), shift 1.
GMatrix trace_bgw(std::uint64_t q, std::uint32_t m);

} // namespace bgwc
