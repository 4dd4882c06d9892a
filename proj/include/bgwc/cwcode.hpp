#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bgwc/bgw.hpp"
#include "bgwc/checked.hpp"
#include "bgwc/entry.hpp"

namespace bgwc {

using Codeword = Word;

/// A set of length-n words over {0} ∪ ⟨ω'⟩ with |⟨ω'⟩| = g, alphabet size
/// g + 1. Keeps insertion order; duplicates are rejected.
class Code {
public:
    Code(std::size_t n, std::uint32_t g);

    /// False when the word is already present. Throws on wrong length or
    /// exponents ≥ g.
    bool insert(Codeword w);
    bool contains(const Codeword& w) const { return index_.count(w) != 0; }

    std::size_t length() const { return n_; }
    std::uint32_t group_order() const { return g_; }
    std::uint32_t alphabet_size() const { return g_ + 1; }
    std::size_t size() const { return words_.size(); }
    const std::vector<Codeword>& words() const { return words_; }

    /// Set equality; insertion order is ignored.
    bool operator==(const Code& other) const {
        return n_ == other.n_ && g_ == other.g_ && index_ == other.index_;
    }

private:
    std::size_t n_;
    std::uint32_t g_;
    std::vector<Codeword> words_;
    std::set<Codeword> index_;
};

std::size_t hamming_distance(const Codeword& x, const Codeword& y);

/// (ω^c·x_(n-1), x_0, …, x_(n-2)) over group order g.
Codeword omega_shift(const Codeword& x, std::uint32_t c, std::uint32_t g);

/// Orbit of x under repeated omega_shift, in generation order.
Code generate_from_seed(const Codeword& x, std::uint32_t c, std::uint32_t g);

/// Distinct rows of W as a code over W's group order.
Code rows_as_code(const GMatrix& W);

struct ConstructionRequest {
    std::uint64_t q;
    std::uint32_t m;
    std::uint32_t g;
};

/// Throws std::invalid_argument unless q is an odd prime power, m ≥ 1 and g | q-1.
void validate(const ConstructionRequest& req);

/// Theorems are stated for m > 1; m = 1 is accepted and flagged by callers.
inline bool below_theorem_range(const ConstructionRequest& req) { return req.m < 2; }

/// Union over j < g of the rows of ω'^j·W', W' the reduced trace matrix.
Code full_code(const ConstructionRequest& req);

/// Rows of the derived part D of the normalized trace matrix, reduced to order g.
Code derived_code(const ConstructionRequest& req);

struct CodeParams {
    std::uint64_t n = 0;
    std::uint64_t M = 0;
    std::uint64_t d = 0;
    std::uint64_t w = 0;
    std::uint64_t a = 0;
    bool operator==(const CodeParams&) const = default;
};

std::string to_string(const CodeParams& p);

/// Pairwise distance multiset: distance -> number of unordered pairs.
struct DistanceProfile {
    std::map<std::uint64_t, std::uint64_t> counts;

    std::uint64_t min() const { return counts.begin()->first; }
    bool is_equidistant() const { return counts.size() == 1; }
    bool is_bidistant() const { return counts.size() == 2; }
    std::set<std::uint64_t> values() const;
    bool operator==(const DistanceProfile&) const = default;
};

/// Exhaustive Θ(M²n) scan; throws when M < 2.
DistanceProfile distance_set(const Code& C, unsigned threads = 1);

/// Same profile in Θ(Mn) for codes that are a single orbit of ω^c-shifting
/// (an isometry). Returns nullopt when C is not such an orbit.
std::optional<DistanceProfile> orbit_distance_set(const Code& C, std::uint32_t c);

struct ScannedParams {
    CodeParams params;
    /// False when words have different weights; params.w is then the minimum.
    bool constant_weight = true;
};

/// Recomputes n, M, d, w by exhaustive scan (d = 0 when M < 2).
ScannedParams scan_params(const Code& C, unsigned threads = 1);

struct TheoremParams {
    CodeParams derived;
    CodeParams full;
};

/// d = 2q^m - (g+1)(q^m - q^(m-1))/g; throws when d is not integral.
TheoremParams thm_main_params(const ConstructionRequest& req);

struct RestrictedBound {
    std::optional<std::uint64_t> value;  // absent when the denominator is ≤ 0
    std::int64_t denominator;
};

/// floor(n·d·(a-1) / (a·w² - 2(a-1)·n·w + n·d·(a-1))) when the denominator is positive.
RestrictedBound restricted_johnson(std::uint64_t n, std::uint64_t d, std::uint64_t w, std::uint64_t a);

/// floor((a-1)·n·inner / w); inner must be ≥ 1.
std::uint64_t unrestricted_johnson(std::uint64_t n, std::uint64_t d, std::uint64_t w, std::uint64_t a,
                                   std::uint64_t inner);

struct BoundReport {
    std::optional<std::uint64_t> restricted;
    std::optional<std::uint64_t> unrestricted;
    /// Restricted bound of the punctured parameters fed to the unrestricted bound.
    std::optional<std::uint64_t> inner;
    std::uint64_t achieved_M = 0;
    bool optimal = false;
    std::int64_t denominator = 0;

    /// Smallest applicable bound.
    std::optional<std::uint64_t> best() const;
};

struct ParamMismatch {
    CodeParams scanned;
    CodeParams claimed;
    bool constant_weight = true;
    std::string message() const;
};

using OptimalityVerdict = Checked<BoundReport, ParamMismatch>;

/// Scans C, checks it against `params`, and evaluates the bounds. When the
/// punctured parameters (n-1, d, w-1) are supplied, their restricted bound is
/// the inner term of the unrestricted bound.
OptimalityVerdict verify_optimal(const Code& C, const CodeParams& params,
                                 const std::optional<CodeParams>& derived = std::nullopt, unsigned threads = 1);

/// verify_optimal with a distance profile computed by the caller (for example
/// by orbit_distance_set); weights are still scanned.
OptimalityVerdict verify_optimal_profiled(const Code& C, const CodeParams& params, const DistanceProfile& profile,
                                          const std::optional<CodeParams>& derived = std::nullopt);

/// Bounds for already-scanned parameters, using (n-1, d, w-1, a) for the
/// unrestricted inner term.
BoundReport assess_bounds(const CodeParams& params);

} // namespace bgwc
