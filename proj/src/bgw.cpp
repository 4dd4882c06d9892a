#include "bgwc/bgw.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "bgwc/gf.hpp"
#include "bgwc/parallel.hpp"

namespace bgwc {

GMatrix::GMatrix(std::size_t rows, std::size_t cols, std::uint32_t u)
    : rows_(rows), cols_(cols), u_(u), data_(rows * cols, Entry::zero()) {
    if (u == 0) throw std::invalid_argument("group order must be positive");
}

GMatrix GMatrix::from_rows(const std::vector<Word>& rows, std::uint32_t u) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    GMatrix m(rows.size(), cols, u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void GMatrix::set(std::size_t i, std::size_t j, Entry e) {
    if (!group::valid(e, u_)) throw std::invalid_argument("entry exponent out of range for group order");
    data_[i * cols_ + j] = e;
}

Word GMatrix::row(std::size_t i) const {
    return Word(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void GMatrix::declare_circulant(std::uint32_t c) {
    if (!square()) throw std::invalid_argument("circulant matrix must be square");
    if (c >= u_) throw std::invalid_argument("circulant shift out of range");
    const std::size_t v = rows_;
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            const Entry base = (*this)(0, (j + v - i) % v);
            const Entry want = j >= i ? base : group::scale(base, c, u_);
            if ((*this)(i, j) != want) throw std::invalid_argument("matrix violates the declared circulant rule");
        }
    }
    shift_ = c;
}

ClassicalParams classical_params(std::uint64_t q, std::uint32_t m) {
    const auto pp = gf::prime_power(q);
    if (!pp || pp->first == 2) throw std::invalid_argument("q must be an odd prime power");
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    std::uint64_t qm = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (qm > std::numeric_limits<std::uint64_t>::max() / (q * q)) throw std::invalid_argument("parameters overflow");
        qm *= q;
    }
    return {(qm * q - 1) / (q - 1), qm, qm - qm / q};
}

std::vector<Entry> trace_row(std::uint64_t q, std::uint32_t m) {
    const auto params = classical_params(q, m);
    const auto [p, t] = *gf::prime_power(q);
    const gf::FieldCtx F(p, t * (m + 1));
    std::vector<Entry> row;
    row.reserve(params.v);
    for (std::uint64_t i = 0; i < params.v; ++i) {
        const auto x = F.power_of_beta(-static_cast<std::int64_t>(i));
        row.push_back(gf::dlog_in_subfield(F, q, gf::rel_trace(F, q, x)));
    }
    return row;
}

GMatrix omega_circulant(const std::vector<Entry>& first_row, std::uint32_t u, std::uint32_t c) {
    const std::size_t v = first_row.size();
    if (v == 0) throw std::invalid_argument("empty first row");
    if (c >= u) throw std::invalid_argument("circulant shift out of range");
    GMatrix A(v, v, u);
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            const Entry base = first_row[(j + v - i) % v];
            A.set(i, j, j >= i ? base : group::scale(base, c, u));
        }
    }
    A.declare_circulant(c);
    return A;
}

GMatrix trace_bgw(std::uint64_t q, std::uint32_t m) {
    return omega_circulant(trace_row(q, m), static_cast<std::uint32_t>(q - 1), 1);
}

// ---------------------------------------------------------------------------
// verify_bgw

std::string BgwFailure::message() const {
    std::ostringstream os;
    switch (reason) {
    case Reason::NotSquare: os << "matrix is not square"; break;
    case Reason::TooSmall: os << "order must be at least 2"; break;
    case Reason::EmptyRow: os << "row " << row_i << " has no nonzero entries"; break;
    case Reason::UnequalRowWeight:
        os << "row " << row_i << " has weight " << observed << ", expected " << expected;
        break;
    case Reason::ZeroBalance:
        os << "rows (" << row_i << "," << row_j << ") share no support; lambda would be 0";
        break;
    case Reason::IndivisibleBalance:
        os << "lambda = " << observed << " from rows (" << row_i << "," << row_j
           << ") is not divisible by the group order " << expected;
        break;
    case Reason::PairSize:
        os << "rows (" << row_i << "," << row_j << ") have " << observed << " common nonzero positions, expected "
           << expected;
        break;
    case Reason::Imbalance:
        os << "rows (" << row_i << "," << row_j << ") quotient w^" << element << " occurs " << observed
           << " times, expected " << expected;
        break;
    case Reason::CountingIdentity:
        os << "lambda*(v-1) = " << observed << " differs from k*(k-1) = " << expected;
        break;
    }
    return os.str();
}

namespace {

// Quotient counts for rows i, j; returns the multiset size.
std::uint64_t pair_counts(const GMatrix& W, std::size_t i, std::size_t j, std::vector<std::uint64_t>& counts) {
    const std::int64_t u = W.group_order();
    std::fill(counts.begin(), counts.end(), 0);
    std::uint64_t size = 0;
    const Entry* a = W.data().data() + i * W.cols();
    const Entry* b = W.data().data() + j * W.cols();
    for (std::size_t l = 0; l < W.cols(); ++l) {
        if (a[l].is_zero() || b[l].is_zero()) continue;
        std::int64_t e = std::int64_t{a[l].symbol()} - b[l].symbol();
        if (e < 0) e += u;
        ++counts[static_cast<std::size_t>(e)];
        ++size;
    }
    return size;
}

std::optional<BgwFailure> check_pair(const GMatrix& W, std::size_t i, std::size_t j, std::uint64_t lambda,
                                     std::vector<std::uint64_t>& counts) {
    const std::uint64_t size = pair_counts(W, i, j, counts);
    if (size != lambda) return BgwFailure{BgwFailure::Reason::PairSize, i, j, 0, size, lambda};
    const std::uint64_t each = lambda / W.group_order();
    for (std::uint32_t e = 0; e < W.group_order(); ++e)
        if (counts[e] != each) return BgwFailure{BgwFailure::Reason::Imbalance, i, j, e, counts[e], each};
    return std::nullopt;
}

} // namespace

BgwVerdict verify_bgw(const GMatrix& W, unsigned threads) {
    using R = BgwFailure::Reason;
    if (!W.square()) return BgwFailure{R::NotSquare};
    const std::size_t v = W.rows();
    if (v < 2) return BgwFailure{R::TooSmall};
    const std::uint32_t u = W.group_order();

    const std::uint64_t k = weight(W.row(0));
    if (k == 0) return BgwFailure{R::EmptyRow, 0};
    for (std::size_t i = 1; i < v; ++i) {
        const std::uint64_t w = weight(W.row(i));
        if (w != k) return BgwFailure{R::UnequalRowWeight, i, 0, 0, w, k};
    }

    std::vector<std::uint64_t> counts(u);
    const std::uint64_t lambda = pair_counts(W, 0, 1, counts);
    if (lambda == 0) return BgwFailure{R::ZeroBalance, 0, 1};
    if (lambda % u != 0) return BgwFailure{R::IndivisibleBalance, 0, 1, 0, lambda, u};

    // Each worker keeps its smallest failing row i; pairs inside a row are
    // scanned in order so the first failure in that row is the smallest.
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    const unsigned workers = std::max(1u, threads);
    std::vector<std::pair<std::size_t, std::size_t>> best(workers, {none, none});
    parallel_for(v, workers, [&](unsigned w, std::size_t i) {
        if (best[w].first != none) return;  // later rows cannot beat an earlier failure
        std::vector<std::uint64_t> local(u);
        for (std::size_t j = i + 1; j < v; ++j) {
            if (check_pair(W, i, j, lambda, local)) {
                best[w] = {i, j};
                return;
            }
        }
    });
    const auto worst = *std::min_element(best.begin(), best.end());
    if (worst.first != none) return *check_pair(W, worst.first, worst.second, lambda, counts);

    if (lambda * (v - 1) != k * (k - 1)) return BgwFailure{R::CountingIdentity, 0, 0, 0, lambda * (v - 1), k * (k - 1)};
    return BgwCert{v, k, lambda, u};
}

// ---------------------------------------------------------------------------
// Monomial equivalence

MonomialTransform MonomialTransform::identity(std::size_t rows, std::size_t cols) {
    MonomialTransform T;
    T.row_perm.resize(rows);
    T.col_perm.resize(cols);
    std::iota(T.row_perm.begin(), T.row_perm.end(), std::size_t{0});
    std::iota(T.col_perm.begin(), T.col_perm.end(), std::size_t{0});
    T.row_scalars.assign(rows, 0);
    T.col_scalars.assign(cols, 0);
    return T;
}

namespace {

void check_perm(const std::vector<std::size_t>& perm, std::size_t n, const char* what) {
    if (perm.size() != n) throw std::invalid_argument(std::string(what) + " has the wrong length");
    std::vector<bool> seen(n, false);
    for (auto x : perm) {
        if (x >= n || seen[x]) throw std::invalid_argument(std::string(what) + " is not a bijection");
        seen[x] = true;
    }
}

std::vector<std::size_t> invert_perm(const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t r = 0; r < perm.size(); ++r) inv[perm[r]] = r;
    return inv;
}

std::uint32_t mod_inverse(std::uint32_t t, std::uint32_t u) {
    if (u == 1) return 0;
    for (std::uint32_t s = 1; s < u; ++s)
        if (std::uint64_t{t} * s % u == 1) return s;
    throw std::invalid_argument("automorphism exponent is not invertible");
}

} // namespace

void validate(const MonomialTransform& T, std::size_t rows, std::size_t cols, std::uint32_t u) {
    check_perm(T.row_perm, rows, "row permutation");
    check_perm(T.col_perm, cols, "column permutation");
    if (T.row_scalars.size() != rows || T.col_scalars.size() != cols)
        throw std::invalid_argument("scalar vector has the wrong length");
    for (auto s : T.row_scalars)
        if (s >= u) throw std::invalid_argument("row scalar out of range");
    for (auto s : T.col_scalars)
        if (s >= u) throw std::invalid_argument("column scalar out of range");
    if (std::gcd(T.aut_exp, u) != 1) throw std::invalid_argument("automorphism exponent must be coprime to u");
}

GMatrix apply_monomial_equivalence(const GMatrix& W, const MonomialTransform& T) {
    const std::uint32_t u = W.group_order();
    validate(T, W.rows(), W.cols(), u);
    GMatrix out(W.rows(), W.cols(), u);
    for (std::size_t r = 0; r < W.rows(); ++r) {
        const std::size_t i = T.row_perm[r];
        for (std::size_t c = 0; c < W.cols(); ++c) {
            const std::size_t j = T.col_perm[c];
            const Entry x = group::pow(W(r, c), T.aut_exp, u);
            out.set(i, j, group::scale(x, std::int64_t{T.row_scalars[i]} + T.col_scalars[j], u));
        }
    }
    return out;
}

MonomialTransform compose(const MonomialTransform& second, const MonomialTransform& first, std::uint32_t u) {
    const std::size_t rows = first.row_perm.size(), cols = first.col_perm.size();
    validate(first, rows, cols, u);
    validate(second, rows, cols, u);
    const auto inv2r = invert_perm(second.row_perm), inv2c = invert_perm(second.col_perm);
    MonomialTransform T;
    T.row_perm.resize(rows);
    T.col_perm.resize(cols);
    T.row_scalars.resize(rows);
    T.col_scalars.resize(cols);
    for (std::size_t r = 0; r < rows; ++r) T.row_perm[r] = second.row_perm[first.row_perm[r]];
    for (std::size_t c = 0; c < cols; ++c) T.col_perm[c] = second.col_perm[first.col_perm[c]];
    const std::uint64_t t2 = second.aut_exp;
    for (std::size_t i = 0; i < rows; ++i)
        T.row_scalars[i] = group::reduce(static_cast<std::int64_t>(second.row_scalars[i] + t2 * first.row_scalars[inv2r[i]]), u);
    for (std::size_t j = 0; j < cols; ++j)
        T.col_scalars[j] = group::reduce(static_cast<std::int64_t>(second.col_scalars[j] + t2 * first.col_scalars[inv2c[j]]), u);
    T.aut_exp = u == 1 ? 1 : static_cast<std::uint32_t>(std::uint64_t{first.aut_exp} * t2 % u);
    return T;
}

MonomialTransform inverse(const MonomialTransform& T, std::uint32_t u) {
    const std::size_t rows = T.row_perm.size(), cols = T.col_perm.size();
    validate(T, rows, cols, u);
    const std::uint32_t s = mod_inverse(T.aut_exp % u, u);
    MonomialTransform I;
    I.row_perm = invert_perm(T.row_perm);
    I.col_perm = invert_perm(T.col_perm);
    I.row_scalars.resize(rows);
    I.col_scalars.resize(cols);
    for (std::size_t r = 0; r < rows; ++r)
        I.row_scalars[r] = group::reduce(-static_cast<std::int64_t>(std::uint64_t{s} * T.row_scalars[T.row_perm[r]] % u), u);
    for (std::size_t c = 0; c < cols; ++c)
        I.col_scalars[c] = group::reduce(-static_cast<std::int64_t>(std::uint64_t{s} * T.col_scalars[T.col_perm[c]] % u), u);
    I.aut_exp = u == 1 ? 1 : s;
    return I;
}

// ---------------------------------------------------------------------------
// Normal form

GMatrix NormalForm::block_matrix() const {
    const std::size_t top = residual.rows(), bottom = derived.rows();
    const std::size_t inner = derived.cols();
    GMatrix B(top + bottom, inner + 1, derived.group_order());
    for (std::size_t i = 0; i < top; ++i)
        for (std::size_t j = 0; j < inner; ++j) B.set(i, j + 1, residual(i, j));
    for (std::size_t i = 0; i < bottom; ++i) {
        B.set(top + i, 0, Entry::power(0));
        for (std::size_t j = 0; j < inner; ++j) B.set(top + i, j + 1, derived(i, j));
    }
    return B;
}

NormalForm normalize(const GMatrix& W, unsigned threads) {
    const auto verdict = verify_bgw(W, threads);
    if (!verdict) throw std::invalid_argument("normalize: input is not a BGW: " + verdict.failure().message());
    const std::size_t v = W.rows(), k = verdict.cert().k;
    const std::uint32_t u = W.group_order();

    MonomialTransform T = MonomialTransform::identity(v, v);
    std::size_t next_top = 0, next_bottom = v - k;
    for (std::size_t r = 0; r < v; ++r) {
        const Entry lead = W(r, 0);
        if (lead.is_zero()) {
            T.row_perm[r] = next_top++;
        } else {
            const std::size_t i = next_bottom++;
            T.row_perm[r] = i;
            T.row_scalars[i] = group::reduce(-static_cast<std::int64_t>(lead.exponent()), u);
        }
    }
    const GMatrix B = apply_monomial_equivalence(W, T);

    GMatrix R(v - k, v - 1, u), D(k, v - 1, u);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 1; j < v; ++j) {
            if (i < v - k)
                R.set(i, j - 1, B(i, j));
            else
                D.set(i - (v - k), j - 1, B(i, j));
        }
    return NormalForm{std::move(R), std::move(D), std::move(T)};
}

// ---------------------------------------------------------------------------

GMatrix reduce_group(const GMatrix& W, std::uint32_t g) {
    if (g == 0 || W.group_order() % g != 0) throw std::invalid_argument("reduce_group: g must divide the group order");
    GMatrix out(W.rows(), W.cols(), g);
    for (std::size_t i = 0; i < W.rows(); ++i)
        for (std::size_t j = 0; j < W.cols(); ++j) {
            const Entry e = W(i, j);
            out.set(i, j, e.is_zero() ? e : Entry::power(e.exponent() % g));
        }
    if (auto c = W.circulant_shift()) out.declare_circulant(*c % g);
    return out;
}

GMatrix scaled(const GMatrix& W, std::uint32_t c) {
    const std::uint32_t u = W.group_order();
    GMatrix out(W.rows(), W.cols(), u);
    for (std::size_t i = 0; i < W.rows(); ++i)
        for (std::size_t j = 0; j < W.cols(); ++j) out.set(i, j, group::scale(W(i, j), c, u));
    if (auto s = W.circulant_shift()) out.declare_circulant(*s);
    return out;
}

} // namespace bgwc
