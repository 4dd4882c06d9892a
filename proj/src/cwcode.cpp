#include "bgwc/cwcode.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bgwc/gf.hpp"
#include "bgwc/parallel.hpp"

namespace bgwc {

Code::Code(std::size_t n, std::uint32_t g) : n_(n), g_(g) {
    if (g == 0) throw std::invalid_argument("group order must be positive");
}

bool Code::insert(Codeword w) {
    if (w.size() != n_) throw std::invalid_argument("codeword length mismatch");
    for (Entry e : w)
        if (!group::valid(e, g_)) throw std::invalid_argument("codeword exponent out of range");
    if (!index_.insert(w).second) return false;
    words_.push_back(std::move(w));
    return true;
}

std::size_t hamming_distance(const Codeword& x, const Codeword& y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

Codeword omega_shift(const Codeword& x, std::uint32_t c, std::uint32_t g) {
    if (x.empty()) return x;
    Codeword out(x.size());
    out[0] = group::scale(x.back(), c, g);
    std::copy(x.begin(), x.end() - 1, out.begin() + 1);
    return out;
}

Code generate_from_seed(const Codeword& x, std::uint32_t c, std::uint32_t g) {
    Code C(x.size(), g);
    Codeword cur = x;
    while (C.insert(cur)) cur = omega_shift(cur, c, g);
    return C;
}

Code rows_as_code(const GMatrix& W) {
    Code C(W.cols(), W.group_order());
    for (std::size_t i = 0; i < W.rows(); ++i) C.insert(W.row(i));
    return C;
}

void validate(const ConstructionRequest& req) {
    const auto pp = gf::prime_power(req.q);
    if (!pp || pp->first == 2) throw std::invalid_argument("q must be an odd prime power");
    if (req.m < 1) throw std::invalid_argument("m must be at least 1");
    if (req.g == 0 || (req.q - 1) % req.g != 0) throw std::invalid_argument("g must divide q-1");
}

Code full_code(const ConstructionRequest& req) {
    validate(req);
    const GMatrix reduced = reduce_group(trace_bgw(req.q, req.m), req.g);
    Code C(reduced.cols(), req.g);
    for (std::uint32_t j = 0; j < req.g; ++j) {
        const GMatrix layer = scaled(reduced, j);
        for (std::size_t i = 0; i < layer.rows(); ++i) C.insert(layer.row(i));
    }
    return C;
}

Code derived_code(const ConstructionRequest& req) {
    validate(req);
    const NormalForm nf = normalize(trace_bgw(req.q, req.m));
    return rows_as_code(reduce_group(nf.derived, req.g));
}

std::string to_string(const CodeParams& p) {
    std::ostringstream os;
    os << "(" << p.n << ", " << p.M << ", " << p.d << ", " << p.w << ")_" << p.a;
    return os.str();
}

std::set<std::uint64_t> DistanceProfile::values() const {
    std::set<std::uint64_t> out;
    for (const auto& [d, _] : counts) out.insert(d);
    return out;
}

namespace {

// Words packed as one symbol per byte when the alphabet allows it, for a
// vectorizable inner loop.
template <class Sym>
std::vector<Sym> pack(const Code& C) {
    std::vector<Sym> buf;
    buf.reserve(C.size() * C.length());
    for (const auto& w : C.words())
        for (Entry e : w) buf.push_back(static_cast<Sym>(e.symbol()));
    return buf;
}

template <class Sym>
DistanceProfile scan_packed(const std::vector<Sym>& buf, std::size_t M, std::size_t n, unsigned threads) {
    const unsigned workers = std::max(1u, threads);
    std::vector<std::vector<std::uint64_t>> hist(workers, std::vector<std::uint64_t>(n + 1, 0));
    parallel_for(M, workers, [&](unsigned w, std::size_t i) {
        const Sym* x = buf.data() + i * n;
        auto& h = hist[w];
        for (std::size_t j = i + 1; j < M; ++j) {
            const Sym* y = buf.data() + j * n;
            std::size_t d = 0;
            for (std::size_t l = 0; l < n; ++l) d += x[l] != y[l];
            ++h[d];
        }
    });
    DistanceProfile prof;
    for (std::size_t d = 0; d <= n; ++d) {
        std::uint64_t total = 0;
        for (const auto& h : hist) total += h[d];
        if (total) prof.counts[d] = total;
    }
    return prof;
}

} // namespace

DistanceProfile distance_set(const Code& C, unsigned threads) {
    if (C.size() < 2) throw std::invalid_argument("distance_set: code must have at least two words");
    if (C.alphabet_size() <= 256) return scan_packed(pack<std::uint8_t>(C), C.size(), C.length(), threads);
    return scan_packed(pack<std::uint32_t>(C), C.size(), C.length(), threads);
}

std::optional<DistanceProfile> orbit_distance_set(const Code& C, std::uint32_t c) {
    if (C.size() < 2) throw std::invalid_argument("orbit_distance_set: code must have at least two words");
    // Closure plus a single orbit makes every word's distance distribution equal to word 0's.
    for (const auto& w : C.words())
        if (!C.contains(omega_shift(w, c, C.group_order()))) return std::nullopt;
    if (generate_from_seed(C.words().front(), c, C.group_order()).size() != C.size()) return std::nullopt;

    const auto& x = C.words().front();
    std::map<std::uint64_t, std::uint64_t> from_one;
    for (std::size_t j = 1; j < C.size(); ++j) ++from_one[hamming_distance(x, C.words()[j])];
    DistanceProfile prof;
    for (const auto& [d, cnt] : from_one) {
        const std::uint64_t ordered = cnt * C.size();
        if (ordered % 2) return std::nullopt;
        prof.counts[d] = ordered / 2;
    }
    return prof;
}

namespace {

ScannedParams scan_weights(const Code& C) {
    ScannedParams out;
    out.params.n = C.length();
    out.params.M = C.size();
    out.params.a = C.alphabet_size();
    if (C.size() == 0) return out;
    std::uint64_t wmin = std::numeric_limits<std::uint64_t>::max(), wmax = 0;
    for (const auto& w : C.words()) {
        const std::uint64_t x = weight(w);
        wmin = std::min(wmin, x);
        wmax = std::max(wmax, x);
    }
    out.params.w = wmin;
    out.constant_weight = wmin == wmax;
    return out;
}

} // namespace

ScannedParams scan_params(const Code& C, unsigned threads) {
    ScannedParams out = scan_weights(C);
    if (C.size() >= 2) out.params.d = distance_set(C, threads).min();
    return out;
}

TheoremParams thm_main_params(const ConstructionRequest& req) {
    validate(req);
    const auto bgw = classical_params(req.q, req.m);
    const std::uint64_t qm = bgw.k, g = req.g;
    const std::uint64_t num = (g + 1) * bgw.lambda;
    if (num % g != 0) throw std::invalid_argument("Theorem distance is not an integer for these parameters");
    if (2 * qm < num / g) throw std::invalid_argument("Theorem distance is negative");
    const std::uint64_t d = 2 * qm - num / g;
    const std::uint64_t a = g + 1;

    if (g == req.q - 1 && d != qm) throw std::logic_error("g = q-1 must give d = q^m");
    if (g == 2 && 2 * d != (qm / req.q) * (req.q + 3)) throw std::logic_error("g = 2 must give d = q^(m-1)(q+3)/2");

    return {CodeParams{bgw.v - 1, qm, d, qm - 1, a}, CodeParams{bgw.v, g * bgw.v, d, qm, a}};
}

RestrictedBound restricted_johnson(std::uint64_t n, std::uint64_t d, std::uint64_t w, std::uint64_t a) {
    if (n == 0 || d == 0 || w == 0 || a < 2) throw std::invalid_argument("restricted_johnson: invalid parameters");
    __extension__ using I = __int128;
    const I num = I(n) * d * (a - 1);
    const I den = I(a) * w * w - I(2) * (a - 1) * n * w + num;
    if (den > std::numeric_limits<std::int64_t>::max() || den < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("restricted_johnson: denominator overflow");
    RestrictedBound r{std::nullopt, static_cast<std::int64_t>(den)};
    if (den > 0) r.value = static_cast<std::uint64_t>(num / den);
    return r;
}

std::uint64_t unrestricted_johnson(std::uint64_t n, std::uint64_t d, std::uint64_t w, std::uint64_t a,
                                   std::uint64_t inner) {
    (void)d;
    if (inner < 1) throw std::invalid_argument("unrestricted_johnson: inner bound must be at least 1");
    if (n == 0 || w == 0 || a < 2) throw std::invalid_argument("unrestricted_johnson: invalid parameters");
    __extension__ using I = unsigned __int128;
    return static_cast<std::uint64_t>(I(a - 1) * n * inner / w);
}

std::optional<std::uint64_t> BoundReport::best() const {
    std::optional<std::uint64_t> b = restricted;
    if (unrestricted && (!b || *unrestricted < *b)) b = unrestricted;
    return b;
}

std::string ParamMismatch::message() const {
    std::ostringstream os;
    os << "scanned " << to_string(scanned) << " but claimed " << to_string(claimed);
    if (!constant_weight) os << " (code is not constant weight)";
    return os.str();
}

namespace {

BoundReport bounds_for(const CodeParams& p, const std::optional<CodeParams>& punctured) {
    BoundReport r;
    r.achieved_M = p.M;
    if (p.d > 0 && p.w > 0) {
        const auto rb = restricted_johnson(p.n, p.d, p.w, p.a);
        r.restricted = rb.value;
        r.denominator = rb.denominator;
    }
    if (punctured && punctured->n > 0 && punctured->w > 0 && punctured->d > 0) {
        r.inner = restricted_johnson(punctured->n, punctured->d, punctured->w, punctured->a).value;
        if (r.inner && *r.inner >= 1) r.unrestricted = unrestricted_johnson(p.n, p.d, p.w, p.a, *r.inner);
    }
    r.optimal = (r.restricted && *r.restricted == p.M) || (r.unrestricted && *r.unrestricted == p.M);
    return r;
}

} // namespace

BoundReport assess_bounds(const CodeParams& params) {
    std::optional<CodeParams> punctured;
    if (params.n >= 2 && params.w >= 2) punctured = CodeParams{params.n - 1, 0, params.d, params.w - 1, params.a};
    return bounds_for(params, punctured);
}

OptimalityVerdict verify_optimal(const Code& C, const CodeParams& params, const std::optional<CodeParams>& derived,
                                 unsigned threads) {
    if (C.size() == 0) throw std::invalid_argument("verify_optimal: empty code");
    const ScannedParams s = scan_params(C, threads);
    if (!s.constant_weight || s.params != params) return ParamMismatch{s.params, params, s.constant_weight};
    return bounds_for(s.params, derived);
}

OptimalityVerdict verify_optimal_profiled(const Code& C, const CodeParams& params, const DistanceProfile& profile,
                                          const std::optional<CodeParams>& derived) {
    if (C.size() < 2) throw std::invalid_argument("verify_optimal_profiled: code must have at least two words");
    ScannedParams s = scan_weights(C);
    s.params.d = profile.min();
    if (!s.constant_weight || s.params != params) return ParamMismatch{s.params, params, s.constant_weight};
    return bounds_for(s.params, derived);
}

} // namespace bgwc
