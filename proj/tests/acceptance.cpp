// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bgwc/arrays.hpp"
#include "bgwc/bgw.hpp"
#include "bgwc/cli.hpp"
#include "bgwc/cwcode.hpp"
#include "bgwc/gf.hpp"

using namespace bgwc;

namespace {

struct Criterion {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) why << what;
        ok = ok && cond;
    }
};

int failures = 0;

void report(int n, const std::string& title, Criterion& c, double seconds) {
    std::cout << (c.ok ? "PASS " : "FAIL ") << n << ": " << title;
    if (!c.ok) std::cout << " [" << c.why.str() << "]";
    std::cout << " (" << static_cast<int>(seconds * 1000) << " ms)\n";
    failures += !c.ok;
}

template <class F>
void criterion(int n, const std::string& title, F body) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    report(n, title, c, dt.count());
}

// Plain pairwise scan, kept apart from the library's kernels.
CodeParams brute_params(const Code& C) {
    CodeParams p{C.length(), C.size(), C.length() + 1, C.length() + 1, C.alphabet_size()};
    const auto& W = C.words();
    for (const auto& x : W) {
        const auto w = static_cast<std::uint64_t>(std::count_if(x.begin(), x.end(), [](Entry e) { return !e.is_zero(); }));
        p.w = std::min(p.w, w);
    }
    for (std::size_t i = 0; i < W.size(); ++i)
        for (std::size_t j = i + 1; j < W.size(); ++j) {
            std::uint64_t d = 0;
            for (std::size_t t = 0; t < W[i].size(); ++t) d += W[i][t] != W[j][t];
            p.d = std::min(p.d, d);
        }
    return p;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

MonomialTransform random_transform(std::mt19937_64& rng, std::size_t v, std::uint32_t u) {
    MonomialTransform T = MonomialTransform::identity(v, v);
    std::shuffle(T.row_perm.begin(), T.row_perm.end(), rng);
    std::shuffle(T.col_perm.begin(), T.col_perm.end(), rng);
    std::uniform_int_distribution<std::uint32_t> scalar(0, u - 1);
    for (auto& s : T.row_scalars) s = scalar(rng);
    for (auto& s : T.col_scalars) s = scalar(rng);
    std::vector<std::uint32_t> units;
    for (std::uint32_t t = 1; t <= u; ++t)
        if (std::gcd(t, u) == 1) units.push_back(t);
    T.aut_exp = units[rng() % units.size()];
    return T;
}

std::string sweep(const std::string& threads) {
    std::ostringstream out, err;
    const int code = cli::main({"bgwc", "sweep", "--qmax", "9", "--mmax", "3", "--threads", threads}, out, err);
    return std::to_string(code) + "\n" + out.str();
}

} // namespace

int main() {
    criterion(1, "trace BGWs have classical parameters", [](Criterion& c) {
        const std::pair<std::uint64_t, std::uint32_t> grid[] = {{3, 1}, {3, 2}, {3, 3}, {5, 1},  {5, 2}, {7, 1},
                                                                 {7, 2}, {9, 1}, {9, 2}, {11, 1}, {13, 1}};
        for (auto [q, m] : grid) {
            const std::string tag = "(" + std::to_string(q) + "," + std::to_string(m) + ")";
            const auto verdict = verify_bgw(trace_bgw(q, m));
            c.expect(verdict.ok(), tag + " not a BGW");
            if (!verdict) continue;
            const BgwCert& cert = verdict.cert();
            const std::uint64_t v = (ipow(q, m + 1) - 1) / (q - 1), k = ipow(q, m), lambda = k - ipow(q, m - 1);
            c.expect(cert.v == v && cert.k == k && cert.lambda == lambda && cert.u == q - 1, tag + " parameters");
        }
        const auto c51 = verify_bgw(trace_bgw(5, 1));
        c.expect(c51 && c51.cert() == BgwCert{6, 5, 4, 4}, "(5,1) is not BGW(6,5,4)");
    });

    criterion(2, "full_code(5,1,4) is an optimal equidistant (6,24,5,5)_5 code", [](Criterion& c) {
        const Code C = full_code({5, 1, 4});
        const ScannedParams s = scan_params(C);
        c.expect(s.constant_weight && s.params == CodeParams{6, 24, 5, 5, 5}, "scanned " + to_string(s.params));
        const DistanceProfile prof = distance_set(C);
        c.expect(prof.is_equidistant() && prof.min() == 5, "not equidistant at distance 5");
        const RestrictedBound rb = restricted_johnson(6, 5, 5, 5);
        c.expect(rb.denominator == 5 && rb.value == 24u, "restricted bound");
        const auto opt = verify_optimal(C, {6, 24, 5, 5, 5});
        c.expect(opt && opt.cert().optimal, "not certified optimal");
    });

    criterion(3, "full_code(5,1,2) is a negashift orbit (6,12,4,5)_3 with two distances", [](Criterion& c) {
        const Code C = full_code({5, 1, 2});
        const ScannedParams s = scan_params(C);
        c.expect(s.constant_weight && s.params == CodeParams{6, 12, 4, 5, 3}, "scanned " + to_string(s.params));
        const DistanceProfile prof = distance_set(C);
        c.expect(prof.min() == 4 && prof.is_bidistant(), "distance profile");
        for (const auto& x : C.words()) {
            c.expect(C.contains(omega_shift(x, 1, 2)), "not closed under negashifts");
        }
        const Code orbit = generate_from_seed(C.words().front(), 1, 2);
        c.expect(orbit.size() == 12 && orbit == C, "orbit size " + std::to_string(orbit.size()));
    });

    criterion(4, "grid q <= 9, m <= 3, v <= 400, g >= 2: scanned and theorem parameters agree, both codes optimal",
              [](Criterion& c) {
                  std::size_t cases = 0;
                  for (std::uint64_t q : {3, 5, 7, 9})
                      for (std::uint32_t m = 1; m <= 3; ++m) {
                          if ((ipow(q, m + 1) - 1) / (q - 1) > 400) continue;
                          for (std::uint32_t g = 2; g < q; ++g) {
                              if ((q - 1) % g) continue;
                              const ConstructionRequest req{q, m, g};
                              const std::string tag =
                                  "(" + std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(g) + ")";
                              const TheoremParams thm = thm_main_params(req);
                              const Code F = full_code(req), D = derived_code(req);
                              c.expect(brute_params(F) == thm.full, tag + " full params");
                              c.expect(brute_params(D) == thm.derived, tag + " derived params");
                              const auto fv = verify_optimal(F, thm.full, thm.derived);
                              const auto dv = verify_optimal(D, thm.derived);
                              c.expect(fv && fv.cert().optimal, tag + " full not optimal");
                              c.expect(dv && dv.cert().optimal, tag + " derived not optimal");
                              ++cases;
                          }
                      }
                  c.expect(cases == 24, "case count " + std::to_string(cases));
              });

    criterion(5, "(3,2), g = 2 gives an optimal equidistant (13,26,9,9)_3 code", [](Criterion& c) {
        const ConstructionRequest req{3, 2, 2};
        const Code C = full_code(req);
        c.expect(scan_params(C).params == CodeParams{13, 26, 9, 9, 3}, "parameters");
        c.expect(C.size() == ipow(3, 3) - 1, "size is not q^(m+1) - 1");
        c.expect(distance_set(C).is_equidistant(), "not equidistant");
        const auto v = verify_optimal(C, thm_main_params(req).full, thm_main_params(req).derived);
        c.expect(v && v.cert().optimal && v.cert().best() == 26u, "not certified optimal at 26");
    });

    criterion(6, "zero word appended: OA_5(25,6,2,1) from g = 4, CA_3 but not OA from g = 2", [](Criterion& c) {
        const auto oa = verify_oa(append_zero_word(full_code({5, 1, 4})), 2, 1);
        c.expect(oa && oa.cert().N == 25 && oa.cert().k == 6, "OA(25,6,2,1)");
        const SymbolArray A = append_zero_word(full_code({5, 1, 2}));
        c.expect(A.alphabet_size() == 3, "alphabet");
        c.expect(static_cast<bool>(verify_ca(A, 2, 1)), "CA(t = 2, lambda = 1)");
        const auto strict = verify_oa(A, 2, 1);
        c.expect(!strict, "unexpectedly an OA");
        if (!strict) {
            const ArrayFailure& f = strict.failure();
            std::size_t n = 0;
            for (std::size_t r = 0; r < A.rows(); ++r)
                n += A(r, f.columns[0]).symbol() == f.tuple[0] && A(r, f.columns[1]).symbol() == f.tuple[1];
            c.expect(f.columns.size() == 2 && n == f.count && n != 1, "witness does not reproduce");
        }
    });

    criterion(7, "MSLS: q - 1 Latin squares, mutually suitable, for q in {3,5,7}", [](Criterion& c) {
        for (std::uint64_t q : {3, 5, 7}) {
            const std::string tag = "q=" + std::to_string(q) + ": ";
            const auto g = static_cast<std::uint32_t>(q - 1);
            const SymbolArray A = append_zero_word(full_code({q, 1, g}));
            const auto ext = extract_msls(A);
            if (!ext) {
                c.expect(false, tag + ext.failure().message());
                continue;
            }
            const auto& S = ext.cert();
            c.expect(S.size() == q - 1, tag + "square count");
            for (const auto& L : S) c.expect(verify_latin(L), tag + "square not Latin");
            const MslsReport r = verify_msls(S);
            c.expect(r.mutually_suitable && r.complete, tag + "not a complete suitable system");
        }
    });

    criterion(8, "100 random monomial transforms keep the BGW certificate", [](Criterion& c) {
        std::mt19937_64 rng(0x5eed);
        for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{5, 1}, {3, 2}}) {
            const GMatrix W = trace_bgw(q, m);
            const BgwCert base = verify_bgw(W).cert();
            for (int i = 0; i < 100; ++i) {
                const GMatrix X = apply_monomial_equivalence(W, random_transform(rng, W.rows(), W.group_order()));
                const auto v = verify_bgw(X);
                c.expect(v && v.cert() == base, "certificate changed");
            }
        }
    });

    criterion(9, "sweep --qmax 9 --mmax 3 is byte-identical across runs and thread counts", [](Criterion& c) {
        const std::string a = sweep("1"), b = sweep("1"), t8 = sweep("8");
        c.expect(a.rfind("0\n", 0) == 0, "sweep did not exit 0");
        c.expect(a == b, "consecutive runs differ");
        c.expect(a == t8, "threads 1 and 8 differ");
    });

    std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << " of 9 criteria failing\n";
    return failures;
}
