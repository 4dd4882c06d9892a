#include "bgwc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bgwc/arrays.hpp"
#include "bgwc/bgw.hpp"
#include "bgwc/cwcode.hpp"
#include "bgwc/gf.hpp"
#include "bgwc/io.hpp"

namespace bgwc::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* flag) {
    if (!v) throw std::invalid_argument(std::string("missing required flag --") + flag);
    return *v;
}

std::uint32_t need32(const std::optional<std::uint64_t>& v, const char* flag) {
    const std::uint64_t x = need(v, flag);
    if (x > 0xffffffffu) throw std::invalid_argument(std::string("--") + flag + " is too large");
    return static_cast<std::uint32_t>(x);
}

void write_file(const std::string& path, const std::string& text) {
    if (path.empty()) return;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + path);
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open input file " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

bool lines_are_permutations(const LatinSquare& L, bool by_row) {
    const std::size_t n = L.order();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> seen(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t s = (by_row ? L(i, j) : L(j, i)).symbol();
            if (seen[s]) return false;
            seen[s] = true;
        }
    }
    return true;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_str(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "n/a"; }

std::string profile_str(const DistanceProfile& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : p.counts) {
        os << (first ? "" : " ") << d << "x" << c;
        first = false;
    }
    return os.str();
}

void print_grid(std::ostream& out, const std::string& json, const std::vector<Word>& rows, std::uint32_t g,
                Format f) {
    switch (f) {
    case Format::Json: out << json; break;
    case Format::Text: out << io::text_grid(rows); break;
    case Format::Pretty: out << io::pretty_grid(rows, g); break;
    }
}

void print_bounds(std::ostream& out, const BoundReport& r) {
    out << "restricted bound: " << opt_str(r.restricted) << " (denominator " << r.denominator << ")\n";
    out << "unrestricted bound: " << opt_str(r.unrestricted) << " (inner " << opt_str(r.inner) << ")\n";
    out << "optimal: " << yes_no(r.optimal) << " (achieved M = " << r.achieved_M << ")\n";
}

// ---------------------------------------------------------------------------

int cmd_field(const RunConfig& cfg, std::ostream& out) {
    const auto p = need32(cfg.p, "p"), s = need32(cfg.s, "s");
    const gf::FieldCtx F(p, s);
    out << "field GF(" << p << "^" << s << "), order " << F.order() << "\n";
    out << "modulus: " << F.modulus().to_string() << "\n";
    out << "beta: " << F.describe_code(F.beta_code()) << " (code " << F.beta_code() << "), order "
        << F.multiplicative_order(F.beta()) << "\n";
    out << "minus one: beta^" << F.neg(F.one()).log() << "\n";
    if (cfg.tables) {
        out << "exp table (e code):\n";
        for (std::size_t e = 0; e < F.exp_table().size(); ++e) out << e << " " << F.exp_table()[e] << "\n";
    }
    return kOk;
}

int report_bgw(const BgwVerdict& verdict, std::ostream& out) {
    if (!verdict) {
        out << "verified: no (" << verdict.failure().message() << ")\n";
        return kFailed;
    }
    const auto& c = verdict.cert();
    out << "verified: BGW(" << c.v << ", " << c.k << ", " << c.lambda << ") over the group of order " << c.u
        << "\n";
    out << "lambda/u: " << c.lambda / c.u << "\n";
    return kOk;
}

int cmd_bgw(const RunConfig& cfg, std::ostream& out) {
    const auto q = need(cfg.q, "q");
    const auto m = need32(cfg.m, "m");
    const auto params = classical_params(q, m);
    const GMatrix W = trace_bgw(q, m);
    out << "bgw q=" << q << " m=" << m << "\n";
    out << "classical params: (" << params.v << ", " << params.k << ", " << params.lambda << ")\n";
    out << "circulant shift: " << *W.circulant_shift() << "\n";
    const auto verdict = verify_bgw(W, cfg.threads);
    int rc = report_bgw(verdict, out);
    if (rc == kOk) {
        const auto& cert = verdict.cert();
        const bool classical = cert.v == params.v && cert.k == params.k && cert.lambda == params.lambda;
        out << "classical: " << yes_no(classical) << "\n";
        if (!classical) rc = kFailed;
    }
    const std::string json = io::to_json(W);
    write_file(cfg.out_path, json);
    out << "matrix:\n";
    print_grid(out, json, io::rows_of(W), W.group_order(), cfg.format);
    return rc;
}

int cmd_code(const RunConfig& cfg, std::ostream& out) {
    const ConstructionRequest req{need(cfg.q, "q"), need32(cfg.m, "m"), need32(cfg.g, "g")};
    validate(req);
    const TheoremParams thm = thm_main_params(req);
    const Code C = cfg.derived ? derived_code(req) : full_code(req);
    const CodeParams& claimed = cfg.derived ? thm.derived : thm.full;

    out << (cfg.derived ? "derived" : "full") << " code q=" << req.q << " m=" << req.m << " g=" << req.g
        << " alphabet=" << C.alphabet_size() << "\n";
    if (below_theorem_range(req)) out << "note: m = 1 lies below the theorem's stated range m > 1\n";
    out << "theorem params: " << to_string(claimed) << "\n";

    DistanceProfile profile;
    if (C.size() >= 2) {
        std::optional<DistanceProfile> orbit;
        if (!cfg.derived) orbit = orbit_distance_set(C, 1);
        profile = orbit ? *orbit : distance_set(C, cfg.threads);
    }
    int rc = kOk;
    if (C.size() >= 2) {
        out << "distances: " << profile_str(profile) << "\n";
        out << "equidistant: " << yes_no(profile.is_equidistant()) << ", bidistant: "
            << yes_no(profile.is_bidistant()) << "\n";
        std::optional<CodeParams> punctured;
        if (!cfg.derived) punctured = thm.derived;
        const auto verdict = verify_optimal_profiled(C, claimed, profile, punctured);
        if (!verdict) {
            out << "scanned params: mismatch (" << verdict.failure().message() << ")\n";
            rc = kFailed;
        } else {
            out << "scanned params: " << to_string(claimed) << "\n";
            print_bounds(out, verdict.cert());
            if (!verdict.cert().optimal) rc = kFailed;
        }
    }
    const std::string json = io::to_json(C);
    write_file(cfg.out_path, json);
    out << "words:\n";
    print_grid(out, json, C.words(), C.group_order(), cfg.format);
    return rc;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    const auto n = need(cfg.n, "n"), d = need(cfg.d, "d"), w = need(cfg.w, "w"), a = need(cfg.a, "a");
    const auto r = restricted_johnson(n, d, w, a);
    out << "restricted A_" << a << "(" << n << "," << d << "," << w << ") <= " << opt_str(r.value)
        << " (denominator " << r.denominator << ")\n";
    std::optional<std::uint64_t> inner = cfg.inner;
    if (!inner && n >= 2 && w >= 2) inner = restricted_johnson(n - 1, d, w - 1, a).value;
    if (inner && *inner >= 1)
        out << "unrestricted A_" << a << "(" << n << "," << d << "," << w << ") <= "
            << unrestricted_johnson(n, d, w, a, *inner) << " (inner " << *inner << ")\n";
    else
        out << "unrestricted: n/a\n";
    return kOk;
}

int report_array(const SymbolArray& A, const RunConfig& cfg, std::ostream& out) {
    const auto verdict = cfg.check == "oa"   ? verify_oa(A, cfg.t, cfg.lambda, cfg.threads)
                         : cfg.check == "ca" ? verify_ca(A, cfg.t, cfg.lambda, cfg.threads)
                                             : throw std::invalid_argument("--check must be oa or ca");
    const char* label = cfg.check == "oa" ? "OA" : "CA";
    if (verdict) {
        const auto& c = verdict.cert();
        out << "verified: " << label << "_" << A.alphabet_size() << "(" << c.N << ", " << c.k << ", " << c.t << ", "
            << c.lambda << ")\n";
        return kOk;
    }
    out << "verified: no, not an " << label << " (" << verdict.failure().message() << ")\n";
    return kFailed;
}

int cmd_array(const RunConfig& cfg, std::ostream& out) {
    const ConstructionRequest req{need(cfg.q, "q"), need32(cfg.m, "m"), need32(cfg.g, "g")};
    const Code C = full_code(req);
    const SymbolArray A = append_zero_word(C);
    out << "array from full code q=" << req.q << " m=" << req.m << " g=" << req.g << " plus the zero word\n";
    if (below_theorem_range(req)) out << "note: m = 1 lies below the theorem's stated range m > 1\n";
    out << "code size M = " << C.size() << ", array rows N = " << A.rows() << ", columns k = " << A.cols()
        << ", alphabet a = " << A.alphabet_size() << "\n";
    const int rc = report_array(A, cfg, out);
    const std::string json = io::to_json(A);
    write_file(cfg.out_path, json);
    out << "rows:\n";
    print_grid(out, json, io::rows_of(A), C.group_order(), cfg.format);
    return rc;
}

int report_msls(const std::vector<LatinSquare>& squares, std::ostream& out) {
    bool latin = true;
    for (std::size_t i = 0; i < squares.size(); ++i) {
        const bool ok = verify_latin(squares[i]);
        latin = latin && ok;
        if (!ok) out << "square " << i << " is not Latin\n";
    }
    out << "squares: " << squares.size() << ", all Latin: " << yes_no(latin) << "\n";
    if (squares.size() < 2) {
        out << "mutually suitable: n/a (fewer than two squares)\n";
        return latin && !squares.empty() ? kOk : kFailed;
    }
    const auto r = verify_msls(squares);
    out << "mutually suitable: " << yes_no(r.mutually_suitable) << ", complete: " << yes_no(r.complete) << "\n";
    if (r.first_failing_pair)
        out << "first unsuitable pair: (" << r.first_failing_pair->first << "," << r.first_failing_pair->second
            << ")\n";
    return latin && r.mutually_suitable ? kOk : kFailed;
}

int cmd_msls(const RunConfig& cfg, std::ostream& out) {
    const auto q = need(cfg.q, "q");
    const ConstructionRequest req{q, 1, static_cast<std::uint32_t>(q - 1)};
    validate(req);
    const SymbolArray A = append_zero_word(full_code(req));
    out << "msls from OA_" << q << "(" << A.rows() << ", " << A.cols() << ", 2, 1)\n";
    const auto oa = verify_oa(A, 2, 1, cfg.threads);
    if (!oa) {
        out << "verified: no, not an OA (" << oa.failure().message() << ")\n";
        return kFailed;
    }
    const auto ext = extract_msls(A);
    int rc = kOk;
    std::vector<LatinSquare> squares;
    if (ext) {
        squares = ext.cert();
        rc = report_msls(squares, out);
    } else {
        out << "extraction failed: " << ext.failure().message() << "\n";
        squares = block_squares(A);
        std::size_t rows_ok = 0, cols_ok = 0;
        for (const auto& L : squares) {
            rows_ok += lines_are_permutations(L, true);
            cols_ok += lines_are_permutations(L, false);
        }
        out << "block squares with permutation rows: " << rows_ok << "/" << squares.size()
            << ", with permutation columns: " << cols_ok << "/" << squares.size() << "\n";
        if (squares.size() >= 2)
            out << "block squares mutually suitable: " << yes_no(verify_msls(squares).mutually_suitable) << "\n";
        rc = kFailed;
    }
    const std::string json = io::to_json(squares);
    write_file(cfg.out_path, json);
    if (cfg.format == Format::Json) {
        out << json;
    } else {
        for (std::size_t i = 0; i < squares.size(); ++i) {
            out << "square " << i << " (column-0 symbol w^" << i << "):\n";
            print_grid(out, "", io::rows_of(squares[i]), static_cast<std::uint32_t>(q - 1), cfg.format);
        }
    }
    return rc;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.in_path.empty()) throw std::invalid_argument("missing required flag --in");
    const std::string text = read_file(cfg.in_path);
    const std::string kind = io::kind_of(text);
    if (!cfg.kind.empty() && cfg.kind != kind)
        throw std::invalid_argument("file kind \"" + kind + "\" does not match --kind " + cfg.kind);
    out << "kind: " << kind << "\n";
    if (kind == "gmatrix") {
        const GMatrix W = io::gmatrix_from_json(text);
        out << "order " << W.rows() << "x" << W.cols() << ", group order " << W.group_order() << "\n";
        return report_bgw(verify_bgw(W, cfg.threads), out);
    }
    if (kind == "code") {
        const Code C = io::code_from_json(text);
        const ScannedParams s = scan_params(C, cfg.threads);
        out << "scanned params: " << to_string(s.params) << ", constant weight: " << yes_no(s.constant_weight)
            << "\n";
        if (C.size() < 2 || !s.constant_weight) return kFailed;
        out << "distances: " << profile_str(distance_set(C, cfg.threads)) << "\n";
        const BoundReport r = assess_bounds(s.params);
        print_bounds(out, r);
        return r.optimal ? kOk : kFailed;
    }
    if (kind == "array") return report_array(io::array_from_json(text), cfg, out);
    if (kind == "latin") {
        const bool ok = verify_latin(io::latin_from_json(text));
        out << "latin: " << yes_no(ok) << "\n";
        return ok ? kOk : kFailed;
    }
    if (kind == "msls") return report_msls(io::msls_from_json(text), out);
    throw std::invalid_argument("unknown kind \"" + kind + "\"");
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    out << "# sweep qmax=" << cfg.qmax << " mmax=" << cfg.mmax << " vmax=" << cfg.vmax << "\n";
    out << "# q m g a | bgw (v,k,lambda) | derived (n,M,d,w) R opt | full (n,M,d,w) R U opt | distances\n";
    bool all_ok = true;
    std::size_t rows = 0;
    for (std::uint64_t q = 3; q <= cfg.qmax; q += 2) {
        const auto pp = gf::prime_power(q);
        if (!pp) continue;
        for (std::uint32_t m = 1; m <= cfg.mmax; ++m) {
            const auto params = classical_params(q, m);
            if (params.v > cfg.vmax) break;
            const GMatrix W = trace_bgw(q, m);
            const auto cert = verify_bgw(W, cfg.threads);
            const bool bgw_ok =
                cert && cert.cert().v == params.v && cert.cert().k == params.k && cert.cert().lambda == params.lambda;
            all_ok = all_ok && bgw_ok;
            for (std::uint32_t g = 1; g <= q - 1; ++g) {
                if ((q - 1) % g) continue;
                const ConstructionRequest req{q, m, g};
                const TheoremParams thm = thm_main_params(req);

                const Code D = derived_code(req);
                const auto dv = verify_optimal(D, thm.derived, std::nullopt, cfg.threads);

                const Code F = full_code(req);
                const auto orbit = orbit_distance_set(F, 1);
                const DistanceProfile prof = orbit ? *orbit : distance_set(F, cfg.threads);
                const auto fv = verify_optimal_profiled(F, thm.full, prof, thm.derived);

                const bool ok = bgw_ok && dv && dv.cert().optimal && fv && fv.cert().optimal && orbit.has_value();
                all_ok = all_ok && ok;
                ++rows;

                out << q << " " << m << " " << g << " " << g + 1 << " | (" << params.v << "," << params.k << ","
                    << params.lambda << ") " << (bgw_ok ? "ok" : "FAIL") << " | ";
                const auto& dp = thm.derived;
                out << "(" << dp.n << "," << dp.M << "," << dp.d << "," << dp.w << ") ";
                if (dv)
                    out << opt_str(dv.cert().restricted) << " " << yes_no(dv.cert().optimal);
                else
                    out << "mismatch " << dv.failure().message();
                out << " | ";
                const auto& fp = thm.full;
                out << "(" << fp.n << "," << fp.M << "," << fp.d << "," << fp.w << ") ";
                if (fv)
                    out << opt_str(fv.cert().restricted) << " " << opt_str(fv.cert().unrestricted) << " "
                        << yes_no(fv.cert().optimal);
                else
                    out << "mismatch " << fv.failure().message();
                out << " | " << profile_str(prof) << (orbit ? "" : " (not shift-closed)") << "\n";
            }
        }
    }
    out << "# rows " << rows << ", all verified optimal: " << yes_no(all_ok) << "\n";
    return all_ok ? kOk : kFailed;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
        case Command::Field: return cmd_field(cfg, out);
        case Command::Bgw: return cmd_bgw(cfg, out);
        case Command::Code: return cmd_code(cfg, out);
        case Command::Bounds: return cmd_bounds(cfg, out);
        case Command::Array: return cmd_array(cfg, out);
        case Command::Msls: return cmd_msls(cfg, out);
        case Command::Verify: return cmd_verify(cfg, out);
        case Command::Sweep: return cmd_sweep(cfg, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kFailed;
    }
    return kInvalid;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constructs and certifies omega-circulant BGWs, constant-weight codes, arrays and Latin squares"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "text";

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Object output format")->check(CLI::IsMember({"json", "text", "pretty"}));
        sub->add_option("--out", cfg.out_path, "Write the object as JSON to this file");
    };
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", cfg.threads, "Worker threads for verification kernels")->check(CLI::Range(1u, 256u));
    };

    auto* field = app.add_subcommand("field", "Print a finite field summary");
    field->add_option("--p", cfg.p, "Prime characteristic")->required();
    field->add_option("--s", cfg.s, "Extension degree")->required();
    field->add_flag("--tables", cfg.tables, "Dump the exponent table");

    auto* bgw = app.add_subcommand("bgw", "Build and certify the trace BGW for (q, m)");
    bgw->add_option("--q", cfg.q)->required();
    bgw->add_option("--m", cfg.m)->required();
    add_format(bgw);
    add_threads(bgw);

    auto* code = app.add_subcommand("code", "Build a constant-weight code and certify optimality");
    code->add_option("--q", cfg.q)->required();
    code->add_option("--m", cfg.m)->required();
    code->add_option("--g", cfg.g)->required();
    code->add_flag("--derived", cfg.derived, "Emit the punctured code from the derived part");
    add_format(code);
    add_threads(code);

    auto* bounds = app.add_subcommand("bounds", "Evaluate the restricted and unrestricted Johnson bounds");
    bounds->add_option("--n", cfg.n)->required();
    bounds->add_option("--d", cfg.d)->required();
    bounds->add_option("--w", cfg.w)->required();
    bounds->add_option("--a", cfg.a, "Alphabet size")->required();
    bounds->add_option("--inner", cfg.inner, "Bound on A_a(n-1,d,w-1); defaults to its restricted bound");

    auto* array = app.add_subcommand("array", "Full code plus zero word, checked as an OA or CA");
    array->add_option("--q", cfg.q)->required();
    array->add_option("--m", cfg.m)->required();
    array->add_option("--g", cfg.g)->required();
    array->add_option("--check", cfg.check)->check(CLI::IsMember({"oa", "ca"}));
    array->add_option("--t", cfg.t, "Strength");
    array->add_option("--lambda", cfg.lambda, "Index");
    add_format(array);
    add_threads(array);

    auto* msls = app.add_subcommand("msls", "Extract a complete system of mutually suitable Latin squares");
    msls->add_option("--q", cfg.q)->required();
    add_format(msls);
    add_threads(msls);

    auto* verify = app.add_subcommand("verify", "Re-verify an exported JSON object");
    verify->add_option("--in", cfg.in_path)->required();
    verify->add_option("--kind", cfg.kind)->check(CLI::IsMember({"gmatrix", "code", "array", "latin", "msls"}));
    verify->add_option("--check", cfg.check)->check(CLI::IsMember({"oa", "ca"}));
    verify->add_option("--t", cfg.t);
    verify->add_option("--lambda", cfg.lambda);
    add_threads(verify);

    auto* sweep = app.add_subcommand("sweep", "Parameter and optimality table over all valid (q, m, g)");
    sweep->add_option("--qmax", cfg.qmax);
    sweep->add_option("--mmax", cfg.mmax);
    sweep->add_option("--vmax", cfg.vmax, "Skip (q, m) with v above this");
    add_threads(sweep);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }

    if (*field) cfg.command = Command::Field;
    if (*bgw) cfg.command = Command::Bgw;
    if (*code) cfg.command = Command::Code;
    if (*bounds) cfg.command = Command::Bounds;
    if (*array) cfg.command = Command::Array;
    if (*msls) cfg.command = Command::Msls;
    if (*verify) cfg.command = Command::Verify;
    if (*sweep) cfg.command = Command::Sweep;
    cfg.format = format == "json" ? Format::Json : format == "pretty" ? Format::Pretty : Format::Text;
    return run(cfg, out, err);
}

} // namespace bgwc::cli
