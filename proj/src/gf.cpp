#include "bgwc/gf.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>

namespace bgwc::gf {

namespace {

std::atomic<std::uint64_t> next_field_id{1};

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

std::vector<std::uint32_t> digits(std::uint32_t code, std::uint32_t p, std::uint32_t s) {
    std::vector<std::uint32_t> d(s);
    for (std::uint32_t i = 0; i < s; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint32_t code = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * p + *it;
    return code;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    std::uint32_t t = 0;
    while (q % p == 0) {
        q /= p;
        ++t;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(p), t};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<std::uint32_t> coeffs, std::uint32_t p) : coeffs_(std::move(coeffs)), p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("polynomial characteristic must be prime");
    for (auto& c : coeffs_) c %= p;
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::mod(const Poly& divisor) const {
    if (divisor.p_ != p_) throw std::invalid_argument("characteristic mismatch");
    if (!divisor.is_monic()) throw std::invalid_argument("divisor must be monic");
    std::vector<std::uint32_t> r = coeffs_;
    const std::size_t d = divisor.coeffs_.size() - 1;
    for (std::size_t k = r.size(); k-- > d;) {
        const std::uint32_t c = r[k];
        if (c == 0) continue;
        for (std::size_t t = 0; t <= d; ++t) {
            const std::uint64_t sub = std::uint64_t{c} * divisor.coeffs_[t] % p_;
            r[k - d + t] = static_cast<std::uint32_t>((r[k - d + t] + p_ - sub) % p_);
        }
    }
    if (r.size() > d) r.resize(d);
    return Poly(std::move(r), p_);
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const std::uint32_t c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

bool is_irreducible(const Poly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const std::uint32_t p = f.characteristic();
    Poly monic = f;
    if (!f.is_monic()) {
        // Scale to monic by the inverse of the leading coefficient.
        std::uint32_t lead = f.coeffs().back(), inv = 1;
        while (std::uint64_t{lead} * inv % p != 1) ++inv;
        std::vector<std::uint32_t> c = f.coeffs();
        for (auto& x : c) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p);
        monic = Poly(std::move(c), p);
    }
    for (int d = 1; d <= n / 2; ++d) {
        const std::uint64_t count = checked_pow(p, static_cast<std::uint32_t>(d), kFieldCap);
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> c = digits(static_cast<std::uint32_t>(code), p, static_cast<std::uint32_t>(d));
            c.push_back(1);
            if (monic.mod(Poly(std::move(c), p)).is_zero()) return false;
        }
    }
    return true;
}

Poly find_irreducible(std::uint32_t p, std::uint32_t n) {
    if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p is not prime");
    if (n < 1) throw std::invalid_argument("find_irreducible: degree must be at least 1");
    const std::uint64_t count = checked_pow(p, n, kFieldCap);
    if (count > kFieldCap) throw std::invalid_argument("find_irreducible: p^n exceeds the field cap");
    // Lexicographic order from the constant term upward is the same as
    // enumerating codes with c_0 as the most significant digit.
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint32_t> c(n + 1);
        std::uint64_t rest = idx;
        for (std::uint32_t i = n; i-- > 0;) {
            c[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        c[n] = 1;
        Poly f(std::move(c), p);
        if (is_irreducible(f)) return f;
    }
    throw std::logic_error("find_irreducible: no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// FieldElem / FieldCtx

std::uint32_t FieldElem::log() const {
    if (raw_ == 0) throw std::invalid_argument("discrete log of zero");
    return raw_ - 1;
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t s)
    : p_(p), s_(s), order_(0), modulus_(find_irreducible(p, s)), id_(next_field_id.fetch_add(1)) {
    order_ = static_cast<std::uint32_t>(checked_pow(p, s, kFieldCap));
    const std::uint32_t n1 = order_ - 1;
    const auto factors = prime_factors(n1);

    auto slow_pow = [&](std::uint32_t base, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul_codes(r, base);
            base = slow_mul_codes(base, base);
            e >>= 1;
        }
        return r;
    };

    std::uint32_t beta = 0;
    for (std::uint32_t cand = 1; cand < order_; ++cand) {
        if (slow_pow(cand, n1) != 1) continue;
        bool primitive = true;
        for (auto r : factors) {
            if (slow_pow(cand, n1 / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            beta = cand;
            break;
        }
    }
    if (beta == 0) throw std::logic_error("no primitive element found");

    exp_.resize(n1);
    log_.assign(order_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t e = 0; e < n1; ++e) {
        exp_[e] = cur;
        log_[cur] = e;
        cur = slow_mul_codes(cur, beta);
    }
    if (cur != 1) throw std::logic_error("exp table does not close");

    zech_.resize(n1);
    for (std::uint32_t k = 0; k < n1; ++k) {
        const std::uint32_t c = add_codes(1, exp_[k]);
        zech_[k] = c == 0 ? 0 : log_[c] + 1;
    }
    half_ = p_ == 2 ? 0 : n1 / 2;
}

std::uint32_t FieldCtx::add_codes(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        r += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

std::uint32_t FieldCtx::slow_mul_codes(std::uint32_t a, std::uint32_t b) const {
    const auto da = digits(a, p_, s_), db = digits(b, p_, s_);
    std::vector<std::uint32_t> prod(2 * s_, 0);
    for (std::uint32_t i = 0; i < s_; ++i)
        for (std::uint32_t j = 0; j < s_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
    Poly r = Poly(std::move(prod), p_).mod(modulus_);
    std::vector<std::uint32_t> c = r.coeffs();
    c.resize(s_, 0);
    return undigits(c, p_);
}

void FieldCtx::check(FieldElem a) const {
    if (a.field_ != id_) throw std::invalid_argument("field element belongs to a different field");
}

FieldElem FieldCtx::power_of_beta(std::int64_t e) const {
    const std::int64_t n1 = order_ - 1;
    return {static_cast<std::uint32_t>(((e % n1) + n1) % n1) + 1, id_};
}

FieldElem FieldCtx::from_code(std::uint32_t code) const {
    if (code >= order_) throw std::invalid_argument("element code out of range");
    return code == 0 ? zero() : FieldElem{log_[code] + 1, id_};
}

std::uint32_t FieldCtx::code(FieldElem a) const {
    check(a);
    return a.is_zero() ? 0 : exp_[a.raw_ - 1];
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // β^x + β^y = β^x (1 + β^(y-x))
    const std::uint32_t n1 = order_ - 1;
    const std::uint32_t x = a.raw_ - 1, y = b.raw_ - 1;
    const std::uint32_t z = zech_[(y + n1 - x) % n1];
    if (z == 0) return zero();
    return {(x + z - 1) % n1 + 1, id_};
}

FieldElem FieldCtx::neg(FieldElem a) const {
    check(a);
    if (a.is_zero()) return a;
    return {(a.raw_ - 1 + half_) % (order_ - 1) + 1, id_};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_zero()) return zero();
    return {(a.raw_ - 1 + b.raw_ - 1) % (order_ - 1) + 1, id_};
}

FieldElem FieldCtx::inv(FieldElem a) const {
    check(a);
    if (a.is_zero()) throw std::invalid_argument("inverse of zero");
    return power_of_beta(-static_cast<std::int64_t>(a.raw_ - 1));
}

FieldElem FieldCtx::pow(FieldElem a, std::int64_t e) const {
    check(a);
    if (a.is_zero()) {
        if (e < 0) throw std::invalid_argument("negative power of zero");
        return e == 0 ? one() : zero();
    }
    const std::int64_t n1 = order_ - 1;
    const std::int64_t r = ((e % n1) + n1) % n1;
    return power_of_beta((static_cast<std::int64_t>(a.raw_ - 1) * r) % n1);
}

std::uint64_t FieldCtx::multiplicative_order(FieldElem a) const {
    check(a);
    if (a.is_zero()) throw std::invalid_argument("order of zero");
    std::uint64_t e = a.raw_ - 1, n1 = order_ - 1;
    std::uint64_t g = n1, x = e;
    while (x) {
        g %= x;
        std::swap(g, x);
    }
    return n1 / g;
}

std::string FieldCtx::describe_code(std::uint32_t code) const {
    const auto d = digits(code, p_, s_);
    return Poly(d, p_).to_string();
}

// ---------------------------------------------------------------------------

bool is_subfield_order(const FieldCtx& F, std::uint64_t q) {
    const auto pp = prime_power(q);
    if (!pp || pp->first != F.characteristic()) return false;
    return F.degree() % pp->second == 0;
}

FieldElem rel_trace(const FieldCtx& F, std::uint64_t q, FieldElem x) {
    if (!is_subfield_order(F, q)) throw std::invalid_argument("rel_trace: q is not a subfield order of F");
    const std::uint32_t terms = F.degree() / prime_power(q)->second;
    FieldElem acc = F.zero();
    FieldElem term = x;
    for (std::uint32_t i = 0; i < terms; ++i) {
        acc = F.add(acc, term);
        term = F.pow(term, static_cast<std::int64_t>(q));
    }
    if (F.pow(acc, static_cast<std::int64_t>(q)) != acc) throw std::logic_error("rel_trace: result not in subfield");
    return acc;
}

Entry dlog_in_subfield(const FieldCtx& F, std::uint64_t q, FieldElem x) {
    if (!is_subfield_order(F, q)) throw std::invalid_argument("dlog_in_subfield: q is not a subfield order of F");
    if (x.is_zero()) return Entry::zero();
    const std::uint64_t step = (F.order() - 1) / (q - 1);
    const std::uint32_t e = x.log();
    if (e % step != 0) throw std::invalid_argument("dlog_in_subfield: element not in subfield");
    return Entry::power(static_cast<std::uint32_t>(e / step));
}

} // namespace bgwc::gf
