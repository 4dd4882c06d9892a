#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bgwc/entry.hpp"

namespace bgwc::gf {

/// Largest field order this module will tabulate.
inline constexpr std::uint64_t kFieldCap = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

/// Returns (p, t) with q = p^t, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Polynomial over GF(p), little-endian coefficients, always normalized (no
/// trailing zero coefficients; the zero polynomial has no coefficients).
class Poly {
public:
    Poly(std::vector<std::uint32_t> coeffs, std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Remainder of *this divided by a monic divisor.
    Poly mod(const Poly& monic_divisor) const;

    std::string to_string() const;

    bool operator==(const Poly&) const = default;

private:
    std::vector<std::uint32_t> coeffs_;
    std::uint32_t p_;
};

/// Trial division by every monic polynomial of degree ≤ deg/2.
bool is_irreducible(const Poly& f);

/// Smallest monic irreducible polynomial of degree n over GF(p), polynomials
/// compared by their coefficient sequence read from the constant term upward.
Poly find_irreducible(std::uint32_t p, std::uint32_t n);

class FieldCtx;

/// A field element in log representation: Zero, or β^e with e in [0, order-2].
class FieldElem {
public:
    bool is_zero() const { return raw_ == 0; }
    /// Discrete log base β; throws on Zero.
    std::uint32_t log() const;

    bool operator==(const FieldElem&) const = default;

private:
    friend class FieldCtx;
    FieldElem(std::uint32_t raw, std::uint64_t field) : raw_(raw), field_(field) {}
    std::uint32_t raw_;
    std::uint64_t field_;
};

/// GF(p^s) with exp/log/Zech tables. Immutable after construction; elements
/// carry the id of the context that made them and mixing contexts throws.
///
/// Elements have an additive "code" Σ c_i p^i, where c_i is the coefficient of
/// x^i of the reduced polynomial representative. Codes in ascending order are
/// the canonical element order.
class FieldCtx {
public:
    FieldCtx(std::uint32_t p, std::uint32_t s);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return s_; }
    std::uint32_t order() const { return order_; }
    const Poly& modulus() const { return modulus_; }
    /// Code of the primitive element β.
    std::uint32_t beta_code() const { return exp_[order_ > 2 ? 1 : 0]; }

    FieldElem zero() const { return {0, id_}; }
    FieldElem one() const { return {1, id_}; }
    FieldElem beta() const { return power_of_beta(1); }
    /// β^e for any integer e.
    FieldElem power_of_beta(std::int64_t e) const;
    FieldElem from_code(std::uint32_t code) const;
    std::uint32_t code(FieldElem a) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem pow(FieldElem a, std::int64_t e) const;

    /// Multiplicative order; throws on Zero.
    std::uint64_t multiplicative_order(FieldElem a) const;

    /// exp table: code of β^e for e in [0, order-2].
    const std::vector<std::uint32_t>& exp_table() const { return exp_; }
    /// log table indexed by code; entry 0 (the zero element) is unused.
    const std::vector<std::uint32_t>& log_table() const { return log_; }

    std::string describe_code(std::uint32_t code) const;

private:
    void check(FieldElem a) const;
    std::uint32_t slow_mul_codes(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t add_codes(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_;
    std::uint32_t s_;
    std::uint32_t order_;
    Poly modulus_;
    std::uint64_t id_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    // zech_[k] = raw of 1 + β^k (0 when it vanishes).
    std::vector<std::uint32_t> zech_;
    std::uint32_t half_;  // log of -1
};

inline FieldCtx build_field(std::uint32_t p, std::uint32_t s) { return FieldCtx(p, s); }

/// Relative trace Tr_{F/K}(x) = Σ_{i=0..m} x^(q^i) onto the subfield K of order q.
FieldElem rel_trace(const FieldCtx& F, std::uint64_t q, FieldElem x);

/// Encodes x ∈ K as a power of ω = β^((|F|-1)/(q-1)).
Entry dlog_in_subfield(const FieldCtx& F, std::uint64_t q, FieldElem x);

/// True when q = p^t with t dividing the degree of F.
bool is_subfield_order(const FieldCtx& F, std::uint64_t q);

} // namespace bgwc::gf
