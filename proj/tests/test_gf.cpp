#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bgwc/gf.hpp"
#include "oracle.hpp"

using namespace bgwc;
using namespace bgwc::gf;

namespace {

oracle::Coeffs to_coeffs(const Poly& f) {
    return oracle::Coeffs(f.coeffs().begin(), f.coeffs().end());
}

struct Degrees {
    std::uint32_t p, s;
};

const Degrees kFields[] = {{2, 3}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 6}, {5, 1}, {5, 2},
                           {5, 3}, {7, 2}, {7, 3}, {11, 2}, {13, 2}, {2, 8}};

} // namespace

TEST_CASE("prime and prime power recognition") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK(prime_power(9) == std::pair<std::uint32_t, std::uint32_t>{3, 2});
    CHECK(prime_power(13) == std::pair<std::uint32_t, std::uint32_t>{13, 1});
    CHECK(prime_power(1024) == std::pair<std::uint32_t, std::uint32_t>{2, 10});
    CHECK_FALSE(prime_power(6));
    CHECK_FALSE(prime_power(1));
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("smallest irreducible agrees with a Rabin-test search") {
    for (auto [p, s] : kFields) {
        CAPTURE(p);
        CAPTURE(s);
        const oracle::SlowField slow(p, s);
        CHECK(to_coeffs(find_irreducible(p, s)) == slow.f);
    }
}

TEST_CASE("known moduli") {
    CHECK(find_irreducible(5, 2).to_string() == "x^2 + x + 1");
    CHECK(FieldCtx(5, 2).modulus() == find_irreducible(5, 2));
}

TEST_CASE("irreducible polynomials have no roots") {
    for (auto [p, s] : {Degrees{5, 2}, Degrees{3, 3}, Degrees{7, 3}}) {
        const Poly f = find_irreducible(p, s);
        for (std::int64_t x = 0; x < p; ++x) {
            std::int64_t val = 0;
            for (std::size_t i = f.coeffs().size(); i-- > 0;) val = oracle::md(val * x + f.coeffs()[i], p);
            CHECK(val != 0);
        }
        CHECK(is_irreducible(f));
    }
    CHECK_FALSE(is_irreducible(Poly({1, 0, 1}, 5)));  // x^2 + 1 = (x-2)(x-3)
    CHECK_THROWS_AS(find_irreducible(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(find_irreducible(2, 21), std::invalid_argument);
}

TEST_CASE("primitive element and exp table agree with polynomial powering") {
    for (auto [p, s] : kFields) {
        if (oracle::ipow(p, s) > 2000) continue;
        CAPTURE(p);
        CAPTURE(s);
        const FieldCtx F(p, s);
        const oracle::SlowField slow(p, s);
        CHECK(F.beta_code() == oracle::code_of(slow.beta, p));
        oracle::Coeffs cur{1};
        for (std::uint32_t e = 0; e + 1 < F.order(); ++e) {
            REQUIRE(F.exp_table()[e] == oracle::code_of(cur, p));
            cur = slow.mul(cur, slow.beta);
        }
        CHECK(F.multiplicative_order(F.beta()) == F.order() - 1);
    }
}

TEST_CASE("GF(25) canonical choices") {
    const FieldCtx F(5, 2);
    CHECK(F.order() == 25);
    CHECK(F.beta_code() == 7);  // x + 2
    CHECK(F.log_table()[7] == 1);
    CHECK(F.neg(F.one()) == F.power_of_beta(12));
    CHECK(F.power_of_beta(-1) == F.inv(F.beta()));
    CHECK(F.power_of_beta(24) == F.one());
}

TEST_CASE("field operations match the oracle on random codes") {
    std::mt19937_64 rng(20240314);
    for (auto [p, s] : kFields) {
        CAPTURE(p);
        CAPTURE(s);
        const FieldCtx F(p, s);
        const oracle::SlowField slow(p, s);
        std::uniform_int_distribution<std::uint32_t> pick(0, F.order() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const std::uint32_t ca = pick(rng), cb = pick(rng), cc = pick(rng);
            const FieldElem a = F.from_code(ca), b = F.from_code(cb), c = F.from_code(cc);
            const auto A = oracle::from_code(ca, p), B = oracle::from_code(cb, p);
            REQUIRE(F.code(a) == ca);
            REQUIRE(F.code(F.add(a, b)) == oracle::code_of(slow.add(A, B), p));
            REQUIRE(F.code(F.mul(a, b)) == oracle::code_of(slow.mul(A, B), p));
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(a, F.neg(a)) == F.zero());
            CHECK(F.sub(F.add(a, b), b) == a);
            if (!a.is_zero()) {
                CHECK(F.mul(a, F.inv(a)) == F.one());
                CHECK(F.pow(a, F.order() - 1) == F.one());
            }
        }
    }
}

TEST_CASE("field errors") {
    CHECK_THROWS_AS(FieldCtx(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(3, 13), std::invalid_argument);  // 3^13 exceeds the cap
    const FieldCtx F(5, 2), G(5, 2);
    CHECK_THROWS_AS(F.add(F.one(), G.one()), std::invalid_argument);
    CHECK_THROWS_AS(F.inv(F.zero()), std::invalid_argument);
    CHECK_THROWS(F.zero().log());
    CHECK_THROWS_AS(F.from_code(25), std::invalid_argument);
}

TEST_CASE("relative trace agrees with the oracle and lands in the subfield") {
    struct Case {
        std::uint32_t p, s;
        std::uint64_t q;
    };
    for (auto [p, s, q] : {Case{5, 2, 5}, Case{3, 3, 3}, Case{3, 4, 9}, Case{3, 4, 3}, Case{7, 2, 7}, Case{3, 6, 9}}) {
        CAPTURE(s);
        CAPTURE(q);
        const FieldCtx F(p, s);
        const oracle::SlowField slow(p, s);
        for (std::uint32_t code = 0; code < F.order(); code += (F.order() > 100 ? 7 : 1)) {
            const FieldElem t = rel_trace(F, q, F.from_code(code));
            REQUIRE(F.code(t) == oracle::code_of(slow.trace(oracle::from_code(code, p), q), p));
            const auto e = oracle::subfield_log(slow, q, oracle::from_code(F.code(t), p));
            REQUIRE(e.has_value());
            const Entry d = dlog_in_subfield(F, q, t);
            CHECK(d.is_zero() == (*e < 0));
            if (*e >= 0) CHECK(d.exponent() == *e);
        }
    }
}

TEST_CASE("trace is K-linear and its kernel has q^m elements") {
    const FieldCtx F(5, 2);
    std::size_t kernel = 0;
    const FieldElem c = F.power_of_beta(6);  // ω = β^6 lies in GF(5)
    for (std::uint32_t a = 0; a < 25; ++a) {
        const FieldElem x = F.from_code(a);
        kernel += rel_trace(F, 5, x).is_zero();
        CHECK(rel_trace(F, 5, F.mul(c, x)) == F.mul(c, rel_trace(F, 5, x)));
        for (std::uint32_t b = 0; b < 25; b += 3)
            CHECK(rel_trace(F, 5, F.add(x, F.from_code(b))) ==
                  F.add(rel_trace(F, 5, x), rel_trace(F, 5, F.from_code(b))));
    }
    CHECK(kernel == 5);

    const FieldCtx F81(3, 4);
    std::size_t kernel81 = 0;
    for (std::uint32_t a = 0; a < 81; ++a) kernel81 += rel_trace(F81, 3, F81.from_code(a)).is_zero();
    CHECK(kernel81 == 27);
}

TEST_CASE("subfield discrete logs") {
    const FieldCtx F(5, 2);
    CHECK(dlog_in_subfield(F, 5, F.zero()).is_zero());
    CHECK(dlog_in_subfield(F, 5, F.one()).exponent() == 0);
    CHECK(dlog_in_subfield(F, 5, F.power_of_beta(6)).exponent() == 1);
    CHECK(dlog_in_subfield(F, 5, F.power_of_beta(18)).exponent() == 3);
    CHECK_THROWS_AS(dlog_in_subfield(F, 5, F.beta()), std::invalid_argument);
    CHECK_THROWS_AS(rel_trace(F, 7, F.one()), std::invalid_argument);
    CHECK(is_subfield_order(F, 25));
    CHECK_FALSE(is_subfield_order(FieldCtx(3, 3), 9));
}
