#include <doctest.h>

#include <stdexcept>

#include "bgwc/io.hpp"

using namespace bgwc;

namespace {

GMatrix trace_matrix(std::uint64_t q, std::uint32_t m) {
    GMatrix W = omega_circulant(trace_row(q, m), static_cast<std::uint32_t>(q - 1), 1);
    return W;
}

LatinSquare cyclic(std::size_t n) {
    LatinSquare L(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) L.set(i, j, Entry::from_symbol(static_cast<std::uint32_t>((i + j) % n)));
    return L;
}

} // namespace

TEST_CASE("round trips") {
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{5, 1}, {3, 2}, {7, 1}}) {
        const GMatrix W = trace_matrix(q, m);
        const std::string text = io::to_json(W);
        CHECK(io::kind_of(text) == "gmatrix");
        const GMatrix back = io::gmatrix_from_json(text);
        CHECK(back == W);
        CHECK(io::to_json(back) == text);
    }
    GMatrix plain = trace_matrix(5, 1);
    plain.clear_circulant();
    CHECK(io::gmatrix_from_json(io::to_json(plain)) == plain);

    for (std::uint32_t g : {1u, 2u, 4u}) {
        const Code C = full_code({5, 1, g});
        const std::string text = io::to_json(C);
        const Code back = io::code_from_json(text);
        CHECK(back == C);
        CHECK(back.words() == C.words());
        CHECK(io::to_json(back) == text);
    }

    const SymbolArray A = append_zero_word(full_code({5, 1, 4}));
    CHECK(io::array_from_json(io::to_json(A)) == A);
    CHECK(io::to_json(io::array_from_json(io::to_json(A))) == io::to_json(A));

    const LatinSquare L = cyclic(4);
    CHECK(io::latin_from_json(io::to_json(L)) == L);
    const std::vector<LatinSquare> S = block_squares(A);
    CHECK(io::msls_from_json(io::to_json(S)) == S);
    CHECK(io::kind_of(io::to_json(S)) == "msls");
}

TEST_CASE("canonical layout") {
    Code C(3, 2);
    C.insert({Entry::zero(), Entry::power(0), Entry::power(1)});
    C.insert({Entry::power(1), Entry::zero(), Entry::power(0)});
    CHECK(io::to_json(C) == "{\"kind\":\"code\",\"a\":3,\"g\":2,\"n\":3,\"words\":[\n[null,0,1],\n[1,null,0]\n]}\n");
    CHECK(io::to_json(Code(2, 2)) == "{\"kind\":\"code\",\"a\":3,\"g\":2,\"n\":2,\"words\":[]}\n");
    CHECK(io::to_json(std::vector<LatinSquare>{}) == "{\"kind\":\"msls\",\"squares\":[]}\n");
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(io::kind_of("{"), std::invalid_argument);
    CHECK_THROWS_AS(io::kind_of("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(io::kind_of("{\"kind\":3}"), std::invalid_argument);
    CHECK_THROWS_AS(io::code_from_json("{\"kind\":\"gmatrix\",\"u\":2,\"shift\":null,\"rows\":[]}"),
                    std::invalid_argument);

    const std::string ragged = "{\"kind\":\"gmatrix\",\"u\":2,\"shift\":null,\"rows\":[[0,1],[0]]}";
    CHECK_THROWS_AS(io::gmatrix_from_json(ragged), std::invalid_argument);
    const std::string big_exp = "{\"kind\":\"gmatrix\",\"u\":2,\"shift\":null,\"rows\":[[0,2],[0,1]]}";
    CHECK_THROWS_AS(io::gmatrix_from_json(big_exp), std::invalid_argument);
    const std::string neg_exp = "{\"kind\":\"gmatrix\",\"u\":2,\"shift\":null,\"rows\":[[0,-1],[0,1]]}";
    CHECK_THROWS_AS(io::gmatrix_from_json(neg_exp), std::invalid_argument);
    const std::string text_sym = "{\"kind\":\"gmatrix\",\"u\":2,\"shift\":null,\"rows\":[[0,\"w\"],[0,1]]}";
    CHECK_THROWS_AS(io::gmatrix_from_json(text_sym), std::invalid_argument);
    const std::string no_u = "{\"kind\":\"gmatrix\",\"shift\":null,\"rows\":[[0]]}";
    CHECK_THROWS_AS(io::gmatrix_from_json(no_u), std::invalid_argument);
    const std::string bad_shift = "{\"kind\":\"gmatrix\",\"u\":2,\"shift\":-1,\"rows\":[[0,1],[1,0]]}";
    CHECK_THROWS_AS(io::gmatrix_from_json(bad_shift), std::invalid_argument);
    // The declared shift must agree with the rows.
    const std::string wrong_shift = "{\"kind\":\"gmatrix\",\"u\":2,\"shift\":0,\"rows\":[[0,1],[0,0]]}";
    CHECK_THROWS_AS(io::gmatrix_from_json(wrong_shift), std::invalid_argument);

    const std::string dup = "{\"kind\":\"code\",\"a\":3,\"g\":2,\"n\":2,\"words\":[[0,1],[0,1]]}";
    CHECK_THROWS_AS(io::code_from_json(dup), std::invalid_argument);
    const std::string bad_a = "{\"kind\":\"code\",\"a\":4,\"g\":2,\"n\":2,\"words\":[[0,1]]}";
    CHECK_THROWS_AS(io::code_from_json(bad_a), std::invalid_argument);
    const std::string short_word = "{\"kind\":\"code\",\"a\":3,\"g\":2,\"n\":3,\"words\":[[0,1]]}";
    CHECK_THROWS_AS(io::code_from_json(short_word), std::invalid_argument);

    CHECK_THROWS_AS(io::array_from_json("{\"kind\":\"array\",\"a\":1,\"rows\":[[null]]}"), std::invalid_argument);
    CHECK_THROWS_AS(io::array_from_json("{\"kind\":\"array\",\"a\":3,\"rows\":[[null,2]]}"), std::invalid_argument);
    CHECK_THROWS_AS(io::latin_from_json("{\"kind\":\"latin\",\"rows\":[[null,0]]}"), std::invalid_argument);
    CHECK_THROWS_AS(io::latin_from_json("{\"kind\":\"latin\",\"rows\":[]}"), std::invalid_argument);
    CHECK_THROWS_AS(
        io::msls_from_json("{\"kind\":\"msls\",\"squares\":[[[null,0],[0,null]],[[null]]]}"),
        std::invalid_argument);
}

TEST_CASE("grids") {
    const std::vector<Word> rows = {{Entry::power(3), Entry::zero(), Entry::power(1)},
                                    {Entry::power(0), Entry::power(2), Entry::zero()}};
    CHECK(io::text_grid(rows) == "3 . 1\n0 2 .\n");
    CHECK(io::pretty_grid(rows, 4) == "w^3 0 w\n1 w^2 0\n");
    const std::vector<Word> signs = {{Entry::power(0), Entry::power(1), Entry::zero()}};
    CHECK(io::pretty_grid(signs, 2) == "+ - 0\n");

    const GMatrix W = trace_matrix(5, 1);
    const std::string first = io::text_grid(io::rows_of(W)).substr(0, 12);
    CHECK(first == "3 0 3 . 0 0\n");
}
