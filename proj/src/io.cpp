#include "bgwc/io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bgwc::io {

using nlohmann::json;

namespace {

void write_symbol(std::ostringstream& os, Entry e) {
    if (e.is_zero())
        os << "null";
    else
        os << e.exponent();
}

void write_rows(std::ostringstream& os, const std::vector<Word>& rows) {
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << (i ? ",\n[" : "\n[");
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) os << ",";
            write_symbol(os, rows[i][j]);
        }
        os << "]";
    }
    os << (rows.empty() ? "]" : "\n]");
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::uint64_t uint_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw std::invalid_argument(std::string("key \"") + key + "\" must be a non-negative integer");
    return v.get<std::uint64_t>();
}

void expect_kind(const json& j, const char* kind) {
    const json& k = field(j, "kind");
    if (!k.is_string() || k.get<std::string>() != kind)
        throw std::invalid_argument(std::string("expected kind \"") + kind + "\"");
}

// Exponents must be < limit.
Word read_word(const json& row, std::uint64_t limit) {
    if (!row.is_array()) throw std::invalid_argument("row must be an array");
    Word w;
    w.reserve(row.size());
    for (const auto& s : row) {
        if (s.is_null()) {
            w.push_back(Entry::zero());
        } else if (s.is_number_integer() && s.get<std::int64_t>() >= 0 &&
                   static_cast<std::uint64_t>(s.get<std::int64_t>()) < limit) {
            w.push_back(Entry::power(static_cast<std::uint32_t>(s.get<std::int64_t>())));
        } else {
            throw std::invalid_argument("symbol must be null or an exponent below the group order");
        }
    }
    return w;
}

std::vector<Word> read_rows(const json& rows, std::uint64_t limit, std::size_t width) {
    if (!rows.is_array()) throw std::invalid_argument("rows must be an array");
    std::vector<Word> out;
    for (const auto& r : rows) {
        out.push_back(read_word(r, limit));
        if (out.back().size() != width) throw std::invalid_argument("row length inconsistent with declared dimensions");
    }
    return out;
}

std::size_t width_of(const json& rows) {
    if (!rows.is_array()) throw std::invalid_argument("rows must be an array");
    if (rows.empty()) return 0;
    if (!rows.front().is_array()) throw std::invalid_argument("row must be an array");
    return rows.front().size();
}

std::uint32_t checked_u32(std::uint64_t x, const char* what) {
    if (x == 0 || x > (std::uint64_t{1} << 31)) throw std::invalid_argument(std::string(what) + " out of range");
    return static_cast<std::uint32_t>(x);
}

} // namespace

std::vector<Word> rows_of(const GMatrix& W) {
    std::vector<Word> rows;
    for (std::size_t i = 0; i < W.rows(); ++i) rows.push_back(W.row(i));
    return rows;
}

std::vector<Word> rows_of(const SymbolArray& A) {
    std::vector<Word> rows;
    for (std::size_t i = 0; i < A.rows(); ++i) rows.push_back(A.row(i));
    return rows;
}

std::vector<Word> rows_of(const LatinSquare& L) {
    std::vector<Word> rows;
    for (std::size_t i = 0; i < L.order(); ++i) rows.push_back(L.row(i));
    return rows;
}

std::string to_json(const GMatrix& W) {
    std::ostringstream os;
    os << "{\"kind\":\"gmatrix\",\"u\":" << W.group_order() << ",\"shift\":";
    if (auto c = W.circulant_shift())
        os << *c;
    else
        os << "null";
    os << ",\"rows\":";
    write_rows(os, rows_of(W));
    os << "}\n";
    return os.str();
}

std::string to_json(const Code& C) {
    std::ostringstream os;
    os << "{\"kind\":\"code\",\"a\":" << C.alphabet_size() << ",\"g\":" << C.group_order() << ",\"n\":" << C.length()
       << ",\"words\":";
    write_rows(os, C.words());
    os << "}\n";
    return os.str();
}

std::string to_json(const SymbolArray& A) {
    std::ostringstream os;
    os << "{\"kind\":\"array\",\"a\":" << A.alphabet_size() << ",\"rows\":";
    write_rows(os, rows_of(A));
    os << "}\n";
    return os.str();
}

std::string to_json(const LatinSquare& L) {
    std::ostringstream os;
    os << "{\"kind\":\"latin\",\"rows\":";
    write_rows(os, rows_of(L));
    os << "}\n";
    return os.str();
}

std::string to_json(const std::vector<LatinSquare>& system) {
    std::ostringstream os;
    os << "{\"kind\":\"msls\",\"squares\":[";
    for (std::size_t s = 0; s < system.size(); ++s) {
        os << (s ? ",\n" : "\n");
        write_rows(os, rows_of(system[s]));
    }
    os << (system.empty() ? "]" : "\n]") << "}\n";
    return os.str();
}

std::string kind_of(const std::string& text) {
    const json j = parse(text);
    const json& k = field(j, "kind");
    if (!k.is_string()) throw std::invalid_argument("\"kind\" must be a string");
    return k.get<std::string>();
}

GMatrix gmatrix_from_json(const std::string& text) {
    const json j = parse(text);
    expect_kind(j, "gmatrix");
    const std::uint32_t u = checked_u32(uint_field(j, "u"), "u");
    const json& rows_json = field(j, "rows");
    const auto rows = read_rows(rows_json, u, width_of(rows_json));
    GMatrix W = GMatrix::from_rows(rows, u);
    const json& shift = field(j, "shift");
    if (!shift.is_null()) {
        if (!shift.is_number_integer() || shift.get<std::int64_t>() < 0) throw std::invalid_argument("bad shift");
        W.declare_circulant(static_cast<std::uint32_t>(shift.get<std::int64_t>()));
    }
    return W;
}

Code code_from_json(const std::string& text) {
    const json j = parse(text);
    expect_kind(j, "code");
    const std::uint32_t g = checked_u32(uint_field(j, "g"), "g");
    if (uint_field(j, "a") != std::uint64_t{g} + 1) throw std::invalid_argument("alphabet size must equal g+1");
    const std::size_t n = uint_field(j, "n");
    Code C(n, g);
    for (auto& w : read_rows(field(j, "words"), g, n))
        if (!C.insert(std::move(w))) throw std::invalid_argument("duplicate codeword");
    return C;
}

SymbolArray array_from_json(const std::string& text) {
    const json j = parse(text);
    expect_kind(j, "array");
    const std::uint32_t a = checked_u32(uint_field(j, "a"), "a");
    if (a < 2) throw std::invalid_argument("alphabet size must be at least 2");
    const json& rows_json = field(j, "rows");
    SymbolArray A(width_of(rows_json), a);
    for (auto& r : read_rows(rows_json, a - 1, A.cols())) A.push_row(std::move(r));
    return A;
}

namespace {

LatinSquare latin_from(const json& rows) {
    if (!rows.is_array() || rows.empty()) throw std::invalid_argument("Latin square needs at least one row");
    const std::uint64_t n = rows.size();
    const auto grid = read_rows(rows, n - 1, n);
    if (grid.size() != n) throw std::invalid_argument("Latin square row count must equal n");
    return LatinSquare::from_rows(grid);
}

} // namespace

LatinSquare latin_from_json(const std::string& text) {
    const json j = parse(text);
    expect_kind(j, "latin");
    return latin_from(field(j, "rows"));
}

std::vector<LatinSquare> msls_from_json(const std::string& text) {
    const json j = parse(text);
    expect_kind(j, "msls");
    const json& squares = field(j, "squares");
    if (!squares.is_array()) throw std::invalid_argument("squares must be an array");
    std::vector<LatinSquare> out;
    for (const auto& s : squares) {
        out.push_back(latin_from(s));
        if (out.back().order() != out.front().order()) throw std::invalid_argument("squares of different orders");
    }
    return out;
}

std::string text_grid(const std::vector<Word>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) os << ' ';
            if (r[j].is_zero())
                os << '.';
            else
                os << r[j].exponent();
        }
        os << '\n';
    }
    return os.str();
}

std::string pretty_grid(const std::vector<Word>& rows, std::uint32_t g) {
    std::ostringstream os;
    for (const auto& r : rows) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) os << ' ';
            const Entry e = r[j];
            if (e.is_zero())
                os << '0';
            else if (g == 2)
                os << (e.exponent() == 0 ? '+' : '-');
            else if (e.exponent() == 0)
                os << '1';
            else if (e.exponent() == 1)
                os << 'w';
            else
                os << "w^" << e.exponent();
        }
        os << '\n';
    }
    return os.str();
}

} // namespace bgwc::io
