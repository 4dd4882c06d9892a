#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bgwc {

/// A symbol of a (0,G)-matrix or codeword: either Zero or ω^e in a cyclic
/// group whose order is carried by the owning container.
///
/// The raw value doubles as the symbol index used by arrays: Zero is 0 and ω^e
/// is e + 1. Ordering follows the raw value, so Zero sorts first and powers
/// follow in ascending exponent order.
class Entry {
public:
    constexpr Entry() = default;

    static constexpr Entry zero() { return Entry{}; }
    static constexpr Entry power(std::uint32_t e) { return Entry{e + 1}; }
    static constexpr Entry from_symbol(std::uint32_t s) { return Entry{s}; }

    constexpr bool is_zero() const { return raw_ == 0; }
    constexpr std::uint32_t exponent() const {
        if (raw_ == 0) throw std::logic_error("exponent of Zero entry");
        return raw_ - 1;
    }
    constexpr std::uint32_t symbol() const { return raw_; }

    constexpr auto operator<=>(const Entry&) const = default;

private:
    constexpr explicit Entry(std::uint32_t raw) : raw_(raw) {}
    std::uint32_t raw_ = 0;
};

using Word = std::vector<Entry>;

/// Arithmetic in the cyclic group of order u, extended by 0·x = x·0 = 0.
namespace group {

inline std::uint32_t reduce(std::int64_t e, std::uint32_t u) {
    const auto m = static_cast<std::int64_t>(u);
    return static_cast<std::uint32_t>(((e % m) + m) % m);
}

inline Entry mul(Entry a, Entry b, std::uint32_t u) {
    if (a.is_zero() || b.is_zero()) return Entry::zero();
    return Entry::power(reduce(std::int64_t{a.exponent()} + b.exponent(), u));
}

/// ω^c · a.
inline Entry scale(Entry a, std::int64_t c, std::uint32_t u) {
    if (a.is_zero()) return a;
    return Entry::power(reduce(std::int64_t{a.exponent()} + c, u));
}

/// a^t; t may be negative.
inline Entry pow(Entry a, std::int64_t t, std::uint32_t u) {
    if (a.is_zero()) return a;
    return Entry::power(reduce(static_cast<std::int64_t>(a.exponent()) * reduce(t, u), u));
}

inline bool valid(Entry a, std::uint32_t u) { return a.is_zero() || a.exponent() < u; }

} // namespace group

/// Number of nonzero components.
inline std::size_t weight(const Word& x) {
    std::size_t w = 0;
    for (Entry e : x) w += e.is_zero() ? 0 : 1;
    return w;
}

} // namespace bgwc
