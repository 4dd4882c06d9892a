#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>

namespace bgwc {

/// Outcome of a verification: a certificate on success, or a structured
/// failure carrying the witness.
template <class Cert, class Failure>
class Checked {
public:
    Checked(Cert c) : v_(std::move(c)) {}
    Checked(Failure f) : v_(std::move(f)) {}

    bool ok() const { return v_.index() == 0; }
    explicit operator bool() const { return ok(); }

    const Cert& cert() const {
        if (!ok()) throw std::logic_error("cert() on failed verification");
        return std::get<0>(v_);
    }
    const Failure& failure() const {
        if (ok()) throw std::logic_error("failure() on successful verification");
        return std::get<1>(v_);
    }

private:
    std::variant<Cert, Failure> v_;
};

} // namespace bgwc
