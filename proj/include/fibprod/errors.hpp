#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibprod {

// Division of a Rational or GoldenExt by zero.
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

// A Fibonacci/Lucas index beyond the configured cap.
class IndexCapExceeded : public std::out_of_range {
public:
    IndexCapExceeded(std::int64_t index, std::int64_t cap)
        : std::out_of_range("index " + std::to_string(index) + " exceeds the index cap " +
                            std::to_string(cap)),
          index_(index), cap_(cap) {}

    std::int64_t index() const noexcept { return index_; }
    std::int64_t cap() const noexcept { return cap_; }

private:
    std::int64_t index_;
    std::int64_t cap_;
};

class InvalidParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Truncation N beyond the exact-arithmetic cap.
class ExactCapExceeded : public std::out_of_range {
public:
    ExactCapExceeded(std::int64_t terms, std::int64_t cap)
        : std::out_of_range("N = " + std::to_string(terms) + " exceeds the exact-arithmetic cap of " +
                            std::to_string(cap) +
                            "; lower the truncation or raise the cap and render the result "
                            "with a decimal digit count"),
          terms_(terms), cap_(cap) {}

    std::int64_t terms() const noexcept { return terms_; }
    std::int64_t cap() const noexcept { return cap_; }

private:
    std::int64_t terms_;
    std::int64_t cap_;
};

// No tail certificate exists at the requested truncation.
class CertificationError : public std::runtime_error {
public:
    CertificationError(std::int64_t requested, std::int64_t minimal)
        : std::runtime_error("no certificate at N = " + std::to_string(requested) +
                             "; minimal certifiable N is " + std::to_string(minimal)),
          requested_(requested), minimal_(minimal) {}

    std::int64_t requested() const noexcept { return requested_; }
    std::int64_t minimal_certifiable() const noexcept { return minimal_; }

private:
    std::int64_t requested_;
    std::int64_t minimal_;
};

// Broken internal invariant, e.g. a vanishing product-term denominator.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace fibprod
