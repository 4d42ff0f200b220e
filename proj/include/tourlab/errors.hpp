#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tourlab {

/// An input exceeds a documented size limit (vertex capacity, exact-mode
/// bounds, memory guards).
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed text input; carries a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column), message_(what) {}
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

class DeadlineExceeded : public std::runtime_error {
public:
    DeadlineExceeded() : std::runtime_error("deadline exceeded") {}
};

/// Cooperative cancellation point for long searches. A default-constructed
/// deadline never expires.
class Deadline {
public:
    using clock = std::chrono::steady_clock;

    Deadline() = default;
    explicit Deadline(clock::time_point at) : at_(at), armed_(true) {}

    static Deadline none() { return {}; }
    static Deadline after(std::chrono::duration<double> d) {
        return Deadline{clock::now() + std::chrono::duration_cast<clock::duration>(d)};
    }

    bool expired() const { return armed_ && clock::now() >= at_; }
    void check() const {
        if (expired()) throw DeadlineExceeded{};
    }
    /// Cheap periodic check keyed on a node counter.
    void poll(std::uint64_t nodes) const {
        if (armed_ && (nodes & 0x3ff) == 0) check();
    }

private:
    clock::time_point at_{};
    bool armed_ = false;
};

} // namespace tourlab
