#pragma once

#include <stdexcept>
#include <string>

namespace diffbody {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyInput : Error {
    explicit EmptyInput(const std::string& msg = "empty input") : Error(msg) {}
};

// Input whose affine hull is not full-dimensional (or a zero scale factor).
struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& msg = "degenerate input") : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg = "dimension mismatch") : Error(msg) {}
};

struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(const std::string& msg = "dimension too large") : Error(msg) {}
};

struct OriginNotInterior : Error {
    explicit OriginNotInterior(const std::string& msg = "origin not strictly interior")
        : Error(msg) {}
};

struct LambdaOutOfRange : Error {
    explicit LambdaOutOfRange(const std::string& msg = "lambda out of range") : Error(msg) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg = "index out of range") : Error(msg) {}
};

struct SampleCountTooSmall : Error {
    explicit SampleCountTooSmall(const std::string& msg = "sample count too small")
        : Error(msg) {}
};

struct RankFailure : Error {
    explicit RankFailure(const std::string& msg = "rank failure") : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A proven mathematical fact failed under exact arithmetic. This can only mean
// an engine bug, so it carries a diagnostic dump for inspection.
struct EngineInvariantViolation : Error {
    std::string diagnostic;
    EngineInvariantViolation(const std::string& msg, std::string diag)
        : Error(msg + "\n" + diag), diagnostic(std::move(diag)) {}
};

}  // namespace diffbody
