#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibprod {

// Fine-grained failure reasons raised by the library.
enum class ErrorKind {
    parse,
    space_mismatch,
    grade,
    rank_bound,
    rank,
    ordering,
    normalization,
    empty_input,
    not_ample,
    invalid_space,
    invalid_value,
    hypothesis,
    inconsistency,
};

// Coarse classes used for process exit statuses and the "error_kind" field.
enum class ErrorClass { parse, validation, hypothesis, internal };

constexpr ErrorClass classify(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::parse:
        return ErrorClass::parse;
    case ErrorKind::hypothesis:
        return ErrorClass::hypothesis;
    case ErrorKind::inconsistency:
    case ErrorKind::space_mismatch:
        return ErrorClass::internal;
    default:
        return ErrorClass::validation;
    }
}

constexpr int exit_status(ErrorClass cls) noexcept {
    switch (cls) {
    case ErrorClass::parse: return 2;
    case ErrorClass::validation: return 3;
    case ErrorClass::hypothesis: return 4;
    case ErrorClass::internal: return 5;
    }
    return 5;
}

constexpr std::string_view to_string(ErrorClass cls) noexcept {
    switch (cls) {
    case ErrorClass::parse: return "parse";
    case ErrorClass::validation: return "validation";
    case ErrorClass::hypothesis: return "hypothesis";
    case ErrorClass::internal: return "internal";
    }
    return "internal";
}

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::space_mismatch: return "space-mismatch";
    case ErrorKind::grade: return "grade";
    case ErrorKind::rank_bound: return "rank-bound";
    case ErrorKind::rank: return "rank";
    case ErrorKind::ordering: return "ordering";
    case ErrorKind::normalization: return "normalization";
    case ErrorKind::empty_input: return "empty-input";
    case ErrorKind::not_ample: return "not-ample";
    case ErrorKind::invalid_space: return "invalid-space";
    case ErrorKind::invalid_value: return "invalid-value";
    case ErrorKind::hypothesis: return "hypothesis";
    case ErrorKind::inconsistency: return "inconsistency";
    }
    return "inconsistency";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    ErrorClass error_class() const noexcept { return classify(kind_); }

private:
    ErrorKind kind_;
};

} // namespace fibprod
