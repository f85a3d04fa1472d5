#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acolor {

enum class ErrorKind {
    SelfLoop,
    VertexOutOfRange,
    EdgeAbsent,
    ImproperAssignment,
    ColorOutOfRange,
    BichromaticCycleDetected,
    ImproperExchange,
    NoWitness,
    CycleComponent,
    EngineExhausted,
    NotReducible,
    PaletteExhausted,
    ParseError,
    BadParams,
};

auto to_string(ErrorKind kind) -> std::string_view;

/// Every recoverable failure in the library is reported through this one
/// exception type; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & what);

    [[nodiscard]] auto kind() const noexcept -> ErrorKind { return kind_; }
    /// Message without the kind prefix.
    [[nodiscard]] auto detail() const noexcept -> const std::string & { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}
