#include <acolor/error.hpp>

namespace acolor {

auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::EdgeAbsent: return "EdgeAbsent";
        case ErrorKind::ImproperAssignment: return "ImproperAssignment";
        case ErrorKind::ColorOutOfRange: return "ColorOutOfRange";
        case ErrorKind::BichromaticCycleDetected: return "BichromaticCycleDetected";
        case ErrorKind::ImproperExchange: return "ImproperExchange";
        case ErrorKind::NoWitness: return "NoWitness";
        case ErrorKind::CycleComponent: return "CycleComponent";
        case ErrorKind::EngineExhausted: return "EngineExhausted";
        case ErrorKind::NotReducible: return "NotReducible";
        case ErrorKind::PaletteExhausted: return "PaletteExhausted";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::BadParams: return "BadParams";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string & what) :
    std::runtime_error(std::string{to_string(kind)} + ": " + what),
    kind_(kind),
    detail_(what)
{
}

}
