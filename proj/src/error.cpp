#include "qspin/error.hpp"

namespace qspin {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ClassicalSingular: return "ClassicalSingular";
    case ErrorKind::ArgumentOutOfRange: return "ArgumentOutOfRange";
    case ErrorKind::InadmissibleTriple: return "InadmissibleTriple";
    case ErrorKind::InadmissibleLabel: return "InadmissibleLabel";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::DivisorVanishes: return "DivisorVanishes";
    case ErrorKind::CalibrationFailed: return "CalibrationFailed";
    case ErrorKind::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace qspin
