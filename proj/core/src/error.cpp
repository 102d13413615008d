#include "divindex/error.hpp"

#include <utility>

namespace divindex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPopulation: return "ZeroPopulation";
    case ErrorKind::EmptyRegion: return "EmptyRegion";
    case ErrorKind::UnassignedUnit: return "UnassignedUnit";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::DegenerateRegion: return "DegenerateRegion";
    case ErrorKind::MissingGroup: return "MissingGroup";
    case ErrorKind::ZeroMean: return "ZeroMean";
    case ErrorKind::EmptyDistrict: return "EmptyDistrict";
    case ErrorKind::MissingCoordinates: return "MissingCoordinates";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NegativeCount: return "NegativeCount";
    case ErrorKind::DuplicateUnitId: return "DuplicateUnitId";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  return kind == ErrorKind::ParseError || kind == ErrorKind::NegativeCount ||
         kind == ErrorKind::DuplicateUnitId;
}

Error::Error(ErrorKind kind, const std::string& message, std::string source)
    : std::runtime_error(message), kind_(kind), source_(std::move(source)) {}

Error Error::with_source(std::string source) const {
  return Error(kind_, what(), std::move(source));
}

}  // namespace divindex
