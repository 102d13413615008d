#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace divindex {

enum class ErrorKind {
  ZeroPopulation,
  EmptyRegion,
  UnassignedUnit,
  SupportViolation,
  DegenerateRegion,
  MissingGroup,
  ZeroMean,
  EmptyDistrict,
  MissingCoordinates,
  DimensionMismatch,
  ParseError,
  NegativeCount,
  DuplicateUnitId,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

// True for errors raised while reading input files (CLI exit code 2);
// everything else is a domain error (exit code 3).
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string source = {});

  ErrorKind kind() const noexcept { return kind_; }
  // "file.csv:12" for parse errors, empty when the error has no input provenance.
  const std::string& source() const noexcept { return source_; }

  Error with_source(std::string source) const;

 private:
  ErrorKind kind_;
  std::string source_;
};

}  // namespace divindex
