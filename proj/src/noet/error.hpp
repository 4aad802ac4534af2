#pragma once

#include <stdexcept>
#include <string>

namespace noet {

enum class ErrorCode {
  ValueOutsideSpace,
  RequiresExtensional,
  SpaceMismatch,
  SpaceTooLarge,
  NotEnumerable,
  NotNoetherian,
  MalformedExpr,
  UnknownNamedFunction,
  EmptySpace,
  InitEscapesSpace,
  BodyNotSubsetOfOrder,
  DomainMismatch,
  OrderNotNoetherian,
  FuelExhausted,
  InputOutsideSpace,
  NonTotalFunction,
  NegativeVariantValue,
  ParameterOutOfRange,
  UnknownOracle,
  MalformedInput,
};

const char* to_string(ErrorCode code);

// All library failures surface as this exception. `witness` carries a
// human-readable rendering of the offending value, pair or chain when the
// failure has one.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

private:
  ErrorCode code_;
  std::string witness_;
};

} // namespace noet
