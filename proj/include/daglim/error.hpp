#pragma once

#include <stdexcept>
#include <string>

namespace daglim {

enum class Errc {
  ObjectMismatch,
  DimensionMismatch,
  UnknownObject,
  NotAForest,
  WrongShape,
  ClosureDiverged,
  UnsupportedOmega,
  UnsupportedOperation,
  EmptyFamily,
  NotIsometry,
  NotEndomorphism,
  NotAState,
  NotComparable,
  ZeroDenominator,
  ZeroInverse,
  NegativeInput,
  BadInput,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ObjectMismatch: return "ObjectMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnknownObject: return "UnknownObject";
    case Errc::NotAForest: return "NotAForest";
    case Errc::WrongShape: return "WrongShape";
    case Errc::ClosureDiverged: return "ClosureDiverged";
    case Errc::UnsupportedOmega: return "UnsupportedOmega";
    case Errc::UnsupportedOperation: return "UnsupportedOperation";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::NotIsometry: return "NotIsometry";
    case Errc::NotEndomorphism: return "NotEndomorphism";
    case Errc::NotAState: return "NotAState";
    case Errc::NotComparable: return "NotComparable";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc kind, const std::string& message)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + message), kind_(kind) {}

  Errc kind() const { return kind_; }

 private:
  Errc kind_;
};

}  // namespace daglim
