#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurmp {

enum class Errc {
  NotPrime,
  DegreeZero,
  FieldTooLarge,
  NotIrreducible,
  NotPrimitive,
  GcdNotOne,
  NoEmbedding,
  DescentFailed,
  LengthMismatch,
  FieldMismatch,
  BudgetExceeded,
  RankDeficientA,
  MixedConstituents,
  NotSquare,
  Singular,
  TooManyRows,
  TooFewColumns,
  RepeatedAlpha,
  NotNested,
  CharacteristicMismatch,
  ModulusMismatch,
  EmptySet,
  NotCosetClosed,
  OutOfRange,
  RunMismatch,
  RankMismatch,
  ParameterWindow,
  UnknownSuite,
  InvalidArgument,
  VerificationFailed,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::NoEmbedding: return "NoEmbedding";
    case Errc::DescentFailed: return "DescentFailed";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::RankDeficientA: return "RankDeficientA";
    case Errc::MixedConstituents: return "MixedConstituents";
    case Errc::NotSquare: return "NotSquare";
    case Errc::Singular: return "Singular";
    case Errc::TooManyRows: return "TooManyRows";
    case Errc::TooFewColumns: return "TooFewColumns";
    case Errc::RepeatedAlpha: return "RepeatedAlpha";
    case Errc::NotNested: return "NotNested";
    case Errc::CharacteristicMismatch: return "CharacteristicMismatch";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::EmptySet: return "EmptySet";
    case Errc::NotCosetClosed: return "NotCosetClosed";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::RunMismatch: return "RunMismatch";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::ParameterWindow: return "ParameterWindow";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

// Internal consistency failures, as opposed to bad caller input.
constexpr bool is_verification_failure(Errc e) {
  return e == Errc::DescentFailed || e == Errc::RankMismatch || e == Errc::RunMismatch ||
         e == Errc::VerificationFailed;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace schurmp
