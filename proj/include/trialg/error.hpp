#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trialg {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class AssociativityViolation : public Error {
 public:
  AssociativityViolation(std::size_t i, std::size_t j, std::size_t k,
                         std::string left, std::string right)
      : Error("associativity fails on (e" + std::to_string(i) + " e" + std::to_string(j) +
              ") e" + std::to_string(k) + ": " + left + " != " + right),
        i(i), j(j), k(k), left_product(std::move(left)), right_product(std::move(right)) {}

  std::size_t i, j, k;
  std::string left_product;   // (e_i e_j) e_k
  std::string right_product;  // e_i (e_j e_k)
};

class UnitViolation : public Error {
 public:
  explicit UnitViolation(std::size_t index)
      : Error("declared unit does not act as identity on basis element " +
              std::to_string(index)),
        index(index) {}
  std::size_t index;
};

class BimoduleViolation : public Error {
 public:
  using Error::Error;
};

class ZeroModule : public Error {
 public:
  ZeroModule() : Error("bimodule must be nonzero") {}
};

enum class Side { left, right };

class NotFaithful : public Error {
 public:
  NotFaithful(Side side, std::string witness)
      : Error(std::string("bimodule is not faithful as a ") +
              (side == Side::left ? "left" : "right") + " module; annihilating element " +
              witness),
        side(side), witness(std::move(witness)) {}
  Side side;
  std::string witness;
};

/// Two independent computations of the same object disagreed. Always a bug.
class StructuralMismatch : public Error {
 public:
  using Error::Error;
};

class NotAutomorphism : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

class ReconstructionMismatch : public Error {
 public:
  ReconstructionMismatch(std::string what, std::size_t basis_index)
      : Error(what + ": recomposed map differs on basis element " +
              std::to_string(basis_index)),
        basis_index(basis_index) {}
  std::size_t basis_index;
};

class InvalidParts : public Error {
 public:
  using Error::Error;
};

class ConditionFailure : public Error {
 public:
  ConditionFailure(std::string label, std::string witness)
      : Error("condition (" + label + ") fails: " + witness),
        label(std::move(label)), witness(std::move(witness)) {}
  std::string label;
  std::string witness;
};

}  // namespace trialg
