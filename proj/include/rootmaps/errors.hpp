#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rootmaps {

/// Raised when exact arithmetic produces something the underlying identities
/// forbid (a non-integral count, a logarithmic term, a stray pole). These are
/// never user errors; the CLI maps them to exit code 3.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a cross-check between two independent routes fails. The CLI
/// maps these to exit code 2.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonIntegerResult : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

class NonIntegerClassCount : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

// Residue is carried as text so this header stays free of GMP.
class LogTermPresent : public ConsistencyError {
 public:
  LogTermPresent(int root, std::string residue)
      : ConsistencyError("logarithmic term at T=" + std::to_string(root) +
                         " with residue " + residue),
        root_(root),
        residue_(std::move(residue)) {}
  int root() const noexcept { return root_; }
  const std::string& residue() const noexcept { return residue_; }

 private:
  int root_;
  std::string residue_;
};

class PoleAtOne : public ConsistencyError {
 public:
  PoleAtOne() : ConsistencyError("rational function has a pole at T=1") {}
};

class UnsupportedRoot : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

class AnsatzViolation : public ConsistencyError {
 public:
  /// Root value used when the polynomial part (the pole at infinity) is too large.
  static constexpr int kInfinity = 1 << 30;

  AnsatzViolation(int genus, int root, int order)
      : ConsistencyError("R_" + std::to_string(genus) + " violates the pole ansatz at T=" +
                         (root == kInfinity ? std::string("infinity") : std::to_string(root)) +
                         " (order " + std::to_string(order) + ")"),
        genus_(genus),
        root_(root),
        order_(order) {}
  int genus() const noexcept { return genus_; }
  int root() const noexcept { return root_; }
  int order() const noexcept { return order_; }

 private:
  int genus_;
  int root_;
  int order_;
};

class MissingLeadingPole : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

class InconsistentSystem : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

class UnderdeterminedSystem : public ConsistencyError {
 public:
  UnderdeterminedSystem(int unknowns, int rank)
      : ConsistencyError("linear system is rank deficient: rank " + std::to_string(rank) +
                         " for " + std::to_string(unknowns) + " unknowns"),
        unknowns_(unknowns),
        rank_(rank) {}
  int deficit() const noexcept { return unknowns_ - rank_; }

 private:
  int unknowns_;
  int rank_;
};

class ValidationMismatch : public VerificationError {
 public:
  ValidationMismatch(int i, int j, const std::string& detail)
      : VerificationError("mismatch at (" + std::to_string(i) + "," + std::to_string(j) +
                          "): " + detail),
        i_(i),
        j_(j) {}
  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }

 private:
  int i_;
  int j_;
};

class IdentityViolation : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

}  // namespace rootmaps
