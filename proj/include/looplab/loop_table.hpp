#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "looplab/error.hpp"

namespace looplab {

/// Element of a finite magma, an index into its Cayley table.
using Elem = int;

/// Permutation of 0..n-1, stored by image.
using Perm = std::vector<Elem>;

/// An n x n Cayley table over 0..n-1. Guarantees closure (every entry in
/// range) and nothing else; validate() upgrades it to a quasigroup or loop.
class MagmaTable {
 public:
  /// Throws Error(OutOfRangeEntry) if any entry is outside 0..n-1.
  MagmaTable(int order, std::vector<Elem> cells);

  static MagmaTable from_rows(const std::vector<std::vector<Elem>>& rows);

  int order() const noexcept { return n_; }
  Elem at(Elem a, Elem b) const { return cells_[static_cast<std::size_t>(a) * n_ + b]; }
  const std::vector<Elem>& cells() const noexcept { return cells_; }

  friend bool operator==(const MagmaTable&, const MagmaTable&) = default;

 private:
  int n_;
  std::vector<Elem> cells_;
};

enum class Classification { Magma, Quasigroup, Loop };

std::string to_string(Classification c);

struct Validation;

/// A validated loop: Latin Cayley table with a two-sided identity.
///
/// Immutable after construction; every member function is const and safe to
/// call concurrently. Division tables are precomputed so mul/left_div/
/// right_div are all O(1) lookups.
class LoopTable {
 public:
  int order() const noexcept { return n_; }
  Elem identity() const noexcept { return identity_; }

  Elem mul(Elem a, Elem b) const { return cells_[static_cast<std::size_t>(a) * n_ + b]; }
  /// The unique x with a * x = b.
  Elem left_div(Elem a, Elem b) const { return ldiv_[static_cast<std::size_t>(a) * n_ + b]; }
  /// The unique x with x * a = b.
  Elem right_div(Elem a, Elem b) const { return rdiv_[static_cast<std::size_t>(a) * n_ + b]; }

  const std::vector<Elem>& cells() const noexcept { return cells_; }
  MagmaTable magma() const { return MagmaTable(n_, cells_); }

  friend bool operator==(const LoopTable& a, const LoopTable& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

  /// Validates and converts; throws Error(NotALoop) when the table is not a
  /// loop. Intended for tables that are loops by construction.
  static LoopTable require(const MagmaTable& m);

 private:
  friend struct Validation;
  friend Validation validate(const MagmaTable& m);
  LoopTable(int n, std::vector<Elem> cells, Elem identity);

  int n_;
  Elem identity_;
  std::vector<Elem> cells_;
  std::vector<Elem> ldiv_;
  std::vector<Elem> rdiv_;
};

/// One reason a table failed to be a quasigroup or loop.
struct ValidationIssue {
  enum class Kind { RowRepeat, ColRepeat, NoIdentity };
  Kind kind;
  int index = -1;  // offending row or column
  int value = -1;  // repeated value

  std::string message() const;
};

struct Validation {
  Classification classification = Classification::Magma;
  std::optional<LoopTable> loop;          // set iff classification == Loop
  std::vector<ValidationIssue> issues;    // evidence for the classification
};

/// Classifies a table as magma / quasigroup / loop. A loop's identity is
/// auto-detected (not required to be element 0) and is unique when it exists.
Validation validate(const MagmaTable& m);

/// Left and right translation maps (L_x, R_x) as full permutations:
/// L_x(y) = x*y, R_x(y) = y*x.
std::pair<Perm, Perm> translations(const LoopTable& t, Elem x);

/// The y with x*y = y*x = identity, when left and right inverses agree.
std::optional<Elem> two_sided_inverse(const LoopTable& t, Elem x);

/// Searches for an isomorphism a -> b over identity-fixing bijections with
/// element-order-profile pruning (profile of x = |<x>|). Intended for desk
/// scale (n <= 16). Throws Error(OrderMismatch) when orders differ.
std::optional<Perm> isomorphic(const LoopTable& a, const LoopTable& b);

}  // namespace looplab
