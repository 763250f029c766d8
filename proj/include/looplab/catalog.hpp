#pragma once

#include <string>
#include <vector>

#include "looplab/loop_table.hpp"

namespace looplab {

/// A named built-in loop. Every entry re-verifies its expected properties on
/// first materialization and construction aborts with std::logic_error if a
/// check fails; a constructed entry is therefore trustworthy evidence.
struct CatalogEntry {
  std::string name;
  std::string description;
  LoopTable table;
};

/// The 16-element octonion unit loop {+-e0..+-e7}, built by Cayley-Dickson
/// doubling of the quaternion group with (a,b)(c,d) = (ac - d*b, da + bc*).
/// Element i encodes sign*8 + part*4 + basis, so e0 = 0 is the identity and
/// -e0 = 8. Checked: Moufang, nonassociative, nucleus {0,8}, index 8,
/// quotient elementary-abelian of order 8, p_assoc 43/64.
const CatalogEntry& o16();

/// The quaternion group {+-1,+-i,+-j,+-k}; element i encodes sign*4 + basis.
/// Checked: associative, p_comm 5/8.
const CatalogEntry& q8();

/// The lexicographically first normalized nonassociative CC loop of order 6,
/// frozen from the enumerator's output (the enumerator regression test
/// reproduces it bit for bit). Checked: CC, nonassociative, p_assoc 7/8.
const CatalogEntry& smallest_cc();

/// Elementary-abelian group of order 4 (XOR on two bits).
const CatalogEntry& klein4();

/// Cyclic group of order n. Throws Error(InvalidOrder) for n < 1.
CatalogEntry cyclic(int n);

/// Elementary-abelian 2-group (XOR table). The order must be a power of two;
/// throws Error(InvalidOrder) otherwise.
CatalogEntry elementary_abelian(int order);

/// Resolves a catalog name: "o16", "q8", "smallest_cc", "klein4",
/// "cyclic(N)", "elementary_abelian(N)". Throws Error(Parse) for unknown
/// names and Error(InvalidOrder) for bad parameters.
CatalogEntry catalog_lookup(const std::string& name);

/// Accepted name patterns, for the CLI listing.
std::vector<std::string> catalog_names();

}  // namespace looplab
