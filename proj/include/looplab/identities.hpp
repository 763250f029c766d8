#pragma once

#include <optional>
#include <string>
#include <vector>

#include "looplab/loop_table.hpp"

namespace looplab {

/// Outcome of one identity check. When the identity fails, `witness` holds
/// the first violating assignment in scan order (lexicographically smallest,
/// so reports are deterministic) and `violated` names the specific law that
/// broke for checks covering several laws at once.
struct IdentityVerdict {
  std::string name;
  bool holds = false;
  std::optional<std::vector<Elem>> witness;
  std::string violated;
};

/// (x*y)*z = x*(y*z) for all triples; witness order (x, y, z).
IdentityVerdict is_associative(const LoopTable& t);

enum class MoufangVariant { One, Two, Three, All };

/// Moufang identities, witness order (z, x, y):
///   (1) z(x(zy)) = ((zx)z)y
///   (2) ((xz)y)z = x(z(yz))
///   (3) (zx)(yz) = (z(xy))z
/// All three are equivalent in any loop; `All` checks them jointly and the
/// equivalence itself is asserted by tests rather than assumed here.
IdentityVerdict is_moufang(const LoopTable& t,
                           MoufangVariant variant = MoufangVariant::All);

/// Conjugacy closedness, witness order (x, y, z):
///   (4) z(xy) = R_z^{-1}(zx) * (zy)
///   (5) (xy)z = (xz) * L_z^{-1}(yz)
/// with the inverse translations realized as divisions.
IdentityVerdict is_cc(const LoopTable& t);

/// Alternative laws (xx)y = x(xy) and (xy)y = x(yy); witness order (x, y).
IdentityVerdict is_alternative(const LoopTable& t);

/// Every two-generated subloop is associative; witness order (x, y) names a
/// generating pair whose closure fails.
IdentityVerdict is_diassociative(const LoopTable& t);

/// Associativity restricted to a subset (under the ambient product). Used by
/// the di-associativity check and the Moufang-theorem verifier.
bool associative_on(const LoopTable& t, const std::vector<Elem>& s);

}  // namespace looplab
