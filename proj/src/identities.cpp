#include "looplab/identities.hpp"

#include "looplab/structure.hpp"

namespace looplab {

namespace {

IdentityVerdict pass(std::string name) {
  return IdentityVerdict{std::move(name), true, std::nullopt, ""};
}

IdentityVerdict fail(std::string name, std::vector<Elem> witness,
                     std::string violated) {
  return IdentityVerdict{std::move(name), false, std::move(witness),
                         std::move(violated)};
}

bool moufang1(const LoopTable& t, Elem z, Elem x, Elem y) {
  return t.mul(z, t.mul(x, t.mul(z, y))) == t.mul(t.mul(t.mul(z, x), z), y);
}

bool moufang2(const LoopTable& t, Elem z, Elem x, Elem y) {
  return t.mul(t.mul(t.mul(x, z), y), z) == t.mul(x, t.mul(z, t.mul(y, z)));
}

bool moufang3(const LoopTable& t, Elem z, Elem x, Elem y) {
  return t.mul(t.mul(z, x), t.mul(y, z)) == t.mul(t.mul(z, t.mul(x, y)), z);
}

}  // namespace

IdentityVerdict is_associative(const LoopTable& t) {
  const int n = t.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z)))
          return fail("associative", {x, y, z}, "(xy)z = x(yz)");
  return pass("associative");
}

IdentityVerdict is_moufang(const LoopTable& t, MoufangVariant variant) {
  const char* name = "moufang";
  switch (variant) {
    case MoufangVariant::One: name = "moufang(1)"; break;
    case MoufangVariant::Two: name = "moufang(2)"; break;
    case MoufangVariant::Three: name = "moufang(3)"; break;
    case MoufangVariant::All: name = "moufang"; break;
  }
  const bool one = variant == MoufangVariant::One || variant == MoufangVariant::All;
  const bool two = variant == MoufangVariant::Two || variant == MoufangVariant::All;
  const bool three =
      variant == MoufangVariant::Three || variant == MoufangVariant::All;
  const int n = t.order();
  for (Elem z = 0; z < n; ++z)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (one && !moufang1(t, z, x, y))
          return fail(name, {z, x, y}, "z(x(zy)) = ((zx)z)y");
        if (two && !moufang2(t, z, x, y))
          return fail(name, {z, x, y}, "((xz)y)z = x(z(yz))");
        if (three && !moufang3(t, z, x, y))
          return fail(name, {z, x, y}, "(zx)(yz) = (z(xy))z");
      }
  return pass(name);
}

IdentityVerdict is_cc(const LoopTable& t) {
  const int n = t.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        // (4): z(xy) = R_z^{-1}(zx) * (zy), with R_z^{-1}(w) solving v*z = w.
        const Elem lhs4 = t.mul(z, t.mul(x, y));
        const Elem rhs4 = t.mul(t.right_div(z, t.mul(z, x)), t.mul(z, y));
        if (lhs4 != rhs4)
          return fail("cc", {x, y, z}, "z(xy) = R_z^-1(zx)*(zy)");
        // (5): (xy)z = (xz) * L_z^{-1}(yz), with L_z^{-1}(w) solving z*v = w.
        const Elem lhs5 = t.mul(t.mul(x, y), z);
        const Elem rhs5 = t.mul(t.mul(x, z), t.left_div(z, t.mul(y, z)));
        if (lhs5 != rhs5)
          return fail("cc", {x, y, z}, "(xy)z = (xz)*L_z^-1(yz)");
      }
  return pass("cc");
}

IdentityVerdict is_alternative(const LoopTable& t) {
  const int n = t.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (t.mul(t.mul(x, x), y) != t.mul(x, t.mul(x, y)))
        return fail("alternative", {x, y}, "(xx)y = x(xy)");
      if (t.mul(t.mul(x, y), y) != t.mul(x, t.mul(y, y)))
        return fail("alternative", {x, y}, "(xy)y = x(yy)");
    }
  return pass("alternative");
}

bool associative_on(const LoopTable& t, const std::vector<Elem>& s) {
  for (Elem x : s)
    for (Elem y : s)
      for (Elem z : s)
        if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z))) return false;
  return true;
}

IdentityVerdict is_diassociative(const LoopTable& t) {
  const int n = t.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x; y < n; ++y)
      if (!associative_on(t, subloop_closure(t, {x, y})))
        return fail("diassociative", {x, y}, "<x,y> associative");
  return pass("diassociative");
}

}  // namespace looplab
