#include "looplab/catalog.hpp"

#include <stdexcept>

#include "looplab/error.hpp"
#include "looplab/identities.hpp"
#include "looplab/probability.hpp"
#include "looplab/structure.hpp"

namespace looplab {

namespace {

void check(bool ok, const std::string& entry, const char* what) {
  if (!ok)
    throw std::logic_error("catalog self-check failed: " + entry + ": " + what);
}

// Quaternion units as (sign, basis) with basis 0=1, 1=i, 2=j, 3=k.
struct QUnit {
  int sign;  // 0 or 1, meaning +/-
  int basis;
};

QUnit qmul(QUnit a, QUnit b) {
  // Product of basis units: resulting basis and sign bit.
  static constexpr int kBasis[4][4] = {
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  };
  static constexpr int kSign[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 0, 1},
      {0, 1, 1, 0},
      {0, 0, 1, 1},
  };
  return QUnit{a.sign ^ b.sign ^ kSign[a.basis][b.basis],
               kBasis[a.basis][b.basis]};
}

QUnit qconj(QUnit a) { return QUnit{a.basis == 0 ? a.sign : a.sign ^ 1, a.basis}; }

QUnit qneg(QUnit a) { return QUnit{a.sign ^ 1, a.basis}; }

LoopTable build_o16() {
  // Element i = sign*8 + part*4 + basis encodes the pair (q, 0) for part 0
  // and (0, q) for part 1, q the signed quaternion unit.
  struct Oct {
    int part;
    QUnit q;
  };
  auto unpack = [](Elem i) {
    return Oct{(i >> 2) & 1, QUnit{(i >> 3) & 1, i & 3}};
  };
  auto pack = [](Oct o) { return (o.q.sign << 3) | (o.part << 2) | o.q.basis; };
  std::vector<Elem> cells(16 * 16);
  for (Elem u = 0; u < 16; ++u) {
    for (Elem v = 0; v < 16; ++v) {
      const Oct a = unpack(u), b = unpack(v);
      // (a,b)(c,d) = (ac - d*b, da + bc*), one component per case.
      Oct r;
      if (a.part == 0 && b.part == 0)
        r = Oct{0, qmul(a.q, b.q)};
      else if (a.part == 0 && b.part == 1)
        r = Oct{1, qmul(b.q, a.q)};
      else if (a.part == 1 && b.part == 0)
        r = Oct{1, qmul(a.q, qconj(b.q))};
      else
        r = Oct{0, qneg(qmul(qconj(b.q), a.q))};
      cells[static_cast<std::size_t>(u) * 16 + v] = pack(r);
    }
  }
  return LoopTable::require(MagmaTable(16, std::move(cells)));
}

LoopTable build_q8() {
  std::vector<Elem> cells(8 * 8);
  for (Elem u = 0; u < 8; ++u)
    for (Elem v = 0; v < 8; ++v) {
      const QUnit p = qmul(QUnit{u >> 2, u & 3}, QUnit{v >> 2, v & 3});
      cells[static_cast<std::size_t>(u) * 8 + v] = (p.sign << 2) | p.basis;
    }
  return LoopTable::require(MagmaTable(8, std::move(cells)));
}

LoopTable xor_table(int n) {
  std::vector<Elem> cells(static_cast<std::size_t>(n) * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      cells[static_cast<std::size_t>(i) * n + j] = i ^ j;
  return LoopTable::require(MagmaTable(n, std::move(cells)));
}

}  // namespace

const CatalogEntry& o16() {
  static const CatalogEntry entry = [] {
    CatalogEntry e{"o16",
                   "octonion unit loop, Cayley-Dickson double of the "
                   "quaternion group",
                   build_o16()};
    const LoopTable& t = e.table;
    check(is_moufang(t).holds, e.name, "Moufang");
    check(!is_associative(t).holds, e.name, "nonassociative");
    const ElementSet nuc = nucleus(t);
    check(nuc == ElementSet({0, 8}), e.name, "nucleus {0,8}");
    const CosetDecomposition dec = cosets(t, nuc, CosetSide::Left);
    check(dec.partitions && dec.index == 8, e.name, "index 8");
    check(isomorphic(quotient(t, nuc).table, elementary_abelian(8).table)
              .has_value(),
          e.name, "quotient elementary-abelian(8)");
    check(p_assoc(t) == Fraction(43, 64), e.name, "p_assoc 43/64");
    return e;
  }();
  return entry;
}

const CatalogEntry& q8() {
  static const CatalogEntry entry = [] {
    CatalogEntry e{"q8", "quaternion group", build_q8()};
    check(is_associative(e.table).holds, e.name, "associative");
    check(p_comm(e.table) == Fraction(5, 8), e.name, "p_comm 5/8");
    return e;
  }();
  return entry;
}

const CatalogEntry& smallest_cc() {
  static const CatalogEntry entry = [] {
    // Frozen from `looplab enumerate --order 6 --filter cc,nonassociative`:
    // the first table in lexicographic order.
    const std::vector<std::vector<Elem>> rows = {
        {0, 1, 2, 3, 4, 5}, {1, 2, 0, 4, 5, 3}, {2, 0, 1, 5, 3, 4},
        {3, 5, 4, 1, 0, 2}, {4, 3, 5, 2, 1, 0}, {5, 4, 3, 0, 2, 1},
    };
    CatalogEntry e{"smallest_cc",
                   "smallest nonassociative conjugacy-closed loop, frozen "
                   "from the order-6 enumeration",
                   LoopTable::require(MagmaTable::from_rows(rows))};
    check(is_cc(e.table).holds, e.name, "CC");
    check(!is_associative(e.table).holds, e.name, "nonassociative");
    check(p_assoc(e.table) == Fraction(7, 8), e.name, "p_assoc 7/8");
    return e;
  }();
  return entry;
}

const CatalogEntry& klein4() {
  static const CatalogEntry entry = [] {
    CatalogEntry e{"klein4", "Klein four-group", xor_table(4)};
    check(is_associative(e.table).holds, e.name, "associative");
    return e;
  }();
  return entry;
}

CatalogEntry cyclic(int n) {
  if (n < 1)
    throw Error(Error::Kind::InvalidOrder,
                "cyclic: order must be >= 1, got " + std::to_string(n));
  std::vector<Elem> cells(static_cast<std::size_t>(n) * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      cells[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  CatalogEntry e{"cyclic(" + std::to_string(n) + ")",
                 "cyclic group of order " + std::to_string(n),
                 LoopTable::require(MagmaTable(n, std::move(cells)))};
  check(is_associative(e.table).holds, e.name, "associative");
  return e;
}

CatalogEntry elementary_abelian(int order) {
  if (order < 1 || (order & (order - 1)) != 0)
    throw Error(Error::Kind::InvalidOrder,
                "elementary_abelian: order must be a power of two, got " +
                    std::to_string(order));
  CatalogEntry e{"elementary_abelian(" + std::to_string(order) + ")",
                 "elementary-abelian 2-group of order " + std::to_string(order),
                 xor_table(order)};
  check(is_associative(e.table).holds, e.name, "associative");
  return e;
}

CatalogEntry catalog_lookup(const std::string& name) {
  if (name == "o16") return o16();
  if (name == "q8") return q8();
  if (name == "smallest_cc") return smallest_cc();
  if (name == "klein4") return klein4();
  const auto open = name.find('(');
  if (open != std::string::npos && name.back() == ')') {
    const std::string base = name.substr(0, open);
    const std::string arg = name.substr(open + 1, name.size() - open - 2);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw Error(Error::Kind::Parse,
                  "catalog: bad order '" + arg + "' in '" + name + "'");
    }
    if (base == "cyclic") return cyclic(n);
    if (base == "elementary_abelian") return elementary_abelian(n);
  }
  throw Error(Error::Kind::Parse, "unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"o16", "q8", "smallest_cc", "klein4", "cyclic(N)",
          "elementary_abelian(N)"};
}

}  // namespace looplab
