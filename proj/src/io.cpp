#include "looplab/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <vector>

namespace looplab {

namespace {

// Splits one physical line into integer tokens, stripping '#' comments.
// Returns false on a malformed token, reporting its column (1-based).
bool tokenize(const std::string& line, std::vector<long>& out, int& bad_column) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    bool neg = false;
    if (ch == '-' || ch == '+') {
      neg = (ch == '-');
      ++i;
    }
    long v = 0;
    bool any = false;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
      v = v * 10 + (line[i] - '0');
      any = true;
      ++i;
    }
    if (!any || (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
                 line[i] != '#')) {
      bad_column = static_cast<int>(start) + 1;
      return false;
    }
    out.push_back(neg ? -v : v);
  }
  return true;
}

}  // namespace

MagmaTable parse_table(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::vector<Elem>> rows;
  std::vector<long> toks;

  while (std::getline(in, line)) {
    ++lineno;
    int bad_col = 0;
    if (!tokenize(line, toks, bad_col))
      throw Error(Error::Kind::Parse, "line " + std::to_string(lineno) + ": malformed token",
                  lineno, bad_col);
    if (toks.empty()) continue;

    if (n < 0) {
      if (toks.size() != 1)
        throw Error(Error::Kind::Parse,
                    "line " + std::to_string(lineno) + ": expected a single order, got " +
                        std::to_string(toks.size()) + " tokens",
                    lineno);
      if (toks[0] < 1)
        throw Error(Error::Kind::Parse,
                    "line " + std::to_string(lineno) + ": order must be >= 1", lineno);
      n = static_cast<int>(toks[0]);
      continue;
    }
    if (static_cast<int>(rows.size()) == n)
      throw Error(Error::Kind::Parse,
                  "line " + std::to_string(lineno) + ": unexpected content after table", lineno);
    if (static_cast<int>(toks.size()) != n)
      throw Error(Error::Kind::Parse,
                  "line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                      " entries, got " + std::to_string(toks.size()),
                  lineno);
    std::vector<Elem> row(n);
    for (int c = 0; c < n; ++c) {
      if (toks[c] < 0 || toks[c] >= n)
        throw Error(Error::Kind::OutOfRangeEntry,
                    "line " + std::to_string(lineno) + ": entry " + std::to_string(toks[c]) +
                        " out of range [0," + std::to_string(n - 1) + "]",
                    lineno, c + 1);
      row[c] = static_cast<Elem>(toks[c]);
    }
    rows.push_back(std::move(row));
  }

  if (n < 0) throw Error(Error::Kind::Parse, "empty input: missing order line");
  if (static_cast<int>(rows.size()) != n)
    throw Error(Error::Kind::Parse, "expected " + std::to_string(n) + " rows, got " +
                                        std::to_string(rows.size()));
  return MagmaTable::from_rows(rows);
}

MagmaTable parse_table(const std::string& text) {
  std::istringstream in(text);
  return parse_table(in);
}

std::string format_table(const MagmaTable& m) {
  std::ostringstream out;
  const int n = m.order();
  out << n << '\n';
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) out << ' ';
      out << m.at(r, c);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_table(const LoopTable& t) { return format_table(t.magma()); }

std::uint64_t content_hash(const MagmaTable& m) {
  const std::string text = format_table(m);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string content_hash_hex(const MagmaTable& m) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = content_hash(m);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace looplab
