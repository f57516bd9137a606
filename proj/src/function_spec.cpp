#include "cclab/function_spec.hpp"

#include <fstream>
#include <sstream>

#include "cclab/errors.hpp"

namespace cclab {

Bits encode_boolean(bool v, std::size_t n) {
  Bits b(n);
  if (n > 0) b.set(n - 1, v);
  return b;
}

void FunctionTable::validate() const {
  if (n == 0 || n > 8) throw UsageError("table n must be in [1, 8]");
  if (cells.size() != side() * side()) throw UsageError("table must have 2^n x 2^n cells");
  std::size_t width = boolean ? 1 : n;
  for (const auto& c : cells)
    if (c.size() != width) throw UsageError("table cell has wrong width");
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

FunctionTable parse_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty() || lines[0].rfind("n=", 0) != 0) throw UsageError("table must start with a line n=<int>");
  FunctionTable t;
  try {
    t.n = std::stoul(lines[0].substr(2));
  } catch (const std::exception&) {
    throw UsageError("bad n in table header '" + lines[0] + "'");
  }
  if (t.n == 0 || t.n > 8) throw UsageError("table n must be in [1, 8]");
  if (lines.size() != t.side() + 1)
    throw UsageError("table needs " + std::to_string(t.side()) + " rows, found " + std::to_string(lines.size() - 1));
  t.boolean = lines[1].find(';') == std::string::npos;
  for (std::size_t r = 0; r < t.side(); ++r) {
    const std::string& row = lines[r + 1];
    if (t.boolean) {
      if (row.size() != t.side()) throw UsageError("row " + std::to_string(r) + " must have 2^n symbols");
      for (char c : row) t.cells.push_back(Bits::from_string(std::string(1, c)));
    } else {
      std::stringstream rs(row);
      std::string cell;
      std::size_t count = 0;
      while (std::getline(rs, cell, ';')) {
        Bits b = Bits::from_string(trim(cell));
        if (b.size() != t.n) throw UsageError("row " + std::to_string(r) + " has a cell that is not n bits");
        t.cells.push_back(b);
        ++count;
      }
      if (count != t.side()) throw UsageError("row " + std::to_string(r) + " must have 2^n cells");
    }
  }
  t.validate();
  return t;
}

FunctionTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open table file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str());
}

std::string format_table(const FunctionTable& t) {
  std::string out = "n=" + std::to_string(t.n) + "\n";
  for (std::size_t x = 0; x < t.side(); ++x) {
    for (std::size_t y = 0; y < t.side(); ++y) {
      if (t.boolean) {
        out += t.bit(x, y) ? '1' : '0';
      } else {
        if (y) out += ';';
        out += t.at(x, y).str();
      }
    }
    out += '\n';
  }
  return out;
}

FunctionSpec FunctionSpec::identity(std::size_t n) {
  return FunctionSpec("identity", n, false, [](const Bits&, const Bits& y) { return y; });
}

FunctionSpec FunctionSpec::inner_product(std::size_t n) {
  return FunctionSpec("ip", n, true, [n](const Bits& x, const Bits& y) {
    bool v = false;
    for (std::size_t i = 0; i < n; ++i) v ^= (x[i] && y[i]);
    return encode_boolean(v, n);
  });
}

FunctionSpec FunctionSpec::equality(std::size_t n) {
  return FunctionSpec("eq", n, true, [n](const Bits& x, const Bits& y) { return encode_boolean(x == y, n); });
}

FunctionSpec FunctionSpec::constant_zero(std::size_t n) {
  return FunctionSpec("zero", n, true, [n](const Bits&, const Bits&) { return Bits(n); });
}

FunctionSpec FunctionSpec::from_table(const FunctionTable& t) {
  t.validate();
  auto shared = std::make_shared<FunctionTable>(t);
  return FunctionSpec("table", t.n, t.boolean, [shared](const Bits& x, const Bits& y) {
    const Bits& c = shared->at(x.to_index(), y.to_index());
    return shared->boolean ? encode_boolean(c[0], shared->n) : c;
  });
}

FunctionSpec FunctionSpec::parse(const std::string& name, std::size_t n) {
  if (name == "identity") return identity(n);
  if (name == "ip") return inner_product(n);
  if (name == "eq") return equality(n);
  if (name.rfind("table:", 0) == 0) {
    FunctionTable t = load_table(name.substr(6));
    if (t.n != n) throw UsageError("table file has n=" + std::to_string(t.n) + ", expected " + std::to_string(n));
    return from_table(t);
  }
  throw UsageError("unknown function '" + name + "' (expected identity | ip | eq | table:<path>)");
}

Bits FunctionSpec::at(std::uint64_t x, std::uint64_t y) const {
  return eval_(Bits::from_index(x, n_), Bits::from_index(y, n_));
}

FunctionTable FunctionSpec::table() const {
  if (n_ == 0 || n_ > 8) throw UsageError("function table needs n in [1, 8]");
  FunctionTable t;
  t.n = n_;
  t.boolean = boolean_;
  for (std::uint64_t x = 0; x < t.side(); ++x)
    for (std::uint64_t y = 0; y < t.side(); ++y) {
      Bits v = at(x, y);
      t.cells.push_back(boolean_ ? Bits(1, v[n_ - 1]) : v);
    }
  return t;
}

}  // namespace cclab
