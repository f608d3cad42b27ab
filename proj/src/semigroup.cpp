#include "sgideals/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace sgideals {

namespace {

std::uint64_t width_mask(int width) {
  return width >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << width) - 1;
}

}  // namespace

ElemSet::ElemSet(int width, std::uint64_t bits) : bits_(bits), width_(width) {
  if (width < 0 || width > kMaxOrder) {
    throw std::invalid_argument("ElemSet width out of range");
  }
  if ((bits & ~width_mask(width)) != 0) {
    throw std::invalid_argument("ElemSet has bits set beyond its width");
  }
}

ElemSet ElemSet::full(int width) {
  return ElemSet(width, width_mask(width));
}

ElemSet ElemSet::of(int width, std::initializer_list<Elem> elems) {
  ElemSet result = ElemSet::empty(width);
  for (Elem e : elems) {
    result.insert(e);
  }
  return result;
}

int ElemSet::size() const noexcept { return std::popcount(bits_); }

void ElemSet::insert(Elem e) {
  if (e >= width_) {
    throw std::invalid_argument("element index out of range for ElemSet");
  }
  bits_ |= std::uint64_t(1) << e;
}

void ElemSet::erase(Elem e) {
  if (e >= width_) {
    throw std::invalid_argument("element index out of range for ElemSet");
  }
  bits_ &= ~(std::uint64_t(1) << e);
}

bool ElemSet::subset_of(ElemSet const& other) const {
  if (width_ != other.width_) {
    throw std::invalid_argument("ElemSet width mismatch");
  }
  return (bits_ & ~other.bits_) == 0;
}

std::vector<Elem> ElemSet::elements() const {
  std::vector<Elem> result;
  for (int e = 0; e < width_; ++e) {
    if ((bits_ >> e) & 1u) {
      result.push_back(static_cast<Elem>(e));
    }
  }
  return result;
}

ElemSet operator&(ElemSet const& a, ElemSet const& b) {
  if (a.width_ != b.width_) {
    throw std::invalid_argument("ElemSet width mismatch");
  }
  return ElemSet(a.width_, a.bits_ & b.bits_);
}

ElemSet operator|(ElemSet const& a, ElemSet const& b) {
  if (a.width_ != b.width_) {
    throw std::invalid_argument("ElemSet width mismatch");
  }
  return ElemSet(a.width_, a.bits_ | b.bits_);
}

std::vector<AssociativityViolation> check_associativity(
    std::vector<Elem> const& table, int order) {
  if (order < 1 || order > kMaxOrder) {
    throw std::invalid_argument("table order out of range");
  }
  if (table.size() != static_cast<std::size_t>(order) * order) {
    throw std::invalid_argument("table size does not match its order");
  }
  for (Elem v : table) {
    if (v >= order) {
      throw std::invalid_argument("table entry out of range");
    }
  }
  auto at = [&](Elem i, Elem j) {
    return table[static_cast<std::size_t>(i) * order + j];
  };
  std::vector<AssociativityViolation> violations;
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      for (int k = 0; k < order; ++k) {
        Elem const lhs = at(at(i, j), k);
        Elem const rhs = at(i, at(j, k));
        if (lhs != rhs) {
          violations.push_back({static_cast<Elem>(i), static_cast<Elem>(j),
                                static_cast<Elem>(k), lhs, rhs});
        }
      }
    }
  }
  return violations;
}

std::optional<Elem> detect_zero(std::vector<Elem> const& table, int order) {
  // z is absorbing iff row z and column z are constant z. At most one such
  // element exists: z = z * z' = z'.
  for (int z = 0; z < order; ++z) {
    bool absorbing = true;
    for (int x = 0; x < order && absorbing; ++x) {
      absorbing = table[static_cast<std::size_t>(z) * order + x] == z &&
                  table[static_cast<std::size_t>(x) * order + z] == z;
    }
    if (absorbing) {
      return static_cast<Elem>(z);
    }
  }
  return std::nullopt;
}

std::optional<Elem> detect_zero(Semigroup const& s) {
  return detect_zero(s.table(), s.order());
}

Semigroup Semigroup::from_table(std::vector<std::string> names,
                                std::vector<Elem> table,
                                std::optional<Elem> declared_zero) {
  int const order = static_cast<int>(names.size());
  if (order < 1 || order > kMaxOrder) {
    throw std::invalid_argument("semigroup order must be between 1 and 64");
  }
  for (int i = 0; i < order; ++i) {
    if (names[i].empty()) {
      throw std::invalid_argument("element tokens must be nonempty");
    }
    for (int j = i + 1; j < order; ++j) {
      if (names[i] == names[j]) {
        throw std::invalid_argument("duplicate element token: " + names[i]);
      }
    }
  }
  auto const violations = check_associativity(table, order);
  if (!violations.empty()) {
    auto const& v = violations.front();
    std::ostringstream msg;
    msg << "table is not associative: (" << names[v.i] << "*" << names[v.j]
        << ")*" << names[v.k] << " = " << names[v.lhs] << " but " << names[v.i]
        << "*(" << names[v.j] << "*" << names[v.k] << ") = " << names[v.rhs];
    throw NotAssociativeError(v, msg.str());
  }
  auto const found = detect_zero(table, order);
  if (declared_zero.has_value()) {
    if (*declared_zero >= order) {
      throw std::invalid_argument("declared zero is not an element");
    }
    if (found != declared_zero) {
      throw std::invalid_argument("declared zero " + names[*declared_zero] +
                                  " is not absorbing");
    }
  }
  Semigroup s;
  s.names_ = std::move(names);
  s.table_ = std::move(table);
  s.zero_ = found;
  s.order_ = order;
  return s;
}

ElemSet Semigroup::singleton(Elem e) const {
  if (e >= order_) {
    throw std::invalid_argument("element index out of range");
  }
  return ElemSet(order_, std::uint64_t(1) << e);
}

Elem Semigroup::element_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return static_cast<Elem>(i);
    }
  }
  throw std::invalid_argument("unknown element token: " + std::string(name));
}

namespace {

struct Token {
  std::string text;
  int line;
  int column;  // 1-based
};

// Lines come back stripped of comments; blank lines are dropped.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      eol = text.size();
    }
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      if (line[i] == '#') {
        break;  // comment until end of line
      }
      std::size_t start = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
      }
      tokens.push_back({std::string(line.substr(start, i - start)), line_no,
                        static_cast<int>(start) + 1});
    }
    if (!tokens.empty()) {
      lines.push_back(std::move(tokens));
    }
    if (eol == text.size()) {
      break;
    }
    pos = eol + 1;
  }
  return lines;
}

}  // namespace

Semigroup parse_semigroup(std::string_view text) {
  auto const lines = tokenize_lines(text);
  std::size_t row = 0;
  if (row >= lines.size() || lines[row][0].text != "elements:") {
    int line = row < lines.size() ? lines[row][0].line : 1;
    throw ParseError("expected 'elements:' section", line, 1);
  }
  if (lines[row].size() < 2) {
    throw ParseError("'elements:' lists no tokens", lines[row][0].line, 1);
  }
  std::vector<std::string> names;
  std::unordered_map<std::string, Elem> index;
  for (std::size_t i = 1; i < lines[row].size(); ++i) {
    Token const& tok = lines[row][i];
    if (index.count(tok.text)) {
      throw ParseError("duplicate element token '" + tok.text + "'", tok.line,
                       tok.column);
    }
    index[tok.text] = static_cast<Elem>(names.size());
    names.push_back(tok.text);
  }
  int const order = static_cast<int>(names.size());
  if (order > kMaxOrder) {
    throw ParseError("more than 64 elements", lines[row][0].line, 1);
  }
  ++row;

  std::optional<Elem> declared_zero;
  int zero_line = 0;
  if (row < lines.size() && lines[row][0].text == "zero:") {
    if (lines[row].size() != 2) {
      throw ParseError("'zero:' takes exactly one token", lines[row][0].line,
                       1);
    }
    Token const& tok = lines[row][1];
    auto it = index.find(tok.text);
    if (it == index.end()) {
      throw ParseError("unknown element token '" + tok.text + "'", tok.line,
                       tok.column);
    }
    declared_zero = it->second;
    zero_line = tok.line;
    ++row;
  }

  if (row >= lines.size() || lines[row][0].text != "table:") {
    int line = row < lines.size() ? lines[row][0].line : lines.back()[0].line;
    throw ParseError("expected 'table:' section", line, 1);
  }
  if (lines[row].size() != 1) {
    throw ParseError("unexpected tokens after 'table:'", lines[row][1].line,
                     lines[row][1].column);
  }
  int const table_line = lines[row][0].line;
  ++row;

  std::vector<Elem> table;
  table.reserve(static_cast<std::size_t>(order) * order);
  for (int r = 0; r < order; ++r, ++row) {
    if (row >= lines.size()) {
      throw ParseError("table has fewer rows than elements", table_line, 1);
    }
    auto const& toks = lines[row];
    if (static_cast<int>(toks.size()) != order) {
      throw ParseError("table row has " + std::to_string(toks.size()) +
                           " entries, expected " + std::to_string(order),
                       toks[0].line, toks[0].column);
    }
    for (Token const& tok : toks) {
      auto it = index.find(tok.text);
      if (it == index.end()) {
        throw ParseError("unknown element token '" + tok.text + "'", tok.line,
                         tok.column);
      }
      table.push_back(it->second);
    }
  }
  if (row < lines.size()) {
    throw ParseError("unexpected content after table", lines[row][0].line,
                     lines[row][0].column);
  }

  try {
    return Semigroup::from_table(std::move(names), std::move(table),
                                 declared_zero);
  } catch (std::invalid_argument const& e) {
    throw ParseError(e.what(), zero_line != 0 ? zero_line : table_line, 1);
  }
}

std::string serialize_semigroup(Semigroup const& s) {
  std::ostringstream out;
  out << "elements:";
  for (auto const& name : s.names()) {
    out << ' ' << name;
  }
  out << '\n';
  if (s.zero().has_value()) {
    out << "zero: " << s.name_of(*s.zero()) << '\n';
  }
  out << "table:\n";
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      if (j > 0) {
        out << ' ';
      }
      out << s.name_of(s.product(static_cast<Elem>(i), static_cast<Elem>(j)));
    }
    out << '\n';
  }
  return out.str();
}

std::vector<Semigroup> parse_catalog(std::string_view text) {
  std::vector<Semigroup> result;
  std::string chunk;
  std::size_t pos = 0;
  auto flush = [&]() {
    bool blank = chunk.find_first_not_of(" \t\r\n") == std::string::npos;
    if (!blank) {
      result.push_back(parse_semigroup(chunk));
    }
    chunk.clear();
  };
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      eol = text.size();
    }
    std::string_view line = text.substr(pos, eol - pos);
    if (line == "---") {
      flush();
    } else {
      chunk.append(line);
      chunk.push_back('\n');
    }
    if (eol == text.size()) {
      break;
    }
    pos = eol + 1;
  }
  flush();
  return result;
}

ElemSet subset_product(Semigroup const& s, ElemSet const& a,
                       ElemSet const& b) {
  if (a.width() != s.order() || b.width() != s.order()) {
    throw std::invalid_argument("operand width does not match the semigroup");
  }
  ElemSet result = s.empty_set();
  for (Elem x : a.elements()) {
    for (Elem y : b.elements()) {
      result.insert(s.product(x, y));
    }
  }
  return result;
}

ElemSet sandwich(Semigroup const& s, ElemSet const& a) {
  if (a.width() != s.order()) {
    throw std::invalid_argument("operand width does not match the semigroup");
  }
  if (a.is_empty()) {
    throw std::invalid_argument("sandwich of the empty set is undefined");
  }
  ElemSet const full = s.full_set();
  return subset_product(s, subset_product(s, full, a), full);
}

bool is_subsemigroup(Semigroup const& s, ElemSet const& a) {
  if (a.width() != s.order()) {
    throw std::invalid_argument("operand width does not match the semigroup");
  }
  if (a.is_empty()) {
    throw std::invalid_argument("subsemigroups are nonempty by convention");
  }
  return subset_product(s, a, a).subset_of(a);
}

}  // namespace sgideals
