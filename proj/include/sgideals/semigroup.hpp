#ifndef SGIDEALS_SEMIGROUP_HPP_
#define SGIDEALS_SEMIGROUP_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sgideals {

/// Element index inside one semigroup's carrier. Carriers are capped at 64
/// elements so that subsets fit in a single machine word.
using Elem = std::uint8_t;

inline constexpr int kMaxOrder = 64;

/// One failed instance of (i*j)*k == i*(j*k).
struct AssociativityViolation {
  Elem i, j, k;
  Elem lhs;  // (i*j)*k
  Elem rhs;  // i*(j*k)
  friend bool operator==(AssociativityViolation const&,
                         AssociativityViolation const&) = default;
};

/// Raised on malformed .sg input; carries a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& msg, int line, int column)
      : std::runtime_error(msg), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Raised when a multiplication table fails the associativity check.
/// Carries the first violating triple in lexicographic order.
class NotAssociativeError : public std::runtime_error {
 public:
  NotAssociativeError(AssociativityViolation v, std::string const& msg)
      : std::runtime_error(msg), violation_(v) {}
  AssociativityViolation const& violation() const noexcept {
    return violation_;
  }

 private:
  AssociativityViolation violation_;
};

/// A subset of one semigroup's carrier, stored as a fixed-width bit-vector.
/// The width is the carrier size; only bits below the width may be set.
/// The empty set is representable. Sets of different widths never compare
/// equal and may not be combined.
class ElemSet {
 public:
  ElemSet() = default;

  ElemSet(int width, std::uint64_t bits);

  static ElemSet empty(int width) { return ElemSet(width, 0); }
  static ElemSet full(int width);
  static ElemSet of(int width, std::initializer_list<Elem> elems);

  int width() const noexcept { return width_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool is_empty() const noexcept { return bits_ == 0; }
  int size() const noexcept;
  bool contains(Elem e) const noexcept {
    return e < width_ && (bits_ >> e) & 1u;
  }

  void insert(Elem e);
  void erase(Elem e);

  bool subset_of(ElemSet const& other) const;

  std::vector<Elem> elements() const;

  friend ElemSet operator&(ElemSet const& a, ElemSet const& b);
  friend ElemSet operator|(ElemSet const& a, ElemSet const& b);
  friend bool operator==(ElemSet const&, ElemSet const&) = default;

 private:
  std::uint64_t bits_ = 0;
  int width_ = 0;
};

/// A finite semigroup given by its Cayley table. The table is row-major and
/// the row index is the left operand: table[i*n + j] = names[i] * names[j].
///
/// Instances are validated on construction (entries in range, associativity,
/// a declared zero really absorbing) and immutable afterwards, so they can be
/// shared freely across threads.
class Semigroup {
 public:
  /// Builds and validates a semigroup. The absorbing element, if any, is
  /// detected automatically; a declared zero must agree with detection.
  static Semigroup from_table(std::vector<std::string> names,
                              std::vector<Elem> table,
                              std::optional<Elem> declared_zero = {});

  int order() const noexcept { return order_; }
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::string const& name_of(Elem e) const { return names_.at(e); }

  /// Index of the element with the given token; throws if unknown.
  Elem element_of(std::string_view name) const;

  std::vector<Elem> const& table() const noexcept { return table_; }

  Elem product(Elem i, Elem j) const {
    return table_[static_cast<std::size_t>(i) * order_ + j];
  }

  /// The unique two-sided absorbing element, if one exists.
  std::optional<Elem> zero() const noexcept { return zero_; }

  ElemSet empty_set() const { return ElemSet::empty(order_); }
  ElemSet full_set() const { return ElemSet::full(order_); }
  ElemSet singleton(Elem e) const;

  friend bool operator==(Semigroup const&, Semigroup const&) = default;

 private:
  Semigroup() = default;

  std::vector<std::string> names_;
  std::vector<Elem> table_;
  std::optional<Elem> zero_;
  int order_ = 0;
};

/// All violations of associativity in lexicographic (i, j, k) order.
/// Empty result means the table is a valid Cayley table.
std::vector<AssociativityViolation> check_associativity(
    std::vector<Elem> const& table, int order);

/// The unique two-sided absorbing element of a raw table, if any.
std::optional<Elem> detect_zero(std::vector<Elem> const& table, int order);

/// Re-derives the absorbing element from the table.
std::optional<Elem> detect_zero(Semigroup const& s);

/// Parses one document in the .sg format:
///
///   # comment lines and blank lines are ignored
///   elements: t1 t2 ... tn
///   zero: tk            (optional)
///   table:
///   <n rows of n whitespace-separated element tokens>
///
/// Throws ParseError on malformed input and NotAssociativeError when the
/// table is not associative.
Semigroup parse_semigroup(std::string_view text);

/// Writes the .sg format with single-space separators and no comments.
/// parse -> serialize -> parse round-trips bit-exactly.
std::string serialize_semigroup(Semigroup const& s);

/// Parses a catalog: .sg documents separated by lines containing only "---".
std::vector<Semigroup> parse_catalog(std::string_view text);

/// The complex product {a*b : a in A, b in B}; empty if either operand is.
ElemSet subset_product(Semigroup const& s, ElemSet const& a, ElemSet const& b);

/// S*A*S for nonempty A.
ElemSet sandwich(Semigroup const& s, ElemSet const& a);

/// Whether A*A is contained in A, for nonempty A.
bool is_subsemigroup(Semigroup const& s, ElemSet const& a);

}  // namespace sgideals

#endif  // SGIDEALS_SEMIGROUP_HPP_
