#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "redforge/redtree.hpp"

namespace redforge {

using BigInt = boost::multiprecision::mpz_int;

/**
 * A polynomial variable: β_i (i >= 1), the merged β (index 0), t, or x_ij.
 * The packed key orders variables as β_0 < β_1 < ... < t < x_12 < x_13 < ...
 */
class Var {
 public:
  enum class Kind : std::uint8_t { Beta = 0, T = 1, X = 2 };

  static Var beta(int i);
  /// The single β obtained by identifying every β_i.
  static Var beta_merged() { return beta(0); }
  static Var t();
  static Var x(int i, int j);

  Kind kind() const { return static_cast<Kind>(key_ >> 28); }
  int index() const { return static_cast<int>((key_ >> 14) & 0x3fff); }  // β index or x source
  int second() const { return static_cast<int>(key_ & 0x3fff); }          // x target
  std::uint32_t key() const { return key_; }

  auto operator<=>(const Var&) const = default;

 private:
  explicit Var(std::uint32_t key) : key_(key) {}
  std::uint32_t key_ = 0;
};

std::string to_string(Var v);

/// Product of variable powers, stored sorted by variable with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Var v, unsigned exponent = 1);

  const std::vector<std::pair<Var, unsigned>>& factors() const { return factors_; }
  unsigned degree() const;
  unsigned exponent(Var v) const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// Graded order: total degree first, then exponents compared in variable order.
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<std::pair<Var, unsigned>> factors_;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, BigInt>;

  Polynomial() = default;
  static Polynomial constant(BigInt c);
  static Polynomial variable(Var v);
  static Polynomial term(Monomial m, BigInt c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Monomial& m) const;
  /// Variables that occur with a nonzero exponent.
  std::vector<Var> variables() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned e) const;

  /// Replaces every variable for which `rule` returns a value.
  Polynomial substitute(const std::function<std::optional<Polynomial>(Var)>& rule) const;

  bool operator==(const Polynomial& other) const = default;

 private:
  void add_term(const Monomial& m, const BigInt& c);
  Terms terms_;
};

std::string to_string(const Polynomial& p);

/// Parses the to_string syntax: integers, b (merged β), b<i>, t, x<i>_<j>, with
/// + - * ^ and parentheses; juxtaposition such as 4t^3 multiplies. Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

enum class Specialization {
  XToOne,          // every x_ij -> 1
  XToOneCornerT,   // x_ij -> 1 except x_1n -> t
  BetaMerge,       // every β_i -> β
  BetaShiftDown,   // β_i -> β_i - 1
  BetaShiftUp,     // β_i -> β_i + 1
};

/// `n` is the root vertex count; it names the corner edge (1, n).
Polynomial specialize(const Polynomial& p, Specialization rule, int n = 0);

/// Σ over all leaves of x(L) times the β_i of every Middle step on the path to L.
Polynomial reduced_form(const ReductionTree& t);
/// The same sum restricted to the subtree rooted at `subtree`, with paths measured from it.
Polynomial reduced_form(const ReductionTree& t, NodeId subtree);

/// Product of β_i over the Middle steps on the root -> v path (the balance of v).
Polynomial middle_weight(const ReductionTree& t, NodeId v, NodeId from = 0);

/**
 * Expansion of q(β, t) in powers of (1 + β): the coefficient c_I(t) of the
 * β-monomial I in q(β - 1, t). Keys are sorted multisets of β indices
 * (index 0 for the merged β).
 */
struct C7Expansion {
  Polynomial shifted;
  std::map<std::vector<int>, Polynomial> by_multiset;

  /// c_k(t): the sum of c_I over |I| = k.
  Polynomial by_degree(std::size_t k) const;
  std::size_t max_degree() const;
};

C7Expansion expand_in_one_plus_beta(const Polynomial& q);
/// Rebuilds q from its expansion: Σ_I Π_{i∈I} (1 + β_i) c_I(t).
Polynomial reassemble(const C7Expansion& e);

struct C7Violation {
  std::vector<int> multiset;
  unsigned t_degree = 0;
  BigInt coefficient;
};

struct C7Verdict {
  bool holds = true;
  std::vector<C7Violation> violations;
};

/// Lists every negative coefficient of every c_I(t). Throws ScopeError if q has x variables.
C7Verdict check_c7(const Polynomial& q);

}  // namespace redforge
