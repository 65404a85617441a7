#include "redforge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "redforge/errors.hpp"

namespace redforge {

Var Var::beta(int i) {
  if (i < 0 || i >= 0x3fff) throw Error("β index out of range");
  return Var((static_cast<std::uint32_t>(Kind::Beta) << 28) | (static_cast<std::uint32_t>(i) << 14));
}

Var Var::t() { return Var(static_cast<std::uint32_t>(Kind::T) << 28); }

Var Var::x(int i, int j) {
  if (i < 1 || j <= i || j >= 0x3fff) throw Error("bad x variable indices");
  return Var((static_cast<std::uint32_t>(Kind::X) << 28) | (static_cast<std::uint32_t>(i) << 14) |
             static_cast<std::uint32_t>(j));
}

std::string to_string(Var v) {
  switch (v.kind()) {
    case Var::Kind::Beta: return v.index() == 0 ? "b" : "b" + std::to_string(v.index());
    case Var::Kind::T: return "t";
    case Var::Kind::X: return "x" + std::to_string(v.index()) + "_" + std::to_string(v.second());
  }
  return "?";
}

Monomial Monomial::of(Var v, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

unsigned Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const auto& f, Var key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  // walk both factor lists in variable order; absent variables have exponent 0
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) return std::strong_ordering::greater;
    if (a == factors_.end() || b->first < a->first) return std::strong_ordering::less;
    if (auto c = a->second <=> b->second; c != 0) return c;
    ++a;
    ++b;
  }
  return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(BigInt c) { return term(Monomial{}, std::move(c)); }

Polynomial Polynomial::variable(Var v) { return term(Monomial::of(v), 1); }

Polynomial Polynomial::term(Monomial m, BigInt c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

BigInt Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<Var> Polynomial::variables() const {
  std::vector<Var> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::function<std::optional<Polynomial>(Var)>& rule) const {
  std::map<std::pair<Var, unsigned>, Polynomial> power_cache;
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial kept = constant(c);
    Monomial untouched;
    for (const auto& [v, e] : m.factors()) {
      auto replacement = rule(v);
      if (!replacement) {
        untouched = untouched * Monomial::of(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto it = power_cache.find(key);
      if (it == power_cache.end()) it = power_cache.emplace(key, replacement->pow(e)).first;
      kept *= it->second;
    }
    out += kept * term(untouched, 1);
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool show_coeff = mag != 1 || m.is_one();
    if (show_coeff) os << mag;
    bool need_star = show_coeff;
    for (const auto& [v, e] : m.factors()) {
      if (need_star) os << "*";
      os << to_string(v);
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  Polynomial parse() {
    Polynomial p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'b' || c == 't' || c == 'x';
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  int small_int() {
    std::string d = digits();
    if (d.empty() || d.size() > 4) fail("expected an index");
    return std::stoi(d);
  }

  Polynomial sum() {
    Polynomial p;
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    for (;;) {
      Polynomial q = product();
      if (negate) p -= q;
      else p += q;
      if (eat('+')) negate = false;
      else if (eat('-')) negate = true;
      else return p;
    }
  }
  Polynomial product() {
    Polynomial p = power();
    for (;;) {
      if (eat('*')) {
        p *= power();
      } else if (starts_factor()) {
        p *= power();
      } else {
        return p;
      }
    }
  }
  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      std::string d = digits();
      if (d.empty() || d.size() > 4) fail("expected an exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(d)));
    }
    return base;
  }
  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = sum();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(BigInt(digits()));
    ++pos_;
    if (c == 't') return Polynomial::variable(Var::t());
    if (c == 'b') {
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        return Polynomial::variable(Var::beta(small_int()));
      }
      return Polynomial::variable(Var::beta_merged());
    }
    if (c == 'x') {
      int i = small_int();
      if (pos_ >= s_.size() || s_[pos_] != '_') fail("expected '_' in x variable");
      ++pos_;
      int j = small_int();
      return Polynomial::variable(Var::x(i, j));
    }
    --pos_;
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

Polynomial specialize(const Polynomial& p, Specialization rule, int n) {
  switch (rule) {
    case Specialization::XToOne:
      return p.substitute([](Var v) -> std::optional<Polynomial> {
        if (v.kind() == Var::Kind::X) return Polynomial::constant(1);
        return std::nullopt;
      });
    case Specialization::XToOneCornerT:
      if (n < 1) throw Error("corner specialization needs the root vertex count");
      return p.substitute([n](Var v) -> std::optional<Polynomial> {
        if (v.kind() != Var::Kind::X) return std::nullopt;
        if (v.index() == 1 && v.second() == n) return Polynomial::variable(Var::t());
        return Polynomial::constant(1);
      });
    case Specialization::BetaMerge:
      return p.substitute([](Var v) -> std::optional<Polynomial> {
        if (v.kind() == Var::Kind::Beta) return Polynomial::variable(Var::beta_merged());
        return std::nullopt;
      });
    case Specialization::BetaShiftDown:
    case Specialization::BetaShiftUp: {
      const int delta = rule == Specialization::BetaShiftDown ? -1 : 1;
      return p.substitute([delta](Var v) -> std::optional<Polynomial> {
        if (v.kind() == Var::Kind::Beta) return Polynomial::variable(v) + Polynomial::constant(delta);
        return std::nullopt;
      });
    }
  }
  return p;
}

Polynomial middle_weight(const ReductionTree& t, NodeId v, NodeId from) {
  Monomial m;
  for (NodeId cur = v; cur != from; cur = *t.node(cur).parent) {
    if (!t.node(cur).parent) throw Error("node is not below the given ancestor");
    if (t.node(cur).branch == Branch::M) {
      m = m * Monomial::of(Var::beta(t.node(*t.node(cur).parent).step->i()));
    }
  }
  return Polynomial::term(m, 1);
}

Polynomial reduced_form(const ReductionTree& t, NodeId subtree) {
  Polynomial q;
  for (NodeId leaf : leaves_dfs(t, subtree)) {
    Monomial x;
    for (const auto& e : t.graph(leaf).edges()) x = x * Monomial::of(Var::x(e.src, e.dst));
    q += Polynomial::term(x, 1) * middle_weight(t, leaf, subtree);
  }
  return q;
}

Polynomial reduced_form(const ReductionTree& t) { return reduced_form(t, t.root()); }

Polynomial C7Expansion::by_degree(std::size_t k) const {
  Polynomial sum;
  for (const auto& [I, c] : by_multiset) {
    if (I.size() == k) sum += c;
  }
  return sum;
}

std::size_t C7Expansion::max_degree() const {
  std::size_t d = 0;
  for (const auto& [I, c] : by_multiset) d = std::max(d, I.size());
  return d;
}

C7Expansion expand_in_one_plus_beta(const Polynomial& q) {
  C7Expansion e;
  e.shifted = specialize(q, Specialization::BetaShiftDown);
  for (const auto& [m, c] : e.shifted.terms()) {
    std::vector<int> I;
    Monomial rest;
    for (const auto& [v, exp] : m.factors()) {
      if (v.kind() == Var::Kind::Beta) {
        I.insert(I.end(), exp, v.index());
      } else {
        rest = rest * Monomial::of(v, exp);
      }
    }
    e.by_multiset[I] += Polynomial::term(rest, c);
  }
  return e;
}

Polynomial reassemble(const C7Expansion& e) {
  Polynomial q;
  for (const auto& [I, c] : e.by_multiset) {
    Polynomial factor = Polynomial::constant(1);
    for (int i : I) factor *= Polynomial::constant(1) + Polynomial::variable(Var::beta(i));
    q += factor * c;
  }
  return q;
}

C7Verdict check_c7(const Polynomial& q) {
  for (Var v : q.variables()) {
    if (v.kind() == Var::Kind::X) throw ScopeError("c7 check expects a polynomial in β and t only");
  }
  C7Verdict verdict;
  C7Expansion e = expand_in_one_plus_beta(q);
  for (const auto& [I, c] : e.by_multiset) {
    for (const auto& [m, coeff] : c.terms()) {
      if (coeff < 0) {
        verdict.holds = false;
        verdict.violations.push_back(C7Violation{I, m.exponent(Var::t()), coeff});
      }
    }
  }
  return verdict;
}

}  // namespace redforge
