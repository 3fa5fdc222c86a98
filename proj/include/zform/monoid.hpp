#ifndef ZFORM_MONOID_HPP
#define ZFORM_MONOID_HPP

#include "combinatorics.hpp"

#include <array>
#include <cctype>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zform {

/// Element of the multiplicative basis B of A: an exponent vector in at most
/// two variables. Ordering is degree-lexicographic, which is the order on B
/// used for canonical words.
struct Mono {
  std::array<int, 2> exp{0, 0};

  int degree() const { return exp[0] + exp[1]; }

  friend bool operator==(const Mono&, const Mono&) = default;
  friend std::strong_ordering operator<=>(const Mono& a, const Mono& b)
  {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.exp <=> b.exp;
  }
};

enum class MonoidKind { Poly, Laurent, Poly2, Trunc };

/// A commutative monoid basis for A, optionally with an absorbing zero
/// (truncated polynomial rings C[t]/(t^n)).
class MonoidBasis {
 public:
  static MonoidBasis poly() { return MonoidBasis(MonoidKind::Poly, 0); }
  static MonoidBasis laurent() { return MonoidBasis(MonoidKind::Laurent, 0); }
  static MonoidBasis poly2() { return MonoidBasis(MonoidKind::Poly2, 0); }
  static MonoidBasis truncated(int n)
  {
    if (n < 1) throw std::invalid_argument("trunc:n needs n >= 1");
    return MonoidBasis(MonoidKind::Trunc, n);
  }

  /// `poly`, `laurent`, `poly2`, `trunc:n`
  static MonoidBasis from_name(const std::string& name)
  {
    if (name == "poly") return poly();
    if (name == "laurent") return laurent();
    if (name == "poly2") return poly2();
    if (name.rfind("trunc:", 0) == 0) {
      const std::string arg = name.substr(6);
      std::size_t used = 0;
      int n = 0;
      try {
        n = std::stoi(arg, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != arg.size()) throw std::invalid_argument("bad truncation in monoid '" + name + "'");
      return truncated(n);
    }
    throw std::invalid_argument("unknown monoid '" + name + "'");
  }

  MonoidKind kind() const { return kind_; }
  int truncation() const { return trunc_; }
  int num_vars() const { return kind_ == MonoidKind::Poly2 ? 2 : 1; }
  bool has_zero() const { return kind_ == MonoidKind::Trunc; }
  bool is_finite() const { return kind_ == MonoidKind::Trunc; }

  std::string name() const
  {
    switch (kind_) {
      case MonoidKind::Poly: return "poly";
      case MonoidKind::Laurent: return "laurent";
      case MonoidKind::Poly2: return "poly2";
      case MonoidKind::Trunc: return "trunc:" + std::to_string(trunc_);
    }
    return {};
  }

  Mono identity() const { return Mono{}; }

  /// The single generator t (poly, laurent, trunc) or the generator with index v.
  Mono generator(int v = 0) const
  {
    Mono m;
    m.exp[static_cast<std::size_t>(v)] = 1;
    return m;
  }

  Mono power(int k, int v = 0) const
  {
    Mono m;
    m.exp[static_cast<std::size_t>(v)] = k;
    return m;
  }

  bool contains(const Mono& m) const
  {
    switch (kind_) {
      case MonoidKind::Poly: return m.exp[0] >= 0 && m.exp[1] == 0;
      case MonoidKind::Laurent: return m.exp[1] == 0;
      case MonoidKind::Poly2: return m.exp[0] >= 0 && m.exp[1] >= 0;
      case MonoidKind::Trunc: return m.exp[0] >= 0 && m.exp[0] < trunc_ && m.exp[1] == 0;
    }
    return false;
  }

  /// Product in B, or nullopt for the absorbing zero.
  std::optional<Mono> mul(const Mono& a, const Mono& b) const
  {
    Mono r;
    r.exp[0] = a.exp[0] + b.exp[0];
    r.exp[1] = a.exp[1] + b.exp[1];
    if (kind_ == MonoidKind::Trunc && r.exp[0] >= trunc_) return std::nullopt;
    return r;
  }

  std::optional<Mono> pow(const Mono& a, int k) const
  {
    std::optional<Mono> r = identity();
    for (int i = 0; i < k && r; ++i) r = mul(*r, a);
    return r;
  }

  /// Finite bases only: 1, t, ..., t^(n-1).
  std::vector<Mono> elements() const
  {
    if (!is_finite()) throw std::logic_error("monoid '" + name() + "' has an infinite basis");
    std::vector<Mono> out;
    for (int k = 0; k < trunc_; ++k) out.push_back(power(k));
    return out;
  }

  /// Basis elements with total degree in [0, d]; used for sweeps over infinite A.
  std::vector<Mono> elements_up_to(int d) const
  {
    std::vector<Mono> out;
    if (kind_ == MonoidKind::Poly2) {
      for (int deg = 0; deg <= d; ++deg)
        for (int i = 0; i <= deg; ++i) out.push_back(Mono{{i, deg - i}});
    } else {
      for (int k = 0; k <= d; ++k)
        if (contains(power(k))) out.push_back(power(k));
    }
    return out;
  }

  std::string var_name(int v) const
  {
    if (kind_ == MonoidKind::Poly2) return v == 0 ? "u" : "v";
    return "t";
  }

  std::string format(const Mono& m) const
  {
    std::string out;
    for (int v = 0; v < num_vars(); ++v) {
      const int e = m.exp[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      if (!out.empty()) out += '*';
      out += var_name(v);
      if (e != 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
  }

  /// Parses `1`, `t`, `t^3`, `t^-2`, `u^2*v`; throws std::invalid_argument.
  Mono parse(const std::string& text) const
  {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "1") return identity();
    if (s.empty()) throw std::invalid_argument("empty monoid element");
    Mono m;
    std::size_t pos = 0;
    while (pos < s.size()) {
      int var = -1;
      for (int v = 0; v < num_vars(); ++v) {
        const std::string nm = var_name(v);
        if (s.compare(pos, nm.size(), nm) == 0) {
          var = v;
          pos += nm.size();
          break;
        }
      }
      if (var < 0) throw std::invalid_argument("unknown variable in monoid element '" + text + "'");
      int e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && s[start] == '-'))
          throw std::invalid_argument("missing exponent in '" + text + "'");
        e = std::stoi(s.substr(start, pos - start));
      }
      m.exp[static_cast<std::size_t>(var)] += e;
      if (pos < s.size()) {
        if (s[pos] != '*') throw std::invalid_argument("expected '*' in '" + text + "'");
        ++pos;
      }
    }
    if (!contains(m)) throw std::invalid_argument("'" + text + "' is not a basis element of " + name());
    return m;
  }

  friend bool operator==(const MonoidBasis&, const MonoidBasis&) = default;

 private:
  MonoidBasis(MonoidKind k, int n) : kind_(k), trunc_(n) {}

  MonoidKind kind_;
  int trunc_;
};

/// pi(psi) = prod_a a^{psi(a)}; nullopt when the product hits the absorbing zero.
inline std::optional<Mono> pi_product(const Multiset<Mono>& psi, const MonoidBasis& monoid)
{
  std::optional<Mono> r = monoid.identity();
  for (const auto& [a, n] : psi) {
    for (int k = 0; k < n && r; ++k) r = monoid.mul(*r, a);
    if (!r) return std::nullopt;
  }
  return r;
}

/// Element of A: finitely supported rational combination of basis elements.
class AElem {
 public:
  AElem() = default;
  static AElem basis(const Mono& m, Rational c = 1)
  {
    AElem r;
    r.add(m, c);
    return r;
  }

  void add(const Mono& m, const Rational& c)
  {
    if (c == 0) return;
    Rational& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, Rational>& terms() const { return terms_; }

  friend AElem operator+(AElem a, const AElem& b)
  {
    for (const auto& [m, c] : b.terms_) a.add(m, c);
    return a;
  }
  friend AElem operator-(AElem a, const AElem& b)
  {
    for (const auto& [m, c] : b.terms_) a.add(m, -c);
    return a;
  }
  friend AElem operator*(const Rational& k, const AElem& a)
  {
    AElem r;
    for (const auto& [m, c] : a.terms_) r.add(m, k * c);
    return r;
  }
  friend bool operator==(const AElem&, const AElem&) = default;

 private:
  std::map<Mono, Rational> terms_;
};

inline AElem aelem_mul(const AElem& x, const AElem& y, const MonoidBasis& monoid)
{
  AElem r;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      if (auto ab = monoid.mul(a, b)) r.add(*ab, ca * cb);
  return r;
}

inline std::string format(const AElem& x, const MonoidBasis& monoid)
{
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    if (mag != 1) os << mag.get_str() << "*";
    os << monoid.format(m);
  }
  return os.str();
}

}  // namespace zform

#endif  // ZFORM_MONOID_HPP
