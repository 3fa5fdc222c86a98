#ifndef ZFORM_EXPRESSION_HPP
#define ZFORM_EXPRESSION_HPP

#include "garland.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zform {

/// Expression syntax error with the 0-based character position and the
/// tokens that would have been accepted there.
class ExpressionError : public std::runtime_error {
 public:
  ExpressionError(std::size_t pos, std::vector<std::string> expected, const std::string& detail = {})
      : std::runtime_error(build(pos, expected, detail)), pos_(pos), expected_(std::move(expected))
  {
  }
  std::size_t position() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string build(std::size_t pos, const std::vector<std::string>& expected, const std::string& detail)
  {
    std::string s = "parse error at position " + std::to_string(pos);
    if (!detail.empty()) s += ": " + detail;
    if (!expected.empty()) {
      s += "; expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
    }
    return s;
  }
  std::size_t pos_;
  std::vector<std::string> expected_;
};

/// Recursive-descent parser for the expression grammar, evaluating directly
/// into canonical form:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor factor*                      (juxtaposition = product)
///   factor := atom ['^(' int ')' | '^' int]
///   atom   := rational | '(' expr ')'
///           | 'x[' label ']{' mono '}' | 'h[' i ']{' mono '}'
///           | 'p[' (i | label) ']{' [mono ':' int (',' mono ':' int)*] '}'
class ExpressionParser {
 public:
  explicit ExpressionParser(Garland& garland) : gl_(garland) {}

  UElem parse(const std::string& text)
  {
    s_ = text;
    pos_ = 0;
    skip();
    if (pos_ == s_.size()) fail({"expression"});
    UElem x = expr();
    skip();
    if (pos_ != s_.size()) fail({"'+'", "'-'", "factor", "end of input"});
    return x;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail = {}) const
  {
    throw ExpressionError(pos_, std::move(expected), detail);
  }
  void skip()
  {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*'))
      ++pos_;
  }
  bool peek(char c)
  {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c)
  {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail({std::string("'") + c + "'"});
    ++pos_;
  }
  bool at_factor_start()
  {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'h' || c == 'p';
  }
  int integer()
  {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail({"integer"});
    if (pos_ - start > 6) {
      pos_ = start;
      fail({"integer"}, "exponent too large");
    }
    return std::stoi(s_.substr(start, pos_ - start));
  }
  /// Raw text up to (not including) one of the stop characters.
  std::string until(const std::string& stops, const std::vector<std::string>& expected)
  {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && stops.find(s_[pos_]) == std::string::npos) ++pos_;
    if (pos_ >= s_.size()) fail(expected);
    return s_.substr(start, pos_ - start);
  }
  Mono mono(const std::string& text, std::size_t at)
  {
    try {
      return gl_.monoid().parse(text);
    } catch (const std::invalid_argument& e) {
      pos_ = at;
      fail({"monoid element of " + gl_.monoid().name()}, e.what());
    }
  }

  UElem expr()
  {
    UElem out;
    bool neg = false;
    if (peek('+') || peek('-')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    out.add_scaled(term(), neg ? -1 : 1);
    while (peek('+') || peek('-')) {
      neg = s_[pos_] == '-';
      ++pos_;
      out.add_scaled(term(), neg ? -1 : 1);
    }
    return out;
  }

  UElem term()
  {
    if (!at_factor_start()) fail({"number", "'('", "x[", "h[", "p["});
    UElem x = factor();
    while (at_factor_start()) x = gl_.engine().mul(x, factor());
    return x;
  }

  UElem factor()
  {
    UElem base = atom();
    if (peek('^')) {
      ++pos_;
      bool divided = false;
      if (peek('(')) {
        ++pos_;
        divided = true;
      }
      const int n = integer();
      if (divided) expect(')');
      UElem r = UElem::one();
      for (int k = 0; k < n; ++k) r = gl_.engine().mul(r, base);
      if (divided) r *= Rational(1) / Rational(factorial(n));
      return r;
    }
    return base;
  }

  UElem atom()
  {
    skip();
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return UElem::one() * rational();
    if (c == '(') {
      ++pos_;
      UElem x = expr();
      expect(')');
      return x;
    }
    const std::size_t start = pos_;
    ++pos_;
    if (pos_ >= s_.size() || s_[pos_] != '[') fail({"'['"});
    ++pos_;
    const std::size_t label_at = pos_;
    std::string label = until("]", {"']'"});
    ++pos_;
    const auto& g = gl_.spec();
    if (c == 'x' || c == 'h') {
      expect('{');
      const std::size_t mono_at = pos_;
      const Mono m = mono(until("}", {"'}'"}), mono_at);
      ++pos_;
      int gen = -1;
      if (c == 'x') {
        auto r = g.find_root(label);
        if (!r) {
          pos_ = label_at;
          fail({"root label of " + g.name}, "unknown root label '" + label + "'");
        }
        gen = g.symbol_of_root(*r);
      } else {
        gen = cartan_index(label, label_at);
      }
      return gl_.engine().from_letter(Letter{gen, m});
    }
    if (c == 'p') {
      expect('{');
      Multiset<Mono> chi;
      skip();
      if (!peek('}')) {
        for (;;) {
          skip();
          const std::size_t mono_at = pos_;
          const Mono m = mono(until(":}", {"':'"}), mono_at);
          if (s_[pos_] != ':') fail({"':'"});
          ++pos_;
          chi.add(m, integer());
          if (peek(',')) {
            ++pos_;
            continue;
          }
          break;
        }
      }
      expect('}');
      if (!label.empty() && std::isdigit(static_cast<unsigned char>(label[0])))
        return gl_.p_cartan(cartan_index(label, label_at), chi);
      auto r = g.find_root(label);
      if (!r) {
        pos_ = label_at;
        fail({"Cartan index", "root label"}, "unknown p index '" + label + "'");
      }
      return gl_.p_root(*r, chi);
    }
    pos_ = start;
    fail({"number", "'('", "x[", "h[", "p["});
  }

  int cartan_index(const std::string& label, std::size_t at)
  {
    std::size_t used = 0;
    int i = -1;
    try {
      i = std::stoi(label, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != label.size() || i < 1 || i > gl_.spec().rank) {
      pos_ = at;
      fail({"Cartan index 1.." + std::to_string(gl_.spec().rank)});
    }
    return i - 1;
  }

  Rational rational()
  {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    Integer num(s_.substr(start, pos_ - start));
    Integer den = 1;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const std::size_t d0 = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (d0 == pos_) fail({"denominator"});
      den = Integer(s_.substr(d0, pos_ - d0));
      if (den == 0) {
        pos_ = d0;
        fail({"nonzero denominator"});
      }
    }
    return frac(num, den);
  }

  Garland& gl_;
  std::string s_;
  std::size_t pos_ = 0;
};

inline UElem parse_expression(Garland& garland, const std::string& text)
{
  return ExpressionParser(garland).parse(text);
}

/// `a:n,b:m,...` (e.g. `t:2,1:1`); empty text or `0` is the empty multiset.
inline Multiset<Mono> parse_multiset(const MonoidBasis& mo, const std::string& text)
{
  Multiset<Mono> out;
  std::string body;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') body += c;
  if (body.empty() || body == "0") return out;
  std::stringstream ss(body);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos) throw std::invalid_argument("multiset entry '" + item + "' lacks ':<count>'");
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(item.substr(colon + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() - colon - 1 || n < 0)
      throw std::invalid_argument("bad multiplicity in multiset entry '" + item + "'");
    out.add(mo.parse(item.substr(0, colon)), n);
  }
  return out;
}

// ---------------------------------------------------------------- printing

inline std::string format_letter(const SuperAlgebraSpec& g, const MonoidBasis& mo, const Letter& l)
{
  if (g.is_cartan(l.gen)) return "h[" + std::to_string(l.gen + 1) + "]{" + mo.format(l.mono) + "}";
  return "x[" + g.root(g.root_of(l.gen)).label + "]{" + mo.format(l.mono) + "}";
}

inline std::string format_word(const SuperAlgebraSpec& g, const MonoidBasis& mo, const Word& w)
{
  if (w.empty()) return "1";
  std::string out;
  for (const auto& r : w) {
    if (!out.empty()) out += ' ';
    out += format_letter(g, mo, r.letter);
    if (r.exp != 1) out += "^" + std::to_string(r.exp);
  }
  return out;
}

/// Lexicographic comparison of words under the engine's generator ranks
/// (letters compared by rank, then A-part, then exponent).
inline bool rank_lex_less(const Engine& e, const Word& a, const Word& b)
{
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = e.compare(a[k].letter, b[k].letter); c != 0) return c < 0;
    if (a[k].exp != b[k].exp) return a[k].exp > b[k].exp;
  }
  return a.size() < b.size();
}

/// Terms of x in print order: degree descending, then rank-lexicographic.
inline std::vector<std::pair<Word, Rational>> ordered_terms(const Engine& e, const UElem& x)
{
  std::vector<std::pair<Word, Rational>> v(x.terms().begin(), x.terms().end());
  std::stable_sort(v.begin(), v.end(), [&](const auto& p, const auto& q) {
    const int dp = word_length(p.first), dq = word_length(q.first);
    if (dp != dq) return dp > dq;
    return rank_lex_less(e, p.first, q.first);
  });
  return v;
}

/// One signed term per line: `[coef ]body` for the first line, then
/// `+ [coef ]body` / `- [coef ]body`. Zero prints as `0`. Joining the lines
/// with spaces re-parses to the same element.
inline std::string format_terms(const std::vector<std::pair<std::string, Rational>>& terms)
{
  if (terms.empty()) return "0\n";
  std::string out;
  bool first = true;
  for (const auto& [body, c] : terms) {
    const Rational mag = abs(c);
    std::string line;
    if (c < 0) line = "- ";
    else if (!first) line = "+ ";
    if (mag != 1 || body == "1") line += mag.get_str() + (body == "1" ? "" : " ");
    if (body != "1") line += body;
    out += line + "\n";
    first = false;
  }
  return out;
}

inline std::string format_uelem(const Engine& e, const UElem& x)
{
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [w, c] : ordered_terms(e, x)) terms.emplace_back(format_word(e.spec(), e.monoid(), w), c);
  return format_terms(terms);
}

/// X_alpha(chi) prints as the product of its divided powers, p_i(phi) as
/// `p[i]{a:n,...}`, odd letters plainly.
inline std::string format_basis_key(const Engine& e, const BasisKey& key)
{
  const auto& g = e.spec();
  const auto& mo = e.monoid();
  if (key.empty()) return "1";
  std::string out;
  for (const auto& f : key) {
    if (!out.empty()) out += ' ';
    if (g.is_cartan(f.gen)) {
      out += "p[" + std::to_string(f.gen + 1) + "]{" + format_multiset(f.mult, mo) + "}";
      continue;
    }
    bool first = true;
    for (const auto& [a, n] : f.mult) {
      if (!first) out += ' ';
      first = false;
      out += format_letter(g, mo, Letter{f.gen, a});
      if (n != 1) out += "^(" + std::to_string(n) + ")";
    }
  }
  return out;
}

/// Basis keys in print order: degree descending, then by leading word.
inline std::vector<std::pair<BasisKey, Rational>> ordered_terms(const Engine& e, const BasisConverter& conv,
                                                               const DividedForm& x)
{
  std::vector<std::pair<BasisKey, Rational>> v(x.terms().begin(), x.terms().end());
  std::stable_sort(v.begin(), v.end(), [&](const auto& p, const auto& q) {
    const int dp = basis_degree(p.first), dq = basis_degree(q.first);
    if (dp != dq) return dp > dq;
    return rank_lex_less(e, conv.leading_word(p.first), conv.leading_word(q.first));
  });
  return v;
}

inline std::string format_divided(const Engine& e, const BasisConverter& conv, const DividedForm& x)
{
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [k, c] : ordered_terms(e, conv, x)) terms.emplace_back(format_basis_key(e, k), c);
  return format_terms(terms) + "INTEGRAL: " + (is_integral(x) ? "yes" : "no") + "\n";
}

}  // namespace zform

#endif  // ZFORM_EXPRESSION_HPP
