#ifndef ZFORM_SUPERALGEBRA_HPP
#define ZFORM_SUPERALGEBRA_HPP

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zform {

struct RootInfo {
  std::string label;
  bool odd = false;
  bool positive = true;
  int negative = -1;       ///< index of -alpha in SuperAlgebraSpec::roots
  std::vector<int> eval;   ///< alpha(h_1), ..., alpha(h_l)
};

struct BracketTerm {
  int symbol;
  long coef;
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

/// [z_p, z_q] expanded in the basis, sorted by symbol, no zero coefficients.
using BracketValue = std::vector<BracketTerm>;

/// Chevalley basis of a classical Lie superalgebra as integer tables.
///
/// Basis symbols are numbered h_1..h_l first (0..l-1), then the root vectors
/// x_alpha in the order of `roots`.
class SuperAlgebraSpec {
 public:
  std::string name;
  int rank = 0;
  std::vector<RootInfo> roots;
  std::vector<std::vector<int>> coroots;  ///< h_alpha = [x_alpha, x_-alpha] in the h_i

  int num_symbols() const { return rank + static_cast<int>(roots.size()); }
  int num_roots() const { return static_cast<int>(roots.size()); }
  bool is_cartan(int s) const { return s < rank; }
  int root_of(int s) const { return s - rank; }
  int symbol_of_root(int r) const { return r + rank; }
  bool odd(int s) const { return !is_cartan(s) && roots[static_cast<std::size_t>(root_of(s))].odd; }
  const RootInfo& root(int r) const { return roots[static_cast<std::size_t>(r)]; }

  std::string symbol_name(int s) const
  {
    if (is_cartan(s)) return "h[" + std::to_string(s + 1) + "]";
    return "x[" + root(root_of(s)).label + "]";
  }

  void resize_table() { table_.assign(static_cast<std::size_t>(num_symbols() * num_symbols()), {}); }

  const BracketValue& bracket(int p, int q) const { return table_[index(p, q)]; }
  void set_bracket(int p, int q, BracketValue v)
  {
    std::erase_if(v, [](const BracketTerm& t) { return t.coef == 0; });
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.symbol < b.symbol; });
    table_[index(p, q)] = std::move(v);
  }

  std::optional<int> find_root(const std::string& label) const
  {
    for (int r = 0; r < num_roots(); ++r)
      if (roots[static_cast<std::size_t>(r)].label == label) return r;
    return std::nullopt;
  }

  std::optional<int> find_symbol(const std::string& name_) const
  {
    for (int s = 0; s < num_symbols(); ++s)
      if (symbol_name(s) == name_) return s;
    return std::nullopt;
  }

  /// Root whose evaluation vector is `w`.
  std::optional<int> root_with_eval(const std::vector<int>& w) const
  {
    for (int r = 0; r < num_roots(); ++r)
      if (roots[static_cast<std::size_t>(r)].eval == w) return r;
    return std::nullopt;
  }

  /// beta(h_alpha)
  int pairing(int beta, int alpha) const
  {
    int v = 0;
    for (int i = 0; i < rank; ++i)
      v += coroots[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(i)] *
           root(beta).eval[static_cast<std::size_t>(i)];
    return v;
  }

  std::vector<int> combine(int j, int alpha, int k, int beta) const
  {
    std::vector<int> w(static_cast<std::size_t>(rank));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = j * root(alpha).eval[i] + k * root(beta).eval[i];
    return w;
  }

  /// Root j*alpha + k*beta, if it is one.
  std::optional<int> root_combination(int j, int alpha, int k, int beta) const
  {
    return root_with_eval(combine(j, alpha, k, beta));
  }

  /// Odd root gamma with 2*gamma not a root.
  bool isotropic(int r) const { return root(r).odd && !root_combination(2, r, 0, r); }

  /// Coefficient of `target` in [z_p, z_q].
  long coefficient(int p, int q, int target) const
  {
    for (const auto& t : bracket(p, q))
      if (t.symbol == target) return t.coef;
    return 0;
  }

 private:
  std::size_t index(int p, int q) const { return static_cast<std::size_t>(p * num_symbols() + q); }
  std::vector<BracketValue> table_;
};

struct Violation {
  std::string kind;     ///< antisymmetry, jacobi, grading, parity, root-space, negation, coroot
  std::string message;
};

using ValidationReport = std::vector<Violation>;

inline ValidationReport validate(const SuperAlgebraSpec& g)
{
  ValidationReport rep;
  auto report = [&](std::string kind, std::string msg) { rep.push_back({std::move(kind), std::move(msg)}); };
  const int n = g.num_symbols();
  const auto sym = [&](int s) { return g.symbol_name(s); };

  // roots, negation, one-dimensional root spaces
  for (int r = 0; r < g.num_roots(); ++r) {
    const auto& a = g.root(r);
    if (static_cast<int>(a.eval.size()) != g.rank) {
      report("root-space", "root " + a.label + " has an evaluation vector of wrong length");
      continue;
    }
    if (std::all_of(a.eval.begin(), a.eval.end(), [](int v) { return v == 0; }))
      report("root-space", "root " + a.label + " has zero weight");
    for (int s = r + 1; s < g.num_roots(); ++s) {
      if (g.root(s).label == a.label) report("root-space", "duplicate root label " + a.label);
      if (g.root(s).eval == a.eval)
        report("root-space", "roots " + a.label + " and " + g.root(s).label + " share a weight (dim g_alpha > 1)");
    }
    if (a.negative < 0 || a.negative >= g.num_roots()) {
      report("negation", "root " + a.label + " has no negative");
      continue;
    }
    const auto& na = g.root(a.negative);
    if (na.negative != r) report("negation", "negation is not an involution at " + a.label);
    if (a.negative == r) report("negation", "root " + a.label + " is its own negative");
    if (na.odd != a.odd) report("negation", "parity of " + a.label + " and " + na.label + " differ");
    if (na.positive == a.positive) report("negation", "sign of " + a.label + " and " + na.label + " agree");
    std::vector<int> neg = a.eval;
    for (auto& v : neg) v = -v;
    if (na.eval != neg) report("negation", "weight of " + na.label + " is not minus that of " + a.label);
  }
  if (static_cast<int>(g.coroots.size()) != g.num_roots()) {
    report("coroot", "coroot table size does not match the root count");
    return rep;
  }

  // antisymmetry and parity
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const long sign = (g.odd(p) && g.odd(q)) ? 1 : -1;  // [q,p] = sign * [p,q]
      BracketValue expect;
      for (const auto& t : g.bracket(p, q)) expect.push_back({t.symbol, sign * t.coef});
      if (expect != g.bracket(q, p))
        report("antisymmetry", "[" + sym(p) + "," + sym(q) + "] and [" + sym(q) + "," + sym(p) + "]");
      const bool par = g.odd(p) != g.odd(q);
      for (const auto& t : g.bracket(p, q))
        if (g.odd(t.symbol) != par) report("parity", "[" + sym(p) + "," + sym(q) + "] has a term of wrong parity");
    }

  // grading
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const auto& v = g.bracket(p, q);
      const std::string where = "[" + sym(p) + "," + sym(q) + "]";
      if (g.is_cartan(p) && g.is_cartan(q)) {
        if (!v.empty()) report("grading", where + " should vanish");
      } else if (g.is_cartan(p)) {
        const int r = g.root_of(q);
        const long w = g.root(r).eval[static_cast<std::size_t>(p)];
        BracketValue expect;
        if (w != 0) expect.push_back({q, w});
        if (v != expect) report("grading", where + " is not alpha(h)x_alpha");
      } else if (g.is_cartan(q)) {
        continue;  // covered by antisymmetry
      } else {
        const int a = g.root_of(p), b = g.root_of(q);
        if (g.root(a).negative == b) {
          for (const auto& t : v)
            if (!g.is_cartan(t.symbol)) report("grading", where + " leaves the Cartan subalgebra");
        } else {
          auto target = g.root_combination(1, a, 1, b);
          for (const auto& t : v)
            if (!target || t.symbol != g.symbol_of_root(*target))
              report("grading", where + " has a term outside g_{alpha+beta}");
        }
      }
    }

  // coroots
  for (int r = 0; r < g.num_roots(); ++r) {
    const auto& a = g.root(r);
    if (a.negative < 0 || a.negative >= g.num_roots()) continue;
    BracketValue expect;
    for (int i = 0; i < g.rank; ++i) {
      const long c = g.coroots[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
      if (c != 0) expect.push_back({i, c});
    }
    if (g.bracket(g.symbol_of_root(r), g.symbol_of_root(a.negative)) != expect)
      report("coroot", "[x_" + a.label + ", x_" + g.root(a.negative).label + "] differs from the stored h_" + a.label);
    if (!a.odd && g.pairing(r, r) != 2)
      report("coroot", "alpha(h_alpha) != 2 for even root " + a.label);
  }

  // super Jacobi: [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
  auto apply = [&](int p, const std::vector<long>& v, bool left) {
    std::vector<long> out(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
      const long c = v[static_cast<std::size_t>(s)];
      if (c == 0) continue;
      for (const auto& t : left ? g.bracket(p, s) : g.bracket(s, p))
        out[static_cast<std::size_t>(t.symbol)] += c * t.coef;
    }
    return out;
  };
  auto as_vec = [&](const BracketValue& b) {
    std::vector<long> out(static_cast<std::size_t>(n), 0);
    for (const auto& t : b) out[static_cast<std::size_t>(t.symbol)] += t.coef;
    return out;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        auto lhs = apply(a, as_vec(g.bracket(b, c)), true);
        auto r1 = apply(c, as_vec(g.bracket(a, b)), false);
        auto r2 = apply(b, as_vec(g.bracket(a, c)), true);
        const long sign = (g.odd(a) && g.odd(b)) ? -1 : 1;
        for (int s = 0; s < n; ++s) {
          const auto i = static_cast<std::size_t>(s);
          if (lhs[i] != r1[i] + sign * r2[i]) {
            report("jacobi", "triple (" + sym(a) + ", " + sym(b) + ", " + sym(c) + ")");
            break;
          }
        }
      }
  return rep;
}

/// Root string through beta in direction alpha, walked over R u {0}.
struct RootStringData {
  int r = 0;                 ///< max r with beta - k alpha in R u {0} for all k <= r
  int q = 0;                 ///< max q with beta + k alpha in R u {0} for all k <= q
  long c = 0;                ///< coefficient of x_{alpha+beta} in [x_alpha, x_beta]; 0 if alpha+beta not in R
  bool sum_is_root = false;
  std::optional<bool> magnitude_rule;  ///< |c| matches the expected magnitude (only when alpha+beta in R)
};

inline RootStringData root_string(const SuperAlgebraSpec& g, int alpha, int beta)
{
  RootStringData d;
  auto in_string = [&](int k) {
    auto w = g.combine(k, alpha, 1, beta);
    return std::all_of(w.begin(), w.end(), [](int v) { return v == 0; }) || g.root_with_eval(w).has_value();
  };
  while (in_string(-(d.r + 1))) ++d.r;
  while (in_string(d.q + 1)) ++d.q;
  if (auto s = g.root_combination(1, alpha, 1, beta)) {
    d.sum_is_root = true;
    d.c = g.coefficient(g.symbol_of_root(alpha), g.symbol_of_root(beta), g.symbol_of_root(*s));
    const long expected = (g.isotropic(alpha) && g.isotropic(beta)) ? std::labs(g.pairing(beta, alpha)) : d.r + 1;
    d.magnitude_rule = std::labs(d.c) == expected;
  }
  return d;
}

/// Rank-2 subsystem R_{alpha,beta} of even roots spanned by alpha and beta.
enum class Rank2Type { Degenerate, A1xA1, A2, B2, G2, Other };

inline Rank2Type rank2_type(const SuperAlgebraSpec& g, int alpha, int beta)
{
  if (g.root(alpha).odd || g.root(beta).odd) return Rank2Type::Other;
  if (alpha == beta || g.root(alpha).negative == beta) return Rank2Type::Degenerate;
  int count = 0;
  for (int j = -4; j <= 4; ++j)
    for (int k = -4; k <= 4; ++k)
      if (auto r = g.root_combination(j, alpha, k, beta); r && !g.root(*r).odd) ++count;
  switch (count) {
    case 4: return Rank2Type::A1xA1;
    case 6: return Rank2Type::A2;
    case 8: return Rank2Type::B2;
    case 12: return Rank2Type::G2;
    default: return Rank2Type::Other;
  }
}

/// Even root alpha is short in R_{alpha,beta} when some root eta of that
/// subsystem, eta != +-alpha, has |eta(h_alpha)| >= 2.
inline bool is_short_in(const SuperAlgebraSpec& g, int alpha, int beta)
{
  for (int j = -4; j <= 4; ++j)
    for (int k = -4; k <= 4; ++k) {
      auto r = g.root_combination(j, alpha, k, beta);
      if (!r || g.root(*r).odd || *r == alpha || *r == g.root(alpha).negative) continue;
      if (std::abs(g.pairing(*r, alpha)) >= 2) return true;
    }
  return false;
}

// ---------------------------------------------------------------------------
// line-oriented algebra file
// ---------------------------------------------------------------------------

class SpecParseError : public std::runtime_error {
 public:
  SpecParseError(int line, const std::string& field, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + " (" + field + "): " + what), line_(line), field_(field)
  {
  }
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

class SpecValidationError : public std::runtime_error {
 public:
  explicit SpecValidationError(ValidationReport rep)
      : std::runtime_error("algebra table failed validation (" + std::to_string(rep.size()) + " violations)"),
        report_(std::move(rep))
  {
  }
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s)
{
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

inline long parse_long(const std::string& tok, int line, const std::string& field)
{
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(tok.c_str(), &end, 10);
  if (tok.empty() || *end != '\0' || errno != 0) throw SpecParseError(line, field, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace detail

/// Parses the algebra file format without validating it.
///
///     name <id>
///     cartan <l>
///     root <label> <even|odd> <+|-> <negative-label> : <alpha(h_1)> ... <alpha(h_l)>
///     coroot <label> : <c_1> ... <c_l>
///     bracket <symbol> <symbol> : <int> <symbol> [<int> <symbol> ...]
///
/// Symbols are `h[i]` (1-based) and `x[<label>]`; unlisted brackets are zero.
inline SuperAlgebraSpec parse_spec(const std::string& text)
{
  SuperAlgebraSpec g;
  struct PendingRoot {
    std::string neg;
    int line;
  };
  std::vector<PendingRoot> pending;
  struct PendingBracket {
    std::vector<std::string> tok;
    int line;
  };
  std::vector<PendingBracket> brackets;
  std::map<std::string, std::pair<std::vector<int>, int>> coroots;
  bool have_rank = false;

  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    auto tok = detail::split_ws(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    auto colon = std::find(tok.begin(), tok.end(), std::string(":"));
    if (kw == "name") {
      if (tok.size() != 2) throw SpecParseError(lineno, "name", "expected 'name <id>'");
      g.name = tok[1];
    } else if (kw == "cartan") {
      if (tok.size() != 2) throw SpecParseError(lineno, "cartan", "expected 'cartan <rank>'");
      g.rank = static_cast<int>(detail::parse_long(tok[1], lineno, "cartan"));
      if (g.rank < 0) throw SpecParseError(lineno, "cartan", "negative rank");
      have_rank = true;
    } else if (kw == "root") {
      if (!have_rank) throw SpecParseError(lineno, "root", "'cartan' must come first");
      if (colon == tok.end() || colon - tok.begin() != 5)
        throw SpecParseError(lineno, "root", "expected 'root <label> <even|odd> <+|-> <negative> : <weights>'");
      RootInfo r;
      r.label = tok[1];
      if (tok[2] == "even") r.odd = false;
      else if (tok[2] == "odd") r.odd = true;
      else throw SpecParseError(lineno, "root.parity", "expected even or odd, got '" + tok[2] + "'");
      if (tok[3] == "+") r.positive = true;
      else if (tok[3] == "-") r.positive = false;
      else throw SpecParseError(lineno, "root.sign", "expected + or -, got '" + tok[3] + "'");
      for (auto it = colon + 1; it != tok.end(); ++it)
        r.eval.push_back(static_cast<int>(detail::parse_long(*it, lineno, "root.weight")));
      if (static_cast<int>(r.eval.size()) != g.rank)
        throw SpecParseError(lineno, "root.weight", "expected " + std::to_string(g.rank) + " weights");
      g.roots.push_back(std::move(r));
      pending.push_back({tok[4], lineno});
    } else if (kw == "coroot") {
      if (colon == tok.end() || colon - tok.begin() != 2)
        throw SpecParseError(lineno, "coroot", "expected 'coroot <label> : <ints>'");
      std::vector<int> v;
      for (auto it = colon + 1; it != tok.end(); ++it)
        v.push_back(static_cast<int>(detail::parse_long(*it, lineno, "coroot")));
      if (static_cast<int>(v.size()) != g.rank)
        throw SpecParseError(lineno, "coroot", "expected " + std::to_string(g.rank) + " entries");
      coroots[tok[1]] = {v, lineno};
    } else if (kw == "bracket") {
      if (colon == tok.end() || colon - tok.begin() != 3)
        throw SpecParseError(lineno, "bracket", "expected 'bracket <symbol> <symbol> : ...'");
      brackets.push_back({tok, lineno});
    } else {
      throw SpecParseError(lineno, "keyword", "unknown keyword '" + kw + "'");
    }
  }
  if (!have_rank) throw SpecParseError(lineno, "cartan", "missing 'cartan' line");

  for (std::size_t r = 0; r < g.roots.size(); ++r) {
    auto neg = g.find_root(pending[r].neg);
    if (!neg) throw SpecParseError(pending[r].line, "root.negative", "unknown root '" + pending[r].neg + "'");
    g.roots[r].negative = *neg;
  }
  g.coroots.assign(g.roots.size(), std::vector<int>(static_cast<std::size_t>(g.rank), 0));
  for (const auto& [label, entry] : coroots) {
    auto r = g.find_root(label);
    if (!r) throw SpecParseError(entry.second, "coroot", "unknown root '" + label + "'");
    g.coroots[static_cast<std::size_t>(*r)] = entry.first;
  }
  for (std::size_t r = 0; r < g.roots.size(); ++r)
    if (!coroots.count(g.roots[r].label))
      throw SpecParseError(lineno, "coroot", "missing coroot for root '" + g.roots[r].label + "'");

  g.resize_table();
  std::map<std::pair<int, int>, int> seen;
  for (const auto& b : brackets) {
    auto p = g.find_symbol(b.tok[1]);
    auto q = g.find_symbol(b.tok[2]);
    if (!p) throw SpecParseError(b.line, "bracket.left", "unknown symbol '" + b.tok[1] + "'");
    if (!q) throw SpecParseError(b.line, "bracket.right", "unknown symbol '" + b.tok[2] + "'");
    if (seen.count({*p, *q})) throw SpecParseError(b.line, "bracket", "duplicate bracket entry");
    seen[{*p, *q}] = b.line;
    if ((b.tok.size() - 4) % 2 != 0) throw SpecParseError(b.line, "bracket.terms", "expected <int> <symbol> pairs");
    BracketValue v;
    for (std::size_t i = 4; i < b.tok.size(); i += 2) {
      const long c = detail::parse_long(b.tok[i], b.line, "bracket.coefficient");
      auto s = g.find_symbol(b.tok[i + 1]);
      if (!s) throw SpecParseError(b.line, "bracket.terms", "unknown symbol '" + b.tok[i + 1] + "'");
      auto it = std::find_if(v.begin(), v.end(), [&](auto& t) { return t.symbol == *s; });
      if (it != v.end()) it->coef += c;
      else v.push_back({*s, c});
    }
    g.set_bracket(*p, *q, std::move(v));
  }
  return g;
}

/// Parses and validates; throws SpecParseError or SpecValidationError.
inline SuperAlgebraSpec load_spec(const std::string& text)
{
  auto g = parse_spec(text);
  auto rep = validate(g);
  if (!rep.empty()) throw SpecValidationError(std::move(rep));
  return g;
}

inline std::string format_spec(const SuperAlgebraSpec& g)
{
  std::ostringstream os;
  os << "name " << g.name << "\n" << "cartan " << g.rank << "\n";
  for (const auto& r : g.roots) {
    os << "root " << r.label << ' ' << (r.odd ? "odd" : "even") << ' ' << (r.positive ? '+' : '-') << ' '
       << g.root(r.negative).label << " :";
    for (int v : r.eval) os << ' ' << v;
    os << "\n";
  }
  for (int r = 0; r < g.num_roots(); ++r) {
    os << "coroot " << g.root(r).label << " :";
    for (int v : g.coroots[static_cast<std::size_t>(r)]) os << ' ' << v;
    os << "\n";
  }
  for (int p = 0; p < g.num_symbols(); ++p)
    for (int q = 0; q < g.num_symbols(); ++q) {
      const auto& v = g.bracket(p, q);
      if (v.empty()) continue;
      os << "bracket " << g.symbol_name(p) << ' ' << g.symbol_name(q) << " :";
      for (const auto& t : v) os << ' ' << t.coef << ' ' << g.symbol_name(t.symbol);
      os << "\n";
    }
  return os.str();
}

}  // namespace zform

#endif  // ZFORM_SUPERALGEBRA_HPP
