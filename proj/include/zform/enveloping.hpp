#ifndef ZFORM_ENVELOPING_HPP
#define ZFORM_ENVELOPING_HPP

#include "combinatorics.hpp"
#include "monoid.hpp"
#include "superalgebra.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace zform {

/// z (x) a for a basis symbol z of g and a basis element a of A.
struct Letter {
  int gen = 0;
  Mono mono{};
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct Run {
  Letter letter;
  int exp = 1;
  friend bool operator==(const Run&, const Run&) = default;
  friend auto operator<=>(const Run&, const Run&) = default;
};

/// Canonical PBW word: runs strictly increasing under the engine's letter order.
using Word = std::vector<Run>;

inline int word_length(const Word& w)
{
  int n = 0;
  for (const auto& r : w) n += r.exp;
  return n;
}

inline constexpr int kDegreeOfZero = INT_MIN;

/// Finitely supported rational combination of canonical words.
class UElem {
 public:
  using Map = std::map<Word, Rational>;

  UElem() = default;
  static UElem one() { return word(Word{}); }
  static UElem word(Word w, Rational c = 1)
  {
    UElem u;
    u.add(std::move(w), c);
    return u;
  }

  void add(const Word& w, const Rational& c)
  {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const UElem& o, const Rational& k)
  {
    if (k == 0) return;
    for (const auto& [w, c] : o.terms_) add(w, k * c);
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }

  Rational coefficient(const Word& w) const
  {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  UElem& operator+=(const UElem& o)
  {
    add_scaled(o, 1);
    return *this;
  }
  UElem& operator-=(const UElem& o)
  {
    add_scaled(o, -1);
    return *this;
  }
  UElem& operator*=(const Rational& k)
  {
    if (k == 0) terms_.clear();
    else
      for (auto& [w, c] : terms_) c *= k;
    return *this;
  }
  friend UElem operator+(UElem a, const UElem& b) { return a += b; }
  friend UElem operator-(UElem a, const UElem& b) { return a -= b; }
  friend UElem operator*(const Rational& k, UElem a) { return a *= k; }
  friend UElem operator*(UElem a, const Rational& k) { return a *= k; }
  friend UElem operator-(UElem a) { return a *= -1; }
  friend bool operator==(const UElem&, const UElem&) = default;

 private:
  Map terms_;
};

/// Filtration degree; kDegreeOfZero for 0.
inline int degree(const UElem& x)
{
  int d = kDegreeOfZero;
  for (const auto& [w, c] : x.terms()) d = std::max(d, word_length(w));
  return d;
}

/// Total order on R u I, as ranks of the spec's basis symbols.
class GeneratorOrder {
 public:
  GeneratorOrder() = default;

  /// `symbols` lists every basis symbol of the spec exactly once, smallest first.
  static GeneratorOrder from_symbols(const SuperAlgebraSpec& g, std::vector<int> symbols)
  {
    const int n = g.num_symbols();
    if (static_cast<int>(symbols.size()) != n) throw std::invalid_argument("order must list every generator once");
    GeneratorOrder o;
    o.sequence_ = std::move(symbols);
    o.rank_.assign(static_cast<std::size_t>(n), -1);
    for (int k = 0; k < n; ++k) {
      const int s = o.sequence_[static_cast<std::size_t>(k)];
      if (s < 0 || s >= n || o.rank_[static_cast<std::size_t>(s)] != -1)
        throw std::invalid_argument("order must list every generator once");
      o.rank_[static_cast<std::size_t>(s)] = k;
    }
    return o;
  }

  /// R^- (in the listing order of their positives), then I, then R^+.
  static GeneratorOrder triangular(const SuperAlgebraSpec& g)
  {
    std::vector<int> seq;
    for (int r = 0; r < g.num_roots(); ++r)
      if (g.root(r).positive) seq.push_back(g.symbol_of_root(g.root(r).negative));
    for (int i = 0; i < g.rank; ++i) seq.push_back(i);
    for (int r = 0; r < g.num_roots(); ++r)
      if (g.root(r).positive) seq.push_back(g.symbol_of_root(r));
    return from_symbols(g, std::move(seq));
  }

  /// A fixed non-triangular order: positive and negative roots interleaved,
  /// the Cartan block in the middle.
  static GeneratorOrder interleaved(const SuperAlgebraSpec& g)
  {
    std::vector<int> pos, seq;
    for (int r = 0; r < g.num_roots(); ++r)
      if (g.root(r).positive) pos.push_back(r);
    const std::size_t half = pos.size() / 2;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      if (k == half)
        for (int i = 0; i < g.rank; ++i) seq.push_back(i);
      seq.push_back(g.symbol_of_root(pos[k]));
      seq.push_back(g.symbol_of_root(g.root(pos[k]).negative));
    }
    if (half == pos.size())
      for (int i = 0; i < g.rank; ++i) seq.push_back(i);
    return from_symbols(g, std::move(seq));
  }

  /// Labels: root labels, and `i`, `hi` or `h[i]` for Cartan elements.
  static GeneratorOrder from_labels(const SuperAlgebraSpec& g, const std::vector<std::string>& labels)
  {
    std::vector<int> seq;
    for (const auto& l : labels) {
      if (auto r = g.find_root(l)) {
        seq.push_back(g.symbol_of_root(*r));
        continue;
      }
      std::string digits = l;
      if (digits.rfind("h[", 0) == 0 && digits.back() == ']') digits = digits.substr(2, digits.size() - 3);
      else if (!digits.empty() && digits[0] == 'h') digits = digits.substr(1);
      int i = 0;
      std::size_t used = 0;
      try {
        i = std::stoi(digits, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != digits.size() || i < 1 || i > g.rank)
        throw std::invalid_argument("order label '" + l + "' is not in R u I");
      seq.push_back(i - 1);
    }
    return from_symbols(g, std::move(seq));
  }

  int rank(int symbol) const { return rank_[static_cast<std::size_t>(symbol)]; }
  const std::vector<int>& sequence() const { return sequence_; }
  friend bool operator==(const GeneratorOrder&, const GeneratorOrder&) = default;

 private:
  std::vector<int> rank_;
  std::vector<int> sequence_;
};

/// Linear combination of letters (an element of g (x) A).
using LieElem = std::map<Letter, long>;

/// Straightening engine for U(g (x) A) over one algebra, coefficient monoid
/// and generator order.
///
/// Products are computed by inserting one letter at a time into a canonical
/// word. An out-of-order adjacent pair z(x)a, z'(x)b is rewritten as
/// +-(z'(x)b)(z(x)a) + [z,z'](x)ab; an odd square becomes (1/2)[x,x](x)a^2;
/// equal even letters merge into runs. The result of inserting a letter into
/// a word is memoized.
class Engine {
 public:
  Engine(SuperAlgebraSpec spec, MonoidBasis monoid, GeneratorOrder order)
      : spec_(std::move(spec)), monoid_(std::move(monoid)), order_(std::move(order))
  {
  }
  Engine(SuperAlgebraSpec spec, MonoidBasis monoid)
      : Engine(spec, std::move(monoid), GeneratorOrder::triangular(spec))
  {
  }

  Engine(const Engine& o) : Engine(o.spec_, o.monoid_, o.order_) {}
  Engine& operator=(const Engine&) = delete;

  const SuperAlgebraSpec& spec() const { return spec_; }
  const MonoidBasis& monoid() const { return monoid_; }
  const GeneratorOrder& order() const { return order_; }

  bool odd(const Letter& l) const { return spec_.odd(l.gen); }

  /// Canonical key: rank of the generator, then the order on B.
  std::strong_ordering compare(const Letter& a, const Letter& b) const
  {
    if (a.gen != b.gen) return order_.rank(a.gen) <=> order_.rank(b.gen);
    return a.mono <=> b.mono;
  }

  Letter letter(int gen, const Mono& m) const
  {
    if (gen < 0 || gen >= spec_.num_symbols()) throw std::out_of_range("letter references an unknown generator");
    if (!monoid_.contains(m)) throw std::invalid_argument("letter has an A-part outside the monoid basis");
    return Letter{gen, m};
  }
  Letter root_letter(int root, const Mono& m) const { return letter(spec_.symbol_of_root(root), m); }
  Letter cartan_letter(int i, const Mono& m) const { return letter(i, m); }

  /// [z(x)a, z'(x)b] = [z,z'](x)ab
  LieElem bracket(const Letter& a, const Letter& b) const
  {
    LieElem out;
    auto ab = monoid_.mul(a.mono, b.mono);
    if (!ab) return out;
    for (const auto& t : spec_.bracket(a.gen, b.gen)) out[Letter{t.symbol, *ab}] += t.coef;
    return out;
  }

  UElem from_letter(const Letter& l) const { return UElem::word(Word{Run{l, 1}}); }

  UElem from_lie(const LieElem& z) const
  {
    UElem u;
    for (const auto& [l, c] : z) u.add(Word{Run{l, 1}}, c);
    return u;
  }

  /// Expansion of an arbitrary product of letters in the canonical basis.
  UElem normalize(std::span<const Letter> letters)
  {
    UElem x = UElem::one();
    for (const auto& l : letters) x = mul_letter(x, l);
    return x;
  }

  UElem power(const Letter& l, int e)
  {
    std::vector<Letter> w(static_cast<std::size_t>(e), l);
    return normalize(w);
  }

  /// (z(x)a)^(e) = (z(x)a)^e / e!
  UElem divided_power(const Letter& l, int e)
  {
    if (e < 0) return UElem{};
    UElem x = power(l, e);
    x *= Rational(1) / Rational(factorial(e));
    return x;
  }

  UElem mul_letter(const UElem& x, const Letter& l)
  {
    UElem out;
    for (const auto& [w, c] : x.terms()) out.add_scaled(mul_word_letter(w, l), c);
    return out;
  }

  UElem mul(const UElem& x, const UElem& y)
  {
    UElem out;
    for (const auto& [wy, cy] : y.terms()) {
      UElem part = x;
      for (const auto& run : wy)
        for (int k = 0; k < run.exp; ++k) part = mul_letter(part, run.letter);
      out.add_scaled(part, cy);
    }
    return out;
  }

  UElem mul(std::initializer_list<std::reference_wrapper<const UElem>> factors)
  {
    UElem x = UElem::one();
    for (const auto& f : factors) x = mul(x, f.get());
    return x;
  }

  /// Parity of a word (sum of odd exponents mod 2).
  bool parity(const Word& w) const
  {
    int p = 0;
    for (const auto& r : w)
      if (odd(r.letter)) p += r.exp;
    return p % 2 != 0;
  }

  /// [x, y] = xy - (-1)^{|x||y|} yx, extended bilinearly over parity components.
  UElem supercommutator(const UElem& x, const UElem& y)
  {
    UElem xs[2], ys[2];
    for (const auto& [w, c] : x.terms()) xs[parity(w)].add(w, c);
    for (const auto& [w, c] : y.terms()) ys[parity(w)].add(w, c);
    UElem out;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        if (xs[i].is_zero() || ys[j].is_zero()) continue;
        out += mul(xs[i], ys[j]);
        out.add_scaled(mul(ys[j], xs[i]), (i && j) ? 1 : -1);
      }
    return out;
  }

  /// Number of memoized (word, letter) insertions.
  std::size_t cache_size() const
  {
    std::lock_guard lock(cache_mutex_);
    return cache_.size();
  }

 private:
  struct Key {
    Word word;
    Letter letter;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept
    {
      std::size_t h = 0x9e3779b97f4a7c15ull;
      auto mix = [&h](long v) { h ^= std::hash<long>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
      for (const auto& r : k.word) {
        mix(r.letter.gen);
        mix(r.letter.mono.exp[0]);
        mix(r.letter.mono.exp[1]);
        mix(r.exp);
      }
      mix(k.letter.gen);
      mix(k.letter.mono.exp[0]);
      mix(k.letter.mono.exp[1]);
      return h;
    }
  };

  UElem mul_power(UElem x, const Letter& l, int e)
  {
    for (int k = 0; k < e; ++k) x = mul_letter(x, l);
    return x;
  }

  UElem mul_word_letter(const Word& w, const Letter& l)
  {
    if (w.empty()) return from_letter(l);
    const Run& last = w.back();
    const auto cmp = compare(last.letter, l);
    if (cmp < 0) {
      Word r = w;
      r.push_back(Run{l, 1});
      return UElem::word(std::move(r));
    }
    if (cmp == 0 && !odd(l)) {
      Word r = w;
      r.back().exp += 1;
      return UElem::word(std::move(r));
    }

    Key key{w, l};
    {
      std::lock_guard lock(cache_mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }

    const Word prefix(w.begin(), w.end() - 1);
    const Letter y = last.letter;
    UElem out;
    if (cmp == 0) {
      // odd square: (x (x) a)^2 = 1/2 [x (x) a, x (x) a]
      for (const auto& [m, c] : bracket(l, l)) out.add_scaled(mul_word_letter(prefix, m), frac(c, 2));
    } else if (!odd(y)) {
      // y^e l = sum_k binom(e,k) ad_y^k(l) y^{e-k}
      const int e = last.exp;
      LieElem ad{{l, 1}};
      for (int k = 0; k <= e && !ad.empty(); ++k) {
        const Rational bk(binomial(e, k));
        for (const auto& [m, c] : ad) {
          UElem part = mul_power(mul_word_letter(prefix, m), y, e - k);
          out.add_scaled(part, bk * c);
        }
        LieElem next;
        for (const auto& [m, c] : ad)
          for (const auto& [m2, c2] : bracket(y, m)) next[m2] += c * c2;
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        ad = std::move(next);
      }
    } else {
      // odd y (exponent 1): y l = (-1)^{|l|} l y + [y, l]
      const long sign = odd(l) ? -1 : 1;
      out.add_scaled(mul_letter(mul_word_letter(prefix, l), y), sign);
      for (const auto& [m, c] : bracket(y, l)) out.add_scaled(mul_word_letter(prefix, m), c);
    }

    std::lock_guard lock(cache_mutex_);
    cache_.emplace(std::move(key), out);
    return out;
  }

  SuperAlgebraSpec spec_;
  MonoidBasis monoid_;
  GeneratorOrder order_;
  mutable std::mutex cache_mutex_;
  std::unordered_map<Key, UElem, KeyHash> cache_;
};

}  // namespace zform

#endif  // ZFORM_ENVELOPING_HPP
