#ifndef ZFORM_DIVIDED_HPP
#define ZFORM_DIVIDED_HPP

#include "enveloping.hpp"

#include <memory>

namespace zform {

/// One factor of a Theorem 3.2 basis element: X_alpha(chi) for a root symbol,
/// p_i(phi) for a Cartan symbol. Odd roots carry 0/1 multisets.
struct BasisFactor {
  int gen = 0;
  Multiset<Mono> mult;
  friend bool operator==(const BasisFactor& a, const BasisFactor& b) { return a.gen == b.gen && a.mult == b.mult; }
  friend bool operator<(const BasisFactor& a, const BasisFactor& b)
  {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.mult < b.mult;
  }
};

/// Factors in increasing generator rank; empty key = 1.
using BasisKey = std::vector<BasisFactor>;

inline int basis_degree(const BasisKey& k)
{
  int d = 0;
  for (const auto& f : k) d += f.mult.total();
  return d;
}

/// Rational combination of Theorem 3.2 basis elements.
class DividedForm {
 public:
  using Map = std::map<BasisKey, Rational>;
  void add(const BasisKey& k, const Rational& c)
  {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const BasisKey& k) const
  {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  friend bool operator==(const DividedForm&, const DividedForm&) = default;

 private:
  Map terms_;
};

/// True iff every coefficient is an integer (membership in U_Z).
inline bool is_integral(const DividedForm& x)
{
  for (const auto& [k, c] : x.terms())
    if (c.get_den() != 1) return false;
  return true;
}

/// Polynomial in the commuting variables h (x) a, a in B; a monomial is the
/// multiset of its variables.
using CartanPoly = std::map<Multiset<Mono>, Rational>;

/// Segment of a basis element relative to the triangular decomposition.
enum class Segment { Negative = 0, Cartan = 1, Positive = 2 };

struct TriangularTerm {
  BasisKey negative, cartan, positive;
  Rational coef;
};

struct TriangularForm {
  std::vector<TriangularTerm> terms;
  bool integral = true;    ///< all coefficients in Z
  bool segmented = true;   ///< every basis key splits as (R^-)(I)(R^+)
};

/// Change of basis between canonical PBW words (plain powers) and the
/// Theorem 3.2 basis, for one engine. Holds caches; not thread-safe.
class BasisConverter {
 public:
  explicit BasisConverter(Engine& engine) : engine_(engine) {}

  Engine& engine() { return engine_; }

  /// p(chi) in the commuting variables h (x) a (the same polynomial for every h).
  const CartanPoly& p_poly(const Multiset<Mono>& chi)
  {
    if (auto it = p_cache_.find(chi); it != p_cache_.end()) return it->second;
    CartanPoly out;
    if (chi.empty()) {
      out[Multiset<Mono>{}] = 1;
    } else {
      const Rational scale = frac(-1, chi.total());
      for (const auto& psi : enumerate_sub(chi)) {
        if (psi.empty()) continue;
        auto pi = pi_product(psi, engine_.monoid());
        if (!pi) continue;
        const Rational k = scale * Rational(multinomial(psi));
        for (const auto& [mono, c] : p_poly(chi - psi)) {
          auto key = mono;
          key.add(*pi);
          Rational& slot = out[key];
          slot += k * c;
          if (slot == 0) out.erase(key);
        }
      }
    }
    return p_cache_.emplace(chi, std::move(out)).first->second;
  }

  /// Expansion of the monomial prod_a (h (x) a)^{mono(a)} in the p-basis, by
  /// triangular elimination on leading monomials.
  const std::vector<std::pair<Multiset<Mono>, Rational>>& monomial_to_p(const Multiset<Mono>& mono)
  {
    if (auto it = mono_cache_.find(mono); it != mono_cache_.end()) return it->second;
    CartanPoly rest{{mono, Rational(1)}};
    std::map<Multiset<Mono>, Rational> acc;
    while (!rest.empty()) {
      // a term of maximal degree; p(phi) has a single top-degree monomial
      auto top = rest.begin();
      for (auto it = rest.begin(); it != rest.end(); ++it)
        if (it->first.total() > top->first.total()) top = it;
      const Multiset<Mono> phi = top->first;
      Rational lead = (phi.total() % 2 == 0) ? Rational(1) : Rational(-1);
      for (const auto& [a, n] : phi) lead /= Rational(factorial(n));
      const Rational k = top->second / lead;
      acc[phi] += k;
      for (const auto& [m, c] : p_poly(phi)) {
        Rational& slot = rest[m];
        slot -= k * c;
        if (slot == 0) rest.erase(m);
      }
    }
    std::vector<std::pair<Multiset<Mono>, Rational>> out;
    for (auto& [phi, c] : acc)
      if (c != 0) out.emplace_back(phi, c);
    return mono_cache_.emplace(mono, std::move(out)).first->second;
  }

  /// UElem -> Theorem 3.2 basis (exact over Q).
  DividedForm to_divided(const UElem& x)
  {
    DividedForm out;
    for (const auto& [w, c] : x.terms()) {
      std::vector<std::pair<BasisKey, Rational>> partial{{BasisKey{}, c}};
      std::size_t pos = 0;
      while (pos < w.size()) {
        const int gen = w[pos].letter.gen;
        Multiset<Mono> seg;
        for (; pos < w.size() && w[pos].letter.gen == gen; ++pos) seg.add(w[pos].letter.mono, w[pos].exp);
        if (engine_.spec().is_cartan(gen)) {
          const auto& expansion = monomial_to_p(seg);
          std::vector<std::pair<BasisKey, Rational>> next;
          for (const auto& [key, kc] : partial)
            for (const auto& [phi, pc] : expansion) {
              BasisKey nk = key;
              if (!phi.empty()) nk.push_back(BasisFactor{gen, phi});
              next.emplace_back(std::move(nk), kc * pc);
            }
          partial = std::move(next);
        } else {
          Rational scale = 1;
          if (!engine_.spec().odd(gen))
            for (const auto& [a, n] : seg) scale *= Rational(factorial(n));
          for (auto& [key, kc] : partial) {
            key.push_back(BasisFactor{gen, seg});
            kc *= scale;
          }
        }
      }
      for (const auto& [key, kc] : partial) out.add(key, kc);
    }
    return out;
  }

  /// The basis element named by `key`, as a UElem.
  UElem basis_element(const BasisKey& key)
  {
    UElem x = UElem::one();
    for (const auto& f : key) x = engine_.mul(x, factor_element(f));
    return x;
  }

  UElem from_divided(const DividedForm& d)
  {
    UElem out;
    for (const auto& [key, c] : d.terms()) out.add_scaled(basis_element(key), c);
    return out;
  }

  /// Coefficients on products prod_i p_i(phi_i) (indexed by i = 0..l-1).
  std::map<std::vector<Multiset<Mono>>, Rational> p_basis_convert(const UElem& x)
  {
    for (const auto& [w, c] : x.terms())
      for (const auto& r : w)
        if (!engine_.spec().is_cartan(r.letter.gen))
          throw std::invalid_argument("p_basis_convert: input contains non-Cartan letters");
    std::map<std::vector<Multiset<Mono>>, Rational> out;
    const DividedForm d = to_divided(x);
    for (const auto& [key, c] : d.terms()) {
      std::vector<Multiset<Mono>> phis(static_cast<std::size_t>(engine_.spec().rank));
      for (const auto& f : key) phis[static_cast<std::size_t>(f.gen)] = f.mult;
      out[phis] += c;
    }
    return out;
  }

  Segment segment_of(int gen) const
  {
    const auto& g = engine_.spec();
    if (g.is_cartan(gen)) return Segment::Cartan;
    return g.root(g.root_of(gen)).positive ? Segment::Positive : Segment::Negative;
  }

  /// Re-expresses x (given in this converter's engine) under the triangular
  /// order R^- < I < R^+ and splits every basis key into its three segments.
  TriangularForm triangular_factor(const UElem& x)
  {
    const auto& g = engine_.spec();
    const GeneratorOrder tri = GeneratorOrder::triangular(g);
    BasisConverter* conv = this;
    if (!(engine_.order() == tri)) {
      if (!tri_engine_) {
        tri_engine_ = std::make_unique<Engine>(g, engine_.monoid(), tri);
        tri_converter_ = std::make_unique<BasisConverter>(*tri_engine_);
      }
      conv = tri_converter_.get();
    }
    UElem y;
    if (conv == this) {
      y = x;
    } else {
      for (const auto& [w, c] : x.terms()) {
        std::vector<Letter> letters;
        for (const auto& r : w) letters.insert(letters.end(), static_cast<std::size_t>(r.exp), r.letter);
        y.add_scaled(tri_engine_->normalize(letters), c);
      }
    }
    TriangularForm out;
    const DividedForm dy = conv->to_divided(y);
    for (const auto& [key, c] : dy.terms()) {
      TriangularTerm t;
      t.coef = c;
      int last = 0;
      for (const auto& f : key) {
        const int s = static_cast<int>(segment_of(f.gen));
        if (s < last) out.segmented = false;
        last = std::max(last, s);
        (s == 0 ? t.negative : s == 1 ? t.cartan : t.positive).push_back(f);
      }
      if (c.get_den() != 1) out.integral = false;
      out.terms.push_back(std::move(t));
    }
    return out;
  }

  /// Canonical PBW word of the leading term of a basis element.
  Word leading_word(const BasisKey& key) const
  {
    Word w;
    for (const auto& f : key)
      for (const auto& [a, n] : f.mult) w.push_back(Run{Letter{f.gen, a}, n});
    return w;
  }

 private:
  UElem factor_element(const BasisFactor& f)
  {
    if (engine_.spec().is_cartan(f.gen)) {
      UElem out;
      for (const auto& [mono, c] : p_poly(f.mult)) {
        Word w;
        for (const auto& [a, n] : mono) w.push_back(Run{Letter{f.gen, a}, n});
        out.add(w, c);
      }
      return out;
    }
    UElem x = UElem::one();
    Rational scale = 1;
    const bool is_odd = engine_.spec().odd(f.gen);
    for (const auto& [a, n] : f.mult) {
      if (is_odd && n > 1) throw std::invalid_argument("odd basis factor with multiplicity > 1");
      x = engine_.mul(x, engine_.power(Letter{f.gen, a}, n));
      scale /= Rational(factorial(n));
    }
    x *= scale;
    return x;
  }

  Engine& engine_;
  std::map<Multiset<Mono>, CartanPoly> p_cache_;
  std::map<Multiset<Mono>, std::vector<std::pair<Multiset<Mono>, Rational>>> mono_cache_;
  std::unique_ptr<Engine> tri_engine_;
  std::unique_ptr<BasisConverter> tri_converter_;
};

/// All Theorem 3.2 basis elements of degree <= d over a finite A, ordered by
/// degree and then key.
inline std::vector<BasisKey> enumerate_basis(const Engine& engine, int d)
{
  const auto& g = engine.spec();
  const auto elems = engine.monoid().elements();
  struct Slot {
    int gen;
    Mono mono;
    bool odd;
  };
  std::vector<Slot> slots;
  for (int gen : engine.order().sequence())
    for (const auto& m : elems) slots.push_back(Slot{gen, m, g.odd(gen)});

  std::vector<BasisKey> out;
  std::vector<int> mult(slots.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx == slots.size()) {
      BasisKey key;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mult[s] == 0) continue;
        if (key.empty() || key.back().gen != slots[s].gen) key.push_back(BasisFactor{slots[s].gen, {}});
        key.back().mult.add(slots[s].mono, mult[s]);
      }
      out.push_back(std::move(key));
      return;
    }
    const int cap = slots[idx].odd ? std::min(1, left) : left;
    for (int k = 0; k <= cap; ++k) {
      mult[idx] = k;
      rec(idx + 1, left - k);
    }
    mult[idx] = 0;
  };
  rec(0, d);
  std::stable_sort(out.begin(), out.end(),
                   [](const BasisKey& a, const BasisKey& b) { return basis_degree(a) < basis_degree(b); });
  return out;
}

/// Coefficients of q^0..q^d in prod_{even slots} (1-q)^{-1} prod_{odd slots} (1+q).
inline std::vector<Integer> basis_count_oracle(int even_slots, int odd_slots, int d)
{
  std::vector<Integer> poly(static_cast<std::size_t>(d + 1), 0);
  poly[0] = 1;
  for (int s = 0; s < odd_slots; ++s)
    for (int k = d; k >= 1; --k) poly[static_cast<std::size_t>(k)] += poly[static_cast<std::size_t>(k - 1)];
  for (int s = 0; s < even_slots; ++s)
    for (int k = 1; k <= d; ++k) poly[static_cast<std::size_t>(k)] += poly[static_cast<std::size_t>(k - 1)];
  return poly;
}

}  // namespace zform

#endif  // ZFORM_DIVIDED_HPP
