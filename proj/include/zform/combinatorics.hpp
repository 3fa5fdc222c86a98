#ifndef ZFORM_COMBINATORICS_HPP
#define ZFORM_COMBINATORICS_HPP

#include <gmpxx.h>

#include <cassert>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zform {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms (mpq_class(n, d) is not canonicalized by gmpxx).
inline Rational frac(const Integer& n, const Integer& d)
{
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Integer factorial(int n)
{
  assert(n >= 0);
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Falling-factorial binomial u(u-1)...(u-r+1)/r!, defined for every integer u.
/// binomial(u, r) = 0 for r < 0.
inline Integer binomial(const Integer& upper, int r)
{
  if (r < 0) return 0;
  Integer num = 1;
  for (int k = 0; k < r; ++k) num *= upper - k;
  return num / factorial(r);
}

inline Integer binomial(long upper, int r) { return binomial(Integer(upper), r); }

/// Finitely supported multiplicity function S -> Z>=0.
///
/// Only strictly positive multiplicities are stored; iteration follows the
/// ordering of T, so every enumeration below is deterministic.
template <class T>
class Multiset {
 public:
  using value_type = std::pair<const T, int>;
  using const_iterator = typename std::map<T, int>::const_iterator;

  Multiset() = default;
  Multiset(std::initializer_list<std::pair<T, int>> init)
  {
    for (const auto& [s, n] : init) add(s, n);
  }

  static Multiset single(const T& s, int n = 1)
  {
    Multiset m;
    m.add(s, n);
    return m;
  }

  int operator[](const T& s) const
  {
    auto it = counts_.find(s);
    return it == counts_.end() ? 0 : it->second;
  }

  void add(const T& s, int n = 1)
  {
    if (n == 0) return;
    int& c = counts_[s];
    c += n;
    if (c < 0) throw std::invalid_argument("Multiset: negative multiplicity");
    if (c == 0) counts_.erase(s);
  }

  /// |chi|
  int total() const
  {
    int t = 0;
    for (const auto& [s, n] : counts_) t += n;
    return t;
  }

  std::size_t support_size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  bool is_sub_of(const Multiset& other) const
  {
    for (const auto& [s, n] : counts_)
      if (other[s] < n) return false;
    return true;
  }

  Multiset& operator+=(const Multiset& o)
  {
    for (const auto& [s, n] : o.counts_) add(s, n);
    return *this;
  }
  Multiset& operator-=(const Multiset& o)
  {
    for (const auto& [s, n] : o.counts_) add(s, -n);
    return *this;
  }
  friend Multiset operator+(Multiset a, const Multiset& b) { return a += b; }
  friend Multiset operator-(Multiset a, const Multiset& b) { return a -= b; }

  /// n * chi
  friend Multiset operator*(int k, const Multiset& m)
  {
    Multiset r;
    if (k == 0) return r;
    for (const auto& [s, n] : m.counts_) r.add(s, k * n);
    return r;
  }

  const_iterator begin() const { return counts_.begin(); }
  const_iterator end() const { return counts_.end(); }

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.counts_ == b.counts_; }
  friend bool operator!=(const Multiset& a, const Multiset& b) { return !(a == b); }
  friend bool operator<(const Multiset& a, const Multiset& b) { return a.counts_ < b.counts_; }

 private:
  std::map<T, int> counts_;
};

/// m(psi) = |psi|! / prod psi(s)!
template <class T>
Integer multinomial(const Multiset<T>& psi)
{
  Integer r = factorial(psi.total());
  for (const auto& [s, n] : psi) r /= factorial(n);
  return r;
}

/// All psi <= chi, or only those with |psi| = k when k is given.
template <class T>
std::vector<Multiset<T>> enumerate_sub(const Multiset<T>& chi, std::optional<int> k = std::nullopt)
{
  std::vector<std::pair<T, int>> support(chi.begin(), chi.end());
  std::vector<Multiset<T>> out;
  Multiset<T> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int size) {
    if (k && size > *k) return;
    if (idx == support.size()) {
      if (!k || size == *k) out.push_back(cur);
      return;
    }
    const auto& [s, n] = support[idx];
    for (int c = 0; c <= n; ++c) {
      cur.add(s, c);
      rec(idx + 1, size + c);
      cur.add(s, -c);
    }
  };
  rec(0, 0);
  return out;
}

/// CS_r(chi): psi in F(F) with |psi| = r and sum_phi psi(phi) phi <= chi.
///
/// Nonzero phi are chosen by recursive descent over F(chi); the remaining
/// budget of r is placed on the empty multiset.
template <class T>
std::vector<Multiset<Multiset<T>>> enumerate_cs(const Multiset<T>& chi, int r)
{
  if (r < 0) throw std::invalid_argument("enumerate_cs: r < 0");
  std::vector<Multiset<T>> candidates;
  for (auto& phi : enumerate_sub(chi))
    if (!phi.empty()) candidates.push_back(std::move(phi));

  std::vector<Multiset<Multiset<T>>> out;
  Multiset<Multiset<T>> cur;
  Multiset<T> used;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int count) {
    if (idx == candidates.size()) {
      auto psi = cur;
      psi.add(Multiset<T>{}, r - count);
      out.push_back(std::move(psi));
      return;
    }
    rec(idx + 1, count);
    const auto& phi = candidates[idx];
    int c = 0;
    while (count + c < r) {
      used += phi;
      if (!used.is_sub_of(chi)) {
        used -= phi;
        break;
      }
      ++c;
      cur.add(phi, 1);
      rec(idx + 1, count + c);
    }
    if (c > 0) {
      used -= c * phi;
      cur.add(phi, -c);
    }
  };
  rec(0, 0);
  return out;
}

/// CP_k(j): lambda over Z>=0 with |lambda| = k and sum lambda(m) m = j.
inline std::vector<Multiset<int>> enumerate_cp(int j, int k)
{
  if (j < 0 || k < 0) throw std::invalid_argument("enumerate_cp: negative argument");
  std::vector<Multiset<int>> out;
  std::vector<int> parts;
  // positive parts in non-increasing order, at most k of them
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Multiset<int> lam;
      for (int p : parts) lam.add(p);
      lam.add(0, k - static_cast<int>(parts.size()));
      out.push_back(std::move(lam));
      return;
    }
    if (static_cast<int>(parts.size()) == k) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(j, j);
  return out;
}

/// |psi1| binom(|psi1|-1+d, |psi1|) m(psi1)
///   == d * sum_{0 != psi <= psi1} m(psi) binom(|psi1|-|psi|-1+d, |psi1|-|psi|) m(psi1-psi)
template <class T>
bool verify_comb_identity(const Multiset<T>& psi1, int d)
{
  const int n = psi1.total();
  const Integer lhs = Integer(n) * binomial(Integer(n - 1 + d), n) * multinomial(psi1);
  Integer sum = 0;
  for (const auto& psi : enumerate_sub(psi1)) {
    if (psi.empty()) continue;
    const int rest = n - psi.total();
    sum += multinomial(psi) * binomial(Integer(rest - 1 + d), rest) * multinomial(psi1 - psi);
  }
  return lhs == Integer(d) * sum;
}

}  // namespace zform

#endif  // ZFORM_COMBINATORICS_HPP
