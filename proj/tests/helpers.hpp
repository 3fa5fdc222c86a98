#ifndef ZFORM_TEST_HELPERS_HPP
#define ZFORM_TEST_HELPERS_HPP

#include <zform/presets.hpp>
#include <zform/enveloping.hpp>

#include <random>
#include <string>
#include <vector>

namespace zform::test {

/// Letter for root label `label` or Cartan index "h1".."hl", with A-part t^k.
inline Letter L(const Engine& e, const std::string& label, int k = 0)
{
  Mono m = e.monoid().power(k);
  if (label.size() >= 2 && label[0] == 'h' && std::isdigit(static_cast<unsigned char>(label[1])))
    return e.cartan_letter(std::stoi(label.substr(1)) - 1, m);
  auto r = e.spec().find_root(label);
  if (!r) throw std::invalid_argument("no root " + label);
  return e.root_letter(*r, m);
}

inline UElem U(const Engine& e, const std::string& label, int k = 0) { return e.from_letter(L(e, label, k)); }

inline Word W(std::initializer_list<std::pair<Letter, int>> runs)
{
  Word w;
  for (const auto& [l, n] : runs) w.push_back(Run{l, n});
  return w;
}

/// Uniformly random letter over all generators and the A-window [0, max_k].
inline Letter random_letter(const Engine& e, std::mt19937_64& rng, int max_k)
{
  const int gen = static_cast<int>(rng() % static_cast<unsigned>(e.spec().num_symbols()));
  const int k = static_cast<int>(rng() % static_cast<unsigned>(max_k + 1));
  return Letter{gen, e.monoid().power(k)};
}

}  // namespace zform::test

#endif
