#ifndef ZFORM_VERIFIER_HPP
#define ZFORM_VERIFIER_HPP

#include "expression.hpp"
#include "presets.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <thread>

namespace zform {

enum class Verdict { Pass, Fail, Inapplicable };

inline const char* verdict_name(Verdict v)
{
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inapplicable: return "INAPPLICABLE";
  }
  return "?";
}

/// One executed claim. `diffs` lists, on failure, the differing basis words
/// with both coefficients.
struct CheckReport {
  std::string id;
  std::string algebra;
  std::string params;
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> diffs;
  std::string note;
  double wall_ms = 0;
};

/// `CHECK id=... algebra=... params="..." verdict=...` plus indented DIFF lines.
inline std::string format_report(const CheckReport& r, bool timing = false)
{
  std::ostringstream os;
  os << "CHECK id=" << r.id << " algebra=" << r.algebra << " params=\"" << r.params << "\" verdict="
     << verdict_name(r.verdict);
  if (!r.note.empty()) os << " note=\"" << r.note << "\"";
  if (timing) os << " wall_ms=" << static_cast<long long>(r.wall_ms);
  os << "\n";
  for (const auto& d : r.diffs) os << "  DIFF " << d << "\n";
  return os.str();
}

struct Tally {
  int pass = 0, fail = 0, inapplicable = 0;
  void add(const CheckReport& r)
  {
    if (r.verdict == Verdict::Pass) ++pass;
    else if (r.verdict == Verdict::Fail) ++fail;
    else ++inapplicable;
  }
  std::string summary() const
  {
    return "SUMMARY pass=" + std::to_string(pass) + " fail=" + std::to_string(fail) +
           " inapplicable=" + std::to_string(inapplicable) + "\n";
  }
};

/// Word-by-word differences of two elements (at most `limit` lines).
inline std::vector<std::string> diff_lines(const Engine& e, const UElem& lhs, const UElem& rhs, std::size_t limit = 8)
{
  std::vector<std::string> out;
  const UElem d = lhs - rhs;
  for (const auto& [w, c] : ordered_terms(e, d)) {
    if (out.size() == limit) {
      out.push_back("... " + std::to_string(d.size() - limit) + " more");
      break;
    }
    out.push_back("word=\"" + format_word(e.spec(), e.monoid(), w) + "\" lhs=" + lhs.coefficient(w).get_str() +
                  " rhs=" + rhs.coefficient(w).get_str());
  }
  return out;
}

// ------------------------------------------------------------------ signs

using SignMap = std::map<std::string, int>;

struct SignSolution {
  bool ok = false;
  std::string why;
  SignMap signs;  ///< every determined slot (known and newly solved)
};

/// Solves lhs = fixed + sum eps_k T_k for eps over the slots not in `known`,
/// by exact Gaussian elimination. Requires a unique solution on the slots with
/// T_k != 0, with values in {+1, -1} that agree with the paper's fixed signs.
inline SignSolution solve_signs(const UElem& lhs, const SignTemplate& t, const SignMap& known)
{
  SignSolution sol;
  UElem target = lhs - t.fixed;
  std::vector<std::size_t> unknown;
  for (std::size_t k = 0; k < t.slots.size(); ++k) {
    const auto& slot = t.slots[k];
    if (slot.term.is_zero()) continue;
    if (auto it = known.find(slot.label); it != known.end()) {
      target.add_scaled(slot.term, -it->second);
      sol.signs[slot.label] = it->second;
    } else {
      unknown.push_back(k);
    }
  }
  std::set<Word> words;
  for (const auto& [w, c] : target.terms()) words.insert(w);
  for (auto k : unknown)
    for (const auto& [w, c] : t.slots[k].term.terms()) words.insert(w);
  const std::size_t n = unknown.size();
  std::vector<std::vector<Rational>> rows;
  for (const auto& w : words) {
    std::vector<Rational> row(n + 1);
    for (std::size_t c = 0; c < n; ++c) row[c] = t.slots[unknown[c]].term.coefficient(w);
    row[n] = target.coefficient(w);
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Rational inv = Rational(1) / rows[rank][c];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == rank || rows[q][c] == 0) continue;
      const Rational f = rows[q][c];
      for (std::size_t k = c; k <= n; ++k) rows[q][k] -= f * rows[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t q = rank; q < rows.size(); ++q)
    if (rows[q][n] != 0) {
      sol.why = "no sign assignment makes LHS - RHS vanish";
      return sol;
    }
  if (rank < n) {
    sol.why = "sign assignment not unique";
    return sol;
  }
  for (std::size_t q = 0; q < rank; ++q) {
    const auto& slot = t.slots[unknown[pivot_col[q]]];
    const Rational v = rows[q][n];
    if (v != 1 && v != -1) {
      sol.why = "slot " + slot.label + " solves to " + v.get_str() + ", not +-1";
      return sol;
    }
    sol.signs[slot.label] = v == 1 ? 1 : -1;
  }
  for (const auto& slot : t.slots) {
    auto it = sol.signs.find(slot.label);
    if (slot.expected && it != sol.signs.end() && it->second != *slot.expected) {
      sol.why = "slot " + slot.label + " has sign " + std::to_string(it->second) + ", paper fixes " +
                std::to_string(*slot.expected);
      return sol;
    }
  }
  sol.ok = true;
  return sol;
}

inline std::string format_signs(const SignMap& s)
{
  std::string out = "signs=[";
  bool first = true;
  for (const auto& [label, v] : s) {
    out += (first ? "" : "; ") + label + ":" + (v > 0 ? "+1" : "-1");
    first = false;
  }
  return out + "]";
}

// --------------------------------------------------------------- identities

/// Lemma 5.2 for one (i, chi, phi).
inline CheckReport verify_lemma_5_2(Garland& gl, int i, const Multiset<Mono>& chi, const Multiset<Mono>& phi)
{
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.id = "L5.2";
  rep.algebra = gl.spec().name;
  IdentityParams p;
  p.i = i, p.chi = chi, p.phi = phi;
  rep.params = gl.describe("L5.2", p);
  Integer k = 1;
  const Multiset<Mono> sum = chi + phi;
  for (const auto& [a, n] : sum) k *= binomial(Integer(n), chi[a]);
  const UElem u = gl.engine().mul(gl.p_cartan(i, chi), gl.p_cartan(i, phi)) - gl.p_cartan(i, sum) * Rational(k);
  const int bound = chi.total() + phi.total();
  std::map<std::vector<Multiset<Mono>>, Rational> conv;
  try {
    conv = gl.converter().p_basis_convert(u);
  } catch (const std::exception& e) {
    rep.verdict = Verdict::Fail;
    rep.diffs.push_back(std::string("remainder is not in U(h (x) A): ") + e.what());
  }
  for (const auto& [key, c] : conv) {
    int deg = 0;
    std::string name;
    bool other = false;
    for (std::size_t j = 0; j < key.size(); ++j) {
      if (key[j].empty()) continue;
      deg += key[j].total();
      if (static_cast<int>(j) != i) other = true;
      name += (name.empty() ? "" : " ") + std::string("p[") + std::to_string(j + 1) + "]{" +
              format_multiset(key[j], gl.monoid()) + "}";
    }
    if (name.empty()) name = "1";
    std::string why;
    if (other) why = "outside the p_i-products";
    else if (deg >= bound) why = "degree " + std::to_string(deg) + " >= " + std::to_string(bound);
    else if (c.get_den() != 1) why = "non-integer coefficient";
    if (!why.empty()) {
      rep.verdict = Verdict::Fail;
      rep.diffs.push_back("term=\"" + name + "\" coef=" + c.get_str() + " " + why);
    }
  }
  rep.note = "leading=" + k.get_str() + " remainder_terms=" + std::to_string(conv.size());
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Runs one identity instance. For sign-template identities, `signs` (when
/// given) supplies known signs and receives the solved ones.
inline CheckReport verify_identity(Garland& gl, const std::string& id, const IdentityParams& p,
                                   SignMap* signs = nullptr)
{
  const auto t0 = std::chrono::steady_clock::now();
  if (id == "L5.2") {
    if (!p.i || *p.i < 0 || *p.i >= gl.spec().rank) {
      CheckReport rep{id, gl.spec().name, gl.describe(id, p), Verdict::Inapplicable, {}, "missing Cartan index i", 0};
      return rep;
    }
    return verify_lemma_5_2(gl, *p.i, p.chi, p.phi);
  }
  CheckReport rep;
  rep.id = id;
  rep.algebra = gl.spec().name;
  rep.params = gl.describe(id, p);
  auto finish = [&]() {
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  };
  if (id == "comb") {
    rep.verdict = verify_comb_identity(p.chi, p.d) ? Verdict::Pass : Verdict::Fail;
    return finish();
  }
  try {
    IdentityInstance inst = gl.build(id, p);
    rep.note = inst.note;
    if (id == "R2.3") rep.note = (rep.note.empty() ? "" : rep.note);
    if (inst.tmpl) {
      const SignMap known = signs ? *signs : SignMap{};
      SignSolution sol = solve_signs(inst.lhs, *inst.tmpl, known);
      if (sol.ok) {
        rep.verdict = Verdict::Pass;
        if (signs)
          for (const auto& [k, v] : sol.signs) (*signs)[k] = v;
        rep.note += (rep.note.empty() ? "" : " ") + format_signs(sol.signs);
      } else {
        rep.verdict = Verdict::Fail;
        rep.diffs.push_back(sol.why);
        UElem rhs = inst.tmpl->fixed;
        for (const auto& slot : inst.tmpl->slots) {
          auto it = known.find(slot.label);
          rhs.add_scaled(slot.term, it != known.end() ? it->second : slot.expected.value_or(1));
        }
        for (auto& d : diff_lines(gl.engine(), inst.lhs, rhs)) rep.diffs.push_back(std::move(d));
      }
    } else if (inst.lhs == inst.rhs) {
      rep.verdict = Verdict::Pass;
    } else {
      rep.verdict = Verdict::Fail;
      rep.diffs = diff_lines(gl.engine(), inst.lhs, inst.rhs);
    }
  } catch (const Inapplicable& e) {
    rep.verdict = Verdict::Inapplicable;
    rep.note = e.what();
  } catch (const std::runtime_error& e) {
    rep.verdict = Verdict::Fail;
    rep.diffs.push_back(e.what());
  }
  return finish();
}

// ------------------------------------------------------------------- sweeps

/// Sweep bounds plus optional pins; a pinned field replaces its range.
struct SweepSpec {
  int rs = 3;          ///< max r, s (identities) / max r, s >= 1 (Lemma 5.1)
  int chi = 3;         ///< max multiset size
  int m = 3;           ///< max m
  int mono_degree = 3; ///< A-window for infinite A
  std::optional<int> alpha, beta, i, j, r, s, m_pin, d, sign;
  std::optional<Mono> a, b;
  std::optional<Multiset<Mono>> chi_pin, phi_pin;
  bool corrected = false;
};

namespace detail {

inline std::vector<Mono> monos(const MonoidBasis& mo, int deg)
{
  return mo.is_finite() ? mo.elements() : mo.elements_up_to(deg);
}

inline std::vector<Multiset<Mono>> multisets(const std::vector<Mono>& support, int lo, int hi)
{
  std::vector<Multiset<Mono>> out;
  Multiset<Mono> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int size) {
    if (idx == support.size()) {
      if (size >= lo) out.push_back(cur);
      return;
    }
    for (int c = 0; size + c <= hi; ++c) {
      cur.add(support[idx], c);
      rec(idx + 1, size + c);
      cur.add(support[idx], -c);
    }
  };
  rec(0, 0);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.total() < y.total(); });
  return out;
}

inline std::vector<int> ints(const std::optional<int>& pin, int lo, int hi)
{
  if (pin) return {*pin};
  std::vector<int> out;
  for (int k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

}  // namespace detail

/// Parameter instances of `id` over the sweep. Unpinned roots range only over
/// roots meeting the identity's parity/shape hypotheses, so an empty result
/// means the identity is inapplicable to the algebra.
inline std::vector<IdentityParams> sweep_params(const Garland& gl, const std::string& id, const SweepSpec& sw)
{
  const auto& g = gl.spec();
  const auto ms = detail::monos(gl.monoid(), sw.mono_degree);
  const std::vector<Mono> as = sw.a ? std::vector<Mono>{*sw.a} : ms;
  const std::vector<Mono> bs = sw.b ? std::vector<Mono>{*sw.b} : ms;
  auto chis = [&](const std::optional<Multiset<Mono>>& pin, int lo = 0) {
    return pin ? std::vector<Multiset<Mono>>{*pin} : detail::multisets(ms, lo, sw.chi);
  };
  auto roots = [&](const std::optional<int>& pin, auto pred) {
    std::vector<int> out;
    if (pin) return std::vector<int>{*pin};
    for (int r = 0; r < g.num_roots(); ++r)
      if (pred(r)) out.push_back(r);
    return out;
  };
  auto even = [&](int r) { return !g.root(r).odd; };
  auto odd = [&](int r) { return g.root(r).odd; };
  auto any = [](int) { return true; };
  auto doubles = [&](int r) { return g.root(r).odd && g.root_combination(2, r, 0, r).has_value(); };
  const auto cartans = detail::ints(sw.i, 0, g.rank - 1);

  std::vector<IdentityParams> out;
  IdentityParams p;
  p.corrected = sw.corrected;
  if (id == "4.1") {
    for (int i : cartans)
      for (int j : detail::ints(sw.j, 0, g.rank - 1))
        for (const auto& chi : chis(sw.chi_pin))
          for (const auto& phi : chis(sw.phi_pin)) {
            p.i = i, p.j = j, p.chi = chi, p.phi = phi;
            out.push_back(p);
          }
  } else if (id == "4.2") {
    for (int beta : roots(sw.alpha, even))
      for (const auto& b : bs)
        for (int r : detail::ints(sw.r, 0, sw.rs))
          for (int s : detail::ints(sw.s, 0, sw.rs)) {
            p.alpha = beta, p.b = b, p.r = r, p.s = s;
            out.push_back(p);
          }
  } else if (id == "4.3") {
    for (int alpha : roots(sw.alpha, even))
      for (const auto& a : as)
        for (const auto& b : bs)
          for (int r : detail::ints(sw.r, 0, sw.rs))
            for (int s : detail::ints(sw.s, 0, sw.rs)) {
              p.alpha = alpha, p.a = a, p.b = b, p.r = r, p.s = s;
              out.push_back(p);
            }
  } else if (id == "4.4" || id == "4.5") {
    for (int alpha : roots(sw.alpha, even))
      for (int i : cartans)
        for (const auto& b : bs)
          for (int r : detail::ints(sw.r, 0, sw.rs))
            for (const auto& chi : chis(sw.chi_pin)) {
              p.alpha = alpha, p.i = i, p.b = b, p.r = r, p.chi = chi;
              out.push_back(p);
            }
  } else if (id == "4.6" || id == "L4.4a" || id == "L4.4b" || id == "L4.4c") {
    for (int alpha : roots(sw.alpha, even))
      for (int beta : roots(sw.beta, even)) {
        const std::string shape = lemma_4_4_shape(g, alpha, beta);
        const bool ok = id == "4.6" ? !shape.empty()
                        : id == "L4.4a" ? shape == "A2"
                        : id == "L4.4b" ? shape == "B2"
                                        : shape == "G2";
        if (!ok && !(sw.alpha && sw.beta)) continue;
        for (int r : detail::ints(sw.r, 0, sw.rs))
          for (int s : detail::ints(sw.s, 0, sw.rs))
            for (const auto& a : as)
              for (const auto& b : bs) {
                p.alpha = alpha, p.beta = beta, p.a = a, p.b = b, p.r = r, p.s = s;
                out.push_back(p);
              }
      }
  } else if (id == "L4.3" || id == "4.7") {
    for (int del : roots(sw.alpha, id == "4.7" ? std::function<bool(int)>(odd) : std::function<bool(int)>(any)))
      for (int i : cartans)
        for (const auto& b : (id == "4.7" ? as : bs))
          for (const auto& chi : chis(sw.chi_pin)) {
            p.alpha = del, p.i = i, p.chi = chi;
            (id == "4.7" ? p.a : p.b) = b;
            out.push_back(p);
          }
  } else if (id == "4.8") {
    for (int gam : roots(sw.alpha, doubles))
      for (const auto& a : as) {
        p.alpha = gam, p.a = a;
        out.push_back(p);
      }
  } else if (id == "4.9") {
    for (int gam : roots(sw.alpha, odd))
      for (const auto& a : as)
        for (const auto& b : bs) {
          p.alpha = gam, p.a = a, p.b = b;
          out.push_back(p);
        }
  } else if (id == "4.10") {
    for (int gam : roots(sw.alpha, odd))
      for (int del : roots(sw.beta, odd)) {
        if (!(sw.alpha && sw.beta) && g.root(gam).negative == del) continue;
        for (const auto& a : as)
          for (const auto& b : bs) {
            p.alpha = gam, p.beta = del, p.a = a, p.b = b;
            out.push_back(p);
          }
      }
  } else if (id == "4.11") {
    for (int gam : roots(sw.alpha, [&](int r) { return doubles(r) && g.root(r).positive; }))
      for (int sign : sw.sign ? std::vector<int>{*sw.sign} : std::vector<int>{1, -1})
        for (int m : detail::ints(sw.m_pin, 0, sw.m))
          for (const auto& a : as)
            for (const auto& b : bs) {
              p.alpha = gam, p.sign = sign, p.m = m, p.a = a, p.b = b;
              out.push_back(p);
            }
  } else if (id == "4.12") {
    for (int alpha : roots(sw.alpha, even))
      for (int gam : roots(sw.beta, odd)) {
        const bool excluded = g.root_combination(2, gam, 0, gam) == std::optional<int>(alpha) ||
                              g.root_combination(-2, gam, 0, gam) == std::optional<int>(alpha);
        if (excluded && !(sw.alpha && sw.beta)) continue;
        for (int m : detail::ints(sw.m_pin, 0, sw.m))
          for (const auto& a : as)
            for (const auto& b : bs) {
              p.alpha = alpha, p.beta = gam, p.m = m, p.a = a, p.b = b;
              out.push_back(p);
            }
      }
  } else if (id == "L5.2") {
    for (int i : cartans)
      for (const auto& chi : chis(sw.chi_pin))
        for (const auto& phi : chis(sw.phi_pin)) {
          p.i = i, p.chi = chi, p.phi = phi;
          out.push_back(p);
        }
  } else if (id == "comb") {
    // supports of size <= 3 over abstract elements; |psi1| <= 6
    const MonoidBasis poly = MonoidBasis::poly();
    const std::vector<Mono> support{poly.power(0), poly.power(1), poly.power(2)};
    const auto psis = sw.chi_pin ? std::vector<Multiset<Mono>>{*sw.chi_pin} : detail::multisets(support, 1, 6);
    for (const auto& psi : psis)
      for (int d : detail::ints(sw.d, -5, 5)) {
        p.chi = psi, p.d = d;
        out.push_back(p);
      }
  } else if (id == "R2.3") {
    for (int alpha : roots(sw.alpha, even))
      for (const auto& psi : chis(sw.chi_pin)) {
        p.alpha = alpha, p.chi = psi;
        out.push_back(p);
      }
  } else {
    throw std::invalid_argument("unknown identity id '" + id + "'");
  }
  return out;
}

/// Every instance of `id` over the sweep; a single INAPPLICABLE record when
/// no parameters meet the hypotheses. Sign-template identities share one
/// solved sign assignment per (alpha, beta, r, s) across all (a, b).
inline std::vector<CheckReport> verify_sweep(Garland& gl, const std::string& id, const SweepSpec& sw)
{
  std::vector<CheckReport> out;
  const auto params = sweep_params(gl, id, sw);
  if (params.empty()) {
    CheckReport rep;
    rep.id = id;
    rep.algebra = gl.spec().name;
    rep.params = "sweep";
    rep.verdict = Verdict::Inapplicable;
    rep.note = "no parameters in " + gl.spec().name + " satisfy the hypotheses of " + id;
    out.push_back(rep);
    return out;
  }
  std::map<std::tuple<int, int, int, int>, SignMap> signs;
  const bool templated = id == "4.6" || id.rfind("L4.4", 0) == 0;
  for (const auto& p : params) {
    SignMap* sm = templated ? &signs[{p.alpha.value_or(-1), p.beta.value_or(-1), p.r, p.s}] : nullptr;
    out.push_back(verify_identity(gl, id, p, sm));
  }
  return out;
}

// ------------------------------------------------------------ Lemma 5.1

/// Lemma 5.1 items (1)-(7): the super-bracket has degree below the stated
/// bound; items (1), (2) also have integral DividedForms.
inline std::vector<CheckReport> verify_degree_bounds(Garland& gl, const SweepSpec& sw)
{
  Engine& e = gl.engine();
  const auto& g = gl.spec();
  const auto& mo = gl.monoid();
  const auto ms = detail::monos(mo, sw.mono_degree);
  std::vector<CheckReport> out;
  auto check = [&](int item, const std::string& params, const UElem& x, const UElem& y, int bound, bool integral) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    rep.id = "L5.1(" + std::to_string(item) + ")";
    rep.algebra = g.name;
    rep.params = params;
    const UElem br = e.supercommutator(x, y);
    const int deg = degree(br);
    rep.note = "degree=" + (br.is_zero() ? std::string("-inf") : std::to_string(deg)) + " bound=" + std::to_string(bound);
    if (deg >= bound) {
      rep.verdict = Verdict::Fail;
      rep.diffs.push_back("degree " + std::to_string(deg) + " is not < " + std::to_string(bound));
    }
    if (integral) {
      const DividedForm dv = gl.converter().to_divided(br);
      if (!is_integral(dv)) {
        rep.verdict = Verdict::Fail;
        rep.diffs.push_back("bracket is not in the Z-span of B");
      }
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(rep));
  };
  auto lab = [&](int r) { return g.root(r).label; };
  auto fm = [&](const Mono& m) { return mo.format(m); };
  const auto rs = detail::ints(std::nullopt, 1, sw.rs);
  const auto chis = detail::multisets(ms, 1, sw.chi);

  for (int al = 0; al < g.num_roots(); ++al) {
    if (g.root(al).odd) continue;
    const int neg = g.root(al).negative;
    for (const auto& a : ms)
      for (const auto& b : ms)
        for (int r : rs)
          for (int s : rs)
            check(1, "alpha=" + lab(al) + " a=" + fm(a) + " b=" + fm(b) + " r=" + std::to_string(r) + " s=" + std::to_string(s),
                  gl.dpow_root(al, a, r), gl.dpow_root(neg, b, s), r + s, true);
  }
  for (int be = 0; be < g.num_roots(); ++be) {
    if (g.root(be).odd) continue;
    for (int i = 0; i < g.rank; ++i)
      for (const auto& a : ms)
        for (int r : rs)
          for (const auto& chi : chis)
            check(2, "beta=" + lab(be) + " i=" + std::to_string(i + 1) + " a=" + fm(a) + " r=" + std::to_string(r) +
                         " chi={" + format_multiset(chi, mo) + "}",
                  gl.dpow_root(be, a, r), gl.p_cartan(i, chi), r + chi.total(), true);
  }
  for (int be = 0; be < g.num_roots(); ++be)
    for (int ga = 0; ga < g.num_roots(); ++ga) {
      if (g.root(be).odd || g.root(ga).odd || g.root(be).negative == ga) continue;
      for (const auto& a : ms)
        for (const auto& b : ms)
          for (int r : rs)
            for (int s : rs)
              check(3, "beta=" + lab(be) + " gamma=" + lab(ga) + " a=" + fm(a) + " b=" + fm(b) + " r=" + std::to_string(r) +
                           " s=" + std::to_string(s),
                    gl.dpow_root(be, a, r), gl.dpow_root(ga, b, s), r + s, false);
    }
  for (int de = 0; de < g.num_roots(); ++de) {
    if (!g.root(de).odd) continue;
    for (int i = 0; i < g.rank; ++i)
      for (const auto& a : ms)
        for (const auto& chi : chis)
          check(4, "delta=" + lab(de) + " i=" + std::to_string(i + 1) + " a=" + fm(a) + " chi={" + format_multiset(chi, mo) + "}",
                gl.dpow_root(de, a, 1), gl.p_cartan(i, chi), chi.total() + 1, false);
  }
  for (int be = 0; be < g.num_roots(); ++be)
    for (int de = 0; de < g.num_roots(); ++de) {
      if (g.root(be).odd || !g.root(de).odd) continue;
      for (const auto& a : ms)
        for (const auto& b : ms)
          for (int r : rs)
            check(5, "beta=" + lab(be) + " delta=" + lab(de) + " a=" + fm(a) + " b=" + fm(b) + " r=" + std::to_string(r),
                  gl.dpow_root(be, a, r), gl.dpow_root(de, b, 1), r + 1, false);
    }
  for (int de = 0; de < g.num_roots(); ++de)
    for (int ze = 0; ze < g.num_roots(); ++ze) {
      if (!g.root(de).odd || !g.root(ze).odd) continue;
      for (const auto& a : ms)
        for (const auto& b : ms)
          check(6, "delta=" + lab(de) + " zeta=" + lab(ze) + " a=" + fm(a) + " b=" + fm(b), gl.dpow_root(de, a, 1),
                gl.dpow_root(ze, b, 1), 2, false);
    }
  for (int ga = 0; ga < g.num_roots(); ++ga) {
    if (!g.root(ga).odd) continue;
    auto two = g.root_combination(-2, ga, 0, ga);  // x_{+-gamma} against x_{-+2gamma}
    if (!two) continue;
    for (const auto& a : ms)
      for (const auto& b : ms)
        for (int m : detail::ints(std::nullopt, 1, sw.m))
          check(7, "gamma=" + lab(ga) + " a=" + fm(a) + " b=" + fm(b) + " m=" + std::to_string(m), gl.dpow_root(ga, a, 1),
                gl.dpow_root(*two, b, m), m + 1, false);
  }
  for (int item = 1; item <= 7; ++item) {
    const std::string id = "L5.1(" + std::to_string(item) + ")";
    if (std::none_of(out.begin(), out.end(), [&](const CheckReport& r) { return r.id == id; })) {
      CheckReport rep;
      rep.id = id;
      rep.algebra = g.name;
      rep.params = "sweep";
      rep.verdict = Verdict::Inapplicable;
      rep.note = "no root pairs of the required parity in " + g.name;
      out.push_back(rep);
    }
  }
  return out;
}

// -------------------------------------------------------------- integrality

/// One Def 3.1 generator: (x_alpha (x) b)^(s) for even alpha, x_gamma (x) c
/// for odd gamma, p_i(chi).
struct Def31Generator {
  enum Kind { EvenRoot, OddRoot, Cartan } kind = EvenRoot;
  int index = 0;  ///< root index or Cartan index
  Mono mono{};
  int n = 1;
  Multiset<Mono> chi;

  UElem eval(Garland& gl) const
  {
    switch (kind) {
      case EvenRoot: return gl.dpow_root(index, mono, n);
      case OddRoot: return gl.dpow_root(index, mono, 1);
      case Cartan: return gl.p_cartan(index, chi);
    }
    return {};
  }
  std::string format(const SuperAlgebraSpec& g, const MonoidBasis& mo) const
  {
    switch (kind) {
      case EvenRoot: return "x[" + g.root(index).label + "]{" + mo.format(mono) + "}^(" + std::to_string(n) + ")";
      case OddRoot: return "x[" + g.root(index).label + "]{" + mo.format(mono) + "}";
      case Cartan: return "p[" + std::to_string(index + 1) + "]{" + format_multiset(chi, mo) + "}";
    }
    return {};
  }
};

/// Seeded random products of 1..n Def 3.1 generators (even divided powers up
/// to 2, p_i(chi) with |chi| <= 2).
inline std::vector<std::vector<Def31Generator>> random_products(const SuperAlgebraSpec& g, const MonoidBasis& mo,
                                                                int n, int trials, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  const auto ms = detail::monos(mo, 2);
  auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  std::vector<std::vector<Def31Generator>> out;
  for (int t = 0; t < trials; ++t) {
    const int len = 1 + static_cast<int>(pick(static_cast<std::size_t>(n)));
    std::vector<Def31Generator> prod;
    for (int k = 0; k < len; ++k) {
      Def31Generator gen;
      const std::size_t slot = pick(static_cast<std::size_t>(g.num_roots() + g.rank));
      if (slot < static_cast<std::size_t>(g.num_roots())) {
        gen.index = static_cast<int>(slot);
        gen.kind = g.root(gen.index).odd ? Def31Generator::OddRoot : Def31Generator::EvenRoot;
        gen.mono = ms[pick(ms.size())];
        gen.n = gen.kind == Def31Generator::EvenRoot ? 1 + static_cast<int>(pick(2)) : 1;
      } else {
        gen.kind = Def31Generator::Cartan;
        gen.index = static_cast<int>(slot) - g.num_roots();
        const int size = 1 + static_cast<int>(pick(2));
        for (int q = 0; q < size; ++q) gen.chi.add(ms[pick(ms.size())]);
      }
      prod.push_back(std::move(gen));
    }
    out.push_back(std::move(prod));
  }
  return out;
}

/// Theorem 3.2 (spanning) and Corollary 5.3: each random product is integral
/// under every given order, and factors through B^- B^0 B^+ with integer
/// coefficients. Produces one record per (order) and one triangular record.
inline std::vector<CheckReport> verify_integrality(const SuperAlgebraSpec& g, const MonoidBasis& mo,
                                                   const std::vector<std::pair<std::string, GeneratorOrder>>& orders,
                                                   int n, int trials, std::uint64_t seed)
{
  const auto products = random_products(g, mo, n, trials, seed);
  const std::string params = "monoid=" + mo.name() + " generators<=" + std::to_string(n) + " trials=" +
                             std::to_string(trials) + " seed=" + std::to_string(seed);
  std::vector<CheckReport> out;
  auto text = [&](const std::vector<Def31Generator>& prod) {
    std::string s;
    for (const auto& f : prod) s += (s.empty() ? "" : " ") + f.format(g, mo);
    return s;
  };
  std::vector<bool> first_integral;
  for (std::size_t oi = 0; oi < orders.size(); ++oi) {
    const auto t0 = std::chrono::steady_clock::now();
    Engine e(g, mo, orders[oi].second);
    Garland gl(e);
    CheckReport rep{"integrality", g.name, params + " order=" + orders[oi].first, Verdict::Pass, {}, {}, 0};
    CheckReport tri{"triangular", g.name, params + " order=" + orders[oi].first, Verdict::Pass, {}, {}, 0};
    int ok = 0, seg = 0;
    for (std::size_t t = 0; t < products.size(); ++t) {
      UElem x = UElem::one();
      for (const auto& f : products[t]) x = e.mul(x, f.eval(gl));
      const bool integral = is_integral(gl.converter().to_divided(x));
      if (integral) ++ok;
      else if (rep.diffs.size() < 5) rep.diffs.push_back("not integral: " + text(products[t]));
      if (oi == 0) first_integral.push_back(integral);
      else if (first_integral[t] != integral && rep.diffs.size() < 5)
        rep.diffs.push_back("membership differs from order " + orders[0].first + ": " + text(products[t]));
      if (oi == 0) {
        const TriangularForm tf = gl.converter().triangular_factor(x);
        if (tf.integral && tf.segmented) ++seg;
        else if (tri.diffs.size() < 5)
          tri.diffs.push_back(std::string(tf.segmented ? "non-integer coefficient" : "unsegmented key") + ": " +
                              text(products[t]));
      }
    }
    if (!rep.diffs.empty()) rep.verdict = Verdict::Fail;
    rep.note = "integral=" + std::to_string(ok) + "/" + std::to_string(products.size());
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(rep));
    if (oi == 0) {
      if (!tri.diffs.empty()) tri.verdict = Verdict::Fail;
      tri.params = params;
      tri.note = "factored=" + std::to_string(seg) + "/" + std::to_string(products.size());
      out.push_back(std::move(tri));
    }
  }
  return out;
}

// ------------------------------------------------------------- basis counts

/// True iff the order lists all negative roots, then I, then positive roots.
inline bool is_triangular_like(const Engine& e)
{
  int last = 0;
  for (int s : e.order().sequence()) {
    const auto& g = e.spec();
    const int seg = g.is_cartan(s) ? 1 : g.root(g.root_of(s)).positive ? 2 : 0;
    if (seg < last) return false;
    last = seg;
  }
  return true;
}

/// Theorem 3.2 independence + tensor decomposition: per-degree counts of
/// enumerate_basis equal the generating-function oracle; leading words are
/// distinct; under a triangular-like order the B^-, B^0, B^+ counts convolve
/// to the total.
inline CheckReport verify_basis_counts(const Engine& e, int d)
{
  const auto t0 = std::chrono::steady_clock::now();
  const auto& g = e.spec();
  CheckReport rep{"basis-counts", g.name, "monoid=" + e.monoid().name() + " degree<=" + std::to_string(d),
                  Verdict::Pass, {}, {}, 0};
  const auto keys = enumerate_basis(e, d);
  const int nb = static_cast<int>(e.monoid().elements().size());
  int even = g.rank, odd = 0;
  for (int r = 0; r < g.num_roots(); ++r) (g.root(r).odd ? odd : even) += 1;
  const auto oracle = basis_count_oracle(even * nb, odd * nb, d);
  std::vector<Integer> counts(static_cast<std::size_t>(d + 1), 0);
  std::set<Word> leading;
  Engine copy(e);
  BasisConverter conv(copy);
  std::array<std::vector<Integer>, 3> seg;
  for (auto& v : seg) v.assign(static_cast<std::size_t>(d + 1), 0);
  for (const auto& k : keys) {
    const int deg = basis_degree(k);
    counts[static_cast<std::size_t>(deg)] += 1;
    if (!leading.insert(conv.leading_word(k)).second) rep.diffs.push_back("duplicate leading word " + format_basis_key(e, k));
    std::set<int> parts;
    for (const auto& f : k) parts.insert(static_cast<int>(conv.segment_of(f.gen)));
    if (parts.size() <= 1) {
      if (parts.empty())
        for (auto& v : seg) v[0] += 1;
      else seg[static_cast<std::size_t>(*parts.begin())][static_cast<std::size_t>(deg)] += 1;
    }
  }
  std::string cs;
  for (int k = 0; k <= d; ++k) {
    cs += (k ? "," : "") + counts[static_cast<std::size_t>(k)].get_str();
    if (counts[static_cast<std::size_t>(k)] != oracle[static_cast<std::size_t>(k)])
      rep.diffs.push_back("degree " + std::to_string(k) + ": enumerated " + counts[static_cast<std::size_t>(k)].get_str() +
                          ", oracle " + oracle[static_cast<std::size_t>(k)].get_str());
  }
  rep.note = "counts=[" + cs + "]";
  if (is_triangular_like(e)) {
    for (int k = 0; k <= d; ++k) {
      Integer conv3 = 0;
      for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b)
          conv3 += seg[0][static_cast<std::size_t>(a)] * seg[1][static_cast<std::size_t>(b)] *
                   seg[2][static_cast<std::size_t>(k - a - b)];
      if (conv3 != counts[static_cast<std::size_t>(k)])
        rep.diffs.push_back("degree " + std::to_string(k) + ": |B^-||B^0||B^+| convolution " + conv3.get_str() +
                            " != " + counts[static_cast<std::size_t>(k)].get_str());
    }
    rep.note += " segments=B-*B0*B+";
  }
  if (!rep.diffs.empty()) rep.verdict = Verdict::Fail;
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ------------------------------------------------------------------- suites

/// Preset name or path to a `.alg` file.
inline SuperAlgebraSpec resolve_algebra(const std::string& name)
{
  for (const auto& p : preset_names)
    if (p == name) return preset(name);
  std::ifstream in(name);
  if (!in) throw std::invalid_argument("unknown algebra '" + name + "' (not a preset and not a readable file)");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_spec(ss.str());
}

/// Order given as "triangular", "interleaved", or comma-separated labels.
inline GeneratorOrder resolve_order(const SuperAlgebraSpec& g, const std::string& text)
{
  if (text.empty() || text == "triangular") return GeneratorOrder::triangular(g);
  if (text == "interleaved") return GeneratorOrder::interleaved(g);
  std::vector<std::string> labels;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    labels.push_back(item);
  }
  return GeneratorOrder::from_labels(g, labels);
}

/// Suite configuration; see README for the JSON keys.
struct SuiteConfig {
  std::vector<std::string> algebras{"sl2", "sl3", "sp4", "sl21", "osp12"};
  std::string monoid = "trunc:4";
  std::string order = "triangular";
  std::vector<std::string> identities;  ///< empty = none; "all" expands to every id
  SweepSpec sweep;
  bool degree_bounds = false;
  bool lemma_5_2 = false;
  int integrality_trials = 0;
  int integrality_generators = 6;
  std::string integrality_monoid = "trunc:3";
  std::string integrality_order = "interleaved";
  int basis_degree = -1;
  std::vector<int> basis_truncations{2, 3};
  std::uint64_t seed = 1;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline SuiteConfig parse_suite_config(const std::string& text)
{
  SuiteConfig c;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known{"algebras", "monoid", "order", "identities", "bounds", "degree_bounds",
                                           "lemma_5_2", "integrality", "basis_counts", "seed", "threads"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw ConfigError("unknown config key '" + it.key() + "'");
  try {
    if (j.contains("algebras")) c.algebras = j["algebras"].get<std::vector<std::string>>();
    if (j.contains("monoid")) c.monoid = j["monoid"].get<std::string>();
    if (j.contains("order")) c.order = j["order"].get<std::string>();
    if (j.contains("identities")) {
      if (j["identities"].is_string() && j["identities"] == "all") c.identities = identity_ids();
      else c.identities = j["identities"].get<std::vector<std::string>>();
      for (const auto& id : c.identities)
        if (std::find(identity_ids().begin(), identity_ids().end(), id) == identity_ids().end())
          throw ConfigError("unknown identity id '" + id + "'");
    }
    if (j.contains("bounds")) {
      const auto& b = j["bounds"];
      c.sweep.rs = b.value("rs", c.sweep.rs);
      c.sweep.chi = b.value("chi", c.sweep.chi);
      c.sweep.m = b.value("m", c.sweep.m);
      c.sweep.mono_degree = b.value("mono_degree", c.sweep.mono_degree);
    }
    c.degree_bounds = j.value("degree_bounds", false);
    c.lemma_5_2 = j.value("lemma_5_2", false);
    if (j.contains("integrality")) {
      const auto& b = j["integrality"];
      c.integrality_trials = b.value("trials", 500);
      c.integrality_generators = b.value("generators", 6);
      c.integrality_monoid = b.value("monoid", c.integrality_monoid);
      c.integrality_order = b.value("order", c.integrality_order);
    }
    if (j.contains("basis_counts")) {
      const auto& b = j["basis_counts"];
      c.basis_degree = b.value("degree", 5);
      if (b.contains("truncations")) c.basis_truncations = b["truncations"].get<std::vector<int>>();
    }
    c.seed = j.value("seed", std::uint64_t{1});
    c.threads = j.value("threads", 0u);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  return c;
}

struct SuiteResult {
  std::vector<CheckReport> checks;
  Tally tally;
  std::string text(bool timing = false) const
  {
    std::string out;
    for (const auto& r : checks) out += format_report(r, timing);
    return out + tally.summary();
  }
};

/// Runs every requested check. Independent (algebra, task) units run on a
/// thread pool, each with its own engine; records are collected in task order,
/// so output is deterministic.
inline SuiteResult run_suite(const SuiteConfig& c)
{
  using Task = std::function<std::vector<CheckReport>()>;
  std::vector<Task> tasks;
  for (const auto& name : c.algebras) {
    const SuperAlgebraSpec g = resolve_algebra(name);
    const MonoidBasis mo = MonoidBasis::from_name(c.monoid);
    const GeneratorOrder ord = resolve_order(g, c.order);
    std::vector<std::string> ids = c.identities;
    if (c.lemma_5_2 && std::find(ids.begin(), ids.end(), "L5.2") == ids.end()) ids.push_back("L5.2");
    for (const auto& id : ids)
      tasks.push_back([=]() {
        Engine e(g, mo, ord);
        Garland gl(e);
        SweepSpec sw = c.sweep;
        if (id == "L5.2" && !c.sweep.chi_pin) sw.chi = std::min(sw.chi, 3);
        return verify_sweep(gl, id, sw);
      });
    if (c.degree_bounds)
      tasks.push_back([=]() {
        Engine e(g, mo, ord);
        Garland gl(e);
        return verify_degree_bounds(gl, c.sweep);
      });
    if (c.integrality_trials > 0)
      tasks.push_back([=]() {
        const MonoidBasis imo = MonoidBasis::from_name(c.integrality_monoid);
        std::vector<std::pair<std::string, GeneratorOrder>> orders{{"triangular", GeneratorOrder::triangular(g)},
                                                                   {c.integrality_order, resolve_order(g, c.integrality_order)}};
        return verify_integrality(g, imo, orders, c.integrality_generators, c.integrality_trials, c.seed);
      });
    if (c.basis_degree >= 0)
      for (int n : c.basis_truncations)
        tasks.push_back([=]() {
          Engine e(g, MonoidBasis::truncated(n), ord);
          return std::vector<CheckReport>{verify_basis_counts(e, c.basis_degree)};
        });
  }
  std::vector<std::vector<CheckReport>> results(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  unsigned nthreads = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  auto worker = [&]() {
    for (std::size_t k; (k = next++) < tasks.size();) {
      try {
        results[k] = tasks[k]();
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  SuiteResult out;
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    if (!errors[k].empty()) throw std::runtime_error(errors[k]);
    for (auto& r : results[k]) {
      out.tally.add(r);
      out.checks.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace zform

#endif  // ZFORM_VERIFIER_HPP
