#include <algorithm>
#include <string>

#include "coprime/errors.hpp"
#include "coprime/prism_pattern.hpp"

namespace coprime {

namespace {

using i64 = std::int64_t;

Run ident(int lo, int hi) { return {lo, hi, lo, 1}; }
Run one(int i, i64 val) { return {i, i, val, 0}; }
Run up(int lo, int hi, i64 start) { return {lo, hi, start, 1}; }
Run down(int lo, int hi, i64 start) { return {lo, hi, start, -1}; }

bool prime(i64 x) { return x > 1 && is_prime(static_cast<std::uint64_t>(x)); }

std::string mod3(int n) { return "n≡" + std::to_string(n % 3) + " mod 3"; }
std::string mod5(int n) { return "n≡" + std::to_string(n % 5) + " mod 5"; }

struct Layout {
  std::vector<Run> v, u;
  std::string tag;
};

// Tables keyed by residue; i64 so large n stays exact.
std::optional<Layout> layout(Rule r, int n) {
  const i64 N = n;
  const int m3 = n % 3, m5 = n % 5;
  switch (r) {
    case Rule::NPrime:
      return Layout{{ident(1, n)}, {up(1, n - 1, N + 1), one(n, 2 * N + 1)}, "n prime"};
    case Rule::NPlus2Prime:
      return Layout{{ident(1, n)}, {up(1, n - 1, N + 3), one(n, N + 2)}, "n+2 prime"};
    case Rule::TwoNPlus1Prime:
      return Layout{{ident(1, n)}, {one(1, 2 * N + 1), down(2, n, 2 * N - 1)}, "2n+1 prime"};
    case Rule::TwoNMinus1Prime: {
      if (m3 == 2) return std::nullopt;
      // 2n-2 shares a factor 3 with n-1 when n≡1, so u_1 takes 2n there
      i64 u1 = m3 == 0 ? 2 * N - 2 : 2 * N;
      return Layout{{ident(1, n - 1), one(n, 2 * N - 1)},
                    {one(1, u1), down(2, n - 1, 2 * N - 3), one(n, 2 * N + 1)},
                    mod3(n)};
    }
    case Rule::NPlus4Prime:
      if (m3 == 0)
        return Layout{{ident(1, n)},
                      {up(1, n - 3, N + 5), one(n - 2, N + 1), one(n - 1, N + 2), one(n, N + 4)},
                      mod3(n)};
      if (m3 == 1)
        return Layout{{ident(1, n - 2), one(n - 1, N + 2), one(n, N + 1)},
                      {up(1, n - 3, N + 5), one(n - 2, N), one(n - 1, N + 3), one(n, N + 4)},
                      mod3(n)};
      return std::nullopt;
    case Rule::NMinus2Prime:
      if (m3 == 0)
        return Layout{{ident(1, n)},
                      {one(1, 2 * N - 1), one(2, 2 * N + 1), up(3, n - 3, N + 1), one(n - 2, 2 * N - 2),
                       one(n - 1, 2 * N - 3), one(n, 2 * N - 4)},
                      mod3(n)};
      if (m3 == 1)
        return Layout{{ident(1, n)},
                      {one(1, 2 * N - 1), one(2, 2 * N + 1), up(3, n - 5, N + 1), one(n - 4, 2 * N - 4),
                       one(n - 3, 2 * N - 5), one(n - 2, 2 * N - 6), one(n - 1, 2 * N - 3),
                       one(n, 2 * N - 2)},
                      mod3(n)};
      return std::nullopt;
    case Rule::NMinus4Prime:
      if (m3 == 0)
        return Layout{{ident(1, n)},
                      {one(1, 2 * N - 3), one(2, 2 * N - 1), one(3, 2 * N - 2), one(4, 2 * N + 1),
                       up(5, n - 7, N + 1), one(n - 6, 2 * N - 8), one(n - 5, 2 * N - 9),
                       one(n - 4, 2 * N - 10), one(n - 3, 2 * N - 7), one(n - 2, 2 * N - 6),
                       one(n - 1, 2 * N - 5), one(n, 2 * N - 4)},
                      mod3(n)};
      if (m3 == 2)
        return Layout{{ident(1, n)},
                      {one(1, 2 * N - 3), one(2, 2 * N - 1), one(3, 2 * N), one(4, 2 * N + 1),
                       up(5, n - 5, N + 1), one(n - 4, 2 * N - 6), one(n - 3, 2 * N - 7),
                       one(n - 2, 2 * N - 8), one(n - 1, 2 * N - 5), one(n, 2 * N - 4)},
                      mod3(n)};
      return std::nullopt;
    case Rule::TwoNPlus3Prime:
      if (m3 == 1)
        return Layout{{ident(1, n - 2), one(n - 1, N + 1), one(n, N + 2)},
                      {one(1, N), down(2, n, 2 * N + 1)},
                      mod3(n)};
      if (m3 == 2)
        return Layout{{ident(1, n - 2), one(n - 1, N), one(n, N + 3)},
                      {one(1, N - 1), down(2, n - 2, 2 * N + 1), one(n - 1, N + 4), one(n, N + 2)},
                      mod3(n)};
      return std::nullopt;
    case Rule::TwoNMinus3Prime:
      if (m3 == 2)
        return Layout{{ident(1, n - 2), one(n - 1, 2 * N - 3), one(n, 2 * N)},
                      {one(1, 2 * N - 2), down(2, n - 2, 2 * N - 5), one(n - 1, 2 * N - 1),
                       one(n, 2 * N + 1)},
                      mod3(n)};
      if (m3 == 1)
        return Layout{{ident(1, n - 2), one(n - 1, 2 * N), one(n, 2 * N + 1)},
                      {down(1, n - 2, 2 * N - 4), one(n - 1, 2 * N - 3), one(n, 2 * N - 1)},
                      mod3(n)};
      return std::nullopt;
    case Rule::TwoNMinus5Prime:
      if (m3 == 1 || m5 == 0) return std::nullopt;
      if (m5 == 1 || m5 == 2 || m5 == 4)
        return Layout{{ident(1, n - 3), one(n - 2, 2 * N - 5), one(n - 1, 2 * N + 1), one(n, 2 * N)},
                      {down(1, n - 3, 2 * N - 6), one(n - 2, 2 * N - 3), one(n - 1, 2 * N - 2),
                       one(n, 2 * N - 1)},
                      mod5(n)};
      if (m3 == 0)
        return Layout{{ident(1, n - 3), one(n - 2, 2 * N - 5), one(n - 1, 2 * N - 1), one(n, 2 * N)},
                      {one(1, 2 * N - 4), down(2, n - 3, 2 * N - 7), one(n - 2, 2 * N - 3),
                       one(n - 1, 2 * N - 2), one(n, 2 * N + 1)},
                      mod3(n) + ", " + mod5(n)};
      return Layout{{ident(1, n - 3), one(n - 2, 2 * N - 5), one(n - 1, 2 * N - 1), one(n, 2 * N)},
                    {down(1, n - 3, 2 * N - 6), one(n - 2, 2 * N + 1), one(n - 1, 2 * N - 2),
                     one(n, 2 * N - 3)},
                    mod3(n) + ", " + mod5(n)};
    case Rule::NPlus6Prime:
      if (m3 == 0 || m5 == 4) return std::nullopt;
      if (m5 == 0 || m5 == 2 || m5 == 3)
        return Layout{{ident(1, n - 2), one(n - 1, N + 2), one(n, N + 3)},
                      {up(1, n - 5, N + 7), one(n - 4, N + 1), one(n - 3, N), one(n - 2, N - 1),
                       one(n - 1, N + 4), one(n, N + 6)},
                      mod5(n)};
      if (m3 == 2)
        return Layout{{ident(1, n - 2), one(n - 1, N + 2), one(n, N + 5)},
                      {up(1, n - 5, N + 7), one(n - 4, N + 1), one(n - 3, N), one(n - 2, N + 3),
                       one(n - 1, N + 4), one(n, N + 6)},
                      mod3(n) + ", " + mod5(n)};
      return Layout{{ident(1, n - 2), one(n - 1, N + 4), one(n, N + 5)},
                    {up(1, n - 5, N + 7), one(n - 4, N + 1), one(n - 3, N), one(n - 2, N + 3),
                     one(n - 1, N + 2), one(n, N + 6)},
                    mod3(n) + ", " + mod5(n)};
    default: return std::nullopt;
  }
}

Layout prime_pair_layout(int n, i64 s) {
  const i64 N = n;
  return Layout{{ident(1, n)},
                {one(1, N + s + 1), down(2, static_cast<int>(s), N + s - 1),
                 down(static_cast<int>(s) + 1, n, 2 * N + 1)},
                "s=" + std::to_string(s)};
}

PrismPattern to_pattern(Rule r, int n, Layout lay, std::optional<std::uint64_t> witness = {}) {
  PrismPattern p;
  p.n = n;
  auto drop_empty = [](std::vector<Run>& rs) {
    std::erase_if(rs, [](const Run& x) { return x.first > x.last; });
  };
  p.outer = std::move(lay.v);
  p.inner = std::move(lay.u);
  drop_empty(p.outer);
  drop_empty(p.inner);
  p.cert = {r, std::move(lay.tag), witness};
  return p;
}

bool is_prism_rule(Rule r) {
  auto& o = prism_rule_order();
  return std::find(o.begin(), o.end(), r) != o.end();
}

}  // namespace

const std::vector<Rule>& prism_rule_order() {
  static const std::vector<Rule> order = {
      Rule::NPrime,         Rule::NPlus2Prime,     Rule::TwoNPlus1Prime,  Rule::TwoNMinus1Prime,
      Rule::NPlus4Prime,    Rule::NMinus2Prime,    Rule::NMinus4Prime,    Rule::TwoNPlus3Prime,
      Rule::TwoNMinus3Prime, Rule::TwoNMinus5Prime, Rule::NPlus6Prime,    Rule::PrimePair};
  return order;
}

bool prism_rule_admissible(Rule r, int n, std::string* why) {
  auto fail = [&](std::string w) {
    if (why) *why = std::move(w);
    return false;
  };
  if (n < 3 || n % 2 == 0) return fail("n must be odd and >= 3");
  const i64 N = n;
  const int m3 = n % 3, m5 = n % 5;
  switch (r) {
    case Rule::NPrime:
      if (!prime(N)) return fail("n is not prime");
      break;
    case Rule::NPlus2Prime:
      if (!prime(N + 2)) return fail("n+2 is not prime");
      break;
    case Rule::TwoNPlus1Prime:
      if (!prime(2 * N + 1)) return fail("2n+1 is not prime");
      break;
    case Rule::TwoNMinus1Prime:
      if (!prime(2 * N - 1)) return fail("2n-1 is not prime");
      if (m3 == 2) return fail("n≡2 mod 3 is not covered");
      break;
    case Rule::NPlus4Prime:
      if (!prime(N + 4)) return fail("n+4 is not prime");
      if (m3 == 2) return fail("n≡2 mod 3 is not covered");
      break;
    case Rule::NMinus2Prime:
      if (!prime(N - 2)) return fail("n-2 is not prime");
      if (n <= 5) return fail("needs n > 5");
      if (m3 == 2) return fail("n≡2 mod 3 is not covered");
      // the n≡1 table needs room for its fixed tail of five entries
      if (m3 == 1 && n < 13) return fail("n≡1 mod 3 needs n >= 13");
      break;
    case Rule::NMinus4Prime:
      if (!prime(N - 4)) return fail("n-4 is not prime");
      if (n <= 7) return fail("needs n > 7");
      if (m3 == 1) return fail("n≡1 mod 3 is not covered");
      if (m3 == 0 && n < 15) return fail("n≡0 mod 3 needs n >= 15");
      break;
    case Rule::TwoNPlus3Prime:
      if (!prime(2 * N + 3)) return fail("2n+3 is not prime");
      if (m3 == 0) return fail("n≡0 mod 3 is not covered");
      break;
    case Rule::TwoNMinus3Prime:
      if (!prime(2 * N - 3)) return fail("2n-3 is not prime");
      if (m3 == 0) return fail("n≡0 mod 3 is not covered");
      break;
    case Rule::TwoNMinus5Prime:
      if (!prime(2 * N - 5)) return fail("2n-5 is not prime");
      if (m3 == 1) return fail("n≡1 mod 3 is not covered");
      if (m5 == 0) return fail("n≡0 mod 5 is not covered");
      break;
    case Rule::NPlus6Prime:
      if (!prime(N + 6)) return fail("n+6 is not prime");
      if (m3 == 0) return fail("n≡0 mod 3 is not covered");
      if (m5 == 4) return fail("n≡4 mod 5 is not covered");
      break;
    case Rule::PrimePair:
      if (!find_s(static_cast<std::uint64_t>(n))) return fail("no s in [3,n-1] with n+s+1 and 2n+s+2 prime");
      break;
    default: return fail(std::string(rule_id(r)) + " is not a prism rule");
  }
  return true;
}

std::optional<PrismPattern> prism_layout(Rule r, int n) {
  if (n < 3) return std::nullopt;
  if (r == Rule::PrimePair) {
    auto s = find_s(static_cast<std::uint64_t>(n));
    if (!s) return std::nullopt;
    return to_pattern(r, n, prime_pair_layout(n, static_cast<i64>(*s)), *s);
  }
  auto lay = layout(r, n);
  if (!lay) return std::nullopt;
  return to_pattern(r, n, std::move(*lay));
}

PrismPattern prism_pattern_by(Rule r, int n) {
  if (!is_prism_rule(r)) throw HypothesisViolated(std::string(rule_id(r)) + " is not a prism rule");
  if (n < 3 || n % 2 == 0)
    throw ParameterOutOfRange("prism labeling needs odd n >= 3, got n=" + std::to_string(n));
  std::string why;
  if (!prism_rule_admissible(r, n, &why))
    throw HypothesisViolated(std::string(rule_id(r)) + " at n=" + std::to_string(n) + ": " + why);
  return *prism_layout(r, n);
}

PrismPattern prism_pattern(int n, bool allow_fallback) {
  if (n < 3 || n % 2 == 0)
    throw ParameterOutOfRange("prism labeling needs odd n >= 3, got n=" + std::to_string(n));
  for (Rule r : prism_rule_order()) {
    if (r == Rule::PrimePair && !allow_fallback) break;
    if (prism_rule_admissible(r, n)) return *prism_layout(r, n);
  }
  throw ConstructionUnavailable("no prism rule applies to n=" + std::to_string(n) +
                                (allow_fallback ? "" : " (prime-pair fallback disabled)"));
}

Labeling materialize(const PrismPattern& p) {
  Labeling l;
  l.labels.assign(2 * static_cast<std::size_t>(p.n), 0);
  auto fill = [&](const std::vector<Run>& rs, std::size_t off) {
    for (auto& r : rs)
      for (int i = r.first; i <= r.last; ++i) l.labels[off + i - 1] = static_cast<Label>(r.at(i));
  };
  fill(p.outer, 0);
  fill(p.inner, p.n);
  return l;
}

namespace {

// does [lo,hi] (lo >= 1) contain a multiple of q?
bool hits_multiple(i64 lo, i64 hi, i64 q) { return hi / q * q >= lo; }

struct Affine {
  i64 v0;
  int step;
  int len;
  i64 lo() const { return step >= 0 ? v0 : v0 + step * static_cast<i64>(len - 1); }
  i64 hi() const { return step >= 0 ? v0 + step * static_cast<i64>(len - 1) : v0; }
};

bool any_divisible(const Affine& a, const std::vector<std::uint64_t>& ps) {
  for (auto p : ps)
    if (hits_multiple(a.lo(), a.hi(), static_cast<i64>(p))) return true;
  return false;
}

std::vector<std::uint64_t> factors_abs(i64 x) {
  return prime_factors(static_cast<std::uint64_t>(x < 0 ? -x : x));
}

// true if gcd(f(t), g(t)) == 1 for all t in [0,len)
bool coprime_stretch(const Affine& f, const Affine& g) {
  if (f.len <= 24) {
    for (int t = 0; t < f.len; ++t)
      if (gcd(static_cast<std::uint64_t>(f.v0 + f.step * static_cast<i64>(t)),
              static_cast<std::uint64_t>(g.v0 + g.step * static_cast<i64>(t))) != 1)
        return false;
    return true;
  }
  if (f.step == 0 && g.step == 0) return gcd(f.v0, g.v0) == 1;
  if (f.step == 0) return !any_divisible(g, factors_abs(f.v0));
  if (g.step == 0) return !any_divisible(f, factors_abs(g.v0));
  // gcd(f,g) divides g-f (same direction) or g+f (opposite), both constant here
  i64 c = f.step == g.step ? g.v0 - f.v0 : g.v0 + f.v0;
  if (c == 0) return false;
  return !any_divisible(f, factors_abs(c));
}

const Run* run_at(const std::vector<Run>& rs, int i) {
  for (auto& r : rs)
    if (r.first <= i && i <= r.last) return &r;
  return nullptr;
}

// edges (i, i+off) for i in [lo,hi], a-labels from ra, b-labels from rb
std::optional<std::string> check_family(const std::vector<Run>& ra, const std::vector<Run>& rb, int lo,
                                        int hi, int off, const char* what) {
  if (lo > hi) return std::nullopt;
  std::vector<int> cuts = {lo};
  for (auto& r : ra)
    if (r.first > lo && r.first <= hi) cuts.push_back(r.first);
  for (auto& r : rb)
    if (r.first - off > lo && r.first - off <= hi) cuts.push_back(r.first - off);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    int s = cuts[c];
    int e = c + 1 < cuts.size() ? cuts[c + 1] - 1 : hi;
    const Run* a = run_at(ra, s);
    const Run* b = run_at(rb, s + off);
    Affine f{a->at(s), a->step, e - s + 1};
    Affine g{b->at(s + off), b->step, e - s + 1};
    if (!coprime_stretch(f, g))
      return std::string(what) + " edges with i in [" + std::to_string(s) + "," + std::to_string(e) +
             "] share a factor";
  }
  return std::nullopt;
}

std::optional<std::string> check_cover(const std::vector<Run>& rs, int n, const char* ring) {
  std::vector<Run> s = rs;
  std::sort(s.begin(), s.end(), [](const Run& x, const Run& y) { return x.first < y.first; });
  int next = 1;
  for (auto& r : s) {
    if (r.step < -1 || r.step > 1) return std::string(ring) + " run with step outside {-1,0,1}";
    if (r.step == 0 && r.first != r.last) return std::string(ring) + " constant run spans several indices";
    if (r.first != next) return std::string(ring) + " index " + std::to_string(next) + " is not covered exactly once";
    next = r.last + 1;
  }
  if (next != n + 1) return std::string(ring) + " ring does not cover 1..n";
  return std::nullopt;
}

}  // namespace

PatternCheck check_pattern(const PrismPattern& p) {
  const int n = p.n;
  auto bad = [](std::string why) { return PatternCheck{false, std::move(why)}; };
  if (auto e = check_cover(p.outer, n, "outer")) return bad(*e);
  if (auto e = check_cover(p.inner, n, "inner")) return bad(*e);

  // value ranges of all runs must be positive and pairwise disjoint
  std::vector<std::pair<i64, i64>> spans;
  for (auto* rs : {&p.outer, &p.inner})
    for (auto& r : *rs) {
      Affine a{r.start, r.step, r.last - r.first + 1};
      spans.push_back({a.lo(), a.hi()});
    }
  std::sort(spans.begin(), spans.end());
  if (spans.front().first < 1) return bad("non-positive label");
  for (std::size_t i = 1; i < spans.size(); ++i)
    if (spans[i].first <= spans[i - 1].second)
      return bad("label " + std::to_string(spans[i].first) + " is used twice");
  if (spans.back().second != 2 * static_cast<i64>(n) + 1)
    return bad("max label " + std::to_string(spans.back().second) + " != 2n+1");

  if (auto e = check_family(p.outer, p.inner, 1, n, 0, "spoke")) return bad(*e);
  if (auto e = check_family(p.outer, p.outer, 1, n - 1, 1, "outer")) return bad(*e);
  if (auto e = check_family(p.inner, p.inner, 1, n - 1, 1, "inner")) return bad(*e);
  auto v1 = run_at(p.outer, 1)->at(1), vn = run_at(p.outer, n)->at(n);
  auto u1 = run_at(p.inner, 1)->at(1), un = run_at(p.inner, n)->at(n);
  if (gcd(v1, vn) != 1) return bad("outer edge v_n v_1 shares a factor");
  if (gcd(u1, un) != 1) return bad("inner edge u_n u_1 shares a factor");
  return {};
}

Construction label_prism(int n, bool allow_fallback) {
  auto p = prism_pattern(n, allow_fallback);
  return {build(Prism{n}), materialize(p), p.cert};
}

Construction label_prism_by(Rule r, int n) {
  auto p = prism_pattern_by(r, n);
  return {build(Prism{n}), materialize(p), p.cert};
}

}  // namespace coprime
