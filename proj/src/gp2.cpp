#include <map>
#include <string>

#include "coprime/constructions.hpp"
#include "coprime/errors.hpp"

namespace coprime {

// exactly one case fires: 12k-1, 12k-3, 12k+5 sit in distinct classes mod 5
std::string gp2_block_case(int k) {
  const std::int64_t a = 12LL * k - 1, b = 12LL * k - 3, c = 12LL * k + 5;
  if (a % 5 && b % 5 && c % 5) return "1";
  if (c % 5 == 0) return "2";
  if (a % 5 == 0) return b % 7 ? "3a" : "3b";
  if (b % 7) return "4a";
  if (b % 11) return "4b";
  if (b % 13) return "4c";
  return "4d";
}

Construction label_gp2(int n) {
  if (n < 5) throw ParameterOutOfRange("GP(n,2) labeling needs n >= 5, got n=" + std::to_string(n));
  const int m = n / 5, r = n % 5;
  // 1-based, v[i] and u[i]
  std::vector<Label> v(n + 1), u(n + 1);
  auto put = [](std::vector<Label>& x, int at, std::initializer_list<Label> vals) {
    for (Label y : vals) x[at++] = y;
  };
  put(v, 1, {2, 3, 5, 8, 9});
  put(u, 1, {1, 4, 6, 7, 11});

  std::vector<std::string> cases(m);
  for (int k = 1; k < m; ++k) {
    const int b = 5 * k;
    const Label t = 12ULL * k;
    put(v, b + 1, {t + 2, t + 3, t + 5, t + 8, t + 9});
    put(u, b + 1, {t + 1, t + 4, t + 10, t + 7, t + 11});
    const auto c = gp2_block_case(k);
    cases[k] = c;
    if (c == "2") {
      u[b + 3] = t + 6;
    } else if (c == "3a") {
      u[b + 2] = t + 2;
      v[b + 1] = t + 4;
    } else if (c == "3b") {
      u[b + 2] = t + 6;
      v[b + 2] = t + 5;
      v[b + 3] = t + 3;
    } else if (c == "4a") {
      v[b + 1] = t + 4;
      v[b + 4] = t + 10;
      u[b + 2] = t + 8;
      u[b + 3] = t + 2;
    } else if (c[0] == '4') {
      // these reach back into block k-1, which is always a 3a block here
      if (cases[k - 1] != "3a")
        throw Error("GP(n,2) block " + std::to_string(k) + " case " + c + " follows case " + cases[k - 1]);
      if (c == "4b") {
        v[b] = t - 1;
        u[b] = t - 3;
        u[b + 2] = t + 8;
        v[b + 4] = t + 4;
      } else if (c == "4c") {
        v[b] = t - 1;
        u[b] = t - 3;
        u[b + 2] = t + 10;
        u[b + 3] = t + 8;
        v[b + 4] = t + 4;
      } else {
        u[b - 2] = t + 2;
        v[b + 1] = t - 2;
      }
    }
  }

  const int b = 5 * m;
  const Label M = 12ULL * m;
  std::string tail;
  switch (r) {
    case 1:
      put(u, b + 1, {M + 3});
      put(v, b + 1, {M + 1});
      break;
    case 2:
      put(u, b + 1, {M + 4, M + 5});
      put(v, b + 1, {M + 1, M + 3});
      break;
    case 3:
      put(u, b + 1, {M + 4, M + 3, M + 7});
      put(v, b + 1, {M + 1, M + 2, M + 5});
      break;
    case 4:
      if ((M + 2) % 5) {
        put(u, b + 1, {M + 4, M + 8, M + 3, M + 9});
        put(v, b + 1, {M + 1, M + 5, M + 2, M + 7});
      } else if ((M + 2) % 7) {
        put(u, b + 1, {M + 2, M + 8, M + 3, M + 9});
        put(v, b + 1, {M + 1, M + 5, M + 4, M + 7});
        tail = ", 5|12m+2";
      } else {
        put(u, b + 1, {M, M + 2, M + 7, M + 1});
        put(v, b + 1, {M + 5, M + 3, M + 4, M + 9});
        tail = ", 35|12m+2";
      }
      break;
    default: break;
  }

  std::map<std::string, int> hist;
  for (int k = 1; k < m; ++k) ++hist[cases[k]];
  std::string tag = "n=5m+" + std::to_string(r) + tail;
  if (!hist.empty()) {
    tag += "; blocks";
    for (auto& [c, cnt] : hist) tag += " " + c + ":" + std::to_string(cnt);
  }

  Labeling l;
  l.labels.reserve(2 * n);
  l.labels.insert(l.labels.end(), v.begin() + 1, v.end());
  l.labels.insert(l.labels.end(), u.begin() + 1, u.end());
  return {build(GP2{n}), std::move(l), {r == 0 ? Rule::Gp2Blocks : Rule::Gp2Tail, tag, {}}};
}

}  // namespace coprime
