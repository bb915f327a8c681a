#include <array>
#include <string>

#include "coprime/constructions.hpp"
#include "coprime/errors.hpp"

namespace coprime {

Construction label_y3(int n) {
  if (n < 1) throw ParameterOutOfRange("Y(3,n) labeling needs n >= 1, got n=" + std::to_string(n));
  std::vector<std::array<Label, 3>> rows = {{1, 2, 3}};
  rows.reserve(n);
  // r, s, t: positions currently holding 4i-3, 4i-2, 4i-1
  int r = 0, s = 1, t = 2;
  int c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  for (Label i = 1; static_cast<int>(rows.size()) < n;) {
    const Label a = 4 * i - 3, b = 4 * i - 2, c = 4 * i - 1;
    std::array<Label, 3> row{};
    if (a % 5 && b % 3) {
      row[r] = 4 * i + 2, row[s] = 4 * i + 1, row[t] = 4 * i + 3;
      std::swap(r, s);
      ++c1;
    } else if (a % 5 == 0 && c % 3) {
      row[r] = 4 * i + 1, row[s] = 4 * i + 3, row[t] = 4 * i + 2;
      std::swap(s, t);
      ++c2;
    } else if (a % 5 && b % 5) {
      row[r] = 4 * i + 2, row[s] = 4 * i + 3, row[t] = 4 * i + 1;
      int nr = t, ns = r, nt = s;
      r = nr, s = ns, t = nt;
      ++c3;
    } else {
      // two layers at once; the first skips 4i+2 and takes 4i
      row[r] = 4 * i, row[s] = 4 * i + 1, row[t] = 4 * i + 3;
      rows.push_back(row);
      ++c4;
      if (static_cast<int>(rows.size()) == n) break;
      row[r] = 4 * i + 5, row[s] = 4 * i + 6, row[t] = 4 * i + 7;
      rows.push_back(row);
      i += 2;
      continue;
    }
    rows.push_back(row);
    ++i;
  }
  Labeling l;
  for (auto& row : rows) l.labels.insert(l.labels.end(), row.begin(), row.end());
  std::string tag = "cases 1:" + std::to_string(c1) + " 2:" + std::to_string(c2) +
                    " 3:" + std::to_string(c3) + " 4:" + std::to_string(c4);
  return {build(StackedPrism{3, n}), std::move(l), {Rule::TriangleStack, tag, {}}};
}

Construction label_y5(int n) {
  if (n < 1) throw ParameterOutOfRange("Y(5,n) labeling needs n >= 1, got n=" + std::to_string(n));
  const auto& table = pentagon_table();
  Labeling l;
  l.labels.reserve(5 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Label shift = 420ULL * (i / 70);
    for (int x : table[i % 70]) l.labels.push_back(static_cast<Label>(x) + shift);
  }
  std::string tag = n > 70 ? "table + period 420, " + std::to_string((n - 1) / 70) + " shifts" : "table";
  return {build(StackedPrism{5, n}), std::move(l), {Rule::PentagonStack, tag, {}}};
}

}  // namespace coprime
