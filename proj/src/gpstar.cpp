#include <array>
#include <string>
#include <utility>

#include "coprime/constructions.hpp"
#include "coprime/errors.hpp"

namespace coprime {

namespace {

// v then u, 1-based into a flat array of size 2n+1 (slot 0 unused on each side)
struct Star {
  int k, n;
  std::vector<Label> v, u;
};

Star base_labels(int k) {
  Star s{k, 2 * k, {}, {}};
  s.v.assign(s.n + 1, 0);
  s.u.assign(s.n + 1, 0);
  for (int i = 1; i <= k; ++i) {
    const Label a = 4ULL * i;
    const bool odd = i % 2;
    s.v[i] = odd ? a - 3 : a;
    s.u[i] = odd ? a - 2 : a - 1;
    s.v[k + i] = odd ? a : a - 3;
    s.u[k + i] = odd ? a - 1 : a - 2;
  }
  return s;
}

Labeling flatten(const Star& s) {
  Labeling l;
  l.labels.reserve(2 * s.n);
  l.labels.insert(l.labels.end(), s.v.begin() + 1, s.v.end());
  l.labels.insert(l.labels.end(), s.u.begin() + 1, s.u.end());
  return l;
}

// slots around a window at v_i with a = l(v_i), named by their base label offset
enum Slot { Am2, Am1, A, Ap1, Ap2, Ap5, Ap6, Ap7, Ap8, SlotCount };

}  // namespace

Labeling gpstar_unrepaired(int k) {
  if (k < 2) throw ParameterOutOfRange("GP*(2k,k) needs k >= 2, got k=" + std::to_string(k));
  return flatten(base_labels(k));
}

Construction label_gpstar(int k) {
  if (k < 2) throw ParameterOutOfRange("GP*(2k,k) needs k >= 2, got k=" + std::to_string(k));
  Star s = base_labels(k);
  const int n = s.n;
  auto wrap = [n](int i) { return ((i - 1) % n + n) % n + 1; };

  // windows: v_i, v_{i+1} both multiples of 7, found on the unmodified labels
  std::vector<int> windows;
  for (int i = 1; i <= n; ++i)
    if (s.v[i] % 7 == 0 && s.v[wrap(i + 1)] == s.v[i] + 7) windows.push_back(i);

  std::array<int, 6> used{};
  int skipped = 0;
  for (int i : windows) {
    const Label a = s.v[i];
    std::array<Label*, SlotCount> at = {
        &s.u[wrap(i - 1)], &s.v[wrap(i - 1)], &s.v[i],           &s.u[i],          &s.u[wrap(i + k)],
        &s.u[wrap(i + 1 + k)], &s.u[wrap(i + 1)], &s.v[wrap(i + 1)], &s.v[wrap(i + 2)]};
    // (destination, source) pairs: destination takes the source's current label
    std::vector<std::pair<Slot, Slot>> moves;
    int c;
    if (a % 3 == 1) {
      c = 1;
      moves = {{A, Am2}, {Am2, A}};
    } else if (a % 3 == 0 && a % 5) {
      c = 2;
      moves = {{Ap5, Ap7}, {Ap7, Ap5}};
    } else if (a % 15 == 0) {
      c = 3;
      moves = {{Am1, Ap7}, {A, Ap6}, {Ap1, Ap5}, {Ap5, Am1}, {Ap6, A}, {Ap7, Ap1}};
    } else if ((a + 2) % 5) {
      c = 4;
      moves = {{A, Ap2}, {Ap2, A}};
    } else {
      c = 5;
      moves = {{A, Ap6}, {Ap1, Ap7}, {Ap2, Ap8}, {Ap6, Ap2}, {Ap7, Ap1}, {Ap8, A}};
    }
    // For even k the window ending at v_k needs no repair in cases 1 and 5:
    // v_k is relabeled 4k+1 below, and the swaps would clash with that label.
    if (k % 2 == 0 && wrap(i + 1) == k && (c == 1 || c == 5)) {
      ++skipped;
      continue;
    }
    std::array<Label, SlotCount> old{};
    for (int j = 0; j < SlotCount; ++j) old[j] = *at[j];
    for (auto [dst, src] : moves) *at[dst] = old[src];
    ++used[c];
  }
  if (k % 2 == 0) s.v[k] = 4ULL * k + 1;

  std::string tag = k % 2 ? "k odd" : "k even, v_k=4k+1";
  for (int c = 1; c <= 5; ++c)
    if (used[c]) tag += "; case " + std::to_string(c) + " x" + std::to_string(used[c]);
  if (skipped) tag += "; window at v_k left as is";
  return {build(GPStar{k}), flatten(s), {Rule::GpStarSwaps, tag, {}}};
}

}  // namespace coprime
