#include "tropigon/profile.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tropigon {

GProfile g_profile(const LiftedSupport& ls, const Mat2& m) {
  LiftedSupport tls = transform(ls, m);
  if (tls.empty()) throw std::domain_error("g_profile: empty support");
  std::map<long, Rat> colmax;
  for (const auto& [p, h] : tls.entries()) {
    auto it = colmax.find(p.x);
    if (it == colmax.end())
      colmax.emplace(p.x, h);
    else if (h > it->second)
      it->second = h;
  }
  GProfile g;
  for (const auto& [x, z] : colmax) {
    std::pair<Rat, Rat> p{Rat(x), z};
    while (g.bp.size() >= 2) {
      const auto& [x1, z1] = g.bp[g.bp.size() - 2];
      const auto& [x2, z2] = g.bp[g.bp.size() - 1];
      // Pop the middle point unless it lies strictly above the chord.
      Rat c = (x2 - x1) * (p.second - z1) - (z2 - z1) * (p.first - x1);
      if (c >= 0)
        g.bp.pop_back();
      else
        break;
    }
    g.bp.push_back(p);
  }
  return g;
}

Rat g_eval(const GProfile& g, const Rat& x) {
  if (g.bp.empty()) throw std::domain_error("g_eval: empty profile");
  if (x < g.bp.front().first || x > g.bp.back().first)
    throw std::domain_error("g_eval: x outside the profile domain");
  for (size_t k = 0; k + 1 < g.bp.size(); k++) {
    const auto& [x1, z1] = g.bp[k];
    const auto& [x2, z2] = g.bp[k + 1];
    if (x <= x2) return z1 + (z2 - z1) * (x - x1) / (x2 - x1);
  }
  return g.bp.back().second;
}

namespace {

// Endpoints of the superlevel set {g >= v}; v must not exceed max g and must
// be attained as a value of g somewhere on the domain.
std::pair<Rat, Rat> superlevel(const GProfile& g, const Rat& v) {
  size_t n = g.bp.size();
  Rat l, r;
  if (g.bp.front().second >= v) {
    l = g.bp.front().first;
  } else {
    size_t k = 0;
    while (k < n && g.bp[k].second < v) k++;
    if (k == n) throw std::domain_error("superlevel: v above the maximum");
    const auto& [x1, z1] = g.bp[k - 1];
    const auto& [x2, z2] = g.bp[k];
    l = x1 + (v - z1) * (x2 - x1) / (z2 - z1);
  }
  if (g.bp.back().second >= v) {
    r = g.bp.back().first;
  } else {
    size_t k = n - 1;
    while (g.bp[k].second < v) k--;
    const auto& [x1, z1] = g.bp[k];
    const auto& [x2, z2] = g.bp[k + 1];
    r = x1 + (v - z1) * (x2 - x1) / (z2 - z1);
  }
  return {l, r};
}

}  // namespace

Rat g_hat(const GProfile& g, const Rat& x) {
  auto [l, r] = superlevel(g, g_eval(g, x));
  return r - l;
}

Rat g_hat_integral(const GProfile& g) {
  if (g.bp.size() <= 1) return Rat(0);
  // Consecutive slopes decrease strictly, so at most one piece is flat; the
  // roof segment contributes an extra roof^2/2 on top of span^2/2.
  Rat roof = 0;
  for (size_t k = 0; k + 1 < g.bp.size(); k++)
    if (g.bp[k].second == g.bp[k + 1].second) {
      if (roof != 0) throw std::logic_error("g_hat_integral: two flat pieces");
      roof = g.bp[k + 1].first - g.bp[k].first;
    }
  // Critical x values: breakpoints plus both superlevel endpoints of every
  // breakpoint value; g_hat is affine between consecutive criticals.
  std::vector<Rat> xs;
  for (const auto& [x, z] : g.bp) {
    xs.push_back(x);
    auto [l, r] = superlevel(g, z);
    xs.push_back(l);
    xs.push_back(r);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Rat total = 0;
  for (size_t k = 0; k + 1 < xs.size(); k++) {
    Rat h1 = g_hat(g, xs[k]), h2 = g_hat(g, xs[k + 1]);
    total += (h1 + h2) * (xs[k + 1] - xs[k]) / 2;
  }
  Rat span = g.span();
  if (total != (span * span + roof * roof) / 2)
    throw std::logic_error("g_hat_integral: closed form violated");
  return total;
}

}  // namespace tropigon
