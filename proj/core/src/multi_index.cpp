#include "ptwitness/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "ptwitness/errors.hpp"

namespace ptwitness {

Ordering compare_indices(const MultiIndex& u, const MultiIndex& v) noexcept {
  const int du = u.degree();
  const int dv = v.degree();
  if (du != dv) return du < dv ? Ordering::less : Ordering::greater;

  // Within a degree block: first nonzero of (r-k, s-l, p-n, q-m) decides,
  // positive meaning u < v.
  const int diffs[4] = {v.k - u.k, v.l - u.l, v.n - u.n, v.m - u.m};
  for (int d : diffs) {
    if (d > 0) return Ordering::less;
    if (d < 0) return Ordering::greater;
  }
  return Ordering::equal;
}

namespace {

std::vector<MultiIndex> degree_block(int d) {
  std::vector<MultiIndex> block;
  for (int n = 0; n <= d; ++n)
    for (int m = 0; m <= d - n; ++m)
      for (int k = 0; k <= d - n - m; ++k)
        block.push_back({n, m, k, d - n - m - k});
  std::sort(block.begin(), block.end(), MultiIndexLess{});
  return block;
}

}  // namespace

std::vector<MultiIndex> enumerate_indices(int count) {
  if (count < 1) throw std::invalid_argument("enumerate_indices: count must be >= 1");
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int d = 0; static_cast<int>(out.size()) < count; ++d) {
    if (d > kMaxMonomialDegree)
      throw degree_error("enumerate_indices: sequence leaves the supported degree range (degree > " +
                         std::to_string(kMaxMonomialDegree) + ")");
    for (const MultiIndex& u : degree_block(d)) {
      out.push_back(u);
      if (static_cast<int>(out.size()) == count) break;
    }
  }
  return out;
}

std::vector<MultiIndex> indices_up_to_degree(int d) {
  if (d < 0) throw std::invalid_argument("indices_up_to_degree: negative degree");
  if (d > kMaxMonomialDegree)
    throw degree_error("indices_up_to_degree: degree > " + std::to_string(kMaxMonomialDegree));
  std::vector<MultiIndex> out;
  for (int deg = 0; deg <= d; ++deg)
    for (const MultiIndex& u : degree_block(deg)) out.push_back(u);
  return out;
}

std::string to_string(const MultiIndex& u) {
  if (u.degree() == 0) return "1";
  std::string s;
  auto factor = [&s](const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += ' ';
    s += name;
    if (e > 1) s += '^' + std::to_string(e);
  };
  factor("ad", u.n);
  factor("a", u.m);
  factor("bd", u.k);
  factor("b", u.l);
  return s;
}

}  // namespace ptwitness
