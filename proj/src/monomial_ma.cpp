#include "segre/monomial_ma.hpp"

#include <algorithm>

#include "segre/error.hpp"

namespace segre {

namespace {

bool vanishes_on(const MonoComp& c, std::uint32_t S) {
  for (int i = 0; i < c.e.nvars(); ++i)
    if (c.e[i] > 0 && (S >> i & 1u)) return true;
  return false;
}

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t s = 0;
  for (int i = 0; i < m.nvars(); ++i)
    if (m[i] > 0) s |= 1u << i;
  return s;
}

LocalTerm fixed_term(long coef, std::uint32_t mask) {
  LocalTerm t;
  t.coef = coef;
  t.zero_mask = mask;
  return t;
}

void append(std::vector<LocalTerm>& out, const std::vector<LocalTerm>& more, long scale) {
  for (auto t : more) {
    t.coef *= scale;
    out.push_back(std::move(t));
  }
}

std::vector<LocalTerm> ma_free(std::uint32_t S, const std::vector<MonoComp>& f, int k) {
  const int m = static_cast<int>(f.size());
  if (m == 1) return {};
  bool unit = std::any_of(f.begin(), f.end(), [](const MonoComp& c) { return c.e.is_one(); });
  auto moving = [&] {
    LocalTerm t;
    t.coef = 1;
    t.zero_mask = S;
    t.has_moving = true;
    t.args = f;
    t.power = k;
    return std::vector<LocalTerm>{t};
  };
  if (unit) {
    if (k <= exponent_rank(f)) return moving();
    return {};
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (support_mask(f[i].e) & support_mask(f[j].e))
        throw Error(ErrorCode::UnsupportedInput,
                    "divisors of the monomial section do not intersect properly");
  if (k < m) return moving();
  if (k > m) return {};
  // k == m: product of the coordinate divisors, expanded
  std::vector<LocalTerm> acc{fixed_term(1, S)};
  for (const auto& c : f) {
    std::vector<LocalTerm> next;
    for (const auto& t : acc)
      for (int y = 0; y < c.e.nvars(); ++y)
        if (c.e[y] > 0) next.push_back(fixed_term(t.coef * c.e[y], t.zero_mask | (1u << y)));
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

int exponent_rank(const std::vector<MonoComp>& f) {
  if (f.size() < 2) return 0;
  const int n = f[0].e.nvars();
  std::vector<std::vector<Rational>> rows;
  for (size_t i = 1; i < f.size(); ++i) {
    std::vector<Rational> row(n);
    for (int j = 0; j < n; ++j) row[j] = f[i].e[j] - f[0].e[j];
    rows.push_back(row);
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
      Rational q = rows[r][col] / rows[rank][col];
      for (int j = 0; j < n; ++j) rows[r][j] -= q * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<LocalTerm> monomial_ma(std::uint32_t S, const std::vector<MonoComp>& f_in, int k) {
  std::vector<MonoComp> f;
  for (const auto& c : f_in)
    if (!c.c.is_zero() && !vanishes_on(c, S)) f.push_back(c);
  if (k == 0) return {fixed_term(1, S)};
  if (f.empty()) return {};
  Monomial h = f[0].e;
  for (const auto& c : f) h = Monomial::gcd(h, c.e);
  std::vector<MonoComp> fr;
  for (const auto& c : f) fr.push_back({c.c, c.e / h});
  std::vector<LocalTerm> out;
  // [div h] ^ <dd^c log|f'|^2>^{k-1}; the smooth factor dies above its rank
  if (!h.is_one() && k - 1 <= exponent_rank(fr)) {
    for (int y = 0; y < h.nvars(); ++y)
      if (h[y] > 0) append(out, monomial_ma(S | (1u << y), fr, k - 1), h[y]);
  }
  append(out, ma_free(S, fr, k), 1);
  return out;
}

std::vector<LocalTerm> monomial_residue(const std::vector<MonoComp>& f, int k) {
  std::vector<LocalTerm> out;
  for (auto& t : monomial_ma(0, f, k)) {
    bool inside = true;
    for (const auto& c : f)
      if (!c.c.is_zero() && !vanishes_on(c, t.zero_mask)) inside = false;
    if (inside) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace segre
