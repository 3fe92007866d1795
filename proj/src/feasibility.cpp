#include "clusterdenom/feasibility.hpp"

#include "clusterdenom/errors.hpp"

namespace clusterdenom {

namespace {

// Dense phase-1 tableau. Columns: x (n), surplus s (m), artificials; last column is the rhs.
template <typename Field>
class PhaseOne {
 public:
  PhaseOne(const std::vector<std::vector<Field>>& g, const std::vector<Field>& h)
      : m_(static_cast<int>(g.size())), n_(g.empty() ? 0 : static_cast<int>(g[0].size())) {
    std::vector<int> art_rows;
    for (int i = 0; i < m_; ++i) {
      if (sign_of(h[i]) > 0) art_rows.push_back(i);
    }
    cols_ = n_ + m_ + static_cast<int>(art_rows.size());
    tab_.assign(static_cast<std::size_t>(m_), std::vector<Field>(static_cast<std::size_t>(cols_ + 1), Field(0)));
    basis_.assign(static_cast<std::size_t>(m_), -1);
    int art = n_ + m_;
    for (int i = 0; i < m_; ++i) {
      auto& row = tab_[i];
      if (sign_of(h[i]) > 0) {
        for (int j = 0; j < n_; ++j) row[j] = g[i][j];
        row[n_ + i] = Field(-1);
        row[art] = Field(1);
        row[cols_] = h[i];
        basis_[i] = art++;
      } else {
        for (int j = 0; j < n_; ++j) row[j] = -g[i][j];
        row[n_ + i] = Field(1);
        row[cols_] = -h[i];
        basis_[i] = n_ + i;
      }
    }
    // reduced costs of  min sum(artificials)
    cost_.assign(static_cast<std::size_t>(cols_ + 1), Field(0));
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_ + m_) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (j < n_ + m_ || j == cols_) cost_[j] -= tab_[i][j];
      }
    }
  }

  std::optional<std::vector<Field>> run() {
    for (;;) {
      int enter = -1;
      // artificials never re-enter
      for (int j = 0; j < n_ + m_; ++j) {
        if (sign_of(cost_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) break;
      int leave = -1;
      Field best(0);
      for (int i = 0; i < m_; ++i) {
        if (sign_of(tab_[i][enter]) <= 0) continue;
        const Field ratio = tab_[i][cols_] / tab_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) throw InvariantViolation("phase-1 objective is unbounded");
      pivot(leave, enter);
    }
    // objective value is -cost_[cols_]
    if (sign_of(cost_[cols_]) != 0) return std::nullopt;
    std::vector<Field> x(static_cast<std::size_t>(n_), Field(0));
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = tab_[i][cols_];
    }
    return x;
  }

 private:
  void pivot(int r, int c) {
    auto& prow = tab_[r];
    const Field p = prow[c];
    for (auto& v : prow) {
      if (sign_of(v) != 0) v = v / p;
    }
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      eliminate(tab_[i], prow, c);
    }
    eliminate(cost_, prow, c);
    basis_[r] = c;
  }

  void eliminate(std::vector<Field>& row, const std::vector<Field>& prow, int c) {
    const Field f = row[c];
    if (sign_of(f) == 0) return;
    for (int j = 0; j <= cols_; ++j) {
      if (sign_of(prow[j]) != 0) row[j] = row[j] - f * prow[j];
    }
  }

  int m_, n_, cols_ = 0;
  std::vector<std::vector<Field>> tab_;
  std::vector<Field> cost_;
  std::vector<int> basis_;
};

template <typename Field, typename Source, typename Convert>
std::vector<std::vector<Field>> convert_rows(const std::vector<std::vector<Source>>& g, Convert conv) {
  std::vector<std::vector<Field>> out;
  out.reserve(g.size());
  for (const auto& row : g) {
    auto& dst = out.emplace_back();
    dst.reserve(row.size());
    for (const auto& v : row) dst.push_back(conv(v));
  }
  return out;
}

CheckedRational to_checked(const Rational& q) {
  const BigInt& num = numerator(q);
  const BigInt& den = denominator(q);
  if (num > BigInt(INT64_MAX) || num < BigInt(-INT64_MAX) || den > BigInt(INT64_MAX)) throw ArithmeticOverflow{};
  return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

}  // namespace

FeasibilityResult solve_nonnegative(const std::vector<std::vector<Rational>>& g, const std::vector<Rational>& h) {
  if (g.size() != h.size()) throw InvalidArgument("constraint matrix and rhs differ in length");
  for (const auto& row : g) {
    if (row.size() != g.front().size()) throw InvalidArgument("ragged constraint matrix");
  }
  try {
    auto gc = convert_rows<CheckedRational>(g, to_checked);
    std::vector<CheckedRational> hc;
    for (const auto& v : h) hc.push_back(to_checked(v));
    auto x = PhaseOne<CheckedRational>(gc, hc).run();
    FeasibilityResult res{x.has_value(), {}};
    if (x) {
      for (const auto& v : *x) res.witness.push_back(to_rational(v));
    }
    return res;
  } catch (const ArithmeticOverflow&) {
    auto x = PhaseOne<Rational>(g, h).run();
    return {x.has_value(), x.value_or(std::vector<Rational>{})};
  }
}

FeasibilityResult solve_cone(const IntMatrix& a, int l) {
  const int n = a.size();
  if (l < 0 || l >= n) throw std::out_of_range("distinguished index out of range");
  try {
    std::vector<std::vector<CheckedRational>> g(static_cast<std::size_t>(n) + 1,
                                                std::vector<CheckedRational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g[i][j] = CheckedRational(a(i, j));
    g[n][l] = 1;
    std::vector<CheckedRational> h(static_cast<std::size_t>(n) + 1);
    h[n] = 1;
    auto x = PhaseOne<CheckedRational>(g, h).run();
    FeasibilityResult res{x.has_value(), {}};
    if (x) {
      for (const auto& v : *x) res.witness.push_back(to_rational(v));
    }
    return res;
  } catch (const ArithmeticOverflow&) {
    std::vector<std::vector<Rational>> g(static_cast<std::size_t>(n) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g[i][j] = a(i, j);
    g[n][l] = 1;
    std::vector<Rational> h(static_cast<std::size_t>(n) + 1);
    h[n] = 1;
    auto x = PhaseOne<Rational>(g, h).run();
    return {x.has_value(), x.value_or(std::vector<Rational>{})};
  }
}

FeasibilityResult solve(const FeasibilitySystem& sys) {
  const int n = sys.a.size();
  if (sys.l < sys.r || sys.l >= n) throw InvalidArgument("feasibility system needs r <= l < n");
  std::vector<std::vector<Rational>> g;
  std::vector<Rational> h(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i < n; ++i) {
    auto& row = g.emplace_back();
    for (int j = 0; j < n; ++j) row.push_back(sys.a(i, j));
  }
  auto& last = g.emplace_back(static_cast<std::size_t>(n), Rational(0));
  last[sys.l] = 1;
  h[n] = 1;
  return solve_nonnegative(g, h);
}

bool feasible(const FeasibilitySystem& sys) { return solve(sys).feasible; }

std::vector<BigInt> scale_to_integers(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, denominator(q));
  BigInt g = 0;
  std::vector<BigInt> out;
  for (const auto& q : v) {
    out.push_back(numerator(q) * (l / denominator(q)));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

}  // namespace clusterdenom
