#include "clusterdenom/exmat.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "clusterdenom/errors.hpp"
#include "clusterdenom/numeric.hpp"

namespace clusterdenom {

namespace {

using Entry = ExchangeMatrix::Entry;

std::vector<Entry> flatten(const std::vector<std::vector<Entry>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw InvalidMatrix("exchange matrix must have positive rank");
  std::vector<Entry> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidMatrix("exchange matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (flat[i * n + i] != 0) throw InvalidMatrix("exchange matrix diagonal must be zero");
  }
  return flat;
}

Entry positive_part(Entry x) { return x > 0 ? x : 0; }

Entry checked_mul(Entry a, Entry b) {
  Entry r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exchange matrix entry overflow");
  return r;
}

Entry checked_add(Entry a, Entry b) {
  Entry r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exchange matrix entry overflow");
  return r;
}

}  // namespace

std::optional<std::vector<Entry>> find_symmetrizer(int n, std::span<const Entry> b) {
  const auto at = [&](int i, int j) { return b[static_cast<std::size_t>(i * n + j)]; };
  std::vector<Rational> ratio(static_cast<std::size_t>(n), Rational(0));
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  int components = 0;
  for (int root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    component[root] = components;
    ratio[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Entry bij = at(i, j);
        const Entry bji = at(j, i);
        if (bij == 0 && bji == 0) continue;
        // d_i b_ij = -d_j b_ji needs opposite nonzero signs
        if (bij == 0 || bji == 0 || (bij > 0) == (bji > 0)) return std::nullopt;
        const Rational dj = ratio[i] * Rational(-bij) / Rational(bji);
        if (component[j] < 0) {
          component[j] = components;
          ratio[j] = dj;
          queue.push_back(j);
        } else if (ratio[j] != dj) {
          return std::nullopt;
        }
      }
    }
    ++components;
  }
  std::vector<Entry> d(static_cast<std::size_t>(n));
  for (int c = 0; c < components; ++c) {
    BigInt lcm_den = 1;
    for (int i = 0; i < n; ++i) {
      if (component[i] == c) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(ratio[i]));
    }
    BigInt g = 0;
    std::vector<BigInt> scaled(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (component[i] != c) continue;
      scaled[i] = numerator(ratio[i]) * (lcm_den / denominator(ratio[i]));
      g = boost::multiprecision::gcd(g, scaled[i]);
    }
    for (int i = 0; i < n; ++i) {
      if (component[i] != c) continue;
      const BigInt v = scaled[i] / g;
      if (v <= 0 || v > BigInt(INT32_MAX)) return std::nullopt;
      d[i] = static_cast<Entry>(v);
    }
  }
  return d;
}

ExchangeMatrix ExchangeMatrix::from_rows(const std::vector<std::vector<Entry>>& rows) {
  std::vector<Entry> flat = flatten(rows);
  const int n = static_cast<int>(rows.size());
  auto d = find_symmetrizer(n, flat);
  if (!d) throw InvalidMatrix("matrix is not skew-symmetrizable");
  return {n, std::move(flat), std::move(*d)};
}

ExchangeMatrix ExchangeMatrix::from_rows(const std::vector<std::vector<Entry>>& rows,
                                         std::vector<Entry> symmetrizer) {
  std::vector<Entry> flat = flatten(rows);
  const int n = static_cast<int>(rows.size());
  if (static_cast<int>(symmetrizer.size()) != n) throw InvalidMatrix("symmetrizer length must equal rank");
  Entry g = 0;
  for (Entry v : symmetrizer) {
    if (v <= 0) throw InvalidMatrix("symmetrizer entries must be positive");
    g = std::gcd(g, v);
  }
  for (Entry& v : symmetrizer) v /= g;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const BigInt lhs = BigInt(symmetrizer[i]) * flat[static_cast<std::size_t>(i * n + j)];
      const BigInt rhs = -BigInt(symmetrizer[j]) * flat[static_cast<std::size_t>(j * n + i)];
      if (lhs != rhs) throw InvalidMatrix("symmetrizer does not skew-symmetrize the matrix");
    }
  }
  return {n, std::move(flat), std::move(symmetrizer)};
}

std::vector<std::vector<Entry>> ExchangeMatrix::rows() const {
  std::vector<std::vector<Entry>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[i].assign(b_.begin() + i * n_, b_.begin() + (i + 1) * n_);
  return out;
}

ExchangeMatrix ExchangeMatrix::mutate(int k) const {
  if (k < 0 || k >= n_) throw std::out_of_range("mutation index out of range");
  std::vector<Entry> out(b_.size());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const Entry bij = (*this)(i, j);
      if (i == k || j == k) {
        out[static_cast<std::size_t>(i * n_ + j)] = -bij;
        continue;
      }
      const Entry bik = (*this)(i, k);
      const Entry bkj = (*this)(k, j);
      const Entry plus = checked_mul(positive_part(bik), positive_part(bkj));
      const Entry minus = checked_mul(positive_part(-bik), positive_part(-bkj));
      out[static_cast<std::size_t>(i * n_ + j)] = checked_add(bij, plus - minus);
    }
  }
  return {n_, std::move(out), d_};
}

ExchangeMatrix ExchangeMatrix::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidArgument("permutation length must equal rank");
  std::vector<Entry> out(b_.size());
  std::vector<Entry> d(d_.size());
  for (int i = 0; i < n_; ++i) {
    d[i] = d_[perm[i]];
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i * n_ + j)] = (*this)(perm[i], perm[j]);
  }
  return {n_, std::move(out), std::move(d)};
}

bool ExchangeMatrix::is_skew_symmetric() const {
  return std::all_of(d_.begin(), d_.end(), [](Entry v) { return v == 1; });
}

std::string ExchangeMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    if (i) os << ',';
    os << '[';
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Dynkin types

std::string CartanType::name() const {
  static constexpr const char* kLetters = "ABCDEFG";
  return std::string(1, kLetters[static_cast<int>(family)]) + std::to_string(rank);
}

CartanType parse_cartan_type(std::string_view name) {
  if (name.size() < 2) throw InvalidArgument("type name must look like D4 or E6");
  const char letter = name.front();
  if (letter < 'A' || letter > 'G') throw InvalidArgument("unknown Cartan family: " + std::string(name));
  int rank = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') throw InvalidArgument("bad rank in type name: " + std::string(name));
    rank = rank * 10 + (c - '0');
    if (rank > 1000) throw InvalidArgument("rank too large: " + std::string(name));
  }
  CartanType type{static_cast<CartanFamily>(letter - 'A'), rank};
  validate_cartan_type(type);
  return type;
}

void validate_cartan_type(const CartanType& type) {
  const int n = type.rank;
  bool ok = false;
  switch (type.family) {
    case CartanFamily::A: ok = n >= 1; break;
    case CartanFamily::B:
    case CartanFamily::C: ok = n >= 2; break;
    case CartanFamily::D: ok = n >= 4; break;
    case CartanFamily::E: ok = n >= 6 && n <= 8; break;
    case CartanFamily::F: ok = n == 4; break;
    case CartanFamily::G: ok = n == 2; break;
  }
  if (!ok) throw InvalidArgument("not a finite-type Dynkin diagram: " + type.name());
}

std::vector<std::vector<int>> cartan_matrix(const CartanType& type) {
  validate_cartan_type(type);
  const int n = type.rank;
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  const auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type.family) {
    case CartanFamily::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case CartanFamily::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case CartanFamily::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case CartanFamily::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case CartanFamily::E:
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case CartanFamily::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[1][2] = -2;
      break;
    case CartanFamily::G:
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

ExchangeMatrix standard_matrix(const CartanType& type) {
  const auto a = cartan_matrix(type);
  const int n = type.rank;
  // two-colour the Dynkin tree; colour-0 vertices are sources
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (i != j && a[i][j] != 0 && colour[j] < 0) {
          colour[j] = 1 - colour[i];
          queue.push_back(j);
        }
      }
    }
  }
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(n), std::vector<Entry>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      rows[i][j] = colour[i] == 0 ? -a[i][j] : a[i][j];
    }
  }
  return ExchangeMatrix::from_rows(rows);
}

ExchangeMatrix standard_matrix(std::string_view name) { return standard_matrix(parse_cartan_type(name)); }

std::vector<std::vector<int>> cartan_companion(const ExchangeMatrix& b) {
  const int n = b.rank();
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a[i][j] = i == j ? 2 : -static_cast<int>(b(i, j) < 0 ? -b(i, j) : b(i, j));
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// Canonical forms and mutation classes

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const ExchangeMatrix& b) : b_(b), n_(b.rank()) {
    perm_.resize(static_cast<std::size_t>(n_));
    used_.assign(static_cast<std::size_t>(n_), false);
  }

  std::vector<int> run() {
    search(0);
    return best_perm_;
  }

 private:
  Entry at(int i, int j) const { return b_(perm_[i], perm_[j]); }

  // compares row 0 prefix [0, depth] against the incumbent
  int compare_prefix(int depth) const {
    for (int j = 0; j <= depth; ++j) {
      const Entry lhs = at(0, j);
      const Entry rhs = best_[static_cast<std::size_t>(j)];
      if (lhs != rhs) return lhs < rhs ? -1 : 1;
    }
    return 0;
  }

  void search(int depth) {
    if (depth == n_) {
      leaf();
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      perm_[depth] = v;
      if (!best_perm_.empty() && compare_prefix(depth) > 0) continue;
      used_[v] = true;
      search(depth + 1);
      used_[v] = false;
    }
  }

  void leaf() {
    if (best_perm_.empty()) {
      take();
      return;
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        const Entry lhs = at(i, j);
        const Entry rhs = best_[static_cast<std::size_t>(i * n_ + j)];
        if (lhs < rhs) {
          take();
          return;
        }
        if (lhs > rhs) return;
      }
    }
  }

  void take() {
    best_perm_ = perm_;
    best_.resize(static_cast<std::size_t>(n_ * n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) best_[static_cast<std::size_t>(i * n_ + j)] = at(i, j);
  }

  const ExchangeMatrix& b_;
  int n_;
  std::vector<int> perm_;
  std::vector<bool> used_;
  std::vector<int> best_perm_;
  std::vector<Entry> best_;
};

// nullopt when some class member violates 2-finiteness
std::optional<std::vector<ExchangeMatrix>> enumerate_class(const ExchangeMatrix& b,
                                                           const ClassEnumerationOptions& opts) {
  if (violates_two_finiteness(b)) return std::nullopt;
  std::set<ExchangeMatrix> seen;
  std::vector<ExchangeMatrix> order;
  std::deque<ExchangeMatrix> queue;
  ExchangeMatrix root = canonical_form(b).matrix;
  seen.insert(root);
  order.push_back(root);
  queue.push_back(std::move(root));
  while (!queue.empty()) {
    const ExchangeMatrix current = std::move(queue.front());
    queue.pop_front();
    for (int k = 0; k < current.rank(); ++k) {
      ExchangeMatrix next = current.mutate(k);
      if (violates_two_finiteness(next)) return std::nullopt;
      ExchangeMatrix canon = canonical_form(next).matrix;
      if (seen.contains(canon)) continue;
      if (seen.size() >= opts.node_budget) {
        throw BudgetExhausted("mutation-class enumeration exceeded the node budget of " +
                              std::to_string(opts.node_budget));
      }
      seen.insert(canon);
      order.push_back(canon);
      queue.push_back(std::move(canon));
    }
  }
  return order;
}

}  // namespace

CanonicalForm canonical_form(const ExchangeMatrix& b) {
  std::vector<int> perm = CanonicalSearch(b).run();
  ExchangeMatrix m = b.permuted(perm);
  return {std::move(m), std::move(perm)};
}

bool violates_two_finiteness(const ExchangeMatrix& b) {
  const int n = b.rank();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Entry p;
      if (__builtin_mul_overflow(b(i, j), b(j, i), &p)) return true;
      if (p < -3 || p > 3) return true;
    }
  }
  return false;
}

bool is_finite_type(const ExchangeMatrix& b, const ClassEnumerationOptions& opts) {
  return enumerate_class(b, opts).has_value();
}

MatrixClassSet mutation_classes(const ExchangeMatrix& b, const ClassEnumerationOptions& opts) {
  auto members = enumerate_class(b, opts);
  if (!members) throw InvalidArgument("matrix is not of finite type");
  std::sort(members->begin(), members->end());
  return MatrixClassSet{std::move(*members)};
}

}  // namespace clusterdenom
