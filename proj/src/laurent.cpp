#include "clusterdenom/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "clusterdenom/errors.hpp"

namespace clusterdenom {

namespace {

Exponents::Value narrow(int v) {
  if (v < std::numeric_limits<Exponents::Value>::min() || v > std::numeric_limits<Exponents::Value>::max()) {
    throw std::overflow_error("Laurent exponent out of range");
  }
  return static_cast<Exponents::Value>(v);
}

struct ExponentHash {
  std::size_t operator()(const Exponents& e) const { return e.hash(); }
};

void require_same_ring(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.variables() != q.variables()) throw InvalidArgument("Laurent polynomials live in different rings");
}

bool divides(const BigInt& d, const BigInt& v) { return v % d == 0; }

}  // namespace

void Exponents::set(int i, int v) { e_[static_cast<std::size_t>(i)] = narrow(v); }

Exponents operator+(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = narrow(a.e_[i] + b.e_[i]);
  return r;
}

Exponents operator-(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = narrow(a.e_[i] - b.e_[i]);
  return r;
}

std::size_t Exponents::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (Value v : e_) {
    h ^= static_cast<std::uint16_t>(v);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

LaurentPolynomial::LaurentPolynomial(int n) : n_(n) {
  if (n < 1 || n > kMaxVariables) {
    throw InvalidArgument("Laurent polynomials support 1.." + std::to_string(kMaxVariables) + " variables");
  }
}

LaurentPolynomial LaurentPolynomial::constant(int n, const BigInt& c) {
  LaurentPolynomial p(n);
  if (c != 0) p.terms_.push_back({Exponents{}, c});
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(int n, int i) {
  if (i < 0 || i >= n) throw std::out_of_range("variable index out of range");
  LaurentPolynomial p(n);
  Exponents e;
  e.set(i, 1);
  p.terms_.push_back({e, 1});
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(int n, std::span<const int> exponents, const BigInt& c) {
  if (static_cast<int>(exponents.size()) != n) throw InvalidArgument("exponent vector length must equal n");
  LaurentPolynomial p(n);
  if (c == 0) return p;
  Exponents e;
  for (int i = 0; i < n; ++i) e.set(i, exponents[i]);
  p.terms_.push_back({e, c});
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(int n, std::vector<Term> terms) {
  LaurentPolynomial p(n);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
  for (auto& t : terms) {
    for (int i = n; i < kMaxVariables; ++i) {
      if (t.exponents[i] != 0) throw InvalidArgument("exponent set beyond the ring's variables");
    }
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
    } else if (t.coefficient != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::parse(int n, std::string_view text) {
  std::vector<Term> terms;
  while (!text.empty()) {
    const auto semi = text.find(';');
    const std::string_view term = text.substr(0, semi);
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    const auto colon = term.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("term lacks ':' separator");
    Term t{Exponents{}, BigInt(std::string(term.substr(0, colon)))};
    std::string_view rest = term.substr(colon + 1);
    for (int i = 0; i < n; ++i) {
      const auto comma = rest.find(',');
      const std::string_view field = rest.substr(0, comma);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc{} || ptr != field.data() + field.size()) throw InvalidArgument("bad exponent field");
      t.exponents.set(i, v);
      if ((comma == std::string_view::npos) != (i == n - 1)) throw InvalidArgument("wrong number of exponents");
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    terms.push_back(std::move(t));
  }
  return from_terms(n, std::move(terms));
}

bool LaurentPolynomial::all_coefficients_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coefficient > 0; });
}

LaurentPolynomial operator+(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  require_same_ring(p, q);
  LaurentPolynomial r(p.n_);
  r.terms_.reserve(p.terms_.size() + q.terms_.size());
  auto a = p.terms_.begin();
  auto b = q.terms_.begin();
  while (a != p.terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != p.terms_.end() && a->exponents < b->exponents)) {
      r.terms_.push_back(*a++);
    } else if (a == p.terms_.end() || b->exponents < a->exponents) {
      r.terms_.push_back(*b++);
    } else {
      BigInt c = a->coefficient + b->coefficient;
      if (c != 0) r.terms_.push_back({a->exponents, std::move(c)});
      ++a;
      ++b;
    }
  }
  return r;
}

LaurentPolynomial operator-(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  LaurentPolynomial neg = q;
  for (auto& t : neg.terms_) t.coefficient = -t.coefficient;
  return p + neg;
}

LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  require_same_ring(p, q);
  std::unordered_map<Exponents, BigInt, ExponentHash> acc;
  acc.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) acc[a.exponents + b.exponents] += a.coefficient * b.coefficient;
  }
  LaurentPolynomial r(p.n_);
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) r.terms_.push_back({e, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const LaurentPolynomial::Term& a, const LaurentPolynomial::Term& b) { return a.exponents < b.exponents; });
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result = constant(n_, 1);
  LaurentPolynomial base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

std::string LaurentPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << ';';
    first = false;
    os << t.coefficient << ':';
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << t.exponents[i];
  }
  return os.str();
}

std::size_t LaurentPolynomial::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (const auto& t : terms_) {
    h = h * 1000003U ^ t.exponents.hash();
    h = h * 1000003U ^ static_cast<std::size_t>(static_cast<long long>(t.coefficient % 1000000007));
  }
  return h;
}

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p + q; }
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p * q; }

LaurentPolynomial div_exact(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  require_same_ring(p, q);
  const int n = p.variables();
  if (q.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (p.is_zero()) return LaurentPolynomial(n);

  const auto qt = q.terms();
  if (qt.size() == 1) {
    std::vector<LaurentPolynomial::Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
      if (!divides(qt[0].coefficient, t.coefficient)) throw InexactDivision("coefficient not divisible");
      out.push_back({t.exponents - qt[0].exponents, t.coefficient / qt[0].coefficient});
    }
    return LaurentPolynomial::from_terms(n, std::move(out));
  }

  // Newton polytopes add under multiplication, so every quotient exponent
  // lies in the box [min p - min q, max p - max q].
  std::array<int, kMaxVariables> lo{}, hi{};
  for (int i = 0; i < n; ++i) {
    int pmin = INT32_MAX, pmax = INT32_MIN, qmin = INT32_MAX, qmax = INT32_MIN;
    for (const auto& t : p.terms()) {
      pmin = std::min<int>(pmin, t.exponents[i]);
      pmax = std::max<int>(pmax, t.exponents[i]);
    }
    for (const auto& t : qt) {
      qmin = std::min<int>(qmin, t.exponents[i]);
      qmax = std::max<int>(qmax, t.exponents[i]);
    }
    lo[i] = pmin - qmin;
    hi[i] = pmax - qmax;
    if (lo[i] > hi[i]) throw InexactDivision("Newton polytope of the divisor does not fit");
  }

  const auto& lead = qt.back();  // lexicographically largest
  std::map<Exponents, BigInt, std::greater<>> remainder;
  for (const auto& t : p.terms()) remainder.emplace(t.exponents, t.coefficient);
  std::vector<LaurentPolynomial::Term> quotient;
  while (!remainder.empty()) {
    auto top = remainder.begin();
    const Exponents shift = top->first - lead.exponents;
    for (int i = 0; i < n; ++i) {
      if (shift[i] < lo[i] || shift[i] > hi[i]) throw InexactDivision("quotient term leaves the Newton box");
    }
    if (!divides(lead.coefficient, top->second)) throw InexactDivision("coefficient not divisible");
    const BigInt c = top->second / lead.coefficient;
    for (const auto& t : qt) {
      const Exponents e = t.exponents + shift;
      auto [it, inserted] = remainder.try_emplace(e, 0);
      it->second -= c * t.coefficient;
      if (it->second == 0) remainder.erase(it);
    }
    quotient.push_back({shift, c});
  }
  return LaurentPolynomial::from_terms(n, std::move(quotient));
}

DenominatorVector denom_vector(const LaurentPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("the zero polynomial has no denominator vector");
  const int n = p.variables();
  DenominatorVector d(static_cast<std::size_t>(n), INT32_MIN);
  for (const auto& t : p.terms()) {
    for (int i = 0; i < n; ++i) d[i] = std::max(d[i], -static_cast<int>(t.exponents[i]));
  }
  return d;
}

LaurentPolynomial exchange_step(std::span<const LaurentPolynomial> cluster, const ExchangeMatrix& b, int k) {
  const int n = b.rank();
  if (static_cast<int>(cluster.size()) != n) throw InvalidArgument("cluster size must equal the matrix rank");
  if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
  const int vars = cluster[0].variables();
  LaurentPolynomial plus = LaurentPolynomial::constant(vars, 1);
  LaurentPolynomial minus = LaurentPolynomial::constant(vars, 1);
  for (int j = 0; j < n; ++j) {
    const auto bjk = b(j, k);
    if (bjk > 0) plus = plus * cluster[j].pow(static_cast<unsigned>(bjk));
    if (bjk < 0) minus = minus * cluster[j].pow(static_cast<unsigned>(-bjk));
  }
  return div_exact(plus + minus, cluster[k]);
}

}  // namespace clusterdenom
