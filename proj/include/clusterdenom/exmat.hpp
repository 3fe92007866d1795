#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clusterdenom {

/// Skew-symmetrizable integer matrix B together with its symmetrizer d,
/// i.e. d_i * b_ij == -d_j * b_ji for all i, j. Immutable value type.
///
/// Indices are 0-based throughout the C++ API.
class ExchangeMatrix {
 public:
  using Entry = std::int64_t;

  /// Builds from rows and derives the reduced symmetrizer.
  /// Throws InvalidMatrix if the matrix is not square, has a nonzero diagonal
  /// or admits no positive symmetrizer.
  static ExchangeMatrix from_rows(const std::vector<std::vector<Entry>>& rows);

  /// Builds from rows with a caller-provided symmetrizer, which is validated and
  /// divided by its gcd.
  static ExchangeMatrix from_rows(const std::vector<std::vector<Entry>>& rows,
                                  std::vector<Entry> symmetrizer);

  int rank() const { return n_; }
  Entry operator()(int i, int j) const { return b_[static_cast<std::size_t>(i * n_ + j)]; }
  std::span<const Entry> symmetrizer() const { return d_; }
  /// Row-major entries.
  std::span<const Entry> entries() const { return b_; }
  std::vector<std::vector<Entry>> rows() const;

  /// Fomin-Zelevinsky matrix mutation in direction k.
  /// Throws std::out_of_range for a bad k and std::overflow_error if entries leave int64.
  ExchangeMatrix mutate(int k) const;

  /// Simultaneous row/column permutation: result(i, j) = b(perm[i], perm[j]).
  ExchangeMatrix permuted(std::span<const int> perm) const;

  bool is_skew_symmetric() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
  friend auto operator<=>(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.b_ <=> b.b_;
  }

  std::string to_string() const;

 private:
  ExchangeMatrix(int n, std::vector<Entry> b, std::vector<Entry> d)
      : n_(n), b_(std::move(b)), d_(std::move(d)) {}

  int n_ = 0;
  std::vector<Entry> b_;
  std::vector<Entry> d_;
};

/// Solves d_i b_ij = -d_j b_ji for positive integers d, each connected
/// component scaled to gcd 1. Returns nullopt when no solution exists.
std::optional<std::vector<ExchangeMatrix::Entry>> find_symmetrizer(
    int n, std::span<const ExchangeMatrix::Entry> row_major);

enum class CartanFamily { A, B, C, D, E, F, G };

struct CartanType {
  CartanFamily family;
  int rank;

  std::string name() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Parses "A2", "D4", "E6", "F4", "G2", ... Throws InvalidArgument.
CartanType parse_cartan_type(std::string_view name);

/// Throws InvalidArgument if (family, rank) is not a finite-type Dynkin diagram.
void validate_cartan_type(const CartanType& type);

/// Standard Cartan matrix (a_ii = 2, Bourbaki numbering).
std::vector<std::vector<int>> cartan_matrix(const CartanType& type);

/// Bipartite-orientation exchange matrix whose Cartan companion is cartan_matrix(type).
ExchangeMatrix standard_matrix(const CartanType& type);
ExchangeMatrix standard_matrix(std::string_view name);

/// Cartan companion: a_ii = 2, a_ij = -|b_ij|.
std::vector<std::vector<int>> cartan_companion(const ExchangeMatrix& b);

/// Lexicographically minimal row-major flattening over all simultaneous
/// permutations, found by branch and bound.
struct CanonicalForm {
  ExchangeMatrix matrix;
  /// matrix == input.permuted(permutation)
  std::vector<int> permutation;
};

CanonicalForm canonical_form(const ExchangeMatrix& b);

/// True iff some entry pair has |b_ij * b_ji| > 3.
bool violates_two_finiteness(const ExchangeMatrix& b);

struct ClassEnumerationOptions {
  std::size_t node_budget = 1'000'000;
};

/// Mut(B): the permutation classes of all matrices mutation-equivalent to B,
/// stored as canonical forms in ascending order.
struct MatrixClassSet {
  std::vector<ExchangeMatrix> representatives;

  std::size_t size() const { return representatives.size(); }
  friend bool operator==(const MatrixClassSet&, const MatrixClassSet&) = default;
};

/// Throws BudgetExhausted if more than node_budget classes are visited.
bool is_finite_type(const ExchangeMatrix& b, const ClassEnumerationOptions& opts = {});

/// Throws InvalidArgument when B is not of finite type and BudgetExhausted
/// past the budget.
MatrixClassSet mutation_classes(const ExchangeMatrix& b, const ClassEnumerationOptions& opts = {});

}  // namespace clusterdenom
