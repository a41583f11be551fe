#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

/// Coefficient field for homology: the rationals, or Z/p for a prime p.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec{0}; }
  /// Throws InputError when `p` is not prime or does not fit 31 bits.
  static FieldSpec prime(std::uint64_t p);
  /// "q" / "Q" / "rationals" or a decimal prime.
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

struct MatrixEntry {
  std::uint32_t row;
  std::uint32_t col;
  std::int64_t value;
};

/// Integer matrix in coordinate form; duplicate coordinates are not allowed.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<MatrixEntry> entries;

  double density() const;
};

struct RankOptions {
  /// Below this fill ratio the rational path uses sparse incremental echelon form.
  double sparse_threshold = 0.05;
  /// Matrices with fewer rows and columns than this always go dense.
  std::size_t sparse_min_dim = 48;
};

/// Exact rank over the given field.
std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field, const RankOptions& opts = {});

namespace linalg {
// Individual elimination routes, exposed so tests can cross-check them.
std::size_t rank_rational_dense(const SparseIntMatrix& m);
std::size_t rank_rational_sparse(const SparseIntMatrix& m);
std::size_t rank_mod_p_dense(const SparseIntMatrix& m, std::uint32_t p);
std::size_t rank_gf2_dense(const SparseIntMatrix& m);
}  // namespace linalg

}  // namespace toric
