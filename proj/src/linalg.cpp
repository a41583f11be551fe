#include "toric/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <map>
#include <utility>

#include "toric/error.hpp"
#include "toric/kernels.hpp"

namespace toric {
namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime(p)) {
    throw InputError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec{static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("unrecognised field '" + std::string(text) + "' (expected q or a prime)");
  }
  return prime(p);
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(modulus_) + ")";
}

double SparseIntMatrix::density() const {
  if (rows == 0 || cols == 0) return 0.0;
  return static_cast<double>(entries.size()) / (static_cast<double>(rows) * static_cast<double>(cols));
}

namespace linalg {

// Fraction-free (Bareiss) elimination; every intermediate entry is a minor of
// the input, so the integers stay exact without rational normalisation.
std::size_t rank_rational_dense(const SparseIntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<std::vector<mpz_class>> a(m.rows, std::vector<mpz_class>(m.cols));
  for (const auto& e : m.entries) a[e.row][e.col] = static_cast<long>(e.value);

  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    const mpz_class& piv = a[rank][col];
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const mpz_class lead = a[r][col];
      for (std::size_t c = col + 1; c < m.cols; ++c) {
        mpz_class v = piv * a[r][c] - lead * a[rank][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r][c] = std::move(v);
      }
      a[r][col] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

// Incremental echelon basis keyed by leading column. Rows are reduced one at a
// time against the pivots found so far.
std::size_t rank_rational_sparse(const SparseIntMatrix& m) {
  using Row = std::vector<std::pair<std::uint32_t, mpq_class>>;
  std::vector<Row> rows(m.rows);
  for (const auto& e : m.entries) rows[e.row].emplace_back(e.col, mpq_class(static_cast<long>(e.value)));
  std::map<std::uint32_t, Row> pivots;

  Row scratch;
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const Row& piv = it->second;  // leading coefficient is 1
      const mpq_class factor = row.front().second;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          scratch.push_back(std::move(row[i++]));
        } else if (i == row.size() || piv[j].first < row[i].first) {
          scratch.emplace_back(piv[j].first, -factor * piv[j].second);
          ++j;
        } else {
          mpq_class v = row[i].second - factor * piv[j].second;
          if (v != 0) scratch.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
    }
    if (row.empty()) continue;
    const mpq_class lead = row.front().second;
    for (auto& [c, v] : row) v /= lead;
    const std::uint32_t key = row.front().first;
    pivots.emplace(key, std::move(row));
  }
  return pivots.size();
}

std::size_t rank_mod_p_dense(const SparseIntMatrix& m, std::uint32_t p) {
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<std::vector<std::uint32_t>> a(m.rows, std::vector<std::uint32_t>(m.cols, 0));
  for (const auto& e : m.entries) a[e.row][e.col] = reduce(e.value, p);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint32_t inv = inverse_mod(a[rank][col], p);
    std::span<const std::uint32_t> src(a[rank].data() + col, m.cols - col);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (a[r][col] == 0) continue;
      const auto factor = static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(p - a[r][col]) * inv) % p);
      kernels::axpy_mod(std::span<std::uint32_t>(a[r].data() + col, m.cols - col), src, factor, p);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_gf2_dense(const SparseIntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  const std::size_t words = (m.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> a(m.rows, std::vector<std::uint64_t>(words, 0));
  for (const auto& e : m.entries) {
    if (e.value & 1) a[e.row][e.col / 64] ^= (1ull << (e.col % 64));
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = 1ull << (col % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows && (a[pivot][w] & bit) == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    std::span<const std::uint64_t> src(a[rank].data() + w, words - w);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (a[r][w] & bit) kernels::xor_words(std::span<std::uint64_t>(a[r].data() + w, words - w), src);
    }
    ++rank;
  }
  return rank;
}

}  // namespace linalg

std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field, const RankOptions& opts) {
  if (m.rows == 0 || m.cols == 0 || m.entries.empty()) return 0;
  if (!field.is_rational()) {
    return field.modulus() == 2 ? linalg::rank_gf2_dense(m) : linalg::rank_mod_p_dense(m, field.modulus());
  }
  const bool large = m.rows >= opts.sparse_min_dim && m.cols >= opts.sparse_min_dim;
  if (large && m.density() < opts.sparse_threshold) return linalg::rank_rational_sparse(m);
  return linalg::rank_rational_dense(m);
}

}  // namespace toric
