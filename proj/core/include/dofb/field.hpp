#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dofb {

using FieldElement = std::uint64_t;
using Row = std::vector<FieldElement>;

__extension__ using WideProduct = unsigned __int128;

/// Arithmetic modulo a prime P with 2^31-1 <= P < 2^63.
///
/// The field stands in for continuously distributed channel gains: a random
/// nonzero element plays the role of a generic real gain, and a polynomial
/// identity that fails generically fails on a random draw with probability
/// at most deg/P.
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultModulus = (std::uint64_t{1} << 61) - 1;
  static constexpr std::uint64_t kMinModulus = (std::uint64_t{1} << 31) - 1;

  PrimeField() : p_(kDefaultModulus) {}
  explicit PrimeField(std::uint64_t modulus);

  /// Field configured from DOFB_PRIME when set, default modulus otherwise.
  static PrimeField from_environment();

  std::uint64_t modulus() const noexcept { return p_; }

  FieldElement reduce(std::uint64_t x) const noexcept { return x % p_; }
  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
  }
  FieldElement neg(FieldElement a) const noexcept { return a == 0 ? 0 : p_ - a; }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return static_cast<FieldElement>((static_cast<WideProduct>(a) * b) % p_);
  }
  FieldElement pow(FieldElement base, std::uint64_t exp) const noexcept;
  /// Multiplicative inverse; a must be nonzero.
  FieldElement inv(FieldElement a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// splitmix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Incremental row-echelon basis over a prime field.
///
/// Pivots are chosen as the first nonzero entry in `column_order`; rows are
/// stored fully reduced against earlier pivots, so a stored row is zero on
/// every column that precedes its pivot in that order.
class RowBasis {
 public:
  RowBasis(const PrimeField& field, std::size_t width);
  RowBasis(const PrimeField& field, std::vector<std::size_t> column_order);

  /// Adds `row` if it is independent of the current basis.
  bool add(std::span<const FieldElement> row);
  /// Remainder of `row` after elimination against the basis.
  Row reduce(std::span<const FieldElement> row) const;
  bool contains(std::span<const FieldElement> row) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return order_.size(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const PrimeField& field() const noexcept { return field_; }

 private:
  PrimeField field_;
  std::vector<std::size_t> order_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t matrix_rank(const PrimeField& field, std::span<const Row> rows, std::size_t width);

bool is_zero(std::span<const FieldElement> row) noexcept;

}  // namespace dofb
