#include "dofb/field.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dofb/error.hpp"

namespace dofb {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<WideProduct>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These witnesses are deterministic for all 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus < kMinModulus || modulus >= (std::uint64_t{1} << 63)) {
    throw InvalidParams("field modulus must lie in [2^31-1, 2^63): " + std::to_string(modulus));
  }
  if (!is_prime(modulus)) {
    throw InvalidParams("field modulus is not prime: " + std::to_string(modulus));
  }
}

PrimeField PrimeField::from_environment() {
  const char* raw = std::getenv("DOFB_PRIME");
  if (raw == nullptr || *raw == '\0') return PrimeField{};
  std::size_t consumed = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(raw, &consumed, 0);
  } catch (const std::exception&) {
    throw InvalidParams(std::string("DOFB_PRIME is not an integer: ") + raw);
  }
  if (raw[consumed] != '\0') {
    throw InvalidParams(std::string("DOFB_PRIME is not an integer: ") + raw);
  }
  return PrimeField{value};
}

FieldElement PrimeField::pow(FieldElement base, std::uint64_t exp) const noexcept {
  return powmod(base, exp, p_);
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return powmod(a, p_ - 2, p_);
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) noexcept {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

bool is_zero(std::span<const FieldElement> row) noexcept {
  for (FieldElement x : row) {
    if (x != 0) return false;
  }
  return true;
}

RowBasis::RowBasis(const PrimeField& field, std::size_t width) : field_(field), order_(width) {
  std::iota(order_.begin(), order_.end(), std::size_t{0});
}

RowBasis::RowBasis(const PrimeField& field, std::vector<std::size_t> column_order)
    : field_(field), order_(std::move(column_order)) {}

Row RowBasis::reduce(std::span<const FieldElement> row) const {
  if (row.size() != order_.size()) throw std::invalid_argument("row width mismatch");
  Row out(row.begin(), row.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const FieldElement factor = out[pivots_[i]];
    if (factor == 0) continue;
    const Row& basis_row = rows_[i];
    for (std::size_t c = 0; c < out.size(); ++c) {
      if (basis_row[c] != 0) out[c] = field_.sub(out[c], field_.mul(factor, basis_row[c]));
    }
  }
  return out;
}

bool RowBasis::add(std::span<const FieldElement> row) {
  Row rem = reduce(row);
  for (std::size_t col : order_) {
    if (rem[col] == 0) continue;
    const FieldElement scale = field_.inv(rem[col]);
    for (FieldElement& x : rem) x = field_.mul(x, scale);
    rows_.push_back(std::move(rem));
    pivots_.push_back(col);
    return true;
  }
  return false;
}

bool RowBasis::contains(std::span<const FieldElement> row) const { return is_zero(reduce(row)); }

std::size_t matrix_rank(const PrimeField& field, std::span<const Row> rows, std::size_t width) {
  RowBasis basis(field, width);
  for (const Row& r : rows) basis.add(r);
  return basis.rank();
}

}  // namespace dofb
