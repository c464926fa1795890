#include "wilsonlab/matrix.hpp"

#include <string>
#include <utility>

#include "wilsonlab/errors.hpp"
#include "wilsonlab/modmath.hpp"

namespace wilsonlab {

namespace {

// giuga_row_sum uses a smallest-prime-factor table up to this n; k^(n-1) is
// completely multiplicative in k so only prime k need a mod_pow.
constexpr std::uint64_t kGiugaSieveLimit = std::uint64_t{1} << 24;

}  // namespace

PowerMatrix::PowerMatrix(std::uint64_t p, std::vector<std::uint64_t> entries)
    : p_(p), dim_(static_cast<std::size_t>(p - 1)), entries_(std::move(entries)) {}

std::uint64_t PowerMatrix::entry(std::size_t row, std::size_t col) const {
  if (row < 1 || row > dim_ || col < 1 || col > dim_) {
    throw DomainError("PowerMatrix::entry: index out of range");
  }
  return entries_[(row - 1) * dim_ + (col - 1)];
}

std::span<const std::uint64_t> PowerMatrix::row(std::size_t row) const {
  if (row < 1 || row > dim_) {
    throw DomainError("PowerMatrix::row: index out of range");
  }
  return std::span<const std::uint64_t>(entries_).subspan((row - 1) * dim_, dim_);
}

PowerMatrix build_power_matrix(std::uint64_t p, std::uint64_t cap) {
  detail::require_odd_prime(p, "build_power_matrix");
  if (p > cap) {
    throw DomainError("build_power_matrix: p = " + std::to_string(p) + " exceeds the size cap " +
                      std::to_string(cap));
  }
  const auto dim = static_cast<std::size_t>(p - 1);
  std::vector<std::uint64_t> entries(dim * dim);
  for (std::size_t c = 1; c <= dim; ++c) {
    std::uint64_t power = 1;
    for (std::size_t r = 1; r <= dim; ++r) {
      power = mod_mul(power, c, p);
      entries[(r - 1) * dim + (c - 1)] = power;
    }
  }
  return PowerMatrix(p, std::move(entries));
}

std::uint64_t determinant_mod(std::span<const std::uint64_t> entries, std::size_t dim, std::uint64_t p) {
  if (entries.size() != dim * dim) {
    throw DomainError("determinant_mod: entry count does not match dimension");
  }
  std::vector<std::uint64_t> a(entries.begin(), entries.end());
  for (auto& x : a) {
    x %= p;
  }
  auto at = [&a, dim](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * dim + c]; };

  std::uint64_t det = 1 % p;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && at(pivot, col) == 0) {
      ++pivot;
    }
    if (pivot == dim) {
      return 0;
    }
    if (pivot != col) {
      for (std::size_t c = col; c < dim; ++c) {
        std::swap(at(pivot, c), at(col, c));
      }
      det = mod_sub(0, det, p);
    }
    det = mod_mul(det, at(col, col), p);
    const std::uint64_t inv = mod_inv(at(col, col), p);
    for (std::size_t r = col + 1; r < dim; ++r) {
      if (at(r, col) == 0) {
        continue;
      }
      const std::uint64_t factor = mod_mul(at(r, col), inv, p);
      for (std::size_t c = col; c < dim; ++c) {
        at(r, c) = mod_sub(at(r, c), mod_mul(factor, at(col, c), p), p);
      }
    }
  }
  return det;
}

std::uint64_t det_mod_p(const PowerMatrix& a) { return determinant_mod(a.entries(), a.dimension(), a.prime()); }

std::uint64_t diagonal_product(const PowerMatrix& a) {
  const std::uint64_t p = a.prime();
  std::uint64_t acc = 1;
  for (std::size_t r = 1; r <= a.dimension(); ++r) {
    acc = mod_mul(acc, a.entry(r, r), p);
  }
  return acc;
}

std::uint64_t giuga_row_sum(std::uint64_t n) {
  if (n < 2) {
    throw DomainError("giuga_row_sum: n must be at least 2");
  }
  if (n > kMaxModulus) {
    throw DomainError("giuga_row_sum: n exceeds kMaxModulus");
  }
  const std::uint64_t e = n - 1;
  std::uint64_t sum = 1 % n;
  if (n > kGiugaSieveLimit) {
    for (std::uint64_t k = 2; k < n; ++k) {
      sum = mod_add(sum, mod_pow(k, e, n), n);
    }
    return sum;
  }

  const auto size = static_cast<std::size_t>(n);
  std::vector<std::uint32_t> spf(size, 0);
  std::vector<std::uint64_t> power(size, 0);
  power[1] = 1 % n;
  for (std::size_t k = 2; k < size; ++k) {
    if (spf[k] == 0) {
      spf[k] = static_cast<std::uint32_t>(k);
      for (std::size_t multiple = k * k; multiple < size; multiple += k) {
        if (spf[multiple] == 0) {
          spf[multiple] = static_cast<std::uint32_t>(k);
        }
      }
      power[k] = mod_pow(k, e, n);
    } else {
      power[k] = mod_mul(power[spf[k]], power[k / spf[k]], n);
    }
    sum = mod_add(sum, power[k], n);
  }
  return sum;
}

}  // namespace wilsonlab
