#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wilsonlab {

/// Default largest p accepted by build_power_matrix. Elimination is O(p^3);
/// p = 499 finishes well under a second.
inline constexpr std::uint64_t kDefaultMatrixCap = 499;

/// The (p-1)x(p-1) matrix over F_p with entry(r, c) = c^r mod p, indices
/// 1-based. Immutable after construction.
class PowerMatrix {
 public:
  std::uint64_t prime() const noexcept { return p_; }
  std::size_t dimension() const noexcept { return dim_; }

  std::uint64_t entry(std::size_t row, std::size_t col) const;
  std::span<const std::uint64_t> row(std::size_t row) const;
  std::span<const std::uint64_t> entries() const noexcept { return entries_; }

 private:
  friend PowerMatrix build_power_matrix(std::uint64_t p, std::uint64_t cap);

  PowerMatrix(std::uint64_t p, std::vector<std::uint64_t> entries);

  std::uint64_t p_;
  std::size_t dim_;
  std::vector<std::uint64_t> entries_;  // row-major
};

/// Throws DomainError unless p is an odd prime no larger than cap.
PowerMatrix build_power_matrix(std::uint64_t p, std::uint64_t cap = kDefaultMatrixCap);

/// Determinant of a dense row-major dim x dim matrix over F_p (p prime).
/// Gaussian elimination with first-nonzero pivoting.
std::uint64_t determinant_mod(std::span<const std::uint64_t> entries, std::size_t dim, std::uint64_t p);

std::uint64_t det_mod_p(const PowerMatrix& a);

/// prod entry(r, r) mod p, i.e. H(p-1) mod p.
std::uint64_t diagonal_product(const PowerMatrix& a);

/// Sum of k^(n-1) over 1 <= k < n, mod n. Defined for every n >= 2; Giuga's
/// conjecture says this is n-1 exactly when n is prime.
std::uint64_t giuga_row_sum(std::uint64_t n);

}  // namespace wilsonlab
