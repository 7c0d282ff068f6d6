#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

namespace ld {

// A(n, k): number of LD*-codes of cardinality k in P_n. Values for n <= 5
// come from direct enumeration; larger n use the recurrence
//   A(n, k) = A(n-1, k-1) + A(n-2, k-1) + A(n-4, k-2) + A(n-5, k-2)
// with A(n, k) = 0 whenever k < ceil(2(n-1)/5) or k > n.
// All arithmetic is checked 64-bit; overflow throws.
class count_table {
  public:
    std::int64_t a_value(int n, int k);

  private:
    std::unordered_map<std::uint64_t, std::int64_t> memo_;
};

std::int64_t a_value(int n, int k);

// Closed forms on the five residue tracks nearest the minimum size, m >= 1:
//   A(5m,   2m)   = (m^2 + 5m + 2) / 2
//   A(5m+1, 2m)   = 1
//   A(5m+2, 2m+1) = (m^3 + 12m^2 + 29m + 12) / 6
//   A(5m+3, 2m+1) = m + 2
//   A(5m+4, 2m+2) = (m^4 + 22m^3 + 131m^2 + 230m + 120) / 24
// Returns nothing when (n, k) is off these tracks. Division is exact and
// asserted so.
std::optional<std::int64_t> a_closed_form(int n, int k);

// C(n): number of minimum LD-codes of P_n. C(1..4) = 1, 2, 3, 4; for n >= 5,
// with g = ceil(2n/5),
//   C(n) = A(n-1, g-1) + A(n-3, g-2) + A(n-4, g-2).
std::int64_t c_of_n(int n);

// Closed form of C(n) for n = 5m + r >= 5:
//   r=0: 1                                  r=1: (m^3 + 12m^2 + 29m + 6) / 6
//   r=2: m + 2                              r=3: (m^4 + 22m^3 + 131m^2 + 206m + 72) / 24
//   r=4: (m^2 + 7m + 8) / 2
std::int64_t c_closed_form(int n);

// Census count of P_n by full enumeration. Guarded to n <= 25.
std::int64_t brute_count(int n);

// LD*-code count of P_n at cardinality k by full enumeration, n <= 22.
std::int64_t brute_count_ld_star(int n, int k);

}  // namespace ld
