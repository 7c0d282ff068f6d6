#include "ld/path_counting.hpp"

#include <stdexcept>

#include "ld/code.hpp"
#include "ld/generators.hpp"
#include "ld/solver.hpp"

namespace ld {

namespace {

int ceil_frac(int num, int den) {
    return (num + den - 1) / den;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit count overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit count overflow");
    return r;
}

// exact-division polynomial evaluation: numerator first, then one division
// that must leave no remainder
std::int64_t poly_over(std::int64_t m, std::initializer_list<std::int64_t> coeffs,
                       std::int64_t denom) {
    std::int64_t acc = 0;
    for (std::int64_t c : coeffs)
        acc = checked_add(checked_mul(acc, m), c);
    if (acc % denom != 0)
        throw std::logic_error("closed form expected an exact division");
    return acc / denom;
}

std::int64_t count_subsets_ld_star(int n, int k, int start, std::uint64_t s) {
    if (k == 0)
        return is_ld_star_code(n, code(s)) ? 1 : 0;
    std::int64_t total = 0;
    for (int j = start; j <= n - k; ++j)
        total += count_subsets_ld_star(n, k - 1, j + 1, s | std::uint64_t{1} << j);
    return total;
}

}  // namespace

std::int64_t count_table::a_value(int n, int k) {
    if (n < 1)
        throw std::invalid_argument("A(n, k) needs n >= 1");
    if (k < 0 || k > n)
        return 0;
    if (k < ceil_frac(2 * (n - 1), 5))
        return 0;  // below gamma^LD*(P_n) nothing qualifies
    if (n <= 5)
        return count_subsets_ld_star(n, k, 0, 0);
    std::uint64_t key = (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint32_t>(k);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    std::int64_t value = checked_add(
        checked_add(a_value(n - 1, k - 1), a_value(n - 2, k - 1)),
        checked_add(a_value(n - 4, k - 2), a_value(n - 5, k - 2)));
    memo_.emplace(key, value);
    return value;
}

std::int64_t a_value(int n, int k) {
    count_table t;
    return t.a_value(n, k);
}

std::optional<std::int64_t> a_closed_form(int n, int k) {
    if (n < 5)
        return std::nullopt;
    int m = n / 5, r = n % 5;
    if (m < 1)
        return std::nullopt;
    switch (r) {
        case 0:
            if (k == 2 * m)
                return poly_over(m, {1, 5, 2}, 2);
            break;
        case 1:
            if (k == 2 * m)
                return 1;
            break;
        case 2:
            if (k == 2 * m + 1)
                return poly_over(m, {1, 12, 29, 12}, 6);
            break;
        case 3:
            if (k == 2 * m + 1)
                return m + 2;
            break;
        case 4:
            if (k == 2 * m + 2)
                return poly_over(m, {1, 22, 131, 230, 120}, 24);
            break;
    }
    return std::nullopt;
}

std::int64_t c_of_n(int n) {
    if (n < 1)
        throw std::invalid_argument("C(n) needs n >= 1");
    if (n <= 4)
        return n;
    int g = ceil_frac(2 * n, 5);
    count_table t;
    return checked_add(checked_add(t.a_value(n - 1, g - 1), t.a_value(n - 3, g - 2)),
                       t.a_value(n - 4, g - 2));
}

std::int64_t c_closed_form(int n) {
    if (n < 5)
        throw std::invalid_argument("closed form of C(n) starts at n = 5");
    int m = n / 5, r = n % 5;
    switch (r) {
        case 0:
            return 1;
        case 1:
            return poly_over(m, {1, 12, 29, 6}, 6);
        case 2:
            return m + 2;
        case 3:
            return poly_over(m, {1, 22, 131, 206, 72}, 24);
        default:
            return poly_over(m, {1, 7, 8}, 2);
    }
}

std::int64_t brute_count(int n) {
    if (n < 1 || n > 25)
        throw std::invalid_argument("census brute force is limited to 1 <= n <= 25");
    return static_cast<std::int64_t>(enumerate_minimum_ld_codes(path_graph(n)).count());
}

std::int64_t brute_count_ld_star(int n, int k) {
    if (n < 1 || n > 22)
        throw std::invalid_argument("LD* brute force is limited to 1 <= n <= 22");
    if (k < 0 || k > n)
        return 0;
    return count_subsets_ld_star(n, k, 0, 0);
}

}  // namespace ld
