#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "spantree/multigraph.hpp"
#include "spantree/numbers.hpp"
#include "spantree/treecount.hpp"

namespace spantree {

enum class Family { Fan, FanPrime, Ladder, Wheel, Complete, CompleteBipartite };

// Fan: a hub joined to every vertex of a path on n vertices.
// n+1 vertices, 2n-1 edges.  tau follows the even-indexed Fibonacci numbers.
inline Multigraph fan(int n) {
  if (n < 1) throw std::invalid_argument("fan size must be positive");
  Multigraph g(n + 1);
  for (int i = 1; i <= n; ++i) g = g.add_edge(0, i);
  for (int i = 1; i < n; ++i) g = g.add_edge(i, i + 1);
  return g;
}

// Fan with one extra parallel copy of the spoke to the last path vertex.
// This is the variant that closes the fan recurrences: tau(fan_prime(n)) =
// tau(fan(n)) + tau(fan_prime(n-1)).
inline Multigraph fan_prime(int n) {
  if (n < 1) throw std::invalid_argument("fan size must be positive");
  return fan(n).add_edge(0, n);
}

// Ladder: a 2 x n grid; two rails of n vertices joined by n rungs.
// ladder(1) is a single edge.
inline Multigraph ladder(int n) {
  if (n < 1) throw std::invalid_argument("ladder size must be positive");
  Multigraph g(2 * n);
  for (int i = 0; i < n; ++i) g = g.add_edge(i, n + i);
  for (int i = 0; i + 1 < n; ++i) g = g.add_edge(i, i + 1).add_edge(n + i, n + i + 1);
  return g;
}

// Wheel: a hub joined to every vertex of a cycle of length n.  Degenerate
// rims follow the multigraph reading: wheel(1) has a loop rim, wheel(2) a
// double-edge rim.
inline Multigraph wheel(int n) {
  if (n < 1) throw std::invalid_argument("wheel size must be positive");
  Multigraph g(n + 1);
  for (int i = 1; i <= n; ++i) g = g.add_edge(0, i);
  if (n == 1) return g.add_edge(1, 1);
  for (int i = 1; i <= n; ++i) g = g.add_edge(i, i == n ? 1 : i + 1);
  return g;
}

// Complete graph: every pair of distinct vertices joined by a single edge.
inline Multigraph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph size must be positive");
  Multigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g = g.add_edge(i, j);
  return g;
}

// Complete bipartite graph on parts of sizes m and n.
inline Multigraph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("both parts must be nonempty");
  Multigraph g(m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g = g.add_edge(i, m + j);
  return g;
}

// F(1) = F(2) = 1, F(n+1) = F(n) + F(n-1).
inline BigInt fibonacci(int n) {
  if (n < 1) throw std::invalid_argument("fibonacci index must be positive");
  BigInt a = 1, b = 1; // F(1), F(2)
  for (int i = 1; i < n; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

// Lucas numbers via L(n) = F(n-1) + F(n+1); L(1) = 1 by convention, so the
// sequence runs 1, 3, 4, 7, 11, ...
inline BigInt lucas(int n) {
  if (n < 1) throw std::invalid_argument("lucas index must be positive");
  if (n == 1) return 1;
  return fibonacci(n - 1) + fibonacci(n + 1);
}

// Floating evaluation of the fan closed form
//   a(n) = ((( 3+sqrt5 )/2)^n - ((3-sqrt5)/2)^n) / sqrt5,
// which rounds to the exact count with relative error below 1e-9 for
// n <= 30.
inline double fan_closed_form_float(int n) {
  if (n < 1 || n > 40)
    throw std::invalid_argument("fan closed form supported for 1 <= n <= 40");
  const double sqrt5 = std::sqrt(5.0);
  const double grow = (3.0 + sqrt5) / 2.0;
  const double decay = (3.0 - sqrt5) / 2.0;
  return (std::pow(grow, n) - std::pow(decay, n)) / sqrt5;
}

// tau values of a family for indices 1..up_to, with the family's recurrence
// and closed form checked exhaustively over that range.
struct SequenceReport {
  std::string name;
  std::vector<BigInt> values;
  bool recurrence_ok = true;
  bool closed_form_ok = true;
};

namespace detail {

inline BigInt int_pow(BigInt base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

} // namespace detail

// For CompleteBipartite, `part_size` is the fixed size of the first part
// and the report runs over second-part sizes 1..up_to.
inline SequenceReport verify_family(Family family, int up_to, int part_size = 2) {
  const int min_range = family == Family::Wheel ? 4 : 3;
  if (up_to < min_range)
    throw std::invalid_argument("range too small to check the recurrence");
  if (family == Family::CompleteBipartite && part_size < 1)
    throw std::invalid_argument("bipartite part must be nonempty");

  SequenceReport report;
  auto value = [&](int i) { return report.values[i - 1]; };

  switch (family) {
    case Family::Fan: report.name = "fan"; break;
    case Family::FanPrime: report.name = "fan-prime"; break;
    case Family::Ladder: report.name = "ladder"; break;
    case Family::Wheel: report.name = "wheel"; break;
    case Family::Complete: report.name = "complete"; break;
    case Family::CompleteBipartite:
      report.name = "complete-bipartite(m=" + std::to_string(part_size) + ")";
      break;
  }

  for (int i = 1; i <= up_to; ++i) {
    Multigraph g = [&] {
      switch (family) {
        case Family::Fan: return fan(i);
        case Family::FanPrime: return fan_prime(i);
        case Family::Ladder: return ladder(i);
        case Family::Wheel: return wheel(i);
        case Family::Complete: return complete(i);
        case Family::CompleteBipartite:
        default: return complete_bipartite(part_size, i);
      }
    }();
    report.values.push_back(tau(g));
  }

  // Fan tau values double as the companion sequence for the fan-prime
  // recurrence and the wheel cross identity.
  std::vector<BigInt> fan_values;
  if (family == Family::FanPrime || family == Family::Wheel)
    for (int i = 1; i <= up_to + 1; ++i) fan_values.push_back(tau(fan(i)));

  switch (family) {
    case Family::Fan:
      for (int i = 3; i <= up_to; ++i)
        if (value(i) != 3 * value(i - 1) - value(i - 2)) report.recurrence_ok = false;
      for (int i = 1; i <= up_to; ++i)
        if (value(i) != fibonacci(2 * i)) report.closed_form_ok = false;
      break;
    case Family::FanPrime:
      for (int i = 2; i <= up_to; ++i)
        if (value(i) != fan_values[i - 1] + value(i - 1)) report.recurrence_ok = false;
      for (int i = 1; i <= up_to; ++i)
        if (value(i) != fibonacci(2 * i + 1)) report.closed_form_ok = false;
      break;
    case Family::Ladder:
      for (int i = 3; i <= up_to; ++i)
        if (value(i) != 4 * value(i - 1) - value(i - 2)) report.recurrence_ok = false;
      break; // no closed form to check
    case Family::Wheel:
      for (int i = 4; i <= up_to; ++i)
        if (value(i) != 4 * value(i - 1) - 4 * value(i - 2) + value(i - 3))
          report.recurrence_ok = false;
      for (int i = 1; i <= up_to; ++i)
        if (value(i) != lucas(2 * i) - 2) report.closed_form_ok = false;
      // cross identity with the fan sequence: c(i+1) - a(i+1) = c(i) + a(i)
      for (int i = 1; i < up_to; ++i)
        if (value(i + 1) - fan_values[i] != value(i) + fan_values[i - 1])
          report.closed_form_ok = false;
      break;
    case Family::Complete:
      for (int i = 1; i <= up_to; ++i) {
        BigInt expected = i <= 2 ? BigInt(1) : detail::int_pow(i, i - 2);
        if (value(i) != expected) report.closed_form_ok = false;
      }
      break;
    case Family::CompleteBipartite:
      for (int i = 1; i <= up_to; ++i)
        if (value(i) != detail::int_pow(part_size, i - 1) * detail::int_pow(i, part_size - 1))
          report.closed_form_ok = false;
      break;
  }
  return report;
}

} // namespace spantree
