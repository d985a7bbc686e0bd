#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knot/errors.hpp"

namespace knot {

using ModRow = std::vector<std::uint64_t>;

/// Dense matrix over Z/n, entries reduced into [0, n).
struct ModMatrix {
  std::uint64_t n = 2;
  std::size_t cols = 0;
  std::vector<ModRow> rows;

  ModMatrix() = default;
  ModMatrix(std::uint64_t n_, std::size_t cols_) : n(n_), cols(cols_) {}
  void add_row(ModRow r);
  std::size_t row_count() const { return rows.size(); }
};

/// Canonical row-span form over Z/n: pivots divide n, pivot columns strictly
/// increase, entries above a pivot are reduced mod that pivot, and the row
/// list is closed under the (n/pivot) annihilator multiples. Two spans are
/// equal iff their Howell rows are identical.
struct HowellBasis {
  std::uint64_t n = 2;
  std::size_t cols = 0;
  std::vector<ModRow> rows;

  std::size_t rank() const { return rows.size(); }
  /// |span| as product over rows of n/pivot. Overflows for huge spans; use
  /// span_size_valuation for prime-power moduli in tests.
  std::uint64_t span_size() const;
  /// exponent of q in |span| (q must be prime)
  std::uint64_t span_size_valuation(std::uint64_t q) const;
  bool contains(const ModRow& v) const;
  bool contains_span(const HowellBasis& other) const;
  bool operator==(const HowellBasis& rhs) const {
    return n == rhs.n && cols == rhs.cols && rows == rhs.rows;
  }
};

/// Invariant factors d1 | d2 | ... | dk, each > 1; empty = trivial group.
struct AbelianInvariants {
  std::vector<std::uint64_t> factors;

  std::uint64_t order() const;
  bool trivial() const { return factors.empty(); }
  bool operator==(const AbelianInvariants& rhs) const {
    return factors == rhs.factors;
  }
  std::string to_string() const;
};

HowellBasis howell(const ModMatrix& m);

/// Basis of {x : x M = 0} over Z/n (row vectors of length m.row_count()).
HowellBasis kernel(const ModMatrix& m);

/// x with x M = target, if any. The returned x is re-verified.
std::optional<ModRow> solve(const ModMatrix& m, const ModRow& target);

/// {w : v . w = 0 for all v in span}; double annihilator recovers the span.
HowellBasis annihilator(const HowellBasis& span);

/// Invariant factors of span(a)/span(b). Throws NotContained unless
/// span(b) is inside span(a).
AbelianInvariants quotient_invariants(const HowellBasis& a,
                                      const HowellBasis& b);

/// Smith invariant factors (> 1) of the integer matrix; used for finite
/// cokernels where the entries stay word-sized.
std::vector<std::uint64_t> smith_invariants(
    std::vector<std::vector<long long>> m, std::size_t cols);

// convenience
HowellBasis howell_of_rows(std::uint64_t n, std::size_t cols,
                           const std::vector<ModRow>& rows);

}  // namespace knot
