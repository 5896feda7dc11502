#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mofs/evaluation.hpp"

namespace mofs {

enum class OperatorFamily { Exchange, ForwardShift, BackwardShift, Inversion };

/// A neighbourhood operator: a move family and a block length k (unused for inversion).
struct OperatorSpec {
  OperatorFamily family = OperatorFamily::Exchange;
  std::size_t k = 1;

  friend bool operator==(const OperatorSpec&, const OperatorSpec&) = default;
};

/// "1-EX", "2-FSH", "3-BSH", "INV".
std::string to_string(const OperatorSpec& spec);
OperatorSpec parse_operator(std::string_view text);

/// Whether `spec` is admissible on n-job permutations: k >= 1 always, and for
/// n >= 2 also k <= n/2 (EX) or k <= n-1 (FSH, BSH). With n <= 1 no operator
/// has moves, so every well-formed spec is admissible there.
bool admissible(const OperatorSpec& spec, std::size_t n) noexcept;

/// Closed-form neighbourhood cardinality (0 when the operator has no moves).
std::size_t neighbourhood_size(const OperatorSpec& spec, std::size_t n) noexcept;

/// Swap two disjoint blocks of k consecutive jobs starting at positions j < l (l >= j + k).
std::vector<Permutation> exchange_neighbourhood(const Permutation& pi, std::size_t k);
/// Move the block at j so that it starts at j' > j, block order intact.
std::vector<Permutation> forward_shift_neighbourhood(const Permutation& pi, std::size_t k);
/// Move the block at j so that it starts at j' < j, block order intact.
std::vector<Permutation> backward_shift_neighbourhood(const Permutation& pi, std::size_t k);
/// Reverse one contiguous segment of length >= 2.
std::vector<Permutation> inversion_neighbourhood(const Permutation& pi);

/// Dispatches on the family. Enumeration order: by first position, then by
/// the second position ascending. Throws InvalidArgument when k == 0.
std::vector<Permutation> generate(const OperatorSpec& spec, const Permutation& pi);

/// The nine operators {1,2,3} x {BSH, FSH, EX}.
std::vector<OperatorSpec> all_nine_operators();
/// The three unit-block operators {1-BSH, 1-FSH, 1-EX}.
std::vector<OperatorSpec> unit_operators();

}  // namespace mofs
