#pragma once

// Catalan numbers in the 1-based convention C_1 = C_2 = 1, C_3 = 2, ...
// (C_n is the classical Catalan number of index n - 1), plus Fibonacci.

#include "exact.hpp"
#include "execution.hpp"
#include "sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cfinite {

inline constexpr unsigned kDefaultBallotCap = 13;
/// Words are packed into a 64-bit mask; this bounds any user override.
inline constexpr unsigned kMaxBallotCap = 32;

/// Counts words in {-1,1}^(2n-2) whose proper prefix sums are >= 0 and whose
/// total is 0, by visiting all 2^(2n-2) words.
/// Throws IndexOutOfRange for n < 2, ResourceLimit for n > cap.
ExactInteger catalan_ballot(unsigned n, unsigned cap = kDefaultBallotCap,
                            Execution exec = Execution::parallel);

/// Raw ballot-word counter for words of even length `length` (<= 62).
std::uint64_t count_ballot_words(unsigned length, Execution exec);

/// C_1..C_N by C_n = sum_{j=1}^{n-1} C_j C_{n-j}.
Sequence catalan_convolution(std::size_t N);

/// C_n = binom(2n-2, n-1) / n. Throws IndexOutOfRange for n < 1.
ExactInteger catalan_closed(std::size_t n);

/// C_1..C_N by C_{n+1} = (4n-2) C_n / (n+1).
Sequence catalan_holonomic(std::size_t N);

/// catalan_closed(1..N), each term computed independently.
std::vector<ExactInteger> catalan_closed_table(std::size_t N, Execution exec = Execution::parallel);

/// F_1..F_N with F_1 = F_2 = 1.
Sequence fibonacci(std::size_t N);

/// C_n is odd iff n is a power of two.
bool catalan_is_odd(std::size_t n);

/// Parity by C_n = C_{n/2} (mod 2) for even n and C_n even for odd n > 1.
bool catalan_is_odd_recursive(std::size_t n);

/// C_1..C_N mod 2 by running the convolution over GF(2). Entry i is C_{i+1}.
std::vector<bool> catalan_parities_by_convolution(std::size_t N);

/// All n <= N with catalan_closed(n) odd, from exact values.
std::vector<std::size_t> odd_catalan_indices(std::size_t N, Execution exec = Execution::parallel);

bool is_power_of_two(std::size_t n);

} // namespace cfinite
