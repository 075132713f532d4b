#include "cfinite/catalan.hpp"

#include "cfinite/errors.hpp"

#include <bit>

#if CFINITE_USE_OPENMP
#include <omp.h>
#endif

namespace cfinite {

int parallel_threads() {
#if CFINITE_USE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

// Bit i of mask set means letter i is +1.
inline bool is_ballot_word(std::uint64_t mask, unsigned length) {
    int sum = 0;
    for (unsigned i = 0; i < length; ++i) {
        sum += (mask >> i) & 1U ? 1 : -1;
        if (sum < 0) {
            return false;
        }
    }
    return sum == 0;
}

std::uint64_t count_ballot_serial(unsigned length) {
    const std::uint64_t words = std::uint64_t{1} << length;
    const int half = static_cast<int>(length / 2);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < words; ++mask) {
        if (std::popcount(mask) == half && is_ballot_word(mask, length)) {
            ++count;
        }
    }
    return count;
}

std::uint64_t count_ballot_parallel(unsigned length) {
#if CFINITE_USE_OPENMP
    const std::int64_t words = std::int64_t{1} << length;
    const int half = static_cast<int>(length / 2);
    std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (std::int64_t m = 0; m < words; ++m) {
        const auto mask = static_cast<std::uint64_t>(m);
        if (std::popcount(mask) == half && is_ballot_word(mask, length)) {
            ++count;
        }
    }
    return count;
#else
    return count_ballot_serial(length);
#endif
}

} // namespace

std::uint64_t count_ballot_words(unsigned length, Execution exec) {
    if (length % 2 != 0 || length > 62) {
        throw InvalidInput("ballot word length must be even and at most 62");
    }
    return exec == Execution::parallel ? count_ballot_parallel(length) : count_ballot_serial(length);
}

ExactInteger catalan_ballot(unsigned n, unsigned cap, Execution exec) {
    if (n < 2) {
        throw IndexOutOfRange("ballot definition needs n >= 2, got " + std::to_string(n));
    }
    if (cap > kMaxBallotCap) {
        throw InvalidInput("ballot cap above " + std::to_string(kMaxBallotCap));
    }
    if (n > cap) {
        throw ResourceLimit("ballot enumeration for n = " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap) + " (2^" + std::to_string(2 * n - 2) + " words)");
    }
    const std::uint64_t count = count_ballot_words(2 * n - 2, exec);
    ExactInteger out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof count, 0, 0, &count);
    return out;
}

Sequence catalan_convolution(std::size_t N) {
    if (N < 1) {
        throw IndexOutOfRange("need at least one term");
    }
    std::vector<ExactInteger> c(N + 1);
    c[1] = 1;
    for (std::size_t n = 2; n <= N; ++n) {
        ExactInteger sum = 0;
        // Symmetric convolution: pair j with n - j.
        for (std::size_t j = 1; 2 * j < n; ++j) {
            sum += c[j] * c[n - j];
        }
        sum *= 2;
        if (n % 2 == 0) {
            sum += c[n / 2] * c[n / 2];
        }
        c[n] = std::move(sum);
    }
    c.erase(c.begin());
    return Sequence("catalan", c);
}

ExactInteger catalan_closed(std::size_t n) {
    if (n < 1) {
        throw IndexOutOfRange("closed formula needs n >= 1");
    }
    ExactInteger c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n - 2, n - 1);
    if (!mpz_divisible_ui_p(c.get_mpz_t(), n)) {
        throw InternalError("binom(2n-2, n-1) not divisible by n at n = " + std::to_string(n));
    }
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n);
    return c;
}

Sequence catalan_holonomic(std::size_t N) {
    if (N < 1) {
        throw IndexOutOfRange("need at least one term");
    }
    std::vector<ExactInteger> c;
    c.reserve(N);
    ExactInteger current = 1;
    c.push_back(current);
    for (std::size_t n = 1; n < N; ++n) {
        current *= 4 * n - 2;
        if (!mpz_divisible_ui_p(current.get_mpz_t(), n + 1)) {
            throw InternalError("holonomic step inexact at n = " + std::to_string(n));
        }
        mpz_divexact_ui(current.get_mpz_t(), current.get_mpz_t(), n + 1);
        c.push_back(current);
    }
    return Sequence("catalan", c);
}

std::vector<ExactInteger> catalan_closed_table(std::size_t N, Execution exec) {
    std::vector<ExactInteger> out(N);
    const auto count = static_cast<std::int64_t>(N);
    if (exec == Execution::parallel) {
#if CFINITE_USE_OPENMP
        // Term cost grows with n; dynamic scheduling balances the tail.
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i) {
            out[i] = catalan_closed(static_cast<std::size_t>(i) + 1);
        }
        return out;
#endif
    }
    for (std::int64_t i = 0; i < count; ++i) {
        out[i] = catalan_closed(static_cast<std::size_t>(i) + 1);
    }
    return out;
}

Sequence fibonacci(std::size_t N) {
    if (N < 1) {
        throw IndexOutOfRange("need at least one term");
    }
    std::vector<ExactInteger> f;
    f.reserve(N);
    ExactInteger a = 1, b = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        f.push_back(a);
        ExactInteger next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return Sequence("fibonacci", f);
}

bool is_power_of_two(std::size_t n) { return std::has_single_bit(n); }

bool catalan_is_odd(std::size_t n) {
    if (n < 1) {
        throw IndexOutOfRange("Catalan index must be >= 1");
    }
    return is_power_of_two(n);
}

bool catalan_is_odd_recursive(std::size_t n) {
    if (n < 1) {
        throw IndexOutOfRange("Catalan index must be >= 1");
    }
    while (n > 1) {
        if (n % 2 == 1) {
            return false;
        }
        n /= 2;
    }
    return true;
}

std::vector<bool> catalan_parities_by_convolution(std::size_t N) {
    std::vector<bool> odd(N + 1, false);
    if (N >= 1) {
        odd[1] = true;
    }
    for (std::size_t n = 2; n <= N; ++n) {
        bool acc = false;
        for (std::size_t j = 1; j < n; ++j) {
            acc ^= odd[j] && odd[n - j];
        }
        odd[n] = acc;
    }
    odd.erase(odd.begin());
    return odd;
}

std::vector<std::size_t> odd_catalan_indices(std::size_t N, Execution exec) {
    std::vector<char> odd(N, 0);
    const auto count = static_cast<std::int64_t>(N);
    if (exec == Execution::parallel) {
#if CFINITE_USE_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i) {
            odd[i] = mpz_odd_p(catalan_closed(static_cast<std::size_t>(i) + 1).get_mpz_t()) ? 1 : 0;
        }
#else
        exec = Execution::serial;
#endif
    }
    if (exec == Execution::serial) {
        for (std::int64_t i = 0; i < count; ++i) {
            odd[i] = mpz_odd_p(catalan_closed(static_cast<std::size_t>(i) + 1).get_mpz_t()) ? 1 : 0;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < N; ++i) {
        if (odd[i]) {
            out.push_back(i + 1);
        }
    }
    return out;
}

} // namespace cfinite
