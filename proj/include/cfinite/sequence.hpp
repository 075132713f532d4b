#pragma once

#include "exact.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cfinite {

/// A finite, immutable, 1-indexed prefix (b_1, ..., b_N) of a sequence.
class Sequence {
public:
    Sequence(std::string name, std::vector<ExactRational> terms);
    Sequence(std::string name, const std::vector<ExactInteger>& terms);

    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// b_n for 1 <= n <= size(); throws IndexOutOfRange otherwise.
    const ExactRational& operator[](std::size_t n) const;

    std::span<const ExactRational> terms() const noexcept { return terms_; }

    /// The first `count` terms under the same name.
    Sequence prefix(std::size_t count) const;

    bool all_integral() const;

    friend bool operator==(const Sequence& a, const Sequence& b) { return a.terms_ == b.terms_; }

private:
    std::string name_;
    std::vector<ExactRational> terms_;
};

} // namespace cfinite
