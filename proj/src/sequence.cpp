#include "cfinite/sequence.hpp"

#include "cfinite/errors.hpp"

#include <algorithm>

namespace cfinite {

Sequence::Sequence(std::string name, std::vector<ExactRational> terms)
    : name_(std::move(name)), terms_(std::move(terms)) {
    for (auto& t : terms_) {
        t.canonicalize();
    }
}

Sequence::Sequence(std::string name, const std::vector<ExactInteger>& terms) : name_(std::move(name)) {
    terms_.reserve(terms.size());
    for (const auto& t : terms) {
        terms_.emplace_back(t);
    }
}

const ExactRational& Sequence::operator[](std::size_t n) const {
    if (n < 1 || n > terms_.size()) {
        throw IndexOutOfRange("index " + std::to_string(n) + " outside 1.." + std::to_string(terms_.size()) +
                              " of sequence " + name_);
    }
    return terms_[n - 1];
}

Sequence Sequence::prefix(std::size_t count) const {
    if (count > terms_.size()) {
        throw IndexOutOfRange("prefix of " + std::to_string(count) + " terms from a sequence of " +
                              std::to_string(terms_.size()));
    }
    return Sequence(name_, std::vector<ExactRational>(terms_.begin(), terms_.begin() + count));
}

bool Sequence::all_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const ExactRational& q) { return is_integer(q); });
}

} // namespace cfinite
