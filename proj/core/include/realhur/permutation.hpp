#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "realhur/partition.hpp"

namespace realhur {

/// Permutation of {0, ..., d-1}; text forms are 1-based cycle notation.
class Perm {
public:
    /// Throws ValidationError unless `images` is a bijection of {0..d-1}.
    explicit Perm(std::vector<int> images);

    static Perm identity(int d);
    /// The cycle (1 2 ... d).
    static Perm full_cycle(int d);
    /// Builds from 1-based cycles; symbols not mentioned are fixed.
    static Perm from_cycles(int d, const std::vector<std::vector<int>>& cycles);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    std::span<const int> images() const noexcept { return images_; }

    Perm inverse() const;
    int cycle_count() const;
    std::string to_string() const;

    /// (a * b)(x) = a(b(x)).
    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<int> images_;
};

Partition cycle_type(const Perm& p);

/// |C_lambda| = d! / prod(parts) / prod(multiplicity!).
std::uint64_t class_size(const Partition& lambda);

/// Every permutation of cycle type lambda exactly once. Each cycle starts at its
/// least symbol and cycles appear by increasing least symbol; the order is deterministic.
std::vector<Perm> enumerate_class(int d, const Partition& lambda);

}  // namespace realhur
