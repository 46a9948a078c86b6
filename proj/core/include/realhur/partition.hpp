#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace realhur {

/// Integer partition stored as a non-increasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    /// Sorts the parts; throws ValidationError on a part < 1.
    explicit Partition(std::vector<int> parts);

    /// Parses "a,b,c" (any order, surrounding whitespace allowed).
    static Partition parse(std::string_view text);
    /// (1^n).
    static Partition ones(int n);

    std::span<const int> parts() const noexcept { return parts_; }
    int degree() const noexcept { return degree_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    /// True for (1^d), d >= 1.
    bool is_trivial() const noexcept;
    int multiplicity(int part) const noexcept;

    /// Appends `count` parts equal to one.
    Partition with_ones(int count) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

enum class Parity { even, odd };

const char* to_string(Parity p) noexcept;

/// Number of distinct part values occurring an odd number of times.
int o_count(const Partition& lambda) noexcept;

/// Subtract one from every part and drop zeros. May return the empty partition.
Partition reduce_partition(const Partition& lambda);

/// Sum over profiles of floor(o(lambda_i) / 2).
int floor_sum(std::span<const Partition> profiles) noexcept;
Parity floor_sum_parity(std::span<const Partition> profiles) noexcept;

/// "a,b|c,d|..." profile lists.
std::vector<Partition> parse_profile_list(std::string_view text);
std::string format_profile_list(std::span<const Partition> profiles);

/// All partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitions_of(int n);

}  // namespace realhur
