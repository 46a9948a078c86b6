#include "realhur/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>

#include "realhur/errors.hpp"

namespace realhur {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw ValidationError("partition parts must be positive, got " + std::to_string(p));
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ValidationError("empty partition");
    std::vector<int> parts;
    while (true) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw ValidationError("malformed partition token '" + std::string(token) + "'");
        }
        if (value < 1) throw ValidationError("partition parts must be positive, got " + std::string(token));
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

bool Partition::is_trivial() const noexcept {
    return !parts_.empty() && parts_.front() == 1;
}

int Partition::multiplicity(int part) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::with_ones(int count) const {
    auto parts = parts_;
    parts.insert(parts.end(), static_cast<std::size_t>(count), 1);
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

const char* to_string(Parity p) noexcept { return p == Parity::even ? "even" : "odd"; }

int o_count(const Partition& lambda) noexcept {
    auto parts = lambda.parts();
    int odd = 0;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if ((j - i) % 2 == 1) ++odd;
        i = j;
    }
    return odd;
}

Partition reduce_partition(const Partition& lambda) {
    std::vector<int> parts;
    for (int p : lambda.parts()) {
        if (p > 1) parts.push_back(p - 1);
    }
    return Partition(std::move(parts));
}

int floor_sum(std::span<const Partition> profiles) noexcept {
    int total = 0;
    for (const auto& p : profiles) total += o_count(p) / 2;
    return total;
}

Parity floor_sum_parity(std::span<const Partition> profiles) noexcept {
    return floor_sum(profiles) % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<Partition> parse_profile_list(std::string_view text) {
    std::vector<Partition> out;
    while (true) {
        auto bar = text.find('|');
        out.push_back(Partition::parse(text.substr(0, bar)));
        if (bar == std::string_view::npos) break;
        text.remove_prefix(bar + 1);
    }
    return out;
}

std::string format_profile_list(std::span<const Partition> profiles) {
    std::string out;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        if (i) out += '|';
        out += profiles[i].to_string();
    }
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 1) return out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace realhur
