#include "realhur/permutation.hpp"

#include <algorithm>
#include <functional>

#include "realhur/errors.hpp"

namespace realhur {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)]) {
            throw ValidationError("not a permutation");
        }
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Perm Perm::identity(int d) {
    std::vector<int> images(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) images[static_cast<std::size_t>(i)] = i;
    return Perm(std::move(images));
}

Perm Perm::full_cycle(int d) {
    std::vector<int> images(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % d;
    return Perm(std::move(images));
}

Perm Perm::from_cycles(int d, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) images[static_cast<std::size_t>(i)] = i;
    for (const auto& c : cycles) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            int from = c[j] - 1;
            int to = c[(j + 1) % c.size()] - 1;
            if (from < 0 || from >= d || to < 0 || to >= d) throw ValidationError("cycle symbol out of range");
            images[static_cast<std::size_t>(from)] = to;
        }
    }
    return Perm(std::move(images));
}

Perm Perm::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Perm(std::move(inv));
}

int Perm::cycle_count() const {
    std::vector<char> seen(images_.size(), 0);
    int cycles = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) seen[j] = 1;
    }
    return cycles;
}

std::string Perm::to_string() const {
    std::string out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        out += '(';
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = 1;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
        }
        out += ')';
    }
    return out;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw ValidationError("degree mismatch in permutation product");
    std::vector<int> images(a.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = a(b(static_cast<int>(i)));
    return Perm(std::move(images));
}

Partition cycle_type(const Perm& p) {
    std::vector<int> lengths;
    std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
            seen[static_cast<std::size_t>(j)] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

std::uint64_t class_size(const Partition& lambda) {
    std::uint64_t size = 1;
    for (int i = 2; i <= lambda.degree(); ++i) size *= static_cast<std::uint64_t>(i);
    auto parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        for (std::size_t m = 0; m < j - i; ++m) size /= static_cast<std::uint64_t>(parts[i]);
        for (std::uint64_t m = 2; m <= j - i; ++m) size /= m;
        i = j;
    }
    return size;
}

std::vector<Perm> enumerate_class(int d, const Partition& lambda) {
    if (lambda.degree() != d) throw ValidationError("partition does not partition d");
    std::vector<Perm> out;
    std::vector<int> images(static_cast<std::size_t>(d), -1);
    std::vector<char> used(static_cast<std::size_t>(d), 0);
    // Remaining cycle lengths as (length, count), descending.
    std::vector<std::pair<int, int>> remaining;
    for (int p : lambda.parts()) {
        if (!remaining.empty() && remaining.back().first == p) {
            ++remaining.back().second;
        } else {
            remaining.emplace_back(p, 1);
        }
    }

    std::vector<int> cycle;
    std::function<void()> next_cycle;
    std::function<void(int)> extend = [&](int len) {
        if (static_cast<int>(cycle.size()) == len) {
            for (std::size_t j = 0; j < cycle.size(); ++j) {
                images[static_cast<std::size_t>(cycle[j])] = cycle[(j + 1) % cycle.size()];
            }
            next_cycle();
            return;
        }
        for (int x = cycle.front() + 1; x < d; ++x) {
            if (used[static_cast<std::size_t>(x)]) continue;
            used[static_cast<std::size_t>(x)] = 1;
            cycle.push_back(x);
            extend(len);
            cycle.pop_back();
            used[static_cast<std::size_t>(x)] = 0;
        }
    };
    next_cycle = [&]() {
        int start = 0;
        while (start < d && used[static_cast<std::size_t>(start)]) ++start;
        if (start == d) {
            out.emplace_back(images);
            return;
        }
        for (auto& [len, count] : remaining) {
            if (count == 0) continue;
            --count;
            auto saved = cycle;
            cycle.assign(1, start);
            used[static_cast<std::size_t>(start)] = 1;
            extend(len);
            used[static_cast<std::size_t>(start)] = 0;
            cycle = std::move(saved);
            ++count;
        }
    };
    next_cycle();
    return out;
}

}  // namespace realhur
