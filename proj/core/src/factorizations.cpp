#include "realhur/factorizations.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <thread>

#include "realhur/branch_spec.hpp"
#include "realhur/errors.hpp"

namespace realhur {

namespace {

constexpr int kMaxDegree = 16;
using Word = std::array<std::uint8_t, kMaxDegree>;

struct Level {
    std::vector<Word> members;
    Partition type;
    int target_cycles = 0;  // cycle count the prefix product must have after this level
};

int cycle_count(const Word& p, int d) {
    std::uint32_t seen = 0;
    int cycles = 0;
    for (int i = 0; i < d; ++i) {
        if (seen >> i & 1U) continue;
        ++cycles;
        for (int j = i; !(seen >> j & 1U); j = p[static_cast<std::size_t>(j)]) seen |= 1U << j;
    }
    return cycles;
}

bool has_type(const Word& p, int d, std::span<const int> parts) {
    std::array<int, kMaxDegree> lengths{};
    int n = 0;
    std::uint32_t seen = 0;
    for (int i = 0; i < d; ++i) {
        if (seen >> i & 1U) continue;
        int len = 0;
        for (int j = i; !(seen >> j & 1U); j = p[static_cast<std::size_t>(j)]) {
            seen |= 1U << j;
            ++len;
        }
        if (n == static_cast<int>(parts.size())) return false;
        lengths[static_cast<std::size_t>(n++)] = len;
    }
    if (n != static_cast<int>(parts.size())) return false;
    std::sort(lengths.begin(), lengths.begin() + n, std::greater<>());
    return std::equal(parts.begin(), parts.end(), lengths.begin());
}

Word to_word(const Perm& p) {
    Word w{};
    for (int i = 0; i < p.degree(); ++i) w[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p(i));
    return w;
}

// out = a o b
void compose(const Word& a, const Word& b, Word& out, int d) {
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = a[b[static_cast<std::size_t>(i)]];
}

void invert(const Word& a, Word& out, int d) {
    for (int i = 0; i < d; ++i) out[a[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
}

class Search {
public:
    Search(const std::vector<Level>& levels, const Word& base, int d, std::uint64_t max_visits,
           std::atomic<std::uint64_t>& visits)
        : levels_(levels), base_(base), d_(d), max_visits_(max_visits), visits_(visits),
          prefix_(levels.size()) {}

    std::uint64_t run_from(const Word& first) {
        count_ = 0;
        tick();
        if (cycle_count(first, d_) != levels_[0].target_cycles) return flush();
        prefix_[0] = first;
        descend(1);
        return flush();
    }

private:
    void descend(std::size_t level) {
        const std::size_t last = levels_.size() - 1;
        if (level == last) {
            tick();
            Word inv{}, rest{};
            invert(prefix_[level - 1], inv, d_);
            compose(inv, base_, rest, d_);
            if (has_type(rest, d_, levels_[last].type.parts())) ++count_;
            return;
        }
        for (const auto& sigma : levels_[level].members) {
            tick();
            compose(prefix_[level - 1], sigma, prefix_[level], d_);
            if (cycle_count(prefix_[level], d_) != levels_[level].target_cycles) continue;
            descend(level + 1);
        }
    }

    void tick() {
        if (++local_visits_ == kFlush) flush_visits();
    }

    void flush_visits() {
        auto total = visits_.fetch_add(local_visits_) + local_visits_;
        local_visits_ = 0;
        if (total > max_visits_) {
            throw BudgetExceeded("factorization enumeration exceeded " + std::to_string(max_visits_) + " visits");
        }
    }

    std::uint64_t flush() {
        flush_visits();
        return count_;
    }

    static constexpr std::uint64_t kFlush = 1 << 14;

    const std::vector<Level>& levels_;
    Word base_;
    int d_;
    std::uint64_t max_visits_;
    std::atomic<std::uint64_t>& visits_;
    std::vector<Word> prefix_;
    std::uint64_t count_ = 0;
    std::uint64_t local_visits_ = 0;
};

}  // namespace

HurwitzCount count_factorizations(std::span<const Partition> profiles, const CountOptions& options) {
    if (!satisfies_riemann_hurwitz(profiles)) {
        throw ValidationError("profiles " + format_profile_list(profiles) + " violate sum l(lambda_i) = (k-1)d+1");
    }
    const int d = profiles.front().degree();
    if (d > kMaxDegree) throw ScaleExceeded("factorization counting supports d <= " + std::to_string(kMaxDegree));

    const Perm base = options.base_cycle ? *options.base_cycle : Perm::full_cycle(d);
    if (base.degree() != d || base.cycle_count() != 1) throw ValidationError("base permutation must be a d-cycle");

    HurwitzCount result;
    result.d = d;
    if (profiles.size() == 1) {
        result.N = cycle_type(base) == profiles.front() ? 1 : 0;
        result.H = Rational(static_cast<std::int64_t>(result.N), d);
        return result;
    }

    std::vector<Partition> order(profiles.begin(), profiles.end());
    if (options.reorder_for_pruning) {
        std::stable_sort(order.begin(), order.end(),
                         [](const Partition& a, const Partition& b) { return class_size(a) < class_size(b); });
    }

    // A factorization of the d-cycle into factors of total Cayley length d-1 is
    // minimal, so each prefix product has length exactly the sum of its factors' lengths.
    std::vector<Level> levels(order.size());
    int length = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        levels[i].type = order[i];
        length += d - order[i].length();
        levels[i].target_cycles = d - length;
        if (i + 1 < order.size()) {
            for (const auto& p : enumerate_class(d, order[i])) levels[i].members.push_back(to_word(p));
        }
    }

    const Word base_word = to_word(base);
    std::atomic<std::uint64_t> visits{0};
    const auto& first = levels[0].members;
    const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(first.size())));

    std::vector<std::uint64_t> partial(workers, 0);
    if (workers == 1) {
        Search search(levels, base_word, d, options.max_visits, visits);
        for (const auto& s : first) partial[0] += search.run_from(s);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> threads;
            for (unsigned w = 0; w < workers; ++w) {
                threads.emplace_back([&, w] {
                    try {
                        Search search(levels, base_word, d, options.max_visits, visits);
                        for (std::size_t i = w; i < first.size(); i += workers) partial[w] += search.run_from(first[i]);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    result.N = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
    result.H = Rational(static_cast<std::int64_t>(result.N), d);
    result.visited = visits.load();
    return result;
}

}  // namespace realhur
