#include "digitmap/atlas.hpp"

#include <algorithm>
#include <string>

#include "digitmap/errors.hpp"

namespace digitmap {

namespace {
constexpr std::int32_t kUnvisited = -2;
constexpr std::int32_t kOnPath = -3;
}  // namespace

CycleAtlas::CycleAtlas(DigitMap map, std::uint64_t max_threshold)
    : map_(std::move(map)), threshold_(digitmap::threshold(map_)) {
    if (threshold_ > max_threshold) {
        throw InvalidInput("threshold " + std::to_string(threshold_) + " exceeds the atlas limit " +
                           std::to_string(max_threshold));
    }
    build();
}

void CycleAtlas::build() {
    const std::uint64_t limit = threshold_;
    table_.assign(limit + 1, Entry{kUnvisited, 0, 0});
    table_[0] = Entry{kReachesZero, 0, 0};

    std::vector<std::vector<std::uint64_t>> found;
    std::vector<std::uint64_t> path;
    for (std::uint64_t start = 1; start <= limit; ++start) {
        if (table_[start].cycle != kUnvisited) continue;
        path.clear();
        std::uint64_t cur = start;
        while (table_[cur].cycle == kUnvisited) {
            table_[cur].cycle = kOnPath;
            table_[cur].steps = static_cast<std::uint32_t>(path.size());
            path.push_back(cur);
            cur = map_.eval(cur);  // stays <= T because f(n) < b^(d-1) for n <= T
        }
        std::size_t tail = path.size();
        if (table_[cur].cycle == kOnPath) {
            // New cycle: path[first..] closes on itself.
            const std::size_t first = table_[cur].steps;
            const auto id = static_cast<std::int32_t>(found.size());
            found.emplace_back(path.begin() + static_cast<std::ptrdiff_t>(first), path.end());
            for (std::size_t i = first; i < path.size(); ++i) {
                table_[path[i]] = Entry{id, 0, static_cast<std::uint32_t>(i - first)};
            }
            tail = first;
            cur = path[first];
        }
        Entry next = table_[cur];
        for (std::size_t i = tail; i-- > 0;) {
            next = Entry{next.cycle, next.steps + 1, next.position};
            table_[path[i]] = next;
        }
    }

    // Canonical order: cycles by minimum element, each rotated to start there.
    std::vector<std::int32_t> order(found.size());
    std::vector<std::size_t> rotation(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        auto min_it = std::min_element(found[i].begin(), found[i].end());
        rotation[i] = static_cast<std::size_t>(min_it - found[i].begin());
        std::rotate(found[i].begin(), min_it, found[i].end());
    }
    std::vector<std::size_t> by_min(found.size());
    for (std::size_t i = 0; i < by_min.size(); ++i) by_min[i] = i;
    std::sort(by_min.begin(), by_min.end(),
              [&](std::size_t a, std::size_t b) { return found[a].front() < found[b].front(); });
    for (std::size_t rank = 0; rank < by_min.size(); ++rank) {
        order[by_min[rank]] = static_cast<std::int32_t>(rank);
        cycles_.push_back(std::move(found[by_min[rank]]));
    }
    for (auto& entry : table_) {
        if (entry.cycle < 0) continue;
        const auto old = static_cast<std::size_t>(entry.cycle);
        const std::size_t length = cycles_[static_cast<std::size_t>(order[old])].size();
        entry.position = static_cast<std::uint32_t>((entry.position + length - rotation[old]) % length);
        entry.cycle = order[old];
    }
    for (std::uint32_t c = 0; c < cycles_.size(); ++c) {
        for (std::uint32_t i = 0; i < cycles_[c].size(); ++i) {
            position_[cycles_[c][i]] = {c, i};
            attractor_.push_back(cycles_[c][i]);
        }
    }
    std::sort(attractor_.begin(), attractor_.end());
}

std::size_t CycleAtlas::cycle_of(std::uint64_t u) const {
    auto it = position_.find(u);
    if (it == position_.end()) throw InvalidInput(std::to_string(u) + " is not a cycle number");
    return it->second.first;
}

std::uint64_t CycleAtlas::element_with_phase(std::uint64_t u, std::uint64_t phase) const {
    const auto [cycle, pos_u] = position_.at(u);
    const auto& elements = cycles_[cycle];
    const std::uint64_t length = elements.size();
    // An element at position i reaches u after (pos_u - i) mod length steps.
    const std::uint64_t index = (pos_u + length - phase % length) % length;
    return elements[index];
}

Classification CycleAtlas::from_entry(const Entry& entry, std::uint64_t extra_steps,
                                      std::uint64_t u) const {
    Classification out;
    out.cycle_index = entry.cycle;
    out.entry_steps = entry.steps + extra_steps;
    const auto [cycle_u, pos_u] = position_.at(u);
    if (entry.cycle != static_cast<std::int32_t>(cycle_u)) return out;
    const std::uint64_t length = cycles_[cycle_u].size();
    std::uint64_t steps = out.entry_steps + (pos_u + length - entry.position) % length;
    if (steps == 0) steps = length;  // u itself: the definition asks for r >= 1
    out.is_u_integer = true;
    out.steps_to_u = steps;
    out.phase = steps % length;
    out.cycle_length = length;
    return out;
}

Classification CycleAtlas::classify(std::uint64_t n, std::uint64_t u) const {
    cycle_of(u);
    std::uint64_t extra = 0;
    while (n > threshold_) {
        n = map_.eval(n);
        ++extra;
    }
    return from_entry(table_[n], extra, u);
}

Classification CycleAtlas::classify(const BigInt& n, std::uint64_t u) const {
    if (n < 0) throw InvalidInput("cannot classify a negative integer");
    if (fits_u64(n)) return classify(static_cast<std::uint64_t>(n), u);
    const BigInt image = map_.eval(n);
    auto out = classify(image, u);
    out.entry_steps += 1;
    if (out.is_u_integer) {
        // When f(n) == u the image reports a full lap; n reaches u in one step.
        out.steps_to_u = image == u ? 1 : out.steps_to_u + 1;
        out.phase = out.steps_to_u % out.cycle_length;
    }
    return out;
}

Classification CycleAtlas::classify(const SparseNumber& n, std::uint64_t u) const {
    if (n.base() != map_.base()) throw InvalidInput("sparse number base differs from map base");
    if (n.digit_length() <= 64) return classify(n.to_dense(64), u);
    const BigInt image = f_eval(map_, n);
    auto out = classify(image, u);
    out.entry_steps += 1;
    if (out.is_u_integer) {
        out.steps_to_u = image == u ? 1 : out.steps_to_u + 1;
        out.phase = out.steps_to_u % out.cycle_length;
    }
    return out;
}

std::int32_t CycleAtlas::cycle_index(std::uint64_t n) const {
    while (n > threshold_) n = map_.eval(n);
    return table_[n].cycle;
}

}  // namespace digitmap
