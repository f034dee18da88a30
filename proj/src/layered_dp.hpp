#pragma once

#include "rdom/interval.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rdom::detail {

// Layered dynamic programme with back-pointers; one layer per processed vertex.
template <class State>
struct Layers {
    struct Entry {
        State state;
        int cost;
        int prev;
        int choice;
    };
    std::vector<std::vector<Entry>> layers;

    struct Hash {
        std::size_t operator()(const State & s) const { return s.hash(); }
    };

    void start(const State & s) { layers.push_back({{s, 0, -1, 0}}); }

    template <class Step>
    void advance(Step step, SweepStats & stats)
    {
        const auto & from = layers.back();
        std::vector<Entry> to;
        std::unordered_map<State, int, Hash> index;
        for (int i = 0; i < static_cast<int>(from.size()); ++i)
            step(from[i].state, [&](const State & next, int add, int choice) {
                ++stats.states;
                const int cost = from[i].cost + add;
                auto [it, fresh] = index.try_emplace(next, static_cast<int>(to.size()));
                if (fresh)
                    to.push_back({next, cost, i, choice});
                else if (cost < to[it->second].cost)
                    to[it->second] = {next, cost, i, choice};
            });
        stats.widest_layer = std::max(stats.widest_layer, to.size());
        layers.push_back(std::move(to));
    }

    // Choices along the cheapest accepted final state, in processing order.
    template <class Accept>
    std::optional<std::pair<int, std::vector<int>>> best(Accept accept) const
    {
        int pick = -1;
        const auto & last = layers.back();
        for (int i = 0; i < static_cast<int>(last.size()); ++i)
            if (accept(last[i].state) && (pick < 0 || last[i].cost < last[pick].cost))
                pick = i;
        if (pick < 0)
            return std::nullopt;
        std::vector<int> choices(layers.size() - 1);
        int at = pick;
        for (std::size_t layer = layers.size() - 1; layer > 0; --layer) {
            choices[layer - 1] = layers[layer][at].choice;
            at = layers[layer][at].prev;
        }
        return std::make_pair(last[pick].cost, std::move(choices));
    }
};

} // namespace rdom::detail
