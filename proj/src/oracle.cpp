#include "rdom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace rdom {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

void check_cap(int searched, const OracleConfig & config, const char * what)
{
    const int cap = std::min(config.vertex_cap, oracle_hard_cap);
    if (searched > cap)
        throw OracleCapExceeded(std::string(what) + ": instance of size " + std::to_string(searched)
            + " exceeds oracle cap " + std::to_string(cap));
}

class DominationSearch {
public:
    DominationSearch(const Graph & g, const OracleConfig & config) : n_(g.order()), budget_(config.node_budget)
    {
        closed_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            closed_[v] = bit(v);
            for (Vertex w : g.neighbors(v))
                closed_[v] |= bit(w);
        }
        all_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    }

    OracleResult<WeightFunction> solve()
    {
        auto greedy = greedy_cover();
        int best = static_cast<int>(greedy.size());
        std::vector<int> best_set = greedy;
        for (int target = lower_bound(all_, 0); target < best; ++target) {
            chosen_.clear();
            if (feasible(all_, 0, target)) {
                best = target;
                best_set = chosen_;
                break;
            }
        }
        OracleResult<WeightFunction> out;
        out.value = best;
        out.witness = WeightFunction(1, n_);
        for (int v : best_set)
            out.witness.weights[v] = 1;
        out.nodes_explored = nodes_;
        return out;
    }

private:
    int n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    Mask all_ = 0;
    std::vector<Mask> closed_;
    std::vector<int> chosen_;

    std::vector<int> greedy_cover() const
    {
        std::vector<int> out;
        Mask undominated = all_;
        while (undominated) {
            int pick = 0, gain = -1;
            for (int v = 0; v < n_; ++v) {
                int c = std::popcount(closed_[v] & undominated);
                if (c > gain) {
                    gain = c;
                    pick = v;
                }
            }
            out.push_back(pick);
            undominated &= ~closed_[pick];
        }
        return out;
    }

    int lower_bound(Mask undominated, Mask excluded) const
    {
        if (! undominated)
            return 0;
        int best_cover = 0;
        for (int v = 0; v < n_; ++v)
            if (! (excluded & bit(v)))
                best_cover = std::max(best_cover, std::popcount(closed_[v] & undominated));
        if (best_cover == 0)
            return n_ + 1;
        const int remaining = std::popcount(undominated);
        return (remaining + best_cover - 1) / best_cover;
    }

    bool feasible(Mask undominated, Mask excluded, int budget)
    {
        if (! undominated)
            return true;
        if (budget_ != 0 && nodes_ >= budget_)
            throw OracleBudgetExceeded("domination search exceeded node budget");
        ++nodes_;
        if (budget == 0 || lower_bound(undominated, excluded) > budget)
            return false;

        // Branch on the undominated vertex with the fewest usable dominators.
        int pivot = -1, fewest = n_ + 1;
        for (Mask rest = undominated; rest; rest &= rest - 1) {
            int u = std::countr_zero(rest);
            int c = std::popcount(closed_[u] & ~excluded);
            if (c < fewest) {
                fewest = c;
                pivot = u;
            }
        }
        if (fewest == 0)
            return false;

        std::vector<std::pair<int, int>> candidates;
        for (Mask rest = closed_[pivot] & ~excluded; rest; rest &= rest - 1) {
            int w = std::countr_zero(rest);
            candidates.emplace_back(-std::popcount(closed_[w] & undominated), w);
        }
        std::sort(candidates.begin(), candidates.end());

        // Drop candidates whose fresh coverage is contained in another candidate's.
        std::vector<int> kept;
        for (auto [neg_gain, w] : candidates) {
            const Mask cover_w = closed_[w] & undominated;
            bool dominated = false;
            for (auto [neg_gain2, w2] : candidates) {
                if (w2 == w)
                    continue;
                const Mask cover_w2 = closed_[w2] & undominated;
                if ((cover_w & ~cover_w2) == 0 && (cover_w != cover_w2 || w2 < w)) {
                    dominated = true;
                    break;
                }
            }
            if (! dominated)
                kept.push_back(w);
        }

        Mask local_excluded = excluded;
        for (int w : kept) {
            chosen_.push_back(w);
            if (feasible(undominated & ~closed_[w], local_excluded, budget - 1))
                return true;
            chosen_.pop_back();
            local_excluded |= bit(w);
        }
        return false;
    }
};

} // namespace

OracleResult<WeightFunction> exact_domination(const Graph & g, const OracleConfig & config)
{
    check_cap(g.order(), config, "exact_domination");
    if (g.order() == 0)
        return {0, WeightFunction(1, 0), 0};
    return DominationSearch(g, config).solve();
}

OracleResult<RainbowFunction> exact_rainbow(const Graph & g, int k, const OracleConfig & config)
{
    require_valid_k(k);
    check_cap(g.order() * k, config, "exact_rainbow");
    auto product = cartesian_product_complete(g, k);
    auto dom = exact_domination(product, config);
    OracleResult<RainbowFunction> out;
    out.value = dom.value;
    out.nodes_explored = dom.nodes_explored;
    out.witness = RainbowFunction(k, g.order());
    for (int idx = 0; idx < product.order(); ++idx)
        if (dom.witness.weights[idx])
            out.witness.labels[idx / k] |= ColorSet{1} << (idx % k);
    return out;
}

namespace {

class LabelingSearch {
public:
    LabelingSearch(const Graph & g, int k, const OracleConfig & config)
        : g_(g), k_(k), n_(g.order()), budget_(config.node_budget), current_(k, g.order())
    {
        // Vertex x can be checked once every member of N[x] is assigned.
        check_at_.resize(n_);
        for (int x = 0; x < n_; ++x) {
            int last = x;
            for (Vertex y : g.neighbors(x))
                last = std::max(last, y);
            check_at_[last].push_back(x);
        }
    }

    OracleResult<RainbowFunction> solve()
    {
        best_value_ = n_;
        best_ = RainbowFunction(k_, n_);
        std::fill(best_.labels.begin(), best_.labels.end(), ColorSet{1});
        dfs(0, 0);
        return {best_value_, best_, nodes_};
    }

private:
    const Graph & g_;
    int k_, n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    RainbowFunction current_;
    RainbowFunction best_;
    int best_value_ = 0;
    std::vector<std::vector<int>> check_at_;

    bool satisfied(int x) const
    {
        if (current_.labels[x])
            return true;
        ColorSet seen = 0;
        for (Vertex y : g_.neighbors(x))
            seen |= current_.labels[y];
        return seen == full_colors(k_);
    }

    void dfs(int v, int cost)
    {
        if (budget_ != 0 && nodes_ >= budget_)
            throw OracleBudgetExceeded("labeling search exceeded node budget");
        ++nodes_;
        if (cost >= best_value_)
            return;
        if (v == n_) {
            best_value_ = cost;
            best_ = current_;
            return;
        }
        for (ColorSet s = 0; s <= full_colors(k_); ++s) {
            if (cost + color_count(s) >= best_value_)
                continue;
            current_.labels[v] = s;
            bool ok = true;
            for (int x : check_at_[v])
                if (! satisfied(x)) {
                    ok = false;
                    break;
                }
            if (ok)
                dfs(v + 1, cost + color_count(s));
        }
        current_.labels[v] = 0;
    }
};

} // namespace

OracleResult<RainbowFunction> exact_rainbow_by_labelings(const Graph & g, int k, const OracleConfig & config)
{
    require_valid_k(k);
    check_cap(g.order(), config, "exact_rainbow_by_labelings");
    return LabelingSearch(g, k, config).solve();
}

namespace {

// Unified constraint: sum over N[x] of w must reach zero_need[x] when w(x) = 0
// and positive_need[x] otherwise.
class WeightSearch {
public:
    WeightSearch(const Graph & g, const WeightVariant & variant, int k, const OracleConfig & config)
        : g_(g), n_(g.order()), k_(k), budget_(config.node_budget)
    {
        lo_.assign(n_, 0);
        hi_.assign(n_, k);
        zero_need_.assign(n_, 0);
        positive_need_.assign(n_, 0);
        for (int x = 0; x < n_; ++x) {
            switch (variant.kind) {
            case WeightVariant::Kind::weak_k:
                zero_need_[x] = k;
                break;
            case WeightVariant::Kind::k_dom:
                zero_need_[x] = positive_need_[x] = k;
                break;
            case WeightVariant::Kind::jk_dom:
                zero_need_[x] = positive_need_[x] = k;
                hi_[x] = variant.j;
                break;
            case WeightVariant::Kind::weak_kL:
                lo_[x] = variant.assignment.labels[x].a;
                zero_need_[x] = variant.assignment.labels[x].b;
                break;
            }
        }

        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        closed_.resize(n_);
        for (int x = 0; x < n_; ++x)
            closed_[x] = closed_neighborhood(g, x);
    }

    std::optional<OracleResult<WeightFunction>> solve()
    {
        std::vector<int> top(hi_);
        if (! feasible_complete(top))
            return std::nullopt;

        // Greedy upper bound: lower weights one step at a time while feasible.
        best_ = top;
        for (int x : order_)
            while (best_[x] > lo_[x]) {
                --best_[x];
                if (! feasible_complete(best_)) {
                    ++best_[x];
                    break;
                }
            }
        best_value_ = std::accumulate(best_.begin(), best_.end(), 0);

        value_.assign(n_, -1);
        assigned_sum_.assign(n_, 0);
        open_max_.assign(n_, 0);
        for (int x = 0; x < n_; ++x)
            for (int y : closed_[x])
                open_max_[x] += hi_[y];
        remaining_lo_ = std::accumulate(lo_.begin(), lo_.end(), 0);
        dfs(0, 0);

        OracleResult<WeightFunction> out;
        out.value = best_value_;
        out.witness = WeightFunction(k_, n_);
        out.witness.weights = best_;
        out.nodes_explored = nodes_;
        return out;
    }

private:
    const Graph & g_;
    int n_, k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> lo_, hi_, zero_need_, positive_need_, order_;
    std::vector<VertexSet> closed_;
    std::vector<int> best_;
    int best_value_ = 0;

    std::vector<int> value_;        // -1 while unassigned
    std::vector<int> assigned_sum_; // assigned weight inside N[x]
    std::vector<int> open_max_;     // max weight still obtainable inside N[x]
    int remaining_lo_ = 0;

    int need(int x, int w) const { return w == 0 ? zero_need_[x] : positive_need_[x]; }

    bool feasible_complete(const std::vector<int> & w) const
    {
        for (int x = 0; x < n_; ++x) {
            int s = 0;
            for (int y : closed_[x])
                s += w[y];
            if (s < need(x, w[x]))
                return false;
        }
        return true;
    }

    bool still_possible(int x) const
    {
        const int reach = assigned_sum_[x] + open_max_[x];
        if (value_[x] >= 0)
            return reach >= need(x, value_[x]);
        return reach >= std::min(zero_need_[x], positive_need_[x]);
    }

    int remaining_lower_bound() const
    {
        int deficit = 0;
        for (int x = 0; x < n_; ++x)
            if (value_[x] >= 0)
                deficit = std::max(deficit, need(x, value_[x]) - assigned_sum_[x]);
        return std::max(deficit, remaining_lo_);
    }

    void dfs(int depth, int cost)
    {
        if (budget_ != 0 && nodes_ >= budget_)
            throw OracleBudgetExceeded("weight search exceeded node budget");
        ++nodes_;
        if (cost + remaining_lower_bound() >= best_value_)
            return;
        if (depth == n_) {
            best_value_ = cost;
            for (int x = 0; x < n_; ++x)
                best_[x] = value_[x];
            return;
        }
        const int u = order_[depth];
        remaining_lo_ -= lo_[u];
        for (int y : closed_[u])
            open_max_[y] -= hi_[u];
        for (int w = lo_[u]; w <= hi_[u] && cost + w < best_value_; ++w) {
            value_[u] = w;
            for (int y : closed_[u])
                assigned_sum_[y] += w;
            bool ok = true;
            for (int y : closed_[u])
                if (! still_possible(y)) {
                    ok = false;
                    break;
                }
            if (ok)
                dfs(depth + 1, cost + w);
            for (int y : closed_[u])
                assigned_sum_[y] -= w;
        }
        value_[u] = -1;
        for (int y : closed_[u])
            open_max_[y] += hi_[u];
        remaining_lo_ += lo_[u];
    }
};

} // namespace

std::optional<OracleResult<WeightFunction>> exact_weight_variant(
    const Graph & g, const WeightVariant & variant, int k, const OracleConfig & config)
{
    require_valid_k(k);
    check_cap(g.order(), config, "exact_weight_variant");
    if (variant.kind == WeightVariant::Kind::jk_dom && (variant.j < 1 || variant.j > k))
        throw std::invalid_argument("jk_dom requires 1 <= j <= k");
    if (variant.kind == WeightVariant::Kind::weak_kL) {
        if (variant.assignment.labels.size() != static_cast<std::size_t>(g.order()))
            throw std::invalid_argument("assignment size does not match graph");
        for (auto [a, b] : variant.assignment.labels)
            if (a < 0 || a > k || b < 0 || b > k)
                throw std::invalid_argument("assignment label outside [0, k]");
    }
    return WeightSearch(g, variant, k, config).solve();
}

Verdict validate_weight_variant(const Graph & g, const WeightFunction & w, const WeightVariant & variant)
{
    switch (variant.kind) {
    case WeightVariant::Kind::weak_k: return is_weak_k(g, w);
    case WeightVariant::Kind::k_dom: return is_k_dom(g, w);
    case WeightVariant::Kind::jk_dom: return is_jk_dom(g, w, variant.j);
    case WeightVariant::Kind::weak_kL: return is_weak_kL(g, w, variant.assignment);
    }
    return Verdict::pass();
}

} // namespace rdom
