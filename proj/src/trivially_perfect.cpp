#include "rdom/trivially_perfect.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace rdom {

std::vector<Vertex> RootedTreeModel::roots() const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v)
        if (parent[v] < 0)
            out.push_back(v);
    return out;
}

std::vector<std::vector<Vertex>> RootedTreeModel::children() const
{
    std::vector<std::vector<Vertex>> out(parent.size());
    for (Vertex v = 0; v < order(); ++v)
        if (parent[v] >= 0)
            out[parent[v]].push_back(v);
    return out;
}

void validate_tree_model(const RootedTreeModel & model)
{
    const int n = model.order();
    std::vector<int> state(static_cast<std::size_t>(n), 0); // 0 new, 1 on stack, 2 done
    for (Vertex v = 0; v < n; ++v)
        if (model.parent[v] < -1 || model.parent[v] >= n || model.parent[v] == v)
            throw std::invalid_argument("tree model: bad parent of vertex " + std::to_string(v));
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> trail;
        Vertex v = s;
        while (v >= 0 && state[v] == 0) {
            state[v] = 1;
            trail.push_back(v);
            v = model.parent[v];
        }
        if (v >= 0 && state[v] == 1)
            throw std::invalid_argument("tree model: cycle through vertex " + std::to_string(v));
        for (Vertex t : trail)
            state[t] = 2;
    }
}

RootedTreeModel parse_tree_model(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::vector<std::pair<long long, std::pair<long long, int>>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        long long v, p;
        std::string extra;
        if (! (ls >> v >> p) || (ls >> extra))
            throw ParseError(ParseErrorKind::malformed, line_no, "expected \"v parent\"");
        rows.push_back({v, {p, line_no}});
    }
    const auto n = static_cast<long long>(rows.size());
    RootedTreeModel model;
    model.parent.assign(rows.size(), -1);
    std::vector<bool> seen(rows.size(), false);
    for (auto [v, rest] : rows) {
        auto [p, ln] = rest;
        if (v < 0 || v >= n || p < -1 || p >= n)
            throw ParseError(ParseErrorKind::out_of_range, ln, "vertex outside [0, " + std::to_string(n) + ")");
        if (seen[v])
            throw ParseError(ParseErrorKind::repeated_item, ln, "vertex " + std::to_string(v) + " listed twice");
        if (p == v)
            throw ParseError(ParseErrorKind::self_loop, ln, "vertex is its own parent");
        seen[v] = true;
        model.parent[v] = static_cast<Vertex>(p);
    }
    try {
        validate_tree_model(model);
    } catch (const std::invalid_argument & err) {
        throw ParseError(ParseErrorKind::invalid_structure, 0, err.what());
    }
    return model;
}

std::string render_tree_model(const RootedTreeModel & model)
{
    std::ostringstream out;
    for (Vertex v = 0; v < model.order(); ++v)
        out << v << ' ' << model.parent[v] << '\n';
    return out.str();
}

Graph tree_model_to_graph(const RootedTreeModel & model)
{
    validate_tree_model(model);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < model.order(); ++v)
        for (Vertex a = model.parent[v]; a >= 0; a = model.parent[a])
            edges.emplace_back(std::min(v, a), std::max(v, a));
    return Graph(model.order(), edges);
}

std::variant<RootedTreeModel, TreeModelRefusal> build_tree_model(const Graph & g)
{
    RootedTreeModel model;
    model.parent.assign(static_cast<std::size_t>(g.order()), -1);
    std::vector<bool> inside(static_cast<std::size_t>(g.order()), false);

    // Each task: a connected vertex set and the parent its root should hang from.
    std::vector<std::pair<VertexSet, Vertex>> tasks;
    for (auto & comp : connected_components(g))
        tasks.push_back({std::move(comp), -1});

    while (! tasks.empty()) {
        auto [vs, up] = std::move(tasks.back());
        tasks.pop_back();
        for (Vertex v : vs)
            inside[v] = true;
        auto local_degree = [&](Vertex v) {
            int d = 0;
            for (Vertex w : g.neighbors(v))
                d += inside[w];
            return d;
        };
        Vertex top = vs.front();
        for (Vertex v : vs)
            if (local_degree(v) > local_degree(top))
                top = v;
        if (local_degree(top) != static_cast<int>(vs.size()) - 1) {
            // No universal vertex: top has a non-neighbour w at distance two via x,
            // and some y in N(top) misses x; y-top-x-w is a P4 or closes a C4.
            for (Vertex x : g.neighbors(top)) {
                if (! inside[x])
                    continue;
                for (Vertex w : g.neighbors(x)) {
                    if (! inside[w] || w == top || g.adjacent(w, top))
                        continue;
                    for (Vertex y : g.neighbors(top))
                        if (inside[y] && y != x && ! g.adjacent(y, x)) {
                            TreeModelRefusal r;
                            if (g.adjacent(y, w)) {
                                r.vertices = {top, x, w, y};
                                r.cycle = true;
                            } else {
                                r.vertices = {y, top, x, w};
                            }
                            return r;
                        }
                }
            }
            throw std::logic_error("build_tree_model: connected graph without universal vertex or obstruction");
        }
        model.parent[top] = up;
        for (Vertex v : vs)
            inside[v] = false;
        VertexSet rest;
        for (Vertex v : vs)
            if (v != top)
                rest.push_back(v);
        if (rest.empty())
            continue;
        auto sub = induced_subgraph(g, rest);
        for (const auto & comp : connected_components(sub)) {
            VertexSet mapped;
            for (Vertex v : comp)
                mapped.push_back(rest[v]);
            tasks.push_back({std::move(mapped), top});
        }
    }
    return model;
}

namespace {

std::vector<Vertex> preorder(const RootedTreeModel & model, const std::vector<std::vector<Vertex>> & kids)
{
    std::vector<Vertex> order;
    order.reserve(model.parent.size());
    auto roots = model.roots();
    std::vector<Vertex> stack(roots.rbegin(), roots.rend());
    while (! stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it)
            stack.push_back(*it);
    }
    return order;
}

} // namespace

ReducedInstance reduce_instance(const RootedTreeModel & model, const KAssignment & labels)
{
    validate_tree_model(model);
    const int n = model.order();
    if (labels.labels.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("reduce_instance: assignment size does not match model");
    const int k = labels.k;
    auto kids = model.children();
    auto order = preorder(model, kids);

    std::vector<Vertex> root_of(static_cast<std::size_t>(n));
    std::vector<int> above(static_cast<std::size_t>(n), 0); // fixed weight on proper non-root ancestors
    std::vector<int> below(static_cast<std::size_t>(n), 0); // fixed weight on proper descendants
    auto fixed_a = [&](Vertex v) { return model.parent[v] >= 0 ? labels.labels[v].a : 0; };
    for (Vertex v : order) {
        const Vertex p = model.parent[v];
        root_of[v] = p < 0 ? v : root_of[p];
        above[v] = p < 0 ? 0 : above[p] + fixed_a(p);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (model.parent[*it] >= 0)
            below[model.parent[*it]] += below[*it] + fixed_a(*it);

    ReducedInstance out;
    out.fixed_weight.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> new_b(static_cast<std::size_t>(n), 0);
    std::vector<bool> keep(static_cast<std::size_t>(n), false);
    for (Vertex v = 0; v < n; ++v) {
        const auto [a, b] = labels.labels[v];
        if (model.parent[v] < 0) {
            keep[v] = true;
            new_b[v] = std::max(0, b - below[v]);
            out.offset += below[v];
            continue;
        }
        if (a > 0) {
            out.fixed_weight[v] = a;
            continue;
        }
        new_b[v] = std::max(0, b - above[v] - below[v]);
        if (new_b[v] == 0)
            out.fixed_weight[v] = 0;
        else
            keep[v] = true;
    }

    std::vector<Vertex> index(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v)
        if (keep[v]) {
            index[v] = static_cast<Vertex>(out.original.size());
            out.original.push_back(v);
        }
    const int m = static_cast<int>(out.original.size());
    out.model.parent.assign(static_cast<std::size_t>(m), -1);
    out.labels = KAssignment(k, m);
    for (int i = 0; i < m; ++i) {
        const Vertex v = out.original[i];
        Vertex p = model.parent[v];
        while (p >= 0 && ! keep[p])
            p = model.parent[p];
        out.model.parent[i] = p < 0 ? -1 : index[p];
        out.labels.labels[i] = {model.parent[v] < 0 ? labels.labels[v].a : 0, new_b[v]};
    }
    return out;
}

namespace {

struct ChainEntry {
    Vertex vertex;
    int chain;
    int position;
    int d;
};

// Chains hanging below x, each sorted by effective demand, and the merged d order.
// d uses max(demand, chain constraint) - position + 1.
struct ChainView {
    std::vector<std::vector<Vertex>> chains;
    std::vector<ChainEntry> merged;
    std::vector<Vertex> bottoms;
};

ChainView collect_chains(const std::vector<std::vector<Vertex>> & kids, Vertex x, std::span<const int> demand,
    std::span<const int> help, std::span<const int> constraint)
{
    ChainView view;
    for (Vertex top : kids[x]) {
        std::vector<Vertex> chain;
        Vertex v = top;
        while (true) {
            chain.push_back(v);
            if (kids[v].empty())
                break;
            if (kids[v].size() != 1)
                throw std::invalid_argument("descendant_order: subtree below vertex is not a path");
            v = kids[v].front();
        }
        const Vertex bottom = chain.back();
        const int h = help.empty() ? 0 : help[bottom];
        auto eff = [&](Vertex z) { return std::max(0, demand[z] - h); };
        std::stable_sort(chain.begin(), chain.end(), [&](Vertex p, Vertex q) { return eff(p) > eff(q); });
        const int c = constraint.empty() ? 0 : constraint[bottom];
        const int j = static_cast<int>(view.chains.size());
        for (int p = 1; p <= static_cast<int>(chain.size()); ++p)
            view.merged.push_back({chain[p - 1], j, p, std::max(eff(chain[p - 1]), c) - p + 1});
        view.chains.push_back(std::move(chain));
        view.bottoms.push_back(bottom);
    }
    std::stable_sort(view.merged.begin(), view.merged.end(), [](const ChainEntry & p, const ChainEntry & q) {
        if (p.d != q.d)
            return p.d > q.d;
        if (p.chain != q.chain)
            return p.chain < q.chain;
        return p.position < q.position;
    });
    return view;
}

// best[v][q]: least total weight on the subtree of v when its proper ancestors
// carry weight q (capped at k). Raising any weight keeps a function feasible, so
// a subtree can absorb any larger total up to k times its size at that cost.
class SubtreeSolver {
public:
    SubtreeSolver(const RootedTreeModel & model, const KAssignment & labels)
        : labels_(labels), k_(labels.k), n_(model.order()), kids_(model.children()), order_(preorder(model, kids_))
    {
        const auto width = static_cast<std::size_t>(k_) + 1;
        best_.assign(static_cast<std::size_t>(n_) * width, 0);
        sum_.assign(static_cast<std::size_t>(n_) * width, 0);
        size_.assign(static_cast<std::size_t>(n_), 1);
        for (auto it = order_.rbegin(); it != order_.rend(); ++it)
            solve(*it);
        for (Vertex v = 0; v < n_; ++v)
            if (model.parent[v] < 0)
                roots_.push_back(v);
    }

    int value() const
    {
        long long total = 0;
        for (Vertex r : roots_)
            total += best(r, 0);
        return static_cast<int>(total);
    }

    std::vector<int> witness() const
    {
        std::vector<int> w(static_cast<std::size_t>(n_), 0);
        struct Task {
            Vertex v;
            int q;
            long long target;
        };
        std::vector<Task> stack;
        for (Vertex r : roots_)
            stack.push_back({r, 0, best(r, 0)});
        while (! stack.empty()) {
            auto [v, q, target] = stack.back();
            stack.pop_back();
            auto [own, reach] = choice(v, q);
            long long extra = target - best(v, q);
            const int raise = static_cast<int>(std::min<long long>(extra, k_ - own));
            w[v] = own + raise;
            extra -= raise;
            // Children start at their optimum under the chosen ancestor weight; a zero
            // vertex may need them to carry more, and any surplus is pushed down too.
            long long need = 0;
            if (own == 0)
                need = std::max<long long>(0, labels_.labels[v].b - q - sum(v, q));
            long long spare = need + extra;
            for (Vertex c : kids_[v]) {
                const long long base = best(c, reach);
                const long long room = static_cast<long long>(k_) * size_[c] - base;
                const long long add = std::min(spare, room);
                spare -= add;
                stack.push_back({c, reach, base + add});
            }
            if (spare > 0)
                throw std::logic_error("gamma_wkL: subtree cannot absorb its target");
        }
        return w;
    }

private:
    const KAssignment & labels_;
    int k_;
    int n_;
    std::vector<std::vector<Vertex>> kids_;
    std::vector<Vertex> order_;
    std::vector<Vertex> roots_;
    std::vector<long long> best_;
    std::vector<long long> sum_; ///< sum over children of best(c, q)
    std::vector<int> size_;

    static constexpr long long infinite = std::numeric_limits<long long>::max() / 4;

    std::size_t at(Vertex v, int q) const { return static_cast<std::size_t>(v) * (static_cast<std::size_t>(k_) + 1) + q; }
    long long best(Vertex v, int q) const { return best_[at(v, q)]; }
    long long sum(Vertex v, int q) const { return sum_[at(v, q)]; }

    long long zero_cost(Vertex v, int q) const
    {
        if (labels_.labels[v].a > 0)
            return infinite;
        const long long need = labels_.labels[v].b - q;
        if (need > static_cast<long long>(k_) * (size_[v] - 1))
            return infinite;
        return std::max(need, sum(v, q));
    }

    void solve(Vertex v)
    {
        for (Vertex c : kids_[v])
            size_[v] += size_[c];
        for (int q = 0; q <= k_; ++q) {
            long long total = 0;
            for (Vertex c : kids_[v])
                total += best(c, q);
            sum_[at(v, q)] = total;
        }
        // Positive own weight w puts min(k, q + w) on the children's ancestors:
        // scan s = q + w from the top, keeping the best (s + sum(s)).
        const int lo = std::max(1, labels_.labels[v].a);
        std::vector<long long> suffix(static_cast<std::size_t>(k_) + 2, infinite);
        for (int s = k_ - 1; s >= 0; --s)
            suffix[s] = std::min(suffix[s + 1], s + sum(v, s));
        for (int q = 0; q <= k_; ++q) {
            long long cost = std::max(lo, k_ - q) + sum(v, k_);
            const int first = q + lo;
            if (first < k_)
                cost = std::min(cost, suffix[first] - q);
            best_[at(v, q)] = std::min(cost, zero_cost(v, q));
        }
    }

    // Own weight of an optimal choice at (v, q) and the ancestor weight its children see.
    std::pair<int, int> choice(Vertex v, int q) const
    {
        const long long target = best(v, q);
        if (zero_cost(v, q) == target)
            return {0, q};
        const int lo = std::max(1, labels_.labels[v].a);
        for (int w = lo; w <= k_; ++w) {
            const int s = std::min(k_, q + w);
            if (w + sum(v, s) == target)
                return {w, s};
        }
        throw std::logic_error("gamma_wkL: no optimal choice recorded");
    }
};

} // namespace

DescendantOrder descendant_order(const RootedTreeModel & model, std::span<const int> b, Vertex x)
{
    auto kids = model.children();
    auto view = collect_chains(kids, x, b, {}, {});
    DescendantOrder out;
    out.chains = std::move(view.chains);
    for (const auto & e : view.merged)
        out.merged.push_back({e.vertex, e.chain, e.position, e.d});
    return out;
}

TreeWeightResult gamma_wkL(const RootedTreeModel & model, const KAssignment & labels)
{
    require_valid_k(labels.k);
    auto reduced = reduce_instance(model, labels);
    SubtreeSolver solver(reduced.model, reduced.labels);

    TreeWeightResult out;
    out.value = solver.value() + reduced.offset;
    out.witness = WeightFunction(labels.k, model.order());
    for (Vertex v = 0; v < model.order(); ++v)
        if (reduced.fixed_weight[v] >= 0)
            out.witness.weights[v] = reduced.fixed_weight[v];
    auto inner = solver.witness();
    for (std::size_t i = 0; i < reduced.original.size(); ++i)
        out.witness.weights[reduced.original[i]] = inner[i];
    return out;
}

TreeWeightResult gamma_wk_tp(const RootedTreeModel & model, int k)
{
    require_valid_k(k);
    return gamma_wkL(model, KAssignment(k, model.order(), Label{0, k}));
}

int gamma_rk_tp(const RootedTreeModel & model, int k) { return gamma_wk_tp(model, k).value; }

std::optional<TreeWeightResult> jk_domination_tp(const RootedTreeModel & model, int j, int k)
{
    require_valid_k(k);
    if (j < 1 || j > k)
        throw std::invalid_argument("jk_domination_tp: j must lie in [1, k]");
    validate_tree_model(model);
    auto kids = model.children();
    auto order = preorder(model, kids);
    std::vector<int> level(static_cast<std::size_t>(model.order()), 1);
    for (Vertex v : order)
        if (model.parent[v] >= 0)
            level[v] = level[model.parent[v]] + 1;

    const int full = k / j;
    TreeWeightResult out;
    out.witness = WeightFunction(k, model.order());
    for (Vertex v = 0; v < model.order(); ++v) {
        int w = 0;
        if (level[v] <= full)
            w = j;
        else if (level[v] == full + 1)
            w = k % j;
        out.witness.weights[v] = w;
        out.value += w;
    }
    // Closed neighbourhood weight = ancestors + self + descendants.
    std::vector<long long> up(static_cast<std::size_t>(model.order()), 0), down(static_cast<std::size_t>(model.order()), 0);
    for (Vertex v : order)
        if (model.parent[v] >= 0)
            up[v] = up[model.parent[v]] + out.witness.weights[model.parent[v]];
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (model.parent[*it] >= 0)
            down[model.parent[*it]] += down[*it] + out.witness.weights[*it];
    for (Vertex v = 0; v < model.order(); ++v)
        if (up[v] + down[v] + out.witness.weights[v] < k)
            return std::nullopt;
    return out;
}

} // namespace rdom
