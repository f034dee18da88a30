#include "rdom/cograph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rdom {

int Cotree::add_leaf(Vertex v)
{
    Node node;
    node.vertex = v;
    nodes.push_back(node);
    return static_cast<int>(nodes.size()) - 1;
}

int Cotree::add_internal(Kind kind, int left, int right)
{
    Node node;
    node.kind = kind;
    node.left = left;
    node.right = right;
    node.size = nodes[left].size + nodes[right].size;
    nodes.push_back(node);
    return static_cast<int>(nodes.size()) - 1;
}

namespace {

struct Frame {
    Cotree::Kind kind;
    std::vector<int> children;
    int line;
};

} // namespace

Cotree parse_cotree(std::string_view text)
{
    Cotree t;
    std::vector<Frame> stack;
    std::vector<int> finished;
    int line = 1;
    std::size_t i = 0;

    auto emit = [&](int node) {
        if (stack.empty())
            finished.push_back(node);
        else
            stack.back().children.push_back(node);
    };

    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '(') {
            ++i;
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
                ++i;
            if (i >= text.size())
                throw ParseError(ParseErrorKind::malformed, line, "unterminated node");
            const char tag = text[i];
            if (tag != 'J' && tag != 'U')
                throw ParseError(ParseErrorKind::malformed, line, std::string("unknown node tag '") + tag + "'");
            ++i;
            stack.push_back({tag == 'J' ? Cotree::Kind::join : Cotree::Kind::union_, {}, line});
        } else if (c == ')') {
            ++i;
            if (stack.empty())
                throw ParseError(ParseErrorKind::malformed, line, "unbalanced ')'");
            Frame frame = std::move(stack.back());
            stack.pop_back();
            if (frame.children.size() != 2)
                throw ParseError(ParseErrorKind::invalid_structure, frame.line,
                    "internal node has " + std::to_string(frame.children.size()) + " children, expected 2");
            emit(t.add_internal(frame.kind, frame.children[0], frame.children[1]));
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            long long v = 0;
            try {
                v = std::stoll(std::string(text.substr(i, j - i)));
            } catch (const std::exception &) {
                throw ParseError(ParseErrorKind::malformed, line, "bad leaf index");
            }
            if (v < 0 || v > 100'000'000)
                throw ParseError(ParseErrorKind::out_of_range, line, "leaf index out of range");
            i = j;
            emit(t.add_leaf(static_cast<Vertex>(v)));
        } else {
            throw ParseError(ParseErrorKind::malformed, line, std::string("unexpected character '") + c + "'");
        }
    }
    if (! stack.empty())
        throw ParseError(ParseErrorKind::malformed, line, "unbalanced '('");
    if (finished.size() != 1)
        throw ParseError(ParseErrorKind::malformed, line, finished.empty() ? "empty cotree" : "more than one root");
    t.root = finished.front();

    const int n = t.leaf_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto & node : t.nodes) {
        if (node.kind != Cotree::Kind::leaf)
            continue;
        if (node.vertex >= n)
            throw ParseError(ParseErrorKind::missing_item, 0, "leaves must be exactly 0.." + std::to_string(n - 1));
        if (seen[node.vertex])
            throw ParseError(ParseErrorKind::repeated_item, 0, "leaf " + std::to_string(node.vertex) + " repeated");
        seen[node.vertex] = true;
    }
    return t;
}

std::string render_cotree(const Cotree & t)
{
    std::vector<std::string> text(t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto & node = t.nodes[i];
        if (node.kind == Cotree::Kind::leaf)
            text[i] = std::to_string(node.vertex);
        else
            text[i] = std::string("(") + (node.kind == Cotree::Kind::join ? "J " : "U ") + std::move(text[node.left]) + " "
                + std::move(text[node.right]) + ")";
    }
    return t.root < 0 ? std::string() : text[t.root];
}

namespace {

// Leaves of every subtree as a contiguous slice of one left-to-right leaf order.
struct LeafRanges {
    std::vector<Vertex> order;
    std::vector<int> begin;
    std::vector<int> end;

    std::span<const Vertex> of(int node) const
    {
        return std::span<const Vertex>(order).subspan(begin[node], end[node] - begin[node]);
    }
};

LeafRanges leaf_ranges(const Cotree & t)
{
    LeafRanges r;
    r.begin.assign(t.nodes.size(), 0);
    r.end.assign(t.nodes.size(), 0);
    if (t.root < 0)
        return r;
    std::vector<std::pair<int, bool>> stack{{t.root, false}};
    while (! stack.empty()) {
        auto [node, closing] = stack.back();
        stack.pop_back();
        const auto & nd = t.nodes[node];
        if (closing) {
            r.end[node] = static_cast<int>(r.order.size());
            continue;
        }
        r.begin[node] = static_cast<int>(r.order.size());
        if (nd.kind == Cotree::Kind::leaf) {
            r.order.push_back(nd.vertex);
            r.end[node] = r.begin[node] + 1;
            continue;
        }
        stack.push_back({node, true});
        stack.push_back({nd.right, false});
        stack.push_back({nd.left, false});
    }
    return r;
}

} // namespace

Graph cotree_to_graph(const Cotree & t)
{
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> below(t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto & node = t.nodes[i];
        if (node.kind == Cotree::Kind::leaf) {
            below[i].push_back(node.vertex);
            continue;
        }
        if (node.kind == Cotree::Kind::join)
            for (Vertex u : below[node.left])
                for (Vertex v : below[node.right])
                    edges.emplace_back(std::min(u, v), std::max(u, v));
        below[i] = std::move(below[node.left]);
        below[i].insert(below[i].end(), below[node.right].begin(), below[node.right].end());
        below[node.right].clear();
    }
    return Graph(t.leaf_count(), edges);
}

std::optional<InducedP4> find_induced_p4(const Graph & g, std::span<const Vertex> vertices)
{
    std::vector<bool> inside(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : vertices)
        inside[v] = true;
    for (Vertex b : vertices)
        for (Vertex c : g.neighbors(b)) {
            if (! inside[c])
                continue;
            for (Vertex a : g.neighbors(b)) {
                if (! inside[a] || a == c || g.adjacent(a, c))
                    continue;
                for (Vertex d : g.neighbors(c))
                    if (inside[d] && d != b && ! g.adjacent(d, b) && ! g.adjacent(d, a))
                        return InducedP4{{a, b, c, d}};
            }
        }
    return std::nullopt;
}

namespace {

// Components of g[vertices] (co_components: of its complement), each sorted.
std::vector<VertexSet> split_parts(const Graph & g, const VertexSet & vertices, bool co)
{
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<int>(i);
    std::vector<bool> done(vertices.size(), false);
    std::vector<VertexSet> parts;
    std::vector<bool> mark(vertices.size(), false);
    for (std::size_t s = 0; s < vertices.size(); ++s) {
        if (done[s])
            continue;
        VertexSet part;
        std::vector<std::size_t> queue{s};
        done[s] = true;
        while (! queue.empty()) {
            const std::size_t cur = queue.back();
            queue.pop_back();
            const Vertex u = vertices[cur];
            part.push_back(u);
            if (! co) {
                for (Vertex w : g.neighbors(u))
                    if (local[w] >= 0 && ! done[local[w]]) {
                        done[local[w]] = true;
                        queue.push_back(local[w]);
                    }
            } else {
                for (Vertex w : g.neighbors(u))
                    if (local[w] >= 0)
                        mark[local[w]] = true;
                for (std::size_t j = 0; j < vertices.size(); ++j)
                    if (! done[j] && ! mark[j] && j != cur) {
                        done[j] = true;
                        queue.push_back(j);
                    }
                for (Vertex w : g.neighbors(u))
                    if (local[w] >= 0)
                        mark[local[w]] = false;
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

} // namespace

std::variant<Cotree, InducedP4> recognize_cograph(const Graph & g)
{
    Cotree t;
    if (g.order() == 0)
        return t;

    // Work item: a vertex set to decompose; results are combined after the children finish.
    struct Task {
        VertexSet vertices;
        Cotree::Kind kind = Cotree::Kind::leaf;
        std::vector<VertexSet> parts;
        std::size_t next = 0;
        std::vector<int> built;
    };
    std::vector<Task> stack;
    VertexSet all(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        all[v] = v;
    stack.push_back({std::move(all)});
    int result = -1;

    while (! stack.empty()) {
        Task & task = stack.back();
        if (task.parts.empty()) {
            if (task.vertices.size() == 1) {
                result = t.add_leaf(task.vertices.front());
                stack.pop_back();
                if (! stack.empty())
                    stack.back().built.push_back(result);
                continue;
            }
            auto parts = split_parts(g, task.vertices, false);
            task.kind = Cotree::Kind::union_;
            if (parts.size() == 1) {
                parts = split_parts(g, task.vertices, true);
                task.kind = Cotree::Kind::join;
            }
            if (parts.size() == 1) {
                auto p4 = find_induced_p4(g, task.vertices);
                if (! p4)
                    throw std::logic_error("prime subgraph without induced P4");
                return *p4;
            }
            task.parts = std::move(parts);
        }
        if (task.next < task.parts.size()) {
            VertexSet part = std::move(task.parts[task.next++]);
            stack.push_back({std::move(part)});
            continue;
        }
        int acc = task.built.front();
        for (std::size_t i = 1; i < task.built.size(); ++i)
            acc = t.add_internal(task.kind, acc, task.built[i]);
        result = acc;
        stack.pop_back();
        if (! stack.empty())
            stack.back().built.push_back(result);
    }
    t.root = result;
    return t;
}

// Rainbow domination.

namespace {

enum class Fill { plus, minus, ones, empty };

class RainbowBuilder {
public:
    RainbowBuilder(const Cotree & t, int k, const RainbowTable & table, const CographOptions & options)
        : t_(t), k_(k), table_(table), options_(options), below_(leaf_ranges(t)), f_(k, t.leaf_count())
    {
    }

    RainbowFunction build(int root, Fill fill)
    {
        std::vector<std::pair<int, Fill>> work{{root, fill}};
        while (! work.empty()) {
            auto [node, mode] = work.back();
            work.pop_back();
            switch (mode) {
            case Fill::empty:
                break;
            case Fill::ones:
                for (Vertex v : below_.of(node))
                    f_.labels[v] = 1;
                break;
            case Fill::plus:
                fill_plus(node);
                break;
            case Fill::minus:
                expand_minus(node, work);
                break;
            }
        }
        return f_;
    }

private:
    const Cotree & t_;
    int k_;
    const RainbowTable & table_;
    const CographOptions & options_;
    LeafRanges below_;
    RainbowFunction f_;

    // All labels nonempty, union [k], cost max(size, k).
    void fill_plus(int node)
    {
        const auto leaves = below_.of(node);
        const int size = static_cast<int>(leaves.size());
        for (int i = 0; i < size; ++i)
            f_.labels[leaves[i]] = ColorSet{1} << (i % k_);
        for (int c = size; c < k_; ++c)
            f_.labels[leaves[0]] |= ColorSet{1} << c;
    }

    void expand_minus(int node, std::vector<std::pair<int, Fill>> & work)
    {
        const auto & nd = t_.nodes[node];
        const int a = nd.left, b = nd.right;
        const int target = table_.minus[node];
        const auto & plus = table_.plus;
        const auto & minus = table_.minus;
        if (nd.kind == Cotree::Kind::union_) {
            if (saturating_add(minus[a], t_.nodes[b].size) == target) {
                work.push_back({a, Fill::minus});
                work.push_back({b, Fill::ones});
            } else if (saturating_add(minus[b], t_.nodes[a].size) == target) {
                work.push_back({a, Fill::ones});
                work.push_back({b, Fill::minus});
            } else {
                work.push_back({a, Fill::minus});
                work.push_back({b, Fill::minus});
            }
            return;
        }
        if (plus[a] == target) {
            work.push_back({a, Fill::plus});
        } else if (plus[b] == target) {
            work.push_back({b, Fill::plus});
        } else if (minus[a] == target) {
            work.push_back({a, Fill::minus});
        } else if (minus[b] == target) {
            work.push_back({b, Fill::minus});
        } else {
            f_.labels[below_.of(a).front()] = full_colors(k_);
            f_.labels[below_.of(b).front()] = full_colors(k_);
        }
    }
};

} // namespace

CographRainbowResult rainbow_cograph(const Cotree & t, int k, const CographOptions & options)
{
    require_valid_k(k);
    CographRainbowResult out;
    const std::size_t count = t.nodes.size();
    out.table.plus.assign(count, 0);
    out.table.minus.assign(count, infinite_cost);
    auto & plus = out.table.plus;
    auto & minus = out.table.minus;
    for (std::size_t i = 0; i < count; ++i) {
        const auto & node = t.nodes[i];
        plus[i] = std::max(node.size, k);
        if (node.kind == Cotree::Kind::leaf)
            continue;
        const int a = node.left, b = node.right;
        if (node.kind == Cotree::Kind::union_) {
            minus[i] = std::min({saturating_add(minus[a], t.nodes[b].size), saturating_add(minus[b], t.nodes[a].size),
                saturating_add(minus[a], minus[b])});
        } else {
            int best = std::min({plus[a], plus[b], minus[a], minus[b]});
            if (! options.drop_join_2k)
                best = std::min(best, 2 * k);
            minus[i] = best;
        }
    }
    const int n = t.leaf_count();
    if (n == 0) {
        out.witness = RainbowFunction(k, 0);
        return out;
    }
    RainbowBuilder builder(t, k, out.table, options);
    if (minus[t.root] < n) {
        out.value = minus[t.root];
        out.witness = builder.build(t.root, Fill::minus);
    } else {
        out.value = n;
        out.witness = builder.build(t.root, Fill::ones);
    }
    return out;
}

// Weak {k}- and {k}-domination share the table shape: W[node][q] is the least
// cost on the subtree when every vertex already receives q from outside.

namespace {

struct JoinChoice {
    int c1 = 0;
    int c2 = 0;
};

CographWeightResult weight_dp(const Cotree & t, int k, bool closed)
{
    require_valid_k(k);
    const std::size_t count = t.nodes.size();
    WeakTable table(count, std::vector<int>(static_cast<std::size_t>(k) + 1, 0));
    std::vector<std::vector<JoinChoice>> choice(count);
    std::vector<int> v1;

    for (std::size_t i = 0; i < count; ++i) {
        const auto & node = t.nodes[i];
        auto & w = table[i];
        if (node.kind == Cotree::Kind::leaf) {
            for (int q = 0; q <= k; ++q)
                w[q] = closed ? k - q : (q >= k ? 0 : 1);
            continue;
        }
        const auto & wa = table[node.left];
        const auto & wb = table[node.right];
        if (node.kind == Cotree::Kind::union_) {
            for (int q = 0; q <= k; ++q)
                w[q] = wa[q] + wb[q];
            continue;
        }
        choice[i].resize(static_cast<std::size_t>(k) + 1);
        const int cap1 = std::min(2 * k, k * t.nodes[node.left].size);
        const int cap2 = std::min(2 * k, k * t.nodes[node.right].size);
        v1.resize(static_cast<std::size_t>(cap2) + 1);
        for (int q = 0; q <= k; ++q) {
            // v1[c2]: least H1 cost when H2 contributes c2; nonincreasing in c2.
            for (int c2 = 0; c2 <= cap2; ++c2)
                v1[c2] = wa[std::min(q + c2, k)];
            int best = infinite_cost;
            JoinChoice pick;
            int threshold = cap2 + 1;
            for (int c1 = 0; c1 <= cap1; ++c1) {
                while (threshold > 0 && v1[threshold - 1] <= c1)
                    --threshold;
                if (threshold > cap2)
                    continue;
                const int c2 = std::max(threshold, wb[std::min(q + c1, k)]);
                if (c2 <= cap2 && c1 + c2 < best) {
                    best = c1 + c2;
                    pick = {c1, c2};
                }
            }
            w[q] = best;
            choice[i][q] = pick;
        }
    }

    CographWeightResult out;
    const int n = t.leaf_count();
    out.witness = WeightFunction(k, n);
    if (n == 0) {
        out.table = std::move(table);
        return out;
    }
    out.value = table[t.root][0];

    // Rebuild top-down, then raise each join side to its chosen total.
    struct Item {
        int node;
        int q;
    };
    std::vector<Item> work{{t.root, 0}};
    std::vector<std::pair<int, int>> pads; // (node, target cost), applied bottom-up
    while (! work.empty()) {
        auto [node, q] = work.back();
        work.pop_back();
        const auto & nd = t.nodes[node];
        if (nd.kind == Cotree::Kind::leaf) {
            out.witness.weights[nd.vertex] = table[node][q];
        } else if (nd.kind == Cotree::Kind::union_) {
            work.push_back({nd.left, q});
            work.push_back({nd.right, q});
        } else {
            auto [c1, c2] = choice[node][q];
            work.push_back({nd.left, std::min(q + c2, k)});
            work.push_back({nd.right, std::min(q + c1, k)});
            pads.emplace_back(nd.left, c1);
            pads.emplace_back(nd.right, c2);
        }
    }
    if (! pads.empty()) {
        const auto below = leaf_ranges(t);
        // Pads were recorded top-down; apply innermost first so outer totals stay exact.
        std::reverse(pads.begin(), pads.end());
        for (auto [node, target] : pads) {
            int have = 0;
            for (Vertex v : below.of(node))
                have += out.witness.weights[v];
            for (Vertex v : below.of(node)) {
                if (have >= target)
                    break;
                const int add = std::min(k - out.witness.weights[v], target - have);
                out.witness.weights[v] += add;
                have += add;
            }
        }
    }
    out.table = std::move(table);
    return out;
}

} // namespace

CographWeightResult weak_cograph(const Cotree & t, int k) { return weight_dp(t, k, false); }

CographWeightResult kdom_cograph(const Cotree & t, int k) { return weight_dp(t, k, true); }

} // namespace rdom
