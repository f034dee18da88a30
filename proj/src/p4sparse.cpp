#include "rdom/p4sparse.hpp"

#include "rdom/cograph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace rdom {

bool is_spider(const Graph & g, const SpiderPartition & spider)
{
    const auto & S = spider.feet;
    const auto & K = spider.body;
    if (S.size() != K.size() || S.size() < 2)
        return false;
    if (! is_independent(g, S) || ! is_clique(g, K))
        return false;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = 0; j < K.size(); ++j) {
            const bool want = spider.thick ? i != j : i == j;
            if (g.adjacent(S[i], K[j]) != want)
                return false;
        }
    for (Vertex t : spider.head) {
        for (Vertex k : K)
            if (! g.adjacent(t, k))
                return false;
        for (Vertex s : S)
            if (g.adjacent(t, s))
                return false;
    }
    return true;
}

int P4SparseTree::add_leaf(Vertex v)
{
    Node node;
    node.vertex = v;
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
}

int P4SparseTree::add_internal(Kind kind, int left, int right)
{
    Node node;
    node.kind = kind;
    node.left = left;
    node.right = right;
    node.size = nodes[left].size + nodes[right].size;
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
}

int P4SparseTree::add_spider(bool thick, std::vector<Vertex> feet, std::vector<Vertex> body, int head)
{
    Node node;
    node.kind = Kind::spider;
    node.thick = thick;
    node.size = static_cast<int>(feet.size() + body.size()) + (head >= 0 ? nodes[head].size : 0);
    node.feet = std::move(feet);
    node.body = std::move(body);
    node.head = head;
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
}

namespace {

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    P4SparseTree parse()
    {
        skip();
        if (pos_ >= text_.size())
            fail(ParseErrorKind::malformed, "empty tree");
        t_.root = expr();
        skip();
        if (pos_ < text_.size())
            fail(ParseErrorKind::malformed, "trailing content");
        validate();
        return std::move(t_);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    P4SparseTree t_;
    std::vector<Vertex> mentioned_;

    [[noreturn]] void fail(ParseErrorKind kind, const std::string & what) { throw ParseError(kind, line_, what); }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n')
                ++line_;
            ++pos_;
        }
    }

    char peek()
    {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c)
            fail(ParseErrorKind::malformed, std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string word()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Vertex number()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_ || pos_ - start > 9)
            fail(ParseErrorKind::malformed, "expected a vertex index");
        Vertex v = std::stoi(std::string(text_.substr(start, pos_ - start)));
        mentioned_.push_back(v);
        return v;
    }

    std::vector<Vertex> list()
    {
        expect('(');
        std::vector<Vertex> out;
        while (peek() != ')') {
            if (peek() == '\0')
                fail(ParseErrorKind::malformed, "unterminated list");
            out.push_back(number());
        }
        ++pos_;
        return out;
    }

    int expr()
    {
        if (peek() != '(')
            return t_.add_leaf(number());
        ++pos_;
        const std::string tag = word();
        if (tag == "U" || tag == "J") {
            int a = expr();
            int b = expr();
            if (peek() != ')')
                fail(ParseErrorKind::invalid_structure, "union/join nodes take exactly two children");
            ++pos_;
            return t_.add_internal(tag == "U" ? P4SparseTree::Kind::union_ : P4SparseTree::Kind::join, a, b);
        }
        if (tag != "S")
            fail(ParseErrorKind::malformed, "unknown node tag '" + tag + "'");
        const std::string kind = word();
        if (kind != "thin" && kind != "thick")
            fail(ParseErrorKind::malformed, "spider kind must be thin or thick");
        auto feet = list();
        auto body = list();
        if (feet.size() != body.size() || feet.size() < 2)
            fail(ParseErrorKind::invalid_structure, "spider needs |S| = |K| >= 2");
        int head = -1;
        if (peek() == '(') {
            std::size_t save = pos_;
            int save_line = line_;
            ++pos_;
            if (peek() == ')')
                ++pos_;
            else {
                pos_ = save;
                line_ = save_line;
                head = expr();
            }
        } else {
            head = expr();
        }
        expect(')');
        return t_.add_spider(kind == "thick", std::move(feet), std::move(body), head);
    }

    void validate()
    {
        const int n = t_.vertex_count();
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (Vertex v : mentioned_) {
            if (v >= n)
                throw ParseError(ParseErrorKind::missing_item, 0, "vertices must be exactly 0.." + std::to_string(n - 1));
            if (seen[v])
                throw ParseError(ParseErrorKind::repeated_item, 0, "vertex " + std::to_string(v) + " repeated");
            seen[v] = true;
        }
    }
};

std::string render_list(const std::vector<Vertex> & vs)
{
    std::string out = "(";
    for (std::size_t i = 0; i < vs.size(); ++i)
        out += (i ? " " : "") + std::to_string(vs[i]);
    return out + ")";
}

// Vertices below every node, in a fixed order (spider: feet, body, head).
std::vector<std::vector<Vertex>> vertices_below(const P4SparseTree & t)
{
    std::vector<std::vector<Vertex>> out(t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto & node = t.nodes[i];
        switch (node.kind) {
        case P4SparseTree::Kind::leaf:
            out[i] = {node.vertex};
            break;
        case P4SparseTree::Kind::union_:
        case P4SparseTree::Kind::join:
            out[i] = out[node.left];
            out[i].insert(out[i].end(), out[node.right].begin(), out[node.right].end());
            break;
        case P4SparseTree::Kind::spider:
            out[i] = node.feet;
            out[i].insert(out[i].end(), node.body.begin(), node.body.end());
            if (node.head >= 0)
                out[i].insert(out[i].end(), out[node.head].begin(), out[node.head].end());
            break;
        }
    }
    return out;
}

} // namespace

P4SparseTree parse_p4sparse(std::string_view text) { return TreeParser(text).parse(); }

std::string render_p4sparse(const P4SparseTree & t)
{
    std::vector<std::string> text(t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto & node = t.nodes[i];
        switch (node.kind) {
        case P4SparseTree::Kind::leaf:
            text[i] = std::to_string(node.vertex);
            break;
        case P4SparseTree::Kind::union_:
        case P4SparseTree::Kind::join:
            text[i] = std::string("(") + (node.kind == P4SparseTree::Kind::join ? "J " : "U ") + text[node.left] + " "
                + text[node.right] + ")";
            break;
        case P4SparseTree::Kind::spider:
            text[i] = std::string("(S ") + (node.thick ? "thick " : "thin ") + render_list(node.feet) + " "
                + render_list(node.body) + " " + (node.head >= 0 ? text[node.head] : std::string("()")) + ")";
            break;
        }
    }
    return t.root < 0 ? std::string() : text[t.root];
}

Graph p4sparse_to_graph(const P4SparseTree & t)
{
    std::vector<Edge> edges;
    auto add = [&](Vertex u, Vertex v) { edges.emplace_back(std::min(u, v), std::max(u, v)); };
    auto below = vertices_below(t);
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto & node = t.nodes[i];
        if (node.kind == P4SparseTree::Kind::join) {
            for (Vertex u : below[node.left])
                for (Vertex v : below[node.right])
                    add(u, v);
        } else if (node.kind == P4SparseTree::Kind::spider) {
            const auto & S = node.feet;
            const auto & K = node.body;
            for (std::size_t a = 0; a < K.size(); ++a)
                for (std::size_t b = a + 1; b < K.size(); ++b)
                    add(K[a], K[b]);
            for (std::size_t a = 0; a < S.size(); ++a)
                for (std::size_t b = 0; b < K.size(); ++b)
                    if (node.thick ? a != b : a == b)
                        add(S[a], K[b]);
            if (node.head >= 0)
                for (Vertex h : below[node.head])
                    for (Vertex k : K)
                        add(h, k);
        }
    }
    return Graph(t.vertex_count(), edges);
}

int count_induced_p4(const Graph & g, std::span<const Vertex> vs)
{
    const std::size_t m = vs.size();
    int count = 0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c)
                for (std::size_t d = c + 1; d < m; ++d) {
                    const Vertex q[4] = {vs[a], vs[b], vs[c], vs[d]};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(q[i], q[j])) {
                                ++deg[i];
                                ++deg[j];
                                ++edges;
                            }
                    // P4: three edges, degree sequence 1,1,2,2.
                    if (edges == 3) {
                        int ones = 0, twos = 0;
                        for (int x : deg) {
                            ones += x == 1;
                            twos += x == 2;
                        }
                        if (ones == 2 && twos == 2)
                            ++count;
                    }
                }
    return count;
}

namespace {

std::optional<std::array<Vertex, 5>> find_bad_five(const Graph & g, const VertexSet & vs)
{
    const std::size_t m = vs.size();
    std::array<Vertex, 5> pick{};
    std::array<std::size_t, 5> idx{};
    if (m < 5)
        return std::nullopt;
    for (std::size_t i = 0; i < 5; ++i)
        idx[i] = i;
    while (true) {
        for (std::size_t i = 0; i < 5; ++i)
            pick[i] = vs[idx[i]];
        if (count_induced_p4(g, pick) >= 2)
            return pick;
        int i = 4;
        while (i >= 0 && idx[i] == m - 5 + static_cast<std::size_t>(i))
            --i;
        if (i < 0)
            return std::nullopt;
        ++idx[i];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < 5; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

// Thin spider structure of g[vs] (or of its complement), if any.
std::optional<SpiderPartition> thin_spider_in(const Graph & g, const VertexSet & vs, bool complemented)
{
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vs.size(); ++i)
        local[vs[i]] = static_cast<int>(i);
    auto adjacent = [&](Vertex u, Vertex v) { return u != v && g.adjacent(u, v) != complemented; };
    auto degree = [&](Vertex u) {
        int d = 0;
        for (Vertex w : g.neighbors(u))
            d += local[w] >= 0;
        return complemented ? static_cast<int>(vs.size()) - 1 - d : d;
    };

    SpiderPartition sp;
    std::vector<bool> used(vs.size(), false);
    for (Vertex s : vs) {
        if (degree(s) != 1)
            continue;
        Vertex partner = -1;
        for (Vertex w : vs)
            if (adjacent(s, w)) {
                partner = w;
                break;
            }
        if (used[local[partner]])
            return std::nullopt;
        used[local[s]] = used[local[partner]] = true;
        sp.feet.push_back(s);
        sp.body.push_back(partner);
    }
    if (sp.feet.size() < 2)
        return std::nullopt;
    for (Vertex v : vs)
        if (! used[local[v]])
            sp.head.push_back(v);

    for (std::size_t i = 0; i < sp.body.size(); ++i) {
        if (degree(sp.feet[i]) != 1)
            return std::nullopt;
        for (std::size_t j = i + 1; j < sp.body.size(); ++j)
            if (! adjacent(sp.body[i], sp.body[j]) || adjacent(sp.feet[i], sp.feet[j]))
                return std::nullopt;
    }
    for (Vertex t : sp.head)
        for (Vertex k : sp.body)
            if (! adjacent(t, k))
                return std::nullopt;
    return sp;
}

std::optional<SpiderPartition> find_spider(const Graph & g, const VertexSet & vs)
{
    if (auto thin = thin_spider_in(g, vs, false))
        return thin;
    if (auto co = thin_spider_in(g, vs, true)) {
        SpiderPartition sp;
        sp.thick = true;
        sp.feet = co->body;
        sp.body = co->feet;
        sp.head = co->head;
        return sp;
    }
    return std::nullopt;
}

std::vector<VertexSet> parts_of(const Graph & g, const VertexSet & vs, bool co)
{
    std::vector<VertexSet> parts;
    std::vector<bool> done(vs.size(), false);
    for (std::size_t s = 0; s < vs.size(); ++s) {
        if (done[s])
            continue;
        VertexSet part;
        std::vector<std::size_t> queue{s};
        done[s] = true;
        while (! queue.empty()) {
            std::size_t cur = queue.back();
            queue.pop_back();
            part.push_back(vs[cur]);
            for (std::size_t j = 0; j < vs.size(); ++j)
                if (! done[j] && j != cur && g.adjacent(vs[cur], vs[j]) != co) {
                    done[j] = true;
                    queue.push_back(j);
                }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

class Decomposer {
public:
    explicit Decomposer(const Graph & g) : g_(g) {}

    std::variant<P4SparseTree, P4SparseRefusal> run()
    {
        if (g_.order() == 0)
            return t_;
        VertexSet all(static_cast<std::size_t>(g_.order()));
        std::iota(all.begin(), all.end(), 0);
        int root = build(all);
        if (refusal_)
            return *refusal_;
        t_.root = root;
        return std::move(t_);
    }

private:
    const Graph & g_;
    P4SparseTree t_;
    std::optional<P4SparseRefusal> refusal_;

    int build(const VertexSet & vs)
    {
        if (vs.size() == 1)
            return t_.add_leaf(vs.front());
        for (bool co : {false, true}) {
            auto parts = parts_of(g_, vs, co);
            if (parts.size() < 2)
                continue;
            int acc = -1;
            for (const auto & part : parts) {
                int child = build(part);
                if (refusal_)
                    return -1;
                acc = acc < 0 ? child
                              : t_.add_internal(co ? P4SparseTree::Kind::join : P4SparseTree::Kind::union_, acc, child);
            }
            return acc;
        }
        if (auto sp = find_spider(g_, vs)) {
            int head = -1;
            if (! sp->head.empty()) {
                head = build(sp->head);
                if (refusal_)
                    return -1;
            }
            return t_.add_spider(sp->thick, sp->feet, sp->body, head);
        }
        auto bad = find_bad_five(g_, vs);
        if (! bad)
            throw std::logic_error("prime non-spider subgraph without a bad 5-set");
        refusal_ = P4SparseRefusal{*bad};
        return -1;
    }
};

} // namespace

std::variant<P4SparseTree, P4SparseRefusal> recognize_p4sparse(const Graph & g) { return Decomposer(g).run(); }

bool is_p4sparse_bruteforce(const Graph & g)
{
    VertexSet all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    return ! find_bad_five(g, all).has_value();
}

int rainbow_thin_spider(int feet, int vertices, int k) { return std::min(vertices, feet - 1 + k); }

int rainbow_thick_spider(int /*feet*/, int vertices, int k) { return std::min(vertices, k + 1); }

namespace {

int spider_minus(const P4SparseTree::Node & node, int k)
{
    const int s = static_cast<int>(node.feet.size());
    return node.thick ? k + 1 : s - 1 + k;
}

} // namespace

P4SparseRainbowResult rainbow_p4sparse(const P4SparseTree & t, int k)
{
    require_valid_k(k);
    const std::size_t count = t.nodes.size();
    std::vector<int> plus(count), minus(count, infinite_cost);
    for (std::size_t i = 0; i < count; ++i) {
        const auto & node = t.nodes[i];
        plus[i] = std::max(node.size, k);
        const int a = node.left, b = node.right;
        switch (node.kind) {
        case P4SparseTree::Kind::leaf:
            break;
        case P4SparseTree::Kind::union_:
            minus[i] = std::min({saturating_add(minus[a], t.nodes[b].size), saturating_add(minus[b], t.nodes[a].size),
                saturating_add(minus[a], minus[b])});
            break;
        case P4SparseTree::Kind::join:
            minus[i] = std::min({plus[a], plus[b], minus[a], minus[b], 2 * k});
            break;
        case P4SparseTree::Kind::spider:
            minus[i] = spider_minus(node, k);
            break;
        }
    }

    P4SparseRainbowResult out;
    const int n = t.vertex_count();
    out.witness = RainbowFunction(k, n);
    if (n == 0)
        return out;
    auto below = vertices_below(t);
    auto & f = out.witness;

    enum class Fill { plus, minus, ones };
    std::vector<std::pair<int, Fill>> work;
    if (minus[t.root] < n) {
        out.value = minus[t.root];
        work.push_back({t.root, Fill::minus});
    } else {
        out.value = n;
        work.push_back({t.root, Fill::ones});
    }
    while (! work.empty()) {
        auto [node, mode] = work.back();
        work.pop_back();
        const auto & nd = t.nodes[node];
        const auto & vs = below[node];
        if (mode == Fill::ones) {
            for (Vertex v : vs)
                f.labels[v] = 1;
            continue;
        }
        if (mode == Fill::plus) {
            for (std::size_t i = 0; i < vs.size(); ++i)
                f.labels[vs[i]] = ColorSet{1} << (i % k);
            for (int c = static_cast<int>(vs.size()); c < k; ++c)
                f.labels[vs[0]] |= ColorSet{1} << c;
            continue;
        }
        const int target = minus[node];
        const int a = nd.left, b = nd.right;
        switch (nd.kind) {
        case P4SparseTree::Kind::leaf:
            break;
        case P4SparseTree::Kind::union_:
            if (saturating_add(minus[a], t.nodes[b].size) == target) {
                work.push_back({a, Fill::minus});
                work.push_back({b, Fill::ones});
            } else if (saturating_add(minus[b], t.nodes[a].size) == target) {
                work.push_back({a, Fill::ones});
                work.push_back({b, Fill::minus});
            } else {
                work.push_back({a, Fill::minus});
                work.push_back({b, Fill::minus});
            }
            break;
        case P4SparseTree::Kind::join:
            if (plus[a] == target)
                work.push_back({a, Fill::plus});
            else if (plus[b] == target)
                work.push_back({b, Fill::plus});
            else if (minus[a] == target)
                work.push_back({a, Fill::minus});
            else if (minus[b] == target)
                work.push_back({b, Fill::minus});
            else {
                f.labels[below[a].front()] = full_colors(k);
                f.labels[below[b].front()] = full_colors(k);
            }
            break;
        case P4SparseTree::Kind::spider:
            // Body vertex k_0 carries [k]; it sees everything except (thick) its own foot
            // or (thin) the other feet, which take a single colour each.
            f.labels[nd.body[0]] = full_colors(k);
            if (nd.thick)
                f.labels[nd.feet[0]] = 1;
            else
                for (std::size_t i = 1; i < nd.feet.size(); ++i)
                    f.labels[nd.feet[i]] = 1;
            break;
        }
    }
    return out;
}

} // namespace rdom
