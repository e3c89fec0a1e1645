#include "vcreg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "vcreg/errors.hpp"

namespace vcreg {

void Graph::add_edge(int u, int v) {
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error("vertex index out of range: " + std::to_string(std::max(u, v)) +
                    " >= n=" + std::to_string(n));
    adj[u].set(v);
    adj[v].set(u);
}

std::int64_t Graph::edge_count() const {
    std::int64_t d = 0;
    for (const auto& row : adj) d += row.count();
    return d / 2;
}

Graph Graph::complement() const {
    Graph c(n);
    for (int v = 0; v < n; ++v) {
        c.adj[v] = adj[v];
        c.adj[v].complement();
        c.adj[v].reset(v);
    }
    return c;
}

Graph Graph::induced(const VertexSet& verts) const {
    std::vector<int> ids = verts.members_int();
    Graph g(int(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (has_edge(ids[i], ids[j])) g.add_edge(int(i), int(j));
    return g;
}

void Graph::check_invariants() const {
    for (int v = 0; v < n; ++v) {
        if (adj[v].universe_size() != n) throw Error("adjacency universe mismatch");
        if (adj[v].test(v)) throw Error("irreflexivity violated at " + std::to_string(v));
    }
    for (int v = 0; v < n; ++v)
        adj[v].for_each([&](std::int64_t u) {
            if (!adj[u].test(v))
                throw Error("symmetry violated at (" + std::to_string(v) + "," +
                            std::to_string(u) + ")");
        });
}

namespace {

std::uint64_t tuple_key(const std::vector<int>& t) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int v : t) {
        h ^= std::uint64_t(v) + 1;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::int64_t Hypergraph::finalize() {
    std::int64_t m = edge_count();
    std::vector<std::int64_t> order(m);
    for (std::int64_t i = 0; i < m; ++i) order[i] = i;
    for (std::int64_t i = 0; i < m; ++i)
        std::sort(flat.begin() + i * k, flat.begin() + (i + 1) * k);
    auto cmp = [&](std::int64_t a, std::int64_t b) {
        return std::lexicographical_compare(edge(a), edge(a) + k, edge(b), edge(b) + k);
    };
    std::sort(order.begin(), order.end(), cmp);
    std::vector<int> out;
    out.reserve(flat.size());
    std::int64_t dups = 0;
    for (std::int64_t i = 0; i < m; ++i) {
        if (i > 0 && std::equal(edge(order[i]), edge(order[i]) + k, edge(order[i - 1]))) {
            ++dups;
            continue;
        }
        out.insert(out.end(), edge(order[i]), edge(order[i]) + k);
    }
    flat = std::move(out);
    return dups;
}

bool Hypergraph::has_edge(const std::vector<int>& sorted_tuple) const {
    std::int64_t lo = 0, hi = edge_count();
    while (lo < hi) {
        std::int64_t mid = (lo + hi) / 2;
        if (std::lexicographical_compare(edge(mid), edge(mid) + k, sorted_tuple.data(),
                                         sorted_tuple.data() + k))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < edge_count() &&
           std::equal(edge(lo), edge(lo) + k, sorted_tuple.data());
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
    Hypergraph h(2, g.n);
    for (int v = 0; v < g.n; ++v)
        g.adj[v].for_each([&](std::int64_t u) {
            if (u > v) h.add_edge_unchecked({v, int(u)});
        });
    h.finalize();
    return h;
}

Graph Hypergraph::to_graph() const {
    if (k != 2) throw Error("to_graph requires uniformity 2");
    Graph g(n);
    for (std::int64_t i = 0; i < edge_count(); ++i) g.add_edge(edge(i)[0], edge(i)[1]);
    return g;
}

VertexSet Hypergraph::tuple_neighborhood(const std::vector<int>& t) const {
    if (int(t.size()) != k - 1) throw Error("tuple must have k-1 vertices");
    std::vector<int> s(t);
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1]) throw Error("repeated vertex in tuple");
    for (int v : s)
        if (v < 0 || v >= n) throw Error("tuple vertex out of range");

    std::uint64_t key = tuple_key(s);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    VertexSet out(n);
    std::vector<int> probe(k);
    for (int u = 0; u < n; ++u) {
        bool in_t = false;
        for (int v : s) in_t |= (v == u);
        if (in_t) continue;
        std::merge(s.begin(), s.end(), &u, &u + 1, probe.begin());
        if (has_edge(probe)) out.set(u);
    }
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        memo_.emplace(key, out);
    }
    return out;
}

void Hypergraph::check_invariants() const {
    for (std::int64_t i = 0; i < edge_count(); ++i) {
        const int* e = edge(i);
        for (int j = 0; j + 1 < k; ++j) {
            if (e[j] >= e[j + 1]) throw Error("edge tuple not strictly sorted");
        }
        if (e[0] < 0 || e[k - 1] >= n) throw Error("edge vertex out of range");
        if (i > 0 && std::equal(e, e + k, edge(i - 1))) throw Error("duplicate edge");
    }
}

namespace {

struct ParsedLines {
    int n = -1;
    std::vector<std::pair<int, std::vector<int>>> rows;  // (line number, vertices)
};

ParsedLines parse_lines(const std::string& text) {
    ParsedLines out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (out.n < 0) {
            if (line.rfind("n=", 0) != 0)
                throw Error("line " + std::to_string(lineno) +
                            ": expected header n=<int> before edges");
            try {
                std::size_t pos = 0;
                out.n = std::stoi(line.substr(2), &pos);
                if (pos != line.size() - 2) throw std::invalid_argument("");
            } catch (...) {
                throw Error("line " + std::to_string(lineno) + ": bad header '" + line + "'");
            }
            if (out.n < 0) throw Error("negative vertex count");
            continue;
        }
        std::istringstream ls(line);
        std::vector<int> verts;
        long long v;
        while (ls >> v) verts.push_back(int(v));
        if (!ls.eof())
            throw Error("line " + std::to_string(lineno) + ": non-integer token");
        out.rows.emplace_back(lineno, std::move(verts));
    }
    if (out.n < 0) throw Error("missing header line n=<int>");
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    ParsedLines p = parse_lines(text);
    Graph g(p.n);
    for (auto& [lineno, verts] : p.rows) {
        if (verts.size() != 2)
            throw Error("line " + std::to_string(lineno) + ": expected two vertices");
        int u = verts[0], v = verts[1];
        if (u == v)
            throw Error("line " + std::to_string(lineno) + ": self-loop " +
                        std::to_string(u));
        if (u < 0 || v < 0 || u >= p.n || v >= p.n)
            throw Error("line " + std::to_string(lineno) + ": vertex index >= n");
        g.adj[u].set(v);
        g.adj[v].set(u);
    }
    return g;
}

Hypergraph parse_hypergraph(const std::string& text, int k) {
    if (k < 2) throw Error("uniformity must be >= 2");
    ParsedLines p = parse_lines(text);
    Hypergraph h(k, p.n);
    for (auto& [lineno, verts] : p.rows) {
        if (int(verts.size()) != k)
            throw Error("line " + std::to_string(lineno) + ": expected " +
                        std::to_string(k) + " vertices");
        std::vector<int> e(verts);
        std::sort(e.begin(), e.end());
        for (int j = 0; j + 1 < k; ++j)
            if (e[j] == e[j + 1])
                throw Error("line " + std::to_string(lineno) + ": repeated vertex " +
                            std::to_string(e[j]));
        if (e.front() < 0 || e.back() >= p.n)
            throw Error("line " + std::to_string(lineno) + ": vertex index >= n");
        h.add_edge_unchecked(e);
    }
    h.finalize();
    return h;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.n << "\n";
    for (int v = 0; v < g.n; ++v)
        g.adj[v].for_each([&](std::int64_t u) {
            if (u > v) out << v << " " << u << "\n";
        });
    return out.str();
}

std::string format_graph(const Hypergraph& h) {
    std::ostringstream out;
    out << "n=" << h.n << "\n";
    for (std::int64_t i = 0; i < h.edge_count(); ++i) {
        const int* e = h.edge(i);
        for (int j = 0; j < h.k; ++j) out << e[j] << (j + 1 == h.k ? '\n' : ' ');
    }
    return out.str();
}

namespace {
std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

Graph load_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

Hypergraph load_hypergraph_file(const std::string& path, int k) {
    return parse_hypergraph(read_file(path), k);
}

std::int64_t symmetric_difference_size(const VertexSet& a, const VertexSet& b) {
    if (a.universe_size() != b.universe_size())
        throw Error("symmetric difference over mismatched universes");
    return a.symmetric_difference_count(b);
}

namespace {

void check_parts(std::int64_t n, int k, const std::vector<VertexSet>& parts) {
    if (int(parts.size()) != k) throw Error("expected k parts");
    for (int i = 0; i < k; ++i) {
        if (parts[i].universe_size() != n) throw Error("part universe mismatch");
        if (parts[i].empty()) throw Error("empty part");
        for (int j = i + 1; j < k; ++j)
            if (parts[i].intersects(parts[j])) throw Error("overlapping parts");
    }
}

}  // namespace

std::int64_t cross_edge_count(const Graph& g, const VertexSet& a, const VertexSet& b) {
    std::int64_t c = 0;
    a.for_each([&](std::int64_t v) { c += g.adj[v].intersection_count(b); });
    return c;
}

std::int64_t cross_edge_count(const Hypergraph& h, const std::vector<VertexSet>& parts) {
    int k = h.k;
    std::int64_t c = 0;
    std::vector<int> hit(k);
    for (std::int64_t i = 0; i < h.edge_count(); ++i) {
        const int* e = h.edge(i);
        std::fill(hit.begin(), hit.end(), 0);
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
            int owner = -1;
            for (int t = 0; t < k; ++t)
                if (parts[t].test(e[j])) {
                    owner = t;
                    break;
                }
            if (owner < 0 || hit[owner]++ > 0) ok = false;
        }
        if (ok) ++c;  // k vertices, k parts, no repeats: exactly one per part
    }
    return c;
}

Rat density(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_parts(g.n, 2, {a, b});
    return Rat(Int(cross_edge_count(g, a, b)), Int(a.count()) * Int(b.count()));
}

Rat density(const Hypergraph& h, const std::vector<VertexSet>& parts) {
    check_parts(h.n, h.k, parts);
    Int denom = 1;
    for (const auto& p : parts) denom *= p.count();
    return Rat(Int(cross_edge_count(h, parts)), denom);
}

bool is_epsilon_homogeneous(const Hypergraph& h, const std::vector<VertexSet>& parts,
                            const Rat& eps) {
    Rat d = density(h, parts);
    return d < eps || d > 1 - eps;
}

bool is_epsilon_homogeneous(const Graph& g, const VertexSet& a, const VertexSet& b,
                            const Rat& eps) {
    Rat d = density(g, a, b);
    return d < eps || d > 1 - eps;
}

}  // namespace vcreg
