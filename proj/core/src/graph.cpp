#include <uivd/error.hpp>
#include <uivd/graph.hpp>

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <ostream>
#include <sstream>

namespace uivd {

ParseError::ParseError(std::size_t line, const std::string& what) :
    std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
    line_(line)
{
}

std::ostream& operator<<(std::ostream& os, VertexId v)
{
    return os << index(v);
}

Graph::Graph(std::size_t n) :
    adj_(n),
    rows_(n, VertexBits(n)),
    live_(n),
    live_count_(n)
{
    live_.set();
}

VertexList Graph::vertices() const
{
    return to_list(live_);
}

void Graph::require_live(VertexId v, const char* what) const
{
    if (! contains(v))
        throw DomainError(std::string(what) + ": vertex " + std::to_string(index(v)) + " is not live");
}

const VertexList& Graph::neighbors(VertexId v) const
{
    require_live(v, "neighbors");
    return adj_[index(v)];
}

const VertexBits& Graph::neighbor_bits(VertexId v) const
{
    require_live(v, "neighbor_bits");
    return rows_[index(v)];
}

bool Graph::add_edge(VertexId u, VertexId v)
{
    require_live(u, "add_edge");
    require_live(v, "add_edge");
    if (u == v)
        throw DomainError("add_edge: self-loop on vertex " + std::to_string(index(u)));
    if (rows_[index(u)].test(index(v)))
        return false;
    rows_[index(u)].set(index(v));
    rows_[index(v)].set(index(u));
    auto& au = adj_[index(u)];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[index(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
    return true;
}

void Graph::remove_vertex(VertexId v)
{
    require_live(v, "remove_vertex");
    for (VertexId w : adj_[index(v)]) {
        auto& aw = adj_[index(w)];
        aw.erase(std::lower_bound(aw.begin(), aw.end(), v));
        rows_[index(w)].reset(index(v));
    }
    edge_count_ -= adj_[index(v)].size();
    adj_[index(v)].clear();
    rows_[index(v)].reset();
    live_.reset(index(v));
    --live_count_;
}

void Graph::check_invariants() const
{
    std::size_t degree_sum = 0;
    if (live_.count() != live_count_)
        throw InternalError("graph: live counter out of sync");
    for (std::size_t i = 0; i < capacity(); ++i) {
        const auto& list = adj_[i];
        if (! live_.test(i)) {
            if (! list.empty() || rows_[i].any())
                throw InternalError("graph: dead vertex " + std::to_string(i) + " has neighbors");
            continue;
        }
        if (! std::is_sorted(list.begin(), list.end()) || std::adjacent_find(list.begin(), list.end()) != list.end())
            throw InternalError("graph: neighbor list of " + std::to_string(i) + " not strictly sorted");
        if (list.size() != rows_[i].count())
            throw InternalError("graph: bit row of " + std::to_string(i) + " disagrees with list");
        for (VertexId w : list) {
            if (index(w) == i)
                throw InternalError("graph: self-loop at " + std::to_string(i));
            if (! contains(w))
                throw InternalError("graph: " + std::to_string(i) + " references dead vertex");
            if (! rows_[i].test(index(w)) || ! rows_[index(w)].test(i))
                throw InternalError("graph: asymmetric edge at " + std::to_string(i));
        }
        degree_sum += list.size();
    }
    if (degree_sum != 2 * edge_count_)
        throw InternalError("graph: edge counter out of sync");
}

VertexBits Graph::make_bits(std::span<const VertexId> vs) const
{
    VertexBits bits(capacity());
    for (VertexId v : vs)
        bits.set(index(v));
    return bits;
}

bool operator==(const Graph& a, const Graph& b)
{
    return a.live_ == b.live_ && a.adj_ == b.adj_;
}

Instance::Instance(Graph g, int k) :
    graph(std::move(g)),
    budget(k)
{
    if (k < 0)
        throw DomainError("instance budget must be non-negative");
}

namespace
{
    bool parse_two(std::string_view line, std::size_t& a, std::size_t& b)
    {
        auto skip = [&](std::size_t pos) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                ++pos;
            return pos;
        };
        const char* end = line.data() + line.size();
        std::size_t pos = skip(0);
        auto r1 = std::from_chars(line.data() + pos, end, a);
        if (r1.ec != std::errc() || r1.ptr == line.data() + pos)
            return false;
        pos = static_cast<std::size_t>(r1.ptr - line.data());
        std::size_t after = skip(pos);
        if (after == pos)
            return false;
        auto r2 = std::from_chars(line.data() + after, end, b);
        if (r2.ec != std::errc() || r2.ptr == line.data() + after)
            return false;
        pos = skip(static_cast<std::size_t>(r2.ptr - line.data()));
        return pos == line.size();
    }
}

Graph load_graph(std::string_view text)
{
    std::optional<Graph> g;
    std::size_t declared_edges = 0, seen_edges = 0, line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos)
            stop = text.size();
        std::string_view line = text.substr(start, stop - start);
        ++line_no;
        start = stop + 1;

        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#')
            continue;

        std::size_t a = 0, b = 0;
        if (! parse_two(line, a, b))
            throw ParseError(line_no, "expected two non-negative integers");
        if (! g) {
            if (a > (std::size_t{1} << 24))
                throw ParseError(line_no, "vertex count too large");
            g.emplace(a);
            declared_edges = b;
            continue;
        }
        if (a == b)
            throw ParseError(line_no, "self-loop on vertex " + std::to_string(a));
        if (a >= g->capacity() || b >= g->capacity())
            throw ParseError(line_no, "vertex index out of range");
        g->add_edge(vertex(a), vertex(b));
        ++seen_edges;
    }
    if (! g)
        throw ParseError(0, "missing header line");
    if (seen_edges != declared_edges)
        throw ParseError(line_no, "header declares " + std::to_string(declared_edges) + " edges, found " + std::to_string(seen_edges));
    return std::move(*g);
}

Graph load_graph_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError(0, "cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_graph(buffer.str());
}

SerializedGraph serialize_graph(const Graph& g)
{
    SerializedGraph out;
    out.original_ids = g.vertices();
    std::vector<std::size_t> compact(g.capacity(), 0);
    for (std::size_t i = 0; i < out.original_ids.size(); ++i)
        compact[index(out.original_ids[i])] = i;

    std::ostringstream os;
    os << out.original_ids.size() << ' ' << g.edge_count() << '\n';
    // ids are compacted monotonically, so iterating in id order is lexicographic
    for (VertexId u : out.original_ids)
        for (VertexId v : g.neighbors(u))
            if (u < v)
                os << compact[index(u)] << ' ' << compact[index(v)] << '\n';
    out.text = os.str();
    return out;
}

std::string serialize_compaction_map(const VertexList& original_ids)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < original_ids.size(); ++i)
        os << i << ' ' << index(original_ids[i]) << '\n';
    return os.str();
}

Graph induced_subgraph(const Graph& g, const VertexBits& keep)
{
    Graph h = g;
    for (VertexId v : g.vertices())
        if (index(v) >= keep.size() || ! keep.test(index(v)))
            h.remove_vertex(v);
    return h;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep)
{
    for (VertexId v : keep)
        if (! g.contains(v))
            throw DomainError("induced_subgraph: vertex " + std::to_string(index(v)) + " is not live");
    return induced_subgraph(g, g.make_bits(keep));
}

Graph delete_vertices(const Graph& g, std::span<const VertexId> drop)
{
    for (VertexId v : drop)
        if (! g.contains(v))
            throw DomainError("delete_vertices: vertex " + std::to_string(index(v)) + " is not live");
    Graph h = g;
    for (VertexId v : drop)
        if (h.contains(v))
            h.remove_vertex(v);
    return h;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, VertexId source)
{
    if (! g.contains(source))
        throw DomainError("bfs: vertex " + std::to_string(index(source)) + " is not live");
    std::vector<std::optional<std::size_t>> dist(g.capacity());
    std::deque<VertexId> queue{source};
    dist[index(source)] = 0;
    while (! queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u))
            if (! dist[index(w)]) {
                dist[index(w)] = *dist[index(u)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::optional<std::size_t> distance(const Graph& g, VertexId u, VertexId v)
{
    if (! g.contains(v))
        throw DomainError("distance: vertex " + std::to_string(index(v)) + " is not live");
    return bfs_distances(g, u)[index(v)];
}

std::vector<VertexList> connected_components(const Graph& g)
{
    std::vector<VertexList> out;
    VertexBits seen = g.make_bits();
    for (VertexId s : g.vertices()) {
        if (seen.test(index(s)))
            continue;
        VertexList comp{s};
        seen.set(index(s));
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (VertexId w : g.neighbors(comp[head]))
                if (! seen.test(index(w))) {
                    seen.set(index(w));
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

VertexBits ball(const Graph& g, std::span<const VertexId> seeds, std::size_t radius)
{
    VertexBits in = g.make_bits();
    VertexList frontier;
    for (VertexId s : seeds)
        if (g.contains(s) && ! in.test(index(s))) {
            in.set(index(s));
            frontier.push_back(s);
        }
    for (std::size_t r = 0; r < radius && ! frontier.empty(); ++r) {
        VertexList next;
        for (VertexId u : frontier)
            for (VertexId w : g.neighbors(u))
                if (! in.test(index(w))) {
                    in.set(index(w));
                    next.push_back(w);
                }
        frontier = std::move(next);
    }
    return in;
}

VertexList to_list(const VertexBits& bits)
{
    VertexList out;
    out.reserve(bits.count());
    for (auto i = bits.find_first(); i != VertexBits::npos; i = bits.find_next(i))
        out.push_back(vertex(i));
    return out;
}

} // namespace uivd
