#include "jacring/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace jacring {

int PrestableGraph::genus_of(int vertex_id) const {
    for (const auto& v : vertices)
        if (v.id == vertex_id)
            return v.genus;
    throw InvalidInput("no vertex with id " + std::to_string(vertex_id));
}

int PrestableGraph::first_betti() const {
    return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
}

int PrestableGraph::recomputed_genus() const {
    int s = 0;
    for (const auto& v : vertices)
        s += v.genus;
    return s + first_betti();
}

bool PrestableGraph::connected() const {
    if (vertices.empty())
        return false;
    std::set<int> seen{vertices.front().id};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [h1, h2] : edges) {
            int a = half_edge_vertex.at(h1), b = half_edge_vertex.at(h2);
            if (seen.count(a) && !seen.count(b)) {
                seen.insert(b);
                grew = true;
            } else if (seen.count(b) && !seen.count(a)) {
                seen.insert(a);
                grew = true;
            }
        }
    }
    return seen.size() == vertices.size();
}

int PrestableGraph::valence(int vertex_id) const {
    int n = 0;
    for (const auto& [h, v] : half_edge_vertex)
        if (v == vertex_id)
            ++n;
    return n;
}

bool PrestableGraph::is_unstable_vertex(int vertex_id) const {
    if (genus_of(vertex_id) != 0 || valence(vertex_id) != 2)
        return false;
    for (const auto& [label, h] : legs)
        if (half_edge_vertex.at(h) == vertex_id)
            return false;
    return true;
}

int PrestableGraph::stable_vertex_count() const {
    int n = 0;
    for (const auto& v : vertices)
        if (!is_unstable_vertex(v.id))
            ++n;
    return n;
}

bool PrestableGraph::quasistable_ok() const {
    for (const auto& [h1, h2] : edges) {
        int a = half_edge_vertex.at(h1), b = half_edge_vertex.at(h2);
        if (a != b && is_unstable_vertex(a) && is_unstable_vertex(b))
            return false;
    }
    return true;
}

void PrestableGraph::validate() const {
    if (!connected())
        throw InvalidInput("graph is not connected");
    if (recomputed_genus() != ambient_genus)
        throw InvalidInput("genus mismatch: declared " + std::to_string(ambient_genus) +
                           ", recomputed " + std::to_string(recomputed_genus()));
    // every half-edge belongs to exactly one edge or one leg
    std::map<int, int> uses;
    for (const auto& [h1, h2] : edges) {
        ++uses[h1];
        ++uses[h2];
    }
    for (const auto& [label, h] : legs)
        ++uses[h];
    for (const auto& [h, v] : half_edge_vertex)
        if (uses[h] != 1)
            throw InvalidInput("half-edge " + std::to_string(h) + " used " +
                               std::to_string(uses[h]) + " times");
    for (const auto& [h, n] : uses)
        if (!half_edge_vertex.count(h))
            throw InvalidInput("dangling half-edge id " + std::to_string(h));
}

std::string PrestableGraph::to_json() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    auto vs = vertices;
    std::sort(vs.begin(), vs.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (const auto& v : vs)
        j["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
    j["edges"] = nlohmann::json::array();
    auto es = edges;
    for (auto& e : es)
        if (e.first > e.second)
            std::swap(e.first, e.second);
    std::sort(es.begin(), es.end());
    for (const auto& [h1, h2] : es)
        j["edges"].push_back({h1, h2});
    j["legs"] = nlohmann::json::object();
    for (const auto& [label, h] : legs)
        j["legs"][label] = h;
    return j.dump();
}

void Multidegree::validate(const PrestableGraph& g) const {
    int s = 0;
    for (const auto& v : g.vertices) {
        auto it = values.find(v.id);
        if (it == values.end())
            throw InvalidInput("multidegree missing vertex " + std::to_string(v.id));
        s += it->second;
    }
    if (s != total)
        throw InvalidInput("multidegree total mismatch");
    for (const auto& v : g.vertices)
        if (g.is_unstable_vertex(v.id) && values.at(v.id) != 1)
            throw InvalidInput("unstable vertex must carry degree 1");
}

VineGraph classify_vine(const PrestableGraph& g) {
    if (g.vertices.size() != 2 || !g.legs.count("1"))
        throw Unsupported("expected a two-vertex graph with leg 1");
    int e = static_cast<int>(g.edges.size());
    if (e != 1 && e != 2)
        throw Unsupported("expected one or two edges");
    for (const auto& [h1, h2] : g.edges)
        if (g.half_edge_vertex.at(h1) == g.half_edge_vertex.at(h2))
            throw Unsupported("self-loops are not vine edges");
    auto [v, w] = vine_vertex_ids(g);
    VineGraph r;
    r.g1 = g.genus_of(w);
    r.g2 = g.genus_of(v);
    r.edge_count = e;
    return r;
}

bool is_subdivided_vine(const PrestableGraph& g, VineGraph* out) {
    if (g.vertices.size() != 3 || g.edges.size() != 3 || !g.legs.count("1"))
        return false;
    int unstable = -1;
    for (const auto& v : g.vertices)
        if (g.is_unstable_vertex(v.id))
            unstable = v.id;
    if (unstable < 0)
        return false;
    // contracting one of the exceptional edges must give a two-edge vine
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const auto& [h1, h2] = g.edges[i];
        if (g.half_edge_vertex.at(h1) == unstable || g.half_edge_vertex.at(h2) == unstable) {
            PrestableGraph c = contract(g, static_cast<int>(i));
            try {
                VineGraph vg = classify_vine(c);
                if (vg.edge_count == 2) {
                    if (out)
                        *out = vg;
                    return true;
                }
            } catch (const Unsupported&) {
            }
            return false;
        }
    }
    return false;
}

std::pair<int, int> vine_vertex_ids(const PrestableGraph& g) {
    int leg_half = g.legs.at("1");
    int v = g.half_edge_vertex.at(leg_half);
    for (const auto& vert : g.vertices)
        if (vert.id != v)
            return {v, vert.id};
    throw Unsupported("one-vertex graph has no vine split");
}

PrestableGraph make_vine(int ambient_genus, int g1, int edges) {
    if (edges != 1 && edges != 2)
        throw OutOfRange("edge count must be 1 or 2");
    if (g1 < 1 || g1 > ambient_genus - 1)
        throw OutOfRange("need 1 <= g1 <= g-1, got g1=" + std::to_string(g1) +
                         " at g=" + std::to_string(ambient_genus));
    int g2 = (edges == 2) ? ambient_genus - 1 - g1 : ambient_genus - g1;
    if (g2 < 0 || (edges == 1 && g2 < 1))
        throw OutOfRange("vine genera out of range");

    PrestableGraph g;
    g.ambient_genus = ambient_genus;
    g.vertices = {{0, g2}, {1, g1}};  // vertex 0 = v (carries the leg), vertex 1 = w
    int h = 0;
    for (int e = 0; e < edges; ++e) {
        g.half_edge_vertex[h] = 0;
        g.half_edge_vertex[h + 1] = 1;
        g.edges.emplace_back(h, h + 1);
        h += 2;
    }
    g.half_edge_vertex[h] = 0;
    g.legs["1"] = h;
    g.validate();
    return g;
}

PrestableGraph subdivide(const PrestableGraph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= static_cast<int>(g.edges.size()))
        throw UnknownEdge("edge index " + std::to_string(edge_index));
    PrestableGraph r = g;
    auto [h1, h2] = r.edges[edge_index];
    r.edges.erase(r.edges.begin() + edge_index);
    int new_vertex = 0;
    for (const auto& v : r.vertices)
        new_vertex = std::max(new_vertex, v.id + 1);
    int new_half = 0;
    for (const auto& [h, v] : r.half_edge_vertex)
        new_half = std::max(new_half, h + 1);
    r.vertices.push_back({new_vertex, 0});
    r.half_edge_vertex[new_half] = new_vertex;
    r.half_edge_vertex[new_half + 1] = new_vertex;
    r.edges.emplace_back(h1, new_half);
    r.edges.emplace_back(new_half + 1, h2);
    r.validate();
    return r;
}

PrestableGraph contract(const PrestableGraph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= static_cast<int>(g.edges.size()))
        throw UnknownEdge("edge index " + std::to_string(edge_index));
    PrestableGraph r = g;
    auto [h1, h2] = r.edges[edge_index];
    int a = r.half_edge_vertex.at(h1), b = r.half_edge_vertex.at(h2);
    r.edges.erase(r.edges.begin() + edge_index);
    r.half_edge_vertex.erase(h1);
    r.half_edge_vertex.erase(h2);
    if (a == b) {
        for (auto& v : r.vertices)
            if (v.id == a)
                v.genus += 1;
    } else {
        int keep = std::min(a, b), drop = std::max(a, b);
        int genus_sum = r.genus_of(a) + r.genus_of(b);
        r.vertices.erase(
            std::remove_if(r.vertices.begin(), r.vertices.end(),
                           [&](const PrestableGraph::Vertex& v) { return v.id == drop; }),
            r.vertices.end());
        for (auto& v : r.vertices)
            if (v.id == keep)
                v.genus = genus_sum;
        for (auto& [h, v] : r.half_edge_vertex)
            if (v == drop)
                v = keep;
    }
    r.validate();
    return r;
}

namespace {

// Half-edge permutations fixing legs, preserving the edge pairing and
// inducing a genus-preserving vertex bijection.  Small graphs only.
long count_automorphisms(const PrestableGraph& g) {
    std::vector<int> halves;
    for (const auto& [h, v] : g.half_edge_vertex)
        halves.push_back(h);
    std::set<std::pair<int, int>> edge_set;
    for (auto [h1, h2] : g.edges)
        edge_set.insert({std::min(h1, h2), std::max(h1, h2)});
    std::set<int> leg_halves;
    for (const auto& [label, h] : g.legs)
        leg_halves.insert(h);

    std::vector<int> perm(halves);
    std::sort(perm.begin(), perm.end());
    std::vector<int> base = perm;
    long count = 0;
    do {
        std::map<int, int> sigma;
        for (size_t i = 0; i < base.size(); ++i)
            sigma[base[i]] = perm[i];
        bool ok = true;
        for (int h : leg_halves)
            if (sigma[h] != h) {
                ok = false;
                break;
            }
        if (ok) {
            std::map<int, int> vmap;
            for (const auto& [h, v] : g.half_edge_vertex) {
                int v2 = g.half_edge_vertex.at(sigma[h]);
                auto it = vmap.find(v);
                if (it == vmap.end())
                    vmap[v] = v2;
                else if (it->second != v2) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                for (const auto& [v, v2] : vmap)
                    if (g.genus_of(v) != g.genus_of(v2)) {
                        ok = false;
                        break;
                    }
            if (ok)
                for (auto [h1, h2] : edge_set)
                    if (!edge_set.count({std::min(sigma[h1], sigma[h2]),
                                         std::max(sigma[h1], sigma[h2])})) {
                        ok = false;
                        break;
                    }
        }
        if (ok)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

long automorphism_count(const PrestableGraph& g) {
    if (g.stable_vertex_count() > 2)
        throw Unsupported("automorphism counting covers graphs with at most two stable vertices");
    if (g.half_edge_vertex.size() > 9)
        throw Unsupported("graph too large for enumeration");
    return count_automorphisms(g);
}

std::string PrestableGraph::canonical_key() const {
    // Minimal serialization over all genus-compatible relabelings; the graphs
    // in scope have <= 4 vertices so brute force is fine.
    std::vector<int> ids;
    for (const auto& v : vertices)
        ids.push_back(v.id);
    std::sort(ids.begin(), ids.end());
    std::string best;
    std::vector<int> perm = ids;
    do {
        std::map<int, int> relabel;  // old id -> new position
        for (size_t i = 0; i < perm.size(); ++i)
            relabel[perm[i]] = static_cast<int>(i);
        std::ostringstream os;
        std::vector<std::pair<int, int>> vs;
        for (const auto& v : vertices)
            vs.emplace_back(relabel[v.id], v.genus);
        std::sort(vs.begin(), vs.end());
        for (auto [i, gen] : vs)
            os << "v" << i << ":" << gen << ";";
        std::vector<std::pair<int, int>> es;
        for (auto [h1, h2] : edges) {
            int a = relabel[half_edge_vertex.at(h1)], b = relabel[half_edge_vertex.at(h2)];
            es.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(es.begin(), es.end());
        for (auto [a, b] : es)
            os << "e" << a << "-" << b << ";";
        for (const auto& [label, h] : legs)
            os << "l" << label << "@" << relabel[half_edge_vertex.at(h)] << ";";
        std::string key = os.str();
        if (best.empty() || key < best)
            best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool isomorphic(const PrestableGraph& a, const PrestableGraph& b) {
    return a.ambient_genus == b.ambient_genus && a.canonical_key() == b.canonical_key();
}

}  // namespace jacring
