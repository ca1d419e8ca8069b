#pragma once

#include "jacring/errors.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jacring {

// Decorated dual graph of a prestable curve: vertices carry genus, half-edges
// pair into edges, legs are labelled markings.  Immutable after construction.
struct PrestableGraph {
    struct Vertex {
        int id;
        int genus;
    };

    int ambient_genus = 0;
    std::vector<Vertex> vertices;
    std::map<int, int> half_edge_vertex;        // half-edge id -> vertex id
    std::vector<std::pair<int, int>> edges;     // unordered pairs of half-edge ids
    std::map<std::string, int> legs;            // marking label -> half-edge id

    int genus_of(int vertex_id) const;
    int first_betti() const;
    int recomputed_genus() const;
    bool connected() const;

    // degree = number of incident half-edges (edges + legs)
    int valence(int vertex_id) const;
    bool is_unstable_vertex(int vertex_id) const;  // genus 0, valence 2, no legs
    int stable_vertex_count() const;

    // quasistable: unstable vertices are pairwise non-adjacent
    bool quasistable_ok() const;

    void validate() const;  // throws InvalidInput on broken invariants

    std::string to_json() const;
    std::string canonical_key() const;  // isomorphism invariant for small graphs
};

// Integer degree assignment on the vertices of a graph.
struct Multidegree {
    std::map<int, int> values;  // vertex id -> degree
    int total = 0;

    void validate(const PrestableGraph& g) const;
};

// Two-vertex shapes of Section 4: w of genus g1, v of genus g2 with the leg.
struct VineGraph {
    int g1 = 0;
    int g2 = 0;
    int edge_count = 0;
};

// Classifies a graph as a one- or two-edge vine (or a subdivided two-edge
// vine via classify_subdivided_vine); throws Unsupported otherwise.
VineGraph classify_vine(const PrestableGraph& g);
bool is_subdivided_vine(const PrestableGraph& g, VineGraph* out = nullptr);

PrestableGraph make_vine(int ambient_genus, int g1, int edges);
PrestableGraph subdivide(const PrestableGraph& g, int edge_index);
PrestableGraph contract(const PrestableGraph& g, int edge_index);
long automorphism_count(const PrestableGraph& g);

bool isomorphic(const PrestableGraph& a, const PrestableGraph& b);

// ids of the two stable vertices of a vine: first = leg vertex v, second = w.
std::pair<int, int> vine_vertex_ids(const PrestableGraph& g);

}  // namespace jacring
