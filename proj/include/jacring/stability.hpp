#pragma once

#include "jacring/eps_rational.hpp"
#include "jacring/graph.hpp"

#include <optional>
#include <vector>

namespace jacring {

/*
 * The one-parameter family phi(z) of nondegenerate semismall stability
 * conditions (degree 0, one marking).  On the two-edge vine Gamma_{g1} the
 * value at the leg vertex v is g1/(g-1) * (z + eps); one-edge vines carry
 * the fixed semismall value eps * g1/g at v.  eps_scale and
 * one_edge_override exist so tests can build degenerate families.
 */
struct StabilityFamily {
    int g = 2;
    long long z = 0;
    Rational eps_scale = 1;
    std::optional<EpsRational> one_edge_override;

    StabilityFamily() = default;
    StabilityFamily(int g_, long long z_) : g(g_), z(z_) {}

    EpsRational phi_two_edge_v(int g1) const;   // value at v on Gamma_{g1}
    EpsRational phi_one_edge_v(int g1) const;   // value at v on the one-edge vine
};

// phi(z) value at a vertex of a one- or two-edge vine of ambient genus fam.g.
EpsRational phi_value(const StabilityFamily& fam, const PrestableGraph& graph, int vertex_id);

// The wall-crossing invariant delta_{g1}(z): the smaller of the two stable
// degrees at v on Gamma_{g1}.  Computed as floor(g1 (z+eps) / (g-1)) except
// at the single paper-pinned point (z = 2, g1 = g-1) where it is 1.
Integer delta_g1(const StabilityFamily& fam, int g1);

// Oracle used by tests: enumerate integers in the open interval
// (phi(v)-1, phi(v)+1) and return the smaller of the two.
Integer delta_g1_interval_oracle(const StabilityFamily& fam, int g1);

// Stable multidegrees of the given total on a vine or subdivided vine,
// ordered by the value at v.  total must be 0.
std::vector<Multidegree> stable_multidegrees(const StabilityFamily& fam,
                                             const PrestableGraph& graph, int total);

bool is_nondegenerate(const StabilityFamily& fam);
bool is_semismall(const StabilityFamily& fam);

}  // namespace jacring
