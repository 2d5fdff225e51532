#pragma once

#include <cstdint>

#include "cdag/cluster_dag.hpp"

namespace cdag {

/// Deterministic splitmix64 stream. Used instead of <random> engines so that
/// seeded runs are byte-identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform-ish value in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);
    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den);

private:
    std::uint64_t state_;
};

struct InstanceLimits {
    int max_clusters = 4;
    int max_size = 3;
    int max_edges = 6;  // inter-cluster edges of either kind
    /// Instances whose raw combination count exceeds this are re-drawn so the
    /// enumeration oracle stays tractable.
    std::uint64_t max_combinations = 200000;
};

/// Random admissible cluster graph within the limits. Requires
/// limits.max_clusters >= 2 so that queries with disjoint nonempty x and y
/// exist.
ClusterDag random_admissible_cdag(Rng& rng, const InstanceLimits& limits);

/// Random query over c's clusters: singleton-or-larger disjoint x and y, a
/// random conditioning set, and (when requested) random overline/underline
/// sets that may overlap x, y and z.
DsepQuery random_query(Rng& rng, const ClusterDag& c, bool with_mutilation);

}  // namespace cdag
