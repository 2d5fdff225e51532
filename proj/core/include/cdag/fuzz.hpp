#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdag/criterion.hpp"
#include "cdag/generator.hpp"

namespace cdag {

struct FuzzConfig {
    std::uint64_t cases = 100;
    std::uint64_t seed = 0;
    InstanceLimits limits;
    std::uint64_t oracle_bound = 200000;
    SearchOptions search;
    bool minimize = true;
};

struct FuzzFailure {
    std::uint64_t case_index = 0;
    std::string rendered_cdag;  // minimized when minimization is on
    DsepQuery query;
    std::string detail;
};

/// Outcome of a differential run. `text` is a deterministic report: two runs
/// with the same configuration produce byte-identical text.
struct FuzzReport {
    std::uint64_t cases = 0;
    std::uint64_t connected = 0;
    std::uint64_t separated = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t witness_failures = 0;
    std::uint64_t roundtrip_failures = 0;
    std::vector<FuzzFailure> failures;
    std::string text;

    bool ok() const {
        return disagreements == 0 && witness_failures == 0 && roundtrip_failures == 0;
    }
};

/// Generates random admissible cluster graphs and random mutilated queries,
/// asserts that the structural criterion and the enumeration oracle agree,
/// validates every returned witness against its three invariants, and checks
/// the text/JSON round-trips of every generated instance. On disagreement the
/// failing instance is minimized by greedy edge and cluster deletion.
FuzzReport fuzz_equivalence(const FuzzConfig& config);

}  // namespace cdag
