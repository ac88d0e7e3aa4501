#pragma once

#include <chrono>
#include <optional>

namespace hefcheck {

inline constexpr int kDefaultAtomCap = 64;
inline constexpr int kDefaultSubsetCap = 20;
inline constexpr int kDefaultModelCap = 20;
inline constexpr int kDefaultSatVarCap = 24;
// Subset enumeration uses 32-bit position masks.
inline constexpr int kHardSubsetCap = 30;

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

// Resource caps for the analyses. Exceeding a cap is always reported
// (resource_limit verdict or CapExceededError), never silently approximated.
struct Limits {
    int atom_cap = kDefaultAtomCap;      // refuse programs with more atoms
    int subset_cap = kDefaultSubsetCap;  // max set size for subset enumeration
    int threads = 1;                     // workers for candidate checks
    std::optional<std::chrono::milliseconds> time_budget;

    // Search-space reductions; disabling them never changes a verdict.
    bool prune_connectivity = true;     // single-component restriction
    bool prune_rule_conditions = true;  // per-atom head/body rule requirements

    Deadline deadline() const {
        if (!time_budget) return std::nullopt;
        return std::chrono::steady_clock::now() + *time_budget;
    }
};

}  // namespace hefcheck
