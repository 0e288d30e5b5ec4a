#pragma once

#include "correspondence.hpp"
#include "gelfand_raikov.hpp"
#include "serialize.hpp"

#include <cstdint>

namespace tcsd {

struct SuiteItem {
    std::string name;
    std::string system;
    bool pass = false;
    double value = 0.0;  // the residual or margin the check is about
    std::string detail;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::vector<SuiteItem> items;

    int failures() const;
    Json to_json() const;
};

/// Deterministic property battery over the given systems; every item draws its
/// randomness from a stream derived from (seed, item, system) only.
SuiteReport run_suite(const std::vector<CorpusEntry>& systems, std::uint64_t seed, double tol);

}  // namespace tcsd
