#pragma once

#include "asph/wall.hpp"

#include <functional>
#include <string>
#include <vector>

namespace asph::verification {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string expected;
    std::string computed;
};

/// Replaceable evaluation paths, so that broken implementations can be
/// injected and shown to be caught.
struct Hooks {
    std::function<Rational(const sl2z::MatrixZ&)> meyer;
    /// The explicit triple for B^k built from its kernel matrices.
    std::function<wall::WallTriple(long k)> twist_triple;
};

Hooks default_hooks();

/// Criteria 1-11 in order.
std::vector<CriterionResult> verify_paper(const Hooks& hooks = default_hooks());

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace asph::verification
