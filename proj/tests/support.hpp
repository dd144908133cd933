#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "frecheb/oracle.hpp"

namespace testing {

inline constexpr frecheb::ImplicationKind kAllKinds[] = {
    frecheb::ImplicationKind::Godel, frecheb::ImplicationKind::Goguen,
    frecheb::ImplicationKind::Lukasiewicz};

inline frecheb::FuzzySystem example_godel_minimum() {
    return {{{0.6, 0.49}, {0.26, 0.9}}, {0.1, 0.4}, frecheb::ImplicationKind::Godel};
}

inline frecheb::FuzzySystem example_godel_infimum() {
    return {{{0.41, 0.07}, {0.29, 0.31}}, {0.88, 0.46}, frecheb::ImplicationKind::Godel};
}

inline frecheb::FuzzySystem example_consistent() {
    return {{{0.6, 0.49}, {0.26, 0.9}}, {0.58, 0.88}, frecheb::ImplicationKind::Godel};
}

inline frecheb::FuzzySystem example_with(frecheb::ImplicationKind kind) {
    return {{{0.6, 0.49}, {0.26, 0.9}}, {0.1, 0.4}, kind};
}

inline frecheb::UnitVector random_unit_vector(std::mt19937_64& rng, std::size_t size) {
    std::vector<double> v(size);
    for (double& x : v) x = frecheb::uniform_unit(rng);
    return frecheb::UnitVector(std::move(v));
}

}  // namespace testing
