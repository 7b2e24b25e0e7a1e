#pragma once

#include <string>
#include <vector>

#include "homcx/simplicial.hpp"

namespace homcx {

struct Fixture {
    std::string id;
    SimplicialComplex complex;
};

/// point, delta1, path2, bd_delta2, delta2, bd_delta3, wedge2, rp2.
const std::vector<std::string>& core_fixture_ids();

/// Throws DomainError for an unknown id.
Fixture fixture(const std::string& id);

/// Resolves "core" or a comma-separated list of ids.
std::vector<Fixture> fixture_set(const std::string& spec);

}  // namespace homcx
