#include "homcx/fixtures.hpp"

#include <sstream>

#include "homcx/error.hpp"

namespace homcx {

namespace {

using Facets = std::vector<std::vector<std::string>>;

Facets facets_for(const std::string& id) {
    if (id == "point") return {{"1"}};
    if (id == "delta1") return {{"1", "2"}};
    if (id == "path2") return {{"1", "2"}, {"2", "3"}};
    if (id == "bd_delta2") return {{"1", "2"}, {"1", "3"}, {"2", "3"}};
    if (id == "delta2") return {{"1", "2", "3"}};
    if (id == "bd_delta3") return {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}};
    // two hollow triangles sharing vertex 1
    if (id == "wedge2") return {{"1", "2"}, {"1", "3"}, {"2", "3"}, {"1", "4"}, {"1", "5"}, {"4", "5"}};
    if (id == "rp2")
        return {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "2", "6"},
                {"2", "3", "5"}, {"2", "4", "5"}, {"2", "4", "6"}, {"3", "4", "6"}, {"3", "5", "6"}};
    throw DomainError("unknown fixture \"" + id + "\"");
}

}  // namespace

const std::vector<std::string>& core_fixture_ids() {
    static const std::vector<std::string> ids = {"point", "delta1", "path2", "bd_delta2",
                                                 "delta2", "bd_delta3", "wedge2", "rp2"};
    return ids;
}

Fixture fixture(const std::string& id) { return Fixture{id, from_facets(facets_for(id))}; }

std::vector<Fixture> fixture_set(const std::string& spec) {
    std::vector<Fixture> out;
    if (spec == "core") {
        for (const auto& id : core_fixture_ids()) out.push_back(fixture(id));
        return out;
    }
    std::stringstream in(spec);
    std::string id;
    while (std::getline(in, id, ','))
        if (!id.empty()) out.push_back(fixture(id));
    if (out.empty()) throw DomainError("empty fixture list");
    return out;
}

}  // namespace homcx
