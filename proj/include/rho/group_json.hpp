#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "rho/group.hpp"

namespace rho {

// {"kind": "cyclic", "params": {"n": 4}}
// {"kind": "dihedral", "params": {"n": 3}}
// {"kind": "free-abelian", "params": {"rank": 1}}
// {"kind": "free", "params": {"rank": 2}}
// {"kind": "finite-table", "params": {"table": [[0,1],[1,0]]}}
inline std::unique_ptr<Group> make_group(const nlohmann::json& spec) {
    std::string kind = spec.at("kind").get<std::string>();
    const auto& p = spec.at("params");
    if (kind == "cyclic") return make_cyclic(p.at("n").get<int>());
    if (kind == "dihedral") return make_dihedral(p.at("n").get<int>());
    if (kind == "free-abelian") return make_free_abelian(p.at("rank").get<int>());
    if (kind == "free") return make_free(p.at("rank").get<int>());
    if (kind == "finite-table")
        return make_table_group(p.at("table").get<std::vector<std::vector<int>>>());
    throw std::invalid_argument("unknown group kind: " + kind);
}

}  // namespace rho
