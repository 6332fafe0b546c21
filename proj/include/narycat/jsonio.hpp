#pragma once

#include <json.hpp>

#include "narycat/fpaths.hpp"
#include "narycat/monomial.hpp"
#include "narycat/paths.hpp"
#include "narycat/permutations.hpp"
#include "narycat/trees.hpp"

// JSON interchange. Shapes:
//   Monomial            {"d":3,"factors":[0,{"factors":[...]},...]}   (0 = leaf)
//   LatticePath         {"steps":"UUDD"}
//   LabeledSchroderPath {"steps":"UUDDH","labels":[[1],[0,2]]}
//   LabeledDyckPath     {"steps":"UUDD","labels":[[1,0]]}
//   OrderedTree         {"outdegrees":[2,0,0]}
//   LabeledTree         {"outdegrees":[2,2,0,0,0],"labels":[[1,0]]}
//   Perm                {"values":[4,2,1,3]}
//   FPath               {"steps":[{"run":0},{"run":4,"label":[1,2]}]}

namespace narycat {

nlohmann::json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const nlohmann::json& j);

nlohmann::json path_to_json(const LatticePath& p);
LatticePath path_from_json(const nlohmann::json& j);

nlohmann::json labeled_schroder_to_json(const LabeledSchroderPath& p);
LabeledSchroderPath labeled_schroder_from_json(const nlohmann::json& j);

nlohmann::json labeled_dyck_to_json(const LabeledDyckPath& p);
LabeledDyckPath labeled_dyck_from_json(const nlohmann::json& j);

nlohmann::json tree_to_json(const OrderedTree& t);
OrderedTree tree_from_json(const nlohmann::json& j);

nlohmann::json labeled_tree_to_json(const LabeledTree& t);
LabeledTree labeled_tree_from_json(const nlohmann::json& j);

nlohmann::json perm_to_json(const Perm& w);
Perm perm_from_json(const nlohmann::json& j);

nlohmann::json fpath_to_json(const FPath& f);
FPath fpath_from_json(const nlohmann::json& j);

} // namespace narycat
