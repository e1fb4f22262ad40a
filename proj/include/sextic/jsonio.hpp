#pragma once

#include <json.hpp>

#include "sextic/e8.hpp"
#include "sextic/groups.hpp"
#include "sextic/localsing.hpp"
#include "sextic/torus.hpp"

namespace sextic {

using nlohmann::json;

json to_json(const Int& v);        // number when it fits, string otherwise
json to_json(const Rat& v);        // "p/q" string
json to_json(const QPoly& p);      // ascending coefficient array
json to_json(const IMat& m);
json to_json(const TorsionGroup& t);
json to_json(const GramLattice& l);
json to_json(const KP& p);         // array of rational-strings or of arrays
json to_json(const NFElem& e);

Rat rat_from_json(const json& j);
QPoly qpoly_from_json(const json& j);
IMat imat_from_json(const json& j);
GramLattice lattice_from_json(const json& j);

json to_json(const EmbeddingWitness& w);
json to_json(const ClassificationRow& r);
json to_json(const LemmaE8Report& r);
json to_json(const FiberReport& r);
json to_json(const SingularPointReport& r);
json to_json(const SexticSpec& s);
json to_json(const PlaneCurve& c);
json to_json(const TorusStructure& s);
json to_json(const DetectionReport& r);
json to_json(const InnerOuterSplit& s);
json to_json(const LaurentPoly& p);

TrigonalCurve curve_from_json(const json& j);
FiberChoice fiber_choice_from_json(const json& j);
TorusStructure torus_structure_from_json(const json& j);

// group expressions: C6, D10, S3, S4, A4, Q8, Q16, SD16, M16, Dic3, SL23,
// products with x, sd(m,k,u) semidirect of cyclic groups
FiniteGroup group_from_expression(const std::string& expr);

}  // namespace sextic
