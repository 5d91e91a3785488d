#pragma once

#include <string>
#include <vector>

#include "thetaq/expr.hpp"

namespace thetaq {

enum class Family { classical, quarter, third, constant_level, series_level };

const char* family_name(Family f);
Family family_from_name(const std::string& name); // throws DomainError

// One verifiable identity: an id, the two sides as expression trees and a
// short human anchor describing what the identity says. Derivative records
// are stored pi-reduced (the LHS is theta'/pi, scalars on the RHS absorb the
// pi factor), so both sides live in Q(zeta_n) exactly.
struct IdentityRecord {
    std::string id;
    Family family;
    std::string anchor;
    ExprPtr lhs;
    ExprPtr rhs;
    std::string note; // optional remark, e.g. normalization caveats
};

const std::vector<IdentityRecord>& registry();
const IdentityRecord& registry_find(const std::string& id); // throws DomainError

// Distinct characteristics appearing on derivative left-hand sides, plus the
// three integral ones.
const std::vector<Characteristic>& registry_characteristics();

} // namespace thetaq
