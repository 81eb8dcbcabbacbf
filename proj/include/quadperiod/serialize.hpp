#pragma once

#include "quadperiod/cfrac.hpp"
#include "quadperiod/intpoly.hpp"
#include "quadperiod/qform.hpp"
#include "quadperiod/real.hpp"
#include "quadperiod/sums.hpp"

#include <json.hpp>

namespace qp {

using Json = nlohmann::json;

// Integers render as JSON numbers when they fit in 64 bits, decimal strings
// otherwise.
Json json_int(const Int& n);

Json to_json(const Real& x);
Real real_from_json(const Json& j);

Json to_json(const QForm& q);
QForm form_from_json(const Json& j);

Json to_json(const Mat2& m);

// Coefficient array, lowest degree first, decimal strings.
Json to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

Json to_json(const FormClass& cls);
Json class_dump(const Int& D, Group group, const std::vector<FormClass>& classes);

Json to_json(const PlusStep& st, int display_digits);
Json to_json(const MinusStep& st, int display_digits);
Json to_json(const SlowStep& st, int display_digits);

Json to_json(const SumResult& r, int display_digits);
Json to_json(const ZagierTables& t, int display_digits);
Json to_json(const BijectionAudit& a);
Json to_json(const IdentityReport& r);

}  // namespace qp
