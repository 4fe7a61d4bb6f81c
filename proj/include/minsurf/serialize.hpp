#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "minsurf/mat.hpp"
#include "minsurf/periods.hpp"

namespace minsurf {

using json = nlohmann::ordered_json;

// Numbers cross the JSON boundary as decimal strings (full working
// precision); plain JSON numbers are accepted on input.
real_t real_from_json(const json& j);
complex_t complex_from_json(const json& j);  // [re, im]
json real_to_json(const real_t& x);
json complex_to_json(const complex_t& z);

// Integer matrices as arrays of integer strings (exact round trip).
json intmat_to_json(const IntMat& m);
IntMat intmat_from_json(const json& j);

json realmat_to_json(const RealMat& m);

json period_matrix_to_json(const PeriodMatrix& pm);
void write_period_matrix_csv(std::ostream& os, const PeriodMatrix& pm);

}  // namespace minsurf
