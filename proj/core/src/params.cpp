#include "qlnls/params.hpp"

#include <cmath>
#include <sstream>

#include "qlnls/errors.hpp"

namespace qlnls {

ModelParams make_params(double a, double b, int alpha) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ValidationError("model: a must be positive and finite");
    if (!(b > 0.0) || !std::isfinite(b)) throw ValidationError("model: b must be positive and finite");
    if (alpha < 1) throw ValidationError("model: alpha must be a positive integer");
    return ModelParams{a, b, alpha};
}

void require_ground_state_regime(const ModelParams& p) {
    if (!p.has_ground_state()) {
        std::ostringstream os;
        os << "no ground state: a <= (alpha+1)b (a=" << p.a << ", (alpha+1)b=" << (p.alpha + 1) * p.b << ")";
        throw ValidationError(os.str());
    }
}

} // namespace qlnls
