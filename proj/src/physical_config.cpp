#include "rydopt/physical_config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rydopt {

namespace {
void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("PhysicalConfig: " + what);
}
}  // namespace

void PhysicalConfig::validate() const {
  for (double v : {c6, r, tau, omega_max, a_max, dphi_min, dphi_max, b_min,
                   b_max, gamma, branching})
    require(std::isfinite(v), "non-finite field");
  require(omega_max > 0, "omega_max must be > 0");
  require(a_max > 0, "a_max must be > 0");
  require(tau > 0, "tau must be > 0");
  require(m >= 2, "m must be >= 2");
  require(n_steps >= m, "n_steps must be >= m");
  require(gamma >= 0, "gamma must be >= 0");
  require(branching > 0, "branching must be > 0");
  require(b_min <= b_max, "b_min must be <= b_max");
  require(dphi_min <= 0 && 0 <= dphi_max, "dphi bounds must straddle 0");
}

}  // namespace rydopt
