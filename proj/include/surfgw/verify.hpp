#ifndef SURFGW_VERIFY_HPP
#define SURFGW_VERIFY_HPP

#include <string>
#include <vector>

namespace surfgw {

struct VerifyResult {
    std::string name;
    bool passed;
};

// Built-in identity suite: the S two-formula agreement, phi_1 = Theta,
// phi_{m,n} ODE residuals, multiple cover r=1 identities, and PT sign
// convention coherence.
std::vector<VerifyResult> runVerifySuite();

} // namespace surfgw

#endif
