#pragma once

#include "hardy/piext.hpp"
#include "hardy/ratpoly.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hardy {

// Outcome of one exact certificate check. `passed` is true only when every
// sub-claim listed in `details` was verified in exact arithmetic; boundary
// values are recorded as exact num/den strings.
struct CertificateReport {
    std::string name;
    bool passed = false;
    nlohmann::json details;

    nlohmann::json to_json() const;
};

// F(y) = 1 + y^2/4 + y^4/64 + y^6/256 + (5/768) y^8, the threshold majorant
// of the H^1 norm of z1 + y*z2.
RatPoly build_F();

// The weaker majorant 1 + y^2/4 + y^4/64 + y^6/128 (sharper for y^2 >= 3/5
// but without the monotone-ratio property).
RatPoly build_Ftilde();

struct PQ {
    RatPoly P; // (1+2x)^28 (1+4x+x^2)^3, degree 34
    RatPoly Q; // G^4, degree 48
    RatPoly G; // (1+2x)^8 F(y(x)), degree 12
};

// Builds the certificate pair P/Q = [(1+2x)^7 dual / (1+2x)^7 F]^4 using
// y^2 = x(2+x)^2/(1+2x)^2. Pass f_override to substitute the numerator
// polynomial F (used by the fault-injection hook).
PQ build_PQ(const RatPoly* f_override = nullptr);

// R1 = (P(1)Q(x) - Q(1)P(x)) / (1-x)^2 must be a degree-46 polynomial with
// all 47 coefficients strictly positive.
CertificateReport verify_R1(const RatPoly* f_override = nullptr);

// R2 = P - Q must have degree 48 with coefficients at x^0..x^27 nonnegative
// (x^0..x^2 vanish identically; x^3..x^27 are strictly positive), x^28..x^48
// strictly negative, and R2(1) > 0 — which together force R2 >= 0 on [0,1].
CertificateReport verify_R2(const RatPoly* f_override = nullptr);

// Sigma1(s) = sum_{j<=3} C(1/2,j)^2 s^{j-4}. Verifies coefficient by
// coefficient that Sigma1'' Sigma1 - (Sigma1')^2 equals
// 4 s^-10 + 2 s^-9 + (11/32) s^-8 + (5/64) s^-7 + (17/2048) s^-6
//   + (1/4096) s^-5 + (1/65536) s^-4,
// and that Sigma1(1) = 325/256.
CertificateReport verify_sigma_identity();

// Assembles the boundary data Sigma1(1) = 325/256, Sigma1'(1) = -1225/256,
// Sigma2(1) = 4/pi - 325/256, Sigma2'(1) = 1225/256 - 15/pi in Q[1/pi] and
// returns (Sigma1' Sigma2 - Sigma1 Sigma2') / (Sigma1' + Sigma2') at 1.
// The pi parts cancel exactly and the result is the rational 5/768.
PiExt compute_c_threshold();

// Every exact certificate, in order. The optional override corrupts the
// F polynomial before the dependent certificates run (test hook).
std::vector<CertificateReport> run_all_certificates(const RatPoly* f_override = nullptr);

} // namespace hardy
