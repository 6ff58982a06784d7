#include "hardy/certificates.hpp"

#include "hardy/binomial.hpp"
#include "hardy/errors.hpp"

#include <array>
#include <utility>

namespace hardy {

namespace {

// xi^shift * p(xi); enough Laurent structure for the Sigma1 computation.
struct ShiftedPoly {
    RatPoly p;
    int shift;

    ShiftedPoly derivative() const {
        // d/dxi [xi^s p] = xi^{s-1} (s p + xi p')
        RatPoly xi_pprime;
        {
            std::vector<Rational> v;
            v.reserve(static_cast<std::size_t>(p.degree()) + 2);
            v.emplace_back(0);
            for (const auto& c : p.coeffs()) v.push_back(c);
            xi_pprime = RatPoly(std::move(v)).derivative();
            // (x p)' = p + x p'; subtract p to get x p'
            xi_pprime -= p;
        }
        return {Rational(static_cast<long>(shift)) * p + xi_pprime, shift - 1};
    }

    friend ShiftedPoly operator*(const ShiftedPoly& a, const ShiftedPoly& b) {
        return {a.p * b.p, a.shift + b.shift};
    }

    friend ShiftedPoly operator-(const ShiftedPoly& a, const ShiftedPoly& b) {
        const int s = std::min(a.shift, b.shift);
        return {RatPoly::monomial(Rational(1), static_cast<std::size_t>(a.shift - s)) * a.p -
                    RatPoly::monomial(Rational(1), static_cast<std::size_t>(b.shift - s)) * b.p,
                s};
    }

    // coefficient of xi^k
    Rational coeff_at(int k) const {
        if (k < shift) return Rational(0);
        return p.coeff(static_cast<std::size_t>(k - shift));
    }
};

std::string sign_string(const RatPoly& p) {
    std::string s;
    for (const Sign sg : p.sign_pattern()) s.push_back(to_char(sg));
    return s;
}

} // namespace

nlohmann::json CertificateReport::to_json() const {
    return {{"name", name}, {"passed", passed}, {"details", details}};
}

RatPoly build_F() {
    return RatPoly{Rational(1), Rational(0), Rational(1, 4),   Rational(0), Rational(1, 64),
                   Rational(0), Rational(1, 256), Rational(0), Rational(5, 768)};
}

RatPoly build_Ftilde() {
    return RatPoly{Rational(1), Rational(0), Rational(1, 4), Rational(0),
                   Rational(1, 64), Rational(0), Rational(1, 128)};
}

PQ build_PQ(const RatPoly* f_override) {
    const RatPoly F = f_override != nullptr ? *f_override : build_F();

    const RatPoly one_plus_2x{Rational(1), Rational(2)};
    const RatPoly two_plus_x{Rational(2), Rational(1)};
    const RatPoly quad{Rational(1), Rational(4), Rational(1)};

    // G = (1+2x)^8 F(y(x)) with y^2 = x(2+x)^2/(1+2x)^2: the y^{2k} term of F
    // becomes f_{2k} x^k (2+x)^{2k} (1+2x)^{8-2k}.
    RatPoly G;
    for (unsigned k = 0; k <= 4; ++k) {
        const Rational& f2k = F.coeff(2 * k);
        if (f2k.is_zero()) continue;
        G += f2k * (RatPoly::monomial(Rational(1), k) * two_plus_x.pow(2 * k) *
                    one_plus_2x.pow(8 - 2 * k));
    }

    PQ pq;
    pq.G = G;
    pq.Q = G.pow(4);
    pq.P = one_plus_2x.pow(28) * quad.pow(3);
    return pq;
}

CertificateReport verify_R1(const RatPoly* f_override) {
    CertificateReport rep;
    rep.name = "R1";
    const PQ pq = build_PQ(f_override);
    const Rational p_at_1 = pq.P.evaluate(Rational(1));
    const Rational q_at_1 = pq.Q.evaluate(Rational(1));

    const RatPoly numerator = p_at_1 * pq.Q - q_at_1 * pq.P;
    const RatPoly one_minus_x_sq{Rational(1), Rational(-2), Rational(1)};

    RatPoly r1;
    try {
        r1 = poly_divide_exact(numerator, one_minus_x_sq);
    } catch (const NonzeroRemainder& e) {
        rep.passed = false;
        rep.details["error"] = e.what();
        return rep;
    }

    const auto pattern = r1.sign_pattern();
    const bool all_positive =
        std::all_of(pattern.begin(), pattern.end(), [](Sign s) { return s == Sign::positive; });

    rep.passed = r1.degree() == 46 && all_positive;
    rep.details["degree"] = r1.degree();
    rep.details["coefficient_count"] = r1.degree() + 1;
    rep.details["all_coefficients_positive"] = all_positive;
    rep.details["division_exact"] = true;
    rep.details["R1_at_0"] = r1.coeff(0).str();
    rep.details["P_at_1"] = p_at_1.str();
    rep.details["Q_at_1"] = q_at_1.str();
    rep.details["R1_at_0_equals_P1_minus_Q1"] = (r1.coeff(0) == p_at_1 - q_at_1);
    return rep;
}

CertificateReport verify_R2(const RatPoly* f_override) {
    CertificateReport rep;
    rep.name = "R2";
    const PQ pq = build_PQ(f_override);
    const RatPoly r2 = pq.P - pq.Q;

    const auto pattern = r2.sign_pattern();
    bool low_nonneg = true;
    bool high_negative = r2.degree() >= 28;
    std::vector<int> zero_indices;
    for (int i = 0; i <= r2.degree(); ++i) {
        const Sign s = pattern[static_cast<std::size_t>(i)];
        if (i < 28) {
            if (s == Sign::negative) low_nonneg = false;
            if (s == Sign::zero) zero_indices.push_back(i);
        } else if (s != Sign::negative) {
            high_negative = false;
        }
    }
    // The exact expansion has x^0..x^2 identically zero (P/Q - 1 = O(x^3));
    // the remaining low coefficients must be strictly positive. Together
    // with the negative top block and R2(1) > 0 this still forces
    // R2(x) >= x^28 R2(1) >= 0 on [0,1].
    const bool zeros_are_expected = zero_indices == std::vector<int>{0, 1, 2};
    const Rational r2_at_1 = r2.evaluate(Rational(1));

    rep.passed = r2.degree() == 48 && low_nonneg && zeros_are_expected && high_negative &&
                 r2_at_1.sign() > 0;
    rep.details["degree"] = r2.degree();
    rep.details["low_block_nonnegative"] = low_nonneg;
    rep.details["zero_coefficient_indices"] = zero_indices;
    rep.details["strictly_positive_range"] = "x^3..x^27";
    rep.details["high_block_negative"] = high_negative;
    rep.details["R2_at_1"] = r2_at_1.str();
    rep.details["R2_at_1_positive"] = r2_at_1.sign() > 0;
    rep.details["sign_pattern"] = sign_string(r2);
    return rep;
}

CertificateReport verify_sigma_identity() {
    CertificateReport rep;
    rep.name = "sigma_identity";

    // Sigma1 = xi^{-4} * sum_{j<=3} C(1/2,j)^2 xi^j
    RatPoly a;
    for (unsigned j = 0; j <= 3; ++j) {
        const Rational c = binom_general(Rational(1, 2), j);
        a += RatPoly::monomial(c * c, j);
    }
    const ShiftedPoly sigma1{a, -4};
    const ShiftedPoly d1 = sigma1.derivative();
    const ShiftedPoly d2 = d1.derivative();
    const ShiftedPoly lhs = d2 * sigma1 - d1 * d1;

    // 4/xi^10 + 2/xi^9 + 11/(32 xi^8) + 5/(64 xi^7) + 17/(2048 xi^6)
    //   + 1/(4096 xi^5) + 1/(65536 xi^4)
    const std::array<std::pair<int, Rational>, 7> expected{{
        {-10, Rational(4)},
        {-9, Rational(2)},
        {-8, Rational(11, 32)},
        {-7, Rational(5, 64)},
        {-6, Rational(17, 2048)},
        {-5, Rational(1, 4096)},
        {-4, Rational(1, 65536)},
    }};

    bool match = true;
    for (const auto& [power, coeff] : expected) {
        if (lhs.coeff_at(power) != coeff) match = false;
    }
    // no stray terms outside the listed powers
    RatPoly residual = lhs.p;
    for (const auto& [power, coeff] : expected) {
        residual -= RatPoly::monomial(coeff, static_cast<std::size_t>(power - lhs.shift));
    }
    const bool residual_zero = residual.is_zero();

    const Rational sigma1_at_1 = a.evaluate(Rational(1));
    rep.passed = match && residual_zero && sigma1_at_1 == Rational(325, 256);
    rep.details["all_seven_coefficients_match"] = match;
    rep.details["residual_zero"] = residual_zero;
    rep.details["sigma1_at_1"] = sigma1_at_1.str();
    rep.details["coeff_xi^-10"] = lhs.coeff_at(-10).str();
    rep.details["coeff_xi^-4"] = lhs.coeff_at(-4).str();
    return rep;
}

PiExt compute_c_threshold() {
    const PiExt sigma1_1(Rational(325, 256));
    const PiExt sigma1p_1(Rational(-1225, 256));
    const PiExt sigma2_1 = PiExt::inv_pi_term(Rational(4), 1) - PiExt(Rational(325, 256));
    const PiExt sigma2p_1 = PiExt(Rational(1225, 256)) - PiExt::inv_pi_term(Rational(15), 1);

    const PiExt numerator = sigma1p_1 * sigma2_1 - sigma1_1 * sigma2p_1;
    const PiExt denominator = sigma1p_1 + sigma2p_1;
    return piext_divide_exact(numerator, denominator);
}

std::vector<CertificateReport> run_all_certificates(const RatPoly* f_override) {
    std::vector<CertificateReport> reports;

    {
        CertificateReport rep;
        rep.name = "F_construction";
        const RatPoly F = f_override != nullptr ? *f_override : build_F();
        const RatPoly Ft = build_Ftilde();
        const Rational f1 = F.evaluate(Rational(1));
        const Rational ft1 = Ft.evaluate(Rational(1));
        rep.passed = F.coeff(8) == Rational(5, 768) && f1 == Rational(245, 192) &&
                     ft1 == Rational(163, 128);
        rep.details["F_y8_coefficient"] = F.coeff(8).str();
        rep.details["F_at_1"] = f1.str();
        rep.details["Ftilde_at_1"] = ft1.str();
        reports.push_back(std::move(rep));
    }

    reports.push_back(verify_sigma_identity());

    {
        CertificateReport rep;
        rep.name = "c_threshold";
        try {
            const PiExt c = compute_c_threshold();
            rep.passed = c.is_rational() && c.rational_part() == Rational(5, 768);
            rep.details["value"] = c.str();
            rep.details["pi_terms_cancelled"] = c.is_rational();
        } catch (const InexactDivision& e) {
            rep.passed = false;
            rep.details["error"] = e.what();
        }
        reports.push_back(std::move(rep));
    }

    reports.push_back(verify_R1(f_override));
    reports.push_back(verify_R2(f_override));
    return reports;
}

} // namespace hardy
