#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hdatom/specfun.hpp"

using namespace hdatom::specfun;

namespace {

struct Ref {
    double nu, x, value;
};

// Reference values computed with mpmath at 40 digits.
const Ref i_refs[] = {
    {0.0, 0.1, 1.0025015629340956014},
    {0.0, 0.5, 1.063483370741323519263},
    {0.0, 1.0, 1.266065877752008335598},
    {0.0, 2.0, 2.279585302336067267437},
    {0.0, 5.0, 27.23987182360444689454},
    {0.0, 10.0, 2815.71662846625447147},
    {0.0, 30.0, 781672297823.9774897174},
    {0.3, 0.1, 0.454470352291974152172},
    {0.3, 0.5, 0.7709517345792194599968},
    {0.3, 1.0, 1.088794949016802863264},
    {0.3, 2.0, 2.177637989553737956765},
    {0.3, 5.0, 26.96209377943794270502},
    {0.3, 10.0, 2802.362488974458463838},
    {0.3, 30.0, 780480421399.8335290537},
    {0.5, 0.1, 0.2527339846001319734364},
    {0.5, 0.5, 0.5879930867904163254889},
    {0.5, 1.0, 0.9376748882454876467173},
    {0.5, 2.0, 2.046236863089055036605},
    {0.5, 5.0, 26.47754749755906520539},
    {0.5, 10.0, 2778.784603874571023998},
    {0.5, 30.0, 778366068840.4464041936},
    {0.9743415, 0.1, 0.0546412746796353288677},
    {0.9743415, 0.5, 0.2701980340623059479469},
    {0.9743415, 1.0, 0.5823466587463961109102},
    {0.9743415, 2.0, 1.616252012173728439236},
    {0.9743415, 5.0, 24.47397362412859065764},
    {0.9743415, 10.0, 2678.130256027449487755},
    {0.9743415, 30.0, 769192300052.0044248123},
    {1.0, 0.1, 0.05006252604709269211381},
    {1.0, 0.5, 0.2578943053908963163625},
    {1.0, 1.0, 0.5651591039924850272077},
    {1.0, 2.0, 1.590636854637329063382},
    {1.0, 5.0, 24.33564214245052719914},
    {1.0, 10.0, 2670.988303701254654341},
    {1.0, 30.0, 768532038938.9569994943},
    {2.7, 0.1, 0.00007367302488775742023317},
    {2.7, 0.5, 0.005775066858926004664252},
    {2.7, 1.0, 0.03945950602815593466483},
    {2.7, 2.0, 0.3118860809585040010145},
    {2.7, 5.0, 12.34063242652679741746},
    {2.7, 10.0, 1921.606696182599280445},
    {2.7, 30.0, 690850929899.2615830616},
};

const Ref k_refs[] = {
    {0.0, 0.1, 2.427069024702016612519},
    {0.0, 0.5, 0.9244190712276658617819},
    {0.0, 1.0, 0.4210244382407083333356},
    {0.0, 2.0, 0.1138938727495334356527},
    {0.0, 5.0, 0.003691098334042594274735},
    {0.0, 10.0, 0.0000177800623161676518113},
    {0.0, 30.0, 2.132477496463056371167e-14},
    {0.3, 0.1, 2.805056475021572310659},
    {0.3, 0.5, 0.9764741243817879210231},
    {0.3, 1.0, 0.4350760242088020243484},
    {0.3, 2.0, 0.1160369743481192585215},
    {0.3, 5.0, 0.003721669328873425499273},
    {0.3, 10.0, 0.0000178566070168230224524},
    {0.3, 30.0, 2.135627028326094877443e-14},
    {0.5, 0.1, 3.586166838797260144527},
    {0.5, 0.5, 1.075047603499920238723},
    {0.5, 1.0, 0.4610685044478945584396},
    {0.5, 2.0, 0.119937771968061447368},
    {0.5, 5.0, 0.003776613374642882559528},
    {0.5, 10.0, 0.00001799347809370517960812},
    {0.5, 30.0, 2.141237565956011399298e-14},
    {0.9743415, 0.1, 9.254859354831402255088},
    {0.9743415, 0.5, 1.61017354470240077743},
    {0.9743415, 1.0, 0.5913258696760742259942},
    {0.9743415, 2.0, 0.1384302290782832198233},
    {0.9743415, 5.0, 0.004025955922352102676601},
    {0.9743415, 10.0, 0.00001860379058522066595678},
    {0.9743415, 30.0, 2.165932268069322031567e-14},
    {1.0, 0.1, 9.853844780870606134849},
    {1.0, 0.5, 1.656441120003300893696},
    {1.0, 1.0, 0.6019072301972345747375},
    {1.0, 2.0, 0.1398658818165224272846},
    {1.0, 5.0, 0.004044613445452164208365},
    {1.0, 10.0, 0.00001864877345382558459682},
    {1.0, 30.0, 2.167732001891549424867e-14},
    {2.7, 0.1, 2511.615426570113814266},
    {2.7, 0.5, 31.45872090433869170539},
    {2.7, 1.0, 4.374241826191162828087},
    {2.7, 2.0, 0.473231920553280038001},
    {2.7, 5.0, 0.007126248755633330951931},
    {2.7, 10.0, 0.00002513829828630063382632},
    {2.7, 30.0, 2.403087884205936474413e-14},
};

} // namespace

TEST_CASE("I_nu against the high-precision references") {
    for (const auto& r : i_refs) {
        const BesselEval ev = bessel_i(r.nu, r.x);
        CHECK(ev.value == doctest::Approx(r.value).epsilon(1e-12));
        CHECK(ev.est_error <= 1e-10);
    }
}

TEST_CASE("K_nu against the high-precision references") {
    for (const auto& r : k_refs) {
        const BesselEval ev = bessel_k(r.nu, r.x);
        CHECK(ev.value == doctest::Approx(r.value).epsilon(1e-12));
        CHECK(ev.est_error <= 1e-10);
    }
}

TEST_CASE("small-argument limits") {
    CHECK(bessel_i(0.0, 1e-8).value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bessel_i(1.0, 1e-8).value == doctest::Approx(5e-9).epsilon(1e-12));
}

TEST_CASE("half-integer closed forms") {
    const double x = 1.0;
    CHECK(bessel_i(0.5, x).value ==
          doctest::Approx(std::sqrt(2.0 / (std::numbers::pi * x)) * std::sinh(x))
              .epsilon(1e-13));
    const BesselEval k = bessel_k(0.5, x);
    CHECK(k.regime_used == BesselRegime::HalfIntegerClosedForm);
    // K_{1/2}(1) = sqrt(pi/2) e^{-1}, asserted at 1e-12
    const double exact = std::sqrt(0.5 * std::numbers::pi) * std::exp(-1.0);
    CHECK(std::fabs(k.value - exact) <= 1e-12 * exact);
}

TEST_CASE("K is even in the order") {
    for (double nu : {0.3, 0.5, 1.0, 2.7}) {
        CHECK(bessel_k(-nu, 2.0).value == bessel_k(nu, 2.0).value);
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(bessel_i(-0.5, 1.0), hdatom::Error);
    CHECK_THROWS_AS(bessel_i(1.0, 0.0), hdatom::Error);
    CHECK_THROWS_AS(bessel_i(1.0, -2.0), hdatom::Error);
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), hdatom::Error);
}

TEST_CASE("Wronskian identity x (I K' - I' K) = -1 over the full lattice") {
    for (double nu : {0.0, 0.3, 0.5, 0.9743415, 1.0, 2.7}) {
        for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0}) {
            const double w = x * (bessel_i(nu, x).value * bessel_k_prime(nu, x) -
                                  bessel_i_prime(nu, x) * bessel_k(nu, x).value);
            CHECK(std::fabs(w + 1.0) < 1e-10);
        }
    }
}

TEST_CASE("monotonicity in x") {
    for (double nu : {0.0, 0.5, 1.3, 3.1}) {
        double prev_i = bessel_i(nu, 0.05).value;
        double prev_k = bessel_k(nu, 0.05).value;
        for (double x = 0.1; x < 40.0; x *= 1.45) {
            const double vi = bessel_i(nu, x).value;
            const double vk = bessel_k(nu, x).value;
            CHECK(vi > prev_i);
            CHECK(vk < prev_k);
            prev_i = vi;
            prev_k = vk;
        }
    }
}

TEST_CASE("recurrence I_{nu-1} - I_{nu+1} = (2 nu / x) I_nu") {
    for (double nu : {1.0, 1.7, 2.7, 4.0}) {
        for (double x : {0.2, 1.0, 3.0, 12.0, 28.0}) {
            const double lhs = bessel_i(nu - 1.0, x).value - bessel_i(nu + 1.0, x).value;
            const double rhs = 2.0 * nu / x * bessel_i(nu, x).value;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        }
    }
}

TEST_CASE("series and asymptotic regimes agree through the switch window") {
    for (double nu : {0.0, 0.3, 1.0, 2.2}) {
        for (double x = 14.0; x <= 20.0; x += 0.5) {
            const long double is = detail::bessel_i_ld(nu, x, false);
            const long double ia = detail::bessel_i_ld(nu, x, true);
            CHECK(std::fabs(static_cast<double>((is - ia) / is)) < 1e-9);
            const long double ks = detail::bessel_k_ld(nu, x, false);
            const long double ka = detail::bessel_k_ld(nu, x, true);
            CHECK(std::fabs(static_cast<double>((ks - ka) / ks)) < 1e-9);
        }
    }
}

TEST_CASE("near-integer orders stay smooth") {
    // interpolation band around nu = 1 against just-outside values
    const double x = 3.0;
    const double inside = bessel_k(1.0 + 1e-7, x).value;
    const double at = bessel_k(1.0, x).value;
    const double outside = bessel_k(1.0 + 1e-5, x).value;
    CHECK(std::fabs(inside - at) < 1e-5 * at);
    CHECK(std::fabs(outside - at) < 1e-4 * at);
    CHECK(inside == doctest::Approx(at).epsilon(1e-6));
}

TEST_CASE("large-x asymptote of I") {
    // I_nu(x) e^{-x} sqrt(2 pi x) -> 1
    const double x = 50.0;
    const double v = bessel_i(1.0, x).value;
    const double scaled = v * std::exp(-x) * std::sqrt(2.0 * std::numbers::pi * x);
    CHECK(scaled == doctest::Approx(1.0).epsilon(1e-2));
}
