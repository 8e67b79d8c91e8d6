#include "hdatom/detail/ddouble.hpp"

#include <iterator>
#include <limits>

namespace hdatom::detail {

namespace {

// zeta(k) - 1 for k = 2..60 as double-double pairs.
constexpr int zetam1_first = 2;
const dd zetam1[] = {
    {0.6449340668482264, 3.040672350398476e-17},
    {0.2020569031595943, -6.752241127462512e-18},
    {0.08232323371113819, 5.851757005110278e-18},
    {0.03692775514336993, -3.178450686126237e-19},
    {0.01734306198444914, -4.414770097141147e-19},
    {0.008349277381922827, -2.92234966467598e-19},
    {0.00407735619794434, -2.2242833400456106e-19},
    {0.0020083928260822143, 1.6255172980294325e-19},
    {0.0009945751278180853, 8.155271993117836e-20},
    {0.0004941886041194645, 3.007775458283559e-20},
    {0.0002460865533080483, -2.126804481899407e-20},
    {0.00012271334757848915, 1.312879617594989e-21},
    {6.124813505870483e-05, 1.5932044187197156e-21},
    {3.058823630702049e-05, 2.828205815153663e-22},
    {1.528225940865187e-05, 7.677620188142347e-22},
    {7.637197637899763e-06, -2.946683490299432e-22},
    {3.81729326499984e-06, -3.619576661891535e-22},
    {1.908212716553939e-06, -4.589595461742015e-23},
    {9.539620338727962e-07, -9.885419869008806e-23},
    {4.769329867878064e-07, 1.6292492268188835e-23},
    {2.38450502727733e-07, -1.4348855177581243e-23},
    {1.1921992596531106e-07, 9.349486696402915e-24},
    {5.960818905125948e-08, -4.84489270891793e-25},
    {2.980350351465228e-08, 9.038750484718945e-25},
    {1.4901554828365043e-08, -1.4462631435868446e-24},
    {7.45071178983543e-09, -5.689596284297908e-25},
    {3.725334024788457e-09, -2.2838109257068324e-25},
    {1.862659723513049e-09, -1.357608175618366e-25},
    {9.313274324196682e-10, 1.7251523768776834e-26},
    {4.656629065033784e-10, 4.154615304849929e-26},
    {2.3283118336765053e-10, 1.5614446225186379e-26},
    {1.164155017270052e-10, 4.647009828608305e-27},
    {5.820772087902701e-11, -5.609266140509216e-27},
    {2.9103850444971e-11, -3.1836341409162154e-27},
    {1.4551921891041985e-11, -6.5815767720265535e-28},
    {7.275959835057482e-12, -7.817491596192177e-28},
    {3.637979547378651e-12, 3.2757482504856895e-28},
    {1.818989650307066e-12, -1.2313033251541885e-28},
    {9.094947840263888e-13, 8.752915335828258e-29},
    {4.547473783042154e-13, -1.915433400472885e-29},
    {2.2737368458246524e-13, 7.510141332821777e-30},
    {1.136868407680228e-13, -6.497889027465259e-30},
    {5.684341987627585e-14, 1.9239561017173886e-30},
    {2.842170976889302e-14, -1.4857762609882343e-30},
    {1.4210854828031608e-14, -1.5517661487563433e-30},
    {7.105427395210853e-15, 7.713369817595167e-33},
    {3.552713691337114e-15, -2.605702063609657e-31},
    {1.7763568435791204e-15, -8.689427287890744e-32},
    {8.881784210930816e-16, -2.8972264863617053e-32},
    {4.440892103143813e-16, 2.321028135682245e-32},
    {2.220446050798042e-16, 7.73646017791737e-33},
    {1.1102230251410661e-16, -1.5298905424452545e-33},
    {5.551115124845481e-17, 2.5715123863172194e-33},
    {2.775557562136124e-17, 2.6547030081215438e-33},
    {1.3877787809725232e-17, 8.207028574837895e-34},
    {6.938893904544153e-18, 2.575181068768237e-34},
    {3.4694469521659225e-18, 8.182699569203936e-35},
    {1.7347234760475765e-18, 2.6272572874783635e-35},
    {8.673617380119933e-19, 7.270441620769218e-35},
};

} // namespace

dd exp(const dd& x) {
    if (x.hi > 700.0)
        return dd(std::numeric_limits<double>::infinity());
    if (x.hi < -740.0)
        return dd(0.0);
    const int m = static_cast<int>(std::nearbyint(x.hi / dd_ln2.hi));
    const dd r = x - dd(static_cast<double>(m)) * dd_ln2;
    dd sum(1.0);
    dd term(1.0);
    for (int k = 1; k < 40; ++k) {
        term = term * r / dd(static_cast<double>(k));
        sum += term;
        if (std::fabs(term.hi) < 1e-35 * std::fabs(sum.hi))
            break;
    }
    return ldexp(sum, m);
}

dd log(const dd& x) {
    dd y(std::log(x.hi));
    // Newton iteration y <- y + x e^{-y} - 1 (doubles the correct digits)
    y = y + x * exp(-y) - dd(1.0);
    y = y + x * exp(-y) - dd(1.0);
    return y;
}

dd sinpi(double nu) {
    const double n = std::nearbyint(nu);
    const double r = nu - n; // exact
    const dd z = dd_pi * dd(r);
    dd sum = z;
    dd term = z;
    const dd z2 = z * z;
    for (int k = 1; k < 24; ++k) {
        term = term * z2 / dd(static_cast<double>(2 * k * (2 * k + 1)));
        term = -term;
        sum += term;
        if (std::fabs(term.hi) < 1e-35 * std::fabs(sum.hi) + 1e-320)
            break;
    }
    const bool flip = std::fmod(std::fabs(n), 2.0) == 1.0;
    return flip ? -sum : sum;
}

dd lngamma_1p(const dd& mu) {
    // ln Gamma(1+mu) = (1 - euler) mu - [ln(1+mu) - mu] ... assembled as
    //   -euler*mu + (mu - ln(1+mu)) + sum_{k>=2} (-1)^k (zeta(k)-1) mu^k / k
    dd acc = -dd_euler * mu + (mu - log(dd(1.0) + mu));
    dd mup = mu; // mu^{k-1}
    for (int k = 2; k < zetam1_first + static_cast<int>(std::size(zetam1)); ++k) {
        mup = mup * mu;
        dd term = zetam1[k - zetam1_first] * mup / dd(static_cast<double>(k));
        if (k % 2 != 0)
            term = -term;
        acc += term;
        if (std::fabs(term.hi) < 1e-36 * (std::fabs(acc.hi) + 1e-300))
            break;
    }
    return acc;
}

dd gamma_1p(double t) {
    // Gamma(1+t): shift t into [-1/2, 1/2] and apply Gamma(z+1) = z Gamma(z).
    const int n = static_cast<int>(std::nearbyint(t));
    const dd mu(t - n); // exact
    dd g = exp(lngamma_1p(mu));
    if (n >= 0) {
        for (int j = 1; j <= n; ++j)
            g = g * (mu + dd(static_cast<double>(j)));
    } else {
        for (int j = 0; j < -n; ++j)
            g = g / (mu - dd(static_cast<double>(j)));
    }
    return g;
}

} // namespace hdatom::detail
