#include <catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "ginar/errors.hpp"
#include "ginar/kappa.hpp"

using namespace ginar;
using Catch::Approx;

TEST_CASE("kappa values", "[kappa]") {
    CHECK(kappa_eval(KappaFamily::bernoulli(), 0.5) == Approx(0.25));
    CHECK(kappa_eval(KappaFamily::poisson(), 1.0) == Approx(1.0));
    CHECK(kappa_eval(KappaFamily::negative_binomial(2.0), 2.0) == Approx(4.0));
}

TEST_CASE("kappa derivatives", "[kappa]") {
    CHECK(kappa_derivative(KappaFamily::bernoulli(), 0.5) == 0.0);
    for (double mu : {0.1, 1.0, 7.5}) CHECK(kappa_derivative(KappaFamily::poisson(), mu) == 1.0);
    CHECK(kappa_derivative(KappaFamily::bernoulli(), 0.3) == Approx(0.4));
    CHECK(kappa_derivative(KappaFamily::negative_binomial(4.0), 2.0) == Approx(2.0));
}

TEST_CASE("kappa derivative matches central finite differences", "[kappa][property]") {
    struct Case {
        KappaFamily family;
        double lo, hi;
    };
    const Case cases[] = {{KappaFamily::bernoulli(), 0.0, 1.0},
                          {KappaFamily::poisson(), 0.0, 10.0},
                          {KappaFamily::negative_binomial(2.0), 0.0, 10.0},
                          {KappaFamily::negative_binomial(0.5), 0.0, 10.0}};
    constexpr double h = 1e-6;
    for (const auto& c : cases) {
        for (int i = 1; i <= 20; ++i) {
            const double mu = c.lo + (c.hi - c.lo) * i / 21.0;
            const double fd = (kappa_eval(c.family, mu + h) - kappa_eval(c.family, mu - h)) / (2 * h);
            const double exact = kappa_derivative(c.family, mu);
            INFO(c.family.name() << " mu=" << mu);
            if (std::fabs(exact) > 1e-3) {
                CHECK(std::fabs(fd - exact) / std::fabs(exact) < 1e-6);
            } else {
                CHECK(std::fabs(fd - exact) < 1e-9);
            }
        }
    }
}

TEST_CASE("out-of-range means are domain errors naming family and bound", "[kappa]") {
    try {
        kappa_eval(KappaFamily::bernoulli(), 1.2);
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("bernoulli"));
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("(0, 1)"));
    }
    CHECK_THROWS_AS(kappa_derivative(KappaFamily::poisson(), -0.1), std::domain_error);
    CHECK_THROWS_AS(kappa_eval(KappaFamily::negative_binomial(1.0), 0.0), std::domain_error);
    // The unchecked forms extend the formulas past the boundary.
    CHECK(KappaFamily::bernoulli().value_unchecked(1.2) == Approx(-0.24));
    CHECK(KappaFamily::bernoulli().derivative_unchecked(1.2) == Approx(-1.4));
}

TEST_CASE("kappa family text", "[kappa][parse]") {
    const auto list = parse_kappa_list("bernoulli, Poisson");
    REQUIRE(list.size() == 2);
    CHECK(list[0].kind() == KappaFamily::Kind::Bernoulli);
    CHECK(list[1].kind() == KappaFamily::Kind::Poisson);

    const auto nb = parse_kappa_list("negbinomial(r=2),poisson");
    REQUIRE(nb.size() == 2);
    CHECK(nb[0].kind() == KappaFamily::Kind::NegBinomial);
    CHECK(nb[0].successes() == 2.0);

    CHECK_THROWS_AS(parse_kappa("gamma"), InputError);
    CHECK_THROWS_AS(parse_kappa("nb(r=-1)"), InputError);
    CHECK_THROWS_AS(parse_kappa("nb(k=2)"), InputError);
    CHECK_THROWS_AS(KappaFamily::negative_binomial(0.0), ConfigError);
}
