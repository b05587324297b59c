#include "doctest.h"

#include "sdirac/threevector.hpp"

using namespace sdirac;

TEST_CASE("threevector arithmetic") {
    const ThreeVector a{1.0, -2.0, 3.0};
    const ThreeVector b{0.5, 4.0, -1.0};

    const ThreeVector sum = a + b;
    CHECK(sum.x == 1.5);
    CHECK(sum.y == 2.0);
    CHECK(sum.z == 2.0);

    const ThreeVector diff = a - b;
    CHECK(diff.x == 0.5);
    CHECK(diff.y == -6.0);
    CHECK(diff.z == 4.0);

    const ThreeVector neg = -a;
    CHECK(neg.x == -1.0);
    CHECK(neg.y == 2.0);
    CHECK(neg.z == -3.0);

    CHECK((a * 2.0).y == -4.0);
    CHECK((2.0 * a).y == -4.0);
    CHECK((a / 2.0).z == 1.5);
}

TEST_CASE("dot, norm and unit") {
    const ThreeVector a{3.0, 0.0, 4.0};
    CHECK(a.dot(a) == 25.0);
    CHECK(a.norm() == 5.0);
    CHECK(a.norm_sq() == 25.0);
    CHECK(dot(a, {1.0, 1.0, 1.0}) == 7.0);

    const ThreeVector u = a.unit();
    CHECK(u.x == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(u.z == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(u.norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("unit of the zero vector is a domain error") {
    const ThreeVector zero{0.0, 0.0, 0.0};
    CHECK_THROWS_AS((void)zero.unit(), std::domain_error);
}
