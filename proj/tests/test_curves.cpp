#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <knotfit/benchmark_curves.hpp>

using namespace knotfit;

TEST_CASE("epitrochoid pinned values", "[curves]") {
    const auto pts = epitrochoid(5, 1, 4, -180, 180, 361);
    REQUIRE(pts.size() == 361);

    // t = 0 sits at index 180
    CHECK(pts[180][0] == Catch::Approx(2.0).margin(1e-12));
    CHECK(pts[180][1] == Catch::Approx(0.0).margin(1e-12));

    // t = 180 degrees: 6 cos(180) - 4 cos(1080) = -10
    CHECK(pts.back()[0] == Catch::Approx(-10.0).margin(1e-9));
    CHECK(pts.back()[1] == Catch::Approx(0.0).margin(1e-9));

    // mirror symmetry about the x axis
    for (int i = 0; i < 180; ++i) {
        CHECK(pts[i][0] == Catch::Approx(pts[360 - i][0]).margin(1e-9));
        CHECK(pts[i][1] == Catch::Approx(-pts[360 - i][1]).margin(1e-9));
    }

    CHECK_THROWS_AS(epitrochoid(5, 0, 4, -180, 180, 361), std::domain_error);
}

TEST_CASE("archimedean spiral pinned values", "[curves]") {
    const auto pts = archimedean_spiral(2, 0, std::numbers::pi, 100);
    REQUIRE(pts.size() == 100);
    CHECK(pts.front() == Vec2{0, 0});
    CHECK(pts.back()[0] == Catch::Approx(-2 * std::numbers::pi).margin(1e-12));
    CHECK(pts.back()[1] == Catch::Approx(0.0).margin(1e-12));

    const auto quarter = archimedean_spiral(2, 0, std::numbers::pi, 3)[1];  // t = pi/2
    CHECK(quarter[0] == Catch::Approx(0.0).margin(1e-12));
    CHECK(quarter[1] == Catch::Approx(std::numbers::pi).margin(1e-12));
}

TEST_CASE("vivaldi pinned values", "[curves]") {
    const auto pts = vivaldi(0.5, -360, 360, 241);
    REQUIRE(pts.size() == 241);

    // t = 0 at index 120
    CHECK(pts[120][0] == Catch::Approx(1.0).margin(1e-12));
    CHECK(pts[120][1] == Catch::Approx(0.0).margin(1e-12));
    CHECK(pts[120][2] == Catch::Approx(0.0).margin(1e-12));

    // t = 360: cos 360 = 1, sin 180 = 0
    CHECK(pts.back()[0] == Catch::Approx(1.0).margin(1e-9));
    CHECK(pts.back()[1] == Catch::Approx(0.0).margin(1e-9));
    CHECK(pts.back()[2] == Catch::Approx(0.0).margin(1e-9));

    // t = 180 at index 180
    CHECK(pts[180][0] == Catch::Approx(0.0).margin(1e-9));
    CHECK(pts[180][1] == Catch::Approx(0.0).margin(1e-9));
    CHECK(pts[180][2] == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("generators sample both endpoints and the exact count", "[curves]") {
    for (int count : {2, 7, 100}) {
        const auto pts = archimedean_spiral(1.0, 0.25, 2.0, count);
        REQUIRE(static_cast<int>(pts.size()) == count);
        CHECK(pts.front()[0] == Catch::Approx(0.25 * std::cos(0.25)).margin(1e-12));
        CHECK(pts.back()[0] == Catch::Approx(2.0 * std::cos(2.0)).margin(1e-12));
    }
    CHECK_THROWS_AS(archimedean_spiral(1.0, 0.0, 1.0, 1), std::domain_error);
    CHECK_THROWS_AS(archimedean_spiral(1.0, 1.0, 0.0, 10), std::domain_error);
}

TEST_CASE("generators are deterministic", "[curves]") {
    CHECK(epitrochoid(5, 1, 4, -180, 180, 91) == epitrochoid(5, 1, 4, -180, 180, 91));
    CHECK(vivaldi(0.5, -360, 360, 61) == vivaldi(0.5, -360, 360, 61));
}

TEST_CASE("angle unit override", "[curves]") {
    const auto deg = epitrochoid(5, 1, 4, -180, 180, 21, AngleUnit::degrees);
    const auto rad = epitrochoid(5, 1, 4, -std::numbers::pi, std::numbers::pi, 21,
                                 AngleUnit::radians);
    for (std::size_t i = 0; i < deg.size(); ++i) {
        CHECK(deg[i][0] == Catch::Approx(rad[i][0]).margin(1e-9));
        CHECK(deg[i][1] == Catch::Approx(rad[i][1]).margin(1e-9));
    }
}
