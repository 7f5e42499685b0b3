#include <doctest.h>

#include <cmath>
#include <set>

#include "dqw/lattice.hpp"

using namespace dqw;

TEST_CASE("neighbor offsets match the lattice geometry") {
    const double s3h = std::sqrt(3.0) / 2.0;
    auto eq = LatticeFamily::EquilateralTriangle;
    CHECK(neighbor_offset(eq, 1, 1.0).x == doctest::Approx(1.0));
    CHECK(neighbor_offset(eq, 1, 1.0).y == doctest::Approx(0.0));
    CHECK(neighbor_offset(eq, 2, 1.0).x == doctest::Approx(0.5));
    CHECK(neighbor_offset(eq, 2, 1.0).y == doctest::Approx(s3h));
    CHECK(neighbor_offset(eq, 5, 1.0).y == doctest::Approx(-s3h));

    auto iso = LatticeFamily::IsoscelesTriangle;
    CHECK(neighbor_offset(iso, 2, 1.0).x == doctest::Approx(0.5));
    CHECK(neighbor_offset(iso, 2, 1.0).y == doctest::Approx(0.5));
    CHECK(neighbor_offset(iso, 6, 1.0).y == doctest::Approx(-0.5));

    auto hc = LatticeFamily::Honeycomb;
    CHECK(neighbor_offset(hc, 2, 1.0).x == doctest::Approx(-0.5));
    CHECK(neighbor_offset(hc, 2, 1.0).y == doctest::Approx(s3h));
    CHECK(direction_count(hc) == 3);
    CHECK_THROWS(neighbor_offset(hc, 4, 1.0));
}

TEST_CASE("position map: origin, generators, worked examples") {
    LatticeSpec eq{LatticeFamily::EquilateralTriangle, 8, 8, 2.0};
    CHECK(position(eq, {0, 0}).x == doctest::Approx(0.0));
    CHECK(position(eq, {1, 0}).x == doctest::Approx(2.0)); // (eps, 0)
    CHECK(position(eq, {1, 0}).y == doctest::Approx(0.0));

    LatticeSpec iso{LatticeFamily::IsoscelesTriangle, 8, 8, 1.0};
    CHECK(position(iso, {0, 1}).x == doctest::Approx(0.5));
    CHECK(position(iso, {0, 1}).y == doctest::Approx(0.5));
}

TEST_CASE("position map is injective modulo the periodic cell") {
    for (auto fam : {LatticeFamily::EquilateralTriangle, LatticeFamily::IsoscelesTriangle,
                     LatticeFamily::Honeycomb}) {
        LatticeSpec lat{fam, 6, 6, 1.0};
        std::set<std::pair<long, long>> seen;
        for (int b = 0; b < lat.n_y; b++)
            for (int a = 0; a < lat.n_x; a++) {
                Vec2d p = position(lat, {a, b});
                auto key = std::make_pair(std::lround(p.x * 4096), std::lround(p.y * 4096));
                CHECK(seen.insert(key).second);
            }
    }
}

TEST_CASE("opposite directions compose to the identity on sites") {
    for (auto fam : {LatticeFamily::EquilateralTriangle, LatticeFamily::IsoscelesTriangle}) {
        LatticeSpec lat{fam, 5, 7, 1.0};
        for (int dir = 1; dir <= 6; dir++)
            for (int b = 0; b < lat.n_y; b++)
                for (int a = 0; a < lat.n_x; a++) {
                    SiteIndex s{a, b};
                    SiteIndex t = neighbor(lat, neighbor(lat, s, dir),
                                           opposite_direction(fam, dir));
                    CHECK(t.a == s.a);
                    CHECK(t.b == s.b);
                }
    }
}

TEST_CASE("neighbor positions equal the stated offsets (periodic interior)") {
    LatticeSpec lat{LatticeFamily::EquilateralTriangle, 16, 16, 1.0};
    SiteIndex s{5, 5};
    for (int dir = 1; dir <= 6; dir++) {
        Vec2d p = position(lat, s);
        Vec2d q = position(lat, neighbor(lat, s, dir));
        Vec2d off = neighbor_offset(lat.family, dir, lat.epsilon);
        CHECK(q.x - p.x == doctest::Approx(off.x));
        CHECK(q.y - p.y == doctest::Approx(off.y));
    }
}

TEST_CASE("honeycomb single-direction moves reach the whole lattice") {
    LatticeSpec lat{LatticeFamily::Honeycomb, 16, 16, 1.0};
    std::set<int> reached;
    std::vector<SiteIndex> frontier{{0, 0}};
    reached.insert(lat.site_id({0, 0}));
    while (!frontier.empty()) {
        std::vector<SiteIndex> next;
        for (const SiteIndex& s : frontier)
            for (int dir = 1; dir <= 3; dir++) {
                SiteIndex t = neighbor(lat, s, dir);
                if (reached.insert(lat.site_id(t)).second) next.push_back(t);
            }
        frontier.swap(next);
    }
    CHECK(reached.size() == static_cast<size_t>(lat.site_count()));
}

TEST_CASE("spinor field norm and storage") {
    LatticeSpec lat{LatticeFamily::EquilateralTriangle, 4, 4, 1.0};
    SpinorField f(lat);
    CHECK(f.amplitudes.size() == 32);
    f.psi_l({1, 2}) = {0.6, 0.0};
    f.psi_r({1, 2}) = {0.0, 0.8};
    CHECK(f.norm_squared() == doctest::Approx(1.0));
    CHECK(f.site_density({1, 2}) == doctest::Approx(1.0));
    f.normalize();
    CHECK(f.norm_squared() == doctest::Approx(1.0));
}

TEST_CASE("lattice validation rejects degenerate specs") {
    CHECK_THROWS(validate(LatticeSpec{LatticeFamily::EquilateralTriangle, 1, 4, 1.0}));
    CHECK_THROWS(validate(LatticeSpec{LatticeFamily::EquilateralTriangle, 4, 4, 0.0}));
    CHECK_THROWS(direction_delta(LatticeFamily::EquilateralTriangle, 7));
    CHECK_THROWS(direction_delta(LatticeFamily::EquilateralTriangle, 0));
}
