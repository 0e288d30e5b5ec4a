#include "helpers.hpp"

#include "equivariant.hpp"
#include "serialize.hpp"

using namespace tcsd;
using namespace tcsd::test;

TEST_CASE("system documents round-trip") {
    for (const auto& entry : builtin_corpus()) {
        CAPTURE(entry.name);
        auto doc = system_to_json(*entry.system);
        auto loaded = system_from_json(doc, 1e-9);
        CHECK(loaded->algebra()->block_sizes() == entry.system->algebra()->block_sizes());
        CHECK(loaded->group().table() == entry.system->group().table());
        for (int g = 0; g < loaded->group().order(); ++g)
            for (int h = 0; h < loaded->group().order(); ++h)
                CHECK((loaded->sigma(g, h) - entry.system->sigma(g, h)).norm() < 1e-14);
    }
}

TEST_CASE("parse errors are distinguished from validation errors") {
    auto doc = system_to_json(*pauli_system());

    SUBCASE("missing field") {
        auto broken = doc;
        broken.erase("sigma");
        try {
            system_from_json(broken, 1e-9);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Parse);
        }
    }
    SUBCASE("ragged table") {
        auto broken = doc;
        broken["group"]["table"][0].erase(0);
        try {
            system_from_json(broken, 1e-9);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Parse);
        }
    }
    SUBCASE("well-formed but invalid cocycle") {
        auto broken = doc;
        broken["sigma"][1][1] = element_to_json(pauli_system()->algebra()->scalar(-1.0));
        try {
            system_from_json(broken, 1e-9);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Validation);
        }
    }
}

TEST_CASE("coefficient documents round-trip") {
    Rng rng(111);
    auto s = m2_system();
    auto rep = random_equivariant_rep(s, rng);
    Vec x = rng.cgaussian_vec(rep.dim()), y = rng.cgaussian_vec(rep.dim());
    auto t = coefficient(rep, x, y);
    auto loaded = coeff_from_json(coeff_to_json(t), 1e-9);
    CHECK(loaded.entry_distance(t) < 1e-12);
}

TEST_CASE("representation documents round-trip with stored vectors") {
    Rng rng(112);
    auto s = flip_system();
    auto rep = random_equivariant_rep(s, rng);
    Vec x = rng.cgaussian_vec(rep.dim());
    auto doc = rep_to_json(rep, {x});
    auto loaded = rep_from_json(doc, 1e-8);
    CHECK(loaded.rep.dim() == rep.dim());
    REQUIRE(loaded.vectors.size() == 1);
    CHECK((loaded.vectors[0] - x).norm() < 1e-12);
    // the loaded pair carries the same coefficients
    auto t1 = coefficient(rep, x, x);
    auto t2 = coefficient(loaded.rep, loaded.vectors[0], loaded.vectors[0]);
    CHECK(t1.entry_distance(t2) < 1e-10);
}

TEST_CASE("crossed elements serialize by group label") {
    Rng rng(113);
    auto s = s3_system();
    auto f = random_crossed_element(s, rng);
    auto doc = crossed_element_to_json(f);
    CHECK(doc.contains("(012)"));
    auto loaded = crossed_element_from_json(s, doc);
    CHECK((loaded - f).sup_coefficient_norm() < 1e-14);
    CHECK_THROWS_AS(crossed_element_from_json(s, Json{{"nope", Json::array()}}), Error);
}

TEST_CASE("matrices and complex numbers") {
    Mat m(2, 3);
    m << Cplx(1, 2), Cplx(0, -1), Cplx(3, 0), Cplx(-2, 0.5), Cplx(0, 0), Cplx(1e-3, 1e3);
    CHECK(op_norm(mat_from_json(mat_to_json(m)) - m) == 0.0);
    CHECK_THROWS_AS(mat_from_json(Json::array({Json::array({1.0})})), Error);
}
