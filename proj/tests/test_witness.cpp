#include <doctest.h>

#include <algorithm>

#include "codegraph/analytics.hpp"
#include "codegraph/graph.hpp"
#include "codegraph/witness.hpp"
#include "fixtures.hpp"

using namespace codegraph;

TEST_CASE("the q=2 base pair is the [9,2] pair") {
    auto [x, y] = example2_pair(2);
    CHECK(x.n() == 9);
    CHECK(x.k() == 2);

    auto f = Field::make(2, 1);
    auto [ex, ey] = fixtures::nine_two_pair(f);
    CHECK(x == ex);
    CHECK(y == ey);
}

TEST_CASE("base pair structure for q=3") {
    auto [x, y] = example2_pair(3);
    CHECK(x.n() == 16);  // (q+1)^2
    CHECK(x.k() == 2);
    CHECK(is_nondegenerate(x));
    CHECK(is_nondegenerate(y));
    CHECK(intersection_dim(x, y) == 0);

    // every nonzero vector of X vanishes on a full (q+1)-block, and
    // likewise for Y on a transversal pattern, so no weight-n vector
    CHECK(!has_weight_n_vector(x, y));
    CHECK(!has_weight_n_vector(y, x));
}

TEST_CASE("banded pair for k=3") {
    auto [x, y] = lemma4_pair(2, 3);
    CHECK(x.n() == 21);  // [3]_2 (2+1)
    CHECK(x.k() == 3);
    CHECK(is_nondegenerate(x));
    CHECK(is_nondegenerate(y));
    CHECK(intersection_dim(x, y) == 0);

    DistanceResult r = restricted_distance(x, y);
    CHECK(r.d == 3);
    CHECK(r.dc == 4);
}

TEST_CASE("banded pair delegates to the base pair at k=2") {
    auto [a, b] = lemma4_pair(3, 2);
    auto [x, y] = example2_pair(3);
    CHECK(a == x);
    CHECK(b == y);
}

TEST_CASE("identity padding") {
    auto f = Field::make(2, 1);
    auto [x, y] = fixtures::nine_two_pair(f);

    auto [x0, y0] = lemma6_pad(x, y, 0);
    CHECK(x0 == x);
    CHECK(y0 == y);

    auto [x1, y1] = lemma6_pad(x, y, 1);
    CHECK(x1.n() == 10);
    CHECK(x1.k() == 3);
    CHECK(is_nondegenerate(x1));
    CHECK(is_nondegenerate(y1));
    CHECK(intersection_dim(x1, y1) == 1);
    // the shared vector is the new coordinate
    Vec e10(10, 0);
    e10[9] = 1;
    CHECK(contains_vector(x1, e10));
    CHECK(contains_vector(y1, e10));
}

TEST_CASE("all-ones column extension") {
    auto f = Field::make(2, 1);
    auto [x, y] = fixtures::nine_two_pair(f);

    auto [x9, y9] = ones_extend(x, y, 9);
    CHECK(x9 == x);
    CHECK(y9 == y);

    auto [x10, y10] = ones_extend(x, y, 10);
    CHECK(x10.n() == 10);
    CHECK(x10.k() == 2);
    CHECK(is_nondegenerate(x10));
    CHECK(intersection_dim(x10, y10) == 0);
    DistanceResult r = restricted_distance(x10, y10);
    CHECK(r.d == 2);
    CHECK(r.dc == 3);

    CHECK_THROWS_AS(ones_extend(x, y, 8), std::invalid_argument);
}

TEST_CASE("blocking certificate for the [9,2] pair") {
    auto f = Field::make(2, 1);
    auto [x, y] = fixtures::nine_two_pair(f);

    auto cert = blocking_certificate(x, y);
    REQUIRE(cert);
    CHECK(cert->num_hyperplanes == 3);  // [2]_2
    CHECK(cert->num_lines == 3);        // [2]_2 - [0]_2
    CHECK(cert->entries.size() == 9);

    // locate the hyperplane <v1> and the line u1 in enumeration order
    auto hyps = hyperplanes_of(x);
    Subspace span_v1 = Subspace::from_rows(f, 9, {fixtures::v1});
    std::size_t h = 1 + (std::find(hyps.begin(), hyps.end(), span_v1) - hyps.begin());
    auto lines = lines_of(y);
    std::size_t l = 1 + (std::find(lines.begin(), lines.end(), fixtures::u1) -
                         lines.begin());
    REQUIRE(h <= hyps.size());
    REQUIRE(l <= lines.size());
    // v1 and u1 both vanish on coordinate 1, and it is the smallest such
    CHECK(cert->entries.at({h, l}) == 1);

    CHECK(verify_certificate(x, y, *cert));
}

TEST_CASE("certificate verification catches defects") {
    auto f = Field::make(2, 1);
    auto [x, y] = fixtures::nine_two_pair(f);
    auto cert = blocking_certificate(x, y);
    REQUIRE(cert);

    SUBCASE("perturbed coordinate") {
        BlockingCertificate bad = *cert;
        auto it = bad.entries.begin();
        it->second = it->second == 1 ? 2 : 1;
        std::string defect;
        CHECK(!verify_certificate(x, y, bad, &defect));
        CHECK(!defect.empty());
    }

    SUBCASE("missing entry") {
        BlockingCertificate bad = *cert;
        bad.entries.erase(bad.entries.begin());
        std::string defect;
        CHECK(!verify_certificate(x, y, bad, &defect));
        CHECK(!defect.empty());
    }

    SUBCASE("out-of-range coordinate") {
        BlockingCertificate bad = *cert;
        bad.entries.begin()->second = 10;
        CHECK(!verify_certificate(x, y, bad));
    }
}

TEST_CASE("certificate existence matches reducing-neighbor emptiness") {
    std::mt19937 rng(53);
    auto f = Field::make(2, 1);
    int checked = 0;
    while (checked < 30) {
        Subspace x = fixtures::random_code(f, 9, 2, rng);
        Subspace y = fixtures::random_code(f, 9, 2, rng);
        if (grassmann_distance(x, y) < 2) continue;
        ++checked;
        auto cert = blocking_certificate(x, y);
        bool blocked = reducing_neighbors(x, y).empty();
        CHECK(cert.has_value() == blocked);
        if (cert) CHECK(verify_certificate(x, y, *cert));
    }
}

TEST_CASE("certificate preconditions") {
    auto f = Field::make(2, 1);
    auto [x, y] = fixtures::nine_two_pair(f);
    Subspace adjacent = Subspace::from_rows(
        f, 9, {fixtures::v1, {1, 1, 1, 0, 0, 0, 1, 1, 0}});
    CHECK_THROWS_AS(blocking_certificate(x, adjacent), std::invalid_argument);
}

TEST_CASE("witness construction") {
    for (auto [q, k, m, n] : {std::tuple{2u, 2u, 0u, 9u},
                              {2u, 3u, 1u, 10u},
                              {3u, 2u, 0u, 16u}}) {
        CAPTURE(q);
        CAPTURE(k);
        CAPTURE(m);
        CAPTURE(n);
        WitnessPair w = construct_witness(q, k, m, n);
        CHECK(w.params.n == n);
        CHECK(w.params.k == k);
        CHECK(w.params.q == q);
        CHECK(w.m == m);
        CHECK(w.d == k - m);
        CHECK(intersection_dim(w.x, w.y) == m);
        DistanceResult r = restricted_distance(w.x, w.y);
        CHECK(r.d == k - m);
        CHECK(r.dc == k - m + 1);
        CHECK(verify_certificate(w.x, w.y, w.certificate));
    }
}

TEST_CASE("witness construction rejects bad parameters") {
    CHECK_THROWS_AS(construct_witness(2, 2, 1, 9), std::invalid_argument);
    // below the length bound [k-m]_q (q+1) + m
    CHECK_THROWS_AS(construct_witness(2, 2, 0, 8), std::invalid_argument);
    // below m(n,k)
    CHECK_THROWS_AS(construct_witness(2, 4, 0, 7), std::invalid_argument);
    CHECK_THROWS_AS(construct_witness(6, 2, 0, 50), std::invalid_argument);
}
