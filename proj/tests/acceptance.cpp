// Acceptance suite. Each criterion is its own test suite so the harness
// can run and report them one by one; every case ends with a single
// PASS/FAIL line on stdout.
#include <doctest.h>
#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>

#include "codegraph/analytics.hpp"
#include "codegraph/cli.hpp"
#include "codegraph/graph.hpp"
#include "codegraph/io.hpp"
#include "codegraph/scan.hpp"
#include "codegraph/witness.hpp"
#include "fixtures.hpp"

using namespace codegraph;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    const char* name;
    bool ok = true;
    ~Verdict() { std::cout << name << ": " << (ok ? "PASS" : "FAIL") << std::endl; }
};

#define ACC_CHECK(v, cond)            \
    do {                              \
        bool acc_ok_ = (cond);        \
        (v).ok = (v).ok && acc_ok_;   \
        CHECK(acc_ok_);               \
    } while (0)

std::set<std::size_t> zero_coordinates(const Vec& v) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == 0) out.insert(i + 1);
    return out;
}

}  // namespace

TEST_SUITE("criterion-1") {
    TEST_CASE("the [9,2] pair: witness, distance, three-way verification") {
        Verdict v{"criterion-1"};

        fs::path dir = fs::temp_directory_path() /
                       ("codegraph_acc_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        std::string prefix = (dir / "w").string();

        std::ostringstream out, err;
        ACC_CHECK(v, cli::run({"witness", "2", "2", "0", "9", prefix}, out, err) == 0);

        Subspace x = read_matrix_file(prefix + "_X.mat");
        Subspace y = read_matrix_file(prefix + "_Y.mat");
        auto f = Field::make(2, 1);
        auto [ex, ey] = fixtures::nine_two_pair(f);
        ACC_CHECK(v, x == ex);
        ACC_CHECK(v, y == ey);

        out.str("");
        ACC_CHECK(v, cli::run({"distance", prefix + "_X.mat", prefix + "_Y.mat"},
                              out, err) == 0);
        ACC_CHECK(v, out.str().find("d=2 d_c=3") != std::string::npos);

        // first way: all 9 candidate midpoints H + <u> are degenerate
        auto hyps = hyperplanes_of(x);
        auto lines = lines_of(y);
        ACC_CHECK(v, hyps.size() == 3);
        ACC_CHECK(v, lines.size() == 3);
        std::size_t candidates = 0;
        for (const Subspace& h : hyps) {
            for (const Vec& u : lines) {
                Subspace z = extend(h, u);
                ++candidates;
                ACC_CHECK(v, z.k() == 2);
                ACC_CHECK(v, grassmann_distance(z, y) == 1);
                ACC_CHECK(v, !is_nondegenerate(z));
            }
        }
        ACC_CHECK(v, candidates == 9);
        ACC_CHECK(v, reducing_neighbors(x, y).empty());

        // second way: 9 certificate entries, each the unique coordinate
        // hyperplane containing the hyperplane of X and the line of Y
        auto cert = blocking_certificate(x, y);
        ACC_CHECK(v, cert.has_value());
        if (cert) {
            ACC_CHECK(v, cert->entries.size() == 9);
            ACC_CHECK(v, verify_certificate(x, y, *cert));
            for (std::size_t h = 0; h < hyps.size(); ++h) {
                // the hyperplane is a single line here (k=2)
                Vec hv = lines_of(hyps[h]).at(0);
                for (std::size_t l = 0; l < lines.size(); ++l) {
                    std::set<std::size_t> common;
                    std::ranges::set_intersection(
                        zero_coordinates(hv), zero_coordinates(lines[l]),
                        std::inserter(common, common.begin()));
                    ACC_CHECK(v, common.size() == 1);
                    auto it = cert->entries.find({h + 1, l + 1});
                    ACC_CHECK(v, it != cert->entries.end());
                    if (it != cert->entries.end() && !common.empty())
                        ACC_CHECK(v, it->second == *common.begin());
                }
            }
        }

        // third way: full breadth-first search over the restricted graph
        ACC_CHECK(v, bfs_oracle(x, y) == 3);

        fs::remove_all(dir);
    }
}

TEST_SUITE("criterion-2") {
    TEST_CASE("exhaustive pair scans below and at the length threshold") {
        Verdict v{"criterion-2"};
        for (auto [n, k, q] : {std::tuple{5u, 2u, 2u}, {6u, 2u, 2u}, {7u, 2u, 2u},
                               {8u, 2u, 2u}, {6u, 3u, 2u}, {5u, 2u, 3u}}) {
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(q);
            ScanResult r = scan_theorem1(n, k, q, 1, 10'000'000);
            ACC_CHECK(v, r.predicate);
            ACC_CHECK(v, r.exceptional == 0);
            ACC_CHECK(v, r.consistent);
        }
        ScanResult r9 = scan_theorem1(9, 2, 2, 1, 10'000'000);
        ACC_CHECK(v, !r9.predicate);
        ACC_CHECK(v, r9.exceptional >= 1);
        ACC_CHECK(v, r9.consistent);
    }
}

TEST_SUITE("criterion-3") {
    TEST_CASE("distance sandwich on random non-degenerate pairs") {
        Verdict v{"criterion-3"};
        std::mt19937 rng(20260823);
        std::size_t pairs = 0, violations = 0;
        for (std::uint32_t q : {2u, 3u, 4u}) {
            auto f = make_field_for_q(q);
            for (auto [n, k] : {std::pair<std::size_t, std::size_t>{6, 2},
                                {7, 2},
                                {7, 3},
                                {8, 3}}) {
                for (int trial = 0; trial < 900; ++trial) {
                    Subspace x = fixtures::random_code(f, n, k, rng);
                    Subspace y = fixtures::random_code(f, n, k, rng);
                    ++pairs;
                    DistanceResult r = restricted_distance(x, y);
                    if (!(r.d <= r.dc && r.dc <= r.d + 1)) ++violations;
                    if (has_weight_n_vector(x, y) && r.dc != r.d) ++violations;
                }
            }
        }
        ACC_CHECK(v, pairs >= 10'000);
        ACC_CHECK(v, violations == 0);
    }
}

TEST_SUITE("criterion-4") {
    TEST_CASE("witness suite with independent verification") {
        Verdict v{"criterion-4"};
        for (auto [q, k, m, n] :
             {std::tuple{2u, 2u, 0u, 9u}, {2u, 2u, 0u, 12u}, {3u, 2u, 0u, 16u},
              {2u, 3u, 0u, 21u}, {2u, 3u, 1u, 10u}, {2u, 4u, 2u, 11u},
              {3u, 3u, 1u, 17u}}) {
            CAPTURE(q);
            CAPTURE(k);
            CAPTURE(m);
            CAPTURE(n);
            WitnessPair w = construct_witness(q, k, m, n);
            ACC_CHECK(v, intersection_dim(w.x, w.y) == m);
            DistanceResult r = restricted_distance(w.x, w.y);
            ACC_CHECK(v, r.d == k - m);
            ACC_CHECK(v, r.dc == k - m + 1);
            ACC_CHECK(v, verify_certificate(w.x, w.y, w.certificate));
            if (count_nondegenerate(n, k, q) <= 1'000'000)
                ACC_CHECK(v, bfs_oracle(w.x, w.y) == k - m + 1);
        }
    }
}

TEST_SUITE("criterion-5") {
    TEST_CASE("closed-form counts equal exhaustive enumeration") {
        Verdict v{"criterion-5"};
        for (auto [n, k, q] : {std::tuple{4u, 2u, 2u}, {5u, 2u, 2u}, {6u, 2u, 2u},
                               {7u, 2u, 2u}, {8u, 2u, 2u}, {9u, 2u, 2u},
                               {6u, 3u, 2u}, {5u, 2u, 3u}}) {
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(q);
            ACC_CHECK(v, gaussian_binomial(n, k, q) <= 1'000'000);
            std::size_t total = 0, nondeg = 0;
            enumerate_subspaces(make_field_for_q(q), n, k, [&](const Subspace& s) {
                ++total;
                if (is_nondegenerate(s)) ++nondeg;
            });
            ACC_CHECK(v, gaussian_binomial(n, k, q) == total);
            ACC_CHECK(v, count_nondegenerate(n, k, q) == nondeg);
        }
        // the two published anchors, recomputed above rather than assumed
        ACC_CHECK(v, gaussian_binomial(4, 2, 2) == 35);
        ACC_CHECK(v, count_nondegenerate(4, 2, 2) == 13);
        ACC_CHECK(v, gaussian_binomial(9, 2, 2) == 43435);
    }
}

TEST_SUITE("criterion-6") {
    TEST_CASE("length-bound inequality sweep and its equality case") {
        Verdict v{"criterion-6"};
        for (std::size_t k = 2; k <= 12; ++k)
            for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
                CAPTURE(k);
                CAPTURE(q);
                ACC_CHECK(v, lemma3_check(k, q));
                ACC_CHECK(v, theorem2_bound(k, k - 2, q) ==
                                 BigCount(q + 1) * (q + 1) + k - 2);
            }
    }
}

TEST_SUITE("criterion-7") {
    TEST_CASE("geodesic search equals BFS on every pair") {
        Verdict v{"criterion-7"};
        for (auto [n, k, q] : {std::tuple{5u, 2u, 2u}, {6u, 2u, 2u}, {6u, 3u, 2u},
                               {5u, 2u, 3u}}) {
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(q);
            auto codes = enumerate_nondegenerate(make_field_for_q(q), n, k,
                                                 default_scan_cap);
            std::size_t mismatches = 0;
            for (std::size_t i = 0; i < codes.size(); ++i) {
                auto layers = bfs_distances(codes[i]);
                for (std::size_t j = i + 1; j < codes.size(); ++j)
                    if (restricted_distance(codes[i], codes[j]).dc !=
                        layers.at(codes[j]))
                        ++mismatches;
            }
            ACC_CHECK(v, mismatches == 0);
        }
    }
}

TEST_SUITE("criterion-8") {
    TEST_CASE("certificate presence, neighbor exhaustion and the gap coincide") {
        Verdict v{"criterion-8"};
        std::size_t violations = 0, examined = 0;
        auto check_pair = [&](const Subspace& x, const Subspace& y) {
            if (grassmann_distance(x, y) < 2) return;
            ++examined;
            DistanceResult r = restricted_distance(x, y);
            bool gap = r.dc == r.d + 1;
            bool empty = reducing_neighbors(x, y).empty();
            bool certified = blocking_certificate(x, y).has_value();
            if (certified != empty || empty != gap) ++violations;
        };

        // the grids of criterion 2
        for (auto [n, k, q] : {std::tuple{5u, 2u, 2u}, {6u, 2u, 2u}, {7u, 2u, 2u},
                               {8u, 2u, 2u}, {6u, 3u, 2u}, {5u, 2u, 3u},
                               {9u, 2u, 2u}}) {
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(q);
            auto codes = enumerate_nondegenerate(make_field_for_q(q), n, k,
                                                 default_scan_cap);
            for (std::size_t i = 0; i < codes.size(); ++i)
                for (std::size_t j = i + 1; j < codes.size(); ++j)
                    check_pair(codes[i], codes[j]);
        }

        // the witness pairs of criterion 4
        for (auto [q, k, m, n] :
             {std::tuple{2u, 2u, 0u, 9u}, {2u, 2u, 0u, 12u}, {3u, 2u, 0u, 16u},
              {2u, 3u, 0u, 21u}, {2u, 3u, 1u, 10u}, {2u, 4u, 2u, 11u},
              {3u, 3u, 1u, 17u}}) {
            WitnessPair w = construct_witness(q, k, m, n);
            check_pair(w.x, w.y);
        }

        ACC_CHECK(v, examined > 0);
        ACC_CHECK(v, violations == 0);
    }
}
