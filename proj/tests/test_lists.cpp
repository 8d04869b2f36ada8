#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "bipcolor/lists.hpp"
#include "bipcolor/rng.hpp"

using namespace bipcolor;

namespace {

// Intersection size via std::set_intersection, independent of the merge in
// shared_count.
int intersect_oracle(const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> both;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                          std::back_inserter(both));
    return static_cast<int>(both.size());
}

ListAssignment identical_lists(const BipartiteGraph& g, int k) {
    std::vector<int> base(k);
    for (int i = 0; i < k; ++i) base[i] = i + 1;
    return make_assignment(k, std::vector<std::vector<int>>(g.a_size(), base),
                           std::vector<std::vector<int>>(g.b_size(), base));
}

}  // namespace

TEST_CASE("index_of: 1-based position or absent") {
    auto g = build_graph(1, 0, {});
    auto lists = make_assignment(3, {{3, 7, 9}}, {});
    CHECK(index_of(lists, Vertex::a(0), 7) == 2);
    CHECK(index_of(lists, Vertex::a(0), 3) == 1);
    CHECK(index_of(lists, Vertex::a(0), 9) == 3);
    CHECK(!index_of(lists, Vertex::a(0), 4));
    (void)g;
}

TEST_CASE("make_assignment rejects malformed lists") {
    CHECK_THROWS_AS(make_assignment(3, {{1, 2}}, {}), IndexOutOfRange);
    CHECK_THROWS_AS(make_assignment(3, {{1, 2, 2}}, {}), IndexOutOfRange);
    CHECK_THROWS_AS(make_assignment(2, {}, {{5, 3}}), IndexOutOfRange);
}

TEST_CASE("shared_count: direct examples and symmetry") {
    auto lists = make_assignment(4, {{1, 2, 3, 4}, {5, 6, 7, 8}}, {{3, 4, 5, 6}});
    CHECK(shared_count(lists, Vertex::a(0), Vertex::b(0)) == 2);
    CHECK(shared_count(lists, Vertex::a(1), Vertex::b(0)) == 2);
    CHECK(shared_count(lists, Vertex::a(0), Vertex::a(0)) == 4);
    CHECK(shared_count(lists, Vertex::a(0), Vertex::a(1)) == 0);

    auto g = gen_regular_bipartite(10, 4, 3);
    auto rnd = gen_lists(g, 5, 15, ListMode::independent_uniform, 11);
    for (int v = 0; v < 10; ++v) {
        for (int w = 0; w < 10; ++w) {
            CHECK(shared_count(rnd, Vertex::a(v), Vertex::b(w)) ==
                  shared_count(rnd, Vertex::b(w), Vertex::a(v)));
        }
    }
}

TEST_CASE("weight: trivial values and part check") {
    auto g = build_graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    const int k = 6;
    auto same = identical_lists(g, k);
    CHECK(weight(same, g, Vertex::b(0)) == 2 * k);
    CHECK(weight_stats(same, g, Vertex::b(0)).z == doctest::Approx(1.0));

    auto disjoint = make_assignment(2, {{1, 2}, {3, 4}}, {{5, 6}, {7, 8}});
    CHECK(weight(disjoint, g, Vertex::b(1)) == 0);

    CHECK_THROWS_AS(weight(same, g, Vertex::a(0)), WrongPart);
    CHECK_THROWS_AS(weight_stats(same, g, Vertex::a(0)), WrongPart);
}

TEST_CASE("weight equals pairwise intersection oracle") {
    auto g = gen_regular_bipartite(12, 5, 21);
    auto lists = gen_lists(g, 6, 20, ListMode::independent_uniform, 22);
    for (int w = 0; w < g.b_size(); ++w) {
        long long expect = 0;
        for (int v : g.neighbors(Vertex::b(w))) {
            expect += intersect_oracle(lists.lists_a[v], lists.lists_b[w]);
        }
        const long long z = weight(lists, g, Vertex::b(w));
        CHECK(z == expect);
        CHECK(z <= static_cast<long long>(g.delta) * lists.k);
    }
}

TEST_CASE("weight_stats: all overlaps full") {
    auto g = build_graph(3, 1, {{0, 0}, {1, 0}, {2, 0}});
    const int k = 20;  // divisible by 10
    auto same = identical_lists(g, k);
    auto st = weight_stats(same, g, Vertex::b(0));
    CHECK(st.y == doctest::Approx(1.0));
    CHECK(st.alpha == doctest::Approx(0.1));  // every ell - 9k/10 = k/10
    CHECK(st.n_dprime.empty());
    CHECK(st.big_z == 3 * k);
}

TEST_CASE("weight_stats: all overlaps at or below the threshold") {
    auto g = build_graph(2, 1, {{0, 0}, {1, 0}});
    auto lists = make_assignment(10, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                                      {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}},
                                 {{2, 3, 4, 5, 6, 7, 8, 9, 10, 11}});
    // ell = 9 = floor(9k/10) exactly: not above, so n_prime empty.
    auto st = weight_stats(lists, g, Vertex::b(0));
    CHECK(st.y == 0.0);
    CHECK(st.alpha == 0.0);
    CHECK(st.n_prime.empty());
    CHECK(st.n_dprime.size() == 2);
    CHECK(st.ell_bar == doctest::Approx(9.0));
}

TEST_CASE("weight_stats: exact identities on random instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = gen_regular_bipartite(8, 4, 100 + seed);
        const int k = 10;
        auto lists = gen_lists(g, k, 13, ListMode::independent_uniform, 200 + seed);
        const int delta = g.delta;
        for (int w = 0; w < g.b_size(); ++w) {
            auto st = weight_stats(lists, g, Vertex::b(w));
            long long sum_prime = 0, sum_dprime = 0;
            const int threshold = (9 * k) / 10;
            for (auto [v, ell] : st.shared) {
                (ell > threshold ? sum_prime : sum_dprime) += ell;
            }
            const long long np = static_cast<long long>(st.n_prime.size());

            // sum over n_dprime = (z - y (alpha + 9/10)) k delta, exactly.
            CHECK(sum_dprime == st.big_z - sum_prime);
            CHECK(st.z == doctest::Approx(static_cast<double>(st.big_z) / (delta * k))
                              .epsilon(1e-15));
            if (np > 0) {
                // 10 z >= 9 y in scaled integers: 10 Z >= 9 k |n_prime|.
                CHECK(10 * st.big_z >= 9 * static_cast<long long>(k) * np);
                CHECK(st.alpha ==
                      doctest::Approx(static_cast<double>(10 * sum_prime - 9 * k * np) /
                                      static_cast<double>(10 * k * np)));
                CHECK(st.alpha >= 0.0);
                CHECK(st.alpha <= 0.1 + 1e-15);
            } else {
                CHECK(st.alpha == 0.0);
            }
            if (st.y < 1.0) {
                const double formula_ell_bar =
                    k * (st.z - (0.9 + st.alpha) * st.y) / (1.0 - st.y);
                CHECK(st.ell_bar == doctest::Approx(formula_ell_bar).epsilon(1e-12));
            }
            const double identity_rhs = (st.z - st.y * (st.alpha + 0.9)) * k * delta;
            CHECK(static_cast<double>(sum_dprime) ==
                  doctest::Approx(identity_rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("gen_lists: pool == k forces {1..k}") {
    auto g = build_graph(2, 2, {{0, 0}, {1, 1}});
    auto lists = gen_lists(g, 5, 5, ListMode::independent_uniform, 3);
    const std::vector<int> expect{1, 2, 3, 4, 5};
    for (const auto& l : lists.lists_a) CHECK(l == expect);
    for (const auto& l : lists.lists_b) CHECK(l == expect);
    CHECK_THROWS_AS(gen_lists(g, 5, 4, ListMode::independent_uniform, 3), PoolTooSmall);
}

TEST_CASE("gen_lists: independent-uniform overlap matches hypergeometric mean") {
    auto g = gen_regular_bipartite(30, 6, 51);
    const int k = 10, pool = 1000;
    auto lists = gen_lists(g, k, pool, ListMode::independent_uniform, 52);
    double total = 0.0;
    long long edges = 0;
    for (int w = 0; w < g.b_size(); ++w) {
        for (int v : g.neighbors(Vertex::b(w))) {
            total += shared_count(lists, Vertex::a(v), Vertex::b(w));
            ++edges;
        }
    }
    const double mean = total / static_cast<double>(edges);
    const double expect = static_cast<double>(k) * k / pool;
    const double se = std::sqrt(expect / static_cast<double>(edges));
    CHECK(std::abs(mean - expect) <= 3.0 * se);
}

TEST_CASE("gen_lists: planted overlap lands near theta") {
    auto g = gen_regular_bipartite(40, 8, 61);
    const int k = 20, pool = 200;
    auto lists = gen_lists(g, k, pool, ListMode::planted_overlap, 62, 0.9);
    double total = 0.0;
    long long edges = 0;
    for (int w = 0; w < g.b_size(); ++w) {
        for (int v : g.neighbors(Vertex::b(w))) {
            total += shared_count(lists, Vertex::a(v), Vertex::b(w));
            ++edges;
        }
    }
    const double mean_frac = total / static_cast<double>(edges) / k;
    CHECK(std::abs(mean_frac - 0.9) <= 0.05);
}

TEST_CASE("Jensen corollary for h(x) = x(x+1)/2") {
    auto eng = rng::make_engine(99);
    auto h = [](double x) { return 0.5 * x * (x + 1.0); };
    for (int trial = 0; trial < 1000; ++trial) {
        const int t = 1 + static_cast<int>(rng::uniform_below(eng, 12));
        double sum = 0.0, sum_h = 0.0;
        for (int i = 0; i < t; ++i) {
            const auto x = static_cast<double>(rng::uniform_below(eng, 50));
            sum += x;
            sum_h += h(x);
        }
        CHECK(sum_h >= t * h(sum / t) - 1e-9);
    }
}

TEST_CASE("list file format round-trips and rejects malformed rows") {
    auto g = gen_regular_bipartite(6, 3, 71);
    auto lists = gen_lists(g, 4, 12, ListMode::independent_uniform, 72);
    std::ostringstream out;
    save_lists(lists, out);
    std::istringstream in(out.str());
    auto again = load_lists(in, g.a_size(), g.b_size());
    CHECK(again.k == lists.k);
    CHECK(again.lists_a == lists.lists_a);
    CHECK(again.lists_b == lists.lists_b);

    std::istringstream bad("lists 2 2\n1 2\n3 3\n");
    CHECK_THROWS_WITH_AS(load_lists(bad, 1, 1), doctest::Contains("line 3"), IoFailure);
    std::istringstream short_file("lists 2 2\n1 2\n");
    CHECK_THROWS_AS(load_lists(short_file, 1, 1), IoFailure);
    std::istringstream bad_count("lists 5 2\n1 2\n1 2\n");
    CHECK_THROWS_AS(load_lists(bad_count, 1, 1), IoFailure);
}

TEST_CASE("stats CSV has the documented shape") {
    auto g = build_graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    auto lists = identical_lists(g, 10);
    std::ostringstream out;
    write_stats_csv(lists, g, out);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "w,Z,z,y,alpha,ell_bar");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == g.b_size());
}
