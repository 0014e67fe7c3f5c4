#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace subres;
using test_helpers::poly;
using test_helpers::rat;
using test_helpers::roots;

TEST_CASE("admissibility gate") {
    REQUIRE(admissible(2, 2, 0));
    REQUIRE(admissible(2, 2, 1));
    REQUIRE_FALSE(admissible(2, 2, 2));
    REQUIRE(admissible(3, 2, 2));
    REQUIRE_FALSE(admissible(3, 2, 3));
    REQUIRE_FALSE(admissible(2, 2, -1));
    REQUIRE_FALSE(admissible(-1, 2, 0));
    REQUIRE(admissible(0, 2, 0));

    REQUIRE_THROWS_WITH(require_admissible(2, 2, 2), "d=2 inadmissible: m=n");
    REQUIRE_THROWS_WITH(require_admissible(3, 2, 5), "d=5 inadmissible: exceeds min(m,n)=2");
    REQUIRE_THROWS_WITH(require_admissible(2, 2, -1), "d=-1 inadmissible: negative");
    REQUIRE_THROWS_WITH(require_admissible(-1, 2, 0), "d=0 inadmissible: zero polynomial");

    REQUIRE(admissible_degrees(3, 2) == std::vector<int>{0, 1, 2});
    REQUIRE(admissible_degrees(2, 2) == std::vector<int>{0, 1});
    REQUIRE(admissible_degrees(-1, 2).empty());
}

TEST_CASE("subset splits") {
    const auto one = subsets(roots({0, 1}), 1);
    REQUIRE(one.size() == 2);
    REQUIRE(one[0].chosen == roots({0}));
    REQUIRE(one[0].complement == roots({1}));
    REQUIRE(one[0].positions == IndexList{1});
    REQUIRE(one[1].chosen == roots({1}));
    REQUIRE(one[1].complement == roots({0}));
    REQUIRE(one[1].positions == IndexList{2});

    const auto none = subsets(roots({0, 1}), 0);
    REQUIRE(none.size() == 1);
    REQUIRE(none[0].chosen.empty());
    REQUIRE(none[0].complement == roots({0, 1}));

    REQUIRE(subsets(roots({0, 1, 2, 3}), 2).size() == 6);
    REQUIRE_THROWS_AS(subsets(roots({0, 1}), 3), std::invalid_argument);
    REQUIRE_THROWS_AS(subsets(roots({0, 1}), -1), std::invalid_argument);

    SECTION("splits preserve order and reassemble the parent") {
        const RootList parent = roots({5, -3, 7, 0});
        for (int k = 0; k <= parent.size(); ++k) {
            for (const auto& split : subsets(parent, k)) {
                std::vector<Rational> rebuilt(static_cast<size_t>(parent.size()));
                std::vector<bool> taken(static_cast<size_t>(parent.size()), false);
                for (size_t c = 0; c < split.positions.size(); ++c) {
                    rebuilt[static_cast<size_t>(split.positions[c] - 1)] = split.chosen[static_cast<int>(c)];
                    taken[static_cast<size_t>(split.positions[c] - 1)] = true;
                }
                int used = 0;
                for (int i = 0; i < parent.size(); ++i)
                    if (!taken[static_cast<size_t>(i)]) rebuilt[static_cast<size_t>(i)] = split.complement[used++];
                REQUIRE(RootList(rebuilt) == parent);
            }
        }
    }

    SECTION("index list parents") {
        const auto splits = subsets(IndexList{0, 1, 2}, 2);
        REQUIRE(splits.size() == 3);
        REQUIRE(splits[0].chosen == IndexList{0, 1});
        REQUIRE(splits[0].complement == IndexList{2});
        REQUIRE(splits[2].positions == IndexList{2, 3});
    }
}

TEST_CASE("sublist parity sign") {
    REQUIRE(sg_sublist({1, 2, 3}, 5) == 1);
    REQUIRE(sg_sublist({}, 4) == 1);
    REQUIRE(sg_sublist({2}, 2) == -1);
    REQUIRE(sg_sublist({2, 4}, 4) == -1);
    REQUIRE_THROWS_AS(sg_sublist({2, 1}, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(sg_sublist({0}, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(sg_sublist({4}, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(sg_sublist({1, 1}, 3), std::invalid_argument);
}

TEST_CASE("defining determinant route") {
    const Poly f = poly({0, -1, 1});   // x(x-1)
    const Poly g = poly({6, -5, 1});   // (x-2)(x-3)
    REQUIRE(sres_def(f, g, 1) == poly({6, -4}));
    REQUIRE(sres_def(f, g, 0) == poly({12}));
    REQUIRE(sres_def(poly({2, -3, 1}), poly({-3, 1}), 0) == poly({2}));
    REQUIRE_THROWS_AS(sres_def(f, g, 2), std::invalid_argument);

    SECTION("defining matrix layout at d = 1") {
        REQUIRE(sres_def_matrix(f, g, 1) ==
                DMatrix<Poly>::from_rows({{Poly(1l), f}, {Poly(1l), g}}));
    }
    SECTION("bareiss and laplace agree on the defining matrix") {
        for (int d : {0, 1})
            REQUIRE(det_laplace(sres_def_matrix(f, g, d)) == sres_def(f, g, d));
    }
    SECTION("degree-gap endpoint gives back the smaller polynomial") {
        const Poly h = poly({-5, 1});  // x - 5, m = 1 < n = 2
        REQUIRE(sres_def(h, g, 1) == h);
    }
    SECTION("constant against a polynomial") {
        REQUIRE(sres_def(poly({5}), g, 0) == poly({25}));
    }
}

TEST_CASE("subresultant chain") {
    const Poly f = poly({0, -1, 1});
    const Poly g = poly({6, -5, 1});
    const auto chain = sres_chain(f, g);
    REQUIRE(chain.size() == 2);
    REQUIRE(chain.at(0) == poly({12}));
    REQUIRE(chain.at(1) == poly({6, -4}));

    SplitMix64 rng(41);
    const auto c32 = sres_chain(random_poly(rng, 3, 5), random_poly(rng, 2, 5));
    REQUIRE(c32.size() == 3);
    REQUIRE(c32.count(2) == 1);
    const auto c22 = sres_chain(random_poly(rng, 2, 5), random_poly(rng, 2, 5));
    REQUIRE(c22.size() == 2);
    REQUIRE_THROWS_AS(sres_chain(Poly(), poly({1, 1})), std::invalid_argument);
}

TEST_CASE("chain of a non-monic degree-gap pair") {
    // expected values computed independently (resultant + subresultant
    // remainder sequence in a separate CAS)
    const Poly f = poly({2, 0, 0, -1, 0, 3});  // 3x^5 - x^3 + 2
    const Poly g = poly({1, 4, 0, -2});        // -2x^3 + 4x + 1
    const auto chain = sres_chain(f, g);
    REQUIRE(chain.size() == 4);
    REQUIRE(chain.at(0) == poly({-8633}));
    REQUIRE(chain.at(1) == poly({702, 1420}));
    REQUIRE(chain.at(2) == poly({36, 80, 12}));
    REQUIRE(chain.at(3) == poly({-2, -8, 0, 4}));  // lc(g)^{m-d-1} g at the endpoint
}

TEST_CASE("block stack route") {
    const Poly f = poly({0, -1, 1});
    const Poly g = poly({6, -5, 1});
    REQUIRE(sres_sd(f, g, 1) == poly({6, -4}));
    REQUIRE(sres_sd(f, g, 0) == poly({12}));
    REQUIRE(det_bareiss(build_sd(f, g, 1)) == poly({6, -4}));  // sign exponent is even here
    REQUIRE_THROWS_AS(sres_sd(poly({0, -2, 2}), g, 1), std::invalid_argument);

    SplitMix64 rng(43);
    for (int i = 0; i < 15; ++i) {
        const RootList a = random_roots(rng, static_cast<int>(rng.range(1, 4)), 8);
        const RootList b = random_roots(rng, static_cast<int>(rng.range(1, 4)), 8);
        const Poly fa = poly_from_roots(a), gb = poly_from_roots(b);
        for (int d : admissible_degrees(a.size(), b.size()))
            REQUIRE(sres_sd(fa, gb, d) == sres_def(fa, gb, d));
    }
}

TEST_CASE("root-evaluation route") {
    const RootList a = roots({0, 1}), b = roots({2, 3});
    REQUIRE(sres_hong(a, b, 1) == poly({6, -4}));
    REQUIRE(sres_hong(a, b, 0) == poly({12}));

    SplitMix64 rng(47);
    for (int i = 0; i < 15; ++i) {
        const RootList ra = random_roots(rng, static_cast<int>(rng.range(1, 4)), 8);
        const RootList rb = random_roots(rng, static_cast<int>(rng.range(1, 4)), 8);
        REQUIRE(sres_hong(ra, rb, 0) == Poly(poisson_resultant(ra, rb)));
    }
}

TEST_CASE("partitioned block determinant route") {
    const RootList a = roots({0, 1}), b = roots({2, 3});
    REQUIRE(lemma3_rhs(a, b, {0}, {}) == poly({6, -4}));
    REQUIRE(lemma3_rhs(a, b, {}, {0}) == poly({6, -4}));
    REQUIRE(lemma3_rhs(a, b, {}, {}) == poly({12}));

    SECTION("malformed partitions are rejected") {
        REQUIRE_THROWS_AS(lemma3_rhs(a, b, {0}, {0}), std::invalid_argument);
        REQUIRE_THROWS_AS(lemma3_rhs(a, b, {1}, {}), std::invalid_argument);
        REQUIRE_THROWS_AS(lemma3_rhs(a, b, {1, 0}, {}), std::invalid_argument);
        REQUIRE_THROWS_AS(lemma3_rhs(a, b, {-1, 0}, {}), std::invalid_argument);
    }

    SECTION("full-front partition matches the single-sum intermediate determinant") {
        SplitMix64 rng(53);
        for (int i = 0; i < 10; ++i) {
            const RootList ra = random_roots(rng, static_cast<int>(rng.range(1, 4)), 8);
            const RootList rb = random_roots(rng, static_cast<int>(rng.range(1, 4)), 8);
            const int m = ra.size(), n = rb.size();
            for (int d : admissible_degrees(m, n)) {
                const IndexList full = iota_list(m + n - d);
                const auto mat = vstack(
                    hstack(bracket(x_minus_t, ra, iota_list(d)), DMatrix<Poly>(d, n)),
                    hstack(to_poly(bracket(Poly(1l), ra, full)), to_poly(bracket(Poly(1l), rb, full))));
                Poly det = det_bareiss(mat);
                if ((static_cast<long>(m - d) * n) % 2 != 0) det = -det;
                const Poly expected =
                    det * (Rational(1) / (vandermonde_det(ra) * vandermonde_det(rb)));
                REQUIRE(lemma3_rhs(ra, rb, iota_list(d), {}) == expected);
                REQUIRE(expected == sres_def(poly_from_roots(ra), poly_from_roots(rb), d));
            }
        }
    }
}

TEST_CASE("single sum route") {
    const RootList a = roots({0, 1}), b = roots({2, 3});
    REQUIRE(single_sum(a, b, 1) == poly({6, -4}));
    REQUIRE(single_sum(a, b, 0) == poly({12}));
    REQUIRE(single_sum(roots({5}), roots({7}), 0) == poly({-2}));
    REQUIRE_THROWS_AS(single_sum(a, b, 2), std::invalid_argument);
}

TEST_CASE("double sum") {
    const RootList a = roots({0, 1}), b = roots({2, 3});
    REQUIRE(double_sum(a, b, 0, 1) == poly({6, -4}));
    REQUIRE(double_sum(a, b, 1, 0) == poly({-6, 4}));
    REQUIRE(double_sum(a, b, 0, 0) == poly({12}));
    REQUIRE_THROWS_AS(double_sum(a, b, 3, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(double_sum(a, b, 0, -1), std::invalid_argument);
    // defined even when p + q is not an admissible index
    REQUIRE_NOTHROW(double_sum(a, b, 2, 2));
}

TEST_CASE("scaled double sum route") {
    const RootList a = roots({0, 1}), b = roots({2, 3});
    REQUIRE(sres_sylvester(a, b, 0, 1) == poly({6, -4}));
    REQUIRE(sres_sylvester(a, b, 1, 0) == poly({6, -4}));
    REQUIRE(sres_sylvester(a, b, 0, 0) == poly({12}));
    REQUIRE_THROWS_AS(sres_sylvester(a, b, 1, 1), std::invalid_argument);

    SECTION("the split of d is immaterial") {
        SplitMix64 rng(59);
        for (int i = 0; i < 10; ++i) {
            const RootList ra = random_roots(rng, static_cast<int>(rng.range(1, 5)), 8);
            const RootList rb = random_roots(rng, static_cast<int>(rng.range(1, 5)), 8);
            for (int d : admissible_degrees(ra.size(), rb.size())) {
                const Poly first = sres_sylvester(ra, rb, 0, d);
                for (int p = 1; p <= d; ++p) REQUIRE(sres_sylvester(ra, rb, p, d - p) == first);
            }
        }
    }
}

TEST_CASE("poisson product") {
    REQUIRE(poisson_resultant(roots({0, 1}), roots({2, 3})) == rat(12));
    REQUIRE(poisson_resultant(roots({1, 2}), roots({3})) == rat(2));
    REQUIRE(poisson_resultant(RootList(), roots({4, 5})) == rat(1));
}

TEST_CASE("route agreement on random instances") {
    SplitMix64 rng(61);
    for (int i = 0; i < 10; ++i) {
        const RootList a = random_roots(rng, static_cast<int>(rng.range(1, 4)), 8);
        const RootList b = random_roots(rng, static_cast<int>(rng.range(1, 4)), 8);
        for (const auto& check : five_way_results(a, b)) {
            INFO(check.name << ": " << check.detail);
            REQUIRE(check.pass);
        }
    }
}

TEST_CASE("degree bound holds for non-monic inputs") {
    SplitMix64 rng(67);
    for (int i = 0; i < 20; ++i) {
        const Poly f = random_poly(rng, static_cast<int>(rng.range(1, 4)), 6);
        const Poly g = random_poly(rng, static_cast<int>(rng.range(1, 4)), 6);
        for (int d : admissible_degrees(f.degree(), g.degree()))
            REQUIRE(sres_def(f, g, d).degree() <= d);
    }
}
