#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ksg/constructions.hpp"
#include "ksg/colorer.hpp"
#include "ksg/vecset.hpp"

using namespace ksg;

namespace {

VectorSet std_basis(int d) {
    VectorSet V;
    V.d = d;
    for (int i = 0; i < d; ++i) {
        SVec v(d, Scalar(0));
        v[i] = Scalar(1);
        V.vectors.push_back(v);
    }
    return V;
}

}  // namespace

TEST_CASE("inner products and normalized overlap on the clifton pair") {
    Construction c = build_clifton();
    const auto& v = c.vectors->vectors;
    Scalar ip = inner(v[0], v[7]);
    CHECK(ip.rat() == Rational(-1));
    CHECK(overlap_sq(v[0], v[7]).rat() == Rational(1, 9));  // |<u1|u8>| = 1/3 after normalization
    CHECK(overlap(v[0], v[7]) == doctest::Approx(1.0 / 3).epsilon(1e-18));
    CHECK_THROWS(inner(v[0], SVec{Scalar(1)}));
}

TEST_CASE("orthogonality graph of the standard basis is complete") {
    Graph g = orthogonality_graph(std_basis(3), 0.0L);
    CHECK(g.edges().size() == 3);
    CHECK(maximal_cliques(g).omega == 3);
}

TEST_CASE("gram matrix is symmetric with unit normalized diagonal") {
    Construction c = build_clifton();
    auto G = gram(*c.vectors);
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = 0; j < G.size(); ++j) CHECK((G[i][j] - G[j][i]).is_zero());
    auto N = gram_normalized(*c.vectors);
    for (size_t i = 0; i < N.size(); ++i) CHECK(N[i][i] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("orthogonality graph invariant under ray rescaling") {
    Construction c = build_clifton();
    Graph base = orthogonality_graph(*c.vectors, 0.0L);
    std::mt19937 rng(7);
    VectorSet scaled = *c.vectors;
    for (auto& v : scaled.vectors) {
        long long p = 1 + rng() % 7, q = 1 + rng() % 5;
        Scalar f(Rational(p, q) * Rational(rng() % 2 ? 1 : -1));
        for (auto& x : v) x = x * f;
    }
    CHECK(orthogonality_graph(scaled, 0.0L) == base);
}

TEST_CASE("exact-mode tolerance zero rejects approximate sets") {
    VectorSet V = simplex_frame(3);
    CHECK_THROWS(orthogonality_graph(V, 0.0L));
}

TEST_CASE("serial and parallel orthogonality kernels agree") {
    Construction c40 = build_state_dependent_40();
    Graph a = orthogonality_graph_serial(*c40.vectors);
    Graph b = orthogonality_graph(*c40.vectors, kDefaultOrthTol, true);
    CHECK(a == b);
    // and on a larger synthetic set
    VectorSet big;
    big.d = 3;
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int i = 0; i < 150; ++i) big.vectors.push_back(from_ld({(long double)U(rng), (long double)U(rng), (long double)U(rng)}));
    CHECK(orthogonality_graph_serial(big) == orthogonality_graph(big, kDefaultOrthTol, true));
}

TEST_CASE("check_faithful accepts clifton against its own graph") {
    Construction c = build_clifton();
    FaithfulReport rep = check_faithful(*c.vectors, c.graph);
    CHECK(rep.ok);
}

TEST_CASE("check_faithful reports duplicate rays among non-adjacent vertices") {
    VectorSet V = std_basis(3);
    V.vectors.push_back(V.vectors[0]);  // duplicate of e1, scaled
    for (auto& x : V.vectors[3]) x = x * Scalar(2);
    Graph g = orthogonality_graph(V, 0.0L);
    FaithfulReport rep = check_faithful(V, g);
    CHECK_FALSE(rep.ok);
    bool dup = false;
    for (const auto& v : rep.violations) dup |= v.kind == FaithfulViolation::Kind::DuplicateRay;
    CHECK(dup);
}

TEST_CASE("faithful_version merges repeated rays and is idempotent") {
    VectorSet V = std_basis(3);
    SVec again = V.vectors[1];
    for (auto& x : again) x = x * Scalar(-3);
    V.vectors.push_back(again);
    FaithfulVersion fv = faithful_version(V);
    CHECK(fv.vectors.size() == 3);
    CHECK(fv.merge_map == std::vector<int>{0, 1, 2, 1});
    FaithfulVersion fv2 = faithful_version(fv.vectors);
    CHECK(fv2.vectors.size() == fv.vectors.size());
    for (size_t i = 0; i < fv2.merge_map.size(); ++i) CHECK(fv2.merge_map[i] == static_cast<int>(i));
    // clifton has all rays distinct
    CHECK(faithful_version(*build_clifton().vectors).vectors.size() == 8);
}

TEST_CASE("simplex frames: pairwise product -1/d and resolution of identity") {
    for (int d = 2; d <= 10; ++d) {
        VectorSet V = simplex_frame(d);
        REQUIRE(V.size() == d + 1);
        for (int i = 0; i <= d; ++i) {
            CHECK(norm_sq(V.vectors[i]).to_long_double() == doctest::Approx(1.0).epsilon(1e-15));
            for (int j = i + 1; j <= d; ++j)
                CHECK(inner(V.vectors[i], V.vectors[j]).to_long_double() ==
                      doctest::Approx(-1.0L / d).epsilon(1e-15));
        }
        CHECK(simplex_frame_residual(V) <= 1e-12L);
    }
}

TEST_CASE("overlap lift: clifton from 1/3 to 1/5 lands in dimension 4 exactly") {
    Construction c = build_clifton();
    VectorSet lifted = pad_overlap_lift(*c.vectors, 0, 7, Scalar(Rational(1, 5)));
    REQUIRE(lifted.size() == 9);
    REQUIRE(lifted.d == 4);
    // achieved overlap exactly 1/5: tilt was x = 4/3 in the unit frame
    CHECK(overlap_sq(lifted.vectors[0], lifted.vectors[7]).rat() == Rational(1, 25));
    // new vector orthogonal to everything except the tilted v1
    for (int i = 1; i < 8; ++i) CHECK(inner(lifted.vectors[8], lifted.vectors[i]).is_zero());
    CHECK_FALSE(inner(lifted.vectors[8], lifted.vectors[0]).is_zero());
    // gadget property survives the lift
    Graph g = orthogonality_graph(lifted, 0.0L);
    CHECK(maximal_cliques(g).omega == 4);
    CHECK(is_gadget(g, 0, 7).is_gadget());
}

TEST_CASE("overlap lift edge cases") {
    Construction c = build_clifton();
    // target equal to the current overlap embeds trivially (x = 0)
    VectorSet same = pad_overlap_lift(*c.vectors, 0, 7, Scalar(Rational(1, 3)));
    CHECK(overlap_sq(same.vectors[0], same.vectors[7]).rat() == Rational(1, 9));
    CHECK(inner(same.vectors[0], same.vectors[8]).is_zero());
    CHECK_THROWS(pad_overlap_lift(*c.vectors, 0, 7, Scalar(Rational(1, 2))));
    CHECK_THROWS(pad_overlap_lift(*c.vectors, 0, 7, Scalar(0)));
}

TEST_CASE("apply_linear_map and embed_dim") {
    VectorSet V = std_basis(3);
    std::vector<SVec> I(3, SVec(3, Scalar(0)));
    for (int i = 0; i < 3; ++i) I[i][i] = Scalar(1);
    VectorSet W = apply_linear_map(V, I);
    for (int i = 0; i < 3; ++i)
        CHECK(rays_equal(W.vectors[i], V.vectors[i]));
    VectorSet E = embed_dim(V, 5);
    CHECK(E.d == 5);
    CHECK(E.vectors[0].size() == 5);
    CHECK(E.vectors[0][4].is_zero());
    CHECK_THROWS(embed_dim(V, 2));
}

TEST_CASE("ray canonicalization: positive lead, primitive integers in exact mode") {
    VectorSet V;
    V.d = 3;
    V.vectors.push_back({Scalar(Rational(-2, 3)), Scalar(Rational(4, 3)), Scalar(0)});
    VectorSet C = ray_canonicalize(V);
    CHECK(C.vectors[0][0].rat() == Rational(1));
    CHECK(C.vectors[0][1].rat() == Rational(-2));
}
