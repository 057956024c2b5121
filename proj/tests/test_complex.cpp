#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace surftopo;

namespace {

SurfaceComplex tetrahedron() {
  return SurfaceComplex::from_triples({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const TopologyError& e) {
    return e.code();
  }
  FAIL("expected a TopologyError");
  return Errc::syntax_error;
}

}  // namespace

TEST_CASE("build_complex derives faces", "[complex]") {
  const auto c = tetrahedron();
  CHECK(f_vector(c) == FVector{4, 6, 4});

  const auto single = SurfaceComplex::from_triples({{2, 0, 1}});
  CHECK(f_vector(single) == FVector{3, 3, 1});
  CHECK(single.triangles().front() == Triangle{{0, 1, 2}});
  CHECK(single.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("build_complex rejects bad input", "[complex]") {
  CHECK(error_of([] { SurfaceComplex::from_triples({{0, 1, 1}}); }) == Errc::degenerate_triangle);
  CHECK(error_of([] { SurfaceComplex::from_triples({{0, 1, 2}, {2, 1, 0}}); }) ==
        Errc::duplicate_triangle);
  CHECK(error_of([] { SurfaceComplex(std::vector<Triangle>{}); }) == Errc::empty_input);
}

TEST_CASE("vertex ids need not be contiguous", "[complex]") {
  const auto c = SurfaceComplex::from_triples({{7, 100, 3}, {3, 7, 4000000000u}});
  CHECK(c.vertices() == std::vector<VertexId>{3, 7, 100, 4000000000u});
  CHECK(f_vector(c) == FVector{4, 5, 2});
}

TEST_CASE("Euler characteristic of the standard examples", "[complex]") {
  CHECK(euler_characteristic(tetrahedron()) == 2);
  const auto torus = gen_standard(StandardSurface::torus);
  CHECK(f_vector(torus) == FVector{9, 27, 18});
  CHECK(euler_characteristic(torus) == 0);
  const auto rp2 = gen_standard(StandardSurface::projective_plane);
  CHECK(f_vector(rp2) == FVector{6, 15, 10});
  CHECK(euler_characteristic(rp2) == 1);
}

TEST_CASE("subdivision of one triangle, enumerated by hand", "[complex]") {
  // Edges (0,1),(0,2),(1,2) -> 3,4,5; barycenter -> 6.
  const auto expected = SurfaceComplex::from_triples(
      {{0, 3, 6}, {1, 3, 6}, {0, 4, 6}, {2, 4, 6}, {1, 5, 6}, {2, 5, 6}});
  const auto sub = barycentric_subdivision(SurfaceComplex::from_triples({{0, 1, 2}}));
  CHECK(sub == expected);
  CHECK(f_vector(sub) == FVector{7, 12, 6});
}

TEST_CASE("subdivision ids follow edge order then triangle order", "[complex]") {
  const auto c = SurfaceComplex::from_triples({{10, 20, 30}, {10, 20, 40}});
  Subdivision sd(c);
  // Edges: (10,20) (10,30) (10,40) (20,30) (20,40) -> 41..45; triangles -> 46, 47.
  CHECK(sd.edge_vertex(Edge{10, 20}) == 41);
  CHECK(sd.edge_vertex(Edge{20, 40}) == 45);
  CHECK(sd.triangle_vertex(Triangle{{10, 20, 30}}) == 46);
  CHECK(sd.triangle_vertex(Triangle{{10, 20, 40}}) == 47);
  CHECK(sd.complex().max_vertex() == 47);
}

TEST_CASE("subdivision of the torus", "[complex]") {
  const auto sub = barycentric_subdivision(gen_standard(StandardSurface::torus));
  CHECK(f_vector(sub) == FVector{9 + 27 + 18, 2 * 27 + 6 * 18, 6 * 18});
  CHECK(f_vector(sub) == FVector{54, 162, 108});
  CHECK(euler_characteristic(sub) == 0);
  CHECK(euler_characteristic(barycentric_subdivision(tetrahedron())) == 2);
}

TEST_CASE("subdivision count laws and chi invariance on random complexes", "[complex][property]") {
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto c = testing::random_complex(rng);
    const auto f = f_vector(c);
    const auto sub = barycentric_subdivision(c);
    CHECK(f_vector(sub) ==
          FVector{f.vertices + f.edges + f.triangles, 2 * f.edges + 6 * f.triangles, 6 * f.triangles});
    CHECK(euler_characteristic(sub) == euler_characteristic(c));
    CHECK(euler_characteristic(testing::random_relabel(c, rng)) == euler_characteristic(c));
  }
}

TEST_CASE("face closure holds", "[complex][property]") {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto c = testing::random_complex(rng);
    for (std::size_t t = 0; t < c.triangles().size(); ++t) {
      for (const auto& e : c.triangles()[t].edges()) {
        const auto ei = c.edge_index(e);
        REQUIRE(ei);
        const auto on = c.triangles_on_edge(*ei);
        CHECK(std::find(on.begin(), on.end(), t) != on.end());
        CHECK(c.has_vertex(e.first));
        CHECK(c.has_vertex(e.second));
      }
    }
  }
}

TEST_CASE("star", "[complex]") {
  const auto c = tetrahedron();
  CHECK(star(c, 0).triangles() ==
        std::vector<Triangle>{{{0, 1, 2}}, {{0, 1, 3}}, {{0, 2, 3}}});
  const auto single = SurfaceComplex::from_triples({{0, 1, 2}});
  CHECK(star(single, 2) == single);
  CHECK(error_of([&] { star(c, 9); }) == Errc::unknown_vertex);

  const auto torus = gen_standard(StandardSurface::torus);
  for (VertexId v : torus.vertices()) {
    std::size_t by_scan = 0;
    for (const auto& t : torus.triangles()) by_scan += t.contains(v) ? 1 : 0;
    CHECK(by_scan == 6);
    CHECK(star(torus, v).triangles().size() == 6);
  }
}

TEST_CASE("link", "[complex]") {
  CHECK(link(tetrahedron(), 0) == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(link(SurfaceComplex::from_triples({{0, 1, 2}}), 0) == std::vector<Edge>{{1, 2}});
  const auto mobius = gen_standard(StandardSurface::mobius);
  CHECK(link(mobius, 3) == std::vector<Edge>{{1, 2}, {2, 4}, {4, 5}});
  CHECK(error_of([&] { link(mobius, 0); }) == Errc::unknown_vertex);
}

TEST_CASE("link is the opposite edges of the star", "[complex][property]") {
  std::mt19937 rng(99);
  for (int i = 0; i < 50; ++i) {
    const auto c = testing::random_complex(rng);
    for (VertexId v : c.vertices()) {
      std::vector<Edge> from_star;
      const auto st = star(c, v);
      for (const auto& t : st.triangles()) from_star.push_back(t.opposite(v));
      std::sort(from_star.begin(), from_star.end());
      CHECK(link(c, v) == from_star);
    }
  }
}

TEST_CASE("relabel and shift", "[complex]") {
  const auto c = tetrahedron();
  CHECK(shift_ids(c, 100).vertices() == std::vector<VertexId>{100, 101, 102, 103});
  CHECK(error_of([&] { relabel(c, {{0, 1}}); }) == Errc::degenerate_triangle);
}
