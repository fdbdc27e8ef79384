#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "desitter/causal.hpp"
#include "desitter/figure.hpp"

using namespace desitter;

namespace {

SpacetimeContext context(double R, std::size_t n = 2) {
  SpacetimeContext ctx;
  ctx.radius = R;
  ctx.n = n;
  return ctx;
}

std::vector<const Polyline*> with_label(const FigureScene& scene, std::string_view label) {
  std::vector<const Polyline*> out;
  for (const Polyline& p : scene.polylines)
    if (p.label == label) out.push_back(&p);
  return out;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
    ++count;
  return count;
}

std::string svg_of(const FigureScene& scene) {
  std::ostringstream out;
  write_svg(scene, out);
  return out.str();
}

std::string csv_of(const FigureScene& scene) {
  std::ostringstream out;
  write_csv(scene, out);
  return out.str();
}

}  // namespace

TEST_CASE("figure kinds") {
  CHECK(parse_figure_kind("fig2") == FigureKind::Bounded);
  CHECK(parse_figure_kind("fig3") == FigureKind::Compactified);
  CHECK(parse_figure_kind("cones") == FigureKind::Cones);
  CHECK_THROWS_AS(parse_figure_kind("fig1"), std::invalid_argument);
}

TEST_CASE("bounded figure geometry") {
  const auto ctx = context(1.0);
  SceneOptions opt;
  opt.t_max = 2.0;
  opt.resolution = 16;
  const FigureScene scene = build_scene(ctx, opt);

  for (const Polyline& p : scene.polylines) {
    CHECK(is_known_label(p.label));
    for (const Event& e : p.points) {
      CHECK(std::abs(hyperboloid_residual(e.point(), ctx)) <= 10 * ctx.tol * ctx.radius * ctx.radius * 16);
      CHECK(e.time() >= 0.0);
      CHECK(e.time() <= 2.0);
    }
  }

  // the two rulings x_1 = t, x_2 = ±R, as straight segments from (0,±1,0) to (2,±1,2)
  const auto horizon = with_label(scene, labels::kHorizonPast);
  REQUIRE(horizon.size() == 2);
  for (const Polyline* line : horizon) {
    const Event& first = line->points.front();
    const Event& last = line->points.back();
    CHECK(first[0] == 0.0);
    CHECK(first.time() == 0.0);
    CHECK(std::abs(first[1]) == 1.0);
    CHECK(last.point() == Vector{2.0, first[1], 2.0});
    for (const Event& e : line->points) {
      CHECK(e[0] == e.time());
      CHECK(e[1] == first[1]);
    }
  }
  CHECK(horizon[0]->points.front()[1] == -horizon[1]->points.front()[1]);

  const auto world = with_label(scene, labels::kWorldline);
  REQUIRE(world.size() == 1);
  const WorldLine L = canonical_worldline(ctx);
  CHECK(world[0]->points.front() == L.at(0.0));
  CHECK(world[0]->points.back() == L.at(std::asinh(2.0)));

  // horizon ∩ throat: the two marked points, each on the throat circle
  const auto throat = with_label(scene, labels::kThroatCircle);
  REQUIRE(throat.size() == 1);
  CHECK(throat[0]->closed);
  REQUIRE(scene.throat_markers.size() == 2);
  Sampler s;
  const ThroatIntersection th = throat_intersection(L, 0, s);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(scene.throat_markers[i] == th.points[i]);
    bool on_circle = false;
    for (const Event& e : throat[0]->points) on_circle = on_circle || e == scene.throat_markers[i];
    CHECK(on_circle);
    bool on_horizon = false;
    for (const Polyline* line : horizon) on_horizon = on_horizon || line->points.front() == scene.throat_markers[i];
    CHECK(on_horizon);
  }
}

TEST_CASE("throat circle contains the exact quarter points for any resolution") {
  for (std::size_t res : {8u, 9u, 10u, 13u}) {
    SceneOptions opt;
    opt.resolution = res;
    const FigureScene scene = build_scene(context(1.0), opt);
    const auto throat = with_label(scene, labels::kThroatCircle);
    int hits = 0;
    for (const Event& e : throat[0]->points)
      hits += (e.point() == Vector{0, 1, 0}) + (e.point() == Vector{0, -1, 0});
    CHECK(hits == 2);
  }
}

TEST_CASE("cones figure") {
  const auto ctx = context(1.0);
  SceneOptions opt;
  opt.kind = FigureKind::Cones;
  opt.psi_list = {0.0, 0.7};
  opt.resolution = 12;
  const FigureScene scene = build_scene(ctx, opt);
  const auto cones = with_label(scene, labels::kCone);
  REQUIRE(cones.size() == 4);
  // ψ = 0: the pair of rulings of {x_1 = R} through p
  for (int k = 0; k < 2; ++k) {
    for (const Event& e : cones[k]->points) {
      CHECK(e[0] == doctest::Approx(1.0));
      CHECK(std::abs(e[1]) == doctest::Approx(e.time()));
    }
  }
  const HalfSpaceSet c = light_cone_on_worldline(ctx, 0.7);
  for (int k = 2; k < 4; ++k)
    for (const Event& e : cones[k]->points) CHECK(c.contains(e));
  CHECK(with_label(scene, labels::kHorizonFuture).size() == 2);
}

TEST_CASE("compactified figure stays bounded") {
  const auto ctx = context(1.0);
  SceneOptions opt;
  opt.kind = FigureKind::Compactified;
  opt.resolution = 32;
  const FigureScene scene = build_scene(ctx, opt);
  CHECK(scene.compactified);
  double vmax = 0.0;
  for (const Polyline& p : scene.polylines) {
    for (const Event& e : p.points) {
      const Vector shown = compactify(e.point(), ctx);
      CHECK(shown.time() < ctx.radius);
      CHECK(on_hyperboloid(shown, ctx));
      vmax = std::max(vmax, std::abs(screen_coordinates(scene, e)[1]));
    }
  }
  CHECK(vmax < 2.0 * ctx.radius);
  // horizon rulings run up to the compactified boundary t' -> R
  for (const Polyline* line : with_label(scene, labels::kHorizonPast)) {
    const double top = compactify(line->points.back().point(), ctx).time();
    CHECK(top == doctest::Approx(kCompactifiedTimeFraction * ctx.radius));
    CHECK(line->points.back().time() > 100.0 * ctx.radius);
  }
}

TEST_CASE("compactification map") {
  const auto ctx = context(2.0);
  const Vector v{2.0 * std::cosh(1.2), 0.0, 2.0 * std::sinh(1.2)};
  const Vector c = compactify(v, ctx);
  CHECK(c.time() == doctest::Approx(4.0 / std::numbers::pi * std::atan(std::sinh(1.2))));
  CHECK(on_hyperboloid(c, ctx));
  CHECK(compactify(Vector{2, 0, 0}, ctx) == Vector{2, 0, 0});
}

TEST_CASE("scene validation") {
  SceneOptions opt;
  CHECK_THROWS_WITH_AS(build_scene(context(1.0, 3), opt), doctest::Contains("CSV"),
                       std::invalid_argument);
  opt.resolution = 7;
  CHECK_THROWS_AS(build_scene(context(1.0), opt), std::invalid_argument);
  opt.resolution = 8;
  opt.t_max = 0.0;
  CHECK_THROWS_AS(build_scene(context(1.0), opt), std::invalid_argument);
  opt.kind = FigureKind::Compactified;
  CHECK_NOTHROW(build_scene(context(1.0), opt));
}

TEST_CASE("csv output") {
  FigureScene empty;
  CHECK(csv_of(empty) == "label,polyline,vertex,x1,x2,t,u,v\n");

  const auto ctx = context(1.0);
  SceneOptions opt;
  opt.resolution = 10;
  const FigureScene scene = build_scene(ctx, opt);
  const std::string csv = csv_of(scene);
  std::size_t vertices = 0;
  for (const Polyline& p : scene.polylines) vertices += p.points.size();
  CHECK(count_of(csv, "\n") == vertices + 1);
  CHECK(csv.find('\r') == std::string::npos);

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string label, poly, vert, x1, x2, t;
    std::getline(row, label, ',');
    std::getline(row, poly, ',');
    std::getline(row, vert, ',');
    std::getline(row, x1, ',');
    std::getline(row, x2, ',');
    std::getline(row, t, ',');
    CHECK(is_known_label(label));
    const Vector v{std::stod(x1), std::stod(x2), std::stod(t)};
    CHECK(std::abs(hyperboloid_residual(v, ctx)) <= 1e-8 * ctx.radius * ctx.radius);
  }
}

TEST_CASE("svg output") {
  const auto ctx = context(1.0);
  SceneOptions opt;
  opt.resolution = 12;
  const FigureScene scene = build_scene(ctx, opt);
  const std::string svg = svg_of(scene);
  CHECK(svg == svg_of(build_scene(ctx, opt)));
  CHECK(count_of(svg, "<path ") == scene.polylines.size());
  CHECK(count_of(svg, "class=\"horizon-past\"") == 2);
  CHECK(count_of(svg, "class=\"throat-marker\"") == 2);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("data-x1=\"0\" data-x2=\"1\" data-t=\"0\"") != std::string::npos);
  CHECK(svg.find("data-x1=\"0\" data-x2=\"-1\" data-t=\"0\"") != std::string::npos);
  CHECK(svg.find("class=\"annotation\"") == std::string::npos);

  opt.annotate_throat = true;
  CHECK(count_of(svg_of(build_scene(ctx, opt)), "class=\"annotation\"") == 2);

  opt.kind = FigureKind::Compactified;
  CHECK(svg_of(build_scene(ctx, opt)).find("atan(t/R)") != std::string::npos);
}

TEST_CASE("file emitters") {
  const auto dir = std::filesystem::temp_directory_path() / "desitter_figure_test";
  std::filesystem::create_directories(dir);
  SceneOptions opt;
  opt.resolution = 8;
  const FigureScene scene = build_scene(context(1.0), opt);
  emit_svg(scene, dir / "a.svg");
  emit_svg(scene, dir / "b.svg");
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  CHECK(slurp(dir / "a.svg") == slurp(dir / "b.svg"));
  emit_csv(scene, dir / "a.csv");
  CHECK(slurp(dir / "a.csv") == csv_of(scene));
  CHECK_THROWS_AS(emit_csv(scene, dir / "missing" / "x.csv"), std::runtime_error);
  std::filesystem::remove_all(dir);
}
