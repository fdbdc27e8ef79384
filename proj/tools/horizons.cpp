// horizons: emits the observer-horizon figures of de Sitter space-time as SVG
// and/or CSV.
//
//   horizons fig2 --radius 1 --t-max 2 --out fig2.svg
//   horizons fig3 --format both --out fig3
//   horizons cones --psi-list 0,0.5,1 --format csv --out cones.csv

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "desitter/causal.hpp"
#include "desitter/figure.hpp"
#include "desitter/quotient.hpp"

namespace {

constexpr int kValidationError = 2;
constexpr int kIoError = 1;

struct Options {
  std::string figure;
  double radius = 1.0;
  double t_max = 2.0;
  std::size_t resolution = 48;
  std::string format = "svg";
  std::string out;
  std::vector<double> psi_list{0.0, 1.0};
  std::uint64_t seed = desitter::Sampler::kDefaultSeed;
  std::vector<double> proj;
  bool annotate_throat = false;
  bool both_halves = false;
};

// Seeded sanity report printed next to the figure.
void print_checks(const desitter::FigureScene& scene, std::uint64_t seed) {
  using namespace desitter;
  const SpacetimeContext& ctx = scene.context;
  Sampler sampler(seed);
  const ThroatIntersection throat = throat_intersection(canonical_worldline(ctx), 0, sampler);
  std::printf("throat: %zu horizon points on S(R,0), max |d - pi R/2| = %.3e\n",
              throat.points.size(), throat.max_distance_error);
  const SymmetryReport sym = horizon_symmetry_check(ctx, 1000, sampler);
  std::printf("horizon central symmetry: %zu samples, %zu violations\n", sym.samples,
              sym.violations);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Observer event horizons in de Sitter space-time", "horizons"};
  Options opt;
  app.add_option("figure", opt.figure, "fig2 (bounded time), fig3 (compactified), cones")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "cones"}));
  app.add_option("--radius", opt.radius, "de Sitter radius R")->check(CLI::PositiveNumber);
  app.add_option("--t-max", opt.t_max, "upper time bound for fig2/cones")
      ->check(CLI::PositiveNumber);
  app.add_option("--resolution", opt.resolution, "vertices per curve (>= 8)")
      ->check(CLI::Range(std::size_t{8}, std::size_t{1} << 20));
  app.add_option("--format", opt.format, "svg, csv or both")
      ->check(CLI::IsMember({"svg", "csv", "both"}));
  app.add_option("--out", opt.out, "output path (extension replaced for --format both)")
      ->required();
  app.add_option("--psi-list", opt.psi_list, "boost parameters of the drawn light cones")
      ->delimiter(',');
  app.add_option("--seed", opt.seed, "seed of the sampled consistency checks");
  app.add_option("--proj", opt.proj, "projection coefficients ux1,vx1")
      ->delimiter(',')
      ->expected(2);
  app.add_flag("--annotate-throat", opt.annotate_throat,
               "label the horizon/throat intersection points");
  app.add_flag("--both-halves", opt.both_halves, "also draw -t_max <= t < 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidationError;
  }

  using namespace desitter;
  FigureScene scene;
  try {
    SpacetimeContext ctx;
    ctx.radius = opt.radius;
    SceneOptions so;
    so.kind = parse_figure_kind(opt.figure);
    so.t_max = opt.t_max;
    so.resolution = opt.resolution;
    so.psi_list = opt.psi_list;
    so.include_past_half = opt.both_halves;
    so.annotate_throat = opt.annotate_throat;
    if (!opt.proj.empty()) {
      so.projection.u_x1 = opt.proj[0];
      so.projection.v_x1 = opt.proj[1];
    }
    scene = build_scene(ctx, so);
  } catch (const std::invalid_argument& e) {
    std::cerr << "horizons: " << e.what() << '\n';
    return kValidationError;
  }

  try {
    const std::filesystem::path out(opt.out);
    if (opt.format == "svg") {
      emit_svg(scene, out);
    } else if (opt.format == "csv") {
      emit_csv(scene, out);
    } else {
      std::filesystem::path svg = out;
      std::filesystem::path csv = out;
      emit_svg(scene, svg.replace_extension(".svg"));
      emit_csv(scene, csv.replace_extension(".csv"));
    }
  } catch (const std::exception& e) {
    std::cerr << "horizons: " << e.what() << '\n';
    return kIoError;
  }

  print_checks(scene, opt.seed);
  return 0;
}
