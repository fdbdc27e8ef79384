#pragma once

// Sampled scenes of S(R) in Mink^3 (n = 2) for the observer-horizon figures,
// plus their CSV and SVG writers.

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "desitter/manifold.hpp"

namespace desitter {

namespace labels {
inline constexpr std::string_view kMeridian = "hyperboloid-meridian";
inline constexpr std::string_view kParallel = "hyperboloid-parallel";
inline constexpr std::string_view kWorldline = "worldline";
inline constexpr std::string_view kHorizonPast = "horizon-past";
inline constexpr std::string_view kHorizonFuture = "horizon-future";
inline constexpr std::string_view kThroatCircle = "throat-circle";
inline constexpr std::string_view kCone = "cone-psi";
}  // namespace labels

bool is_known_label(std::string_view label);

enum class FigureKind {
  Bounded,      // 0 <= t <= t_max
  Compactified, // 0 <= t <= infinity, time axis squeezed by arctan
  Cones,        // bounded figure plus light cones along the world line
};

/// Parses "fig2", "fig3" or "cones"; throws std::invalid_argument otherwise.
FigureKind parse_figure_kind(std::string_view name);
std::string_view to_string(FigureKind kind);

/// Cabinet projection u = x_2 + u_x1 x_1, v = scale (t + v_x1 x_1).
struct Projection {
  double u_x1 = -0.35;
  double v_x1 = -0.20;
  double scale = 1.0;
};

struct Polyline {
  std::string label;
  std::vector<Event> points;
  bool closed = false;
};

struct SceneOptions {
  FigureKind kind = FigureKind::Bounded;
  double t_max = 2.0;
  std::size_t resolution = 48;
  std::vector<double> psi_list{0.0, 1.0};
  /// Also draw t in [-t_max, 0).
  bool include_past_half = false;
  bool annotate_throat = false;
  Projection projection{};
};

struct FigureScene {
  SpacetimeContext context;
  std::vector<Polyline> polylines;
  /// Γ^-(L) ∩ S(R, 0), the intersection missing from the textbook picture.
  std::vector<Event> throat_markers;
  Projection projection;
  bool compactified = false;
  double t_max = 0.0;
  bool annotate_throat = false;
};

/// Largest compactified time drawn in the compactified figure, as a fraction of R.
inline constexpr double kCompactifiedTimeFraction = 0.999;

/// Throws std::invalid_argument unless n = 2, resolution >= 8 and, for the
/// bounded figures, 0 < t_max < infinity.
FigureScene build_scene(const SpacetimeContext& ctx, const SceneOptions& options);

/// (x, t) -> (σ x, (2R/π) arctan(t/R)) with σ = sqrt(R^2 + t'^2) / sqrt(R^2 + t^2),
/// which keeps the image on S(R) and maps t in [0, ∞) to [0, R).
Vector compactify(const Vector& v, const SpacetimeContext& ctx);

/// Screen coordinates (u, v) of an event, after compactification if the
/// scene is compactified.
std::array<double, 2> screen_coordinates(const FigureScene& scene, const Event& e);

/// CSV vertex dump: header `label,polyline,vertex,x1,x2,t,u,v`, one row per
/// vertex, 17 significant digits, LF line endings.
void write_csv(const FigureScene& scene, std::ostream& out);
void write_svg(const FigureScene& scene, std::ostream& out);

/// File variants; throw std::runtime_error if the path cannot be written.
void emit_csv(const FigureScene& scene, const std::filesystem::path& path);
void emit_svg(const FigureScene& scene, const std::filesystem::path& path);

}  // namespace desitter
