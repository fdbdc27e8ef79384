#include "desitter/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "desitter/causal.hpp"

namespace desitter {

namespace {

constexpr std::size_t kMeridianCount = 12;
constexpr std::size_t kParallelCount = 4;

std::string format_number(const char* fmt, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value + 0.0);
  return buf;
}

std::string full_precision(double value) { return format_number("%.17g", value); }
std::string svg_number(double value) { return format_number("%.6f", value); }

double compactified_time(double t, double R) {
  return 2.0 * R / std::numbers::pi * std::atan(t / R);
}

double uncompactified_time(double tau, double R) {
  return R * std::tan(0.5 * std::numbers::pi * tau / R);
}

// Times in [lo, hi] with both ends exact; evenly spaced in t, or in the
// compactified time when `compact` is set.
std::vector<double> time_samples(double lo, double hi, std::size_t count, bool compact,
                                 double R) {
  std::vector<double> ts(count);
  const double a = compact ? compactified_time(lo, R) : lo;
  const double b = compact ? compactified_time(hi, R) : hi;
  for (std::size_t i = 0; i < count; ++i) {
    const double s = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    ts[i] = compact ? uncompactified_time(s, R) : s;
  }
  ts.front() = lo;
  ts.back() = hi;
  return ts;
}

Event event_xy(double x1, double x2, double t, const SpacetimeContext& ctx) {
  return Event(Vector{x1, x2, t}, ctx);
}

Polyline parallel(const SpacetimeContext& ctx, double t, std::size_t count,
                  std::string_view label) {
  const double r = std::hypot(ctx.radius, t);
  Polyline line{std::string(label), {}, true};
  for (std::size_t j = 0; j < count; ++j) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count);
    line.points.push_back(event_xy(r * std::cos(phi), r * std::sin(phi), t, ctx));
  }
  return line;
}

// S(R, 0), with (0, ±R, 0) placed exactly.
Polyline throat_circle(const SpacetimeContext& ctx, std::size_t count) {
  const double R = ctx.radius;
  std::vector<std::pair<double, Vector>> vertices;
  bool has_top = false;
  bool has_bottom = false;
  for (std::size_t j = 0; j < count; ++j) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count);
    if (4 * j == count) {
      has_top = true;
      vertices.emplace_back(phi, Vector{0.0, R, 0.0});
    } else if (4 * j == 3 * count) {
      has_bottom = true;
      vertices.emplace_back(phi, Vector{0.0, -R, 0.0});
    } else {
      vertices.emplace_back(phi, Vector{R * std::cos(phi), R * std::sin(phi), 0.0});
    }
  }
  if (!has_top) vertices.emplace_back(0.5 * std::numbers::pi, Vector{0.0, R, 0.0});
  if (!has_bottom) vertices.emplace_back(1.5 * std::numbers::pi, Vector{0.0, -R, 0.0});
  std::stable_sort(vertices.begin(), vertices.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Polyline line{std::string(labels::kThroatCircle), {}, true};
  for (auto& [phi, v] : vertices) line.points.emplace_back(std::move(v), ctx);
  return line;
}

Polyline ray_polyline(const NullRay& ray, std::string_view label, std::span<const double> ts,
                      double t0, double dt_ds) {
  Polyline line{std::string(label), {}, false};
  for (double t : ts) line.points.push_back(ray.at((t - t0) / dt_ds));
  return line;
}

}  // namespace

bool is_known_label(std::string_view label) {
  for (std::string_view known : {labels::kMeridian, labels::kParallel, labels::kWorldline,
                                 labels::kHorizonPast, labels::kHorizonFuture,
                                 labels::kThroatCircle, labels::kCone}) {
    if (label == known) return true;
  }
  return false;
}

FigureKind parse_figure_kind(std::string_view name) {
  if (name == "fig2") return FigureKind::Bounded;
  if (name == "fig3") return FigureKind::Compactified;
  if (name == "cones") return FigureKind::Cones;
  throw std::invalid_argument("unknown figure '" + std::string(name) +
                              "' (expected fig2, fig3 or cones)");
}

std::string_view to_string(FigureKind kind) {
  switch (kind) {
    case FigureKind::Bounded: return "fig2";
    case FigureKind::Compactified: return "fig3";
    case FigureKind::Cones: return "cones";
  }
  return "?";
}

Vector compactify(const Vector& v, const SpacetimeContext& ctx) {
  const double R = ctx.radius;
  const double t = v.time();
  const double tau = compactified_time(t, R);
  const double sigma = std::hypot(R, tau) / std::hypot(R, t);
  Vector out = sigma * v;
  out[ctx.n] = tau;
  return out;
}

FigureScene build_scene(const SpacetimeContext& ctx, const SceneOptions& options) {
  ctx.validate();
  if (ctx.n != 2) {
    throw std::invalid_argument(
        "figures are drawn for the hyperboloid in Mink^3 (n = 2); use the CSV export of the "
        "library sampling routines for n != 2");
  }
  if (options.resolution < 8) throw std::invalid_argument("resolution must be at least 8");
  const bool compact = options.kind == FigureKind::Compactified;
  if (!compact && !(options.t_max > 0.0 && std::isfinite(options.t_max))) {
    throw std::invalid_argument("t_max must be positive and finite");
  }

  const double R = ctx.radius;
  const double t_hi = compact ? uncompactified_time(kCompactifiedTimeFraction * R, R)
                              : options.t_max;
  const double t_lo = options.include_past_half ? -t_hi : 0.0;
  const std::size_t res = options.resolution;
  const std::vector<double> ts = time_samples(t_lo, t_hi, res, compact, R);

  FigureScene scene;
  scene.context = ctx;
  scene.projection = options.projection;
  scene.compactified = compact;
  scene.t_max = compact ? std::numeric_limits<double>::infinity() : options.t_max;
  scene.annotate_throat = options.annotate_throat;

  for (std::size_t k = 0; k < kMeridianCount; ++k) {
    const double phi =
        2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(kMeridianCount);
    Polyline line{std::string(labels::kMeridian), {}, false};
    for (double t : ts) {
      const double r = std::hypot(R, t);
      line.points.push_back(event_xy(r * std::cos(phi), r * std::sin(phi), t, ctx));
    }
    scene.polylines.push_back(std::move(line));
  }

  const std::vector<double> levels =
      time_samples(0.0, t_hi, kParallelCount + 1, compact, R);
  for (std::size_t k = 1; k < levels.size(); ++k) {
    scene.polylines.push_back(parallel(ctx, levels[k], res, labels::kParallel));
    if (options.include_past_half) {
      scene.polylines.push_back(parallel(ctx, -levels[k], res, labels::kParallel));
    }
  }

  scene.polylines.push_back(throat_circle(ctx, res));

  const WorldLine observer = canonical_worldline(ctx);
  {
    Polyline line{std::string(labels::kWorldline), {}, false};
    for (double t : ts) line.points.push_back(observer.at(std::asinh(t / R)));
    scene.polylines.push_back(std::move(line));
  }

  // Γ^-(L): the rulings x_2 = ±R, x_1 = t.
  const Vector ruling{1.0, 0.0, 1.0};
  for (double side : {1.0, -1.0}) {
    const NullRay ray = null_ray(event_xy(0.0, side * R, 0.0, ctx), ruling);
    scene.polylines.push_back(ray_polyline(ray, labels::kHorizonPast, ts, 0.0, 1.0));
  }

  if (options.kind == FigureKind::Cones) {
    // Γ^+(L): x_2 = ±R, x_1 = -t.
    const Vector future_ruling{-1.0, 0.0, 1.0};
    for (double side : {1.0, -1.0}) {
      const NullRay ray = null_ray(event_xy(0.0, side * R, 0.0, ctx), future_ruling);
      scene.polylines.push_back(ray_polyline(ray, labels::kHorizonFuture, ts, 0.0, 1.0));
    }
    for (double psi : options.psi_list) {
      const Isometry b = boost(psi, ctx.n);
      const Event apex = observer.at(psi);
      for (double side : {1.0, -1.0}) {
        const NullRay ray = null_ray(apex, b.apply(Vector{0.0, side, 1.0}));
        // t(γ(s)) = R sinh ψ + s cosh ψ
        scene.polylines.push_back(
            ray_polyline(ray, labels::kCone, ts, apex.time(), std::cosh(psi)));
      }
    }
  }

  Sampler no_sampling;  // n = 2 enumerates both points
  scene.throat_markers = throat_intersection(observer, 0, no_sampling).points;
  return scene;
}

std::array<double, 2> screen_coordinates(const FigureScene& scene, const Event& e) {
  const Vector shown = scene.compactified ? compactify(e.point(), scene.context) : e.point();
  const Projection& p = scene.projection;
  return {shown[1] + p.u_x1 * shown[0], p.scale * (shown[2] + p.v_x1 * shown[0])};
}

void write_csv(const FigureScene& scene, std::ostream& out) {
  out << "label,polyline,vertex,x1,x2,t,u,v\n";
  for (std::size_t i = 0; i < scene.polylines.size(); ++i) {
    const Polyline& line = scene.polylines[i];
    for (std::size_t j = 0; j < line.points.size(); ++j) {
      const Event& e = line.points[j];
      const auto [u, v] = screen_coordinates(scene, e);
      out << line.label << ',' << i << ',' << j << ',' << full_precision(e[0]) << ','
          << full_precision(e[1]) << ',' << full_precision(e[2]) << ',' << full_precision(u)
          << ',' << full_precision(v) << '\n';
    }
  }
}

void write_svg(const FigureScene& scene, std::ostream& out) {
  double umin = std::numeric_limits<double>::infinity();
  double umax = -umin;
  double ymin = umin;
  double ymax = -umin;
  auto extend = [&](const std::array<double, 2>& uv) {
    umin = std::min(umin, uv[0]);
    umax = std::max(umax, uv[0]);
    ymin = std::min(ymin, -uv[1]);
    ymax = std::max(ymax, -uv[1]);
  };
  for (const Polyline& line : scene.polylines)
    for (const Event& e : line.points) extend(screen_coordinates(scene, e));
  for (const Event& e : scene.throat_markers) extend(screen_coordinates(scene, e));
  if (umin > umax) {
    umin = ymin = 0.0;
    umax = ymax = 1.0;
  }
  const double width = std::max(umax - umin, 1e-9);
  const double height = std::max(ymax - ymin, 1e-9);
  const double mu = 0.05 * width;
  const double my = 0.05 * height;
  const double extent = std::max(width, height);
  const double stroke = 0.003 * extent;

  const double R = scene.context.radius;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << svg_number(umin - mu) << ' ' << svg_number(ymin - my) << ' '
      << svg_number(width + 2 * mu) << ' ' << svg_number(height + 2 * my) << "\">\n";
  out << "<!-- de Sitter space-time S(R), R = " << full_precision(R)
      << "; eternal observer L(psi) = (R cosh psi, 0, R sinh psi)\n";
  if (scene.compactified) {
    out << "     time range 0 <= t <= infinity, compactified: (x1, x2, t) -> (s x1, s x2, "
           "(2R/pi) atan(t/R)),\n"
           "     s = sqrt(R^2 + t'^2) / sqrt(R^2 + t^2)\n";
  } else {
    out << "     time range 0 <= t <= " << full_precision(scene.t_max) << "\n";
  }
  out << "     projection: u = x2 + (" << full_precision(scene.projection.u_x1)
      << ") x1, v = " << full_precision(scene.projection.scale) << " (t + ("
      << full_precision(scene.projection.v_x1) << ") x1) -->\n";
  out << "<style>\n"
      << "path { fill: none; stroke: #555; stroke-width: " << svg_number(stroke) << "; }\n"
      << "path.hyperboloid-meridian, path.hyperboloid-parallel { stroke: #bbb; }\n"
      << "path.worldline { stroke: #1f4e9c; stroke-width: " << svg_number(2 * stroke) << "; }\n"
      << "path.horizon-past { stroke: #c0392b; stroke-width: " << svg_number(2 * stroke)
      << "; }\n"
      << "path.horizon-future { stroke: #d68910; stroke-dasharray: " << svg_number(4 * stroke)
      << "; }\n"
      << "path.throat-circle { stroke: #000; }\n"
      << "path.cone-psi { stroke: #27ae60; }\n"
      << "circle.throat-marker { fill: #c0392b; }\n"
      << "text.annotation { font-family: sans-serif; fill: #c0392b; }\n"
      << "</style>\n";

  for (const Polyline& line : scene.polylines) {
    out << "<path class=\"" << line.label << "\" d=\"";
    for (std::size_t j = 0; j < line.points.size(); ++j) {
      const auto [u, v] = screen_coordinates(scene, line.points[j]);
      out << (j == 0 ? "M" : " L") << svg_number(u) << ',' << svg_number(-v);
    }
    if (line.closed) out << " Z";
    out << "\"/>\n";
  }
  for (const Event& e : scene.throat_markers) {
    const auto [u, v] = screen_coordinates(scene, e);
    out << "<circle class=\"throat-marker\" cx=\"" << svg_number(u) << "\" cy=\""
        << svg_number(-v) << "\" r=\"" << svg_number(3 * stroke) << "\" data-x1=\""
        << full_precision(e[0]) << "\" data-x2=\"" << full_precision(e[1]) << "\" data-t=\""
        << full_precision(e[2]) << "\"/>\n";
  }
  if (scene.annotate_throat) {
    for (const Event& e : scene.throat_markers) {
      const auto [u, v] = screen_coordinates(scene, e);
      out << "<text class=\"annotation\" x=\"" << svg_number(u + 5 * stroke) << "\" y=\""
          << svg_number(-v) << "\" font-size=\"" << svg_number(12 * stroke)
          << "\">horizon meets throat: distance pi R / 2 from the observer</text>\n";
    }
  }
  out << "</svg>\n";
}

namespace {

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace

void emit_csv(const FigureScene& scene, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_csv(scene, out); });
}

void emit_svg(const FigureScene& scene, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_svg(scene, out); });
}

}  // namespace desitter
