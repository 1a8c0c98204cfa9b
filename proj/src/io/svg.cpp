#include "tensamp/io/svg.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "tensamp/cone/cone.hpp"
#include "tensamp/surface/cone_pieces.hpp"

namespace tensamp {

namespace {

RatVec restrict_to_plane(const RatVec& l, const RatVec& u, const RatVec& v) { return RatVec{l.dot(u), l.dot(v)}; }

std::optional<RatVec> plane_coords(const RatVec& x, const RatVec& u, const RatVec& v) {
  auto c = solve_linear(RatMat::from_columns({u, v}, x.dim()), x);
  if (!c || c->is_zero()) return std::nullopt;
  return c->primitive();
}

// Rays of {y in R^2 : l.y >= 0 for all l}, or nullopt if it has empty interior.
std::optional<std::vector<RatVec>> planar_cone(const std::vector<RatVec>& functionals) {
  ConeQ f{2, {}};
  for (const auto& l : functionals) {
    if (l.is_zero()) return std::nullopt;
    f.generators.push_back(l);
  }
  const ConeQ d = dual_cone(f);
  if (rank(d.generators, 2) < 2) return std::nullopt;
  return slice2d(d, RatVec::unit(2, 0), RatVec::unit(2, 1));
}

bool in_planar_cone(const std::vector<RatVec>& functionals, const RatVec& y) {
  for (const auto& l : functionals) {
    if (l.dot(y).sign() < 0) return false;
  }
  return true;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

double to_double(const Rat& r) { return r.raw().get_d(); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') {
      out += "&lt;";
    } else if (c == '>') {
      out += "&gt;";
    } else if (c == '&') {
      out += "&amp;";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

ConeSlice cone_slice(const SurfaceModel& m, const RatVec& u, const RatVec& v) {
  if (u.dim() != m.rank() || v.dim() != m.rank()) throw UsageError("slice plane has the wrong dimension");
  if (rank({u, v}, m.rank()) != 2) throw UsageError("slice plane vectors are dependent");
  const TensorAmpleCone tc = tensor_ample_cone_pieces(m);
  const ConeQ pseff_dual = dual_cone(tc.pseff);

  std::vector<RatVec> base;
  for (const auto& l : pseff_dual.generators) base.push_back(restrict_to_plane(l, u, v));

  ConeSlice out;
  for (const auto& piece : tc.pieces) {
    std::vector<RatVec> fs = base;
    for (std::size_t j = 0; j < piece.signs.size(); ++j) {
      fs.push_back(restrict_to_plane(Rat(piece.signs[j]) * tc.hyperplane_normals[j], u, v));
    }
    if (auto rays = planar_cone(fs)) out.pieces.push_back({piece.label, std::move(*rays)});
  }

  for (const auto& c : m.curves) {
    if (auto p = plane_coords(c.cls, u, v)) out.labeled_rays.push_back({c.name, *p});
  }
  for (std::size_t j = 0; j < tc.hyperplane_normals.size(); ++j) {
    const RatVec n = restrict_to_plane(tc.hyperplane_normals[j], u, v);
    if (n.is_zero()) continue;
    const RatVec dir = RatVec{-n[1], n[0]}.primitive();
    for (const RatVec& cand : {dir, -dir}) {
      if (in_planar_cone(base, cand)) {
        out.labeled_rays.push_back({tc.negative_curve_names[j] + "^perp", cand});
        break;
      }
    }
  }
  if (auto p = plane_coords(-m.canonical, u, v)) out.labeled_rays.push_back({"-K", *p});
  return out;
}

std::string slice_csv(const ConeSlice& s) {
  std::ostringstream os;
  os << "piece_id,ray_index,coord_1,coord_2\n";
  for (std::size_t i = 0; i < s.pieces.size(); ++i) {
    for (std::size_t k = 0; k < s.pieces[i].rays.size(); ++k) {
      const RatVec& r = s.pieces[i].rays[k];
      os << i << ',' << k << ',' << r[0].str() << ',' << r[1].str() << '\n';
    }
  }
  return os.str();
}

std::string slice_svg(const ConeSlice& s) {
  constexpr double kSize = 400.0;
  constexpr double kCenter = 200.0;
  constexpr double kRadius = 170.0;
  static const char* const kFill[] = {"#9ecae1", "#fdae6b", "#a1d99b", "#bcbddc", "#fc9272", "#d9d9d9"};

  auto point = [&](const RatVec& r) {
    const double x = to_double(r[0]);
    const double y = to_double(r[1]);
    const double len = std::hypot(x, y);
    return std::pair<double, double>{kCenter + kRadius * x / len, kCenter - kRadius * y / len};
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kSize + 180) << "\" height=\"" << fmt(kSize)
     << "\">\n";
  for (std::size_t i = 0; i < s.pieces.size(); ++i) {
    const auto& rays = s.pieces[i].rays;
    os << "  <polygon class=\"piece\" fill=\"" << kFill[i % 6] << "\" fill-opacity=\"0.6\" points=\""
       << fmt(kCenter) << ',' << fmt(kCenter);
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (k > 0) {
        // Intermediate points keep wide wedges from collapsing to a chord.
        const auto [x0, y0] = point(rays[k - 1]);
        const auto [x1, y1] = point(rays[k]);
        const double a0 = std::atan2(kCenter - y0, x0 - kCenter);
        double a1 = std::atan2(kCenter - y1, x1 - kCenter);
        if (a1 < a0) a1 += 2 * M_PI;
        for (int t = 1; t < 8; ++t) {
          const double a = a0 + (a1 - a0) * t / 8.0;
          os << ' ' << fmt(kCenter + kRadius * std::cos(a)) << ',' << fmt(kCenter - kRadius * std::sin(a));
        }
      }
      const auto [x, y] = point(rays[k]);
      os << ' ' << fmt(x) << ',' << fmt(y);
    }
    os << "\"/>\n";
  }
  for (const auto& r : s.labeled_rays) {
    const auto [x, y] = point(r.coords);
    os << "  <line class=\"ray\" x1=\"" << fmt(kCenter) << "\" y1=\"" << fmt(kCenter) << "\" x2=\"" << fmt(x)
       << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
    os << "  <text class=\"ray-label\" x=\"" << fmt(kCenter + (x - kCenter) * 1.08) << "\" y=\""
       << fmt(kCenter + (y - kCenter) * 1.08) << "\" font-size=\"12\">" << escape(r.label) << "</text>\n";
  }
  for (std::size_t i = 0; i < s.pieces.size(); ++i) {
    const double y = 20.0 + 20.0 * static_cast<double>(i);
    os << "  <rect x=\"" << fmt(kSize + 10) << "\" y=\"" << fmt(y - 10) << "\" width=\"12\" height=\"12\" fill=\""
       << kFill[i % 6] << "\"/>\n";
    os << "  <text class=\"legend\" x=\"" << fmt(kSize + 28) << "\" y=\"" << fmt(y) << "\" font-size=\"12\">"
       << escape(s.pieces[i].label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tensamp
