#include "coxtet/triangle2d.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "coxtet/realize.hpp"

namespace coxtet {

Geometry2D triangle_geometry(const Triple& t) {
  // exact rational comparison of the angle sum with pi
  long long num = 0, den = 1;
  for (const auto& a : t) {
    num = num * a.den + a.num * den;
    den *= a.den;
  }
  if (num > den) return Geometry2D::Spherical;
  if (num == den) return Geometry2D::Euclidean;
  return Geometry2D::Hyperbolic;
}

namespace {

constexpr double kEps = 1e-9;

std::int64_t q6(double x) { return std::llround(x * 1e6); }

// ---------- spherical (E^3) and hyperbolic (R^{2,1}) vector helpers --------

double ip2(bool hyp, const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + (hyp ? -1.0 : 1.0) * a[2] * b[2];
}

Vec3 refl2(bool hyp, const Vec3& x, const Vec3& n) {
  double c = 2.0 * ip2(hyp, x, n);
  Vec3 r = {x[0] - c * n[0], x[1] - c * n[1], x[2] - c * n[2]};
  // renormalize unit spacelike vectors: reflection chains otherwise amplify
  // rounding drift geometrically
  double q = ip2(hyp, r, r);
  if (std::fabs(q - 1.0) < 1e-6) {
    double s = 1.0 / std::sqrt(q);
    r = {r[0] * s, r[1] * s, r[2] * s};
  }
  return r;
}

// vector orthogonal (in the form) to both arguments
Vec3 dual2(bool hyp, const Vec3& a, const Vec3& b) {
  Vec3 aj = {a[0], a[1], hyp ? -a[2] : a[2]};
  Vec3 bj = {b[0], b[1], hyp ? -b[2] : b[2]};
  return cross3(aj, bj);
}

struct Cham {
  std::array<Vec3, 3> n;  // outward side normals, quantized-sorted
  Vec3 center;            // interior point (unit)
};

std::array<Vec3, 3> sort_normals3(std::array<Vec3, 3> n) {
  std::sort(n.begin(), n.end(), [](const Vec3& a, const Vec3& b) {
    for (int k = 0; k < 3; ++k) {
      if (q6(a[k]) != q6(b[k])) return q6(a[k]) < q6(b[k]);
    }
    return false;
  });
  return n;
}

std::string cham_id(const std::array<Vec3, 3>& n) {
  std::string s;
  for (const auto& v : n)
    for (int k = 0; k < 3; ++k) {
      s += std::to_string(q6(v[k]));
      s += ',';
    }
  return s;
}

std::string vec_id(const Vec3& v) {
  return std::to_string(q6(v[0])) + "," + std::to_string(q6(v[1])) + "," +
         std::to_string(q6(v[2]));
}

// normals of a triangle with the given corner angles, from the 3x3 Gram;
// spherical: positive definite; hyperbolic: signature (2,1)
std::array<Vec3, 3> triangle_normals(const std::array<double, 3>& ang, bool hyp) {
  Mat3 g{};
  for (int i = 0; i < 3; ++i) g[i][i] = 1.0;
  // angle at corner k sits between sides i,j != k
  g[0][1] = g[1][0] = -std::cos(ang[2]);
  g[0][2] = g[2][0] = -std::cos(ang[1]);
  g[1][2] = g[2][1] = -std::cos(ang[0]);
  Eigen3 e = sym_eigen(g);
  std::array<Vec3, 3> n;
  if (!hyp) {
    if (e.values[0] <= kEps) throw std::domain_error("triangle_normals: not spherical");
    for (int i = 0; i < 3; ++i)
      n[i] = {std::sqrt(e.values[0]) * e.vectors[i][0], std::sqrt(e.values[1]) * e.vectors[i][1],
              std::sqrt(e.values[2]) * e.vectors[i][2]};
  } else {
    if (e.values[0] >= -kEps || e.values[1] <= kEps)
      throw std::domain_error("triangle_normals: not hyperbolic");
    for (int i = 0; i < 3; ++i)
      n[i] = {std::sqrt(e.values[1]) * e.vectors[i][1], std::sqrt(e.values[2]) * e.vectors[i][2],
              std::sqrt(-e.values[0]) * e.vectors[i][0]};
  }
  return n;
}

Vec3 chamber_center(bool hyp, const std::array<Vec3, 3>& n) {
  // solve <x, n_i> = -1, then normalize
  Mat3 a{};
  for (int i = 0; i < 3; ++i) {
    a[i][0] = n[i][0];
    a[i][1] = n[i][1];
    a[i][2] = (hyp ? -1.0 : 1.0) * n[i][2];
  }
  double det = det3(a);
  if (std::fabs(det) < 1e-12) throw std::runtime_error("chamber_center: degenerate");
  Vec3 x{};
  for (int c = 0; c < 3; ++c) {
    Mat3 m = a;
    for (int r = 0; r < 3; ++r) m[r][c] = -1.0;
    x[c] = det3(m) / det;
  }
  double q = ip2(hyp, x, x);
  if (!hyp) {
    x = normalized3(x);
  } else {
    if (q >= -1e-12) throw std::runtime_error("chamber_center: not timelike");
    double s = 1.0 / std::sqrt(-q);
    x = {x[0] * s, x[1] * s, x[2] * s};
    if (x[2] < 0) x = {-x[0], -x[1], -x[2]};
  }
  return x;
}

// corner of the region opposite side k (intersection of the other two sides)
Vec3 region_corner(bool hyp, const std::array<Vec3, 3>& n, int k) {
  Vec3 c = dual2(hyp, n[(k + 1) % 3], n[(k + 2) % 3]);
  if (!hyp) {
    c = normalized3(c);
    if (ip2(false, c, n[k]) > 0) c = {-c[0], -c[1], -c[2]};
  } else {
    double q = ip2(true, c, c);
    if (q >= -1e-12) throw std::runtime_error("region_corner: ideal or ultra-ideal corner");
    double s = 1.0 / std::sqrt(-q);
    c = {c[0] * s, c[1] * s, c[2] * s};
    if (c[2] < 0) c = {-c[0], -c[1], -c[2]};
  }
  return c;
}

double region_area(bool hyp, const std::array<Vec3, 3>& n) {
  double sum = 0;
  for (int k = 0; k < 3; ++k) {
    double c = -ip2(hyp, n[(k + 1) % 3], n[(k + 2) % 3]);
    c = std::max(-1.0, std::min(1.0, c));
    sum += std::acos(c);
  }
  return hyp ? M_PI - sum : sum - M_PI;
}

// full chamber complex of the reflection group of a spherical triangle
struct SphericalComplex {
  std::vector<Cham> chambers;
  std::vector<Vec3> mirrors;  // projective representatives
  double chamber_area = 0;
};

Vec3 canon_sign(Vec3 v) {
  for (int k = 0; k < 3; ++k) {
    if (std::fabs(v[k]) > 1e-7) {
      if (v[k] < 0) return {-v[0], -v[1], -v[2]};
      return v;
    }
  }
  return v;
}

SphericalComplex spherical_complex(const std::array<double, 3>& ang) {
  SphericalComplex cx;
  auto seed = sort_normals3(triangle_normals(ang, false));
  cx.chamber_area = region_area(false, seed);
  std::set<std::string> seen;
  std::vector<std::array<Vec3, 3>> queue = {seed};
  seen.insert(cham_id(seed));
  while (!queue.empty()) {
    auto ch = queue.back();
    queue.pop_back();
    cx.chambers.push_back({ch, chamber_center(false, ch)});
    for (int s = 0; s < 3; ++s) {
      std::array<Vec3, 3> img;
      for (int i = 0; i < 3; ++i) img[i] = refl2(false, ch[i], ch[s]);
      img = sort_normals3(img);
      std::string id = cham_id(img);
      if (seen.insert(id).second) queue.push_back(img);
    }
    if (cx.chambers.size() > 100000) throw std::runtime_error("spherical_complex: runaway");
  }
  std::set<std::string> mseen;
  for (const auto& ch : cx.chambers)
    for (const auto& n : ch.n) {
      Vec3 m = canon_sign(n);
      if (mseen.insert(vec_id(m)).second) cx.mirrors.push_back(m);
    }
  // structural check: the chambers tile the sphere
  double total = cx.chamber_area * static_cast<double>(cx.chambers.size());
  if (std::fabs(total - 4 * M_PI) > 1e-6)
    throw std::logic_error("spherical_complex: chambers do not tile the sphere");
  return cx;
}

// ---------- Euclidean (affine) helpers --------------------------------------

struct ELine {
  double nx, ny, c;  // half-plane nx*x + ny*y <= c, (nx,ny) unit outward
};

struct ECham {
  std::array<ELine, 3> side;
  std::array<double, 2> center;
};

std::array<double, 2> eline_meet(const ELine& a, const ELine& b) {
  double det = a.nx * b.ny - a.ny * b.nx;
  if (std::fabs(det) < 1e-12) throw std::runtime_error("eline_meet: parallel");
  return {(a.c * b.ny - a.ny * b.c) / det, (a.nx * b.c - a.c * b.nx) / det};
}

std::array<double, 2> refl_point(const ELine& l, const std::array<double, 2>& p) {
  double d = 2.0 * (l.nx * p[0] + l.ny * p[1] - l.c);
  return {p[0] - d * l.nx, p[1] - d * l.ny};
}

ELine refl_line(const ELine& m, const ELine& l) {
  // reflect line l across mirror m; renormalize to stop drift amplification
  double dn = 2.0 * (m.nx * l.nx + m.ny * l.ny);
  double nx = l.nx - dn * m.nx, ny = l.ny - dn * m.ny;
  double len = std::hypot(nx, ny);
  nx /= len;
  ny /= len;
  std::array<double, 2> p = {l.c * l.nx, l.c * l.ny};
  auto pr = refl_point(m, p);
  return {nx, ny, nx * pr[0] + ny * pr[1]};
}

std::string eline_id(const ELine& l) {
  ELine c = l;
  if (q6(c.nx) < 0 || (q6(c.nx) == 0 && q6(c.ny) < 0)) c = {-c.nx, -c.ny, -c.c};
  return std::to_string(q6(c.nx)) + "," + std::to_string(q6(c.ny)) + "," + std::to_string(q6(c.c));
}

std::string echam_id(const ECham& ch) {
  std::array<std::string, 3> ids = {eline_id(ch.side[0]), eline_id(ch.side[1]),
                                    eline_id(ch.side[2])};
  std::sort(ids.begin(), ids.end());
  return ids[0] + ";" + ids[1] + ";" + ids[2];
}

struct EuclideanComplex {
  std::vector<ECham> chambers;
  std::vector<ELine> mirrors;
  double chamber_area = 0;
  double diam = 0;
  double min_height = 0;  // width of the chamber
  double radius = 0;      // patch radius actually used
};

ECham base_euclidean_chamber(const std::array<double, 3>& ang) {
  double alpha = ang[0], beta = ang[1], gamma = ang[2];
  std::array<double, 2> A = {0, 0}, B = {1, 0};
  double lac = std::sin(beta) / std::sin(gamma);
  std::array<double, 2> C = {lac * std::cos(alpha), lac * std::sin(alpha)};
  ECham ch;
  ch.side[0] = {0, -1, 0};                              // AB
  ch.side[1] = {-std::sin(alpha), std::cos(alpha), 0};  // AC
  double bx = std::sin(beta), by = std::cos(beta);
  ch.side[2] = {bx, by, bx * B[0] + by * B[1]};  // BC
  ch.center = {(A[0] + B[0] + C[0]) / 3, (A[1] + B[1] + C[1]) / 3};
  return ch;
}

EuclideanComplex euclidean_complex(const std::array<double, 3>& ang, int max_tiles) {
  EuclideanComplex cx;
  ECham base = base_euclidean_chamber(ang);
  auto corner = [&](const ECham& ch, int k) {
    return eline_meet(ch.side[(k + 1) % 3], ch.side[(k + 2) % 3]);
  };
  {
    auto a = corner(base, 0), b = corner(base, 1), c = corner(base, 2);
    cx.chamber_area =
        std::fabs((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])) / 2;
    for (auto p : {a, b, c})
      for (auto q : {a, b, c}) cx.diam = std::max(cx.diam, std::hypot(p[0] - q[0], p[1] - q[1]));
    cx.min_height = 2.0 * cx.chamber_area / cx.diam;
  }
  cx.radius = 2.0 * max_tiles * cx.chamber_area / cx.min_height + 4 * cx.diam;

  std::set<std::string> seen;
  std::vector<ECham> queue = {base};
  seen.insert(echam_id(base));
  while (!queue.empty()) {
    ECham ch = queue.back();
    queue.pop_back();
    cx.chambers.push_back(ch);
    for (int s = 0; s < 3; ++s) {
      ECham img;
      for (int i = 0; i < 3; ++i) img.side[i] = refl_line(ch.side[s], ch.side[i]);
      img.center = refl_point(ch.side[s], ch.center);
      if (std::hypot(img.center[0], img.center[1]) > cx.radius) continue;
      if (seen.insert(echam_id(img)).second) queue.push_back(img);
    }
    if (cx.chambers.size() > 300000) throw std::runtime_error("euclidean_complex: runaway");
  }
  std::set<std::string> mseen;
  for (const auto& ch : cx.chambers)
    for (const auto& l : ch.side)
      if (mseen.insert(eline_id(l)).second) cx.mirrors.push_back(l);
  return cx;
}

// ---------- canonical keys ---------------------------------------------------

std::string serialize_prefix(const std::array<double, 3>& outer,
                             const std::array<double, 3>& fund, int n) {
  std::ostringstream os;
  os << n << '|';
  for (double a : outer) os << q6(a) << ',';
  os << '|';
  for (double a : fund) os << q6(a) << ',';
  os << '|';
  return os.str();
}

std::string spherical_key(const std::array<Vec3, 3>& corners, const std::vector<Vec3>& pts,
                          const std::array<double, 3>& outer, const std::array<double, 3>& fund) {
  std::string best;
  int ord[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& o : ord)
    for (int flip = 0; flip < 2; ++flip) {
      Vec3 e3 = corners[o[0]];
      Vec3 raw = corners[o[1]];
      Vec3 e1 = {raw[0] - dot3(raw, e3) * e3[0], raw[1] - dot3(raw, e3) * e3[1],
                 raw[2] - dot3(raw, e3) * e3[2]};
      double l = std::sqrt(dot3(e1, e1));
      if (l < 1e-9) continue;
      e1 = {e1[0] / l, e1[1] / l, e1[2] / l};
      Vec3 e2 = cross3(e3, e1);
      if (flip) e2 = {-e2[0], -e2[1], -e2[2]};
      std::vector<std::string> rows;
      for (const auto& p : pts) {
        std::ostringstream os;
        os << q6(dot3(p, e1)) << ',' << q6(dot3(p, e2)) << ',' << q6(dot3(p, e3));
        rows.push_back(os.str());
      }
      std::sort(rows.begin(), rows.end());
      std::string s;
      for (auto& r : rows) {
        s += r;
        s += ';';
      }
      if (best.empty() || s < best) best = s;
    }
  std::array<double, 3> os = outer, fs = fund;
  std::sort(os.rbegin(), os.rend());
  std::sort(fs.rbegin(), fs.rend());
  return "S|" + serialize_prefix(os, fs, static_cast<int>(pts.size())) + best;
}

std::string euclidean_key(const std::array<std::array<double, 2>, 3>& corners,
                          const std::vector<std::array<double, 2>>& pts,
                          const std::array<double, 3>& outer,
                          const std::array<double, 3>& fund) {
  std::string best;
  int ord[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& o : ord)
    for (int flip = 0; flip < 2; ++flip) {
      auto A = corners[o[0]];
      auto B = corners[o[1]];
      double dx = B[0] - A[0], dy = B[1] - A[1];
      double l = std::hypot(dx, dy);
      if (l < 1e-9) continue;
      dx /= l;
      dy /= l;
      double fy = flip ? -1.0 : 1.0;
      std::vector<std::string> rows;
      for (const auto& p : pts) {
        double px = p[0] - A[0], py = p[1] - A[1];
        double u = px * dx + py * dy;
        double v = fy * (-px * dy + py * dx);
        rows.push_back(std::to_string(q6(u)) + ',' + std::to_string(q6(v)));
      }
      std::sort(rows.begin(), rows.end());
      std::string s;
      for (auto& r : rows) {
        s += r;
        s += ';';
      }
      if (best.empty() || s < best) best = s;
    }
  std::array<double, 3> os = outer, fs = fund;
  std::sort(os.rbegin(), os.rend());
  std::sort(fs.rbegin(), fs.rend());
  return "E|" + serialize_prefix(os, fs, static_cast<int>(pts.size())) + best;
}

// ---------- list search ------------------------------------------------------

std::vector<std::array<double, 3>> feasible_fundamentals(Geometry2D g, int max_label) {
  std::vector<std::array<double, 3>> out;
  if (g == Geometry2D::Spherical) {
    for (int n = 2; n <= max_label; ++n) out.push_back({M_PI / 2, M_PI / 2, M_PI / n});
    out.push_back({M_PI / 2, M_PI / 3, M_PI / 3});
    out.push_back({M_PI / 2, M_PI / 3, M_PI / 4});
    out.push_back({M_PI / 2, M_PI / 3, M_PI / 5});
  } else if (g == Geometry2D::Euclidean) {
    out.push_back({M_PI / 3, M_PI / 3, M_PI / 3});
    out.push_back({M_PI / 2, M_PI / 4, M_PI / 4});
    out.push_back({M_PI / 2, M_PI / 3, M_PI / 6});
  }
  return out;
}

std::vector<TriangleDecomp> spherical_list(const std::array<double, 3>& fund, int max_tiles,
                                           bool second_type_only) {
  std::vector<TriangleDecomp> out;
  SphericalComplex cx = spherical_complex(fund);
  std::set<std::string> keys;
  int M = static_cast<int>(cx.mirrors.size());
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j)
      for (int k = j + 1; k < M; ++k) {
        const Vec3 &m1 = cx.mirrors[i], &m2 = cx.mirrors[j], &m3 = cx.mirrors[k];
        double det = dot3(m1, cross3(m2, m3));
        if (std::fabs(det) < 1e-7) continue;  // concurrent circles
        for (int s2 = -1; s2 <= 1; s2 += 2)
          for (int s3 = -1; s3 <= 1; s3 += 2) {
            std::array<Vec3, 3> sides = {
                m1, Vec3{s2 * m2[0], s2 * m2[1], s2 * m2[2]},
                Vec3{s3 * m3[0], s3 * m3[1], s3 * m3[2]}};
            std::array<Vec3, 3> corners;
            bool okcorners = true;
            for (int c = 0; c < 3 && okcorners; ++c) {
              Vec3 ax = normalized3(dual2(false, sides[(c + 1) % 3], sides[(c + 2) % 3]));
              double d = dot3(sides[c], ax);
              if (std::fabs(d) < 1e-9) {
                okcorners = false;
                break;
              }
              corners[c] = d > 0 ? Vec3{-ax[0], -ax[1], -ax[2]} : ax;
            }
            if (!okcorners) continue;
            int count = 0;
            std::vector<Vec3> centers;
            for (const auto& ch : cx.chambers) {
              bool in = true;
              for (const auto& sd : sides)
                if (dot3(ch.center, sd) > -1e-9) in = false;
              if (in) {
                ++count;
                centers.push_back(ch.center);
              }
            }
            if (count < 2 || count > max_tiles) continue;
            double area = region_area(false, sides);
            if (std::fabs(count * cx.chamber_area - area) > 1e-6)
              throw std::logic_error("spherical_list: area mismatch");
            std::array<double, 3> outer;
            for (int c = 0; c < 3; ++c) {
              double cc = -dot3(sides[(c + 1) % 3], sides[(c + 2) % 3]);
              outer[c] = std::acos(std::max(-1.0, std::min(1.0, cc)));
            }
            bool second = true;
            for (int c = 0; c < 3 && second; ++c)
              for (const auto& m : cx.mirrors) {
                if (std::fabs(dot3(m, corners[c])) > 1e-7) continue;
                double da = dot3(m, corners[(c + 1) % 3]);
                double db = dot3(m, corners[(c + 2) % 3]);
                if (da * db < -1e-12) {
                  second = false;
                  break;
                }
              }
            if (second_type_only && !second) continue;
            TriangleDecomp td;
            td.geometry = Geometry2D::Spherical;
            td.outer = outer;
            std::sort(td.outer.rbegin(), td.outer.rend());
            td.fundamental = fund;
            std::sort(td.fundamental.rbegin(), td.fundamental.rend());
            td.tiles = count;
            td.second_type = second;
            for (int c = 0; c < 3; ++c) {
              const Vec3& axis = corners[(c + 1) % 3];
              const Vec3& far = corners[(c + 2) % 3];
              Vec3 w = {far[0] - dot3(far, axis) * axis[0], far[1] - dot3(far, axis) * axis[1],
                        far[2] - dot3(far, axis) * axis[2]};
              double wl = std::sqrt(dot3(w, w));
              if (wl < 1e-12) continue;
              w = {w[0] / wl, w[1] / wl, w[2] / wl};
              double span = std::acos(std::max(-1.0, std::min(1.0, dot3(axis, far))));
              std::set<long long> qs;
              std::vector<double> coords;
              for (const auto& ctr : centers) {
                // chamber corners of the chamber with this center
                for (const auto& ch : cx.chambers) {
                  if (dot3(ctr, ch.center) < 1 - 1e-9) continue;
                  for (int cc = 0; cc < 3; ++cc) {
                    Vec3 p = region_corner(false, ch.n, cc);
                    if (std::fabs(dot3(p, sides[c])) > 1e-7) continue;
                    double t = std::atan2(dot3(p, w), dot3(p, axis));
                    if (t < 1e-7 || t > span - 1e-7) continue;
                    if (qs.insert(q6(t)).second) coords.push_back(t);
                  }
                  break;
                }
              }
              std::sort(coords.begin(), coords.end());
              td.side_patterns[c] = coords;
            }
            td.key = spherical_key(corners, centers, td.outer, td.fundamental);
            if (keys.insert(td.key).second) out.push_back(std::move(td));
          }
      }
  return out;
}

std::vector<TriangleDecomp> euclidean_list(const std::array<double, 3>& fund, int max_tiles,
                                           bool second_type_only,
                                           const std::array<double, 3>* target_outer = nullptr) {
  std::vector<TriangleDecomp> out;
  EuclideanComplex cx = euclidean_complex(fund, max_tiles);
  const ECham base = cx.chambers.front();
  std::set<std::string> keys;
  // any container holding the base chamber with <= max_tiles chambers has
  // all corners within 2 * area / width(chamber) of the base
  double dmax = 2.0 * max_tiles * cx.chamber_area / cx.min_height + 2 * cx.diam;
  // group mirrors by direction
  std::map<long long, std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(cx.mirrors.size()); ++i) {
    const ELine& l = cx.mirrors[i];
    double dist = std::fabs(l.nx * base.center[0] + l.ny * base.center[1] - l.c);
    if (dist > dmax) continue;
    double ang = std::atan2(l.ny, l.nx);
    if (ang < -1e-9) ang += M_PI;      // projective direction
    if (ang > M_PI - 1e-9) ang = 0.0;  // wrap
    groups[q6(ang)].push_back(i);
  }
  std::vector<std::vector<int>> dir;
  for (auto& g : groups) dir.push_back(g.second);
  auto near_base = [&](const std::array<double, 2>& p) {
    return std::hypot(p[0] - base.center[0], p[1] - base.center[1]) <= dmax;
  };
  int nd = static_cast<int>(dir.size());
  std::vector<double> dir_angle;
  for (const auto& g : dir) {
    const ELine& l = cx.mirrors[g.front()];
    double ang = std::atan2(l.ny, l.nx);
    if (ang < -1e-9) ang += M_PI;
    dir_angle.push_back(ang);
  }
  // corner angles of any container are fixed by its side directions, so a
  // target outer shape rules out most direction triples outright
  auto directions_feasible = [&](int a, int b, int cdir) {
    if (!target_outer) return true;
    double d1 = std::fabs(dir_angle[b] - dir_angle[cdir]);
    double d2 = std::fabs(dir_angle[a] - dir_angle[cdir]);
    double d3 = std::fabs(dir_angle[a] - dir_angle[b]);
    std::array<double, 3> delta = {std::min(d1, M_PI - d1), std::min(d2, M_PI - d2),
                                   std::min(d3, M_PI - d3)};
    int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& p : perm) {
      bool ok = true;
      for (int c = 0; c < 3 && ok; ++c) {
        double want = (*target_outer)[c];
        if (std::fabs(delta[p[c]] - want) > 1e-7 && std::fabs(M_PI - delta[p[c]] - want) > 1e-7)
          ok = false;
      }
      if (ok) return true;
    }
    return false;
  };
  for (int a = 0; a < nd; ++a)
    for (int b = a + 1; b < nd; ++b)
      for (int cdir = b + 1; cdir < nd; ++cdir) {
        if (!directions_feasible(a, b, cdir)) continue;
        for (int i : dir[a])
          for (int j : dir[b]) {
            std::array<double, 2> c12 = eline_meet(cx.mirrors[i], cx.mirrors[j]);
            if (!near_base(c12)) continue;
            for (int k : dir[cdir]) {
        const ELine &l1 = cx.mirrors[i], &l2 = cx.mirrors[j], &l3 = cx.mirrors[k];
        std::array<std::array<double, 2>, 3> corners;
        corners[0] = eline_meet(l2, l3);
        corners[1] = eline_meet(l1, l3);
        corners[2] = c12;
        if (!near_base(corners[0]) || !near_base(corners[1])) continue;
        if (std::hypot(corners[0][0] - corners[1][0], corners[0][1] - corners[1][1]) < 1e-9)
          continue;  // concurrent
        double area =
            std::fabs((corners[1][0] - corners[0][0]) * (corners[2][1] - corners[0][1]) -
                      (corners[2][0] - corners[0][0]) * (corners[1][1] - corners[0][1])) /
            2;
        if (area > max_tiles * cx.chamber_area + 1e-9 || area < 2 * cx.chamber_area - 1e-9)
          continue;
        std::array<ELine, 3> sides = {l1, l2, l3};
        bool ok = true;
        for (int c = 0; c < 3; ++c) {
          double v = sides[c].nx * corners[c][0] + sides[c].ny * corners[c][1] - sides[c].c;
          if (std::fabs(v) < 1e-9) {
            ok = false;
            break;
          }
          if (v > 0) sides[c] = {-sides[c].nx, -sides[c].ny, -sides[c].c};
        }
        if (!ok) continue;
        // count each container once: the base chamber must lie inside
        bool base_in = true;
        for (const auto& sd : sides)
          if (sd.nx * base.center[0] + sd.ny * base.center[1] - sd.c > -1e-9) base_in = false;
        if (!base_in) continue;
        bool safe = true;
        for (const auto& c : corners)
          if (std::hypot(c[0], c[1]) > cx.radius - 2 * cx.diam) safe = false;
        if (!safe) continue;
        double xlo = corners[0][0], xhi = corners[0][0], ylo = corners[0][1], yhi = corners[0][1];
        for (const auto& c : corners) {
          xlo = std::min(xlo, c[0]);
          xhi = std::max(xhi, c[0]);
          ylo = std::min(ylo, c[1]);
          yhi = std::max(yhi, c[1]);
        }
        int count = 0;
        std::vector<std::array<double, 2>> centers;
        for (const auto& ch : cx.chambers) {
          if (ch.center[0] < xlo || ch.center[0] > xhi || ch.center[1] < ylo ||
              ch.center[1] > yhi)
            continue;
          bool in = true;
          for (const auto& sd : sides)
            if (sd.nx * ch.center[0] + sd.ny * ch.center[1] - sd.c > -1e-9) in = false;
          if (in) {
            ++count;
            centers.push_back(ch.center);
          }
        }
        if (count < 2 || count > max_tiles) continue;
        if (std::fabs(count * cx.chamber_area - area) > 1e-6)
          throw std::logic_error("euclidean_list: area mismatch");
        std::array<double, 3> outer;
        for (int c = 0; c < 3; ++c) {
          double cc = -(sides[(c + 1) % 3].nx * sides[(c + 2) % 3].nx +
                        sides[(c + 1) % 3].ny * sides[(c + 2) % 3].ny);
          outer[c] = std::acos(std::max(-1.0, std::min(1.0, cc)));
        }
        bool second = true;
        for (int c = 0; c < 3 && second; ++c)
          for (const auto& m : cx.mirrors) {
            double v = m.nx * corners[c][0] + m.ny * corners[c][1] - m.c;
            if (std::fabs(v) > 1e-7) continue;
            double da = m.nx * corners[(c + 1) % 3][0] + m.ny * corners[(c + 1) % 3][1] - m.c;
            double db = m.nx * corners[(c + 2) % 3][0] + m.ny * corners[(c + 2) % 3][1] - m.c;
            if (da * db < -1e-12) {
              second = false;
              break;
            }
          }
        if (second_type_only && !second) continue;
        TriangleDecomp td;
        td.geometry = Geometry2D::Euclidean;
        td.outer = outer;
        std::sort(td.outer.rbegin(), td.outer.rend());
        td.fundamental = fund;
        std::sort(td.fundamental.rbegin(), td.fundamental.rend());
        td.tiles = count;
        td.second_type = second;
        for (int c = 0; c < 3; ++c) {
          auto A = corners[(c + 1) % 3], B = corners[(c + 2) % 3];
          double dx = B[0] - A[0], dy = B[1] - A[1];
          double len = std::hypot(dx, dy);
          dx /= len;
          dy /= len;
          std::set<long long> qs;
          std::vector<double> coords;
          for (const auto& ctr : centers) {
            for (const auto& ch : cx.chambers) {
              if (std::hypot(ctr[0] - ch.center[0], ctr[1] - ch.center[1]) > 1e-9) continue;
              for (int cc = 0; cc < 3; ++cc) {
                auto p = eline_meet(ch.side[(cc + 1) % 3], ch.side[(cc + 2) % 3]);
                double v = sides[c].nx * p[0] + sides[c].ny * p[1] - sides[c].c;
                if (std::fabs(v) > 1e-7) continue;
                double t = (p[0] - A[0]) * dx + (p[1] - A[1]) * dy;
                if (t < 1e-7 || t > len - 1e-7) continue;
                if (qs.insert(q6(t)).second) coords.push_back(t);
              }
              break;
            }
          }
          std::sort(coords.begin(), coords.end());
          td.side_patterns[c] = coords;
        }
        if (target_outer) {
          std::array<double, 3> want = *target_outer;
          std::sort(want.rbegin(), want.rend());
          bool match = true;
          for (int c = 0; c < 3; ++c)
            if (std::fabs(td.outer[c] - want[c]) > 1e-8) match = false;
          if (!match) continue;
        }
        td.key = euclidean_key(corners, centers, td.outer, td.fundamental);
        if (keys.insert(td.key).second) out.push_back(std::move(td));
            }
          }
      }
  return out;
}

}  // namespace

std::vector<TriangleDecomp> search_triangle_decompositions(Geometry2D geometry,
                                                           const std::optional<Triple>& fundamental,
                                                           int max_tiles, bool second_type_only,
                                                           int max_label) {
  static std::mutex memo_mutex;
  static std::map<std::string, std::vector<TriangleDecomp>> memo;
  std::ostringstream mk;
  mk << static_cast<int>(geometry) << '|';
  if (fundamental)
    for (const auto& a : *fundamental) mk << a.str() << ',';
  mk << '|' << max_tiles << '|' << second_type_only << '|' << max_label;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(mk.str());
    if (it != memo.end()) return it->second;
  }
  if (geometry == Geometry2D::Hyperbolic)
    throw std::invalid_argument(
        "search_triangle_decompositions: hyperbolic triangle lists are unbounded; use "
        "triangle_decomposition_exists");
  std::vector<std::array<double, 3>> funds;
  if (fundamental) {
    if (triangle_geometry(*fundamental) != geometry)
      throw std::domain_error("search_triangle_decompositions: fundamental geometry mismatch");
    funds.push_back(
        {(*fundamental)[0].value(), (*fundamental)[1].value(), (*fundamental)[2].value()});
  } else {
    funds = feasible_fundamentals(geometry, max_label);
  }
  std::vector<TriangleDecomp> all;
  for (const auto& f : funds) {
    std::vector<TriangleDecomp> part = geometry == Geometry2D::Spherical
                                           ? spherical_list(f, max_tiles, second_type_only)
                                           : euclidean_list(f, max_tiles, second_type_only);
    for (auto& td : part) all.push_back(std::move(td));
  }
  std::sort(all.begin(), all.end(), [](const TriangleDecomp& a, const TriangleDecomp& b) {
    if (a.tiles != b.tiles) return a.tiles < b.tiles;
    return a.key < b.key;
  });
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo[mk.str()] = all;
  }
  return all;
}

namespace {

bool triple_close(std::array<double, 3> a, std::array<double, 3> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (int i = 0; i < 3; ++i)
    if (std::fabs(a[i] - b[i]) > 1e-9) return false;
  return true;
}

Mat3 mat3_inverse(const Mat3& bf) {
  double det = det3(bf);
  if (std::fabs(det) < 1e-12) throw std::runtime_error("mat3_inverse: singular");
  Mat3 inv{};
  inv[0][0] = (bf[1][1] * bf[2][2] - bf[1][2] * bf[2][1]) / det;
  inv[0][1] = (bf[0][2] * bf[2][1] - bf[0][1] * bf[2][2]) / det;
  inv[0][2] = (bf[0][1] * bf[1][2] - bf[0][2] * bf[1][1]) / det;
  inv[1][0] = (bf[1][2] * bf[2][0] - bf[1][0] * bf[2][2]) / det;
  inv[1][1] = (bf[0][0] * bf[2][2] - bf[0][2] * bf[2][0]) / det;
  inv[1][2] = (bf[0][2] * bf[1][0] - bf[0][0] * bf[1][2]) / det;
  inv[2][0] = (bf[1][0] * bf[2][1] - bf[1][1] * bf[2][0]) / det;
  inv[2][1] = (bf[0][1] * bf[2][0] - bf[0][0] * bf[2][1]) / det;
  inv[2][2] = (bf[0][0] * bf[1][1] - bf[0][1] * bf[1][0]) / det;
  return inv;
}

// hyperbolic second-type existence by corner-anchored expansion
bool hyperbolic_exists(const Triple& f, const Triple& p, int cap) {
  std::array<double, 3> fa = {f[0].value(), f[1].value(), f[2].value()};
  std::array<double, 3> pa = {p[0].value(), p[1].value(), p[2].value()};
  double area_f = M_PI - fa[0] - fa[1] - fa[2];
  double area_p = M_PI - pa[0] - pa[1] - pa[2];
  double ratio = area_p / area_f;
  if (std::fabs(ratio - std::llround(ratio)) > 1e-6) return false;
  long long n = std::llround(ratio);
  if (n > cap) return false;
  auto pn = triangle_normals(pa, true);
  auto fn = triangle_normals(fa, true);
  for (int cp = 0; cp < 3; ++cp)
    for (int cf = 0; cf < 3; ++cf) {
      if (std::fabs(pa[cp] - fa[cf]) > 1e-9) continue;
      for (int orient = 0; orient < 2; ++orient) {
        int pf1 = (cp + 1) % 3, pf2 = (cp + 2) % 3;
        int ff1 = (cf + 1) % 3, ff2 = (cf + 2) % 3;
        if (orient) std::swap(ff1, ff2);
        Mat3 bp{}, bf{};
        Vec3 pc = region_corner(true, pn, cp), fc = region_corner(true, fn, cf);
        for (int r = 0; r < 3; ++r) {
          bp[r][0] = pn[pf1][r];
          bp[r][1] = pn[pf2][r];
          bp[r][2] = pc[r];
          bf[r][0] = fn[ff1][r];
          bf[r][1] = fn[ff2][r];
          bf[r][2] = fc[r];
        }
        Mat3 inv = mat3_inverse(bf);
        Mat3 g{};
        for (int i = 0; i < 3; ++i)
          for (int kk = 0; kk < 3; ++kk)
            for (int jj = 0; jj < 3; ++jj) g[i][jj] += bp[i][kk] * inv[kk][jj];
        std::array<Vec3, 3> seed;
        for (int s = 0; s < 3; ++s) {
          Vec3 v{};
          for (int r = 0; r < 3; ++r)
            for (int cidx = 0; cidx < 3; ++cidx) v[r] += g[r][cidx] * fn[s][cidx];
          seed[s] = v;
        }
        H2Expansion ex = expand_hyperbolic_triangle(pn, seed, static_cast<int>(n) + 2);
        if (!ex.ok || static_cast<long long>(ex.chambers.size()) != n) continue;
        bool second = true;
        for (int c = 0; c < 3 && second; ++c) {
          Vec3 pcr = region_corner(true, pn, c);
          int touching = 0;
          for (const auto& ch : ex.chambers) {
            for (int cc = 0; cc < 3; ++cc) {
              Vec3 q = region_corner(true, ch, cc);
              double d = -ip2(true, q, pcr);  // cosh of the distance
              if (d < 1 + 1e-9) {
                ++touching;
                break;
              }
            }
          }
          if (touching != 1) second = false;
        }
        if (second) return true;
      }
    }
  return false;
}

}  // namespace

bool triangle_decomposition_exists(const Triple& fundamental, const Triple& outer, int cap) {
  Geometry2D gf = triangle_geometry(fundamental);
  Geometry2D go = triangle_geometry(outer);
  if (gf != go) throw std::domain_error("triangle_decomposition_exists: mixed geometries");
  auto sf = fundamental, so = outer;
  std::sort(sf.begin(), sf.end());
  std::sort(so.begin(), so.end());
  if (sf == so) return true;  // the trivial decomposition
  if (gf == Geometry2D::Hyperbolic) return hyperbolic_exists(fundamental, outer, cap);
  std::array<double, 3> want = {outer[0].value(), outer[1].value(), outer[2].value()};
  if (gf == Geometry2D::Spherical) {
    double af = fundamental[0].value() + fundamental[1].value() + fundamental[2].value() - M_PI;
    double ao = outer[0].value() + outer[1].value() + outer[2].value() - M_PI;
    double ratio = ao / af;
    if (std::fabs(ratio - std::llround(ratio)) > 1e-6) return false;
    auto list = search_triangle_decompositions(gf, fundamental,
                                               static_cast<int>(std::llround(ratio)), true);
    for (const auto& td : list)
      if (triple_close(td.outer, want)) return true;
    return false;
  }
  // Euclidean: a clean corner hosts exactly one chamber, so every outer
  // angle must be one of the fundamental's angles
  for (const auto& oa : outer) {
    bool matches = false;
    for (const auto& fa : fundamental)
      if (oa == fa) matches = true;
    if (!matches) return false;
  }
  static std::mutex memo_mutex;
  static std::map<std::string, bool> memo;
  std::string mk;
  for (const auto& a : fundamental) mk += a.str() + ",";
  mk += "|";
  for (const auto& a : outer) mk += a.str() + ",";
  mk += "|" + std::to_string(cap);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(mk);
    if (it != memo.end()) return it->second;
  }
  std::array<double, 3> fa = {fundamental[0].value(), fundamental[1].value(),
                              fundamental[2].value()};
  auto list = euclidean_list(fa, cap, true, &want);
  bool found = false;
  for (const auto& td : list)
    if (triple_close(td.outer, want)) found = true;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo[mk] = found;
  }
  return found;
}

H2Expansion expand_hyperbolic_triangle(const std::array<Vec3, 3>& container,
                                       const std::array<Vec3, 3>& seed, int cap) {
  H2Expansion out;
  auto inside = [&](const Vec3& x) {
    for (const auto& n : container)
      if (ip2(true, x, n) > -1e-9) return false;
    return true;
  };
  auto seed_s = sort_normals3(seed);
  Vec3 c0 = chamber_center(true, seed_s);
  if (!inside(c0)) return out;
  std::set<std::string> seen;
  std::vector<std::array<Vec3, 3>> queue = {seed_s};
  seen.insert(cham_id(seed_s));
  std::vector<std::array<Vec3, 3>> acc;
  while (!queue.empty()) {
    auto ch = queue.back();
    queue.pop_back();
    acc.push_back(ch);
    if (static_cast<int>(acc.size()) > cap) return out;
    // straddle check: all corners weakly inside the container (corners may
    // be ideal when the tile has a zero angle)
    for (int c = 0; c < 3; ++c) {
      Vec3 q = dual2(true, ch[(c + 1) % 3], ch[(c + 2) % 3]);
      double scale = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2]);
      double qq = ip2(true, q, q);
      if (qq < -1e-9 * scale * scale) {
        double s = 1.0 / std::sqrt(-qq);
        q = {q[0] * s, q[1] * s, q[2] * s};
        if (q[2] < 0) q = {-q[0], -q[1], -q[2]};
        for (const auto& n : container)
          if (ip2(true, q, n) > 1e-7) return out;
      } else if (qq < 1e-9 * scale * scale) {
        if (q[2] < 0) q = {-q[0], -q[1], -q[2]};
        for (const auto& n : container)
          if (ip2(true, q, n) > 1e-7 * scale) return out;
      } else {
        return out;  // ultra-ideal corner cannot belong to a tile
      }
    }
    for (int s = 0; s < 3; ++s) {
      std::array<Vec3, 3> img;
      for (int i = 0; i < 3; ++i) img[i] = refl2(true, ch[i], ch[s]);
      img = sort_normals3(img);
      Vec3 ctr = chamber_center(true, img);
      if (!inside(ctr)) continue;
      if (seen.insert(cham_id(img)).second) queue.push_back(img);
    }
  }
  out.ok = true;
  out.chambers = std::move(acc);
  return out;
}

TriangleDecomp link_decomposition(const TilingRealization& t, int v, double tol) {
  TriangleDecomp td;
  const TetRealization& cont = t.container;
  if (cont.vtype[v] == VertexType::Invalid)
    throw std::domain_error("link_decomposition: invalid vertex");
  const Vec4& V = cont.vertices[v];

  int faces[3], rr = 0;
  for (int f = 0; f < 4; ++f)
    if (f != v) faces[rr++] = f;

  if (cont.vtype[v] == VertexType::Finite) {
    // orthonormal basis of the tangent space at V (all spacelike)
    std::array<Vec4, 3> basis;
    int found = 0;
    for (int s = 0; s < 4 && found < 3; ++s) {
      Vec4 seed{};
      seed[s] = 1.0;
      Vec4 u = add4(seed, scale4(V, minkowski(seed, V)));
      for (int k = 0; k < found; ++k) u = sub4(u, scale4(basis[k], minkowski(u, basis[k])));
      double q = minkowski(u, u);
      if (q < 1e-8) continue;
      basis[found++] = scale4(u, 1.0 / std::sqrt(q));
    }
    if (found < 3) throw std::runtime_error("link_decomposition: basis construction failed");
    auto to3 = [&](const Vec4& x) {
      return Vec3{minkowski(x, basis[0]), minkowski(x, basis[1]), minkowski(x, basis[2])};
    };
    std::array<Vec3, 3> outer_n;
    for (int i = 0; i < 3; ++i) outer_n[i] = normalized3(to3(cont.normals[faces[i]]));
    std::vector<std::array<Vec3, 3>> link_tiles;
    std::vector<Vec3> centers;
    for (const auto& tile : t.tiles) {
      TetRealization r = tile_realization(tile);
      int at = -1;
      for (int w = 0; w < 4; ++w) {
        if (r.vtype[w] != VertexType::Finite) continue;
        Vec4 d = sub4(r.vertices[w], V);
        if (std::fabs(d[0]) + std::fabs(d[1]) + std::fabs(d[2]) + std::fabs(d[3]) < 100 * tol)
          at = w;
      }
      if (at < 0) continue;
      std::array<Vec3, 3> nn;
      int c = 0;
      for (int ff = 0; ff < 4; ++ff)
        if (ff != at) nn[c++] = normalized3(to3(r.normals[ff]));
      auto sorted = sort_normals3(nn);
      link_tiles.push_back(sorted);
      centers.push_back(chamber_center(false, sorted));
    }
    td.geometry = Geometry2D::Spherical;
    td.tiles = static_cast<int>(link_tiles.size());
    std::array<Vec3, 3> corners;
    for (int c = 0; c < 3; ++c) {
      corners[c] = region_corner(false, outer_n, c);
      double cc = -dot3(outer_n[(c + 1) % 3], outer_n[(c + 2) % 3]);
      td.outer[c] = std::acos(std::max(-1.0, std::min(1.0, cc)));
    }
    if (!link_tiles.empty()) {
      for (int c = 0; c < 3; ++c) {
        double cc = -dot3(link_tiles[0][(c + 1) % 3], link_tiles[0][(c + 2) % 3]);
        td.fundamental[c] = std::acos(std::max(-1.0, std::min(1.0, cc)));
      }
    }
    std::set<std::string> mset;
    std::vector<Vec3> mirrors;
    for (const auto& lt : link_tiles)
      for (const auto& n : lt) {
        bool is_outer = false;
        for (const auto& on : outer_n)
          if (std::fabs(std::fabs(dot3(on, n)) - 1) < 1e-7) is_outer = true;
        if (is_outer) continue;
        Vec3 m = canon_sign(n);
        if (mset.insert(vec_id(m)).second) mirrors.push_back(m);
      }
    td.second_type = true;
    for (int c = 0; c < 3 && td.second_type; ++c)
      for (const auto& m : mirrors)
        if (std::fabs(dot3(m, corners[c])) < 1e-7 &&
            dot3(m, corners[(c + 1) % 3]) * dot3(m, corners[(c + 2) % 3]) < -1e-12) {
          td.second_type = false;
          break;
        }
    std::sort(td.outer.rbegin(), td.outer.rend());
    std::sort(td.fundamental.rbegin(), td.fundamental.rend());
    td.key = spherical_key(corners, centers, td.outer, td.fundamental);
    return td;
  }

  // ideal vertex: horospherical Euclidean section in the chart at V
  UpperHalfSpace h = upper_half_space_at(V);
  auto line_of = [&](const Vec4& n) {
    auto l = h.trace_line(n);
    return ELine{l.nx, l.ny, l.c};
  };
  std::array<ELine, 3> outer_l;
  for (int i = 0; i < 3; ++i) outer_l[i] = line_of(cont.normals[faces[i]]);
  std::array<std::array<double, 2>, 3> corners;
  corners[0] = eline_meet(outer_l[1], outer_l[2]);
  corners[1] = eline_meet(outer_l[0], outer_l[2]);
  corners[2] = eline_meet(outer_l[0], outer_l[1]);
  for (int c = 0; c < 3; ++c) {
    double cc = -(outer_l[(c + 1) % 3].nx * outer_l[(c + 2) % 3].nx +
                  outer_l[(c + 1) % 3].ny * outer_l[(c + 2) % 3].ny);
    td.outer[c] = std::acos(std::max(-1.0, std::min(1.0, cc)));
  }
  std::vector<std::array<ELine, 3>> link_tiles;
  std::vector<std::array<double, 2>> centers;
  for (const auto& tile : t.tiles) {
    TetRealization r = tile_realization(tile);
    int at = -1;
    for (int w = 0; w < 4; ++w) {
      if (r.vtype[w] != VertexType::Ideal) continue;
      const Vec4& u = r.vertices[w];
      bool close = true;
      for (int k = 0; k < 4; ++k)
        if (std::fabs(u[k] / u[3] - V[k] / V[3]) > 100 * tol) close = false;
      if (close) at = w;
    }
    if (at < 0) continue;
    std::array<ELine, 3> nn;
    int c = 0;
    for (int ff = 0; ff < 4; ++ff)
      if (ff != at) nn[c++] = line_of(r.normals[ff]);
    link_tiles.push_back(nn);
    auto p0 = eline_meet(nn[1], nn[2]);
    auto p1 = eline_meet(nn[0], nn[2]);
    auto p2 = eline_meet(nn[0], nn[1]);
    centers.push_back({(p0[0] + p1[0] + p2[0]) / 3, (p0[1] + p1[1] + p2[1]) / 3});
  }
  td.geometry = Geometry2D::Euclidean;
  td.tiles = static_cast<int>(link_tiles.size());
  if (!link_tiles.empty()) {
    const auto& lt = link_tiles[0];
    for (int c = 0; c < 3; ++c) {
      double cc = -(lt[(c + 1) % 3].nx * lt[(c + 2) % 3].nx +
                    lt[(c + 1) % 3].ny * lt[(c + 2) % 3].ny);
      td.fundamental[c] = std::acos(std::max(-1.0, std::min(1.0, cc)));
    }
  }
  std::set<std::string> mset;
  std::vector<ELine> mirrors;
  for (const auto& lt : link_tiles)
    for (const auto& l : lt) {
      bool is_outer = false;
      for (const auto& ol : outer_l) {
        double cc = std::fabs(l.nx * ol.nx + l.ny * ol.ny);
        double dist_l = l.c * ((l.nx * ol.nx + l.ny * ol.ny) >= 0 ? 1.0 : -1.0);
        if (std::fabs(cc - 1) < 1e-7 && std::fabs(dist_l - ol.c) < 1e-6) is_outer = true;
      }
      if (is_outer) continue;
      if (mset.insert(eline_id(l)).second) mirrors.push_back(l);
    }
  td.second_type = true;
  for (int c = 0; c < 3 && td.second_type; ++c)
    for (const auto& m : mirrors) {
      double v0 = m.nx * corners[c][0] + m.ny * corners[c][1] - m.c;
      if (std::fabs(v0) > 1e-6) continue;
      double da = m.nx * corners[(c + 1) % 3][0] + m.ny * corners[(c + 1) % 3][1] - m.c;
      double db = m.nx * corners[(c + 2) % 3][0] + m.ny * corners[(c + 2) % 3][1] - m.c;
      if (da * db < -1e-12) {
        td.second_type = false;
        break;
      }
    }
  std::sort(td.outer.rbegin(), td.outer.rend());
  std::sort(td.fundamental.rbegin(), td.fundamental.rend());
  td.key = euclidean_key(corners, centers, td.outer, td.fundamental);
  return td;
}

}  // namespace coxtet
