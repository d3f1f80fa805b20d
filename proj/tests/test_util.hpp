#pragma once

#include <random>

#include <map>
#include <tuple>

#include "hpolar/cone_metric.hpp"
#include "hpolar/hpolyhedron.hpp"
#include "hpolar/minkowski.hpp"
#include "hpolar/models.hpp"

namespace hpolar::testutil {

// Half-space with outward unit Klein normal `direction` at plane offset `offset`.
inline HalfSpace make_halfspace(const Eigen::Vector3d& direction, double offset) {
  const Eigen::Vector3d d = direction.normalized();
  const double s = 1.0 / std::sqrt(1.0 - offset * offset);
  return HalfSpace(DSPoint(MinkowskiVec4(offset * s, d * s)));
}

inline Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Vector3d v(n(rng), n(rng), n(rng));
  while (v.norm() < 1e-6) v = Eigen::Vector3d(n(rng), n(rng), n(rng));
  return v.normalized();
}

inline Eigen::Vector3d random_in_ball(std::mt19937_64& rng, double max_radius = 0.95) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return random_unit(rng) * (max_radius * std::cbrt(u(rng)));
}

inline HPoint random_hpoint(std::mt19937_64& rng, double max_radius = 0.95) {
  return from_klein(KleinPoint(random_in_ball(rng, max_radius)));
}

inline Eigen::Matrix3d random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = n(rng);
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(m);
  Eigen::Matrix3d q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

// The round sphere cut into eight octants; every complex vertex is smooth (2pi)
// and of degree four with opposite sides pi/2.
inline ConeMetricSurface octant_sphere() {
  std::vector<SphericalPolygon> cells;
  std::vector<std::array<Eigen::Vector3d, 3>> corners3d;
  for (int sx : {+1, -1})
    for (int sy : {+1, -1})
      for (int sz : {+1, -1}) {
        Eigen::Vector3d x(sx, 0, 0), y(0, sy, 0), z(0, 0, sz);
        Eigen::Matrix3d m;
        m.col(0) = x;
        m.col(1) = y;
        m.col(2) = z;
        corners3d.push_back(m.determinant() > 0 ? std::array<Eigen::Vector3d, 3>{x, y, z}
                                                : std::array<Eigen::Vector3d, 3>{x, z, y});
        cells.push_back(SphericalPolygon({M_PI / 2, M_PI / 2, M_PI / 2},
                                         {M_PI / 2, M_PI / 2, M_PI / 2}));
      }
  auto key = [](const Eigen::Vector3d& v) {
    return std::make_tuple(int(std::lround(v.x())), int(std::lround(v.y())),
                           int(std::lround(v.z())));
  };
  std::map<std::tuple<std::tuple<int, int, int>, std::tuple<int, int, int>>,
           std::pair<int, int>>
      open_sides;
  std::vector<Gluing> gluings;
  for (int c = 0; c < int(corners3d.size()); ++c)
    for (int s = 0; s < 3; ++s) {
      const auto a = key(corners3d[std::size_t(c)][std::size_t(s)]);
      const auto b = key(corners3d[std::size_t(c)][std::size_t((s + 1) % 3)]);
      auto it = open_sides.find(std::make_tuple(b, a));
      if (it != open_sides.end()) {
        gluings.push_back({it->second.first, it->second.second, c, s});
        open_sides.erase(it);
      } else {
        open_sides[std::make_tuple(a, b)] = {c, s};
      }
    }
  return ConeMetricSurface(std::move(cells), std::move(gluings));
}

inline LorentzTransform random_lorentz(std::mt19937_64& rng, double max_rapidity = 1.5) {
  std::uniform_real_distribution<double> u(-max_rapidity, max_rapidity);
  const auto r1 = LorentzTransform::rotation(random_rotation(rng));
  const auto b = LorentzTransform::boost(random_unit(rng), u(rng));
  const auto r2 = LorentzTransform::rotation(random_rotation(rng));
  return r1 * b * r2;
}

}  // namespace hpolar::testutil
