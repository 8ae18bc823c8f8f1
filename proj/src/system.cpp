#include "mpcq/system.hpp"

namespace mpcq {

void SystemData::validate() const {
  if (rank == 0) throw Error(Errc::Schema, "torus rank must be positive");
  if (rank > dim) throw Error(Errc::Schema, "torus rank exceeds complex dimension");
  for (const auto& z : fixed_points) {
    if (z.weights.size() != dim)
      throw Error(Errc::Schema, "fixed point " + z.name + " has " + std::to_string(z.weights.size()) +
                                    " weights, expected " + std::to_string(dim));
    for (const auto& w : z.weights)
      if (w.size() != rank) throw Error(Errc::RankMismatch, "weight at " + z.name + " has wrong length");
    if (z.momentum.rank() != rank) throw Error(Errc::RankMismatch, "momentum at " + z.name + " has wrong length");
  }
  for (const auto& r : rays)
    if (r.rank() != rank) throw Error(Errc::RankMismatch, "recession ray has wrong length");
  if (polyhedron && polyhedron->rank() != rank) throw Error(Errc::RankMismatch, "polyhedron rank differs");
}

SystemData SystemData::shifted(const RatCovector& c) const {
  SystemData out = *this;
  for (auto& z : out.fixed_points) z.momentum += c;
  if (out.polyhedron) out.polyhedron = out.polyhedron->translated(c);
  return out;
}

SystemData SystemData::transformed(const UnimodularMatrix& b) const {
  SystemData out = *this;
  for (auto& z : out.fixed_points) {
    for (auto& w : z.weights) w = unimodular_transform(w, b);
    z.momentum = unimodular_transform(z.momentum, b);
  }
  for (auto& r : out.rays) r = unimodular_transform(r, b);
  if (out.polyhedron) out.polyhedron = out.polyhedron->transformed(b);
  return out;
}

}  // namespace mpcq
