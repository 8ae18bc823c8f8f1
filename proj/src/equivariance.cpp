#include "mpcq/equivariance.hpp"

namespace mpcq {

RatCovector half_sum(const FixedPointDatum& z) {
  RatCovector sum = RatCovector::zero(z.momentum.rank());
  for (const auto& w : z.weights) sum += RatCovector::from_integers(w);
  return Rational(1, 2) * sum;
}

RatCovector defect(const FixedPointDatum& z) { return frac_part(z.momentum - half_sum(z)); }

RatCovector solve_shift(const SystemData& s) {
  if (s.fixed_points.empty()) throw Error(Errc::NoFixedPoints, "no fixed points supplied");
  s.validate();
  std::optional<RatCovector> shift;
  const FixedPointDatum* first = nullptr;
  for (const auto& z : s.fixed_points) {
    RatCovector c = frac_part(half_sum(z) - z.momentum);
    if (!shift) {
      shift = c;
      first = &z;
    } else if (c != *shift) {
      throw Error(Errc::InconsistentDefects, "fixed point " + first->name + " has defect " +
                                                 to_string(defect(*first)) + " but " + z.name + " has defect " +
                                                 to_string(defect(z)));
    }
  }
  return *shift;
}

EquivarianceReport check_equivariance(const SystemData& s) {
  if (!s.mpc_prequantizable.value)
    throw Error(Errc::NotPrequantizable, "system is not flagged metaplectic-c prequantizable");
  if (s.fixed_points.empty()) throw Error(Errc::NoFixedPoints, "no fixed points supplied");
  s.validate();

  EquivarianceReport report;
  report.overall = true;
  for (const auto& z : s.fixed_points) {
    FixedPointCheck c{z.name, half_sum(z), defect(z)};
    if (!c.defect.is_zero()) report.overall = false;
    report.points.push_back(std::move(c));
  }
  if (!report.overall) {
    try {
      report.suggested_shift = solve_shift(s);
    } catch (const Error& e) {
      if (e.code() != Errc::InconsistentDefects) throw;
    }
  }
  return report;
}

}  // namespace mpcq
