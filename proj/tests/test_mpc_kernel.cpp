#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mpcq/error.hpp"
#include "mpcq/mpc_kernel.hpp"

using namespace mpcq;
using namespace mpcq::mpc;

namespace {

constexpr double kPi = std::numbers::pi;

RealMatrix random_symmetric(std::mt19937_64& rng, int n, double scale) {
  std::normal_distribution<double> d(0.0, scale);
  RealMatrix a(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) a(i, j) = d(rng);
  return 0.5 * (a + a.transpose());
}

// Symmetric S commuting with J, so exp(Ω S t) stays unitary.
RealMatrix random_unitary_generator(std::mt19937_64& rng, int n, double scale) {
  const RealMatrix s = random_symmetric(rng, n, scale);
  const RealMatrix j = complex_structure(n);
  return 0.5 * (s - j * s * j);
}

}  // namespace

TEST_CASE("omega and J conventions") {
  const RealMatrix w = omega_matrix(2);
  const RealMatrix j = complex_structure(2);
  CHECK((j * j + RealMatrix::Identity(4, 4)).norm() < 1e-15);
  CHECK(is_symplectic(j));
  CHECK((j.transpose() * w * j - w).norm() < 1e-15);
}

TEST_CASE("c_map examples") {
  const auto id = c_map(SymplecticMatrix::identity(3));
  CHECK((id - ComplexMatrix::Identity(3, 3)).norm() < 1e-12);

  const double theta = 0.7;
  const std::vector<double> angles(2, theta);
  const auto rot = c_map(SymplecticMatrix(plane_rotations(angles)));
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      CHECK(std::abs(rot(i, k) - (i == k ? std::polar(1.0, theta) : Complex(0))) < 1e-12);

  RealMatrix shear(2, 2);
  shear << 1, 1, 0, 1;
  const auto c = c_map(SymplecticMatrix(shear));
  CHECK(std::abs(c(0, 0) - Complex(1.0, -0.5)) < 1e-12);

  RealMatrix bad(2, 2);
  bad << 2, 0, 0, 1;
  CHECK_THROWS_AS(SymplecticMatrix{bad}, Error);
}

TEST_CASE("det_c examples") {
  CHECK(std::abs(det_c(SymplecticMatrix::identity(2)) - 1.0) < 1e-12);
  const double xi = 0.13;
  const std::vector<double> angles(3, 2 * kPi * xi);
  CHECK(std::abs(det_c(SymplecticMatrix(plane_rotations(angles))) - std::polar(1.0, 2 * kPi * 3 * xi)) < 1e-12);
  RealMatrix shear(2, 2);
  shear << 1, 1, 0, 1;
  const Complex d = det_c(SymplecticMatrix(shear));
  CHECK(std::abs(d - Complex(1.0, -0.5)) < 1e-12);
  CHECK(std::abs(d) == doctest::Approx(std::sqrt(1.25)).epsilon(1e-12));
}

TEST_CASE("det_c modulus property on random symplectic matrices") {
  std::mt19937_64 rng(7);
  int unitary_seen = 0, general_seen = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 4;
    const bool unitary = i % 2 == 0;
    const RealMatrix s = unitary ? random_unitary_generator(rng, n, 1.0) : random_symmetric(rng, n, 0.6);
    const SymplecticMatrix g(exp_hamiltonian(s));
    const double m = std::abs(det_c(g));
    CHECK(m >= 1 - 1e-9);
    if (commutes_with_j(g.matrix(), 1e-6)) {
      ++unitary_seen;
      CHECK(std::abs(m - 1) < 1e-9);
    } else {
      ++general_seen;
      CHECK(m > 1 + 1e-9);
    }
  }
  CHECK(unitary_seen >= 500);
  CHECK(general_seen > 0);
}

TEST_CASE("track_sqrt examples") {
  const SymplecticPath constant = [](double) { return RealMatrix::Identity(4, 4); };
  CHECK(std::abs(track_sqrt(constant, 10) - 1.0) < 1e-12);

  const std::vector<WeightVector> one{{1}};
  CHECK(std::abs(track_sqrt(weight_rotation_path(one, Generator{1}), 100) + 1.0) < 1e-9);

  const std::vector<WeightVector> three{{1}, {1}, {1}};
  CHECK(std::abs(track_sqrt(weight_rotation_path(three, Generator{1}), 100) + 1.0) < 1e-9);
}

TEST_CASE("track_sqrt rejects coarse sampling and paths not starting at the identity") {
  const std::vector<WeightVector> w{{4}};
  try {
    track_sqrt(weight_rotation_path(w, Generator{1}), 8);
    FAIL("expected StepTooCoarse");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::StepTooCoarse);
  }
  const SymplecticPath shifted = [](double t) {
    const std::vector<double> a{1.0 + t};
    return plane_rotations(a);
  };
  CHECK_THROWS_AS(track_sqrt(shifted, 50), Error);
  const SymplecticPath broken = [](double t) {
    RealMatrix g = RealMatrix::Identity(2, 2);
    g(0, 0) = 1 + t;
    return g;
  };
  try {
    track_sqrt(broken, 50);
    FAIL("expected NotSymplectic");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSymplectic);
  }
}

TEST_CASE("halfform_phase examples") {
  CHECK(halfform_phase(std::vector<WeightVector>{{1}}, Generator{1}) == Complex(-1, 0));
  CHECK(halfform_phase(std::vector<WeightVector>{}, Generator{1, 2}) == Complex(1, 0));
  CHECK(halfform_phase(std::vector<WeightVector>{{1, 0}, {0, 1}}, Generator{1, 1}) == Complex(1, 0));
  try {
    halfform_phase(std::vector<WeightVector>{{1, 0}}, Generator{1});
    FAIL("expected RankMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RankMismatch);
  }
}

TEST_CASE("halfform_phase agrees with tracked square roots") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> d(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = 1 + i % 2, n = 1 + i % 3;
    std::vector<WeightVector> w(n, WeightVector(k));
    for (auto& v : w)
      for (auto& e : v) e = d(rng);
    Generator xi(k);
    for (auto& e : xi) e = d(rng);
    bool small = true;
    for (const auto& v : w) small = small && std::abs(pairing(v, xi)) <= 10;
    if (!small) continue;
    std::int64_t total = 0;
    for (const auto& v : w) total += std::abs(pairing(v, xi));
    const int steps = static_cast<int>(20 * (total + 1));
    CHECK(std::abs(halfform_phase(w, xi) - track_sqrt(weight_rotation_path(w, xi), steps)) < 1e-9);
  }
}

TEST_CASE("track_sqrt is stable under step refinement and lands on the metaplectic cover") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 3;
    const RealMatrix s = i % 2 ? random_unitary_generator(rng, n, 2.0) : random_symmetric(rng, n, 0.4);
    const SymplecticPath path = [s](double t) { return exp_hamiltonian(s, t); };
    const auto fine = track_parameters(path, 400);
    const auto coarse = track_parameters(path, 200);
    CHECK(std::abs(fine.mu - coarse.mu) < 1e-9);
    CHECK(fine.is_metaplectic());
  }
}
