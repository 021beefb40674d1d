// Copyright 2026 The dimerent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include "dimerent/dimer_model.hpp"
#include "test_support.hpp"

using namespace dimerent;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using dimerent::testing::uniform;

namespace {

// -(J/4) sum_a sigma^a (x) sigma^a - (B/2)(sigma^z (x) 1 + 1 (x) sigma^z),
// assembled from Kronecker products.
Matrix4 kron_hamiltonian(double j, double b) {
  const Matrix4 exchange =
      add(add(kron(pauli_x(), pauli_x()), sigma_yy()), kron(pauli_z(), pauli_z()));
  const Matrix4 zeeman = add(kron(pauli_z(), identity2()), kron(identity2(), pauli_z()));
  return add(scaled(exchange, -j / 4.0), scaled(zeeman, -b / 2.0));
}

}  // namespace

TEST_CASE("Hamiltonian direct fill matches Kronecker assembly", "[dimer-model]") {
  for (int trial = 0; trial < 1000; ++trial) {
    const double j = uniform(-500.0, 500.0);
    const double b = uniform(-500.0, 500.0);
    const auto h = build_hamiltonian(DimerParams(j), FieldSpec(b));
    CHECK(max_abs_diff(h.matrix(), kron_hamiltonian(j, b)) <= 1e-14 * std::max(1.0, std::abs(j) + std::abs(b)));
  }
}

TEST_CASE("Hamiltonian example entries", "[dimer-model]") {
  const auto h = build_hamiltonian(DimerParams(-10.0), FieldSpec(0.0));
  CHECK(h(0, 0) == 2.5);
  CHECK(h(1, 1) == -2.5);
  CHECK(h(2, 2) == -2.5);
  CHECK(h(3, 3) == 2.5);
  CHECK(h(1, 2) == 5.0);
  CHECK(h(0, 3) == 0.0);

  const auto hb = build_hamiltonian(DimerParams(-10.0), FieldSpec(4.0));
  CHECK(hb(0, 0) == -1.5);
  CHECK(hb(3, 3) == 6.5);
}

TEST_CASE("Analytic spectrum matches numerical diagonalization", "[dimer-model]") {
  const Vector4 e = analytic_spectrum(DimerParams(-10.0), FieldSpec(0.0));
  CHECK(e == Vector4{-7.5, 2.5, 2.5, 2.5});

  for (int trial = 0; trial < 1000; ++trial) {
    const DimerParams p(uniform(-300.0, 300.0));
    const FieldSpec f(uniform(-300.0, 300.0));
    const Vector4 a = analytic_spectrum(p, f);
    const Vector4 n = eig_sym(build_hamiltonian(p, f)).eigenvalues;
    for (std::size_t k = 0; k < 4; ++k) CHECK_THAT(n[k], WithinAbs(a[k], 1e-11));
  }
}

TEST_CASE("Antiferromagnetic ground state is the singlet for weak field", "[dimer-model]") {
  const DimerParams p(-10.0);
  const auto s = eig_sym(build_hamiltonian(p, FieldSpec(3.0)));
  CHECK_THAT(s.eigenvalues[0], WithinAbs(-7.5, 1e-12));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK_THAT(s.eigenvectors[0][1], WithinAbs(r, 1e-12));
  CHECK_THAT(s.eigenvectors[0][2], WithinAbs(-r, 1e-12));
}

TEST_CASE("Parameter validation", "[dimer-model]") {
  CHECK_THROWS_AS(DimerParams(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(DimerParams(-1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(DimerParams(-1.0, -2.0), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(HUGE_VAL), std::invalid_argument);
  CHECK(DimerParams(-1.0).antiferromagnetic());
  CHECK_FALSE(DimerParams(0.0).antiferromagnetic());
  CHECK_FALSE(DimerParams(5.0).antiferromagnetic());
}

TEST_CASE("Tesla and Kelvin conversion", "[dimer-model]") {
  CHECK(tesla_to_kelvin(0.0) == 0.0);
  CHECK_THAT(kelvin_to_tesla(10.0), WithinRel(7.44364621309821, 1e-12));
  CHECK_THAT(kelvin_to_tesla(140.0), WithinRel(104.211046983375, 1e-12));
  CHECK_THAT(tesla_to_kelvin(kelvin_to_tesla(37.5, 2.1), 2.1), WithinRel(37.5, 1e-15));
  CHECK_THAT(tesla_to_kelvin(1.0, 1.0), WithinRel(0.67171381563, 1e-15));
  CHECK_THROWS_AS(tesla_to_kelvin(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(kelvin_to_tesla(std::nan("")), std::invalid_argument);
}
