// Copyright 2026 The QSA Authors
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

#include "qsa/propagator.hpp"

#include <cmath>
#include <numbers>

#include "qsa/errors.hpp"

namespace qsa {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_site(std::size_t site, std::size_t n_sites) {
  if (site >= n_sites) {
    throw DomainError("site " + std::to_string(site) + " out of range for " +
                      std::to_string(n_sites) + " sites");
  }
}

void check_connectors(Pauli alpha, Pauli beta) {
  if (alpha == Pauli::I || beta == Pauli::I) {
    throw DomainError("connector letters must be non-identity");
  }
  if (alpha == beta) throw DomainError("connector letters must differ");
}

}  // namespace

double forward_angle(const Branch& b) { return 1.5 * kPi + 2.0 * kPi * b.m; }
double inverse_angle(const Branch& b) { return 0.5 * kPi + 2.0 * kPi * b.mp; }

InvolutionRotation::InvolutionRotation(WeightedPauliSum generator, double angle,
                                       Direction direction)
    : generator_(std::move(generator)), angle_(angle), direction_(direction) {
  if (!square(generator_).is_identity()) {
    throw DomainError("generator does not square to identity: " + generator_.str());
  }
}

InvolutionRotation InvolutionRotation::offset(double delta) const {
  InvolutionRotation r = *this;
  r.angle_ += delta;
  return r;
}

void AttachmentSpec::check() const {
  check_connectors(alpha, beta);
  if (attached_letter == Pauli::I) {
    throw DomainError("attached letter must be non-identity");
  }
  if (attached_site == connector_site) {
    throw DomainError("attached site equals connector site");
  }
}

std::string AttachmentSpec::str() const {
  return std::string("attach(") + to_char(alpha) + "/" + to_char(beta) + "@" +
         std::to_string(connector_site) + " -> " + to_char(attached_letter) + "@" +
         std::to_string(attached_site) + ")";
}

void SwapperSpec::check() const { check_connectors(alpha, beta); }

std::string SwapperSpec::str() const {
  return std::string("swap(") + to_char(alpha) + "<->" + to_char(beta) + "@" +
         std::to_string(site) + ")";
}

WeightedPauliSum attachment_generator(const AttachmentSpec& spec,
                                      std::size_t n_sites) {
  spec.check();
  check_site(spec.connector_site, n_sites);
  check_site(spec.attached_site, n_sites);
  WeightedPauliSum h(n_sites);
  h.add(kInvSqrt2, PauliString::single(n_sites, spec.connector_site, spec.alpha));
  h.add(kInvSqrt2, PauliString::from_sites(
                       n_sites, {{spec.connector_site, spec.beta},
                                 {spec.attached_site, spec.attached_letter}}));
  return h;
}

WeightedPauliSum swapper_generator(const SwapperSpec& spec, std::size_t n_sites) {
  spec.check();
  check_site(spec.site, n_sites);
  WeightedPauliSum h(n_sites);
  h.add(kInvSqrt2, PauliString::single(n_sites, spec.site, spec.alpha));
  h.add(kInvSqrt2, PauliString::single(n_sites, spec.site, spec.beta));
  return h;
}

InvolutionRotation make_attachment(const AttachmentSpec& spec, std::size_t n_sites,
                                   Direction direction) {
  double angle = direction == Direction::forward ? forward_angle(spec.branch)
                                                 : inverse_angle(spec.branch);
  return InvolutionRotation(attachment_generator(spec, n_sites), angle, direction);
}

InvolutionRotation make_swapper(const SwapperSpec& spec, std::size_t n_sites,
                                Direction direction) {
  double angle = direction == Direction::forward ? forward_angle(spec.branch)
                                                 : inverse_angle(spec.branch);
  return InvolutionRotation(swapper_generator(spec, n_sites), angle, direction);
}

ComplexPauliSum conjugate_general(const PauliString& q, const InvolutionRotation& r) {
  if (q.n_sites() != r.n_sites()) {
    throw DimensionError("conjugate: site count mismatch");
  }
  using C = std::complex<double>;
  const double c = std::cos(r.angle());
  const double s = std::sin(r.angle());
  ComplexPauliSum h(r.generator());
  ComplexPauliSum qs(q);
  ComplexPauliSum hq = h * qs;
  ComplexPauliSum qh = qs * h;
  ComplexPauliSum hqh = hq * h;
  return C(c * c) * qs + C(s * s) * hqh +
         C(0.0, -s * c) * (hq + C(-1.0) * qh);
}

WeightedPauliSum conjugate(const PauliString& q, const InvolutionRotation& r) {
  if (!q.is_hermitian()) {
    throw DomainError("conjugate expects a Hermitian string, got " + q.str());
  }
  return conjugate_general(q, r).to_real();
}

std::optional<PauliString> conjugate_strict(const PauliString& q,
                                            const InvolutionRotation& r) {
  WeightedPauliSum out = conjugate(q, r);
  auto t = out.single_term();
  if (!t || std::abs(t->coeff - 1.0) > kCollectTolerance) return std::nullopt;
  return t->string;
}

PauliString apply_swap(const PauliString& q, const SwapperSpec& s) {
  s.check();
  Pauli current = q.at(s.site);
  PauliString out = q;
  if (current == s.alpha) {
    out.set(s.site, s.beta);
  } else if (current == s.beta) {
    out.set(s.site, s.alpha);
  } else {
    throw ConnectorMismatchError("letter " + std::string(1, to_char(current)) +
                                 " at site " + std::to_string(s.site) +
                                 " matches neither connector of " + s.str());
  }
  return out;
}

}  // namespace qsa
