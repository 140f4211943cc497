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

#include "qsa/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qsa/errors.hpp"

namespace qsa {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("site count mismatch: " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

// Product of two letters as (letter, exponent of i).
std::pair<Pauli, unsigned> letter_product(Pauli a, Pauli b) {
  if (a == Pauli::I) return {b, 0};
  if (b == Pauli::I) return {a, 0};
  if (a == b) return {Pauli::I, 0};
  auto ua = static_cast<unsigned>(a);
  auto ub = static_cast<unsigned>(b);
  auto c = static_cast<Pauli>(ua ^ ub);
  // XY = iZ, YZ = iX, ZX = iY; the reversed order gives -i.
  bool cyclic = (ub + 3 - ua) % 3 == 1;
  return {c, cyclic ? 1u : 3u};
}

std::complex<double> i_power(unsigned k) {
  switch (k % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw ParseError(std::string("invalid Pauli letter '") + c + "'");
  }
}

PauliString::PauliString(std::size_t n_sites) : letters_(n_sites, Pauli::I) {}

PauliString::PauliString(std::vector<Pauli> letters, unsigned phase)
    : letters_(std::move(letters)), phase_(phase % 4) {}

PauliString PauliString::parse(std::string_view literal) {
  std::size_t pos = 0;
  unsigned phase = 0;
  if (pos < literal.size() && (literal[pos] == '+' || literal[pos] == '-')) {
    if (literal[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < literal.size() && literal[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  if (pos == literal.size()) {
    throw ParseError("Pauli literal has no letters: '" + std::string(literal) + "'");
  }
  std::vector<Pauli> letters;
  letters.reserve(literal.size() - pos);
  for (; pos < literal.size(); ++pos) letters.push_back(pauli_from_char(literal[pos]));
  return PauliString(std::move(letters), phase);
}

PauliString PauliString::single(std::size_t n_sites, std::size_t site,
                                Pauli letter) {
  PauliString p(n_sites);
  p.set(site, letter);
  return p;
}

PauliString PauliString::from_sites(
    std::size_t n_sites, const std::vector<std::pair<std::size_t, Pauli>>& sites) {
  PauliString p(n_sites);
  for (const auto& [site, letter] : sites) p.set(site, letter);
  return p;
}

Pauli PauliString::at(std::size_t site) const {
  if (site >= letters_.size()) {
    throw DomainError("site " + std::to_string(site) + " out of range");
  }
  return letters_[site];
}

void PauliString::set(std::size_t site, Pauli letter) {
  if (site >= letters_.size()) {
    throw DomainError("site " + std::to_string(site) + " out of range");
  }
  letters_[site] = letter;
}

PauliString PauliString::with_phase(unsigned phase) const {
  return PauliString(letters_, phase);
}

std::complex<double> PauliString::phase_value() const { return i_power(phase_); }

bool PauliString::is_identity() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](Pauli p) { return p == Pauli::I; });
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (letters_[k] != Pauli::I) out.push_back(k);
  }
  return out;
}

std::size_t PauliString::weight() const { return support().size(); }

std::string PauliString::str() const {
  std::string out;
  if (phase_ >= 2) out += '-';
  if (phase_ % 2 == 1) out += 'i';
  for (Pauli p : letters_) out += to_char(p);
  return out;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  require_same_size(a.n_sites(), b.n_sites());
  std::vector<Pauli> letters(a.n_sites());
  unsigned phase = a.phase() + b.phase();
  for (std::size_t k = 0; k < a.n_sites(); ++k) {
    auto [c, e] = letter_product(a[k], b[k]);
    letters[k] = c;
    phase += e;
  }
  return PauliString(std::move(letters), phase);
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  return multiply(a, b);
}

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_size(a.n_sites(), b.n_sites());
  std::size_t clashes = 0;
  for (std::size_t k = 0; k < a.n_sites(); ++k) {
    if (a[k] != Pauli::I && b[k] != Pauli::I && a[k] != b[k]) ++clashes;
  }
  return clashes % 2 == 0;
}

// WeightedPauliSum

WeightedPauliSum::WeightedPauliSum(const PauliString& p) : n_sites_(p.n_sites()) {
  add(1.0, p);
}

WeightedPauliSum WeightedPauliSum::identity(std::size_t n_sites) {
  return WeightedPauliSum(PauliString(n_sites));
}

void WeightedPauliSum::add(double coeff, const PauliString& p) {
  require_same_size(n_sites_, p.n_sites());
  if (!p.is_hermitian()) {
    throw DomainError("non-Hermitian string " + p.str() + " in a real sum");
  }
  if (p.phase() == 2) coeff = -coeff;
  PauliString key = p.with_phase(0);
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const PauliTerm& t) {
    return t.string == key;
  });
  if (it == terms_.end()) {
    if (std::abs(coeff) > kCollectTolerance) terms_.push_back({coeff, key});
    return;
  }
  it->coeff += coeff;
  if (std::abs(it->coeff) <= kCollectTolerance) terms_.erase(it);
}

std::optional<PauliTerm> WeightedPauliSum::single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_.front();
}

bool WeightedPauliSum::is_identity() const {
  auto t = single_term();
  return t && t->string.is_identity() &&
         std::abs(t->coeff - 1.0) <= kCollectTolerance;
}

std::string WeightedPauliSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(12);
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) os << " + ";
    os << terms_[k].coeff << "*" << terms_[k].string.str();
  }
  return os.str();
}

bool operator==(const WeightedPauliSum& a, const WeightedPauliSum& b) {
  return ComplexPauliSum(a) == ComplexPauliSum(b);
}

WeightedPauliSum operator*(double s, const WeightedPauliSum& h) {
  WeightedPauliSum out(h.n_sites());
  for (const auto& t : h.terms()) out.add(s * t.coeff, t.string);
  return out;
}

WeightedPauliSum operator+(const WeightedPauliSum& a, const WeightedPauliSum& b) {
  require_same_size(a.n_sites(), b.n_sites());
  WeightedPauliSum out = a;
  for (const auto& t : b.terms()) out.add(t.coeff, t.string);
  return out;
}

// ComplexPauliSum

ComplexPauliSum::ComplexPauliSum(const PauliString& p) : n_sites_(p.n_sites()) {
  add(1.0, p);
}

ComplexPauliSum::ComplexPauliSum(const WeightedPauliSum& h)
    : n_sites_(h.n_sites()) {
  for (const auto& t : h.terms()) add(t.coeff, t.string);
}

void ComplexPauliSum::add(std::complex<double> coeff, const PauliString& p) {
  require_same_size(n_sites_, p.n_sites());
  auto& slot = terms_[p.letters()];
  slot += coeff * p.phase_value();
  if (std::abs(slot.real()) <= kCollectTolerance &&
      std::abs(slot.imag()) <= kCollectTolerance) {
    terms_.erase(p.letters());
  }
}

void ComplexPauliSum::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second.real()) <= kCollectTolerance &&
        std::abs(it->second.imag()) <= kCollectTolerance) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

WeightedPauliSum ComplexPauliSum::to_real() const {
  WeightedPauliSum out(n_sites_);
  for (const auto& [letters, c] : terms_) {
    if (std::abs(c.imag()) > kCollectTolerance) {
      throw DomainError("sum is not Hermitian: imaginary coefficient on " +
                        PauliString(letters).str());
    }
    out.add(c.real(), PauliString(letters));
  }
  return out;
}

ComplexPauliSum operator*(const ComplexPauliSum& a, const ComplexPauliSum& b) {
  require_same_size(a.n_sites(), b.n_sites());
  ComplexPauliSum out(a.n_sites());
  for (const auto& [la, ca] : a.terms()) {
    PauliString pa(la);
    for (const auto& [lb, cb] : b.terms()) {
      PauliString prod = multiply(pa, PauliString(lb));
      out.terms_[prod.letters()] += ca * cb * prod.phase_value();
    }
  }
  out.prune();
  return out;
}

ComplexPauliSum operator+(const ComplexPauliSum& a, const ComplexPauliSum& b) {
  require_same_size(a.n_sites(), b.n_sites());
  ComplexPauliSum out = a;
  for (const auto& [l, c] : b.terms()) out.terms_[l] += c;
  out.prune();
  return out;
}

ComplexPauliSum operator*(std::complex<double> s, const ComplexPauliSum& a) {
  ComplexPauliSum out(a.n_sites());
  for (const auto& [l, c] : a.terms()) out.terms_[l] = s * c;
  out.prune();
  return out;
}

bool operator==(const ComplexPauliSum& a, const ComplexPauliSum& b) {
  if (a.n_sites() != b.n_sites()) return false;
  return (a + std::complex<double>(-1.0) * b).is_zero();
}

WeightedPauliSum square(const WeightedPauliSum& h) {
  ComplexPauliSum c(h);
  return (c * c).to_real();
}

ComplexPauliSum commutator(const ComplexPauliSum& a, const ComplexPauliSum& b) {
  return a * b + std::complex<double>(-1.0) * (b * a);
}

bool sum_commutes(const WeightedPauliSum& a, const WeightedPauliSum& b) {
  require_same_size(a.n_sites(), b.n_sites());
  return commutator(ComplexPauliSum(a), ComplexPauliSum(b)).is_zero();
}

}  // namespace qsa
