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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsa {

/** Single-site Pauli letter. The numeric values make the product letter a XOR. */
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);

/** Parses one of 'I', 'X', 'Y', 'Z'; throws ParseError otherwise. */
Pauli pauli_from_char(char c);

/**
 * Tensor product of single-site Pauli letters times a phase i^k.
 *
 * The phase is stored as the exponent k in {0, 1, 2, 3}.
 */
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_sites);
  explicit PauliString(std::vector<Pauli> letters, unsigned phase = 0);

  /**
   * Parses the literal form `[+|-][i]LETTERS`, e.g. `-iXIZY`.
   *
   * Case sensitive, no whitespace.
   */
  static PauliString parse(std::string_view literal);

  /** String acting with `letter` on `site` and identity elsewhere. */
  static PauliString single(std::size_t n_sites, std::size_t site, Pauli letter);

  static PauliString from_sites(
      std::size_t n_sites,
      const std::vector<std::pair<std::size_t, Pauli>>& sites);

  std::size_t n_sites() const { return letters_.size(); }
  Pauli operator[](std::size_t site) const { return letters_[site]; }
  Pauli at(std::size_t site) const;
  void set(std::size_t site, Pauli letter);
  const std::vector<Pauli>& letters() const { return letters_; }

  unsigned phase() const { return phase_; }
  PauliString with_phase(unsigned phase) const;
  std::complex<double> phase_value() const;

  bool is_hermitian() const { return phase_ % 2 == 0; }
  bool is_identity() const;

  /** Sites carrying a non-identity letter, ascending. */
  std::vector<std::size_t> support() const;
  std::size_t weight() const;

  /** Literal form; the inverse of parse. */
  std::string str() const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.phase_ == b.phase_ && a.letters_ == b.letters_;
  }
  friend bool operator<(const PauliString& a, const PauliString& b) {
    if (a.letters_ != b.letters_) return a.letters_ < b.letters_;
    return a.phase_ < b.phase_;
  }

 private:
  std::vector<Pauli> letters_;
  unsigned phase_ = 0;
};

/** Exact operator product a·b including the phase. */
PauliString multiply(const PauliString& a, const PauliString& b);
PauliString operator*(const PauliString& a, const PauliString& b);

/** True iff a·b == b·a. */
bool commutes(const PauliString& a, const PauliString& b);

/** Absolute tolerance used when collecting real or complex coefficients. */
inline constexpr double kCollectTolerance = 1e-12;

/** One term of a WeightedPauliSum. The string always has phase +1. */
struct PauliTerm {
  double coeff;
  PauliString string;
};

/** Real linear combination of Hermitian Pauli strings in collected form. */
class WeightedPauliSum {
 public:
  WeightedPauliSum() = default;
  explicit WeightedPauliSum(std::size_t n_sites) : n_sites_(n_sites) {}
  WeightedPauliSum(const PauliString& p);  // NOLINT: implicit on purpose

  static WeightedPauliSum identity(std::size_t n_sites);

  /** Adds coeff·p. Phase -1 is folded into the coefficient; phase ±i throws. */
  void add(double coeff, const PauliString& p);

  std::size_t n_sites() const { return n_sites_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /** The single term if the sum has exactly one, else nullopt. */
  std::optional<PauliTerm> single_term() const;
  bool is_identity() const;

  std::string str() const;

  friend bool operator==(const WeightedPauliSum& a, const WeightedPauliSum& b);

 private:
  std::size_t n_sites_ = 0;
  std::vector<PauliTerm> terms_;
};

WeightedPauliSum operator*(double s, const WeightedPauliSum& h);
WeightedPauliSum operator+(const WeightedPauliSum& a, const WeightedPauliSum& b);

/**
 * Complex linear combination of Pauli strings, keyed by letters.
 *
 * Intermediate form for products and commutators, which need not be Hermitian.
 */
class ComplexPauliSum {
 public:
  ComplexPauliSum() = default;
  explicit ComplexPauliSum(std::size_t n_sites) : n_sites_(n_sites) {}
  ComplexPauliSum(const PauliString& p);        // NOLINT
  ComplexPauliSum(const WeightedPauliSum& h);   // NOLINT

  void add(std::complex<double> coeff, const PauliString& p);

  std::size_t n_sites() const { return n_sites_; }
  const std::map<std::vector<Pauli>, std::complex<double>>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  /** Real form; throws DomainError if an imaginary part survives collection. */
  WeightedPauliSum to_real() const;

  friend ComplexPauliSum operator*(const ComplexPauliSum& a,
                                   const ComplexPauliSum& b);
  friend ComplexPauliSum operator+(const ComplexPauliSum& a,
                                   const ComplexPauliSum& b);
  friend ComplexPauliSum operator*(std::complex<double> s,
                                   const ComplexPauliSum& a);
  friend bool operator==(const ComplexPauliSum& a, const ComplexPauliSum& b);

 private:
  void prune();

  std::size_t n_sites_ = 0;
  std::map<std::vector<Pauli>, std::complex<double>> terms_;
};

/** Collected h·h. */
WeightedPauliSum square(const WeightedPauliSum& h);

/** Collected commutator [a, b]. */
ComplexPauliSum commutator(const ComplexPauliSum& a, const ComplexPauliSum& b);

/** True iff [a, b] vanishes after expansion and collection. */
bool sum_commutes(const WeightedPauliSum& a, const WeightedPauliSum& b);

inline std::ostream& operator<<(std::ostream& os, const PauliString& p) { return os << p.str(); }
inline std::ostream& operator<<(std::ostream& os, const WeightedPauliSum& h) { return os << h.str(); }

}  // namespace qsa
