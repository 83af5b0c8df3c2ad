#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ratjones {

/// Integer sequence in display order: the entry applied last (n_k) comes first.
/// R(n_k, ..., n_1) evaluates to n_k - 1/(n_{k-1} - 1/(... - 1/n_1)).
using IntSeq = std::vector<std::int64_t>;

/// Reduced fraction in Q ∪ {∞}. Canonical sign: q >= 0, and ∞ is stored as 1/0.
class Rat {
 public:
  Rat() = default;  // 0/1
  /// Reduces p/q; throws InvalidArgument for 0/0.
  Rat(std::int64_t p, std::int64_t q);

  static Rat infinity() { return Rat(1, 0); }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }

  friend bool operator==(const Rat&, const Rat&) = default;

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

std::string to_string(const Rat& r);

/// Two-bridge knot class under Schubert equivalence: K(p/q) ≅ K(p/q') iff
/// q ≡ q'^{±1} (mod p). `q` is the smaller member of the inversion orbit.
struct KnotClass {
  std::int64_t p = 1;
  std::int64_t q = 0;
  std::int64_t q_inv = 0;  // q^-1 mod p, >= q
  bool amphicheiral = true;

  std::vector<std::int64_t> qset() const;

  friend bool operator==(const KnotClass& a, const KnotClass& b) { return a.p == b.p && a.q == b.q; }
  friend auto operator<=>(const KnotClass& a, const KnotClass& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.q <=> b.q;
  }
};

std::string to_string(const KnotClass& k);

std::int64_t gcd(std::int64_t a, std::int64_t b);
/// Inverse of a modulo m (m >= 1, gcd(a, m) = 1).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Projective evaluation of a continued fraction; the empty sequence gives ∞.
Rat eval_cf(const IntSeq& seq);

/// The unique even-entry, even-length expansion with nonzero interior entries.
/// Requires p odd and q even (∞ = 1/0 gives the empty sequence).
IntSeq even_cf(const Rat& r);

/// p/q' with q' ≡ q (mod p) even: q' = q if q is even, else q - p.
Rat make_q_even(std::int64_t p, std::int64_t q);

KnotClass schubert_canonical(std::int64_t p, std::int64_t q);
/// Class of the numerator closure of a fraction with odd numerator (any sign).
KnotClass knot_class_of(const Rat& r);
KnotClass mirror_class(const KnotClass& k);

// --- text formats ----------------------------------------------------------

/// Parses "p/q" (or a bare integer); throws InvalidArgument on malformed input.
Rat parse_fraction(std::string_view text, bool require_reduced = true);
/// Parses comma-separated integers; the empty string is the empty sequence.
IntSeq parse_seq(std::string_view text);
std::string to_string(const IntSeq& seq);

}  // namespace ratjones
