#pragma once

#include <string>

namespace arrlab {

// Coefficient field for homology: the rationals or a prime field F_p.
struct FieldDescriptor {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  unsigned long p = 0;  // set iff PrimeField

  static FieldDescriptor rationals() { return FieldDescriptor{Kind::Rationals, 0}; }
  static FieldDescriptor prime(unsigned long p);

  // Accepts "q", "Q", "f:<p>", "F<p>".
  static FieldDescriptor parse(const std::string& text);

  bool is_rationals() const { return kind == Kind::Rationals; }
  std::string name() const;  // "Q" or "F<p>"

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.kind == b.kind && a.p == b.p;
  }
};

bool is_prime(unsigned long n);

}  // namespace arrlab
