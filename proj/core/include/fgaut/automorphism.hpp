#pragma once

#include <optional>
#include <utility>

#include "fgaut/words.hpp"

namespace fgaut {

// Endomorphism of F_n given by one image word per generator. When an inverse
// witness table is attached, construction verifies that both compositions fix
// every generator, which certifies bijectivity. Immutable after construction.
class Automorphism {
 public:
  Automorphism(BasisPtr basis, std::vector<ReducedWord> images,
               std::optional<std::vector<ReducedWord>> inverse_witness = std::nullopt);

  static Automorphism identity(const BasisPtr& basis);

  const BasisPtr& basis() const { return basis_; }
  std::size_t rank() const { return basis_->rank(); }
  const ReducedWord& image(std::size_t i) const { return images_.at(i); }
  const std::vector<ReducedWord>& images() const { return images_; }
  // Image of a single letter; inverse letters get the inverted image.
  ReducedWord letter_image(Letter l) const;

  bool has_inverse_witness() const { return inverse_images_.has_value(); }
  const std::vector<ReducedWord>& inverse_witness() const;
  Automorphism inverse() const;  // requires a witness

  ReducedWord apply(const ReducedWord& w) const;
  ReducedWord generator_word(std::size_t i) const;

  bool is_positive() const;
  std::size_t total_image_length() const;

 private:
  BasisPtr basis_;
  std::vector<ReducedWord> images_;
  std::optional<std::vector<ReducedWord>> inverse_images_;
};

Automorphism compose(const Automorphism& f, const Automorphism& g);  // f after g

// Powers are computed by composing image tables; image lengths grow
// geometrically with the stretching factor, so t around 20 at rank 5 and up
// exhausts memory. Guard long runs with the byte budget.
Automorphism power(const Automorphism& f, unsigned t);

bool verify_inverse(const Automorphism& f, const Automorphism& g);

Automorphism change_basis(const Automorphism& f, const BasisChange& change);

// The iterative inverse data: x_0 = a_1^-1, x_{k+1} = a_{n-k} x_k^2, plus the
// derived words y_k = x_{n-1} x_k^-1 x_0^-1, y = x_{n-1} x_0^-1 and
// z = x_0^-1 a_n^-1 ... a_2^-1 x_{n-1}. All words live in the original basis;
// `to_positive_basis` renames a_1 to x0, after which every one of them and
// every image of the inverse automorphism is positive.
struct InverseScaffold {
  std::vector<ReducedWord> x_words;  // x_0 .. x_{n-1}
  std::vector<ReducedWord> y_words;  // y_0 .. y_{n-2}
  ReducedWord y_word;
  ReducedWord z_word;
  BasisChange to_positive_basis;
};

// The shipped family: a_1 -> a_1 a_2 ... a_n, a_k -> a_k a_1 a_2 ... a_k.
// The returned automorphism carries its inverse as a verified witness.
Automorphism make_alpha(std::size_t n);

std::pair<Automorphism, InverseScaffold> make_alpha_inverse(std::size_t n);

// The inverse transported to the basis {x0, a2, ..., an}, where it is
// positive. Returns the positive automorphism together with the change used.
std::pair<Automorphism, BasisChange> alpha_inverse_positive(std::size_t n);

// Searches generator sign-flip substitutions (all 2^n patterns, fewest flips
// first) for one that makes every image positive.
std::optional<BasisChange> positivity_basis(const Automorphism& f);

}  // namespace fgaut
