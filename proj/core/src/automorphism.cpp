#include "fgaut/automorphism.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace fgaut {

namespace {

Letter gen(std::size_t i, std::int32_t sign = 1) {
  return Letter{static_cast<std::uint32_t>(i), sign};
}

}  // namespace

Automorphism::Automorphism(BasisPtr basis, std::vector<ReducedWord> images,
                           std::optional<std::vector<ReducedWord>> inverse_witness)
    : basis_(std::move(basis)), images_(std::move(images)),
      inverse_images_(std::move(inverse_witness)) {
  if (!basis_) throw InputError("automorphism: null basis");
  if (images_.size() != basis_->rank()) {
    throw InputError("automorphism: one image per generator required");
  }
  for (const auto& img : images_) {
    if (!img.basis() || !(*img.basis() == *basis_)) {
      throw InputError("automorphism: image over a different basis");
    }
    if (img.empty()) {
      throw InputError("automorphism: empty image word");
    }
  }
  if (inverse_images_) {
    Automorphism wit(basis_, *inverse_images_);
    if (!verify_inverse(*this, wit)) {
      throw InputError("automorphism: inverse witness fails on a generator");
    }
  }
}

Automorphism Automorphism::identity(const BasisPtr& basis) {
  std::vector<ReducedWord> images;
  images.reserve(basis->rank());
  for (std::size_t i = 0; i < basis->rank(); ++i) {
    images.push_back(ReducedWord::from_letters(basis, {gen(i)}));
  }
  auto witness = images;
  return Automorphism(basis, std::move(images), std::move(witness));
}

ReducedWord Automorphism::letter_image(Letter l) const {
  const ReducedWord& img = images_.at(l.index);
  return l.sign > 0 ? img : img.inverse();
}

const std::vector<ReducedWord>& Automorphism::inverse_witness() const {
  if (!inverse_images_) throw InputError("automorphism: no inverse witness attached");
  return *inverse_images_;
}

Automorphism Automorphism::inverse() const {
  return Automorphism(basis_, inverse_witness(), images_);
}

ReducedWord Automorphism::apply(const ReducedWord& w) const {
  if (!w.basis() || !(*w.basis() == *basis_)) {
    throw InputError("apply: word over a different basis");
  }
  std::vector<Letter> out;
  out.reserve(w.size() * 2);
  for (const Letter& l : w.letters()) {
    const ReducedWord& img = images_[l.index];
    if (l.sign > 0) {
      for (const Letter& m : img.letters()) push_cancel(out, m);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        push_cancel(out, it->inverse());
      }
    }
  }
  return ReducedWord::from_letters(basis_, std::move(out));
}

ReducedWord Automorphism::generator_word(std::size_t i) const {
  return ReducedWord::from_letters(basis_, {gen(i)});
}

bool Automorphism::is_positive() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](const ReducedWord& w) { return w.is_positive(); });
}

std::size_t Automorphism::total_image_length() const {
  return std::accumulate(images_.begin(), images_.end(), std::size_t{0},
                         [](std::size_t acc, const ReducedWord& w) { return acc + w.size(); });
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (!(*f.basis() == *g.basis())) throw InputError("compose: basis mismatch");
  std::vector<ReducedWord> images;
  images.reserve(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    images.push_back(f.apply(g.image(i)));
  }
  std::optional<std::vector<ReducedWord>> witness;
  if (f.has_inverse_witness() && g.has_inverse_witness()) {
    // (f g)^-1 = g^-1 f^-1
    Automorphism ginv = g.inverse();
    std::vector<ReducedWord> wit;
    wit.reserve(f.rank());
    for (std::size_t i = 0; i < f.rank(); ++i) {
      wit.push_back(ginv.apply(f.inverse_witness()[i]));
    }
    witness = std::move(wit);
  }
  return Automorphism(f.basis(), std::move(images), std::move(witness));
}

Automorphism power(const Automorphism& f, unsigned t) {
  if (t < 1) throw InputError("power: exponent must be >= 1");
  Automorphism result = f;
  for (unsigned i = 1; i < t; ++i) {
    result = compose(f, result);
  }
  return result;
}

bool verify_inverse(const Automorphism& f, const Automorphism& g) {
  if (!(*f.basis() == *g.basis())) return false;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    ReducedWord a = f.generator_word(i);
    if (f.apply(g.image(i)) != a) return false;
    if (g.apply(f.image(i)) != a) return false;
  }
  return true;
}

Automorphism change_basis(const Automorphism& f, const BasisChange& change) {
  if (!(*f.basis() == *change.from)) throw InputError("change_basis: basis mismatch");
  std::vector<ReducedWord> images;
  images.reserve(f.rank());
  for (std::size_t i = 0; i < f.rank(); ++i) {
    ReducedWord pre = change.unapply(ReducedWord::from_letters(change.to, {gen(i)}));
    images.push_back(change.apply(f.apply(pre)));
  }
  std::optional<std::vector<ReducedWord>> witness;
  if (f.has_inverse_witness()) {
    Automorphism finv = f.inverse();
    std::vector<ReducedWord> wit;
    wit.reserve(f.rank());
    for (std::size_t i = 0; i < f.rank(); ++i) {
      ReducedWord pre = change.unapply(ReducedWord::from_letters(change.to, {gen(i)}));
      wit.push_back(change.apply(finv.apply(pre)));
    }
    witness = std::move(wit);
  }
  return Automorphism(change.to, std::move(images), std::move(witness));
}

namespace {

std::vector<ReducedWord> alpha_images(const BasisPtr& basis, std::size_t n) {
  std::vector<ReducedWord> images;
  images.reserve(n);
  {
    std::vector<Letter> w;
    for (std::size_t j = 0; j < n; ++j) w.push_back(gen(j));
    images.push_back(ReducedWord::from_letters(basis, std::move(w)));
  }
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Letter> w;
    w.push_back(gen(i));
    for (std::size_t j = 0; j <= i; ++j) w.push_back(gen(j));
    images.push_back(ReducedWord::from_letters(basis, std::move(w)));
  }
  return images;
}

struct AlphaPair {
  std::vector<ReducedWord> images;
  std::vector<ReducedWord> inverse_images;
  InverseScaffold scaffold;
};

AlphaPair build_alpha_pair(std::size_t n) {
  if (n < 2) throw InputError("alpha family needs rank >= 2");
  BasisPtr basis = Basis::standard(n);

  // x_0 = a_1^-1, x_{k+1} = a_{n-k} x_k^2 for k = 0..n-2.
  std::vector<ReducedWord> x;
  x.push_back(ReducedWord::from_letters(basis, {gen(0, -1)}));
  for (std::size_t k = 0; k + 1 <= n - 1; ++k) {
    ReducedWord head = ReducedWord::from_letters(basis, {gen(n - k - 1)});
    x.push_back(concat(concat(head, x[k]), x[k]));
  }

  // a_1 -> x_{n-1}^-1, a_{n-k} -> a_{n-k} x_k for k = 0..n-2.
  std::vector<ReducedWord> inv(n, ReducedWord(basis));
  inv[0] = x[n - 1].inverse();
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::size_t j = n - k;  // generator a_j, 1-based, j = 2..n
    inv[j - 1] = concat(ReducedWord::from_letters(basis, {gen(j - 1)}), x[k]);
  }

  InverseScaffold scaffold{
      x, {}, ReducedWord(basis), ReducedWord(basis),
      BasisChange::sign_flips(basis, [&] {
        std::vector<bool> flip(n, false);
        flip[0] = true;
        return flip;
      }(), {"x0"})};
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    scaffold.y_words.push_back(concat(concat(x[n - 1], x[k].inverse()), x[0].inverse()));
  }
  scaffold.y_word = concat(x[n - 1], x[0].inverse());
  {
    ReducedWord mid(basis);
    for (std::size_t j = n; j >= 2; --j) {
      mid = concat(mid, ReducedWord::from_letters(basis, {gen(j - 1, -1)}));
    }
    scaffold.z_word = concat(concat(x[0].inverse(), mid), x[n - 1]);
  }

  // Scaffold sanity: x_k, y_k, y, z are positive in the renamed basis.
  const BasisChange& cb = scaffold.to_positive_basis;
  for (const auto& w : scaffold.x_words) {
    if (!cb.apply(w).is_positive()) throw CertificateError("scaffold x-word not positive in new basis");
  }
  for (const auto& w : scaffold.y_words) {
    if (!cb.apply(w).is_positive()) throw CertificateError("scaffold y-word not positive in new basis");
  }
  if (!cb.apply(scaffold.y_word).is_positive() || !cb.apply(scaffold.z_word).is_positive()) {
    throw CertificateError("scaffold word not positive in new basis");
  }

  return AlphaPair{alpha_images(basis, n), std::move(inv), std::move(scaffold)};
}

}  // namespace

Automorphism make_alpha(std::size_t n) {
  AlphaPair pair = build_alpha_pair(n);
  BasisPtr basis = pair.images[0].basis();
  return Automorphism(basis, pair.images, pair.inverse_images);
}

std::pair<Automorphism, InverseScaffold> make_alpha_inverse(std::size_t n) {
  AlphaPair pair = build_alpha_pair(n);
  BasisPtr basis = pair.images[0].basis();
  Automorphism inv(basis, pair.inverse_images, pair.images);
  return {std::move(inv), std::move(pair.scaffold)};
}

std::pair<Automorphism, BasisChange> alpha_inverse_positive(std::size_t n) {
  auto [inv, scaffold] = make_alpha_inverse(n);
  Automorphism positive = change_basis(inv, scaffold.to_positive_basis);
  if (!positive.is_positive()) {
    throw CertificateError("inverse not positive in the renamed basis");
  }
  return {std::move(positive), scaffold.to_positive_basis};
}

std::optional<BasisChange> positivity_basis(const Automorphism& f) {
  std::size_t n = f.rank();
  if (n > 20) throw InputError("positivity_basis: rank too large for sign-pattern sweep");
  std::vector<std::uint32_t> masks;
  masks.reserve(1u << n);
  for (std::uint32_t m = 0; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (std::uint32_t m : masks) {
    std::vector<bool> flip(n, false);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      if (m & (1u << i)) {
        flip[i] = true;
        names.push_back(i == 0 ? "x0" : "inv_" + f.basis()->name(i));
      }
    }
    BasisChange change = BasisChange::sign_flips(f.basis(), flip, names);
    Automorphism g = change_basis(f, change);
    if (g.is_positive()) return change;
  }
  return std::nullopt;
}

}  // namespace fgaut
