#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fgaut {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One letter of a word: generator index plus exponent sign (+1 or -1).
struct Letter {
  std::uint32_t index = 0;
  std::int32_t sign = 1;

  Letter inverse() const { return Letter{index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Ordered generator labels of a free group basis. Immutable once built;
// shared by value-equality of the label list, so words over two bases with
// the same labels compare as words over one basis.
//
// Labels must start with a lowercase ASCII letter: the text syntax marks an
// inverse by upper-casing the first character ("a1" vs "A1").
class Basis {
 public:
  explicit Basis(std::vector<std::string> names);

  static std::shared_ptr<const Basis> make(std::vector<std::string> names);
  static std::shared_ptr<const Basis> standard(std::size_t n);  // a1..an

  std::size_t rank() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view label) const;

  bool operator==(const Basis& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using BasisPtr = std::shared_ptr<const Basis>;

// Freely reduced word over a basis. The empty sequence is the identity.
// Invariant: no adjacent pair (x, x^-1). Immutable after construction.
class ReducedWord {
 public:
  ReducedWord() = default;
  explicit ReducedWord(BasisPtr basis) : basis_(std::move(basis)) {}

  // Free reduction of a raw letter sequence (stack cancellation).
  static ReducedWord reduce(BasisPtr basis, std::span<const Letter> raw);
  static ReducedWord from_letters(BasisPtr basis, std::vector<Letter> raw);

  // Text format: whitespace-separated tokens, upper-cased first character
  // marks an inverse ("a1 A1 a2" reduces to a2).
  static ReducedWord parse(const BasisPtr& basis, std::string_view text);
  std::string str() const;

  const BasisPtr& basis() const { return basis_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  bool is_positive() const;  // empty word counts as both
  bool is_negative() const;

  ReducedWord inverse() const;
  ReducedWord prefix(std::size_t len) const;
  ReducedWord subword(std::size_t begin, std::size_t end) const;
  bool starts_with(const ReducedWord& p) const;

  bool operator==(const ReducedWord& other) const;
  bool operator!=(const ReducedWord& other) const { return !(*this == other); }

 private:
  BasisPtr basis_;
  std::vector<Letter> letters_;

  void check_basis() const;
  friend ReducedWord concat(const ReducedWord& u, const ReducedWord& v);
};

ReducedWord concat(const ReducedWord& u, const ReducedWord& v);

// Appends `l` to a letter stack, cancelling against the top. The stack stays
// reduced if it was reduced.
inline void push_cancel(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back() == l.inverse()) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

std::string letter_str(const Basis& basis, Letter l);

// Bijective substitution between two bases, carried with its inverse as a
// witness. Construction validates that both compositions fix every generator.
struct BasisChange {
  BasisPtr from;
  BasisPtr to;
  std::vector<ReducedWord> images;   // over `to`, one per `from` generator
  std::vector<ReducedWord> witness;  // over `from`, one per `to` generator

  BasisChange(BasisPtr from_basis, BasisPtr to_basis,
              std::vector<ReducedWord> imgs, std::vector<ReducedWord> wit);

  static BasisChange identity(const BasisPtr& basis);
  // Inverts the generators selected by `flip`, renaming them with
  // `flipped_names` (parallel to the set bits, in index order).
  static BasisChange sign_flips(const BasisPtr& from,
                                const std::vector<bool>& flip,
                                const std::vector<std::string>& flipped_names);

  ReducedWord apply(const ReducedWord& w) const;    // from -> to
  ReducedWord unapply(const ReducedWord& w) const;  // to -> from
  BasisChange inverted() const;
};

ReducedWord change_basis(const ReducedWord& w, const BasisChange& change);

}  // namespace fgaut
