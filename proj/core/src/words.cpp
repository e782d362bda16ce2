#include "fgaut/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace fgaut {

Basis::Basis(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() < 2) {
    throw InputError("basis needs at least 2 generators");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : names_) {
    if (label.empty()) {
      throw InputError("empty generator label");
    }
    if (label[0] < 'a' || label[0] > 'z') {
      throw InputError("generator label must start with a lowercase letter: " + label);
    }
    for (char c : label) {
      if (!std::isprint(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c))) {
        throw InputError("generator label must be a printable token: " + label);
      }
    }
    if (!seen.insert(label).second) {
      throw InputError("duplicate generator label: " + label);
    }
  }
}

std::shared_ptr<const Basis> Basis::make(std::vector<std::string> names) {
  return std::make_shared<const Basis>(std::move(names));
}

std::shared_ptr<const Basis> Basis::standard(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("a" + std::to_string(i));
  }
  return make(std::move(names));
}

std::optional<std::size_t> Basis::find(std::string_view label) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == label) return i;
  }
  return std::nullopt;
}

void ReducedWord::check_basis() const {
  if (!basis_) {
    throw InputError("word has no basis");
  }
}

ReducedWord ReducedWord::reduce(BasisPtr basis, std::span<const Letter> raw) {
  if (!basis) throw InputError("null basis");
  ReducedWord w(basis);
  w.letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.index >= basis->rank()) {
      throw InputError("letter index out of basis range");
    }
    if (l.sign != 1 && l.sign != -1) {
      throw InputError("letter sign must be +1 or -1");
    }
    push_cancel(w.letters_, l);
  }
  return w;
}

ReducedWord ReducedWord::from_letters(BasisPtr basis, std::vector<Letter> raw) {
  return reduce(std::move(basis), std::span<const Letter>(raw));
}

ReducedWord ReducedWord::parse(const BasisPtr& basis, std::string_view text) {
  if (!basis) throw InputError("null basis");
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::int32_t sign = 1;
    if (std::isupper(static_cast<unsigned char>(token[0]))) {
      sign = -1;
      token[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(token[0])));
    }
    auto idx = basis->find(token);
    if (!idx) {
      throw InputError("unknown generator token: " + token);
    }
    letters.push_back(Letter{static_cast<std::uint32_t>(*idx), sign});
  }
  return from_letters(basis, std::move(letters));
}

std::string letter_str(const Basis& basis, Letter l) {
  std::string token = basis.name(l.index);
  if (l.sign < 0) {
    token[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
  }
  return token;
}

std::string ReducedWord::str() const {
  if (!basis_) return "";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += letter_str(*basis_, letters_[i]);
  }
  return out;
}

bool ReducedWord::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l.sign > 0; });
}

bool ReducedWord::is_negative() const {
  return std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l.sign < 0; });
}

ReducedWord ReducedWord::inverse() const {
  ReducedWord w(basis_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(it->inverse());
  }
  return w;
}

ReducedWord ReducedWord::prefix(std::size_t len) const {
  return subword(0, std::min(len, letters_.size()));
}

ReducedWord ReducedWord::subword(std::size_t begin, std::size_t end) const {
  if (begin > end || end > letters_.size()) {
    throw InputError("subword range out of bounds");
  }
  ReducedWord w(basis_);
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                    letters_.begin() + static_cast<std::ptrdiff_t>(end));
  return w;
}

bool ReducedWord::starts_with(const ReducedWord& p) const {
  if (p.size() > size()) return false;
  return std::equal(p.letters_.begin(), p.letters_.end(), letters_.begin());
}

bool ReducedWord::operator==(const ReducedWord& other) const {
  if (!basis_ || !other.basis_) {
    return !basis_ && !other.basis_ && letters_.empty() && other.letters_.empty();
  }
  return *basis_ == *other.basis_ && letters_ == other.letters_;
}

ReducedWord concat(const ReducedWord& u, const ReducedWord& v) {
  u.check_basis();
  v.check_basis();
  if (!(*u.basis_ == *v.basis_)) {
    throw InputError("concat: basis mismatch");
  }
  ReducedWord w(u.basis_);
  w.letters_ = u.letters_;
  w.letters_.reserve(u.size() + v.size());
  for (const Letter& l : v.letters_) {
    push_cancel(w.letters_, l);
  }
  return w;
}

namespace {

ReducedWord substitute(const BasisPtr& target, const ReducedWord& w,
                       const std::vector<ReducedWord>& images) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const ReducedWord& img = images[l.index];
    if (l.sign > 0) {
      for (const Letter& m : img.letters()) push_cancel(out, m);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        push_cancel(out, it->inverse());
      }
    }
  }
  return ReducedWord::from_letters(target, std::move(out));
}

}  // namespace

BasisChange::BasisChange(BasisPtr from_basis, BasisPtr to_basis,
                         std::vector<ReducedWord> imgs, std::vector<ReducedWord> wit)
    : from(std::move(from_basis)), to(std::move(to_basis)),
      images(std::move(imgs)), witness(std::move(wit)) {
  if (!from || !to) throw InputError("basis change: null basis");
  if (images.size() != from->rank() || witness.size() != to->rank()) {
    throw InputError("basis change: wrong table sizes");
  }
  if (from->rank() != to->rank()) {
    throw InputError("basis change: rank mismatch");
  }
  // Round-trip witness check: both compositions must fix every generator.
  for (std::size_t i = 0; i < from->rank(); ++i) {
    ReducedWord gen(from);
    gen = ReducedWord::from_letters(from, {Letter{static_cast<std::uint32_t>(i), 1}});
    if (substitute(from, images[i], witness) != gen) {
      throw InputError("basis change witness fails round-trip on " + from->name(i));
    }
  }
  for (std::size_t i = 0; i < to->rank(); ++i) {
    ReducedWord gen = ReducedWord::from_letters(to, {Letter{static_cast<std::uint32_t>(i), 1}});
    if (substitute(to, witness[i], images) != gen) {
      throw InputError("basis change witness fails round-trip on " + to->name(i));
    }
  }
}

BasisChange BasisChange::identity(const BasisPtr& basis) {
  std::vector<ReducedWord> table;
  table.reserve(basis->rank());
  for (std::size_t i = 0; i < basis->rank(); ++i) {
    table.push_back(ReducedWord::from_letters(basis, {Letter{static_cast<std::uint32_t>(i), 1}}));
  }
  return BasisChange(basis, basis, table, table);
}

BasisChange BasisChange::sign_flips(const BasisPtr& from, const std::vector<bool>& flip,
                                    const std::vector<std::string>& flipped_names) {
  if (flip.size() != from->rank()) throw InputError("sign_flips: mask size mismatch");
  std::vector<std::string> names = from->names();
  std::size_t k = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (flip[i]) {
      if (k >= flipped_names.size()) throw InputError("sign_flips: missing flipped name");
      names[i] = flipped_names[k++];
    }
  }
  BasisPtr to = Basis::make(std::move(names));
  std::vector<ReducedWord> images, wit;
  for (std::size_t i = 0; i < from->rank(); ++i) {
    Letter l{static_cast<std::uint32_t>(i), flip[i] ? -1 : 1};
    images.push_back(ReducedWord::from_letters(to, {l}));
    wit.push_back(ReducedWord::from_letters(from, {l}));
  }
  return BasisChange(from, to, std::move(images), std::move(wit));
}

ReducedWord BasisChange::apply(const ReducedWord& w) const {
  if (!w.basis() || !(*w.basis() == *from)) {
    throw InputError("basis change: word not over the source basis");
  }
  return substitute(to, w, images);
}

ReducedWord BasisChange::unapply(const ReducedWord& w) const {
  if (!w.basis() || !(*w.basis() == *to)) {
    throw InputError("basis change: word not over the target basis");
  }
  return substitute(from, w, witness);
}

BasisChange BasisChange::inverted() const {
  return BasisChange(to, from, witness, images);
}

ReducedWord change_basis(const ReducedWord& w, const BasisChange& change) {
  return change.apply(w);
}

}  // namespace fgaut
