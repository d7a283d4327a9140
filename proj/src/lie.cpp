#include "mccool/lie.hpp"

#include <algorithm>
#include <mutex>

#include "mccool/error.hpp"

namespace mccool {

namespace {

void check_alphabet(int a, int b, const char* op) {
  if (a != b) {
    throw Error(std::string(op) + ": alphabet mismatch (" + std::to_string(a) + " vs " +
                std::to_string(b) + ")");
  }
}

std::string bracket_text(const LieWord& w, const LetterNames& names) {
  if (w.size() == 1) return names(w[0] + 1);
  auto [u, v] = standard_factorization(w);
  return "[" + bracket_text(u, names) + "," + bracket_text(v, names) + "]";
}

}  // namespace

std::string default_letter_name(int letter) { return "x" + std::to_string(letter); }

bool is_lyndon(std::span<const std::uint8_t> w) {
  if (w.empty()) return false;
  // Strictly smaller than every proper suffix.
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<long>(i),
                                      w.end())) {
      return false;
    }
  }
  return true;
}

std::pair<LieWord, LieWord> standard_factorization(const LieWord& w) {
  if (w.size() < 2) throw Error("standard factorization needs a word of length >= 2");
  for (std::size_t split = 1; split < w.size(); ++split) {
    std::span<const std::uint8_t> suffix(w.data() + split, w.size() - split);
    if (is_lyndon(suffix)) {
      return {LieWord(w.begin(), w.begin() + static_cast<long>(split)),
              LieWord(suffix.begin(), suffix.end())};
    }
  }
  throw Error("unreachable: the last letter is always a Lyndon suffix");
}

std::vector<LieWord> lyndon_words(int m, int d) {
  std::vector<LieWord> out;
  if (m < 1 || d < 1) return out;
  if (m > 255) throw Error("alphabets larger than 255 letters are not supported");
  // Duval's generation of all Lyndon words of length <= d in lexicographic order.
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (static_cast<int>(w.size()) == d) out.emplace_back(w.begin(), w.end());
    const std::size_t period = w.size();
    while (static_cast<int>(w.size()) < d) w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == m - 1) w.pop_back();
  }
  return out;
}

std::string LyndonBracket::bracketing(const LetterNames& names) const {
  return bracket_text(word, names);
}

std::vector<LyndonBracket> lyndon_basis(int m, int d) {
  std::vector<LyndonBracket> out;
  for (LieWord& w : lyndon_words(m, d)) out.push_back({m, std::move(w)});
  return out;
}

Integer witt_rank(int m, int d) {
  if (d < 1) throw Error("witt_rank needs degree >= 1");
  if (m < 0) throw Error("witt_rank needs m >= 0");
  auto mobius = [](int e) {
    int result = 1;
    for (int p = 2; p * p <= e; ++p) {
      if (e % p == 0) {
        e /= p;
        if (e % p == 0) return 0;
        result = -result;
      }
    }
    return e > 1 ? -result : result;
  };
  Integer sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = mobius(e);
    if (mu == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m),
                  static_cast<unsigned long>(d / e));
    sum += mu * power;
  }
  return sum / d;
}

void AssocPoly::add(const LieWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AssocPoly& AssocPoly::operator+=(const AssocPoly& other) {
  check_alphabet(alphabet_, other.alphabet_, "AssocPoly +");
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

AssocPoly& AssocPoly::operator-=(const AssocPoly& other) {
  check_alphabet(alphabet_, other.alphabet_, "AssocPoly -");
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

AssocPoly AssocPoly::scaled(const Integer& c) const {
  AssocPoly out(alphabet_);
  if (c == 0) return out;
  for (const auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
  return out;
}

AssocPoly operator*(const AssocPoly& a, const AssocPoly& b) {
  check_alphabet(a.alphabet_, b.alphabet_, "AssocPoly *");
  AssocPoly out(a.alphabet_);
  LieWord w;
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      w.assign(u.begin(), u.end());
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, cu * cv);
    }
  }
  return out;
}

AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out = a * b;
  out -= b * a;
  return out;
}

const AssocPoly& lyndon_expansion(const LieWord& lyndon, int alphabet) {
  static std::mutex mutex;
  static std::map<std::pair<int, LieWord>, AssocPoly> cache;
  const auto key = std::make_pair(alphabet, lyndon);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  AssocPoly value(alphabet);
  if (lyndon.size() == 1) {
    if (lyndon[0] >= alphabet) throw Error("letter outside the alphabet");
    value.add(lyndon, 1);
  } else {
    if (!is_lyndon(lyndon)) throw Error("lyndon_expansion: not a Lyndon word");
    auto [u, v] = standard_factorization(lyndon);
    value = commutator(lyndon_expansion(u, alphabet), lyndon_expansion(v, alphabet));
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(value)).first->second;
}

LieElement LieElement::generator(int alphabet, int letter) {
  if (letter < 1 || letter > alphabet) {
    throw Error("generator " + std::to_string(letter) + " outside alphabet of size " +
                std::to_string(alphabet));
  }
  return basis_element(alphabet, LieWord{static_cast<std::uint8_t>(letter - 1)});
}

LieElement LieElement::basis_element(int alphabet, LieWord lyndon) {
  if (!is_lyndon(lyndon)) throw Error("basis_element: not a Lyndon word");
  for (auto l : lyndon) {
    if (l >= alphabet) throw Error("basis_element: letter outside the alphabet");
  }
  LieElement e(alphabet);
  e.coeffs_.emplace(std::move(lyndon), 1);
  return e;
}

LieElement LieElement::from_assoc(const AssocPoly& p) {
  LieElement out(p.alphabet());
  AssocPoly rest = p;
  while (!rest.is_zero()) {
    // The smallest surviving word leads; it must be Lyndon for a Lie polynomial.
    const auto [u, c] = *rest.terms().begin();
    if (!is_lyndon(u)) throw Error("polynomial is not a Lie element");
    out.add_term(u, c);
    rest -= lyndon_expansion(u, p.alphabet()).scaled(c);
  }
  return out;
}

Integer LieElement::coefficient(const LieWord& lyndon) const {
  auto it = coeffs_.find(lyndon);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

std::optional<int> LieElement::degree() const {
  if (coeffs_.empty() || !is_homogeneous()) return std::nullopt;
  return static_cast<int>(coeffs_.begin()->first.size());
}

bool LieElement::is_homogeneous() const {
  if (coeffs_.empty()) return true;
  const std::size_t d = coeffs_.begin()->first.size();
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [d](const auto& kv) { return kv.first.size() == d; });
}

LieElement LieElement::homogeneous_part(int d) const {
  LieElement out(alphabet_);
  for (const auto& [w, c] : coeffs_) {
    if (static_cast<int>(w.size()) == d) out.coeffs_.emplace(w, c);
  }
  return out;
}

AssocPoly LieElement::expand() const {
  AssocPoly out(alphabet_);
  for (const auto& [w, c] : coeffs_) out += lyndon_expansion(w, alphabet_).scaled(c);
  return out;
}

void LieElement::add_term(const LieWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& other) {
  check_alphabet(alphabet_, other.alphabet_, "LieElement +");
  for (const auto& [w, c] : other.coeffs_) add_term(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  check_alphabet(alphabet_, other.alphabet_, "LieElement -");
  for (const auto& [w, c] : other.coeffs_) add_term(w, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
  } else {
    for (auto& kv : coeffs_) kv.second *= c;
  }
  return *this;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  check_alphabet(a.alphabet(), b.alphabet(), "bracket");
  if (a.is_zero() || b.is_zero()) return LieElement(a.alphabet());
  return LieElement::from_assoc(commutator(a.expand(), b.expand()));
}

std::string format_lie(const LieElement& e, const LetterNames& names) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<LieWord, Integer>> terms(e.coefficients().begin(),
                                                 e.coefficients().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  std::string out;
  for (const auto& [w, c] : terms) {
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += bracket_text(w, names);
  }
  return out;
}

Derivation::Derivation(int alphabet, int shift, std::vector<LieElement> images)
    : alphabet_(alphabet), shift_(shift), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet_) {
    throw Error("derivation needs one image per generator");
  }
  for (const LieElement& img : images_) {
    check_alphabet(alphabet_, img.alphabet(), "Derivation");
    if (img.is_zero()) continue;
    const auto d = img.degree();
    if (!d || *d != 1 + shift_) {
      throw Error("derivation images must be homogeneous of degree " +
                  std::to_string(1 + shift_));
    }
  }
}

Derivation Derivation::zero(int alphabet, int shift) {
  return Derivation(alphabet, shift, std::vector<LieElement>(static_cast<std::size_t>(alphabet),
                                                             LieElement(alphabet)));
}

bool Derivation::is_zero() const {
  return std::all_of(images_.begin(), images_.end(), [](const auto& e) { return e.is_zero(); });
}

Derivation& Derivation::operator+=(const Derivation& other) {
  check_alphabet(alphabet_, other.alphabet_, "Derivation +");
  if (shift_ != other.shift_) throw Error("Derivation +: degree shift mismatch");
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += other.images_[i];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
  check_alphabet(alphabet_, other.alphabet_, "Derivation -");
  if (shift_ != other.shift_) throw Error("Derivation -: degree shift mismatch");
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] -= other.images_[i];
  return *this;
}

Derivation derivation_from_chi(int k, int i, int n) {
  if (k < 1 || k > n || i < 1 || i > n || k == i) {
    throw Error("derivation_from_chi: invalid indices (" + std::to_string(k) + "," +
                std::to_string(i) + ") for n=" + std::to_string(n));
  }
  std::vector<LieElement> images(static_cast<std::size_t>(n), LieElement(n));
  images[static_cast<std::size_t>(k - 1)] =
      bracket(LieElement::generator(n, k), LieElement::generator(n, i));
  return Derivation(n, 1, std::move(images));
}

AssocPoly apply_derivation(const Derivation& d, const AssocPoly& p) {
  check_alphabet(d.alphabet(), p.alphabet(), "apply_derivation");
  std::vector<AssocPoly> images;
  images.reserve(d.images().size());
  for (const LieElement& img : d.images()) images.push_back(img.expand());

  AssocPoly out(p.alphabet());
  LieWord w;
  for (const auto& [word, c] : p.terms()) {
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
      for (const auto& [img, ci] : images[word[pos]].terms()) {
        w.assign(word.begin(), word.begin() + static_cast<long>(pos));
        w.insert(w.end(), img.begin(), img.end());
        w.insert(w.end(), word.begin() + static_cast<long>(pos) + 1, word.end());
        out.add(w, c * ci);
      }
    }
  }
  return out;
}

LieElement apply_derivation(const Derivation& d, const LieElement& e) {
  check_alphabet(d.alphabet(), e.alphabet(), "apply_derivation");
  return LieElement::from_assoc(apply_derivation(d, e.expand()));
}

Derivation bracket_derivations(const Derivation& d, const Derivation& e) {
  check_alphabet(d.alphabet(), e.alphabet(), "bracket_derivations");
  std::vector<LieElement> images;
  images.reserve(d.images().size());
  for (int x = 1; x <= d.alphabet(); ++x) {
    images.push_back(apply_derivation(d, e.image(x)) - apply_derivation(e, d.image(x)));
  }
  return Derivation(d.alphabet(), d.shift() + e.shift(), std::move(images));
}

}  // namespace mccool
