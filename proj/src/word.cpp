#include "mccool/word.hpp"

#include <cctype>

#include "mccool/error.hpp"

namespace mccool {

namespace {

void check_rank(const Word& a, const Word& b, const char* op) {
  if (a.rank() != b.rank()) {
    throw Error(std::string(op) + ": rank mismatch (" + std::to_string(a.rank()) +
                " vs " + std::to_string(b.rank()) + ")");
  }
}

}  // namespace

Word::Word(int rank) : rank_(rank) {
  if (rank < 0) throw Error("word rank must be nonnegative");
}

Word Word::generator(int rank, int index, int sign) {
  if (index < 1 || index > rank) {
    throw Error("generator index " + std::to_string(index) + " out of range 1.." +
                std::to_string(rank));
  }
  if (sign != 1 && sign != -1) throw Error("letter sign must be +1 or -1");
  Word w(rank);
  w.letters_.push_back({index, sign});
  return w;
}

Word Word::raised(int new_rank) const {
  if (new_rank < rank_) throw Error("raised: cannot lower the rank of a word");
  Word w = *this;
  w.rank_ = new_rank;
  return w;
}

Word reduce(std::span<const Letter> raw, int rank) {
  Word w(rank);
  w.letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.index < 1 || l.index > rank) {
      throw Error("letter index " + std::to_string(l.index) + " out of range 1.." +
                  std::to_string(rank));
    }
    if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1 or -1");
    if (!w.letters_.empty() && w.letters_.back() == l.inverse()) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word multiply(const Word& a, const Word& b) {
  check_rank(a, b, "multiply");
  // Only the seam can cancel, both operands being reduced.
  auto left = a.letters();
  auto right = b.letters();
  std::size_t cancel = 0;
  while (cancel < left.size() && cancel < right.size() &&
         left[left.size() - 1 - cancel] == right[cancel].inverse()) {
    ++cancel;
  }
  std::vector<Letter> out;
  out.reserve(left.size() + right.size() - 2 * cancel);
  out.insert(out.end(), left.begin(), left.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), right.begin() + static_cast<std::ptrdiff_t>(cancel), right.end());
  return reduce(out, a.rank());
}

Word invert(const Word& a) {
  std::vector<Letter> out;
  out.reserve(a.size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return reduce(out, a.rank());
}

Word commutator(const Word& a, const Word& b) {
  check_rank(a, b, "commutator");
  return invert(a) * invert(b) * a * b;
}

std::optional<ConjugateShape> peel_conjugate(const Word& w) {
  if (w.empty()) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = w.size() - 1;
  while (hi > lo + 1 && w[lo] == w[hi].inverse()) {
    ++lo;
    --hi;
  }
  if (lo != hi) return std::nullopt;
  auto tail = w.letters().subspan(hi + 1);
  return ConjugateShape{reduce(tail, w.rank()), w[lo].index, w[lo].sign};
}

Word parse_word(std::string_view text, int rank) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == '*' || std::isspace(static_cast<unsigned char>(c)); };
  while (pos < text.size()) {
    if (is_sep(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    const char head = text[pos];
    if (head != 'x' && head != 'X') {
      throw ParseError(std::string("expected 'x' or 'X', found '") + head + "'", pos);
    }
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected generator index", pos);
    }
    long index = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + (text[pos] - '0');
      if (index > 1'000'000) throw ParseError("generator index too large", start);
      ++pos;
    }
    if (pos < text.size() && !is_sep(text[pos])) {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    }
    if (index < 1 || index > rank) {
      throw ParseError("generator index " + std::to_string(index) + " out of range 1.." +
                           std::to_string(rank),
                       start);
    }
    letters.push_back({static_cast<int>(index), head == 'x' ? 1 : -1});
  }
  return reduce(letters, rank);
}

std::string format_word(const Word& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.sign > 0 ? 'x' : 'X';
    out += std::to_string(l.index);
  }
  return out;
}

}  // namespace mccool
