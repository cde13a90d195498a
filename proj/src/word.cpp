#include "braids/word.hpp"

#include <string>

namespace braids {

namespace {

void check_letter(const PureGenerator& g, int n) {
  if (g.sign != 1 && g.sign != -1)
    throw std::invalid_argument("generator sign must be +1 or -1");
  if (g.a < 1 || g.a >= g.b || g.b > n)
    throw std::invalid_argument("generator p[" + std::to_string(g.a) + "," +
                                std::to_string(g.b) +
                                "] out of range for strand count " +
                                std::to_string(n));
}

}  // namespace

BraidWord::BraidWord(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
}

BraidWord::BraidWord(int n, std::vector<PureGenerator> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  for (const PureGenerator& g : letters_) check_letter(g, n);
}

BraidWord make_generator(int a, int b, int sign, int n) {
  if (n < 2) throw std::invalid_argument("generators need a strand count >= 2");
  PureGenerator g{a, b, sign};
  check_letter(g, n);
  return BraidWord(n, {g});
}

BraidWord concat(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strand_count() != w2.strand_count())
    throw std::invalid_argument("concat: mismatched strand counts");
  std::vector<PureGenerator> letters;
  letters.reserve(w1.size() + w2.size());
  letters.insert(letters.end(), w1.letters().begin(), w1.letters().end());
  letters.insert(letters.end(), w2.letters().begin(), w2.letters().end());
  return BraidWord(w1.strand_count(), std::move(letters));
}

BraidWord invert(const BraidWord& w) {
  std::vector<PureGenerator> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    letters.push_back(it->inverse());
  return BraidWord(w.strand_count(), std::move(letters));
}

BraidWord free_cancel(const BraidWord& w) {
  std::vector<PureGenerator> out;
  out.reserve(w.size());
  for (const PureGenerator& g : w.letters()) {
    if (!out.empty() && out.back() == g.inverse())
      out.pop_back();
    else
      out.push_back(g);
  }
  return BraidWord(w.strand_count(), std::move(out));
}

}  // namespace braids
