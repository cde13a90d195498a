#include "braids/artin.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace braids {

FreeWord FreeWord::reduce(std::span<const int> letters) {
  FreeWord w;
  w.letters_.reserve(letters.size());
  for (int l : letters) w.push(l);
  return w;
}

FreeWord FreeWord::generator(int i) {
  FreeWord w;
  w.push(i);
  return w;
}

void FreeWord::push(int letter) {
  if (letter == 0) throw std::invalid_argument("free letter must be nonzero");
  if (!letters_.empty() && letters_.back() == -letter)
    letters_.pop_back();
  else
    letters_.push_back(letter);
}

void FreeWord::append(const FreeWord& w) {
  for (int l : w.letters_) push(l);
}

void FreeWord::append_inverse(const FreeWord& w) {
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(-*it);
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);  // already reduced
  return w;
}

FreeAutomorphism::FreeAutomorphism(int rank, std::vector<FreeWord> images)
    : rank_(rank), images_(std::move(images)) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (images_.size() != static_cast<std::size_t>(rank))
    throw std::invalid_argument("need one image per generator");
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  std::vector<FreeWord> images;
  images.reserve(rank);
  for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(i));
  return FreeAutomorphism(rank, std::move(images));
}

FreeWord FreeAutomorphism::apply(const FreeWord& w) const {
  FreeWord out;
  for (int l : w.letters()) {
    int i = std::abs(l);
    if (i > rank_) throw std::invalid_argument("letter beyond rank");
    if (l > 0)
      out.append(images_[i - 1]);
    else
      out.append_inverse(images_[i - 1]);
  }
  return out;
}

bool FreeAutomorphism::is_identity() const {
  for (int i = 1; i <= rank_; ++i) {
    const std::vector<int>& img = images_[i - 1].letters();
    if (img.size() != 1 || img[0] != i) return false;
  }
  return true;
}

FreeAutomorphism compose(const FreeAutomorphism& f,
                         const FreeAutomorphism& g) {
  if (f.rank() != g.rank())
    throw std::invalid_argument("compose: rank mismatch");
  std::vector<FreeWord> images;
  images.reserve(f.rank());
  for (int i = 1; i <= f.rank(); ++i) images.push_back(g.apply(f.image(i)));
  return FreeAutomorphism(f.rank(), std::move(images));
}

FreeAutomorphism sigma_automorphism(int i, int sign, int rank) {
  if (i < 1 || i >= rank)
    throw std::invalid_argument("sigma index " + std::to_string(i) +
                                " out of range for rank " +
                                std::to_string(rank));
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sigma sign must be +1 or -1");
  std::vector<FreeWord> images;
  images.reserve(rank);
  for (int j = 1; j <= rank; ++j) images.push_back(FreeWord::generator(j));
  if (sign == 1) {
    images[i - 1] = FreeWord::reduce(std::vector<int>{i, i + 1, -i});
    images[i] = FreeWord::generator(i);
  } else {
    images[i - 1] = FreeWord::generator(i + 1);
    images[i] = FreeWord::reduce(std::vector<int>{-(i + 1), i, i + 1});
  }
  return FreeAutomorphism(rank, std::move(images));
}

FreeAutomorphism pure_generator_automorphism(const PureGenerator& g,
                                             int rank) {
  if (g.a < 1 || g.a >= g.b || g.b > rank)
    throw std::invalid_argument("generator out of range for rank");
  // sigma-letter expansion of p[a,b]; invert it for the negative generator.
  std::vector<int> sigmas;
  for (int j = g.b - 1; j > g.a; --j) sigmas.push_back(j);
  sigmas.push_back(g.a);
  sigmas.push_back(g.a);
  for (int j = g.a + 1; j < g.b; ++j) sigmas.push_back(-j);
  if (g.sign < 0) {
    std::vector<int> inv;
    for (auto it = sigmas.rbegin(); it != sigmas.rend(); ++it)
      inv.push_back(-*it);
    sigmas = std::move(inv);
  }
  FreeAutomorphism acc = FreeAutomorphism::identity(rank);
  for (int s : sigmas)
    acc = compose(acc, sigma_automorphism(std::abs(s), s > 0 ? 1 : -1, rank));
  return acc;
}

FreeAutomorphism braid_automorphism(const BraidWord& w) {
  const int n = w.strand_count();
  FreeAutomorphism acc = FreeAutomorphism::identity(n);
  // Letters repeat, so keep a per-call table of letter automorphisms.
  std::map<std::tuple<int, int, int>, FreeAutomorphism> table;
  for (const PureGenerator& g : w.letters()) {
    auto key = std::make_tuple(g.a, g.b, g.sign);
    auto it = table.find(key);
    if (it == table.end())
      it = table.emplace(key, pure_generator_automorphism(g, n)).first;
    acc = compose(acc, it->second);
  }
  return acc;
}

bool is_trivial(const BraidWord& w) {
  // Free cancellation first; it often empties the word outright and never
  // changes the group element.
  BraidWord reduced = free_cancel(w);
  if (reduced.empty()) return true;
  return braid_automorphism(reduced).is_identity();
}

bool are_equal(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strand_count() != w2.strand_count())
    throw std::invalid_argument("are_equal: mismatched strand counts");
  return is_trivial(concat(w1, invert(w2)));
}

}  // namespace braids
