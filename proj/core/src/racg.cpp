#include "pmx/racg.hpp"

#include <cstdlib>
#include <string>

#include "pmx/errors.hpp"
#include "pmx/premaniplex.hpp"

namespace pmx {

namespace {

bool commute(int a, int b) { return std::abs(a - b) >= 2; }

// Appends g to a reduced word, keeping it reduced. A reduced word times g
// is shorter iff some g can be moved to the end past commuting letters.
void push_reduced(std::vector<int>& w, int g) {
  for (std::size_t k = w.size(); k-- > 0;) {
    if (w[k] == g) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(k));
      return;
    }
    if (!commute(w[k], g)) break;
  }
  w.push_back(g);
}

// Lexicographically least word in the commutation class of w.
std::vector<int> lex_normal_form(std::vector<int> w) {
  std::vector<int> out;
  out.reserve(w.size());
  while (!w.empty()) {
    std::size_t best = w.size();
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (best != w.size() && w[p] >= w[best]) continue;
      bool movable = true;
      for (std::size_t q = 0; q < p; ++q) {
        if (!commute(w[q], w[p])) {
          movable = false;
          break;
        }
      }
      if (movable) best = p;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

}  // namespace

GroupWord GroupWord::identity(int rank) { return normalize({}, rank); }

GroupWord GroupWord::generator(int rank, int i) { return normalize({i}, rank); }

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k > 0 && rank_ > 10) s += '.';
    s += 'r';
    s += std::to_string(letters_[k]);
  }
  return s;
}

GroupWord normalize(std::span<const int> letters, int rank) {
  if (rank < 1) throw InvalidArgument("rank must be positive");
  std::vector<int> w;
  w.reserve(letters.size());
  for (int g : letters) {
    if (g < 0 || g >= rank) {
      throw InvalidGenerator("generator " + std::to_string(g) +
                             " is not below rank " + std::to_string(rank));
    }
    push_reduced(w, g);
  }
  return GroupWord(rank, lex_normal_form(std::move(w)));
}

GroupWord normalize(std::initializer_list<int> letters, int rank) {
  return normalize(std::span<const int>(letters.begin(), letters.size()),
                   rank);
}

GroupWord multiply(const GroupWord& a, const GroupWord& b) {
  if (a.rank() != b.rank()) throw RankMismatch("multiplying words of different rank");
  std::vector<int> cat = a.letters();
  cat.insert(cat.end(), b.letters().begin(), b.letters().end());
  return normalize(cat, a.rank());
}

GroupWord inverse(const GroupWord& w) {
  std::vector<int> rev(w.letters().rbegin(), w.letters().rend());
  return normalize(rev, w.rank());
}

Vertex act(const GroupWord& w, const Premaniplex& X, Vertex v) {
  if (w.rank() != X.rank()) throw RankMismatch("word rank differs from premaniplex rank");
  if (v >= X.vertex_count()) throw OutOfRange("vertex " + std::to_string(v) + " out of range");
  const auto& l = w.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) v = X.neighbor(*it, v);
  return v;
}

bool is_even(const GroupWord& w) noexcept { return w.length() % 2 == 0; }

}  // namespace pmx
