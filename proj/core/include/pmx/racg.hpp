#ifndef PMX_RACG_HPP_
#define PMX_RACG_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pmx {

using Vertex = std::uint32_t;
using Color = int;

class Premaniplex;

//! An element of the universal string Coxeter group of rank n, where
//! r_i^2 = 1 and (r_i r_j)^2 = 1 whenever |i - j| >= 2.
//!
//! The letters are always stored in canonical form: reduced, and the
//! lexicographically least word of its commutation class. Two words are
//! equal as group elements iff they compare equal.
class GroupWord {
 public:
  //! The identity of rank 1.
  GroupWord() = default;

  static GroupWord identity(int rank);
  static GroupWord generator(int rank, int i);

  int rank() const noexcept { return rank_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  //! "1" for the identity, otherwise e.g. "r0r2" (dot separated above rank 10).
  std::string to_string() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

 private:
  friend GroupWord normalize(std::span<const int> letters, int rank);
  GroupWord(int rank, std::vector<int> letters)
      : rank_(rank), letters_(std::move(letters)) {}

  int rank_ = 1;
  std::vector<int> letters_;
};

//! Canonical form of the word letters[0] letters[1] ... (leftmost letter acts
//! last). Throws InvalidGenerator for a letter outside {0..rank-1}.
GroupWord normalize(std::span<const int> letters, int rank);
GroupWord normalize(std::initializer_list<int> letters, int rank);

//! The product a*b, so that act(a*b, X, v) == act(a, X, act(b, X, v)).
GroupWord multiply(const GroupWord& a, const GroupWord& b);

GroupWord inverse(const GroupWord& w);

//! Applies w to v, rightmost letter first.
Vertex act(const GroupWord& w, const Premaniplex& X, Vertex v);

bool is_even(const GroupWord& w) noexcept;

}  // namespace pmx

#endif  // PMX_RACG_HPP_
