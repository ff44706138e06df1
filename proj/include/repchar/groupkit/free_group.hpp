//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_GROUPKIT_FREE_GROUP_HPP_
#define REPCHAR_GROUPKIT_FREE_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "repchar/exactlin/integer_matrix.hpp"

namespace repchar {

  // A word in a free group. Letters are signed 1-based generator indices:
  // +k stands for x_{k-1} and -k for its inverse.
  class FreeWord {
   public:
    FreeWord() = default;
    // Reduces the given letters; throws ValidationError on a zero letter.
    explicit FreeWord(std::vector<std::int32_t> letters);

    static FreeWord generator(std::size_t i, int exponent = 1);

    // Parses "x0 x1^-1 x2^3" (tokens may also be separated by '*');
    // "1" or the empty string is the identity.
    static FreeWord parse(std::string_view text);

    std::vector<std::int32_t> const& letters() const noexcept {
      return _letters;
    }
    std::size_t length() const noexcept {
      return _letters.size();
    }
    bool is_identity() const noexcept {
      return _letters.empty();
    }
    // 1 + the largest generator index used, 0 for the identity.
    std::size_t max_generator() const noexcept;

    FreeWord inverse() const;
    FreeWord operator*(FreeWord const& rhs) const;
    FreeWord pow(long k) const;

    // Exponent sum of each generator, for a free group of the given rank.
    std::vector<BigInt> exponent_sums(std::size_t rank) const;

    std::string to_string() const;

    friend bool operator==(FreeWord const&, FreeWord const&) = default;
    friend auto operator<=>(FreeWord const&, FreeWord const&) = default;

   private:
    std::vector<std::int32_t> _letters;
  };

  // Free reduction of a raw letter sequence.
  FreeWord reduce(std::vector<std::int32_t> const& raw);

  // A homomorphism F<x_0..x_{n-1}> -> F<y_0..y_{m-1}> given by the images of
  // the source generators.
  class GroupHom {
   public:
    GroupHom() = default;
    GroupHom(std::size_t source_rank, std::size_t target_rank, std::vector<FreeWord> images);

    static GroupHom identity(std::size_t rank);

    std::size_t source_rank() const noexcept {
      return _source_rank;
    }
    std::size_t target_rank() const noexcept {
      return _target_rank;
    }
    std::vector<FreeWord> const& images() const noexcept {
      return _images;
    }
    FreeWord const& image(std::size_t i) const {
      return _images.at(i);
    }

    FreeWord apply(FreeWord const& w) const;

    std::string to_string() const;

    friend bool operator==(GroupHom const&, GroupHom const&) = default;

   private:
    std::size_t           _source_rank = 0;
    std::size_t           _target_rank = 0;
    std::vector<FreeWord> _images;
  };

  // g o f (apply f first). Throws ValidationError on a rank mismatch.
  GroupHom compose_hom(GroupHom const& g, GroupHom const& f);

  // The m x n integer matrix whose column j is the exponent-sum vector of
  // the image of generator j.
  IntegerMatrix abelianize_hom(GroupHom const& f);

}  // namespace repchar

#endif  // REPCHAR_GROUPKIT_FREE_GROUP_HPP_
