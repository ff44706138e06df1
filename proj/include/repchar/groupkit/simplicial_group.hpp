//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_GROUPKIT_SIMPLICIAL_GROUP_HPP_
#define REPCHAR_GROUPKIT_SIMPLICIAL_GROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "repchar/exactlin/chain_complex.hpp"
#include "repchar/groupkit/free_group.hpp"

namespace repchar {

  // A degreewise free simplicial group truncated at level N. Level q is the
  // free group of rank ranks[q]; faces[q][i] (1 <= q <= N, 0 <= i <= q) maps
  // level q to level q - 1 and degeneracies[q][j] (q < N, 0 <= j <= q) maps
  // level q to level q + 1.
  struct SimplicialGroupModel {
    std::size_t                           N = 0;
    std::vector<std::size_t>              ranks;
    std::vector<std::vector<GroupHom>>    faces;
    std::vector<std::vector<GroupHom>>    degeneracies;
    std::vector<std::vector<std::string>> generator_labels;  // optional

    GroupHom const& face(std::size_t q, std::size_t i) const {
      return faces.at(q).at(i);
    }
    GroupHom const& degeneracy(std::size_t q, std::size_t j) const {
      return degeneracies.at(q).at(j);
    }
  };

  // Shape errors and the first failing simplicial identity, if any.
  std::optional<std::string> check_simplicial_identities(SimplicialGroupModel const& m);

  // Throws ValidationError with the message of check_simplicial_identities.
  void validate_model(SimplicialGroupModel const& m);

  // A monotone surjection [q] -> [p], as its sequence of values.
  using Surjection = std::vector<std::size_t>;

  // All monotone surjections [q] -> [p] in lexicographic order.
  std::vector<Surjection> surjections(std::size_t q, std::size_t p);

  // Free simplicial group generated by "cells": a cell of dimension p
  // contributes the generators sigma^*(c) for every surjection sigma: [q] -> [p]
  // at each level q >= p. Face i of a p-cell is a word in the level p - 1
  // generators. Generators of a level are numbered by cell index first and
  // then by the lexicographic order of the surjection.
  struct Cell {
    std::string           name;
    std::size_t           dim = 0;
    std::vector<FreeWord> faces;  // dim + 1 words when dim > 0
  };

  class CellularModelBuilder {
   public:
    explicit CellularModelBuilder(std::vector<Cell> cells);

    std::vector<Cell> const& cells() const noexcept {
      return _cells;
    }
    // Index of the generator sigma^*(cell) at level sigma.size() - 1.
    std::size_t generator_index(std::size_t cell, Surjection const& sigma) const;
    std::size_t rank(std::size_t q) const;

    SimplicialGroupModel build(std::size_t N) const;

   private:
    struct Generator {
      std::size_t cell;
      Surjection  sigma;
    };
    std::vector<Generator> const& level(std::size_t q) const;
    FreeWord                      face_of(Generator const& g, std::size_t i) const;

    std::vector<Cell>                           _cells;
    mutable std::vector<std::vector<Generator>> _levels;
  };

  // A reduced simplicial set given by its non-basepoint nondegenerate
  // simplices. Each face is either the basepoint (nullopt) or sigma^*(s) for a
  // nondegenerate simplex s and a surjection sigma.
  struct ReducedSimplicialSet {
    struct FaceRef {
      std::size_t simplex;
      Surjection  sigma;
    };
    struct Simplex {
      std::string                         name;
      std::size_t                         dim = 1;
      std::vector<std::optional<FaceRef>> faces;
    };
    std::vector<Simplex> simplices;

    // Delta^n / boundary, a single nondegenerate n-simplex.
    static ReducedSimplicialSet sphere(std::size_t n);
  };

  // Milnor's free simplicial group FK with the basepoint sent to 1. Throws
  // ValidationError if K is not reduced or a face reference is malformed.
  SimplicialGroupModel milnor_model(ReducedSimplicialSet const& k, std::size_t N);

  // The constant simplicial group on the free group of rank k.
  SimplicialGroupModel constant_model(std::size_t k, std::size_t N);

  // Model of the torus: free on x, y in degree 0 and a 1-cell r with
  // d_0 r = x y x^-1 y^-1 and d_1 r = 1.
  SimplicialGroupModel torus_model(std::size_t N);

  // Unnormalized chain complex of the abelianized model: Z^{r_q} in degree q
  // with differential sum_i (-1)^i abelianize(d_i). Its homology is pi_* of
  // the abelianization, valid in degrees < N.
  IntegerChainComplex abelianized_chains(SimplicialGroupModel const& m);

}  // namespace repchar

#endif  // REPCHAR_GROUPKIT_SIMPLICIAL_GROUP_HPP_
