//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_IO_JSON_IO_HPP_
#define REPCHAR_IO_JSON_IO_HPP_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "repchar/fincat/category.hpp"
#include "repchar/fincat/functor.hpp"
#include "repchar/groupkit/finite_group.hpp"
#include "repchar/groupkit/simplicial_group.hpp"

namespace repchar::io {

  using Json = nlohmann::ordered_json;

  // Reads and parses a JSON file. Syntax errors become ValidationError with
  // "path:line:column: message".
  Json load_json(std::filesystem::path const& path);
  Json parse_json(std::string const& text, std::string const& origin);

  // Words are either signed 1-based letter lists ([1, 2, -1]) or strings
  // in the FreeWord::parse syntax ("x0 x1 x0^-1").
  FreeWord parse_word(Json const& j, std::string const& where);

  // {"elements": [labels], "table": [[...]], "identity": i}
  FiniteGroup parse_group(Json const& j);

  // {"rank": r, "relators": [word, ...]}
  GroupPresentation parse_presentation(Json const& j);

  // {"model": "explicit", "N", "ranks", "faces", "degeneracies"}, where
  // faces[q][i] and degeneracies[q][j] are lists of generator images;
  // {"model": "cells", "N", "cells": [{"name", "dim", "faces"}]};
  // {"model": "milnor", "N", "simplices": [{"name", "dim", "faces"}]} with
  //   faces null (basepoint) or {"simplex", "sigma"};
  // {"model": "constant", "N", "rank"}.
  SimplicialGroupModel parse_model(Json const& j);

  // {"category": "explicit", "objects", "morphisms": [{"source", "target",
  //   "label"}], "identities", "composites": [[g, f, g o f], ...]};
  // {"category": "poset", "size", "relations": [[a, b], ...]} (closed
  //   reflexively and transitively);
  // {"category": "group", "group": <multiplication table>}.
  FinCategory parse_category(Json const& j);

  // {"sizes": [...], "maps": [[...] per morphism]}
  SetFunctor parse_set_functor(Json const& j, FinCategory const& c);

  // {"variance": "covariant" | "contravariant", "dims": [...],
  //  "matrices": [row-major nested lists per morphism]}; entries are
  // integers or strings such as "-3/4".
  ModuleFunctor parse_module_functor(Json const& j, FinCategory const& c);

  enum class InputKind { group, presentation, model, category, set_functor, module_functor, unknown };

  InputKind   detect_kind(Json const& j);
  std::string kind_name(InputKind k);

}  // namespace repchar::io

#endif  // REPCHAR_IO_JSON_IO_HPP_
