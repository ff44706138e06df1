//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "repchar/errors.hpp"

namespace repchar::io {

  namespace {

    [[noreturn]] void fail(std::string const& where, std::string const& what) {
      throw ValidationError("field " + where + ": " + what);
    }

    Json const& member(Json const& j, char const* key, std::string const& where) {
      if (!j.is_object()) {
        fail(where, "expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        fail(where.empty() ? key : where + "." + key, "missing");
      }
      return *it;
    }

    std::string child(std::string const& where, char const* key) {
      return where.empty() ? key : where + "." + key;
    }

    std::string child(std::string const& where, std::size_t i) {
      return where + "[" + std::to_string(i) + "]";
    }

    Json const& array(Json const& j, std::string const& where) {
      if (!j.is_array()) {
        fail(where, "expected an array");
      }
      return j;
    }

    std::size_t index(Json const& j, std::string const& where, std::size_t bound = static_cast<std::size_t>(-1)) {
      if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        fail(where, "expected a non-negative integer");
      }
      auto const v = j.get<std::size_t>();
      if (v >= bound) {
        fail(where, "value " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
      }
      return v;
    }

    std::string text(Json const& j, std::string const& where) {
      if (!j.is_string()) {
        fail(where, "expected a string");
      }
      return j.get<std::string>();
    }

    std::vector<std::size_t> index_list(Json const& j, std::string const& where,
                                        std::size_t bound = static_cast<std::size_t>(-1)) {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < array(j, where).size(); ++i) {
        out.push_back(index(j[i], child(where, i), bound));
      }
      return out;
    }

    Rational rational(Json const& j, std::string const& where) {
      if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
      }
      if (j.is_string()) {
        try {
          return Rational::parse(j.get<std::string>());
        } catch (ValidationError const& e) {
          fail(where, e.what());
        }
      }
      fail(where, "expected an integer or a rational string");
    }

    std::vector<FreeWord> word_list(Json const& j, std::string const& where) {
      std::vector<FreeWord> out;
      for (std::size_t i = 0; i < array(j, where).size(); ++i) {
        out.push_back(parse_word(j[i], child(where, i)));
      }
      return out;
    }

    std::size_t truncation(Json const& j) {
      return index(member(j, "N", ""), "N");
    }

  }  // namespace

  Json parse_json(std::string const& input, std::string const& origin) {
    try {
      return Json::parse(input);
    } catch (nlohmann::json::parse_error const& e) {
      std::size_t line = 1, column = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < input.size(); ++i) {
        if (input[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      std::string msg = e.what();
      if (auto p = msg.find("syntax error"); p != std::string::npos) {
        msg = msg.substr(p);
      }
      throw ValidationError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
    }
  }

  Json load_json(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ValidationError("cannot open " + path.string());
    }
    std::stringstream s;
    s << in.rdbuf();
    return parse_json(s.str(), path.string());
  }

  FreeWord parse_word(Json const& j, std::string const& where) {
    try {
      if (j.is_string()) {
        return FreeWord::parse(j.get<std::string>());
      }
      std::vector<std::int32_t> letters;
      for (std::size_t i = 0; i < array(j, where).size(); ++i) {
        if (!j[i].is_number_integer()) {
          fail(child(where, i), "expected a signed generator index");
        }
        letters.push_back(j[i].get<std::int32_t>());
      }
      return FreeWord(std::move(letters));
    } catch (ValidationError const& e) {
      std::string const msg = e.what();
      if (msg.rfind("field ", 0) == 0) {
        throw;
      }
      fail(where, msg);
    }
  }

  FiniteGroup parse_group(Json const& j) {
    auto const& table = array(member(j, "table", ""), "table");
    std::size_t const n = table.size();
    std::vector<std::vector<FiniteGroup::element>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      auto const where = child("table", i);
      rows.push_back(index_list(table[i], where, n));
      if (rows.back().size() != n) {
        fail(where, "expected " + std::to_string(n) + " entries");
      }
    }
    std::vector<std::string> labels;
    if (j.contains("elements")) {
      auto const& el = array(j["elements"], "elements");
      if (el.size() != n) {
        fail("elements", "expected " + std::to_string(n) + " labels");
      }
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(text(el[i], child("elements", i)));
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
      }
    }
    auto const identity = index(member(j, "identity", ""), "identity", n);
    return FiniteGroup(std::move(labels), std::move(rows), identity);
  }

  GroupPresentation parse_presentation(Json const& j) {
    GroupPresentation p;
    p.rank     = index(member(j, "rank", ""), "rank");
    p.relators = word_list(member(j, "relators", ""), "relators");
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (p.relators[i].max_generator() > p.rank) {
        fail(child("relators", i), "uses a generator beyond the rank");
      }
    }
    return p;
  }

  SimplicialGroupModel parse_model(Json const& j) {
    auto const kind = text(member(j, "model", ""), "model");
    std::size_t const N = truncation(j);
    if (kind == "constant") {
      return constant_model(index(member(j, "rank", ""), "rank"), N);
    }
    if (kind == "cells") {
      std::vector<Cell> cells;
      auto const&       arr = array(member(j, "cells", ""), "cells");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        auto const where = child("cells", i);
        Cell       c;
        c.name = text(member(arr[i], "name", where), child(where, "name"));
        c.dim  = index(member(arr[i], "dim", where), child(where, "dim"));
        if (c.dim > 0) {
          c.faces = word_list(member(arr[i], "faces", where), child(where, "faces"));
        }
        cells.push_back(std::move(c));
      }
      return CellularModelBuilder(std::move(cells)).build(N);
    }
    if (kind == "milnor") {
      ReducedSimplicialSet k;
      auto const&          arr = array(member(j, "simplices", ""), "simplices");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        auto const                    where = child("simplices", i);
        ReducedSimplicialSet::Simplex s;
        s.name            = text(member(arr[i], "name", where), child(where, "name"));
        s.dim             = index(member(arr[i], "dim", where), child(where, "dim"));
        auto const& faces = array(member(arr[i], "faces", where), child(where, "faces"));
        for (std::size_t f = 0; f < faces.size(); ++f) {
          auto const fw = child(child(where, "faces"), f);
          if (faces[f].is_null()) {
            s.faces.emplace_back();
          } else {
            ReducedSimplicialSet::FaceRef ref;
            ref.simplex = index(member(faces[f], "simplex", fw), child(fw, "simplex"), arr.size());
            ref.sigma   = index_list(member(faces[f], "sigma", fw), child(fw, "sigma"));
            s.faces.push_back(std::move(ref));
          }
        }
        k.simplices.push_back(std::move(s));
      }
      return milnor_model(k, N);
    }
    if (kind != "explicit") {
      fail("model", "unknown kind '" + kind + "' (explicit, cells, milnor, constant)");
    }
    SimplicialGroupModel m;
    m.N     = N;
    m.ranks = index_list(member(j, "ranks", ""), "ranks");
    if (m.ranks.size() != N + 1) {
      fail("ranks", "expected N + 1 entries");
    }
    auto homs = [&](char const* key, bool face) {
      std::vector<std::vector<GroupHom>> out(N + 1);
      auto const&                        arr = array(member(j, key, ""), key);
      if (arr.size() != N + 1) {
        fail(key, "expected N + 1 levels");
      }
      for (std::size_t q = 0; q <= N; ++q) {
        auto const  where = child(key, q);
        auto const& level = array(arr[q], where);
        bool const  exists = face ? q >= 1 : q < N;
        std::size_t const want = exists ? q + 1 : 0;
        if (level.size() != want) {
          fail(where, "expected " + std::to_string(want) + " maps");
        }
        for (std::size_t i = 0; i < want; ++i) {
          std::size_t const target = face ? q - 1 : q + 1;
          auto              images = word_list(level[i], child(where, i));
          if (images.size() != m.ranks[q]) {
            fail(child(where, i), "expected " + std::to_string(m.ranks[q]) + " images");
          }
          for (std::size_t g = 0; g < images.size(); ++g) {
            if (images[g].max_generator() > m.ranks[target]) {
              fail(child(child(where, i), g), "uses a generator beyond the target rank");
            }
          }
          out[q].emplace_back(m.ranks[q], m.ranks[target], std::move(images));
        }
      }
      return out;
    };
    m.faces        = homs("faces", true);
    m.degeneracies = homs("degeneracies", false);
    return m;
  }

  FinCategory parse_category(Json const& j) {
    auto const kind = text(member(j, "category", ""), "category");
    if (kind == "group") {
      return FinCategory::from_group(parse_group(member(j, "group", "")));
    }
    if (kind == "poset") {
      std::size_t const              n = index(member(j, "size", ""), "size");
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        leq[i][i] = true;
      }
      auto const& rel = array(member(j, "relations", ""), "relations");
      for (std::size_t r = 0; r < rel.size(); ++r) {
        auto const pair = index_list(rel[r], child("relations", r), n);
        if (pair.size() != 2) {
          fail(child("relations", r), "expected a pair");
        }
        leq[pair[0]][pair[1]] = true;
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (leq[a][k] && leq[k][b]) {
              leq[a][b] = true;
            }
          }
        }
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (leq[a][b] && leq[b][a]) {
            fail("relations", "the relation has a cycle through " + std::to_string(a) + " and " + std::to_string(b));
          }
        }
      }
      return FinCategory::from_poset(leq);
    }
    if (kind != "explicit") {
      fail("category", "unknown kind '" + kind + "' (explicit, poset, group)");
    }
    std::vector<std::string> objects;
    auto const&              obj = array(member(j, "objects", ""), "objects");
    for (std::size_t i = 0; i < obj.size(); ++i) {
      objects.push_back(text(obj[i], child("objects", i)));
    }
    std::vector<FinCategory::Morphism> morphisms;
    auto const&                        mor = array(member(j, "morphisms", ""), "morphisms");
    for (std::size_t i = 0; i < mor.size(); ++i) {
      auto const            where = child("morphisms", i);
      FinCategory::Morphism m;
      m.source = index(member(mor[i], "source", where), child(where, "source"), objects.size());
      m.target = index(member(mor[i], "target", where), child(where, "target"), objects.size());
      m.label  = mor[i].contains("label") ? text(mor[i]["label"], child(where, "label")) : std::to_string(i);
      morphisms.push_back(std::move(m));
    }
    auto const identities = index_list(member(j, "identities", ""), "identities", morphisms.size());
    std::vector<FinCategory::Composite> composites;
    auto const&                         comp = array(member(j, "composites", ""), "composites");
    for (std::size_t i = 0; i < comp.size(); ++i) {
      auto const t = index_list(comp[i], child("composites", i), morphisms.size());
      if (t.size() != 3) {
        fail(child("composites", i), "expected [g, f, g o f]");
      }
      composites.push_back({t[0], t[1], t[2]});
    }
    return FinCategory(std::move(objects), std::move(morphisms), std::move(identities), composites);
  }

  SetFunctor parse_set_functor(Json const& j, FinCategory const& c) {
    SetFunctor f;
    f.sizes = index_list(member(j, "sizes", ""), "sizes");
    if (f.sizes.size() != c.num_objects()) {
      fail("sizes", "expected one size per object");
    }
    auto const& maps = array(member(j, "maps", ""), "maps");
    if (maps.size() != c.num_morphisms()) {
      fail("maps", "expected one map per morphism");
    }
    for (std::size_t m = 0; m < maps.size(); ++m) {
      f.maps.push_back(index_list(maps[m], child("maps", m), f.sizes[c.target(m)]));
    }
    if (auto err = check_set_functor(c, f)) {
      throw ValidationError("set functor: " + *err);
    }
    return f;
  }

  ModuleFunctor parse_module_functor(Json const& j, FinCategory const& c) {
    ModuleFunctor m;
    auto const    variance = text(member(j, "variance", ""), "variance");
    if (variance == "covariant") {
      m.variance = Variance::covariant;
    } else if (variance == "contravariant") {
      m.variance = Variance::contravariant;
    } else {
      fail("variance", "expected covariant or contravariant");
    }
    m.dims = index_list(member(j, "dims", ""), "dims");
    if (m.dims.size() != c.num_objects()) {
      fail("dims", "expected one dimension per object");
    }
    auto const& mats = array(member(j, "matrices", ""), "matrices");
    if (mats.size() != c.num_morphisms()) {
      fail("matrices", "expected one matrix per morphism");
    }
    for (std::size_t f = 0; f < mats.size(); ++f) {
      auto const        where = child("matrices", f);
      bool const        cov   = m.variance == Variance::covariant;
      std::size_t const rows  = m.dims[cov ? c.target(f) : c.source(f)];
      std::size_t const cols  = m.dims[cov ? c.source(f) : c.target(f)];
      auto const&       mat   = array(mats[f], where);
      if (mat.size() != rows) {
        fail(where, "expected " + std::to_string(rows) + " rows");
      }
      SparseMatrix::Builder b(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        auto const& row = array(mat[r], child(where, r));
        if (row.size() != cols) {
          fail(child(where, r), "expected " + std::to_string(cols) + " entries");
        }
        for (std::size_t col = 0; col < cols; ++col) {
          b.add(r, col, rational(row[col], child(child(where, r), col)));
        }
      }
      m.maps.push_back(std::move(b).build());
    }
    if (auto err = check_module_functor(c, m)) {
      throw ValidationError("module functor: " + *err);
    }
    return m;
  }

  InputKind detect_kind(Json const& j) {
    if (!j.is_object()) {
      return InputKind::unknown;
    }
    if (j.contains("model")) {
      return InputKind::model;
    }
    if (j.contains("category")) {
      return InputKind::category;
    }
    if (j.contains("table")) {
      return InputKind::group;
    }
    if (j.contains("relators")) {
      return InputKind::presentation;
    }
    if (j.contains("sizes")) {
      return InputKind::set_functor;
    }
    if (j.contains("variance")) {
      return InputKind::module_functor;
    }
    return InputKind::unknown;
  }

  std::string kind_name(InputKind k) {
    switch (k) {
      case InputKind::group:
        return "group";
      case InputKind::presentation:
        return "presentation";
      case InputKind::model:
        return "model";
      case InputKind::category:
        return "category";
      case InputKind::set_functor:
        return "set functor";
      case InputKind::module_functor:
        return "module functor";
      case InputKind::unknown:
        break;
    }
    return "unknown";
  }

}  // namespace repchar::io
