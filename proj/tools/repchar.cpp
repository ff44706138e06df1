//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "repchar/charmap/character.hpp"
#include "repchar/crossedcat/suites.hpp"
#include "repchar/cychom/cyclic_homology.hpp"
#include "repchar/errors.hpp"
#include "repchar/fincat/random.hpp"
#include "repchar/fincat/tor.hpp"
#include "repchar/io/json_io.hpp"
#include "repchar/rephom/gln.hpp"
#include "repchar/rephom/representation_homology.hpp"

using namespace repchar;
using io::Json;

namespace {

  enum class Format { tsv, json };

  std::map<std::string, Format> const format_names{{"tsv", Format::tsv}, {"json", Format::json}};

  void print_json(Json const& j) {
    std::cout << j.dump(2) << "\n";
  }

  Json dims_json(std::vector<std::size_t> const& d) {
    Json a = Json::array();
    for (auto v : d) {
      a.push_back(v);
    }
    return a;
  }

  Json weight_json(Weight const& w) {
    Json a = Json::array();
    for (auto const& x : w) {
      a.push_back(x.str());
    }
    return a;
  }

  std::string join_dims(std::vector<std::size_t> const& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
      s += (i ? "," : "") + std::to_string(d[i]);
    }
    return s;
  }

  // ---- hc ------------------------------------------------------------------

  struct HcOptions {
    std::string path;
    std::size_t max_degree = 4;
    bool        reduced    = false;
    Format      format     = Format::tsv;
  };

  int run_hc(HcOptions const& o) {
    auto const g    = io::parse_group(io::load_json(o.path));
    auto const dims = o.reduced ? reduced_hc_dims(g, o.max_degree) : hc_dims(g, o.max_degree);
    if (o.format == Format::json) {
      auto const basis = hc0_basis(g);
      Json       reps  = Json::array();
      for (auto r : basis.representatives) {
        reps.push_back(g.label(r));
      }
      print_json({{"command", "hc"},
                  {"group_order", g.order()},
                  {"conjugacy_classes", basis.representatives.size()},
                  {"reduced", o.reduced},
                  {"field", "Q"},
                  {"dims", dims_json(dims)},
                  {"degree0_basis", reps}});
      return 0;
    }
    std::cout << "degree\tdimension\n";
    for (std::size_t q = 0; q < dims.size(); ++q) {
      std::cout << q << "\t" << dims[q] << "\n";
    }
    return 0;
  }

  // ---- hr ------------------------------------------------------------------

  struct HrOptions {
    std::string                path;
    std::size_t                max_degree = 3;
    std::optional<std::size_t> window;
    Format                     format = Format::tsv;
  };

  int run_hr(HrOptions const& o) {
    auto const m = io::parse_model(io::load_json(o.path));
    validate_model(m);
    auto const derived = hr_derived_abelianization(m, o.max_degree);
    std::optional<HrWindowResult> win;
    if (o.window) {
      win = hr_bruteforce_window(m, o.max_degree, *o.window);
    }
    bool const agree = !win || hr_routes_agree(derived, *win);

    if (o.format == Format::json) {
      Json j{{"command", "hr"},
             {"group", "G_m"},
             {"truncation", m.N},
             {"max_degree", o.max_degree},
             {"h1", derived.h1.to_string()},
             {"homotopy_ranks", dims_json(derived.homotopy_ranks)},
             {"per_weight_dims", dims_json(derived.per_weight)},
             {"note", "every weight of h1 carries the per-weight dimensions; degrees up to N - 2 are used"}};
      if (win) {
        Json stable = Json::array();
        for (auto const& [w, d] : win->stable) {
          stable.push_back({{"weight", weight_json(w)}, {"dims", dims_json(d)}});
        }
        Json unstable = Json::array();
        for (auto const& [w, q] : win->unstable) {
          unstable.push_back({{"weight", weight_json(w)}, {"degree", q}});
        }
        j["window"] = {{"B", win->window},
                       {"stable", stable},
                       {"unstable", unstable},
                       {"trusted_degrees", dims_json(win->trusted_degrees)},
                       {"routes_agree", agree}};
      }
      print_json(j);
    } else {
      std::cout << "# H1 = " << derived.h1.to_string() << "\n";
      std::cout << "degree\tdimension_per_weight\n";
      for (std::size_t q = 0; q < derived.per_weight.size(); ++q) {
        std::cout << q << "\t" << derived.per_weight[q] << "\n";
      }
      if (win) {
        std::cout << "# window B = " << win->window << "\n";
        std::cout << "weight\tdegree\tdimension\tstatus\n";
        std::set<std::pair<Weight, std::size_t>> flagged(win->unstable.begin(), win->unstable.end());
        for (auto const& [w, d] : win->stable) {
          for (std::size_t q = 0; q < d.size(); ++q) {
            std::cout << weight_to_string(w) << "\t" << q << "\t" << d[q] << "\t"
                      << (flagged.count({w, q}) ? "unstable" : "stable") << "\n";
          }
        }
        std::cout << "# trusted degrees: " << join_dims(win->trusted_degrees) << "\n";
        std::cout << "# routes " << (agree ? "agree" : "DISAGREE") << "\n";
      }
    }
    return agree ? 0 : 2;
  }

  // ---- hr0 -----------------------------------------------------------------

  struct Hr0Options {
    std::string                path;
    std::optional<std::size_t> gln;
    Format                     format = Format::tsv;
  };

  int run_hr0(Hr0Options const& o) {
    auto const p  = io::parse_presentation(io::load_json(o.path));
    auto const h0 = hr_degree0(p);
    std::optional<GlnPresentation> gln;
    if (o.gln) {
      gln = rep_ring_gln_degree0(p, *o.gln);
    }
    if (o.format == Format::json) {
      Json j{{"command", "hr0"}, {"h1", h0.group.to_string()}, {"ring", h0.description}};
      if (gln) {
        Json loc = Json::array(), ideal = Json::array();
        for (auto const& x : gln->localization) {
          loc.push_back(x.to_string(gln->variables));
        }
        for (auto const& x : gln->ideal) {
          ideal.push_back(x.to_string(gln->variables));
        }
        j["gln"] = {{"n", gln->n}, {"variables", gln->variables}, {"localization", loc}, {"ideal", ideal}};
      }
      print_json(j);
      return 0;
    }
    std::cout << "H1 = " << h0.group.to_string() << "\n";
    std::cout << "HR_0 = " << h0.description << "\n";
    if (gln) {
      std::cout << "# GL_" << gln->n << " degree 0\n" << gln->to_string();
    }
    return 0;
  }

  // ---- char ----------------------------------------------------------------

  struct CharOptions {
    std::string                path;
    std::optional<std::string> element;
    std::optional<std::size_t> gln;
    Format                     format = Format::tsv;
  };

  // Label of a G_ab element: its smallest preimage in G.
  std::string ab_label(FiniteGroup const& g, Abelianization const& ab, std::size_t cls) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (ab.class_of[x] == cls) {
        return "t^[" + g.label(x) + "]";
      }
    }
    return "?";
  }

  int run_char_table(FiniteGroup const& g, CharOptions const& o) {
    if (o.gln) {
      throw ValidationError("--gln needs a presentation input");
    }
    auto const ab      = abelianization(g);
    auto const classes = conjugacy_classes(g);
    if (o.element) {
      std::optional<std::size_t> x;
      for (std::size_t i = 0; i < g.order(); ++i) {
        if (g.label(i) == *o.element) {
          x = i;
        }
      }
      if (!x) {
        throw ValidationError("no element labelled '" + *o.element + "'");
      }
      auto const value = ab_label(g, ab, char0_gm(g, *x));
      if (o.format == Format::json) {
        print_json({{"command", "char"}, {"element", *o.element}, {"character", value}});
      } else {
        std::cout << *o.element << "\t" << value << "\n";
      }
      return 0;
    }
    Json rows = Json::array();
    if (o.format == Format::tsv) {
      std::cout << "class\trepresentative\tsize\tcharacter\n";
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      auto const rep   = classes[c].front();
      auto const value = ab_label(g, ab, char0_gm(g, rep));
      if (o.format == Format::tsv) {
        std::cout << c << "\t" << g.label(rep) << "\t" << classes[c].size() << "\t" << value << "\n";
      }
      rows.push_back({{"class", c}, {"representative", g.label(rep)}, {"size", classes[c].size()}, {"character", value}});
    }
    if (o.format == Format::json) {
      print_json({{"command", "char"}, {"abelianization_order", ab.order}, {"classes", rows}});
    }
    return 0;
  }

  int run_char_presentation(GroupPresentation const& p, CharOptions const& o) {
    if (!o.element) {
      throw ValidationError("--element is required for a presentation input");
    }
    auto const w      = FreeWord::parse(*o.element);
    auto const weight = char0_gm(p, w);
    auto const group  = p.abelianization();
    std::optional<GlnCharacter> tr;
    if (o.gln) {
      tr = char0_gln(p, w, *o.gln);
    }
    if (o.format == Format::json) {
      Json j{{"command", "char"},
             {"element", w.to_string()},
             {"abelianization", group.to_string()},
             {"weight", weight_json(weight)}};
      if (tr) {
        j["gln"] = {{"n", *o.gln}, {"trace", tr->to_string()}};
      }
      print_json(j);
      return 0;
    }
    std::cout << "abelianization\t" << group.to_string() << "\n";
    std::cout << "character\tt^" << weight_to_string(weight) << "\n";
    if (tr) {
      std::cout << "trace_" << *o.gln << "\t" << tr->to_string() << "\n";
    }
    return 0;
  }

  int run_char(CharOptions const& o) {
    auto const j = io::load_json(o.path);
    switch (io::detect_kind(j)) {
      case io::InputKind::group:
        return run_char_table(io::parse_group(j), o);
      case io::InputKind::presentation:
        return run_char_presentation(io::parse_presentation(j), o);
      default:
        throw ValidationError("expected a multiplication table or a presentation");
    }
  }

  // ---- triangle-check ------------------------------------------------------

  struct TriangleOptions {
    std::string path;
    Format      format = Format::tsv;
  };

  int run_triangle(TriangleOptions const& o) {
    auto const g  = io::parse_group(io::load_json(o.path));
    auto const t  = check_triangle_degree0(g);
    auto const hs = hs0(g);
    if (o.format == Format::json) {
      print_json({{"command", "triangle-check"},
                  {"hc0", t.iota_star.cols()},
                  {"hs0", hs.dimension},
                  {"hr0", t.character.rows()},
                  {"character_rank", t.character_rank},
                  {"holds", t.holds},
                  {"reason", t.reason},
                  {"note", "degree 0 only; HS_0 from the Delta S colimit over levels <= 2"}});
    } else {
      std::cout << "dim HC_0\t" << t.iota_star.cols() << "\n";
      std::cout << "dim HS_0\t" << hs.dimension << "\n";
      std::cout << "dim HR_0\t" << t.character.rows() << "\n";
      std::cout << "character rank\t" << t.character_rank << "\n";
      std::cout << (t.holds ? "triangle holds" : "triangle FAILS: " + t.reason) << "\n";
    }
    return t.holds ? 0 : 2;
  }

  // ---- shapiro-check -------------------------------------------------------

  struct ShapiroOptions {
    std::optional<std::string> category, functor, module;
    std::size_t                max_degree = 3;
    std::size_t                random     = 0;
    std::uint64_t              seed       = 1;
    Format                     format     = Format::tsv;
  };

  int run_shapiro(ShapiroOptions const& o) {
    if (o.random > 0) {
      std::mt19937_64 rng(o.seed);
      std::size_t     agree = 0, nontrivial = 0;
      std::optional<std::size_t> first_bad;
      for (std::size_t trial = 0; trial < o.random; ++trial) {
        auto const c = random_poset(rng, 1 + rng() % 6);
        auto const f = random_poset_set_functor(rng, c, 5);
        auto const x = random_poset_module(rng, c, 3);
        auto const r = shapiro_check(c, f, x, o.max_degree);
        agree += r.agree;
        if (!r.agree && !first_bad) {
          first_bad = trial;
        }
        bool positive = false;
        for (std::size_t q = 1; q < r.over_base.size(); ++q) {
          positive |= r.over_base[q] != 0;
        }
        nontrivial += positive;
      }
      if (o.format == Format::json) {
        print_json({{"command", "shapiro-check"},
                    {"seed", o.seed},
                    {"instances", o.random},
                    {"agree", agree},
                    {"with_higher_tor", nontrivial}});
      } else {
        std::cout << "instances\t" << o.random << "\n";
        std::cout << "agree\t" << agree << "\n";
        std::cout << "with higher Tor\t" << nontrivial << "\n";
        if (first_bad) {
          std::cout << "first disagreement\ttrial " << *first_bad << "\n";
        }
      }
      return agree == o.random ? 0 : 2;
    }
    if (!o.category || !o.functor || !o.module) {
      throw ValidationError("give --category, --functor and --module, or --random");
    }
    auto const c = io::parse_category(io::load_json(*o.category));
    auto const f = io::parse_set_functor(io::load_json(*o.functor), c);
    auto const x = io::parse_module_functor(io::load_json(*o.module), c);
    if (x.variance != Variance::contravariant) {
      throw ValidationError("the module must be contravariant");
    }
    auto const r = shapiro_check(c, f, x, o.max_degree);
    if (o.format == Format::json) {
      print_json({{"command", "shapiro-check"},
                  {"over_elements", dims_json(r.over_elements)},
                  {"over_base", dims_json(r.over_base)},
                  {"agree", r.agree}});
    } else {
      std::cout << "degree\tover_elements\tover_base\n";
      for (std::size_t q = 0; q < r.over_base.size(); ++q) {
        std::cout << q << "\t" << r.over_elements[q] << "\t" << r.over_base[q] << "\n";
      }
      std::cout << (r.agree ? "agree" : "DISAGREE") << "\n";
    }
    return r.agree ? 0 : 2;
  }

  // ---- cat-check -----------------------------------------------------------

  struct CatCheckOptions {
    CrossedSuiteOptions suites;
    Format              format = Format::tsv;
  };

  int run_cat_check(CatCheckOptions const& o) {
    if (o.suites.exhaustive_bound > 4) {
      throw ValidationError("--exhaustive-bound must be at most 4");
    }
    auto const  results = run_crossed_suites(o.suites);
    std::size_t passed  = 0;
    Json        rows    = Json::array();
    if (o.format == Format::tsv) {
      std::cout << "suite\tchecked\tfailures\n";
    }
    for (auto const& r : results) {
      passed += r.passed();
      if (o.format == Format::tsv) {
        std::cout << r.name << "\t" << r.checked << "\t" << r.failures << "\n";
        if (!r.first_failure.empty()) {
          std::cout << "# first failure: " << r.first_failure << "\n";
        }
      }
      rows.push_back({{"suite", r.name},
                      {"checked", r.checked},
                      {"failures", r.failures},
                      {"first_failure", r.first_failure}});
    }
    bool const ok = passed == results.size();
    if (o.format == Format::json) {
      print_json({{"command", "cat-check"}, {"seed", o.suites.seed}, {"suites", rows}, {"passed", ok}});
    } else if (ok) {
      std::cout << "all " << results.size() << " suites passed\n";
    } else {
      std::cout << (results.size() - passed) << " of " << results.size() << " suites failed\n";
    }
    return ok ? 0 : 2;
  }

  // ---- validate ------------------------------------------------------------

  struct ValidateOptions {
    std::string                path;
    std::optional<std::string> category;
  };

  int run_validate(ValidateOptions const& o) {
    auto const j    = io::load_json(o.path);
    auto const kind = io::detect_kind(j);
    auto report     = [&](std::optional<std::string> const& err, std::string const& ok) {
      if (err) {
        std::cout << "invalid " << io::kind_name(kind) << ": " << *err << "\n";
        return 1;
      }
      std::cout << "ok: " << ok << "\n";
      return 0;
    };
    auto guarded = [&](auto&& body) -> std::optional<std::string> {
      try {
        body();
      } catch (ValidationError const& e) {
        return e.what();
      }
      return std::nullopt;
    };
    switch (kind) {
      case io::InputKind::group: {
        std::size_t order = 0;
        auto        err   = guarded([&] { order = io::parse_group(j).order(); });
        return report(err, "group of order " + std::to_string(order));
      }
      case io::InputKind::presentation: {
        GroupPresentation p;
        auto              err = guarded([&] { p = io::parse_presentation(j); });
        return report(err, "presentation of rank " + std::to_string(p.rank) + " with " +
                               std::to_string(p.relators.size()) + " relators");
      }
      case io::InputKind::model: {
        std::optional<std::string> err;
        std::size_t                N = 0;
        auto                       perr = guarded([&] {
          auto const m = io::parse_model(j);
          N            = m.N;
          err          = check_simplicial_identities(m);
        });
        return report(perr ? perr : err, "simplicial group model truncated at N = " + std::to_string(N));
      }
      case io::InputKind::category: {
        std::optional<std::string> err;
        std::size_t                objects = 0, morphisms = 0;
        auto                       perr = guarded([&] {
          auto const c = io::parse_category(j);
          objects      = c.num_objects();
          morphisms    = c.num_morphisms();
          err          = c.check_axioms();
        });
        return report(perr ? perr : err, "category with " + std::to_string(objects) + " objects and " +
                                             std::to_string(morphisms) + " morphisms");
      }
      case io::InputKind::set_functor:
      case io::InputKind::module_functor: {
        if (!o.category) {
          throw ValidationError("validating a functor needs --category");
        }
        auto const c   = io::parse_category(io::load_json(*o.category));
        auto       err = guarded([&] {
          if (kind == io::InputKind::set_functor) {
            io::parse_set_functor(j, c);
          } else {
            io::parse_module_functor(j, c);
          }
        });
        return report(err, io::kind_name(kind) + " on " + std::to_string(c.num_objects()) + " objects");
      }
      case io::InputKind::unknown:
        break;
    }
    std::cout << "invalid input: unrecognized schema\n";
    return 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repchar: cyclic homology, representation homology and character maps over Q"};
  app.require_subcommand(1);

  HcOptions hc;
  auto*     hc_cmd = app.add_subcommand("hc", "Cyclic homology of Q[G] for a finite group G");
  hc_cmd->add_option("--group", hc.path, "Multiplication table (JSON)")->required()->check(CLI::ExistingFile);
  hc_cmd->add_option("--max-degree", hc.max_degree, "Top degree")->capture_default_str();
  hc_cmd->add_flag("--reduced", hc.reduced, "Reduced cyclic homology");
  hc_cmd->add_option("--format", hc.format, "tsv or json")->transform(CLI::CheckedTransformer(format_names));

  HrOptions hr;
  auto*     hr_cmd = app.add_subcommand("hr", "Representation homology in G_m from a simplicial group model");
  hr_cmd->add_option("--model", hr.path, "Simplicial group model (JSON)")->required()->check(CLI::ExistingFile);
  hr_cmd->add_option("--max-degree", hr.max_degree, "Top degree; needs max-degree + 2 <= N")->capture_default_str();
  hr_cmd->add_option("--window", hr.window, "Also run the monomial window route with this box size");
  hr_cmd->add_option("--format", hr.format, "tsv or json")->transform(CLI::CheckedTransformer(format_names));

  Hr0Options hr0;
  auto*      hr0_cmd = app.add_subcommand("hr0", "Degree-0 representation homology of a presentation");
  hr0_cmd->add_option("--presentation", hr0.path, "Presentation (JSON)")->required()->check(CLI::ExistingFile);
  hr0_cmd->add_option("--gln", hr0.gln, "Also print the GL_n coordinate ring presentation");
  hr0_cmd->add_option("--format", hr0.format, "tsv or json")->transform(CLI::CheckedTransformer(format_names));

  CharOptions ch;
  auto*       char_cmd = app.add_subcommand("char", "Degree-0 character values");
  char_cmd->add_option("--group", ch.path, "Multiplication table or presentation (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  char_cmd->add_option("--element", ch.element, "Element label (table) or word (presentation)");
  char_cmd->add_option("--gln", ch.gln, "Trace polynomial for n-dimensional representations");
  char_cmd->add_option("--format", ch.format, "tsv or json")->transform(CLI::CheckedTransformer(format_names));

  TriangleOptions tri;
  auto* tri_cmd = app.add_subcommand("triangle-check", "Degree-0 factorization HC_0 -> HS_0 -> HR_0");
  tri_cmd->add_option("--group", tri.path, "Multiplication table (JSON)")->required()->check(CLI::ExistingFile);
  tri_cmd->add_option("--format", tri.format, "tsv or json")->transform(CLI::CheckedTransformer(format_names));

  ShapiroOptions sh;
  auto* sh_cmd = app.add_subcommand("shapiro-check", "Tor over a category of elements against Tor over the base");
  sh_cmd->add_option("--category", sh.category, "Category (JSON)")->check(CLI::ExistingFile);
  sh_cmd->add_option("--functor", sh.functor, "Set-valued functor (JSON)")->check(CLI::ExistingFile);
  sh_cmd->add_option("--module", sh.module, "Contravariant module functor (JSON)")->check(CLI::ExistingFile);
  sh_cmd->add_option("--max-degree", sh.max_degree, "Top degree")->capture_default_str();
  sh_cmd->add_option("--random", sh.random, "Number of seeded random poset instances instead of files");
  sh_cmd->add_option("--seed", sh.seed, "Seed for --random")->capture_default_str();
  sh_cmd->add_option("--format", sh.format, "tsv or json")->transform(CLI::CheckedTransformer(format_names));

  CatCheckOptions cc;
  auto*           cc_cmd = app.add_subcommand("cat-check", "Structural suites of the symmetric and cyclic categories");
  cc_cmd->add_option("--exhaustive-bound", cc.suites.exhaustive_bound, "Arity bound for exhaustive checks (<= 4)")
      ->capture_default_str();
  cc_cmd->add_option("--random-bound", cc.suites.random_bound, "Arity bound for sampled checks")
      ->capture_default_str();
  cc_cmd->add_option("--samples", cc.suites.random_samples, "Samples per sampled suite")->capture_default_str();
  cc_cmd->add_option("--seed", cc.suites.seed, "Seed")->capture_default_str();
  cc_cmd->add_option("--format", cc.format, "tsv or json")->transform(CLI::CheckedTransformer(format_names));

  ValidateOptions va;
  auto*           va_cmd = app.add_subcommand("validate", "Check an input file against its invariants");
  va_cmd->add_option("file", va.path, "Input (JSON)")->required()->check(CLI::ExistingFile);
  va_cmd->add_option("--category", va.category, "Category for functor inputs")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*hc_cmd) {
      return run_hc(hc);
    }
    if (*hr_cmd) {
      return run_hr(hr);
    }
    if (*hr0_cmd) {
      return run_hr0(hr0);
    }
    if (*char_cmd) {
      return run_char(ch);
    }
    if (*tri_cmd) {
      return run_triangle(tri);
    }
    if (*sh_cmd) {
      return run_shapiro(sh);
    }
    if (*cc_cmd) {
      return run_cat_check(cc);
    }
    if (*va_cmd) {
      return run_validate(va);
    }
  } catch (ValidationError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (InvariantViolation const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
