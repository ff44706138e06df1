//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/groupkit/cyclic_bar.hpp"

#include "repchar/crossedcat/cyclic.hpp"
#include "repchar/errors.hpp"

namespace repchar {

  void CyclicGenerator::check() const {
    switch (kind) {
      case Kind::face:
        if (n == 0 || i > n) {
          throw ValidationError("face d^" + std::to_string(i) + "_" + std::to_string(n)
                                + " out of range");
        }
        break;
      case Kind::degeneracy:
        if (i > n) {
          throw ValidationError("degeneracy s^" + std::to_string(i) + "_" + std::to_string(n)
                                + " out of range");
        }
        break;
      case Kind::cyclic:
        break;
    }
  }

  std::string CyclicGenerator::to_string() const {
    switch (kind) {
      case Kind::face:
        return "d" + std::to_string(n) + "_" + std::to_string(i);
      case Kind::degeneracy:
        return "s" + std::to_string(n) + "_" + std::to_string(i);
      case Kind::cyclic:
        break;
    }
    return "t" + std::to_string(n);
  }

  std::size_t word_source(CyclicWord const& w) {
    if (w.empty()) {
      throw ValidationError("empty cyclic word");
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
      w[k].check();
      if (k + 1 < w.size() && w[k + 1].target() != w[k].source()) {
        throw ValidationError("cyclic word not composable at " + w[k + 1].to_string() + " then "
                              + w[k].to_string());
      }
    }
    return w.back().source();
  }

  std::size_t word_target(CyclicWord const& w) {
    word_source(w);
    return w.front().target();
  }

  std::size_t CyclicBar::level_size(std::size_t q) const {
    std::size_t s = 1;
    for (std::size_t k = 0; k <= q; ++k) {
      s *= _group->order();
    }
    return s;
  }

  std::size_t CyclicBar::encode(Tuple const& t) const {
    std::size_t index = 0;
    for (auto x : t) {
      index = index * _group->order() + x;
    }
    return index;
  }

  CyclicBar::Tuple CyclicBar::decode(std::size_t index, std::size_t q) const {
    Tuple t(q + 1);
    for (std::size_t k = q + 1; k-- > 0;) {
      t[k] = index % _group->order();
      index /= _group->order();
    }
    return t;
  }

  CyclicBar::Tuple CyclicBar::face(Tuple const& t, std::size_t i) const {
    std::size_t const q = t.size() - 1;
    if (q == 0 || i > q) {
      throw ValidationError("face index out of range");
    }
    Tuple out;
    out.reserve(q);
    if (i == q) {
      out.push_back(_group->mul(t[q], t[0]));
      out.insert(out.end(), t.begin() + 1, t.end() - 1);
      return out;
    }
    out.insert(out.end(), t.begin(), t.begin() + static_cast<long>(i));
    out.push_back(_group->mul(t[i], t[i + 1]));
    out.insert(out.end(), t.begin() + static_cast<long>(i) + 2, t.end());
    return out;
  }

  CyclicBar::Tuple CyclicBar::degeneracy(Tuple const& t, std::size_t j) const {
    if (j >= t.size()) {
      throw ValidationError("degeneracy index out of range");
    }
    Tuple out(t);
    out.insert(out.begin() + static_cast<long>(j) + 1, _group->identity());
    return out;
  }

  CyclicBar::Tuple CyclicBar::cyclic(Tuple const& t) const {
    Tuple out;
    out.reserve(t.size());
    out.push_back(t.back());
    out.insert(out.end(), t.begin(), t.end() - 1);
    return out;
  }

  CyclicBar::Tuple CyclicBar::act(CyclicGenerator const& gen, Tuple const& t) const {
    gen.check();
    if (t.size() != gen.target() + 1) {
      throw ValidationError("tuple of length " + std::to_string(t.size()) + " is not in level "
                            + std::to_string(gen.target()));
    }
    switch (gen.kind) {
      case CyclicGenerator::Kind::face:
        return face(t, gen.i);
      case CyclicGenerator::Kind::degeneracy:
        return degeneracy(t, gen.i);
      case CyclicGenerator::Kind::cyclic:
        break;
    }
    return cyclic(t);
  }

  CyclicBar::Tuple CyclicBar::act(CyclicWord const& w, Tuple const& t) const {
    word_source(w);
    Tuple out(t);
    for (auto const& gen : w) {
      out = act(gen, out);
    }
    return out;
  }

  FiniteGroup::element CyclicBar::product(Tuple const& t) const {
    FiniteGroup::element x = _group->identity();
    for (auto g : t) {
      x = _group->mul(x, g);
    }
    return x;
  }

  CyclicBar::Tuple pullback_hom(FiniteGroup const& g, GroupHom const& f, CyclicBar::Tuple const& t) {
    if (t.size() != f.target_rank()) {
      throw ValidationError("tuple of length " + std::to_string(t.size())
                            + " does not match target rank " + std::to_string(f.target_rank()));
    }
    CyclicBar::Tuple out;
    out.reserve(f.source_rank());
    for (auto const& w : f.images()) {
      out.push_back(g.evaluate(w, t));
    }
    return out;
  }

  CyclicBar::Tuple pullback_via_psi_cyc(FiniteGroup const& g, CyclicWord const& w, CyclicBar::Tuple const& t) {
    return pullback_hom(g, psi_cyc(w), t);
  }

}  // namespace repchar
