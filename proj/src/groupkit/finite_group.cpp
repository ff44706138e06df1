//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/groupkit/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

#include "repchar/errors.hpp"

namespace repchar {

  IntegerMatrix GroupPresentation::relator_matrix() const {
    IntegerMatrix m(rank, relators.size());
    for (std::size_t j = 0; j < relators.size(); ++j) {
      auto v = relators[j].exponent_sums(rank);
      for (std::size_t i = 0; i < rank; ++i) {
        m(i, j) = v[i];
      }
    }
    return m;
  }

  AbelianGroup GroupPresentation::abelianization() const {
    return Cokernel(relator_matrix()).group();
  }

  std::optional<std::string> FiniteGroup::check_axioms(std::vector<std::vector<element>> const& t,
                                                       element identity) {
    std::size_t const n = t.size();
    if (n == 0) {
      return "empty multiplication table";
    }
    if (identity >= n) {
      return "identity index " + std::to_string(identity) + " out of range";
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (t[a].size() != n) {
        return "row " + std::to_string(a) + " has " + std::to_string(t[a].size())
               + " entries, expected " + std::to_string(n);
      }
      for (auto x : t[a]) {
        if (x >= n) {
          return "row " + std::to_string(a) + " contains out-of-range element " + std::to_string(x);
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (t[identity][a] != a || t[a][identity] != a) {
        return "identity law fails for element " + std::to_string(a);
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      bool has_inverse = false;
      for (std::size_t b = 0; b < n && !has_inverse; ++b) {
        has_inverse = t[a][b] == identity && t[b][a] == identity;
      }
      if (!has_inverse) {
        return "element " + std::to_string(a) + " has no inverse";
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (t[t[a][b]][c] != t[a][t[b][c]]) {
            return "associativity fails for (a, b, c) = (" + std::to_string(a) + ", "
                   + std::to_string(b) + ", " + std::to_string(c) + ")";
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteGroup::FiniteGroup(std::vector<std::string>          labels,
                           std::vector<std::vector<element>> table,
                           element                           identity)
      : _labels(std::move(labels)), _table(std::move(table)), _identity(identity) {
    if (auto err = check_axioms(_table, _identity)) {
      throw ValidationError("not a group: " + *err);
    }
    if (_labels.size() != _table.size()) {
      throw ValidationError("group has " + std::to_string(_table.size()) + " elements but "
                            + std::to_string(_labels.size()) + " labels");
    }
    _inverse.resize(order());
    for (element a = 0; a < order(); ++a) {
      for (element b = 0; b < order(); ++b) {
        if (_table[a][b] == _identity) {
          _inverse[a] = b;
          break;
        }
      }
    }
  }

  namespace {

    // Hasse-Lambe-Todd coset enumeration over the trivial subgroup.
    class CosetTable {
     public:
      CosetTable(GroupPresentation const& p, std::size_t limit)
          : _ncols(2 * p.rank), _limit(limit) {
        for (auto const& r : p.relators) {
          std::vector<std::size_t> cols;
          for (auto a : r.letters()) {
            cols.push_back(column(a));
          }
          if (!cols.empty()) {
            _relators.push_back(std::move(cols));
          }
        }
        new_coset();
      }

      void run() {
        for (std::size_t c = 0; c < _table.size(); ++c) {
          for (auto const& r : _relators) {
            if (!alive(c)) {
              break;
            }
            scan_and_fill(c, r);
          }
          for (std::size_t x = 0; x < _ncols && alive(c); ++x) {
            if (_table[c][x] < 0) {
              define(c, x);
            }
          }
        }
      }

      // Live cosets renumbered in breadth-first order from coset 0, together
      // with the word reaching each one and the action table.
      void standardize(std::vector<std::vector<std::size_t>>& action,
                       std::vector<FreeWord>&                 words) const {
        std::vector<long>        number(_table.size(), -1);
        std::vector<std::size_t> order{0};
        words.assign(1, FreeWord());
        number[0] = 0;
        for (std::size_t k = 0; k < order.size(); ++k) {
          std::size_t c = order[k];
          for (std::size_t x = 0; x < _ncols; ++x) {
            auto d = static_cast<std::size_t>(_table[c][x]);
            if (number[d] < 0) {
              number[d] = static_cast<long>(order.size());
              order.push_back(d);
              words.push_back(words[k] * letter_word(x));
            }
          }
        }
        action.assign(order.size(), std::vector<std::size_t>(_ncols));
        for (std::size_t k = 0; k < order.size(); ++k) {
          for (std::size_t x = 0; x < _ncols; ++x) {
            action[k][x] = static_cast<std::size_t>(number[static_cast<std::size_t>(_table[order[k]][x])]);
          }
        }
      }

     private:
      static std::size_t column(std::int32_t a) {
        auto i = static_cast<std::size_t>(std::abs(a)) - 1;
        return 2 * i + (a < 0 ? 1 : 0);
      }
      static std::size_t inverse_column(std::size_t x) {
        return x ^ 1u;
      }
      static FreeWord letter_word(std::size_t x) {
        return FreeWord::generator(x / 2, x % 2 == 0 ? 1 : -1);
      }

      bool alive(std::size_t c) const {
        return _parent[c] == c;
      }

      std::size_t new_coset() {
        if (_table.size() >= _limit) {
          throw ValidationError("coset enumeration exceeded " + std::to_string(_limit)
                                + " cosets; the presentation does not define a small finite group");
        }
        _table.emplace_back(_ncols, -1);
        _parent.push_back(_parent.size());
        return _table.size() - 1;
      }

      void define(std::size_t c, std::size_t x) {
        std::size_t d = new_coset();
        _table[c][x]                 = static_cast<long>(d);
        _table[d][inverse_column(x)] = static_cast<long>(c);
      }

      void scan_and_fill(std::size_t c, std::vector<std::size_t> const& w) {
        std::size_t f = c, b = c;
        long        i = 0, j = static_cast<long>(w.size()) - 1;
        while (true) {
          while (i <= j && _table[f][w[i]] >= 0) {
            f = static_cast<std::size_t>(_table[f][w[i]]);
            ++i;
          }
          if (i > j) {
            if (f != c) {
              coincidence(f, c);
            }
            return;
          }
          while (j >= i && _table[b][inverse_column(w[j])] >= 0) {
            b = static_cast<std::size_t>(_table[b][inverse_column(w[j])]);
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (i == j) {
            _table[f][w[i]]                 = static_cast<long>(b);
            _table[b][inverse_column(w[i])] = static_cast<long>(f);
            return;
          }
          define(f, w[i]);
        }
      }

      std::size_t rep(std::size_t k) {
        std::size_t r = k;
        while (_parent[r] != r) {
          r = _parent[r];
        }
        while (_parent[k] != r) {
          std::size_t next = _parent[k];
          _parent[k]       = r;
          k                = next;
        }
        return r;
      }

      void merge(std::size_t k, std::size_t l, std::deque<std::size_t>& queue) {
        std::size_t k1 = rep(k), l1 = rep(l);
        if (k1 == l1) {
          return;
        }
        std::size_t lo = std::min(k1, l1), hi = std::max(k1, l1);
        _parent[hi]    = lo;
        queue.push_back(hi);
      }

      void coincidence(std::size_t a, std::size_t b) {
        std::deque<std::size_t> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
          std::size_t e = queue.front();
          queue.pop_front();
          for (std::size_t x = 0; x < _ncols; ++x) {
            if (_table[e][x] < 0) {
              continue;
            }
            auto f = static_cast<std::size_t>(_table[e][x]);
            _table[f][inverse_column(x)] = -1;
            std::size_t e1 = rep(e), f1 = rep(f);
            if (_table[e1][x] >= 0) {
              merge(f1, static_cast<std::size_t>(_table[e1][x]), queue);
            } else if (_table[f1][inverse_column(x)] >= 0) {
              merge(e1, static_cast<std::size_t>(_table[f1][inverse_column(x)]), queue);
            } else {
              _table[e1][x]                 = static_cast<long>(f1);
              _table[f1][inverse_column(x)] = static_cast<long>(e1);
            }
          }
        }
      }

      std::size_t                           _ncols;
      std::size_t                           _limit;
      std::vector<std::vector<std::size_t>> _relators;
      std::vector<std::vector<long>>        _table;
      std::vector<std::size_t>              _parent;
    };

  }  // namespace

  FiniteGroup FiniteGroup::from_presentation(GroupPresentation const& p, std::size_t max_cosets) {
    for (auto const& r : p.relators) {
      if (r.max_generator() > p.rank) {
        throw ValidationError("relator " + r.to_string() + " uses a generator beyond rank "
                              + std::to_string(p.rank));
      }
    }
    if (p.rank == 0) {
      return trivial();
    }
    CosetTable ct(p, max_cosets);
    ct.run();
    std::vector<std::vector<std::size_t>> action;
    std::vector<FreeWord>                 words;
    ct.standardize(action, words);
    std::size_t const n = action.size();

    // a * b: follow the word of b from the coset of a.
    std::vector<std::vector<element>> table(n, std::vector<element>(n));
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        std::size_t c = a;
        for (auto letter : words[b].letters()) {
          auto i = static_cast<std::size_t>(std::abs(letter)) - 1;
          c      = action[c][2 * i + (letter < 0 ? 1 : 0)];
        }
        table[a][b] = c;
      }
    }
    std::vector<std::string> labels;
    for (auto const& w : words) {
      labels.push_back(w.to_string());
    }
    FiniteGroup g(std::move(labels), std::move(table), 0);
    for (std::size_t i = 0; i < p.rank; ++i) {
      g._generators.push_back(action[0][2 * i]);
    }
    return g;
  }

  FiniteGroup FiniteGroup::trivial() {
    return FiniteGroup({"e"}, {{0}}, 0);
  }

  FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) {
      throw ValidationError("cyclic group of order 0");
    }
    std::vector<std::string>          labels;
    std::vector<std::vector<element>> table(n, std::vector<element>(n));
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back(a == 0 ? "e" : (a == 1 ? "a" : "a^" + std::to_string(a)));
      for (std::size_t b = 0; b < n; ++b) {
        table[a][b] = (a + b) % n;
      }
    }
    FiniteGroup g(std::move(labels), std::move(table), 0);
    g._generators = {n > 1 ? 1u : 0u};
    return g;
  }

  FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::size_t const                 m = perms.size();
    std::vector<std::vector<element>> table(m, std::vector<element>(m));
    std::vector<std::string>          labels;
    for (std::size_t a = 0; a < m; ++a) {
      std::string s;
      for (auto v : perms[a]) {
        s += std::to_string(v);
      }
      labels.push_back(s);
      for (std::size_t b = 0; b < m; ++b) {
        // (a * b)(i) = a(b(i))
        std::vector<std::size_t> c(n);
        for (std::size_t i = 0; i < n; ++i) {
          c[i] = perms[a][perms[b][i]];
        }
        table[a][b] = static_cast<element>(
            std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
      }
    }
    return FiniteGroup(std::move(labels), std::move(table), 0);
  }

  FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    // r^k -> k, s r^k -> n + k; s r s = r^-1.
    std::size_t const                 m = 2 * n;
    std::vector<std::vector<element>> table(m, std::vector<element>(m));
    std::vector<std::string>          labels;
    for (std::size_t a = 0; a < m; ++a) {
      std::size_t ka = a % n;
      labels.push_back((a < n ? "" : "s") + (ka == 0 ? std::string(a < n ? "e" : "")
                                                      : "r^" + std::to_string(ka)));
      for (std::size_t b = 0; b < m; ++b) {
        std::size_t kb   = b % n;
        bool        sa   = a >= n, sb = b >= n;
        // r^ka s^sb = s^sb r^{+-ka}
        std::size_t k    = sb ? (n - ka + kb) % n : (ka + kb) % n;
        table[a][b]      = ((sa != sb) ? n : 0) + k;
      }
    }
    return FiniteGroup(std::move(labels), std::move(table), 0);
  }

  FiniteGroup FiniteGroup::quaternion() {
    // elements (sign, unit) with unit in {1, i, j, k}; index = 2 * unit + (sign < 0)
    static int const       unit_table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static int const       sign_table[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    static char const*     names[4]         = {"1", "i", "j", "k"};
    std::vector<std::vector<element>> table(8, std::vector<element>(8));
    std::vector<std::string>          labels;
    for (std::size_t a = 0; a < 8; ++a) {
      labels.push_back(std::string(a % 2 ? "-" : "") + names[a / 2]);
      for (std::size_t b = 0; b < 8; ++b) {
        std::size_t ua = a / 2, ub = b / 2;
        int         s  = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign_table[ua][ub];
        table[a][b]    = 2 * static_cast<std::size_t>(unit_table[ua][ub]) + (s < 0 ? 1 : 0);
      }
    }
    return FiniteGroup(std::move(labels), std::move(table), 0);
  }

  FiniteGroup::element FiniteGroup::evaluate(FreeWord const& w, std::vector<element> const& images) const {
    element x = _identity;
    for (auto a : w.letters()) {
      auto i = static_cast<std::size_t>(std::abs(a)) - 1;
      if (i >= images.size()) {
        throw ValidationError("word " + w.to_string() + " uses generator x"
                              + std::to_string(i) + " which has no image");
      }
      x = mul(x, a > 0 ? images[i] : inv(images[i]));
    }
    return x;
  }

  bool FiniteGroup::is_abelian() const {
    for (element a = 0; a < order(); ++a) {
      for (element b = 0; b < a; ++b) {
        if (mul(a, b) != mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::size_t> conjugacy_class_index(FiniteGroup const& g) {
    std::size_t const        none = g.order();
    std::vector<std::size_t> index(g.order(), none);
    std::size_t              next = 0;
    for (FiniteGroup::element a = 0; a < g.order(); ++a) {
      if (index[a] != none) {
        continue;
      }
      for (FiniteGroup::element h = 0; h < g.order(); ++h) {
        index[g.mul(g.mul(h, a), g.inv(h))] = next;
      }
      ++next;
    }
    return index;
  }

  std::vector<std::vector<FiniteGroup::element>> conjugacy_classes(FiniteGroup const& g) {
    auto                                           index = conjugacy_class_index(g);
    std::size_t                                    count = 0;
    for (auto i : index) {
      count = std::max(count, i + 1);
    }
    std::vector<std::vector<FiniteGroup::element>> classes(count);
    for (FiniteGroup::element a = 0; a < g.order(); ++a) {
      classes[index[a]].push_back(a);
    }
    return classes;
  }

  Abelianization abelianization(FiniteGroup const& g) {
    std::size_t const n = g.order();
    std::vector<bool> in_sub(n, false);
    std::vector<FiniteGroup::element> sub{g.identity()};
    in_sub[g.identity()] = true;
    std::vector<FiniteGroup::element> commutators;
    for (FiniteGroup::element a = 0; a < n; ++a) {
      for (FiniteGroup::element b = 0; b < n; ++b) {
        commutators.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
      }
    }
    for (std::size_t k = 0; k < sub.size(); ++k) {
      for (auto c : commutators) {
        auto x = g.mul(sub[k], c);
        if (!in_sub[x]) {
          in_sub[x] = true;
          sub.push_back(x);
        }
      }
    }
    Abelianization out;
    out.class_of.assign(n, n);
    for (FiniteGroup::element a = 0; a < n; ++a) {
      if (out.class_of[a] != n) {
        continue;
      }
      for (auto s : sub) {
        out.class_of[g.mul(a, s)] = out.order;
      }
      ++out.order;
    }
    return out;
  }

}  // namespace repchar
