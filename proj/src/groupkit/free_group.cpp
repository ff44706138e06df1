//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/groupkit/free_group.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "repchar/errors.hpp"

namespace repchar {

  FreeWord reduce(std::vector<std::int32_t> const& raw) {
    return FreeWord(raw);
  }

  FreeWord::FreeWord(std::vector<std::int32_t> letters) {
    _letters.reserve(letters.size());
    for (auto a : letters) {
      if (a == 0) {
        throw ValidationError("free word: letter 0 is not a generator");
      }
      if (!_letters.empty() && _letters.back() == -a) {
        _letters.pop_back();
      } else {
        _letters.push_back(a);
      }
    }
  }

  FreeWord FreeWord::generator(std::size_t i, int exponent) {
    auto const a = static_cast<std::int32_t>(i + 1);
    return FreeWord(std::vector<std::int32_t>(static_cast<std::size_t>(std::abs(exponent)),
                                              exponent < 0 ? -a : a));
  }

  FreeWord FreeWord::parse(std::string_view text) {
    std::vector<std::int32_t> out;
    std::size_t               pos = 0;
    auto                      fail = [&](std::string const& what) {
      throw ValidationError("cannot parse word '" + std::string(text) + "': " + what);
    };
    auto read_int = [&](long& value) {
      std::size_t start = pos;
      if (start >= text.size()) {
        fail("expected an integer at the end");
      }
      if (text[pos] == '-' || text[pos] == '+') {
        ++pos;
      }
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      auto [p, ec] = std::from_chars(text.data() + start + (text[start] == '+' ? 1 : 0),
                                     text.data() + pos,
                                     value);
      if (ec != std::errc() || p != text.data() + pos) {
        fail("expected an integer at offset " + std::to_string(start));
      }
    };
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
        ++pos;
        continue;
      }
      if (c == '1' && (pos + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos + 1])))) {
        ++pos;
        continue;
      }
      if (c != 'x') {
        fail("unexpected character '" + std::string(1, c) + "'");
      }
      ++pos;
      long index = 0;
      read_int(index);
      if (index < 0) {
        fail("negative generator index");
      }
      long exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        read_int(exponent);
      }
      auto a = static_cast<std::int32_t>(index + 1);
      for (long k = 0; k < std::labs(exponent); ++k) {
        out.push_back(exponent < 0 ? -a : a);
      }
    }
    return FreeWord(std::move(out));
  }

  std::size_t FreeWord::max_generator() const noexcept {
    std::size_t m = 0;
    for (auto a : _letters) {
      m = std::max(m, static_cast<std::size_t>(std::abs(a)));
    }
    return m;
  }

  FreeWord FreeWord::inverse() const {
    FreeWord w;
    w._letters.assign(_letters.rbegin(), _letters.rend());
    for (auto& a : w._letters) {
      a = -a;
    }
    return w;
  }

  FreeWord FreeWord::operator*(FreeWord const& rhs) const {
    FreeWord    w   = *this;
    std::size_t i   = 0;
    while (i < rhs._letters.size() && !w._letters.empty() && w._letters.back() == -rhs._letters[i]) {
      w._letters.pop_back();
      ++i;
    }
    w._letters.insert(w._letters.end(), rhs._letters.begin() + static_cast<long>(i), rhs._letters.end());
    return w;
  }

  FreeWord FreeWord::pow(long k) const {
    FreeWord base = k < 0 ? inverse() : *this;
    FreeWord out;
    for (long i = 0; i < std::labs(k); ++i) {
      out = out * base;
    }
    return out;
  }

  std::vector<BigInt> FreeWord::exponent_sums(std::size_t rank) const {
    std::vector<BigInt> v(rank);
    for (auto a : _letters) {
      auto i = static_cast<std::size_t>(std::abs(a)) - 1;
      if (i >= rank) {
        throw ValidationError("word " + to_string() + " uses a generator beyond rank "
                              + std::to_string(rank));
      }
      v[i] += a > 0 ? 1 : -1;
    }
    return v;
  }

  std::string FreeWord::to_string() const {
    if (_letters.empty()) {
      return "1";
    }
    std::ostringstream os;
    std::size_t        i = 0;
    bool               first = true;
    while (i < _letters.size()) {
      std::size_t j = i;
      while (j < _letters.size() && _letters[j] == _letters[i]) {
        ++j;
      }
      long run = static_cast<long>(j - i) * (_letters[i] > 0 ? 1 : -1);
      if (!first) {
        os << ' ';
      }
      first = false;
      os << 'x' << std::abs(_letters[i]) - 1;
      if (run != 1) {
        os << '^' << run;
      }
      i = j;
    }
    return os.str();
  }

  GroupHom::GroupHom(std::size_t source_rank, std::size_t target_rank, std::vector<FreeWord> images)
      : _source_rank(source_rank), _target_rank(target_rank), _images(std::move(images)) {
    if (_images.size() != _source_rank) {
      throw ValidationError("homomorphism needs " + std::to_string(_source_rank)
                            + " images, got " + std::to_string(_images.size()));
    }
    for (auto const& w : _images) {
      if (w.max_generator() > _target_rank) {
        throw ValidationError("image " + w.to_string() + " exceeds target rank "
                              + std::to_string(_target_rank));
      }
    }
  }

  GroupHom GroupHom::identity(std::size_t rank) {
    std::vector<FreeWord> images;
    for (std::size_t i = 0; i < rank; ++i) {
      images.push_back(FreeWord::generator(i));
    }
    return GroupHom(rank, rank, std::move(images));
  }

  FreeWord GroupHom::apply(FreeWord const& w) const {
    std::vector<std::int32_t> raw;
    for (auto a : w.letters()) {
      auto i = static_cast<std::size_t>(std::abs(a)) - 1;
      if (i >= _source_rank) {
        throw ValidationError("word " + w.to_string() + " is not in the source of rank "
                              + std::to_string(_source_rank));
      }
      auto const& img = _images[i];
      if (a > 0) {
        raw.insert(raw.end(), img.letters().begin(), img.letters().end());
      } else {
        for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
          raw.push_back(-*it);
        }
      }
    }
    return FreeWord(std::move(raw));
  }

  std::string GroupHom::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < _images.size(); ++i) {
      os << (i ? ", " : "") << _images[i].to_string();
    }
    os << ')';
    return os.str();
  }

  GroupHom compose_hom(GroupHom const& g, GroupHom const& f) {
    if (f.target_rank() != g.source_rank()) {
      throw ValidationError("compose_hom: target rank " + std::to_string(f.target_rank())
                            + " does not match source rank " + std::to_string(g.source_rank()));
    }
    std::vector<FreeWord> images;
    images.reserve(f.source_rank());
    for (auto const& w : f.images()) {
      images.push_back(g.apply(w));
    }
    return GroupHom(f.source_rank(), g.target_rank(), std::move(images));
  }

  IntegerMatrix abelianize_hom(GroupHom const& f) {
    IntegerMatrix a(f.target_rank(), f.source_rank());
    for (std::size_t j = 0; j < f.source_rank(); ++j) {
      auto v = f.image(j).exponent_sums(f.target_rank());
      for (std::size_t i = 0; i < v.size(); ++i) {
        a(i, j) = v[i];
      }
    }
    return a;
  }

}  // namespace repchar
