#include "relmub/rel.hpp"

#include <sstream>
#include <stdexcept>

namespace relmub {

namespace {

void check_size(int value, const char* what) {
  if (value < 0) {
    std::ostringstream msg;
    msg << "Rel: " << what << " must be non-negative, got " << value;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

Rel::Rel(int dom_size, int cod_size) : dom_(dom_size), cod_(cod_size) {
  check_size(dom_size, "dom_size");
  check_size(cod_size, "cod_size");
  cells_.assign(static_cast<std::size_t>(dom_) * cod_, 0);
}

Rel Rel::identity(int n) {
  Rel r(n, n);
  for (int i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Rel Rel::symmetry(int m, int n) {
  Rel r(m * n, n * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) r.set(a * n + b, b * m + a);
  return r;
}

Rel Rel::from_pairs(int dom_size, int cod_size,
                    const std::vector<std::pair<int, int>>& pairs) {
  Rel r(dom_size, cod_size);
  for (const auto& [x, y] : pairs) r.set(x, y);
  return r;
}

bool Rel::at(int x, int y) const {
  if (x < 0 || x >= dom_ || y < 0 || y >= cod_) {
    std::ostringstream msg;
    msg << "Rel::at: index (" << x << ", " << y << ") outside " << dom_ << " x "
        << cod_;
    throw std::out_of_range(msg.str());
  }
  return cells_[static_cast<std::size_t>(x) * cod_ + y] != 0;
}

void Rel::set(int x, int y, bool related) {
  if (x < 0 || x >= dom_ || y < 0 || y >= cod_) {
    std::ostringstream msg;
    msg << "Rel::set: index (" << x << ", " << y << ") outside " << dom_
        << " x " << cod_;
    throw std::out_of_range(msg.str());
  }
  cells_[static_cast<std::size_t>(x) * cod_ + y] = related ? 1 : 0;
}

std::vector<std::pair<int, int>> Rel::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < dom_; ++x)
    for (int y = 0; y < cod_; ++y)
      if (at(x, y)) out.emplace_back(x, y);
  return out;
}

std::size_t Rel::pair_count() const {
  std::size_t count = 0;
  for (auto c : cells_) count += c;
  return count;
}

Rel compose(const Rel& first, const Rel& then) {
  if (first.cod_size() != then.dom_size()) {
    std::ostringstream msg;
    msg << "compose: codomain size " << first.cod_size()
        << " of the first relation does not match domain size "
        << then.dom_size() << " of the second";
    throw std::invalid_argument(msg.str());
  }
  Rel out(first.dom_size(), then.cod_size());
  const int mid = first.cod_size();
  for (int x = 0; x < first.dom_size(); ++x) {
    for (int y = 0; y < mid; ++y) {
      if (!first.at(x, y)) continue;
      for (int z = 0; z < then.cod_size(); ++z)
        if (then.at(y, z)) out.set(x, z);
    }
  }
  return out;
}

Rel dagger(const Rel& r) {
  Rel out(r.cod_size(), r.dom_size());
  for (int x = 0; x < r.dom_size(); ++x)
    for (int y = 0; y < r.cod_size(); ++y)
      if (r.at(x, y)) out.set(y, x);
  return out;
}

Rel tensor(const Rel& a, const Rel& b) {
  Rel out(a.dom_size() * b.dom_size(), a.cod_size() * b.cod_size());
  for (int x = 0; x < a.dom_size(); ++x) {
    for (int y = 0; y < a.cod_size(); ++y) {
      if (!a.at(x, y)) continue;
      for (int xp = 0; xp < b.dom_size(); ++xp)
        for (int yp = 0; yp < b.cod_size(); ++yp)
          if (b.at(xp, yp))
            out.set(x * b.dom_size() + xp, y * b.cod_size() + yp);
    }
  }
  return out;
}

bool is_unitary(const Rel& r) {
  if (r.dom_size() != r.cod_size()) return false;
  const Rel d = dagger(r);
  return compose(r, d) == Rel::identity(r.dom_size()) &&
         compose(d, r) == Rel::identity(r.cod_size());
}

}  // namespace relmub
