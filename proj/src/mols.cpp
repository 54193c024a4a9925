#include "relmub/mols.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace relmub {

bool is_latin(const std::vector<std::vector<int>>& grid) {
  const int d = static_cast<int>(grid.size());
  if (d == 0) throw std::invalid_argument("is_latin: empty grid");
  for (int r = 0; r < d; ++r) {
    if (static_cast<int>(grid[r].size()) != d) {
      std::ostringstream msg;
      msg << "is_latin: row " << r << " has " << grid[r].size()
          << " entries, expected " << d;
      throw std::invalid_argument(msg.str());
    }
    for (int c = 0; c < d; ++c) {
      if (grid[r][c] < 0 || grid[r][c] >= d) {
        std::ostringstream msg;
        msg << "is_latin: symbol " << grid[r][c] << " at (" << r << ", " << c
            << ") outside {0.." << d - 1 << "}";
        throw std::invalid_argument(msg.str());
      }
    }
  }
  for (int r = 0; r < d; ++r) {
    std::vector<char> seen(d, 0);
    for (int c = 0; c < d; ++c)
      if (seen[grid[r][c]]++) return false;
  }
  for (int c = 0; c < d; ++c) {
    std::vector<char> seen(d, 0);
    for (int r = 0; r < d; ++r)
      if (seen[grid[r][c]]++) return false;
  }
  return true;
}

LatinSquare LatinSquare::from_grid(std::vector<std::vector<int>> grid) {
  if (!is_latin(grid))
    throw std::invalid_argument("LatinSquare: grid is not a Latin square");
  LatinSquare sq;
  sq.d = static_cast<int>(grid.size());
  sq.grid = std::move(grid);
  return sq;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.d != b.d) {
    std::ostringstream msg;
    msg << "are_orthogonal: orders differ (" << a.d << " vs " << b.d << ")";
    throw std::invalid_argument(msg.str());
  }
  std::vector<char> seen(static_cast<std::size_t>(a.d) * a.d, 0);
  for (int r = 0; r < a.d; ++r)
    for (int c = 0; c < a.d; ++c) {
      const int pair = a.at(r, c) * a.d + b.at(r, c);
      if (seen[pair]++) return false;
    }
  return true;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// Polynomials over Z_p as coefficient vectors, constant term first.
std::vector<int> poly_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m,
                          int p) {
  a = poly_trim(std::move(a));
  const auto mt = poly_trim(m);
  while (a.size() >= mt.size() && !a.empty()) {
    // mt is monic by construction.
    const int coeff = a.back();
    const std::size_t shift = a.size() - mt.size();
    for (std::size_t i = 0; i < mt.size(); ++i) {
      a[shift + i] = ((a[shift + i] - coeff * mt[i]) % p + p) % p;
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

// Full monic modulus polynomial: x^k + c_{k-1} x^{k-1} + ... + c_0.
std::vector<int> full_modulus(const FieldSpec& spec) {
  std::vector<int> m = spec.modulus;
  m.resize(spec.k + 1, 0);
  m[spec.k] = 1;
  return m;
}

std::vector<int> digits_of(int value, int p, int k) {
  std::vector<int> out(k);
  for (int i = 0; i < k; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

int value_of(const std::vector<int>& digits, int p) {
  int v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

bool is_irreducible(const std::vector<int>& monic, int p) {
  const int k = static_cast<int>(monic.size()) - 1;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (int deg = 1; deg * 2 <= k; ++deg) {
    int combos = 1;
    for (int i = 0; i < deg; ++i) combos *= p;
    for (int low = 0; low < combos; ++low) {
      std::vector<int> divisor = digits_of(low, p, deg);
      divisor.push_back(1);
      if (poly_mod(monic, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> default_modulus(int p, int k) {
  if (p == 2 && k == 2) return {1, 1};        // x^2 + x + 1
  if (p == 2 && k == 3) return {1, 1, 0};     // x^3 + x + 1
  if (p == 2 && k == 4) return {1, 1, 0, 0};  // x^4 + x + 1
  if (p == 3 && k == 2) return {1, 0};        // x^2 + 1
  // First irreducible monic polynomial in radix-p coefficient order.
  int combos = 1;
  for (int i = 0; i < k; ++i) combos *= p;
  for (int low = 0; low < combos; ++low) {
    std::vector<int> monic = digits_of(low, p, k);
    monic.push_back(1);
    if (is_irreducible(monic, p)) {
      monic.pop_back();
      return monic;
    }
  }
  std::ostringstream msg;
  msg << "default_modulus: no irreducible monic polynomial of degree " << k
      << " over Z_" << p;
  throw std::logic_error(msg.str());
}

}  // namespace

FieldSpec FieldSpec::for_order(int d) {
  if (d < 2)
    throw std::invalid_argument("FieldSpec: field order must be at least 2");
  int p = 2;
  while (d % p != 0) {
    ++p;
    if (p > d) break;
  }
  int k = 0;
  int rest = d;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1 || !is_prime(p)) {
    std::ostringstream msg;
    msg << "FieldSpec: " << d << " is not a prime power";
    throw std::invalid_argument(msg.str());
  }
  FieldSpec spec;
  spec.p = p;
  spec.k = k;
  if (k >= 2) spec.modulus = default_modulus(p, k);
  spec.validate();
  return spec;
}

int FieldSpec::order() const {
  int d = 1;
  for (int i = 0; i < k; ++i) d *= p;
  return d;
}

void FieldSpec::validate() const {
  if (!is_prime(p)) {
    std::ostringstream msg;
    msg << "FieldSpec: " << p << " is not prime";
    throw std::invalid_argument(msg.str());
  }
  if (k < 1) throw std::invalid_argument("FieldSpec: exponent must be >= 1");
  if (k == 1) {
    if (!modulus.empty())
      throw std::invalid_argument("FieldSpec: prime fields take no modulus");
    return;
  }
  if (static_cast<int>(modulus.size()) != k) {
    std::ostringstream msg;
    msg << "FieldSpec: modulus needs exactly " << k << " coefficients, got "
        << modulus.size();
    throw std::invalid_argument(msg.str());
  }
  for (int c : modulus)
    if (c < 0 || c >= p)
      throw std::invalid_argument("FieldSpec: modulus coefficient outside Z_p");
  if (!is_irreducible(full_modulus(*this), p)) {
    std::ostringstream msg;
    msg << "FieldSpec: modulus is reducible over Z_" << p;
    throw std::invalid_argument(msg.str());
  }
}

FieldTables field_ops(const FieldSpec& spec) {
  spec.validate();
  const int d = spec.order();
  const auto monic = full_modulus(spec);
  FieldTables tables;
  tables.d = d;
  tables.add.assign(d, std::vector<int>(d));
  tables.mul.assign(d, std::vector<int>(d));
  for (int a = 0; a < d; ++a) {
    const auto da = digits_of(a, spec.p, spec.k);
    for (int b = 0; b < d; ++b) {
      const auto db = digits_of(b, spec.p, spec.k);
      std::vector<int> sum(spec.k);
      for (int i = 0; i < spec.k; ++i) sum[i] = (da[i] + db[i]) % spec.p;
      tables.add[a][b] = value_of(sum, spec.p);
      auto prod = poly_mod(poly_mul(da, db, spec.p), monic, spec.p);
      prod.resize(spec.k, 0);
      tables.mul[a][b] = value_of(prod, spec.p);
    }
  }
  return tables;
}

std::vector<LatinSquare> gf_mols(int d, int order_cap) {
  if (d > order_cap) {
    std::ostringstream msg;
    msg << "gf_mols: order " << d << " over the cap " << order_cap;
    throw std::invalid_argument(msg.str());
  }
  return gf_mols(FieldSpec::for_order(d), order_cap);
}

std::vector<LatinSquare> gf_mols(const FieldSpec& spec, int order_cap) {
  const int d = spec.order();
  if (d > order_cap) {
    std::ostringstream msg;
    msg << "gf_mols: order " << d << " over the cap " << order_cap;
    throw std::invalid_argument(msg.str());
  }
  const FieldTables f = field_ops(spec);
  std::vector<LatinSquare> squares;
  squares.reserve(d - 1);
  for (int a = 1; a < d; ++a) {
    std::vector<std::vector<int>> grid(d, std::vector<int>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) grid[i][j] = f.add[f.mul[a][i]][j];
    squares.push_back(LatinSquare::from_grid(std::move(grid)));
  }
  for (std::size_t i = 0; i < squares.size(); ++i)
    for (std::size_t j = i + 1; j < squares.size(); ++j)
      if (!are_orthogonal(squares[i], squares[j]))
        throw std::logic_error("gf_mols: generated squares fail orthogonality");
  return squares;
}

LatinSquare canonicalize(const LatinSquare& sq) {
  const int d = sq.d;
  std::vector<int> relabel(d);
  for (int j = 0; j < d; ++j) relabel[sq.at(0, j)] = j;
  std::vector<std::vector<int>> grid(d, std::vector<int>(d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) grid[r][c] = relabel[sq.at(r, c)];
  std::sort(grid.begin(), grid.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return LatinSquare::from_grid(std::move(grid));
}

MolsConversion mccs_to_mols(const MccsFamily& family) {
  const MccsReport report = verify_mccs(family);
  if (!report.ok) {
    std::ostringstream msg;
    msg << "mccs_to_mols: " << report.reason;
    throw std::invalid_argument(msg.str());
  }
  if (family.size() < 2)
    throw std::invalid_argument(
        "mccs_to_mols: need at least two partitions to build the table");
  for (int i = 0; i < family.size(); ++i)
    if (!is_square(family.partitions[i])) {
      std::ostringstream msg;
      msg << "mccs_to_mols: partition " << i << " is not square";
      throw std::invalid_argument(msg.str());
    }

  const Partition& rows = family.partitions[0];
  const Partition& cols = family.partitions[1];
  const int d = rows.block_count();

  // T[i][j] is the unique element of row block i meeting column block j.
  const auto col_owner = cols.block_of_element();
  GridArrangement table;
  table.rows = d;
  table.cols = d;
  table.cells.assign(d, std::vector<int>(d, -1));
  for (int i = 0; i < d; ++i)
    for (int x : rows.blocks[i]) table.cells[i][col_owner[x]] = x;
  table.validate();

  MolsConversion out;
  out.table = std::move(table);
  for (int m = 2; m < family.size(); ++m) {
    const auto owner = family.partitions[m].block_of_element();
    std::vector<std::vector<int>> grid(d, std::vector<int>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) grid[i][j] = owner[out.table.cells[i][j]];
    out.squares.push_back(LatinSquare::from_grid(std::move(grid)));
  }
  for (std::size_t i = 0; i < out.squares.size(); ++i)
    for (std::size_t j = i + 1; j < out.squares.size(); ++j)
      if (!are_orthogonal(out.squares[i], out.squares[j]))
        throw std::logic_error(
            "mccs_to_mols: converted squares fail orthogonality");
  return out;
}

MccsFamily mols_to_mccs(const std::vector<LatinSquare>& squares, int d) {
  if (d < 1) throw std::invalid_argument("mols_to_mccs: order must be >= 1");
  for (std::size_t i = 0; i < squares.size(); ++i)
    if (squares[i].d != d) {
      std::ostringstream msg;
      msg << "mols_to_mccs: square " << i << " has order " << squares[i].d
          << ", expected " << d;
      throw std::invalid_argument(msg.str());
    }
  for (std::size_t i = 0; i < squares.size(); ++i)
    for (std::size_t j = i + 1; j < squares.size(); ++j)
      if (!are_orthogonal(squares[i], squares[j])) {
        std::ostringstream msg;
        msg << "mols_to_mccs: squares " << i << " and " << j
            << " are not orthogonal";
        throw std::invalid_argument(msg.str());
      }

  const int n = d * d;
  MccsFamily family;
  family.n = n;

  std::vector<std::vector<int>> row_blocks(d), col_blocks(d);
  for (int j = 0; j < d; ++j)
    for (int c = 0; c < d; ++c) {
      row_blocks[j].push_back(j * d + c);
      col_blocks[c].push_back(j * d + c);
    }
  family.partitions.push_back(Partition::from_blocks(n, row_blocks));
  family.partitions.push_back(Partition::from_blocks(n, col_blocks));

  for (const LatinSquare& sq : squares) {
    std::vector<std::vector<int>> symbol_blocks(d);
    for (int j = 0; j < d; ++j)
      for (int c = 0; c < d; ++c) symbol_blocks[sq.at(j, c)].push_back(j * d + c);
    family.partitions.push_back(Partition::from_blocks(n, symbol_blocks));
  }

  const MccsReport report = verify_mccs(family);
  if (!report.ok)
    throw std::logic_error("mols_to_mccs: output family failed verification: " +
                           report.reason);
  return family;
}

}  // namespace relmub
