#include "qcount/ffield.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qcount {

namespace {

// Coordinates of an element index in base p.
std::vector<int> digits(int value, int p, int deg) {
  std::vector<int> d(static_cast<size_t>(deg), 0);
  for (int i = 0; i < deg; ++i) {
    d[static_cast<size_t>(i)] = value % p;
    value /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

SmallField::SmallField(int p, int deg, const std::vector<int>& modulus) : p_(p), deg_(deg) {
  q_ = 1;
  for (int i = 0; i < deg; ++i) q_ *= p;
  add_.resize(static_cast<size_t>(q_) * q_);
  mul_.resize(static_cast<size_t>(q_) * q_);
  neg_.resize(static_cast<size_t>(q_));
  inv_.assign(static_cast<size_t>(q_), 0);
  log_.assign(static_cast<size_t>(q_), -1);

  for (int a = 0; a < q_; ++a) {
    auto da = digits(a, p, deg);
    std::vector<int> dn(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) dn[static_cast<size_t>(i)] = (p - da[static_cast<size_t>(i)]) % p;
    neg_[static_cast<size_t>(a)] = static_cast<Elem>(undigits(dn, p));
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b, p, deg);
      std::vector<int> ds(static_cast<size_t>(deg));
      for (int i = 0; i < deg; ++i)
        ds[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p;
      add_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = static_cast<Elem>(undigits(ds, p));

      // Polynomial product reduced mod the defining polynomial.
      std::vector<int> prod(static_cast<size_t>(2 * deg - 1), 0);
      for (int i = 0; i < deg; ++i)
        for (int j = 0; j < deg; ++j)
          prod[static_cast<size_t>(i + j)] =
              (prod[static_cast<size_t>(i + j)] + da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)]) % p;
      for (int k = 2 * deg - 2; k >= deg; --k) {
        int c = prod[static_cast<size_t>(k)];
        if (c == 0) continue;
        prod[static_cast<size_t>(k)] = 0;
        // x^deg = -modulus_low(x); modulus is monic with low coefficients given.
        for (int i = 0; i < deg; ++i)
          prod[static_cast<size_t>(k - deg + i)] =
              ((prod[static_cast<size_t>(k - deg + i)] - c * modulus[static_cast<size_t>(i)]) % p + p) % p;
      }
      prod.resize(static_cast<size_t>(deg));
      mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = static_cast<Elem>(undigits(prod, p));
    }
  }

  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] == 1) inv_[static_cast<size_t>(a)] = static_cast<Elem>(b);

  // Primitive element and discrete logs.
  gen_ = 1;
  for (int g = 2; g < q_; ++g) {
    int x = 1, order = 0;
    do {
      x = mul_[idx(static_cast<Elem>(x), static_cast<Elem>(g))];
      ++order;
    } while (x != 1);
    if (order == q_ - 1) {
      gen_ = static_cast<Elem>(g);
      break;
    }
  }
  int x = 1;
  log_[1] = 0;
  for (int e = 1; e < q_ - 1; ++e) {
    x = mul_[idx(static_cast<Elem>(x), gen_)];
    log_[static_cast<size_t>(x)] = e;
  }

  verify_axioms();
}

void SmallField::verify_axioms() const {
  auto fail = [](const char* what) { throw std::logic_error(std::string("field axiom violated: ") + what); };
  for (int a = 0; a < q_; ++a) {
    if (add(static_cast<Elem>(a), 0) != a) fail("additive identity");
    if (mul(static_cast<Elem>(a), 1) != a) fail("multiplicative identity");
    if (add(static_cast<Elem>(a), neg(static_cast<Elem>(a))) != 0) fail("additive inverse");
    if (a != 0 && mul(static_cast<Elem>(a), inv_[static_cast<size_t>(a)]) != 1) fail("multiplicative inverse");
    for (int b = 0; b < q_; ++b) {
      if (add(static_cast<Elem>(a), static_cast<Elem>(b)) != add(static_cast<Elem>(b), static_cast<Elem>(a))) fail("commutative +");
      if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) != mul(static_cast<Elem>(b), static_cast<Elem>(a))) fail("commutative *");
      for (int c = 0; c < q_; ++c) {
        Elem ea = static_cast<Elem>(a), eb = static_cast<Elem>(b), ec = static_cast<Elem>(c);
        if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) fail("associative +");
        if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) fail("associative *");
        if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) fail("distributive");
      }
    }
  }
}

SmallField::Elem SmallField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("zero divisor");
  return inv_[a];
}

int SmallField::log(Elem a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

const SmallField& SmallField::of_order(int q) {
  static const std::map<int, SmallField> cache = [] {
    std::map<int, SmallField> m;
    m.emplace(2, SmallField(2, 1, {0}));
    m.emplace(3, SmallField(3, 1, {0}));
    m.emplace(5, SmallField(5, 1, {0}));
    m.emplace(7, SmallField(7, 1, {0}));
    m.emplace(4, SmallField(2, 2, {1, 1}));     // x^2 + x + 1
    m.emplace(8, SmallField(2, 3, {1, 1, 0}));  // x^3 + x + 1
    m.emplace(9, SmallField(3, 2, {1, 0}));     // x^2 + 1
    return m;
  }();
  auto it = cache.find(q);
  if (it == cache.end()) throw std::invalid_argument("unsupported field order " + std::to_string(q));
  return it->second;
}

FFMatrix FFMatrix::identity(const SmallField& f, int n) {
  FFMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FFMatrix FFMatrix::mul(const FFMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  FFMatrix out(*field_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      SmallField::Elem a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        SmallField::Elem b = rhs.at(k, j);
        if (b == 0) continue;
        out.set(i, j, field_->add(out.at(i, j), field_->mul(a, b)));
      }
    }
  return out;
}

FFMatrix FFMatrix::add(const FFMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  FFMatrix out(*this);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_->add(e_[i], rhs.e_[i]);
  return out;
}

FFMatrix FFMatrix::sub(const FFMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  FFMatrix out(*this);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_->sub(e_[i], rhs.e_[i]);
  return out;
}

bool FFMatrix::is_zero() const {
  for (auto v : e_)
    if (v != 0) return false;
  return true;
}

std::vector<int> FFMatrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int r = row; r < rows_; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < cols_; ++c) {
        auto tmp = at(row, c);
        set(row, c, at(pivot, c));
        set(pivot, c, tmp);
      }
    SmallField::Elem scale = field_->inv(at(row, col));
    for (int c = 0; c < cols_; ++c) set(row, c, field_->mul(at(row, c), scale));
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      SmallField::Elem factor = at(r, col);
      if (factor == 0) continue;
      for (int c = 0; c < cols_; ++c)
        set(r, c, field_->sub(at(r, c), field_->mul(factor, at(row, c))));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int FFMatrix::rank() const {
  FFMatrix copy(*this);
  return static_cast<int>(copy.rref().size());
}

std::optional<FFMatrix> FFMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  if (rows_ == 0) return FFMatrix(*field_, 0, 0);
  FFMatrix aug(*field_, rows_, 2 * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.set(r, c, at(r, c));
    aug.set(r, cols_ + r, 1);
  }
  auto pivots = aug.rref();
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_) return std::nullopt;
  FFMatrix out(*field_, rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.set(r, c, aug.at(r, cols_ + c));
  return out;
}

std::string FFMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ");
    for (int c = 0; c < cols_; ++c) os << static_cast<int>(at(r, c)) << (c + 1 == cols_ ? "" : " ");
    os << (r + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

std::vector<std::vector<SmallField::Elem>> nullspace_basis(FFMatrix a) {
  const SmallField& f = a.field();
  int unknowns = a.cols();
  auto pivots = a.rref();
  std::vector<bool> is_pivot(static_cast<size_t>(unknowns), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

  std::vector<std::vector<SmallField::Elem>> basis;
  for (int free = 0; free < unknowns; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<SmallField::Elem> v(static_cast<size_t>(unknowns), 0);
    v[static_cast<size_t>(free)] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = f.neg(a.at(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

FFMatrix jordan_matrix(const SmallField& f, const Partition& lambda) {
  int n = lambda.size();
  FFMatrix j(f, n, n);
  int offset = 0;
  for (int part : lambda.parts()) {
    for (int i = 0; i + 1 < part; ++i) j.set(offset + i, offset + i + 1, 1);
    offset += part;
  }
  return j;
}

}  // namespace qcount
