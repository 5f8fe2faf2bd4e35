#include "qcount/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace qcount {

namespace {

using Elem = SmallField::Elem;

long long ll_pow(long long base, long long exp) {
  long long out = 1;
  for (long long i = 0; i < exp; ++i) out *= base;
  return out;
}

void check_entry_cap(const Quiver& q, const DimVector& alpha, const SmallField& f,
                     const OracleCaps& caps) {
  if (q.total_entries(alpha) > caps.entry_cap(f.order()))
    throw std::domain_error("oracle instance too large");
}

std::vector<Elem> mat_vec(const FFMatrix& a, const std::vector<Elem>& x) {
  const SmallField& f = a.field();
  std::vector<Elem> y(static_cast<size_t>(a.rows()), 0);
  for (int r = 0; r < a.rows(); ++r) {
    Elem acc = 0;
    for (int c = 0; c < a.cols(); ++c) {
      Elem v = a.at(r, c);
      if (v != 0 && x[static_cast<size_t>(c)] != 0) acc = f.add(acc, f.mul(v, x[static_cast<size_t>(c)]));
    }
    y[static_cast<size_t>(r)] = acc;
  }
  return y;
}

size_t encode_vector(const std::vector<Elem>& v, int q) {
  size_t code = 0;
  for (size_t i = v.size(); i-- > 0;) code = code * static_cast<size_t>(q) + v[i];
  return code;
}

}  // namespace

uint64_t FFRep::encode() const {
  uint64_t code = 0;
  uint64_t q = static_cast<uint64_t>(field->order());
  for (const auto& m : mats)
    for (Elem e : m.entries()) code = code * q + e;
  return code;
}

FFRep zero_rep(const Quiver& q, const DimVector& alpha, const SmallField& f) {
  FFRep rep;
  rep.quiver = &q;
  rep.dim = alpha;
  rep.field = &f;
  for (auto [i, j] : q.arrow_list()) rep.mats.emplace_back(f, alpha[j], alpha[i]);
  return rep;
}

namespace {

FFRep decode_rep(const Quiver& q, const DimVector& alpha, const SmallField& f, uint64_t code) {
  FFRep rep = zero_rep(q, alpha, f);
  uint64_t base = static_cast<uint64_t>(f.order());
  for (size_t m = rep.mats.size(); m-- > 0;) {
    auto& entries = rep.mats[m].entries();
    for (size_t e = entries.size(); e-- > 0;) {
      entries[e] = static_cast<Elem>(code % base);
      code /= base;
    }
  }
  return rep;
}

}  // namespace

long long for_each_rep(const Quiver& q, const DimVector& alpha, const SmallField& f,
                       const OracleCaps& caps, const std::function<void(const FFRep&)>& visit) {
  check_entry_cap(q, alpha, f, caps);
  FFRep rep = zero_rep(q, alpha, f);

  // Flat view over all matrix entries, last entry fastest.
  std::vector<Elem*> slots;
  for (auto& m : rep.mats)
    for (auto& e : m.entries()) slots.push_back(&e);

  long long count = 0;
  int base = f.order();
  while (true) {
    visit(rep);
    ++count;
    size_t i = slots.size();
    while (i > 0 && *slots[i - 1] == base - 1) *slots[--i] = 0;
    if (i == 0) break;
    ++*slots[i - 1];
  }
  return count;
}

long long count_reps_if(const Quiver& q, const DimVector& alpha, const SmallField& f,
                        const OracleCaps& caps, const std::function<bool(const FFRep&)>& pred) {
  long long n = 0;
  for_each_rep(q, alpha, f, caps, [&](const FFRep& m) {
    if (pred(m)) ++n;
  });
  return n;
}

const std::vector<Subspace>& subspaces_of(const SmallField& f, int d) {
  static std::map<std::pair<int, int>, std::vector<Subspace>> cache;
  auto key = std::make_pair(f.order(), d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  int q = f.order();
  std::vector<Subspace> out;
  std::vector<int> pivots;

  // Enumerate RREF bases by pivot-column pattern, then fill free entries.
  std::function<void(int, int)> choose = [&](int from, int k) {
    if (static_cast<int>(pivots.size()) == k) {
      std::vector<std::pair<int, int>> free_pos;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[static_cast<size_t>(r)] + 1; c < d; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
            free_pos.emplace_back(r, c);

      std::vector<Elem> fill(free_pos.size(), 0);
      while (true) {
        Subspace s;
        s.dim = k;
        s.basis = FFMatrix(f, k, d);
        for (int r = 0; r < k; ++r) s.basis.set(r, pivots[static_cast<size_t>(r)], 1);
        for (size_t p = 0; p < free_pos.size(); ++p)
          s.basis.set(free_pos[p].first, free_pos[p].second, fill[p]);

        s.members.assign(static_cast<size_t>(ll_pow(q, d)), 0);
        std::vector<Elem> combo(static_cast<size_t>(k), 0);
        while (true) {
          std::vector<Elem> vec(static_cast<size_t>(d), 0);
          for (int r = 0; r < k; ++r) {
            if (combo[static_cast<size_t>(r)] == 0) continue;
            for (int c = 0; c < d; ++c)
              vec[static_cast<size_t>(c)] =
                  f.add(vec[static_cast<size_t>(c)], f.mul(combo[static_cast<size_t>(r)], s.basis.at(r, c)));
          }
          s.members[encode_vector(vec, q)] = 1;
          size_t i = combo.size();
          while (i > 0 && combo[i - 1] == q - 1) combo[--i] = 0;
          if (i == 0) break;
          ++combo[i - 1];
        }
        out.push_back(std::move(s));

        size_t i = fill.size();
        while (i > 0 && fill[i - 1] == q - 1) fill[--i] = 0;
        if (i == 0) break;
        ++fill[i - 1];
      }
      return;
    }
    for (int c = from; c < d; ++c) {
      pivots.push_back(c);
      choose(c + 1, k);
      pivots.pop_back();
    }
  };
  for (int k = 0; k <= d; ++k) choose(0, k);

  return cache.emplace(key, std::move(out)).first->second;
}

StabilityFlags subrep_test(const FFRep& m, const Stability& theta) {
  StabilityFlags flags;
  const DimVector& alpha = m.dim;
  if (alpha.ht() == 0) return flags;

  const SmallField& f = *m.field;
  int n = alpha.size();
  std::vector<const std::vector<Subspace>*> lists;
  for (int v = 0; v < n; ++v) lists.push_back(&subspaces_of(f, alpha[v]));

  auto arrows = m.quiver->arrow_list();
  long long theta_m = theta(alpha);
  long long ht_m = alpha.ht();

  std::vector<size_t> idx(static_cast<size_t>(n), 0);
  while (true) {
    long long ht_u = 0, theta_u = 0;
    bool full = true;
    for (int v = 0; v < n; ++v) {
      int k = (*lists[static_cast<size_t>(v)])[idx[static_cast<size_t>(v)]].dim;
      ht_u += k;
      theta_u += static_cast<long long>(theta.weights[static_cast<size_t>(v)]) * k;
      if (k != alpha[v]) full = false;
    }
    if (ht_u > 0 && !full) {
      // Closed under every arrow map?
      bool closed = true;
      for (size_t a = 0; a < arrows.size() && closed; ++a) {
        auto [i, j] = arrows[a];
        const Subspace& ui = (*lists[static_cast<size_t>(i)])[idx[static_cast<size_t>(i)]];
        const Subspace& uj = (*lists[static_cast<size_t>(j)])[idx[static_cast<size_t>(j)]];
        for (int r = 0; r < ui.dim && closed; ++r) {
          std::vector<Elem> x(static_cast<size_t>(alpha[i]));
          for (int c = 0; c < alpha[i]; ++c) x[static_cast<size_t>(c)] = ui.basis.at(r, c);
          auto y = mat_vec(m.mats[a], x);
          if (!uj.members[encode_vector(y, f.order())]) closed = false;
        }
      }
      if (closed) {
        // sign of slope(U) - slope(M) via cross multiplication
        long long cmp = theta_u * ht_m - theta_m * ht_u;
        if (cmp > 0) return {false, false};
        if (cmp >= 0) flags.stable = false;
      }
    }
    size_t v = idx.size();
    while (v > 0 && idx[v - 1] + 1 == lists[v - 1]->size()) idx[--v] = 0;
    if (v == 0) break;
    ++idx[v - 1];
  }
  return flags;
}

bool member_rep_ss_mu(const FFRep& m, const Stability& theta, const SlopeValue& mu) {
  if (m.dim.is_zero()) return true;  // R^ss(0) = 1 convention
  if (!in_delta_plus(theta, mu, m.dim)) return false;
  return subrep_test(m, theta).semistable;
}

EndAnalysis end_analysis(const FFRep& m, const OracleCaps& caps) {
  const SmallField& f = *m.field;
  const DimVector& alpha = m.dim;
  int n = alpha.size();

  std::vector<int> offset(static_cast<size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offset[static_cast<size_t>(v) + 1] = offset[static_cast<size_t>(v)] + alpha[v] * alpha[v];
  int unknowns = offset[static_cast<size_t>(n)];

  auto arrows = m.quiver->arrow_list();
  long long rows = 0;
  for (auto [i, j] : arrows) rows += static_cast<long long>(alpha[i]) * alpha[j];

  // phi_j A - A phi_i = 0 for every arrow a: i -> j.
  FFMatrix sys(f, static_cast<int>(rows), unknowns);
  int row = 0;
  for (size_t a = 0; a < arrows.size(); ++a) {
    auto [i, j] = arrows[a];
    const FFMatrix& mat = m.mats[a];
    for (int r = 0; r < alpha[j]; ++r)
      for (int c = 0; c < alpha[i]; ++c) {
        for (int k = 0; k < alpha[j]; ++k)  // phi_j[r,k] * A[k,c]
          sys.set(row, offset[static_cast<size_t>(j)] + r * alpha[j] + k,
                  f.add(sys.at(row, offset[static_cast<size_t>(j)] + r * alpha[j] + k), mat.at(k, c)));
        for (int k = 0; k < alpha[i]; ++k)  // - A[r,k] * phi_i[k,c]
          sys.set(row, offset[static_cast<size_t>(i)] + k * alpha[i] + c,
                  f.sub(sys.at(row, offset[static_cast<size_t>(i)] + k * alpha[i] + c), mat.at(r, k)));
        ++row;
      }
  }

  auto basis = nullspace_basis(sys);
  EndAnalysis out;
  out.end_dim = static_cast<int>(basis.size());
  if (out.end_dim > caps.end_dim_cap(f.order()))
    throw std::domain_error("oracle instance too large");

  std::vector<Elem> combo(basis.size(), 0);
  while (true) {
    std::vector<Elem> flat(static_cast<size_t>(unknowns), 0);
    for (size_t b = 0; b < basis.size(); ++b) {
      if (combo[b] == 0) continue;
      for (int u = 0; u < unknowns; ++u)
        flat[static_cast<size_t>(u)] = f.add(flat[static_cast<size_t>(u)], f.mul(combo[b], basis[b][static_cast<size_t>(u)]));
    }
    bool unit = true, idempotent = true;
    for (int v = 0; v < n && (unit || idempotent); ++v) {
      int d = alpha[v];
      FFMatrix phi(f, d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) phi.set(r, c, flat[static_cast<size_t>(offset[static_cast<size_t>(v)] + r * d + c)]);
      if (unit && phi.rank() != d) unit = false;
      if (idempotent && !(phi.mul(phi) == phi)) idempotent = false;
    }
    if (unit) ++out.unit_count;
    if (idempotent) ++out.idempotent_count;

    size_t i = combo.size();
    while (i > 0 && combo[i - 1] == f.order() - 1) combo[--i] = 0;
    if (i == 0) break;
    ++combo[i - 1];
  }

  if (out.idempotent_count == 2) {
    long long nonunits = ll_pow(f.order(), out.end_dim) - out.unit_count;
    long long power = 1;
    for (int e = 0; e <= out.end_dim; ++e, power *= f.order()) {
      if (power == nonunits) {
        out.residue_degree = out.end_dim - e;
        break;
      }
    }
  }
  return out;
}

RepClass classify(const FFRep& m, const OracleCaps& caps) {
  if (m.dim.ht() == 0) return RepClass::decomposable;  // zero representation, by convention
  EndAnalysis ea = end_analysis(m, caps);
  if (ea.idempotent_count != 2) return RepClass::decomposable;
  if (ea.residue_degree && *ea.residue_degree == 1) return RepClass::absolutely_indecomposable;
  return RepClass::indecomposable;
}

const GLGroup& general_linear_group(const SmallField& f, int d) {
  static std::map<std::pair<int, int>, GLGroup> cache;
  auto key = std::make_pair(f.order(), d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  long long total = ll_pow(f.order(), static_cast<long long>(d) * d);
  if (total > 2000000) throw std::domain_error("oracle instance too large");

  GLGroup g;
  if (d == 0) {
    g.elements.push_back(FFMatrix(f, 0, 0));
    g.inverses.push_back(FFMatrix(f, 0, 0));
  } else {
    FFMatrix m(f, d, d);
    std::vector<Elem>& e = m.entries();
    while (true) {
      auto inv = m.inverse();
      if (inv) {
        g.elements.push_back(m);
        g.inverses.push_back(std::move(*inv));
      }
      size_t i = e.size();
      while (i > 0 && e[i - 1] == f.order() - 1) e[--i] = 0;
      if (i == 0) break;
      ++e[i - 1];
    }
  }
  return cache.emplace(key, std::move(g)).first->second;
}

namespace {

long long gl_size(const SmallField& f, const DimVector& alpha) {
  long long total = 1;
  for (int v = 0; v < alpha.size(); ++v) {
    int d = alpha[v];
    for (int k = 0; k < d; ++k)
      total *= ll_pow(f.order(), d) - ll_pow(f.order(), k);
  }
  return total;
}

FFRep act(const FFRep& m, const std::vector<const GLGroup*>& groups, const std::vector<size_t>& idx) {
  FFRep out = m;
  auto arrows = m.quiver->arrow_list();
  for (size_t a = 0; a < arrows.size(); ++a) {
    auto [i, j] = arrows[a];
    out.mats[a] = groups[static_cast<size_t>(j)]->elements[idx[static_cast<size_t>(j)]]
                      .mul(m.mats[a])
                      .mul(groups[static_cast<size_t>(i)]->inverses[idx[static_cast<size_t>(i)]]);
  }
  return out;
}

// Odometer over tuples of per-vertex group element indices.
bool next_tuple(std::vector<size_t>& idx, const std::vector<const GLGroup*>& groups) {
  size_t v = idx.size();
  while (v > 0 && idx[v - 1] + 1 == groups[v - 1]->elements.size()) idx[--v] = 0;
  if (v == 0) return false;
  ++idx[v - 1];
  return true;
}

}  // namespace

long long count_iso_classes(const Quiver& q, const DimVector& alpha, const SmallField& f,
                            const OracleCaps& caps, const std::function<bool(const FFRep&)>& filter) {
  if (gl_size(f, alpha) > caps.gl_cap) throw std::domain_error("oracle instance too large");

  std::vector<uint64_t> filtered;
  for_each_rep(q, alpha, f, caps, [&](const FFRep& m) {
    if (filter(m)) filtered.push_back(m.encode());
  });

  std::vector<const GLGroup*> groups;
  for (int v = 0; v < alpha.size(); ++v) groups.push_back(&general_linear_group(f, alpha[v]));

  std::unordered_set<uint64_t> visited;
  long long classes = 0;
  for (uint64_t code : filtered) {
    if (visited.count(code)) continue;
    ++classes;
    FFRep m = decode_rep(q, alpha, f, code);
    std::vector<size_t> idx(static_cast<size_t>(alpha.size()), 0);
    do {
      visited.insert(act(m, groups, idx).encode());
    } while (next_tuple(idx, groups));
  }
  return classes;
}

long long burnside_class_count(const Quiver& q, const DimVector& alpha, const SmallField& f,
                               const OracleCaps& caps, const std::function<bool(const FFRep&)>& filter) {
  if (gl_size(f, alpha) > caps.gl_cap) throw std::domain_error("oracle instance too large");

  std::vector<FFRep> filtered;
  for_each_rep(q, alpha, f, caps, [&](const FFRep& m) {
    if (filter(m)) filtered.push_back(m);
  });

  std::vector<const GLGroup*> groups;
  for (int v = 0; v < alpha.size(); ++v) groups.push_back(&general_linear_group(f, alpha[v]));

  long long fixed_total = 0, group_order = 0;
  std::vector<size_t> idx(static_cast<size_t>(alpha.size()), 0);
  do {
    ++group_order;
    for (const FFRep& m : filtered)
      if (act(m, groups, idx).encode() == m.encode()) ++fixed_total;
  } while (next_tuple(idx, groups));

  if (fixed_total % group_order != 0)
    throw std::logic_error("Burnside average is not an integer; filter is not isomorphism-invariant");
  return fixed_total / group_order;
}

long long type_u_solution_dim(const Partition& lambda, const Partition& mu, const SmallField& f) {
  long long a = lambda.size(), b = mu.size();
  if (a * b > 64) throw std::domain_error("oracle instance too large");
  if (a == 0 || b == 0) return 0;

  FFMatrix jl = jordan_matrix(f, lambda);
  FFMatrix jm = jordan_matrix(f, mu);

  // (J_lambda U - U J_mu)[r,c] = 0; unknown U is a x b.
  FFMatrix sys(f, static_cast<int>(a * b), static_cast<int>(a * b));
  int row = 0;
  for (int r = 0; r < a; ++r)
    for (int c = 0; c < b; ++c) {
      for (int k = 0; k < a; ++k)
        if (jl.at(r, k) != 0)
          sys.set(row, static_cast<int>(k * b + c), f.add(sys.at(row, static_cast<int>(k * b + c)), jl.at(r, k)));
      for (int k = 0; k < b; ++k)
        if (jm.at(k, c) != 0)
          sys.set(row, static_cast<int>(r * b + k), f.sub(sys.at(row, static_cast<int>(r * b + k)), jm.at(k, c)));
      ++row;
    }
  return static_cast<long long>(nullspace_basis(sys).size());
}

long long commuting_group_order(const Partition& lambda, const SmallField& f) {
  int m = lambda.size();
  FFMatrix u = FFMatrix::identity(f, m).add(jordan_matrix(f, lambda));
  const GLGroup& gl = general_linear_group(f, m);
  long long count = 0;
  for (const auto& g : gl.elements)
    if (g.mul(u) == u.mul(g)) ++count;
  return count;
}

bool is_fixed_by(const FFRep& m, const PartitionTuple& tau) {
  const SmallField& f = *m.field;
  auto arrows = m.quiver->arrow_list();
  std::vector<FFMatrix> j;
  for (const auto& p : tau.entries) j.push_back(jordan_matrix(f, p));
  for (size_t a = 0; a < arrows.size(); ++a) {
    auto [i, jj] = arrows[a];
    if (!(j[static_cast<size_t>(jj)].mul(m.mats[a]) == m.mats[a].mul(j[static_cast<size_t>(i)]))) return false;
  }
  return true;
}

long long for_each_fixed_rep(const Quiver& q, const PartitionTuple& tau, const SmallField& f,
                             const OracleCaps& caps, const std::function<void(const FFRep&)>& visit) {
  if (tau.length() != q.n) throw std::invalid_argument("partition tuple length must match vertex count");
  DimVector alpha = tau.size_vector();
  check_entry_cap(q, alpha, f, caps);

  std::vector<FFMatrix> j;
  for (const auto& p : tau.entries) j.push_back(jordan_matrix(f, p));

  // Per-arrow solution bases of J_target X = X J_source.
  auto arrows = q.arrow_list();
  std::vector<std::vector<std::vector<Elem>>> bases;
  for (auto [i, jj] : arrows) {
    int rows_x = alpha[jj], cols_x = alpha[i];
    FFMatrix sys(f, rows_x * cols_x, rows_x * cols_x);
    int row = 0;
    for (int r = 0; r < rows_x; ++r)
      for (int c = 0; c < cols_x; ++c) {
        for (int k = 0; k < rows_x; ++k)
          if (j[static_cast<size_t>(jj)].at(r, k) != 0)
            sys.set(row, k * cols_x + c, f.add(sys.at(row, k * cols_x + c), j[static_cast<size_t>(jj)].at(r, k)));
        for (int k = 0; k < cols_x; ++k)
          if (j[static_cast<size_t>(i)].at(k, c) != 0)
            sys.set(row, r * cols_x + k, f.sub(sys.at(row, r * cols_x + k), j[static_cast<size_t>(i)].at(k, c)));
        ++row;
      }
    bases.push_back(nullspace_basis(sys));
  }

  FFRep rep = zero_rep(q, alpha, f);
  size_t total_dim = 0;
  for (const auto& b : bases) total_dim += b.size();

  std::vector<Elem> combo(total_dim, 0);
  long long count = 0;
  while (true) {
    size_t pos = 0;
    for (size_t a = 0; a < arrows.size(); ++a) {
      auto& entries = rep.mats[a].entries();
      std::fill(entries.begin(), entries.end(), 0);
      for (const auto& vec : bases[a]) {
        Elem coeff = combo[pos++];
        if (coeff == 0) continue;
        for (size_t e = 0; e < entries.size(); ++e)
          entries[e] = f.add(entries[e], f.mul(coeff, vec[e]));
      }
    }
    visit(rep);
    ++count;

    size_t i = combo.size();
    while (i > 0 && combo[i - 1] == f.order() - 1) combo[--i] = 0;
    if (i == 0) break;
    ++combo[i - 1];
  }
  return count;
}

FixedPointCount fixed_points(const Quiver& q, const PartitionTuple& tau, const SmallField& f,
                             const Stability& theta, const SlopeValue& mu, const OracleCaps& caps) {
  FixedPointCount out;
  out.total = for_each_fixed_rep(q, tau, f, caps, [&](const FFRep& m) {
    if (member_rep_ss_mu(m, theta, mu)) ++out.semistable;
  });
  return out;
}

std::map<int, FFRep> extract_core(const FFRep& m, const PartitionTuple& tau) {
  if (!is_fixed_by(m, tau))
    throw std::invalid_argument("representation is not fixed by the unipotent of type tau");
  const SmallField& f = *m.field;
  const Quiver& q = *m.quiver;

  // Row/column offsets of the size-s parts at each vertex.
  int r_max = tau.largest_part();
  std::vector<std::vector<int>> part_offsets(static_cast<size_t>(q.n));
  for (int v = 0; v < q.n; ++v) {
    int off = 0;
    for (int part : tau.entries[static_cast<size_t>(v)].parts()) {
      part_offsets[static_cast<size_t>(v)].push_back(off);
      off += part;
    }
  }
  auto offsets_of_size = [&](int v, int s) {
    std::vector<int> out;
    const auto& parts = tau.entries[static_cast<size_t>(v)].parts();
    for (size_t t = 0; t < parts.size(); ++t)
      if (parts[t] == s) out.push_back(part_offsets[static_cast<size_t>(v)][t]);
    return out;
  };

  auto arrows = q.arrow_list();
  std::map<int, FFRep> cores;
  for (int s = 1; s <= r_max; ++s) {
    DimVector d = multiplicity_vector(tau, s);
    FFRep core = zero_rep(q, d, f);
    for (size_t a = 0; a < arrows.size(); ++a) {
      auto [i, j] = arrows[a];
      auto row_off = offsets_of_size(j, s);
      auto col_off = offsets_of_size(i, s);
      // Leading scalar of a square type-U block is its top-left entry.
      for (size_t r = 0; r < row_off.size(); ++r)
        for (size_t c = 0; c < col_off.size(); ++c)
          core.mats[a].set(static_cast<int>(r), static_cast<int>(c),
                           m.mats[a].at(row_off[r], col_off[c]));
    }
    cores.emplace(s, std::move(core));
  }
  return cores;
}

}  // namespace qcount
