#include "qcount/moduli.hpp"

#include "qcount/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qcount {

CountJob::CountJob(Quiver q, Stability t, SlopeValue m, SeriesBox b)
    : quiver(std::move(q)), theta(std::move(t)), mu(std::move(m)), box(std::move(b)) {
  if (theta.size() != quiver.n || box.vars() != quiver.n)
    throw std::invalid_argument("job components must agree on the vertex count");
}

std::string CountJob::label() const {
  std::ostringstream os;
  os << "n=" << quiver.n << " theta=(";
  for (int i = 0; i < theta.size(); ++i) os << (i ? "," : "") << theta.weights[static_cast<size_t>(i)];
  os << ") mu=" << rational_to_string(mu);
  return os.str();
}

CountEngine::CountEngine(CountJob job)
    : job_(std::move(job)), ctx_(job_.quiver, job_.theta, job_.mu) {}

RatFunc CountEngine::rss(const DimVector& alpha) const { return rss_recursive(ctx_, alpha); }

namespace {

TruncatedSeries partition_form_impl(const CountJob& job, const HNContext& ctx) {
  TruncatedSeries p(job.box);
  for (const auto& tau : enumerate_partition_tuples(job.box.bound)) {
    long long twist = 0;
    for (int i = 0; i < job.quiver.n; ++i)
      for (int j = 0; j < job.quiver.n; ++j) {
        int arrows = job.quiver.arrows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (arrows)
          twist += arrows * u_pairing(tau.entries[static_cast<size_t>(i)], tau.entries[static_cast<size_t>(j)]);
      }

    RatFunc term = RatFunc::q_power(static_cast<int>(twist));
    for (int s = 1; s <= tau.largest_part() && !term.is_zero(); ++s) {
      DimVector d = multiplicity_vector(tau, s);
      if (!d.is_zero()) term *= rss_recursive(ctx, d);
    }
    if (term.is_zero()) continue;
    for (const auto& part : tau.entries) term /= centralizer_order(part);
    p.add_to(tau.size_vector(), term);
  }
  return p;
}

TruncatedSeries tuple_form_impl(const CountJob& job, const HNContext& ctx) {
  TruncatedSeries p = TruncatedSeries::one(job.box);
  const int n = job.quiver.n;

  // Candidates for one slot: zero or a nonzero vector of slope mu with
  // s * candidate inside the remaining budget.
  std::function<void(int, const DimVector&, std::vector<DimVector>&)> rec =
      [&](int s, const DimVector& remaining, std::vector<DimVector>& pieces) {
        std::vector<int> v(static_cast<size_t>(n), 0);
        auto fits = [&](const DimVector& cand) {
          for (int i = 0; i < n; ++i)
            if (s * cand[i] > remaining[i]) return false;
          return true;
        };
        while (true) {
          DimVector cand(v);
          bool usable = cand.is_zero() || in_delta_plus(job.theta, job.mu, cand);
          if (usable && fits(cand)) {
            pieces.push_back(cand);
            if (!cand.is_zero()) {
              // Emit the tuple ending here.
              DimVector total = DimVector::zeros(n);
              for (size_t t = 0; t < pieces.size(); ++t)
                total = total + pieces[t].scaled(static_cast<int>(t) + 1);
              RatFunc term(BigRational(1));
              DimVector tail = DimVector::zeros(n);  // beta^t = sum_{i >= t} alpha^i
              long long exponent = 0;
              for (size_t t = pieces.size(); t-- > 0;) {
                tail = tail + pieces[t];
                exponent += euler_form(job.quiver, pieces[t], pieces[t]) -
                            euler_form(job.quiver, tail, tail);
              }
              for (const auto& piece : pieces) {
                if (piece.is_zero()) continue;
                term *= rss_recursive(ctx, piece);
                if (term.is_zero()) break;
                term /= RatFunc(gl_order(piece));
              }
              if (!term.is_zero())
                p.add_to(total, RatFunc::q_power(static_cast<int>(exponent)) * term);
            }
            DimVector next_remaining = remaining;
            for (int i = 0; i < n; ++i)
              next_remaining.comp[static_cast<size_t>(i)] -= s * cand[i];
            if (next_remaining.ht() >= s + 1) rec(s + 1, next_remaining, pieces);
            pieces.pop_back();
          }
          // Next candidate <= remaining/s in lexicographic order.
          int i = n - 1;
          while (i >= 0 && (v[static_cast<size_t>(i)] + 1) * s > remaining[i]) {
            v[static_cast<size_t>(i)] = 0;
            --i;
          }
          if (i < 0) break;
          ++v[static_cast<size_t>(i)];
        }
      };

  std::vector<DimVector> pieces;
  rec(1, job.box.bound, pieces);
  return p;
}

}  // namespace

TruncatedSeries build_P_partition_form(const CountJob& job) {
  HNContext ctx(job.quiver, job.theta, job.mu);
  return partition_form_impl(job, ctx);
}

TruncatedSeries build_P_tuple_form(const CountJob& job) {
  HNContext ctx(job.quiver, job.theta, job.mu);
  return tuple_form_impl(job, ctx);
}

const TruncatedSeries& CountEngine::p_partition_form() const {
  std::lock_guard<std::mutex> hold(lock_);
  if (!p_partition_) p_partition_ = partition_form_impl(job_, ctx_);
  return *p_partition_;
}

const TruncatedSeries& CountEngine::p_tuple_form() const {
  std::lock_guard<std::mutex> hold(lock_);
  if (!p_tuple_) p_tuple_ = tuple_form_impl(job_, ctx_);
  return *p_tuple_;
}

std::map<DimVector, RatFunc> h_coefficients(const TruncatedSeries& p) {
  TruncatedSeries lg = formal_log(p);
  std::map<DimVector, RatFunc> h;
  for (const auto& [alpha, coeff] : lg.coeffs()) {
    if (alpha.is_zero()) continue;
    h.emplace(alpha, coeff);
  }
  return h;
}

const std::map<DimVector, RatFunc>& CountEngine::h_map() const {
  const TruncatedSeries& p = p_tuple_form();
  std::lock_guard<std::mutex> hold(lock_);
  if (!h_) h_ = h_coefficients(p);
  return *h_;
}

RatFunc CountEngine::h(const DimVector& alpha) const {
  const auto& m = h_map();
  auto it = m.find(alpha);
  return it == m.end() ? RatFunc() : it->second;
}

QPolynomial CountEngine::a_ss(const DimVector& alpha) const {
  if (alpha.is_zero()) throw std::invalid_argument("a_ss of the zero vector");
  if (!job_.box.contains(alpha)) throw std::invalid_argument("a_ss target outside the series box");
  if (!in_delta_plus(job_.theta, job_.mu, alpha)) return QPolynomial();

  int g = component_gcd(alpha);
  RatFunc sum;
  for (int d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    int mu_d = mobius(d);
    if (mu_d == 0) continue;
    DimVector reduced = *alpha.divided(d);
    sum += RatFunc(make_rational(mu_d, d)) * adams_subst(h(reduced), d);
  }
  RatFunc q_minus_1(QPolynomial(std::vector<BigRational>{BigRational(-1), BigRational(1)}));
  QPolynomial poly = to_polynomial(q_minus_1 * sum);
  if (!poly.integer_coefficients())
    throw std::logic_error("a_ss must have integer coefficients, got " + poly.to_string());
  return poly;
}

const TruncatedSeries& CountEngine::stable_log_series(TwistConvention convention) const {
  std::lock_guard<std::mutex> hold(lock_);
  auto it = stable_log_.find(convention);
  if (it != stable_log_.end()) return it->second;

  // F = sum over Delta_mu^+ of R^ss/|GL| X^alpha, constant term 1.
  TruncatedSeries f(job_.box);
  f.set_coeff(DimVector::zeros(job_.quiver.n), RatFunc(BigRational(1)));
  std::function<void(std::vector<int>&, int)> fill = [&](std::vector<int>& v, int pos) {
    if (pos == job_.quiver.n) {
      DimVector beta(v);
      if (beta.is_zero() || !in_delta_plus(job_.theta, job_.mu, beta)) return;
      RatFunc r = rss_recursive(ctx_, beta);
      if (!r.is_zero()) f.set_coeff(beta, r / RatFunc(gl_order(beta)));
      return;
    }
    for (int x = 0; x <= job_.box.bound[pos]; ++x) {
      v[static_cast<size_t>(pos)] = x;
      fill(v, pos + 1);
    }
  };
  std::vector<int> v(static_cast<size_t>(job_.quiver.n), 0);
  fill(v, 0);

  // Twisted inverse S with F o S = 1, solved by increasing height over the
  // whole box grid.
  TruncatedSeries s = TruncatedSeries::one(job_.box);
  std::vector<DimVector> gammas;
  std::function<void(std::vector<int>&, int)> grid = [&](std::vector<int>& w, int pos) {
    if (pos == job_.quiver.n) {
      gammas.emplace_back(w);
      return;
    }
    for (int x = 0; x <= job_.box.bound[pos]; ++x) {
      w[static_cast<size_t>(pos)] = x;
      grid(w, pos + 1);
    }
  };
  std::vector<int> w(static_cast<size_t>(job_.quiver.n), 0);
  grid(w, 0);
  std::sort(gammas.begin(), gammas.end(), [](const DimVector& a, const DimVector& b) {
    return a.ht() < b.ht() || (a.ht() == b.ht() && a < b);
  });

  for (const auto& gamma : gammas) {
    if (gamma.is_zero()) continue;
    RatFunc acc;
    for (const auto& [beta, fb] : f.coeffs()) {
      if (beta.is_zero() || !leq_componentwise(beta, gamma)) continue;
      DimVector delta = gamma - beta;
      RatFunc sd = s.coeff(delta);
      if (sd.is_zero()) continue;
      long long t = 0;
      switch (convention) {
        case TwistConvention::neg_g_f: t = -euler_form(job_.quiver, delta, beta); break;
        case TwistConvention::neg_f_g: t = -euler_form(job_.quiver, beta, delta); break;
        case TwistConvention::g_f: t = euler_form(job_.quiver, delta, beta); break;
        case TwistConvention::f_g: t = euler_form(job_.quiver, beta, delta); break;
      }
      acc += RatFunc::q_power(static_cast<int>(t)) * fb * sd;
    }
    s.set_coeff(gamma, -acc);
  }

  // (1 - q) Log(S) carries the stable counts.
  QPolynomial one_minus_q(std::vector<BigRational>{BigRational(1), BigRational(-1)});
  TruncatedSeries logs = big_log(s) * RatFunc(one_minus_q);
  return stable_log_.emplace(convention, std::move(logs)).first->second;
}

QPolynomial CountEngine::a_stable(const DimVector& alpha, TwistConvention convention) const {
  if (alpha.is_zero()) throw std::invalid_argument("a_stable of the zero vector");
  if (!job_.box.contains(alpha)) throw std::invalid_argument("a_stable target outside the series box");
  if (!in_delta_plus(job_.theta, job_.mu, alpha)) return QPolynomial();
  const TruncatedSeries& logs = stable_log_series(convention);
  try {
    return to_polynomial(logs.coeff(alpha));
  } catch (const std::domain_error& e) {
    throw std::domain_error(std::string(e.what()) + " (twist convention " +
                            to_string(convention) + ")");
  }
}

CountResult CountEngine::result(const DimVector& alpha,
                                std::optional<TwistConvention> stable_convention) const {
  CountResult out;
  out.alpha = alpha;
  out.r_ss = to_polynomial(rss(alpha));
  out.h = h(alpha);
  out.a_ss = a_ss(alpha);
  if (stable_convention) out.a_s = a_stable(alpha, *stable_convention);
  return out;
}

QPolynomial a_ss(const CountJob& job, const DimVector& alpha) {
  return CountEngine(job).a_ss(alpha);
}

QPolynomial a_stable(const CountJob& job, const DimVector& alpha, TwistConvention convention) {
  return CountEngine(job).a_stable(alpha, convention);
}

ExpIdentityReport verify_exp_identity(const CountJob& job) {
  CountEngine engine(job);
  const TruncatedSeries& p = engine.p_partition_form();

  QPolynomial q_minus_1(std::vector<BigRational>{BigRational(-1), BigRational(1)});
  TruncatedSeries inner(job.box);
  std::function<void(std::vector<int>&, int)> fill = [&](std::vector<int>& v, int pos) {
    if (pos == job.quiver.n) {
      DimVector alpha(v);
      if (alpha.is_zero() || !in_delta_plus(job.theta, job.mu, alpha)) return;
      QPolynomial a = engine.a_ss(alpha);
      if (!a.is_zero()) inner.set_coeff(alpha, RatFunc(a, q_minus_1));
      return;
    }
    for (int x = 0; x <= job.box.bound[pos]; ++x) {
      v[static_cast<size_t>(pos)] = x;
      fill(v, pos + 1);
    }
  };
  std::vector<int> v(static_cast<size_t>(job.quiver.n), 0);
  fill(v, 0);

  TruncatedSeries rhs = big_exp(inner);

  ExpIdentityReport report;
  std::function<void(std::vector<int>&, int)> compare = [&](std::vector<int>& w, int pos) {
    if (!report.equal) return;
    if (pos == job.quiver.n) {
      DimVector alpha(w);
      RatFunc l = p.coeff(alpha), r = rhs.coeff(alpha);
      if (!(l == r)) {
        report.equal = false;
        report.first_mismatch = alpha;
        report.lhs = l;
        report.rhs = r;
      }
      return;
    }
    for (int x = 0; x <= job.box.bound[pos] && report.equal; ++x) {
      w[static_cast<size_t>(pos)] = x;
      compare(w, pos + 1);
    }
  };
  std::vector<int> w(static_cast<size_t>(job.quiver.n), 0);
  compare(w, 0);
  return report;
}

PositivityReport positivity_scan(const std::vector<CountJob>& jobs,
                                 const std::vector<std::vector<DimVector>>& alphas_per_job) {
  if (jobs.size() != alphas_per_job.size())
    throw std::invalid_argument("positivity_scan: one alpha list per job");
  PositivityReport report;
  for (size_t j = 0; j < jobs.size(); ++j) {
    CountEngine engine(jobs[j]);
    for (const auto& alpha : alphas_per_job[j]) {
      PositivityRow row;
      row.job_label = jobs[j].label();
      row.alpha = alpha;
      row.in_delta = in_delta_plus(jobs[j].theta, jobs[j].mu, alpha);
      row.poly = engine.a_ss(alpha);
      row.integer_coefficients = row.poly.integer_coefficients();
      row.nonnegative = row.poly.nonnegative_integer_coefficients();
      report.rows.push_back(row);
      report.all_integer = report.all_integer && row.integer_coefficients;
      report.all_nonnegative = report.all_nonnegative && row.nonnegative;
    }
  }
  return report;
}

QPolynomial kac_polynomial(const Quiver& q, const DimVector& alpha, const SeriesBox& box) {
  if (alpha.is_zero()) throw std::invalid_argument("kac polynomial of the zero vector");
  CountJob job(q, Stability(std::vector<int>(static_cast<size_t>(q.n), 0)), SlopeValue(0), box);
  return a_ss(job, alpha);
}

}  // namespace qcount
