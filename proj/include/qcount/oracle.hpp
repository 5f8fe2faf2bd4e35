#pragma once

#include <functional>
#include <map>
#include <optional>

#include "qcount/ffield.hpp"
#include "qcount/partition.hpp"
#include "qcount/quiver.hpp"

namespace qcount {

/// Instance-size limits for brute-force enumeration. Exceeding a cap is an
/// explicit error, never silent truncation.
struct OracleCaps {
  long long entries_f2 = 14;
  long long entries_f3 = 9;
  long long entries_f4plus = 7;
  long long gl_cap = 100000;
  int end_dim_f2 = 8;
  int end_dim_f3 = 5;
  int end_dim_f4plus = 4;

  long long entry_cap(int q) const { return q == 2 ? entries_f2 : q == 3 ? entries_f3 : entries_f4plus; }
  int end_dim_cap(int q) const { return q == 2 ? end_dim_f2 : q == 3 ? end_dim_f3 : end_dim_f4plus; }
};

/// A representation over a small finite field: one matrix per arrow, in
/// Quiver::arrow_list() order; the matrix of an arrow i->j has shape
/// alpha_j x alpha_i and acts on coordinate columns of the source space.
struct FFRep {
  const Quiver* quiver = nullptr;
  DimVector dim;
  const SmallField* field = nullptr;
  std::vector<FFMatrix> mats;

  /// Base-q packing of all matrix entries; unique within (quiver, dim, field).
  uint64_t encode() const;
};

FFRep zero_rep(const Quiver& q, const DimVector& alpha, const SmallField& f);

/// Streams every representation exactly once in a deterministic order;
/// returns the count. Throws "oracle instance too large" over the entry cap.
long long for_each_rep(const Quiver& q, const DimVector& alpha, const SmallField& f,
                       const OracleCaps& caps, const std::function<void(const FFRep&)>& visit);

/// Count of representations satisfying a predicate.
long long count_reps_if(const Quiver& q, const DimVector& alpha, const SmallField& f,
                        const OracleCaps& caps, const std::function<bool(const FFRep&)>& pred);

struct StabilityFlags {
  bool semistable = true;
  bool stable = true;
};

/// Exhaustive subrepresentation enumeration; slope tests with exact rationals.
StabilityFlags subrep_test(const FFRep& m, const Stability& theta);

/// Membership in Rep^ss_mu: semistable and slope(dim) = mu.
bool member_rep_ss_mu(const FFRep& m, const Stability& theta, const SlopeValue& mu);

struct EndAnalysis {
  int end_dim = 0;
  long long unit_count = 0;
  long long idempotent_count = 0;
  std::optional<int> residue_degree;
};

/// Endomorphism algebra by exhaustive enumeration: dimension, units,
/// idempotents, and the residue degree in the local case.
EndAnalysis end_analysis(const FFRep& m, const OracleCaps& caps = {});

enum class RepClass { decomposable, indecomposable, absolutely_indecomposable };

RepClass classify(const FFRep& m, const OracleCaps& caps = {});

/// Orbit count of the GL(alpha) action restricted to an isomorphism-invariant
/// filter.
long long count_iso_classes(const Quiver& q, const DimVector& alpha, const SmallField& f,
                            const OracleCaps& caps, const std::function<bool(const FFRep&)>& filter);

/// Burnside average over the full group; cross-check for count_iso_classes.
long long burnside_class_count(const Quiver& q, const DimVector& alpha, const SmallField& f,
                               const OracleCaps& caps, const std::function<bool(const FFRep&)>& filter);

/// Nullity over f of U |-> J_lambda U - U J_mu.
long long type_u_solution_dim(const Partition& lambda, const Partition& mu, const SmallField& f);

/// |{A in GL_{|lambda|}(f) : A (I + J_lambda) = (I + J_lambda) A}|.
long long commuting_group_order(const Partition& lambda, const SmallField& f);

struct FixedPointCount {
  long long total = 0;
  long long semistable = 0;
};

/// Counts X_g and X_g intersected with Rep^ss_mu for g = (I + J_{tau_i}).
FixedPointCount fixed_points(const Quiver& q, const PartitionTuple& tau, const SmallField& f,
                             const Stability& theta, const SlopeValue& mu,
                             const OracleCaps& caps = {});

/// Streams the fixed representations of g = (I + J_{tau_i}).
long long for_each_fixed_rep(const Quiver& q, const PartitionTuple& tau, const SmallField& f,
                             const OracleCaps& caps, const std::function<void(const FFRep&)>& visit);

bool is_fixed_by(const FFRep& m, const PartitionTuple& tau);

/// Core summands by part size: for each s the representation on the
/// multiplicity spaces d_tau^s whose arrow matrices collect the leading
/// scalars of the square type-U blocks between size-s parts.
std::map<int, FFRep> extract_core(const FFRep& m, const PartitionTuple& tau);

/// All subspaces of f^d as reduced row-echelon bases with membership bitmaps;
/// cached per (field, d).
struct Subspace {
  int dim = 0;
  FFMatrix basis;
  std::vector<char> members;  // indexed by base-q vector encoding
};
const std::vector<Subspace>& subspaces_of(const SmallField& f, int d);

/// GL_d(f) with precomputed inverses; cached per (field, d).
struct GLGroup {
  std::vector<FFMatrix> elements;
  std::vector<FFMatrix> inverses;
};
const GLGroup& general_linear_group(const SmallField& f, int d);

}  // namespace qcount
