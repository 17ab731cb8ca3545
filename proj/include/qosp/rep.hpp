#pragma once

#include <map>
#include <string>
#include <vector>

#include "qosp/algebra.hpp"
#include "qosp/matrix.hpp"

namespace qosp {

using PolyMatrix = Matrix<LaurentPoly>;
using RationalMatrix = Matrix<Rational>;

class RepError : public std::runtime_error {
 public:
  explicit RepError(const std::string& what) : std::runtime_error(what) {}
};

// The finite-difference realization of the fourth fermionic generator comes
// in two normalizations: the commonly printed one (Literal, q^-1 D_q on the
// upper-right block) and the rescaled one that actually satisfies the
// relation table (Repaired, -q D_q). The rescaling factor is -q^2; the
// verification oracle measures the difference.
enum class FermionVariant { Repaired, Literal };

// Generator matrices acting on the 2n+1-dimensional graded module with the
// degree-(n-1) polynomial component first (indices 0..n-1, monomial basis)
// and the degree-n component second (indices n..2n). All entries are Laurent
// polynomials in t with q = t^2.
struct RepSet {
  int n = 0;
  std::map<std::string, PolyMatrix> generators;

  int dim() const { return 2 * n + 1; }
  const PolyMatrix& at(const std::string& name) const;
};

// The four fermionic matrices: V1 = lower-left identity embedding,
// V2 = lower-left multiplication by x, Vb1 = q^-n (x D_q - [n]_q) on the
// upper-right block (annihilates the top-degree column), Vb2 = the variant
// normalization of D_q on the upper-right block.
RepSet build_osp22_fermions(int n, FermionVariant variant = FermionVariant::Repaired);

// Derives every bosonic generator that appears as the single linear target
// of a fermionic bracket: from {L,R}_c = g G with L, R already built,
// G = (L R + c R L) / g. Works for both the osp(2,2) cross brackets and the
// osp(1,2) defining brackets (squares included).
void derive_bosonic(const AlgebraSpec& spec, RepSet& reps);

// Fermions + derived bosons for the one-parameter osp(2,2) presentation.
RepSet build_osp22_rep(int n, FermionVariant variant = FermionVariant::Repaired);

// The deformed osp(1,2) representation on the same module with Jackson base
// q^2: Vm has D_{q^2} upper-right and the identity embedding lower-left;
// Vp has x lower-left and q^-2n (x D_{q^2} - [n]_{q^2}) upper-right.
// H, Jm, Jp are derived from the three defining antiquommutators.
RepSet build_osp12_rep(int n);

// Left side minus right side of one relation under the given matrices;
// the zero matrix means the relation holds. The relation's coefficients
// must live over the same parameter list as the matrix entries ({"t"}).
PolyMatrix check_relation(const Relation& rel, const RepSet& reps);

struct ResidualEntry {
  int row = 0;
  int col = 0;
  std::string value;
};

struct RelationFailure {
  std::string relation_id;
  std::vector<ResidualEntry> residual_entries;
};

struct VerificationReport {
  std::string algebra;
  int n = 0;
  std::string mode;  // "symbolic" or "classical"
  size_t relations_checked = 0;
  std::vector<RelationFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Runs check_relation on every relation of the presentation (in parallel
// across relations when requested); failures carry all nonzero residual
// entries rendered as strings.
VerificationReport verify_all(const AlgebraSpec& spec, const RepSet& reps, bool parallel = true,
                              const std::string& mode = "symbolic");

// Exact numeric evaluation of t^(2k) |-> q^k; every entry must contain only
// even powers of t (guaranteed for the one-parameter builders here).
Rational evaluate_even_powers(const LaurentPoly& poly, const Rational& q_value);
RationalMatrix evaluate_at_q(const PolyMatrix& m, const Rational& q_value);

// Classical limit t = 1, kept as constant Laurent polynomials so the
// symbolic verification path applies unchanged.
PolyMatrix classical_limit(const PolyMatrix& m);
RepSet classical_limit(const RepSet& reps);

struct SpanReport {
  int n = 0;
  Rational q;
  std::vector<int> ranks_by_word_length;  // entry L = rank of words of length <= L
  bool saturated = false;
  int saturating_length = -1;  // first length reaching full matrix rank
};

// Exact rank growth of the span of all products of the given matrices
// (empty product included), stopping at saturation (rank = dim^2) or
// max_word_length. The assignment must be generic: q not in {0, 1, -1}.
SpanReport span_rank(const std::vector<RationalMatrix>& gens, int dim, int n,
                     const Rational& q_value, int max_word_length);

// Span of the four fermionic matrices of the osp(2,2) representation.
SpanReport osp22_fermion_span(int n, const Rational& q_value, int max_word_length);

// Dimension of {X : XM = MX for every generator M}, by exact null space.
// 1 means the representation is irreducible (Schur).
int commutant_dimension(const std::vector<RationalMatrix>& gens, int dim);
int osp22_commutant_dimension(int n, const Rational& q_value);
int osp12_commutant_dimension(int n, const Rational& q_value);

// Block-structure predicates for the component-major module layout.
bool preserves_components(const PolyMatrix& m, int n);
bool swaps_components(const PolyMatrix& m, int n);

}  // namespace qosp
