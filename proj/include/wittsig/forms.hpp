#ifndef WITTSIG_FORMS_HPP
#define WITTSIG_FORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "wittsig/linalg.hpp"
#include "wittsig/options.hpp"

namespace wittsig {

/// An epsilon-hermitian form over Q(zeta_m)(t): gram(i,j) = theta(e_i, e_j)
/// with theta conjugate-linear in the first slot, so the hermitian symmetry
/// reads bar(gram)^T = epsilon * gram.
class HermitianForm {
 public:
  HermitianForm(long m, int epsilon, MatR gram);
  static HermitianForm constant(long m, int epsilon, const MatC& gram);

  long conductor() const { return m_; }
  int epsilon() const { return eps_; }
  Eigen::Index rank() const { return gram_.rows(); }
  const MatR& gram() const { return gram_; }

  bool is_constant() const;
  // Entries as field constants, all at the form's conductor.
  MatC constant_matrix() const;

 private:
  long m_;
  int eps_;
  MatR gram_;
};

struct ValidationReport {
  bool ok = true;
  std::string message;
  Eigen::Index row = -1, col = -1;
};

// Checks epsilon-hermitian symmetry entrywise (and nonsingularity when
// requested); reports the first violating entry.
ValidationReport validate(const HermitianForm& f, bool check_nonsingular = false);
bool is_nonsingular(const HermitianForm& f);

struct WittSummand {
  HermitianForm form;
  Rational coeff;
};

/// Formal Q-linear combination of forms: a class in L~_0(F(t), eps).
/// Summands keep their own (dividing) conductor; the element's conductor is
/// the ambient field all of them embed into.
class WittElement {
 public:
  WittElement(long m, int epsilon) : m_(m), eps_(epsilon) {}

  long conductor() const { return m_; }
  int epsilon() const { return eps_; }
  const std::vector<WittSummand>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }

  // Appends coeff * [form]; zero coefficients are dropped. The ambient
  // conductor grows to contain the form.
  void add(HermitianForm form, Rational coeff);

 private:
  long m_;
  int eps_;
  std::vector<WittSummand> summands_;
};

// Class addition and Q-scaling. direct_sum requires equal ambient conductor
// and epsilon; lift_witt relabels the ambient conductor (a free operation).
WittElement direct_sum(const WittElement& a, const WittElement& b);
WittElement scale(const WittElement& a, const Rational& r);
WittElement lift_witt(const WittElement& a, long m2);

// Congruence diagonalization of a hermitian constant matrix; returns the
// diagonal entries (each conjugation-fixed, zeros iff rank-deficient). The
// result may live in Q(zeta_lcm(m,4)) when an isotropic diagonal forces the
// zeta_4 pivot combination.
std::vector<CyclotomicNumber> diagonalize_constant(const MatC& gram);

// Sylvester signature of a constant nonsingular form under rho; skew forms
// (eps = -1) are twisted by the square root of -1 that rho maps to +i.
int signature_constant(const HermitianForm& f, const Embedding& rho, const Budget& budget = Budget{});

// Signature of an already-evaluated epsilon-hermitian constant matrix at the
// identity embedding of its conductor. Throws SingularFormError on singular
// input.
int signature_evaluated(const MatC& a, long conductor, int epsilon, const Budget& budget = Budget{});

// signature_constant at every embedding in G_0, in deterministic order.
std::vector<std::pair<Embedding, int>> signature_vector(const HermitianForm& f,
                                                        const Budget& budget = Budget{});

// A constant form reinterpreted over F(t).
HermitianForm extend_constant(const HermitianForm& f);

/// (V, theta, f): an isometry f of a constant nonsingular form with both f
/// and f - 1 invertible.
class IsometryTriple {
 public:
  IsometryTriple(long m, int epsilon, MatC theta, MatC f);

  long conductor() const { return m_; }
  int epsilon() const { return eps_; }
  Eigen::Index dim() const { return theta_.rows(); }
  const MatC& theta() const { return theta_; }
  const MatC& f() const { return f_; }

 private:
  long m_;
  int eps_;
  MatC theta_, f_;
};

// The fibered splitting: G(t) = (1 - t^{-1}) Theta_L + eps (1 - t) bar^T(Theta_L)
// with Theta_L = theta (1 - f)^{-1}. Requires triple.epsilon == -target_epsilon;
// the output is target_epsilon-hermitian, nonsingular, of the same rank.
HermitianForm split_form(const IsometryTriple& triple, int target_epsilon);

/// Supported p(t): either Phi_d over Q (d >= 2) or t - z for a root of unity
/// z != 1 in the coefficient field.
struct SupportedPoly {
  enum class Kind { CyclotomicPhi, LinearRootOfUnity };
  Kind kind = Kind::CyclotomicPhi;
  long d = 0;          // Phi_d
  CyclotomicNumber z;  // the root for t - z

  static SupportedPoly phi(long d);
  static SupportedPoly linear(const CyclotomicNumber& z);
  long degree() const;
  long base_conductor() const;  // conductor of F
  long fp_conductor() const;    // conductor of F_p = F[t, 1/t]/p(t)
  std::string describe() const;
};

// The trace-form correspondence, F_p-form -> triple (V_F, tr of theta, t-action).
IsometryTriple trace_form_rp(const HermitianForm& fp_form, const SupportedPoly& p);

// Inverse direction: kernel of p(f) with theta~(a,b) = sum_i theta(a, b t^i) t^{-i}.
HermitianForm triple_to_fp_form(const IsometryTriple& triple, const SupportedPoly& p);

// Entries of the F_p-form pushed through rho_z : sum a_i t^i -> rho(a_i) z^i.
// z must be a root of rho(p) on the unit circle, z != 1.
HermitianForm mu_component(const HermitianForm& fp_form, const SupportedPoly& p,
                           const Embedding& rho, const UnityPoint& z);

/// Ker(f - z) inside V tensored up to the compositum, with the trace form
/// restricted to it.
struct EigenComponent {
  UnityPoint z;
  long conductor = 1;
  MatC basis;       // columns span Ker(f - z)
  MatC restricted;  // conj_transpose(basis) * theta_tr * basis
};

EigenComponent sigma_component(const HermitianForm& fp_form, const SupportedPoly& p,
                               const Embedding& rho, const UnityPoint& z);

int signature_of_component(const EigenComponent& comp, int epsilon, const Budget& budget = Budget{});

// Random 2n x 2n form with an explicit half-rank isotropic block; class zero.
HermitianForm make_metabolic(int half_rank, long m, unsigned long seed, int epsilon = 1);

struct CanonicalBlock {
  UnityPoint z;  // != 1
  Rational r;
};

// r0 * <1>  (+)  sum_j r_j * (split 1x1 block with f = z_j); conductor
// lcm(4, orders of the z_j).
WittElement make_canonical(const Rational& r0, const std::vector<CanonicalBlock>& blocks);

}  // namespace wittsig

#endif
