#include "wittsig/forms.hpp"

#include <random>
#include <sstream>

#include "wittsig/errors.hpp"
#include "wittsig/interval.hpp"

namespace wittsig {

HermitianForm::HermitianForm(long m, int epsilon, MatR gram) : m_(m), eps_(epsilon), gram_(std::move(gram)) {
  if (eps_ != 1 && eps_ != -1) throw ValidationError("epsilon must be +1 or -1");
  if (gram_.rows() != gram_.cols()) throw ValidationError("gram matrix must be square");
  for (Eigen::Index i = 0; i < gram_.rows(); ++i)
    for (Eigen::Index j = 0; j < gram_.cols(); ++j) {
      if (m_ % gram_(i, j).conductor() != 0)
        throw ValidationError("gram entry conductor does not divide the form conductor");
      gram_(i, j) = lift_rf(gram_(i, j), m_);
    }
}

HermitianForm HermitianForm::constant(long m, int epsilon, const MatC& gram) {
  MatR g(gram.rows(), gram.cols());
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = 0; j < gram.cols(); ++j) g(i, j) = RationalFunction(gram(i, j));
  return HermitianForm(m, epsilon, std::move(g));
}

bool HermitianForm::is_constant() const {
  for (Eigen::Index i = 0; i < gram_.rows(); ++i)
    for (Eigen::Index j = 0; j < gram_.cols(); ++j)
      if (!gram_(i, j).is_constant()) return false;
  return true;
}

MatC HermitianForm::constant_matrix() const {
  MatC r(gram_.rows(), gram_.cols());
  for (Eigen::Index i = 0; i < gram_.rows(); ++i)
    for (Eigen::Index j = 0; j < gram_.cols(); ++j)
      r(i, j) = lift_to_compositum(gram_(i, j).constant_value(), m_);
  return r;
}

ValidationReport validate(const HermitianForm& f, bool check_nonsingular) {
  const MatR& g = f.gram();
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      RationalFunction expect = bar(g(j, i));
      if (f.epsilon() == -1) expect = -expect;
      if (!(g(i, j) == expect)) {
        std::ostringstream os;
        os << "hermitian symmetry violated at entry (" << (i + 1) << "," << (j + 1) << ")";
        return ValidationReport{false, os.str(), i, j};
      }
    }
  }
  if (check_nonsingular && !is_nonsingular(f))
    return ValidationReport{false, "form is singular (det = 0)", -1, -1};
  return ValidationReport{};
}

bool is_nonsingular(const HermitianForm& f) { return !det(f.gram()).is_zero(); }

void WittElement::add(HermitianForm form, Rational coeff) {
  if (form.epsilon() != eps_) throw ValidationError("summand epsilon mismatch");
  if (coeff == 0) return;
  m_ = lcm_long(m_, form.conductor());
  summands_.push_back(WittSummand{std::move(form), std::move(coeff)});
}

WittElement direct_sum(const WittElement& a, const WittElement& b) {
  if (a.conductor() != b.conductor()) throw ConductorMismatchError(a.conductor(), b.conductor());
  if (a.epsilon() != b.epsilon()) throw ValidationError("direct_sum: epsilon mismatch");
  WittElement r(a.conductor(), a.epsilon());
  for (const auto& s : a.summands()) r.add(s.form, s.coeff);
  for (const auto& s : b.summands()) r.add(s.form, s.coeff);
  return r;
}

WittElement scale(const WittElement& a, const Rational& r) {
  WittElement out(a.conductor(), a.epsilon());
  if (r == 0) return out;
  for (const auto& s : a.summands()) out.add(s.form, s.coeff * r);
  return out;
}

WittElement lift_witt(const WittElement& a, long m2) {
  if (m2 % a.conductor() != 0)
    throw ValidationError("lift_witt: conductor does not divide target");
  WittElement out(m2, a.epsilon());
  for (const auto& s : a.summands()) out.add(s.form, s.coeff);
  return out;
}

std::vector<CyclotomicNumber> diagonalize_constant(const MatC& gram) {
  const Eigen::Index n = gram.rows();
  if (n != gram.cols()) throw ValidationError("diagonalize_constant: non-square matrix");
  MatC a = gram;
  long m = 1;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m = lcm_long(m, a(i, j).conductor());
  a = lift_matrix(a, m);

  std::vector<CyclotomicNumber> diag;
  diag.reserve(static_cast<size_t>(n));
  for (Eigen::Index step = 0; step < n; ++step) {
    // Prefer an honest diagonal pivot.
    Eigen::Index p = -1;
    for (Eigen::Index i = step; i < n; ++i)
      if (!a(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) {
      // All-isotropic diagonal: make one via e_i + e_j, falling back to
      // e_i + zeta_4 e_j when the off-diagonal entry is purely imaginary.
      Eigen::Index bi = -1, bj = -1;
      for (Eigen::Index i = step; i < n && bi < 0; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (!a(i, j).is_zero()) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) {
        // The remaining block is identically zero.
        for (Eigen::Index i = step; i < n; ++i) diag.push_back(CyclotomicNumber::zero(m));
        break;
      }
      CyclotomicNumber lambda = CyclotomicNumber::one(m);
      if ((a(bi, bj) + conjugate(a(bi, bj))).is_zero()) {
        const long m4 = lcm_long(m, 4);
        if (m4 != m) {
          m = m4;
          a = lift_matrix(a, m);
        }
        lambda = CyclotomicNumber::root_of_unity(m, m / 4);
      }
      // e_bi += lambda e_bj: row_bi += conj(lambda) row_bj, col_bi += lambda col_bj.
      const CyclotomicNumber lbar = conjugate(lambda);
      for (Eigen::Index s = 0; s < n; ++s) a(bi, s) += lbar * a(bj, s);
      for (Eigen::Index s = 0; s < n; ++s) a(s, bi) += lambda * a(s, bj);
      p = bi;
    }
    if (p != step) {
      a.row(p).swap(a.row(step));
      a.col(p).swap(a.col(step));
    }
    const CyclotomicNumber d = a(step, step);
    diag.push_back(d);
    const CyclotomicNumber dinv = inverse(d);
    for (Eigen::Index r = step + 1; r < n; ++r) {
      const CyclotomicNumber fcoef = a(step, r) * dinv;  // e_r -= fcoef * e_step
      if (fcoef.is_zero()) continue;
      const CyclotomicNumber fbar = conjugate(fcoef);
      for (Eigen::Index s = 0; s < n; ++s) a(r, s) -= fbar * a(step, s);
      for (Eigen::Index s = 0; s < n; ++s) a(s, r) -= fcoef * a(s, step);
    }
  }
  return diag;
}

namespace {

// For eps = -1 the signature is taken of sqrt(eps) * theta; the square root
// of -1 is chosen abstractly so that the (lifted) embedding maps it to +i.
struct TwistedConstant {
  MatC matrix;
  Embedding rho;
};

TwistedConstant twist_for_signature(const MatC& a, long m, int epsilon, const Embedding& rho) {
  if (epsilon == 1) return {a, rho};
  const long L = lcm_long(m, 4);
  const long k = unit_lift(rho.k, rho.m, L);
  const long s = k % 4;  // inverse of k mod 4 (1 or 3)
  const CyclotomicNumber u = CyclotomicNumber::root_of_unity(L, (L / 4) * s);
  MatC lifted = lift_matrix(a, L);
  for (Eigen::Index i = 0; i < lifted.rows(); ++i)
    for (Eigen::Index j = 0; j < lifted.cols(); ++j) lifted(i, j) = u * lifted(i, j);
  return {std::move(lifted), Embedding(L, k)};
}

}  // namespace

int signature_constant(const HermitianForm& f, const Embedding& rho, const Budget& budget) {
  if (!f.is_constant()) throw ValidationError("signature_constant: form is not constant");
  if (rho.m != f.conductor() && f.conductor() % rho.m != 0)
    throw ValidationError("signature_constant: embedding conductor mismatch");
  MatC a = f.constant_matrix();
  if (det(a).is_zero()) throw SingularFormError("signature_constant: singular form");
  TwistedConstant tw = twist_for_signature(a, f.conductor(), f.epsilon(), rho);
  int sig = 0;
  for (const CyclotomicNumber& dentry : diagonalize_constant(tw.matrix))
    sig += real_sign(dentry, tw.rho, budget);
  return sig;
}

int signature_evaluated(const MatC& a, long conductor, int epsilon, const Budget& budget) {
  TwistedConstant tw = twist_for_signature(a, conductor, epsilon, identity_embedding(conductor));
  int sig = 0;
  for (const CyclotomicNumber& dentry : diagonalize_constant(tw.matrix)) {
    const int s = real_sign(dentry, tw.rho, budget);
    if (s == 0) throw SingularFormError("evaluated form is singular at this point");
    sig += s;
  }
  return sig;
}

std::vector<std::pair<Embedding, int>> signature_vector(const HermitianForm& f, const Budget& budget) {
  std::vector<std::pair<Embedding, int>> out;
  for (const Embedding& rho : embeddings_G0(f.conductor()))
    out.emplace_back(rho, signature_constant(f, rho, budget));
  return out;
}

HermitianForm extend_constant(const HermitianForm& f) {
  if (!f.is_constant()) throw ValidationError("extend_constant: form is not constant");
  return f;
}

IsometryTriple::IsometryTriple(long m, int epsilon, MatC theta, MatC f)
    : m_(m), eps_(epsilon), theta_(std::move(theta)), f_(std::move(f)) {
  if (eps_ != 1 && eps_ != -1) throw ValidationError("epsilon must be +1 or -1");
  const Eigen::Index n = theta_.rows();
  if (theta_.cols() != n || f_.rows() != n || f_.cols() != n)
    throw ValidationError("IsometryTriple: dimension mismatch");
  theta_ = lift_matrix(theta_, m_);
  f_ = lift_matrix(f_, m_);
  MatC expect = conj_transpose(theta_);
  if (eps_ == -1) expect = MatC(-expect);
  if (!mats_equal(expect, theta_)) throw ValidationError("IsometryTriple: theta is not epsilon-hermitian");
  if (det(theta_).is_zero()) throw ValidationError("IsometryTriple: theta is singular");
  if (det(f_).is_zero()) throw ValidationError("IsometryTriple: f is not invertible");
  MatC fmi = f_ - identity_matc(n, m_);
  if (det(fmi).is_zero())
    throw ValidationError("IsometryTriple: (f - 1) is singular (triple is not fibered)");
  if (!mats_equal(MatC(conj_transpose(f_) * theta_ * f_), theta_))
    throw ValidationError("IsometryTriple: f is not an isometry of theta");
}

HermitianForm split_form(const IsometryTriple& triple, int target_epsilon) {
  if (target_epsilon != 1 && target_epsilon != -1)
    throw ValidationError("epsilon must be +1 or -1");
  if (triple.epsilon() != -target_epsilon)
    throw ValidationError("split_form: triple epsilon must be the negative of the target epsilon");
  const long m = triple.conductor();
  const Eigen::Index n = triple.dim();
  const MatC M = gauss_inverse(MatC(identity_matc(n, m) - triple.f()));
  const MatC theta_l = triple.theta() * M;

  LaurentPoly one_minus_tinv(m), one_minus_t(m);
  one_minus_tinv.set_term(0, CyclotomicNumber::one(m));
  one_minus_tinv.set_term(-1, -CyclotomicNumber::one(m));
  one_minus_t.set_term(0, CyclotomicNumber::one(m));
  one_minus_t.set_term(1, -CyclotomicNumber::one(m));

  MatR g(n, n);
  const Rational e(target_epsilon);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      LaurentPoly term = theta_l(i, j) * one_minus_tinv + e * (conjugate(theta_l(j, i)) * one_minus_t);
      g(i, j) = RationalFunction(term);
    }
  HermitianForm out(m, target_epsilon, std::move(g));
  ValidationReport rep = validate(out);
  if (!rep.ok) throw ConsistencyError("split_form produced a non-hermitian form: " + rep.message);
  if (!is_nonsingular(out)) throw ConsistencyError("split_form produced a singular form");
  return out;
}

SupportedPoly SupportedPoly::phi(long d) {
  if (d < 2) throw UnsupportedPolynomialError("Phi_1 = t - 1 is excluded; need d >= 2");
  SupportedPoly p;
  p.kind = Kind::CyclotomicPhi;
  p.d = d;
  return p;
}

SupportedPoly SupportedPoly::linear(const CyclotomicNumber& z) {
  SupportedPoly p;
  p.kind = Kind::LinearRootOfUnity;
  p.z = z;
  const long m = z.conductor();
  const long ord = lcm_long(2, m);
  CyclotomicNumber pw = CyclotomicNumber::one(m);
  for (long i = 0; i < ord; ++i) pw *= z;
  if (!(pw == CyclotomicNumber::one(m)))
    throw UnsupportedPolynomialError("t - z is only supported for roots of unity z");
  if (z == CyclotomicNumber::one(m))
    throw UnsupportedPolynomialError("t - 1 is excluded from the supported family");
  return p;
}

long SupportedPoly::degree() const {
  return kind == Kind::CyclotomicPhi ? conductor_data(d).phi : 1;
}

long SupportedPoly::base_conductor() const {
  return kind == Kind::CyclotomicPhi ? 1 : z.conductor();
}

long SupportedPoly::fp_conductor() const {
  return kind == Kind::CyclotomicPhi ? d : z.conductor();
}

std::string SupportedPoly::describe() const {
  if (kind == Kind::CyclotomicPhi) return "Phi_" + std::to_string(d);
  return "t - z over conductor " + std::to_string(z.conductor());
}

IsometryTriple trace_form_rp(const HermitianForm& fp_form, const SupportedPoly& p) {
  if (!fp_form.is_constant())
    throw ValidationError("trace_form_rp: the F_p-form must have constant entries");
  if (p.kind == SupportedPoly::Kind::LinearRootOfUnity) {
    const long m = lcm_long(fp_form.conductor(), p.z.conductor());
    const Eigen::Index n = fp_form.rank();
    MatC f = identity_matc(n, m);
    const CyclotomicNumber zl = lift_to_compositum(p.z, m);
    for (Eigen::Index i = 0; i < n; ++i) f(i, i) = zl;
    return IsometryTriple(m, fp_form.epsilon(), lift_matrix(fp_form.constant_matrix(), m), f);
  }
  const long d = p.d;
  if (d % fp_form.conductor() != 0)
    throw ValidationError("trace_form_rp: form conductor incompatible with Phi_d");
  const long phi = conductor_data(d).phi;
  const Eigen::Index n = fp_form.rank();
  const Eigen::Index N = n * phi;
  const MatC theta = lift_matrix(fp_form.constant_matrix(), d);

  // Basis e_a zeta^i, index a*phi + i; theta_tr[(a,i),(b,j)] = tr(theta_ab zeta^{j-i}).
  MatC tr_form = MatC::Zero(N, N);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (long i = 0; i < phi; ++i)
        for (long j = 0; j < phi; ++j) {
          const CyclotomicNumber v = theta(a, b) * CyclotomicNumber::root_of_unity(d, j - i);
          tr_form(a * phi + i, b * phi + j) = CyclotomicNumber(field_trace(v));
        }

  // t acts as multiplication by zeta: the companion matrix of Phi_d per block.
  const auto& cd = conductor_data(d);
  MatC f = MatC::Zero(N, N);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (long i = 0; i + 1 < phi; ++i) f(a * phi + i + 1, a * phi + i) = CyclotomicNumber(Rational(1));
    for (long i = 0; i < phi; ++i)
      f(a * phi + i, a * phi + phi - 1) = CyclotomicNumber(-cd.min_poly[static_cast<size_t>(i)]);
  }
  return IsometryTriple(1, fp_form.epsilon(), std::move(tr_form), std::move(f));
}

namespace {

// Greedy extraction of an F_p-basis from kernel columns: w is accepted when
// it is outside the F-span of { f^i w_prev }.
MatC fp_basis_from_kernel(const MatC& kernel, const MatC& f, long deg, Eigen::Index want) {
  const Eigen::Index N = kernel.rows();
  MatC span(N, 0);
  MatC basis(N, want);
  Eigen::Index have = 0;
  for (Eigen::Index c = 0; c < kernel.cols() && have < want; ++c) {
    VecC v = kernel.col(c);
    // rank test: does v lie in the current span?
    MatC test(N, span.cols() + 1);
    if (span.cols() > 0) test.leftCols(span.cols()) = span;
    test.col(span.cols()) = v;
    if (kernel_basis(test).cols() > 0) continue;  // dependent
    basis.col(have) = v;
    ++have;
    MatC grown(N, span.cols() + deg);
    if (span.cols() > 0) grown.leftCols(span.cols()) = span;
    VecC w = v;
    for (long i = 0; i < deg; ++i) {
      grown.col(span.cols() + i) = w;
      if (i + 1 < deg) w = f * w;
    }
    span = std::move(grown);
  }
  if (have != want)
    throw ConsistencyError("p(f) does not act with the claimed kernel dimensions");
  return basis;
}

}  // namespace

HermitianForm triple_to_fp_form(const IsometryTriple& triple, const SupportedPoly& p) {
  if (p.kind == SupportedPoly::Kind::LinearRootOfUnity) {
    const long m = lcm_long(triple.conductor(), p.z.conductor());
    const Eigen::Index n = triple.dim();
    const CyclotomicNumber zl = lift_to_compositum(p.z, m);
    MatC shifted = lift_matrix(triple.f(), m);
    for (Eigen::Index i = 0; i < n; ++i) shifted(i, i) -= zl;
    const MatC kernel = kernel_basis(shifted);
    const MatC theta = lift_matrix(triple.theta(), m);
    const MatC restricted = conj_transpose(kernel) * theta * kernel;
    return HermitianForm::constant(m, triple.epsilon(), restricted);
  }
  if (triple.conductor() != 1)
    throw ValidationError("triple_to_fp_form: Phi_d requires a triple over Q");
  const long d = p.d;
  const long phi = conductor_data(d).phi;
  const auto& cd = conductor_data(d);
  const Eigen::Index N = triple.dim();

  // Phi_d(f) by Horner.
  MatC pf = MatC::Zero(N, N);
  for (Eigen::Index i = 0; i < N; ++i) pf(i, i) = CyclotomicNumber(cd.min_poly[static_cast<size_t>(phi)]);
  for (long deg = phi - 1; deg >= 0; --deg) {
    pf = MatC(pf * triple.f());
    for (Eigen::Index i = 0; i < N; ++i) pf(i, i) += CyclotomicNumber(cd.min_poly[static_cast<size_t>(deg)]);
  }
  const MatC kernel = kernel_basis(pf);
  if (kernel.cols() % phi != 0)
    throw ConsistencyError("p(f) does not act with the claimed kernel dimensions");
  const Eigen::Index n = kernel.cols() / phi;
  if (n == 0) return HermitianForm::constant(d, triple.epsilon(), MatC(0, 0));
  const MatC w = fp_basis_from_kernel(kernel, triple.f(), phi, n);

  // theta~(w_a, w_b) = (deg p / d) * sum_{i<d} theta(w_a, f^i w_b) zeta_d^{-i},
  // summed over a full period of the t-action so the result is an honest
  // F_p-sesquilinear hermitian form (t has order d on Ker Phi_d(f)).
  MatC out = MatC::Zero(n, n);
  const CyclotomicNumber scale_factor(Rational(phi, d));
  for (Eigen::Index b = 0; b < n; ++b) {
    VecC fv = w.col(b);
    for (long i = 0; i < d; ++i) {
      for (Eigen::Index a = 0; a < n; ++a) {
        CyclotomicNumber s(Rational(0));
        for (Eigen::Index r = 0; r < N; ++r) {
          // conj is trivial over Q
          CyclotomicNumber row(Rational(0));
          for (Eigen::Index c = 0; c < N; ++c) row += triple.theta()(r, c) * fv(c);
          s += w(r, a) * row;
        }
        out(a, b) += scale_factor * s * CyclotomicNumber::root_of_unity(d, -i);
      }
      if (i + 1 < d) fv = triple.f() * fv;
    }
  }
  HermitianForm result = HermitianForm::constant(d, triple.epsilon(), out);
  ValidationReport rep = validate(result);
  if (!rep.ok)
    throw ConsistencyError("triple_to_fp_form produced a non-hermitian form: " + rep.message);
  return result;
}

namespace {

void check_root_of_p(const SupportedPoly& p, const Embedding& rho, const UnityPoint& z) {
  if (z.is_one())
    throw UnsupportedPolynomialError("z = 1 requested, but t - 1 is excluded: " + p.describe() +
                                     " has no root 1");
  if (p.kind == SupportedPoly::Kind::CyclotomicPhi) {
    if (rho.m != 1) throw ValidationError("embedding must be the identity of Q for Phi_d");
    if (z.order() != p.d)
      throw UnsupportedPolynomialError("z is not a root of Phi_" + std::to_string(p.d));
  } else {
    const long m = lcm_long(rho.m, lcm_long(p.z.conductor(), z.order()));
    const CyclotomicNumber image = galois_apply(lift_to_compositum(p.z, m), unit_lift(rho.k, rho.m, m));
    if (!(image == z.value(m)))
      throw UnsupportedPolynomialError("z is not the root of rho(t - z0)");
  }
}

}  // namespace

HermitianForm mu_component(const HermitianForm& fp_form, const SupportedPoly& p,
                           const Embedding& rho, const UnityPoint& z) {
  if (!fp_form.is_constant())
    throw ValidationError("mu_component: the F_p-form must have constant entries");
  check_root_of_p(p, rho, z);
  if (p.kind == SupportedPoly::Kind::CyclotomicPhi) {
    const long d = p.d;
    MatC a = lift_matrix(fp_form.constant_matrix(), d);
    return HermitianForm::constant(d, fp_form.epsilon(), galois_matrix(a, z.j));
  }
  const long m = lcm_long(fp_form.conductor(), z.order());
  MatC a = lift_matrix(fp_form.constant_matrix(), m);
  return HermitianForm::constant(m, fp_form.epsilon(),
                                 galois_matrix(a, unit_lift(rho.k, rho.m, m)));
}

EigenComponent sigma_component(const HermitianForm& fp_form, const SupportedPoly& p,
                               const Embedding& rho, const UnityPoint& z) {
  check_root_of_p(p, rho, z);
  const IsometryTriple triple = trace_form_rp(fp_form, p);
  EigenComponent comp;
  comp.z = z;
  if (p.kind == SupportedPoly::Kind::CyclotomicPhi) {
    const long d = p.d;
    comp.conductor = d;
    MatC shifted = lift_matrix(triple.f(), d);
    const CyclotomicNumber zv = z.value(d);
    for (Eigen::Index i = 0; i < shifted.rows(); ++i) shifted(i, i) -= zv;
    comp.basis = kernel_basis(shifted);
    if (comp.basis.cols() != fp_form.rank())
      throw ConsistencyError("sigma_component: kernel dimension differs from the F_p-rank");
    const MatC theta = lift_matrix(triple.theta(), d);
    comp.restricted = conj_transpose(comp.basis) * theta * comp.basis;
    return comp;
  }
  const long m = lcm_long(triple.conductor(), z.order());
  comp.conductor = m;
  const long k = unit_lift(rho.k, rho.m, m);
  MatC f_emb = galois_matrix(lift_matrix(triple.f(), m), k);
  const CyclotomicNumber zv = z.value(m);
  for (Eigen::Index i = 0; i < f_emb.rows(); ++i) f_emb(i, i) -= zv;
  comp.basis = kernel_basis(f_emb);
  if (comp.basis.cols() != fp_form.rank())
    throw ConsistencyError("sigma_component: kernel dimension differs from the F_p-rank");
  const MatC theta = galois_matrix(lift_matrix(triple.theta(), m), k);
  comp.restricted = conj_transpose(comp.basis) * theta * comp.basis;
  return comp;
}

int signature_of_component(const EigenComponent& comp, int epsilon, const Budget& budget) {
  HermitianForm f = HermitianForm::constant(comp.conductor, epsilon, comp.restricted);
  return signature_constant(f, identity_embedding(comp.conductor), budget);
}

namespace {

LaurentPoly random_laurent(std::mt19937_64& rng, long m) {
  std::uniform_int_distribution<int> num_dist(-3, 3);
  std::uniform_int_distribution<int> den_dist(1, 2);
  LaurentPoly p(m);
  for (long e = -1; e <= 1; ++e) {
    const int nu = num_dist(rng);
    const int de = den_dist(rng);
    if (nu != 0) p.set_term(e, CyclotomicNumber(Rational(nu, de)) * CyclotomicNumber::one(m));
  }
  return p;
}

}  // namespace

HermitianForm make_metabolic(int half_rank, long m, unsigned long seed, int epsilon) {
  if (half_rank < 1) throw ValidationError("make_metabolic: half rank must be >= 1");
  const Eigen::Index n = half_rank;
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<unsigned long>(m) * 7919ULL +
                      static_cast<unsigned long>(half_rank));
  MatR x(n, n);
  for (int attempt = 0;; ++attempt) {
    if (attempt > 200) throw ConsistencyError("make_metabolic: could not draw an invertible block");
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) x(i, j) = RationalFunction(random_laurent(rng, m));
    if (!det(x).is_zero()) break;
  }
  MatR z(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) z(i, j) = RationalFunction(random_laurent(rng, m));
  MatR y = epsilon == 1 ? MatR(z + bar_transpose(z)) : MatR(z - bar_transpose(z));

  MatR g(2 * n, 2 * n);  // entries default to zero
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      RationalFunction bx = bar(x(j, i));
      g(i, n + j) = x(i, j);
      g(n + i, j) = epsilon == 1 ? bx : -bx;
      g(n + i, n + j) = y(i, j);
    }
  HermitianForm out(m, epsilon, std::move(g));
  ValidationReport rep = validate(out);
  if (!rep.ok) throw ConsistencyError("make_metabolic produced a non-hermitian form");
  return out;
}

WittElement make_canonical(const Rational& r0, const std::vector<CanonicalBlock>& blocks) {
  long m = 4;
  for (const auto& b : blocks) {
    if (b.z.is_one()) throw ValidationError("make_canonical: z = 1 is excluded");
    m = lcm_long(m, b.z.order());
  }
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = i + 1; j < blocks.size(); ++j)
      if (blocks[i].z == blocks[j].z)
        throw ValidationError("make_canonical: block points must be distinct");

  WittElement w(m, 1);
  if (r0 != 0) {
    MatC one(1, 1);
    one(0, 0) = CyclotomicNumber(Rational(1));
    w.add(HermitianForm::constant(1, 1, one), r0);
  }
  for (const auto& b : blocks) {
    if (b.r == 0) continue;
    const long mb = lcm_long(4, b.z.order());
    MatC theta(1, 1), f(1, 1);
    theta(0, 0) = CyclotomicNumber::root_of_unity(mb, mb / 4);  // the skew line <i>
    f(0, 0) = b.z.value(mb);
    IsometryTriple triple(mb, -1, std::move(theta), std::move(f));
    w.add(split_form(triple, 1), b.r);
  }
  return w;
}

}  // namespace wittsig
