#include "latdeform/deformation.hpp"

#include "latdeform/errors.hpp"

namespace latdeform {

RatMat hat_laplacian(int i, int j, const IntVec& sigma) {
  int nv = static_cast<int>(sigma.size());
  if (i == j) throw Error("hat_laplacian: i == j");
  if (i < 0 || j < 0 || i >= nv || j >= nv) {
    throw Error("hat_laplacian: index out of range");
  }
  RatMat q(nv, nv);
  Rat wi = make_rat(1, sigma[i]);
  Rat wj = make_rat(1, sigma[j]);
  q.at(i, i) = wi;
  q.at(i, j) = -wi;
  q.at(j, j) = wj;
  q.at(j, i) = -wj;
  return q;
}

int choose_j(const IntVec& x, int i, const IntVec& sigma) {
  int nv = static_cast<int>(sigma.size());
  if (static_cast<int>(x.size()) != nv || i < 0 || i >= nv) {
    throw Error("choose_j: shape mismatch");
  }
  bool zero = true;
  bool full = true;
  for (int k = 0; k < nv; ++k) {
    if (x[k] < 0 || x[k] > sigma[k]) throw Error("choose_j: x outside box");
    if (x[k] != 0) zero = false;
    if (x[k] != sigma[k]) full = false;
  }
  if (zero || full) throw Error("choose_j: x must differ from 0 and sigma");
  Rat ri = make_rat(x[i], sigma[i]);
  for (int j = 0; j < nv; ++j) {
    if (j == i) continue;
    if (make_rat(x[j], sigma[j]) != ri) return j;
  }
  throw Error("choose_j: all ratios equal");
}

namespace {

// Odometer over the full box 0 <= y <= sigma.
template <typename F>
void scan_full_box(const IntVec& sigma, F&& f) {
  size_t n = sigma.size();
  IntVec y(n, Int(0));
  for (;;) {
    f(y);
    size_t k = n;
    bool advanced = false;
    while (k > 0) {
      --k;
      if (y[k] < sigma[k]) {
        ++y[k];
        for (size_t j = k + 1; j < n; ++j) y[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

int sign_of(const Rat& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

void certify_step(const RatMat& q, const RatMat& q_next,
                  const IntVec& sigma) {
  // Sign preservation over the whole firing box.
  scan_full_box(sigma, [&](const IntVec& y) {
    RatVec a = transpose_apply(q, y);
    RatVec b = transpose_apply(q_next, y);
    for (size_t k = 0; k < a.size(); ++k) {
      if (a[k] != 0 && sign_of(a[k]) != sign_of(b[k])) {
        throw Error("deformation: sign preservation violated");
      }
    }
  });
  // Sigma stays in the left kernel.
  for (int jcol = 0; jcol < q_next.cols(); ++jcol) {
    Rat s = 0;
    for (int irow = 0; irow < q_next.rows(); ++irow) {
      s += Rat(sigma[irow]) * q_next.at(irow, jcol);
    }
    if (s != 0) throw Error("deformation: sigma left kernel violated");
  }
  if (!cone_membership(q_next, sigma)) {
    throw Error("deformation: output left the Laplacian cone");
  }
}

}  // namespace

Rat epsilon_bound(const RatMat& q, const RatMat& q_hat, const IntVec& sigma,
                  const Rat& delta, int i, int j) {
  if (delta <= 0) throw Error("epsilon_bound: delta must be positive");
  int nv = q.rows();
  if (q.cols() != nv || q_hat.rows() != nv || q_hat.cols() != nv ||
      static_cast<int>(sigma.size()) != nv) {
    throw Error("epsilon_bound: shape mismatch");
  }
  std::optional<Rat> ratio_min;
  scan_full_box(sigma, [&](const IntVec& y) {
    RatVec a = transpose_apply(q, y);
    RatVec h = transpose_apply(q_hat, y);
    for (int k : {i, j}) {
      if (sign_of(a[k]) * sign_of(h[k]) < 0) {
        Rat ratio = Rat(-a[k] / h[k]);
        if (!ratio_min || ratio < *ratio_min) ratio_min = ratio;
      }
    }
  });
  Rat norm1 = 0;
  for (int a = 0; a < nv; ++a) {
    for (int b = 0; b < nv; ++b) norm1 += abs(q_hat.at(a, b));
  }
  Rat prod = 1;
  for (const Int& s : sigma) prod *= Rat(s);
  Rat delta_term = Rat(delta / (norm1 * Rat(nv) * prod));
  Rat bound = ratio_min && *ratio_min < delta_term ? *ratio_min : delta_term;
  Rat eps = Rat(bound / 2);
  if (eps <= 0) throw Error("epsilon_bound: nonpositive bound");
  return eps;
}

IntegralScale integral_scale(const RatMat& q) {
  Int lambda = 1;
  for (int i = 0; i < q.rows(); ++i) {
    for (int j = 0; j < q.cols(); ++j) {
      lambda = int_lcm(lambda, q.at(i, j).get_den());
    }
  }
  IntMat scaled(q.rows(), q.cols());
  for (int i = 0; i < q.rows(); ++i) {
    for (int j = 0; j < q.cols(); ++j) {
      Rat v = Rat(q.at(i, j) * Rat(lambda));
      scaled.at(i, j) = v.get_num();
    }
  }
  return IntegralScale{lambda, scaled};
}

DistanceBound distance_upper_bound(const RatMat& b1, const RatMat& b2) {
  if (b1.rows() != b2.rows() || b1.cols() != b2.cols()) {
    throw Error("distance_upper_bound: shape mismatch");
  }
  Rat sq = 0;
  for (int i = 0; i < b1.rows(); ++i) {
    for (int j = 0; j < b1.cols(); ++j) {
      Rat d = Rat(b1.at(i, j) - b2.at(i, j));
      sq += d * d;
    }
  }
  return DistanceBound{sq, sqrt_decimal(sq)};
}

ForcedStep deform_step_forced(const RatMat& q, const IntVec& sigma, int i,
                              int j, const Rat& delta) {
  RatMat qh = hat_laplacian(i, j, sigma);
  Rat eps = epsilon_bound(q, qh, sigma, delta, i, j);
  RatMat q_next = mat_add(q, mat_scale(eps, qh));
  certify_step(q, q_next, sigma);
  return ForcedStep{q_next, qh, eps};
}

namespace {

RatMat designated_rows(const RatMat& q) {
  RatMat b(q.rows() - 1, q.cols());
  for (int i = 1; i < q.rows(); ++i) {
    for (int j = 0; j < q.cols(); ++j) b.at(i - 1, j) = q.at(i, j);
  }
  return b;
}

DeformationResult finish(const RatMat& q0, const RatMat& q_gen,
                         const IntVec& sigma,
                         std::vector<DeformationStep> steps,
                         const Rat& delta) {
  DeformationResult r;
  r.q0 = q0;
  r.q_gen = q_gen;
  r.sigma = sigma;
  IntegralScale sc = integral_scale(q_gen);
  r.lambda = sc.lambda;
  r.scaled_gen = sc.scaled;
  r.steps = std::move(steps);
  r.distance = distance_upper_bound(designated_rows(q0),
                                    designated_rows(q_gen));
  int nv = q0.rows();
  Rat drift_cap = Rat(delta / Rat(nv));
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      if (abs(Rat(q_gen.at(i, j) - q0.at(i, j))) > drift_cap) {
        throw Error("deformation: entry drift exceeds delta/(n+1)");
      }
    }
  }
  if (r.distance.norm_sq > Rat(delta * delta)) {
    throw Error("deformation: distance bound exceeds delta");
  }
  if (!is_generic(q_gen, sigma)) {
    throw NonGenericResult("deformation finished on a non-generic matrix");
  }
  return r;
}

}  // namespace

DeformationResult deform_presentation(const RatMat& q0, const IntVec& sigma,
                                      const Rat& delta) {
  if (delta <= 0) throw Error("deform: delta must be positive");
  if (!cone_membership(q0, sigma)) {
    throw Error("deform: input is not a presentation Laplacian");
  }
  Rat prod = 1;
  for (const Int& s : sigma) prod *= Rat(s);
  Rat cap = Rat(prod * Rat(q0.rows()));
  RatMat q = q0;
  std::vector<DeformationStep> steps;
  while (auto viol = genericity_violation(q, sigma)) {
    if (Rat(static_cast<int>(steps.size())) >= cap) {
      throw Error("deform: iteration bound exceeded");
    }
    int i = viol->i;
    int j = choose_j(viol->x, i, sigma);
    RatMat qh = hat_laplacian(i, j, sigma);
    Rat eps = epsilon_bound(q, qh, sigma, delta, i, j);
    RatMat q_next = mat_add(q, mat_scale(eps, qh));
    certify_step(q, q_next, sigma);
    RatVec progressed = transpose_apply(q_next, viol->x);
    if (progressed[i] == 0) {
      throw Error("deformation: strict progress violated");
    }
    DeformationStep step;
    step.r = static_cast<int>(steps.size());
    step.q_r = q;
    step.lambda_r = integral_scale(q).lambda;
    step.x = viol->x;
    step.i = i;
    step.j = j;
    step.epsilon = eps;
    steps.push_back(step);
    q = q_next;
  }
  return finish(q0, q, sigma, std::move(steps), delta);
}

DeformationResult deform(const Lattice& l, const Rat& delta) {
  LaplacianPresentation p = laplacianize(l);
  return deform_presentation(to_rat(p.q), p.sigma, delta);
}

std::vector<DeformationResult> stable_deformation_sequence_presentation(
    const RatMat& q0, const IntVec& sigma, const Rat& delta, int levels) {
  if (levels < 2) throw Error("stable_deformation_sequence: levels < 2");
  std::vector<DeformationResult> out;
  out.push_back(deform_presentation(q0, sigma, delta));
  const std::vector<DeformationStep> tmpl = out[0].steps;
  Rat scale = 1;
  for (int lev = 1; lev < levels; ++lev) {
    scale /= 2;
    RatMat q = q0;
    std::vector<DeformationStep> steps;
    for (const DeformationStep& t : tmpl) {
      auto viol = genericity_violation(q, sigma);
      if (!viol || viol->x != t.x || viol->i != t.i) {
        throw Error("stable_deformation_sequence: template mismatch at level " +
                    std::to_string(lev));
      }
      int j = choose_j(viol->x, viol->i, sigma);
      if (j != t.j) {
        throw Error("stable_deformation_sequence: template mismatch at level " +
                    std::to_string(lev));
      }
      RatMat qh = hat_laplacian(t.i, j, sigma);
      Rat eps = Rat(t.epsilon * scale);
      RatMat q_next = mat_add(q, mat_scale(eps, qh));
      certify_step(q, q_next, sigma);
      RatVec progressed = transpose_apply(q_next, t.x);
      if (progressed[t.i] == 0) {
        throw Error("stable_deformation_sequence: template mismatch at level " +
                    std::to_string(lev));
      }
      DeformationStep step = t;
      step.q_r = q;
      step.lambda_r = integral_scale(q).lambda;
      step.epsilon = eps;
      steps.push_back(step);
      q = q_next;
    }
    if (genericity_violation(q, sigma)) {
      throw Error("stable_deformation_sequence: level " +
                  std::to_string(lev) + " did not reach genericity");
    }
    out.push_back(finish(q0, q, sigma, std::move(steps), delta));
  }
  return out;
}

std::vector<DeformationResult> stable_deformation_sequence(
    const Lattice& l, const Rat& delta, int levels) {
  LaplacianPresentation p = laplacianize(l);
  return stable_deformation_sequence_presentation(to_rat(p.q), p.sigma,
                                                  delta, levels);
}

}  // namespace latdeform
