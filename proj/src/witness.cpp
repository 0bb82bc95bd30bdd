// witness.cpp
#include "irrbase/witness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "irrbase/stab_chain.hpp"

namespace irrbase {

namespace {

void validate_params(int d, int m, int q) {
  if (d < 2) throw std::invalid_argument("witness chain: need d >= 2");
  if (m < 1 || m > d - 1) throw std::invalid_argument("witness chain: need 1 <= m <= d-1");
  if (!prime_power_split(q)) throw std::invalid_argument("witness chain: q must be a prime power");
}

std::vector<Fq> basis_vector(const Field& F, int d, int i) {  // e_i, 1-based
  std::vector<Fq> v(d, F.zero());
  v[i - 1] = F.one();
  return v;
}

std::vector<Fq> sum_vector(const Field& F, int d, int i, int j) {  // e_i + e_j
  std::vector<Fq> v(d, F.zero());
  v[i - 1] = F.add(v[i - 1], F.one());
  v[j - 1] = F.add(v[j - 1], F.one());
  return v;
}

Subspace span_of(const Field& F, const std::vector<std::vector<Fq>>& vecs, int d) {
  FqMatrix rows(F, (int)vecs.size(), d);
  for (int r = 0; r < (int)vecs.size(); ++r)
    for (int c = 0; c < d; ++c) rows.at(r, c) = vecs[r][c];
  return Subspace::span(rows);
}

WitnessCertificate make_certificate(const Field& F, int d, int x, int y) {
  WitnessCertificate cert;
  cert.x = x;
  cert.y = y;
  if (x != y) {
    cert.mat = transvection(F, d, x, y);
  } else {
    cert.mat = mat_identity(F, d);
    cert.mat.at(x - 1, x - 1) = F.mul_generator();
  }
  return cert;
}

std::string cert_label(const WitnessCertificate& c) {
  std::ostringstream os;
  if (c.x != c.y)
    os << "T(" << c.x << "," << c.y << ")";
  else
    os << "D(" << c.x << ")";
  return os.str();
}

void validate_action_match(const WitnessChain& chain, const ActionTable& action) {
  if (action.kind != ActionKind::points || action.group_kind != GroupKind::pgl ||
      action.d != chain.d || action.m != chain.m || action.field->q() != chain.q)
    throw std::invalid_argument("witness verification: action does not match chain parameters");
}

std::vector<int> chain_point_indices(const WitnessChain& chain, const ActionTable& action,
                                     int first_k, int last_k) {
  std::vector<int> pts;
  for (int k = first_k; k <= last_k; ++k)
    pts.push_back(action.index_of(chain.steps[k - 1].omega));
  return pts;
}

}  // namespace

std::pair<int, int> irredundant_base_bounds(int d, int m, int q) {
  validate_params(d, m, q);
  int upper = (m + 1) * d - 2 * m + 1;
  int lower = (q == 2) ? m * d - m * m + 1 : (m + 1) * d - m * m;
  return {lower, upper};
}

WitnessChain build_witness_chain(int d, int m, int q) {
  validate_params(d, m, q);
  auto pf = prime_power_split(q);
  WitnessChain chain;
  chain.d = d;
  chain.m = m;
  chain.q = q;
  chain.field = std::make_shared<const Field>(Field::make(pf->first, pf->second));
  const Field& F = *chain.field;

  const int total = m * d - m * m + d;
  chain.claimed_length = (q == 2) ? m * d - m * m + 1 : (m + 1) * d - m * m;

  for (int k = 1; k <= total; ++k) {
    WitnessStep step;
    step.k = k;
    if (k <= m + 1) {
      // { e_i : i in {1..m+1} \ {m+2-k} }
      for (int i = 1; i <= m + 1; ++i)
        if (i != m + 2 - k) step.vectors.push_back(basis_vector(F, d, i));
      if (k >= 2) step.certificate = make_certificate(F, d, m + 1, m + 2 - k);
    } else if (k <= m * d - m * m + 1) {
      // { e_i : i in {1..m, r_k} \ {s_k} }
      int r = (k - 2) / m + m + 1;
      int s = m - ((k - 2) % m);
      step.r = r;
      step.s = s;
      for (int i = 1; i <= m; ++i)
        if (i != s) step.vectors.push_back(basis_vector(F, d, i));
      step.vectors.push_back(basis_vector(F, d, r));
      step.certificate = make_certificate(F, d, r, s);
    } else if (k <= m * d - m * m + m + 1) {
      // { e_1 + e_t } u { e_i : i in {2..m+1} \ {t} }
      int t = k - m * d + m * m;
      step.t = t;
      step.vectors.push_back(sum_vector(F, d, 1, t));
      for (int i = 2; i <= m + 1; ++i)
        if (i != t) step.vectors.push_back(basis_vector(F, d, i));
      if (q > 2) step.certificate = make_certificate(F, d, t, t);
    } else {
      // { e_1 + e_t } u { e_i : i in {2..m} }
      int t = k - m * d + m * m;
      step.t = t;
      step.vectors.push_back(sum_vector(F, d, 1, t));
      for (int i = 2; i <= m; ++i) step.vectors.push_back(basis_vector(F, d, i));
      if (q > 2) step.certificate = make_certificate(F, d, t, t);
    }
    step.omega = span_of(F, step.vectors, d);
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

CheckReport verify_witness_certificates(const WitnessChain& chain) {
  CheckReport report;
  const int d = chain.d, m = chain.m, q = chain.q;
  const int total = m * d - m * m + d;
  const int claimed = (q == 2) ? m * d - m * m + 1 : (m + 1) * d - m * m;

  {
    std::ostringstream os;
    os << "steps=" << chain.steps.size() << " claimed=" << chain.claimed_length;
    report.add("chain-length",
               (int)chain.steps.size() == total && chain.claimed_length == claimed, os.str());
  }

  bool shapes = true;
  for (const auto& step : chain.steps)
    if ((int)step.vectors.size() != m || step.omega.dim() != m) shapes = false;
  report.add("step-shape", shapes, "every step spans an m-dimensional subspace");

  bool coverage = true;
  for (const auto& step : chain.steps) {
    bool want = step.k >= 2 && step.k <= chain.claimed_length;
    if (step.certificate.has_value() != want) coverage = false;
  }
  report.add("certificate-coverage", coverage,
             "certificates exactly on steps 2..claimed_length");

  for (const auto& step : chain.steps) {
    if (!step.certificate) continue;
    const auto& cert = *step.certificate;
    bool ok = mat_invertible(cert.mat);
    std::ostringstream os;
    os << cert_label(cert);
    if (!ok) os << " not invertible";
    for (int j = 1; ok && j < step.k; ++j) {
      if (!(subspace_image(chain.steps[j - 1].omega, cert.mat) == chain.steps[j - 1].omega)) {
        ok = false;
        os << " moves step " << j;
      }
    }
    if (ok && subspace_image(step.omega, cert.mat) == step.omega) {
      ok = false;
      os << " fixes its own step";
    }
    std::ostringstream name;
    name << "certificate-k" << step.k;
    report.add(name.str(), ok, os.str());
  }
  return report;
}

CheckReport verify_witness_descent(const WitnessChain& chain, const ActionTable& action) {
  validate_action_match(chain, action);
  CheckReport report;
  const int claimed = chain.claimed_length;
  std::vector<int> pts = chain_point_indices(chain, action, 1, claimed);
  PermGroup g = action.group();
  StabChain sc(g, pts);

  bool all_strict = true;
  for (int k = 1; k <= claimed; ++k) {
    bool strict = sc.transversal_size(k - 1) > 1;
    all_strict = all_strict && strict;
    std::ostringstream name, os;
    name << "descent-step-" << k;
    os << sc.level_order(k - 1).get_str() << " -> " << sc.level_order(k).get_str();
    report.add(name.str(), strict, os.str());
  }
  report.add("final-stabilizer-order", true, sc.level_order(claimed).get_str());
  {
    std::ostringstream os;
    os << "max irredundant base length >= " << claimed;
    report.add("irredundant-lower-bound", all_strict, os.str());
  }
  return report;
}

CheckReport check_witness_minimal_base(const WitnessChain& chain, const ActionTable& action) {
  validate_action_match(chain, action);
  CheckReport report;
  const int d = chain.d, m = chain.m, q = chain.q;
  const int lo = (q == 2) ? 2 : m + 1;
  const int hi = (q == 2) ? m * d - m * m + 1 : m * d - m * m + d;
  const int expected = (q == 2) ? m * d - m * m : (m + 1) * d - m * m - m;

  std::vector<int> pts = chain_point_indices(chain, action, lo, hi);
  {
    std::ostringstream os;
    os << "size=" << pts.size() << " expected=" << expected;
    report.add("tail-size", (int)pts.size() == expected, os.str());
  }

  PermGroup g = action.group();
  mpz_class full = StabChain(g, pts).level_order((int)pts.size());
  report.add("tail-is-base", full == 1, "pointwise stabilizer order " + full.get_str());

  bool minimal = true;
  std::ostringstream md;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) rest.push_back(pts[j]);
    mpz_class ord = StabChain(g, rest).level_order((int)rest.size());
    if (ord == 1) {
      minimal = false;
      md << (md.str().empty() ? "" : ", ") << "drop " << i + 1 << " stays a base";
    }
  }
  report.add("tail-removals-nontrivial", minimal,
             minimal ? "every removal leaves a nontrivial stabilizer" : md.str());

  bool claim = full == 1 && minimal && (int)pts.size() == expected;
  std::ostringstream os;
  os << "max minimal base size >= " << expected;
  report.add("max-minimal-lower-bound", claim, os.str());
  return report;
}

std::vector<int> invariant_algebra_dims(const std::vector<Subspace>& subspaces, const Field& F,
                                        int d) {
  for (const auto& u : subspaces) {
    if (u.ambient() != d) throw std::invalid_argument("invariant_algebra_dims: ambient mismatch");
    if (!(*u.basis.field == F))
      throw std::invalid_argument("invariant_algebra_dims: field mismatch");
  }
  std::vector<int> dims{d * d};
  std::vector<Fq> rows;  // constraint rows, d*d entries each
  int nrows = 0;
  for (const auto& u : subspaces) {
    const FqMatrix& B = u.basis;
    std::vector<int> pivots(B.rows);
    std::vector<bool> is_pivot(d, false);
    for (int j = 0; j < B.rows; ++j) {
      int p = 0;
      while (p < d && B.at(j, p) == F.zero()) ++p;
      pivots[j] = p;
      is_pivot[p] = true;
    }
    // u g lies in <B>  <=>  for every non-pivot column c:
    //   (u g)_c = sum_j B[j][c] (u g)_{p_j}
    for (int jrow = 0; jrow < B.rows; ++jrow) {
      for (int c = 0; c < d; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Fq> row(d * d, F.zero());
        for (int a = 0; a < d; ++a) {
          Fq ua = B.at(jrow, a);
          if (ua == F.zero()) continue;
          row[a * d + c] = F.add(row[a * d + c], ua);
          for (int j = 0; j < B.rows; ++j) {
            Fq coef = B.at(j, c);
            if (coef == F.zero()) continue;
            row[a * d + pivots[j]] = F.sub(row[a * d + pivots[j]], F.mul(coef, ua));
          }
        }
        rows.insert(rows.end(), row.begin(), row.end());
        ++nrows;
      }
    }
    FqMatrix sys(F, nrows, d * d);
    sys.a = rows;
    dims.push_back(d * d - mat_rank(sys));
  }
  return dims;
}

CheckReport check_algebra_dims(const WitnessChain& chain) {
  CheckReport report;
  const int d = chain.d, m = chain.m;
  const Field& F = *chain.field;
  const int l = (int)chain.steps.size();

  std::vector<Subspace> omegas;
  for (const auto& step : chain.steps) omegas.push_back(step.omega);
  std::vector<int> dims = invariant_algebra_dims(omegas, F, d);

  // a_k = dim of the join of the first k subspaces; b_k its growth.
  std::vector<int> a(l + 1, 0);
  FqMatrix acc;
  for (int k = 1; k <= l; ++k) {
    acc = (k == 1) ? omegas[0].basis : mat_stack(acc, omegas[k - 1].basis);
    a[k] = mat_rank(acc);
  }

  {
    std::ostringstream os;
    os << "dim " << dims[0] << " = " << d * d;
    report.add("algebra-dim-start", dims[0] == d * d, os.str());
  }
  {
    std::ostringstream os;
    os << "dim " << dims[1] << " = " << d * d - m * (d - m);
    report.add("algebra-first-drop", dims[1] == d * d - m * (d - m), os.str());
  }
  if (l >= 2) {
    int b1 = a[2] - a[1];
    std::ostringstream os;
    os << "drop " << dims[1] - dims[2] << " = " << b1 * (d - b1);
    report.add("algebra-second-drop", dims[1] - dims[2] == b1 * (d - b1), os.str());
  }
  {
    bool ok = true;
    std::ostringstream os;
    for (int k = 2; k < l; ++k) {
      int delta = dims[k] - dims[k + 1];
      int bk = a[k + 1] - a[k];
      int need = std::max(1, bk * (d - m));
      if (delta < need) {
        ok = false;
        os << "step " << k << ": drop " << delta << " < " << need;
        break;
      }
    }
    report.add("algebra-later-drops", ok, ok ? "every later drop >= max(1, b_k(d-m))" : os.str());
  }
  {
    std::ostringstream os;
    os << "dim " << dims.back();
    report.add("algebra-terminal", dims.back() == 1, os.str());
  }
  return report;
}

int cyclic_chain_length(long f) {
  if (f < 1) throw std::invalid_argument("cyclic_chain_length: need f >= 1");
  int count = 0;
  for (long p = 2; p * p <= f; ++p) {
    while (f % p == 0) {
      f /= p;
      ++count;
    }
  }
  if (f > 1) ++count;
  return count;
}

}  // namespace irrbase
