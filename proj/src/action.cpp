#include "irrbase/action.hpp"

#include <algorithm>
#include <stdexcept>

namespace irrbase {
namespace {

std::shared_ptr<const Field> field_for(int q) {
  auto pf = prime_power_split(q);
  if (!pf) throw std::invalid_argument("action: q must be a prime power");
  return std::make_shared<const Field>(Field::make(pf->first, pf->second));
}

// Images of every table point under one matrix (or the Frobenius map),
// as a permutation of point indices.
template <typename PointImage>
Perm induced_perm(int n, PointImage&& image_index) {
  std::vector<int> img((std::size_t)n);
  for (int i = 0; i < n; ++i) img[(std::size_t)i] = image_index(i);
  return Perm::checked(img);
}

void push_generators(ActionTable& t) {
  auto matrix_index = [&](const FqMatrix& g) {
    return [&t, g](int i) {
      if (t.kind == ActionKind::points) return t.index_of(subspace_image(t.points[(std::size_t)i], g));
      const PairPoint& p = t.pairs[(std::size_t)i];
      return t.index_of(PairPoint{subspace_image(p.small, g), subspace_image(p.big, g), p.kind});
    };
  };
  for (auto& [g, label] : gl_generators(*t.field, t.d)) {
    t.generators.push_back(induced_perm(t.n(), matrix_index(g)));
    t.labels.push_back(label);
  }
  if (t.group_kind == GroupKind::pgammal && t.field->f() > 1) {
    auto frob_index = [&t](int i) {
      if (t.kind == ActionKind::points) return t.index_of(subspace_frobenius(t.points[(std::size_t)i]));
      const PairPoint& p = t.pairs[(std::size_t)i];
      return t.index_of(PairPoint{subspace_frobenius(p.small), subspace_frobenius(p.big), p.kind});
    };
    t.generators.push_back(induced_perm(t.n(), frob_index));
    t.labels.push_back("frobenius");
  }
}

}  // namespace

int ActionTable::index_of(const Subspace& u) const {
  auto it = std::lower_bound(points.begin(), points.end(), u);
  if (it == points.end() || !(*it == u)) throw std::invalid_argument("action: subspace not a point");
  return (int)(it - points.begin());
}

int ActionTable::index_of(const PairPoint& pt) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), pt);
  if (it == pairs.end() || !(*it == pt)) throw std::invalid_argument("action: pair not a point");
  return (int)(it - pairs.begin());
}

ActionTable build_action(GroupKind kind, int d, int m, int q, std::size_t cap) {
  if (d < 2 || d > kMaxDim) throw std::invalid_argument("action: dimension out of range");
  if (m < 1 || m > d - 1) throw std::invalid_argument("action: need 1 <= m <= d-1");
  ActionTable t;
  t.kind = ActionKind::points;
  t.group_kind = kind;
  t.d = d;
  t.m = m;
  t.field = field_for(q);
  t.points = enumerate_subspaces(d, m, *t.field, cap);
  push_generators(t);
  return t;
}

ActionTable build_pair_action(ActionKind kind, int d, int m, int q, GroupKind group_kind,
                              std::size_t cap) {
  if (kind == ActionKind::points) throw std::invalid_argument("action: not a pair kind");
  if (d < 3 || d > kMaxDim) throw std::invalid_argument("action: pair actions need d >= 3");
  if (m < 1 || 2 * m >= d) throw std::invalid_argument("action: pair actions need 1 <= m < d/2");
  ActionTable t;
  t.kind = kind;
  t.group_kind = group_kind;
  t.d = d;
  t.m = m;
  t.field = field_for(q);

  // Partner count per m-space, by the closed form: complements of U are
  // counted by q^(m(d-m)); overspaces of U correspond to (d-2m)-spaces
  // of the (d-m)-dimensional quotient.
  mpz_class partners;
  if (kind == ActionKind::pair_direct_sum) {
    mpz_ui_pow_ui(partners.get_mpz_t(), (unsigned long)q, (unsigned long)(m * (d - m)));
  } else {
    partners = gaussian_binomial(d - m, d - 2 * m, q);
  }
  mpz_class total = gaussian_binomial(d, m, q) * partners;
  if (total > (unsigned long)cap)
    throw std::invalid_argument("action: pair count " + total.get_str() + " exceeds cap " +
                                std::to_string(cap));

  std::vector<Subspace> smalls = enumerate_subspaces(d, m, *t.field, cap);
  std::vector<Subspace> bigs = enumerate_subspaces(d, d - m, *t.field, cap);
  long per_u = -1;
  for (const Subspace& u : smalls) {
    long count = 0;
    for (const Subspace& w : bigs) {
      bool valid = kind == ActionKind::pair_direct_sum ? spans_with(u, w) : is_subspace_of(u, w);
      if (valid) {
        t.pairs.push_back(PairPoint{u, w, kind});
        ++count;
      }
    }
    if (per_u < 0) per_u = count;
    if (count != per_u)
      throw std::logic_error("action: partner count varies across subspaces");
  }
  if (mpz_class(per_u) != partners || (mpz_class)(long)t.pairs.size() != total)
    throw std::logic_error("action: pair count disagrees with the closed form");
  // smalls and bigs are each sorted, so the U-major sweep emits pairs in
  // ascending order already.
  push_generators(t);
  return t;
}

}  // namespace irrbase
