#include "blx/transform.hpp"

#include <algorithm>

#include "blx/parse.hpp"

namespace blx {

namespace {

const std::vector<Var> kTVars = {Var::t1, Var::t2, Var::t3};

mpq_class det_rec(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  mpq_class det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return mpq_class(0);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      mpq_class f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

}  // namespace

ProjTransform ProjTransform::identity(int k) {
  ProjTransform t;
  t.k = k;
  std::size_t n = static_cast<std::size_t>(k) + 1;
  t.m.assign(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) t.m[i][i] = 1;
  return t;
}

ProjTransform ProjTransform::permutation(int k, const std::vector<int>& perm) {
  ProjTransform t;
  t.k = k;
  std::size_t n = static_cast<std::size_t>(k) + 1;
  t.m.assign(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) t.m[i][static_cast<std::size_t>(perm[i])] = 1;
  return t;
}

bool ProjTransform::is_star() const {
  std::size_t n = m.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (m[n - 1][j] != 0) return false;
  }
  return m[n - 1][n - 1] == 1;
}

mpq_class ProjTransform::det() const { return det_rec(m); }

ProjTransform ProjTransform::inverse() const {
  std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a = m, inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) throw poly_error("inverse of a singular transformation");
    std::swap(a[pivot], a[k]);
    std::swap(inv[pivot], inv[k]);
    mpq_class d = a[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] /= d;
      inv[k][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      mpq_class f = a[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  ProjTransform r;
  r.k = k;
  r.m = std::move(inv);
  return r;
}

ProjTransform ProjTransform::compose(const ProjTransform& o) const {
  std::size_t n = m.size();
  ProjTransform r;
  r.k = k;
  r.m.assign(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) r.m[i][j] += m[i][l] * o.m[l][j];
  return r;
}

MPoly ProjTransform::row_form(std::size_t i, const std::vector<Var>& vars) const {
  MPoly f;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    f += MPoly::variable(vars[j]) * m[i][j];
  }
  return f;
}

std::vector<mpq_class> ProjTransform::apply_point(const std::vector<mpq_class>& pt) const {
  std::size_t n = m.size();
  std::vector<mpq_class> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += m[i][j] * pt[j];
  return out;
}

ProjTransform sample_transform(int k, Rng& rng, long bound) {
  std::size_t n = static_cast<std::size_t>(k) + 1;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ProjTransform t;
    t.k = k;
    t.m.assign(n, std::vector<mpq_class>(n, 0));
    for (auto& row : t.m)
      for (auto& e : row) e = rng.integer(bound);
    if (t.det() != 0) return t;
  }
  throw certification_error("sample_transform: no invertible matrix found");
}

ProjTransform sample_star_transform(int k, Rng& rng, long bound) {
  std::size_t n = static_cast<std::size_t>(k) + 1;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ProjTransform t;
    t.k = k;
    t.m.assign(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t.m[i][j] = rng.integer(bound);
    t.m[n - 1][n - 1] = 1;
    if (t.det() != 0) return t;
  }
  throw certification_error("sample_star_transform: no invertible matrix found");
}

ProjTransform sample_star_transform(int k, std::uint64_t seed, long bound) {
  Rng rng(seed);
  return sample_star_transform(k, rng, bound);
}

std::vector<MPoly> apply_left(const ProjTransform& L, const std::vector<MPoly>& comps) {
  std::size_t n = L.m.size();
  if (comps.size() != n) throw poly_error("apply_left: dimension mismatch");
  std::vector<MPoly> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (L.m[i][j] == 0) continue;
      out[i] += comps[j] * L.m[i][j];
    }
  }
  return out;
}

std::vector<MPoly> apply_param(const ProjTransform& l, const std::vector<MPoly>& comps) {
  if (l.m.size() != 3) throw poly_error("apply_param: parameter change must act on the plane");
  std::map<Var, MPoly> sigma;
  for (std::size_t i = 0; i < 3; ++i) sigma.emplace(kTVars[i], l.row_form(i, kTVars));
  std::vector<MPoly> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(c.substitute(sigma));
  return out;
}

namespace {

mpq_class eval_001(const MPoly& f) {
  return f.substitute_values({{Var::t1, 0}, {Var::t2, 0}, {Var::t3, 1}}).constant_value();
}

bool passes_001(const std::vector<MPoly>& comps, HypothesisCertificate& cert) {
  bool ok = true;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].is_zero()) {
      // a vanished component defines no curve; it is excluded from the
      // hypothesis checks (the last slot is handled separately)
      cert.checks.push_back({"component " + std::to_string(i + 1) +
                                 " identically zero (excluded from the point check)",
                             true, "0"});
      continue;
    }
    mpq_class v = eval_001(comps[i]);
    bool pass = (v != 0);
    cert.checks.push_back({"component " + std::to_string(i + 1) + " non-vanishing at (0:0:1)",
                           pass, v.get_str()});
    ok = ok && pass;
  }
  return ok;
}

}  // namespace

Normalization normalize_hypotheses(const std::vector<MPoly>& comps, std::uint64_t seed,
                                   long bound) {
  std::vector<MPoly> work = comps;
  Normalization out;
  out.image_permutation = ProjTransform::identity(static_cast<int>(comps.size()) - 1);

  if (gcd_multi(work).total_degree().value_or(0) != 0)
    throw poly_error("normalize_hypotheses: components share a non-trivial factor");

  // last component must be non-zero; a permutation is the cheapest fix
  if (work.back().is_zero()) {
    std::size_t j = 0;
    while (j < work.size() && work[j].is_zero()) ++j;
    if (j == work.size()) throw poly_error("normalize_hypotheses: all components zero");
    std::vector<int> perm(work.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::swap(perm[j], perm[perm.size() - 1]);
    out.image_permutation =
        ProjTransform::permutation(static_cast<int>(comps.size()) - 1, perm);
    std::swap(work[j], work[work.size() - 1]);
    out.certificate.checks.push_back(
        {"last component non-zero (after swapping slots " + std::to_string(j + 1) + " and " +
             std::to_string(work.size()) + ")",
         true, ""});
  } else {
    out.certificate.checks.push_back({"last component non-zero", true, ""});
  }

  // candidate parameter changes: identity, the unit shift, then random ones
  std::vector<ProjTransform> candidates;
  candidates.push_back(ProjTransform::identity(2));
  {
    ProjTransform shift = ProjTransform::identity(2);
    shift.m[0][2] = 1;
    shift.m[1][2] = 1;
    candidates.push_back(shift);
  }
  Rng rng(seed ^ 0x5eedbeefULL);
  for (int i = 0; i < 50; ++i) candidates.push_back(sample_star_transform(2, rng, bound));

  for (const auto& l : candidates) {
    std::vector<MPoly> shifted = apply_param(l, work);
    HypothesisCertificate cert = out.certificate;
    if (passes_001(shifted, cert)) {
      out.components = std::move(shifted);
      out.param_change = l;
      out.certificate = std::move(cert);
      return out;
    }
  }
  throw certification_error(
      "normalize_hypotheses: no parameter change satisfied the hypotheses");
}

}  // namespace blx
