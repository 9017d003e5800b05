// Copyright 2026 The stabkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "stabkit/farkas.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

void canonicalize(std::vector<CertificateTerm>& terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const CertificateTerm& a, const CertificateTerm& b) { return a.ref < b.ref; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coeff;
    while (j < terms.size() && terms[j].ref == terms[i].ref) sum += terms[j++].coeff;
    if (sum != 0) {
      terms[out].ref = terms[i].ref;
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

const LinearInequality& resolve_or_throw(const AxiomContext& ctx, AxiomRef ref) {
  const LinearInequality* ineq = ctx.resolve(ref);
  if (ineq == nullptr) {
    throw ReferenceError("certificate reference " + ref.to_string() + " does not resolve (" +
                         std::to_string(ctx.axioms().size()) + " axioms, path depth " +
                         std::to_string(ctx.path().size()) + ")");
  }
  return *ineq;
}

}  // namespace

FarkasCertificate::FarkasCertificate(std::vector<CertificateTerm> terms)
    : terms_(std::move(terms)) {
  canonicalize(terms_);
}

FarkasCertificate& FarkasCertificate::add(const FarkasCertificate& other,
                                          const Rational& factor) {
  if (factor == 0 || other.terms_.empty()) return *this;
  std::vector<CertificateTerm> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->ref < b->ref)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->ref < a->ref) {
      merged.push_back({b->ref, b->coeff * factor});
      ++b;
    } else {
      Rational sum = a->coeff + b->coeff * factor;
      if (sum != 0) merged.push_back({a->ref, std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

FarkasCertificate& FarkasCertificate::add(AxiomRef ref, const Rational& coeff) {
  return add(FarkasCertificate::single(ref, coeff));
}

FarkasCertificate FarkasCertificate::scaled(const Rational& factor) const {
  if (factor == 0) return {};
  FarkasCertificate out = *this;
  for (auto& t : out.terms_) t.coeff *= factor;
  return out;
}

std::string FarkasCertificate::to_string() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += ' ';
    out += t.ref.to_string();
    out += ':';
    out += stabkit::to_string(t.coeff);
  }
  return out;
}

CombinedInequality combine(const AxiomContext& ctx, const FarkasCertificate& cert) {
  std::vector<std::pair<VarId, Rational>> acc;
  CombinedInequality out;
  for (const auto& t : cert.terms()) {
    const LinearInequality& ineq = resolve_or_throw(ctx, t.ref);
    for (const auto& term : ineq.terms()) acc.emplace_back(term.var, t.coeff * term.coeff);
    out.bound += t.coeff * ineq.bound();
  }
  std::stable_sort(acc.begin(), acc.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < acc.size();) {
    std::size_t j = i + 1;
    Rational sum = acc[i].second;
    while (j < acc.size() && acc[j].first == acc[i].first) sum += acc[j++].second;
    if (sum != 0) out.lhs.emplace_back(acc[i].first, std::move(sum));
    i = j;
  }
  return out;
}

bool verify_certificate(const AxiomContext& ctx, const FarkasCertificate& cert) {
  // Resolve everything first so that bad references always throw.
  std::vector<const LinearInequality*> rows;
  rows.reserve(cert.size());
  std::size_t span = 0;
  for (const auto& t : cert.terms()) {
    rows.push_back(&resolve_or_throw(ctx, t.ref));
    span = std::max(span, rows.back()->var_span());
  }
  if (cert.empty()) return false;
  BigInt lcm = 1;
  for (const auto& t : cert.terms()) {
    if (t.coeff < 0) return false;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  std::vector<BigInt> lhs(span);
  BigInt bound = 0;
  BigInt mult;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational& c = cert.terms()[i].coeff;
    mpz_divexact(mult.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mult *= c.get_num();
    for (const auto& term : rows[i]->terms()) {
      mpz_addmul(lhs[term.var.index].get_mpz_t(), mult.get_mpz_t(), term.coeff.get_mpz_t());
    }
    mpz_addmul(bound.get_mpz_t(), mult.get_mpz_t(), rows[i]->bound().get_mpz_t());
  }
  for (const auto& v : lhs) {
    if (v != 0) return false;
  }
  // sum c_i b_i >= 1  <=>  lcm * sum >= lcm.
  return bound >= lcm;
}

namespace {

// Dense exact tableau for the phase-1 problem
//   min sum r  s.t.  sigma_i (a_i x - s_i) + r_i = sigma_i b_i,  x, s, r >= 0.
class Phase1 {
 public:
  Phase1(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows * (cols + 1)) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r * (n_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return t_[r * (n_ + 1) + n_]; }

  std::vector<std::size_t> basis;
  std::vector<Rational> cost;     // column costs
  std::vector<Rational> reduced;  // reduced costs, last entry = -objective

  void init_reduced() {
    reduced.assign(n_ + 1, 0);
    for (std::size_t c = 0; c < n_; ++c) reduced[c] = cost[c];
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis[r]];
      if (cb == 0) continue;
      for (std::size_t c = 0; c <= n_; ++c) {
        const Rational& v = t_[r * (n_ + 1) + c];
        if (v != 0) reduced[c] -= cb * v;
      }
    }
  }

  void solve() {
    std::size_t degenerate_streak = 0;
    bool bland = false;
    for (;;) {
      std::size_t enter = n_;
      for (std::size_t c = 0; c < n_; ++c) {
        if (reduced[c] >= 0) continue;
        if (enter == n_ || (!bland && reduced[c] < reduced[enter])) enter = c;
        if (bland) break;
      }
      if (enter == n_) return;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        const Rational& a = at(r, enter);
        if (a <= 0) continue;
        Rational ratio = rhs(r) / a;
        if (leave == m_ || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == m_) throw std::logic_error("phase-1 objective is unbounded");
      if (best == 0) {
        if (++degenerate_streak > 2 * (m_ + n_)) bland = true;
      } else {
        degenerate_streak = 0;
      }
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const std::size_t w = n_ + 1;
    Rational inv = 1 / at(pr, pc);
    Rational* prow = &t_[pr * w];
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < w; ++c) {
      if (prow[c] != 0) {
        prow[c] *= inv;
        nz.push_back(c);
      }
    }
    Rational f;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == pr) continue;
      Rational* row = &t_[r * w];
      if (row[pc] == 0) continue;
      f = row[pc];
      for (std::size_t c : nz) row[c] -= f * prow[c];
    }
    if (reduced[pc] != 0) {
      f = reduced[pc];
      for (std::size_t c : nz) reduced[c] -= f * prow[c];
    }
    basis[pr] = pc;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Rational> t_;
};

bool is_nonnegativity(const LinearInequality& ineq) {
  return ineq.terms().size() == 1 && ineq.terms()[0].coeff == 1 && ineq.bound() == 0;
}

}  // namespace

FarkasResult find_certificate(const AxiomContext& ctx, std::size_t nvars) {
  const std::size_t nv = std::max(nvars, ctx.var_span());
  std::vector<AxiomRef> refs = ctx.refs();

  // Variables with an explicit x_j >= 0 in the context keep a single column.
  std::vector<std::optional<AxiomRef>> lower(nv);
  std::vector<bool> dropped(refs.size(), false);
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const LinearInequality& ineq = *ctx.resolve(refs[i]);
    if (!is_nonnegativity(ineq)) continue;
    std::uint32_t v = ineq.terms()[0].var.index;
    if (!lower[v]) {
      lower[v] = refs[i];
      dropped[i] = true;
    }
  }

  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (!dropped[i]) rows.push_back(i);
  }
  const std::size_t m = rows.size();

  // Column layout: x columns, then surplus per row, then artificials.
  std::vector<std::size_t> pos_col(nv), neg_col(nv, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    pos_col[j] = ncols++;
    if (!lower[j]) neg_col[j] = ncols++;
  }
  const std::size_t surplus0 = ncols;
  ncols += m;
  std::vector<int> sigma(m);
  std::vector<std::size_t> art_col(m, SIZE_MAX);
  for (std::size_t r = 0; r < m; ++r) {
    const LinearInequality& ineq = *ctx.resolve(refs[rows[r]]);
    sigma[r] = ineq.bound() > 0 ? 1 : -1;
    if (sigma[r] > 0) art_col[r] = ncols++;
  }

  Phase1 lp(m, ncols);
  lp.basis.resize(m);
  lp.cost.assign(ncols, 0);
  std::vector<std::size_t> init_col(m);
  for (std::size_t r = 0; r < m; ++r) {
    const LinearInequality& ineq = *ctx.resolve(refs[rows[r]]);
    for (const auto& t : ineq.terms()) {
      std::size_t j = t.var.index;
      lp.at(r, pos_col[j]) = sigma[r] * t.coeff;
      if (neg_col[j] != SIZE_MAX) lp.at(r, neg_col[j]) = -sigma[r] * t.coeff;
    }
    lp.at(r, surplus0 + r) = -sigma[r];
    lp.rhs(r) = sigma[r] * ineq.bound();
    if (art_col[r] != SIZE_MAX) {
      lp.at(r, art_col[r]) = 1;
      lp.cost[art_col[r]] = 1;
      init_col[r] = art_col[r];
    } else {
      init_col[r] = surplus0 + r;
    }
    lp.basis[r] = init_col[r];
  }
  lp.init_reduced();
  lp.solve();

  Rational z = -lp.reduced[ncols];
  if (z == 0) {
    std::vector<Rational> value(ncols, 0);
    for (std::size_t r = 0; r < m; ++r) value[lp.basis[r]] = lp.rhs(r);
    Witness w;
    w.point.resize(nv);
    for (std::size_t j = 0; j < nv; ++j) {
      w.point[j] = value[pos_col[j]];
      if (neg_col[j] != SIZE_MAX) w.point[j] -= value[neg_col[j]];
    }
    return w;
  }

  std::vector<CertificateTerm> terms;
  std::vector<Rational> u(m);
  for (std::size_t r = 0; r < m; ++r) {
    Rational y = lp.cost[init_col[r]] - lp.reduced[init_col[r]];
    u[r] = sigma[r] * y;
    if (u[r] != 0) terms.push_back({refs[rows[r]], u[r] / z});
  }
  for (std::size_t j = 0; j < nv; ++j) {
    if (!lower[j]) continue;
    // Reduced cost of the x_j column equals -sum_i u_i a_ij.
    const Rational& w = lp.reduced[pos_col[j]];
    if (w != 0) terms.push_back({*lower[j], w / z});
  }
  FarkasCertificate cert(std::move(terms));
  if (!verify_certificate(ctx, cert)) {
    throw std::logic_error("simplex produced an invalid Farkas certificate");
  }
  return cert;
}

namespace {

// Returns a nonzero kernel vector of the columns, if any.
std::optional<std::vector<Rational>> kernel_vector(std::vector<std::vector<Rational>> rows,
                                                   std::size_t ncols) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  std::optional<std::size_t> free_col;
  for (std::size_t c = 0; c < ncols; ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) {
      free_col = c;
      break;
    }
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c] == 0) continue;
      Rational f = rows[q][c];
      for (std::size_t k = c; k < ncols; ++k) rows[q][k] -= f * rows[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (!free_col) return std::nullopt;
  std::vector<Rational> lambda(ncols, 0);
  lambda[*free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) lambda[pivot_col[i]] = -rows[i][*free_col];
  return lambda;
}

}  // namespace

FarkasCertificate reduce_support(const AxiomContext& ctx, const FarkasCertificate& cert) {
  if (!verify_certificate(ctx, cert)) {
    throw InvalidCertificateError("reduce_support requires a valid certificate");
  }
  std::vector<CertificateTerm> terms = cert.terms();
  for (;;) {
    std::vector<VarId> vars;
    for (const auto& t : terms) {
      for (const auto& term : ctx.resolve(t.ref)->terms()) vars.push_back(term.var);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    const std::size_t k = terms.size();
    if (k <= 1) break;
    std::vector<std::vector<Rational>> rows(vars.size() + 1, std::vector<Rational>(k));
    for (std::size_t c = 0; c < k; ++c) {
      const LinearInequality& ineq = *ctx.resolve(terms[c].ref);
      for (const auto& term : ineq.terms()) {
        auto it = std::lower_bound(vars.begin(), vars.end(), term.var);
        rows[it - vars.begin()][c] = term.coeff;
      }
      rows[vars.size()][c] = ineq.bound();
    }
    auto lambda = kernel_vector(std::move(rows), k);
    if (!lambda) break;
    if (std::all_of(lambda->begin(), lambda->end(), [](const Rational& v) { return v <= 0; })) {
      for (auto& v : *lambda) v = -v;
    }
    std::optional<Rational> step;
    std::size_t zeroed = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if ((*lambda)[c] <= 0) continue;
      Rational ratio = terms[c].coeff / (*lambda)[c];
      if (!step || ratio < *step) {
        step = ratio;
        zeroed = c;
      }
    }
    for (std::size_t c = 0; c < k; ++c) terms[c].coeff -= *step * (*lambda)[c];
    terms[zeroed].coeff = 0;
    terms.erase(std::remove_if(terms.begin(), terms.end(),
                               [](const CertificateTerm& t) { return t.coeff == 0; }),
                terms.end());
  }
  return FarkasCertificate(std::move(terms));
}

}  // namespace stabkit
