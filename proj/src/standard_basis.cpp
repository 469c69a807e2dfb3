#include "singspec/standard_basis.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace singspec {

using detail::LPoly;
using detail::LTerm;

int MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b, int adeg, int bdeg) {
  if (adeg != bdeg) return adeg < bdeg ? 1 : -1;
  for (int i = a.size() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

ExponentVector MonomialOrder::leading_exponent(const Polynomial& p) const {
  if (p.is_zero()) throw std::invalid_argument("leading exponent of zero polynomial");
  const ExponentVector* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || compare(e, *best) > 0) best = &e;
  return *best;
}

namespace {

constexpr int kNoCorner = INT_MAX;

bool term_greater(const LTerm& a, const LTerm& b) {
  return MonomialOrder::compare(a.e, b.e, a.deg, b.deg) > 0;
}

void refresh_maxdeg(LPoly& p) {
  int m = 0;
  for (const auto& t : p.t) m = std::max(m, t.deg);
  p.maxdeg = m;
}

LPoly to_local(const Polynomial& p, int corner) {
  LPoly r;
  r.t.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    int d = e.degree();
    if (d >= corner) continue;
    r.t.push_back({e, d, c.mpq()});
  }
  std::sort(r.t.begin(), r.t.end(), term_greater);
  refresh_maxdeg(r);
  return r;
}

Polynomial from_local(const LPoly& p, int nvars) {
  Polynomial r(nvars);
  for (const auto& t : p.t) r.add_term(t.e, Rational(t.c));
  return r;
}

void make_monic(LPoly& p) {
  if (p.t.empty() || p.t.front().c == 1) return;
  mpq_class inv = 1 / p.t.front().c;
  for (auto& t : p.t) t.c *= inv;
}

void truncate(LPoly& p, int corner) {
  if (corner == kNoCorner) return;
  std::erase_if(p.t, [corner](const LTerm& t) { return t.deg >= corner; });
  refresh_maxdeg(p);
}

/// h - coef * x^shift * g, dropping terms of degree >= corner.
LPoly sub_mul(const LPoly& h, const mpq_class& coef, const ExponentVector& shift,
              const LPoly& g, int corner) {
  const int sdeg = shift.degree();
  LPoly r;
  r.t.reserve(h.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < h.t.size() || j < g.t.size()) {
    int cmp;
    ExponentVector ge;
    int gdeg = 0;
    if (j < g.t.size()) {
      gdeg = g.t[j].deg + sdeg;
      if (gdeg >= corner) {
        ++j;
        continue;
      }
      ge = g.t[j].e + shift;
    }
    if (i >= h.t.size())
      cmp = -1;
    else if (j >= g.t.size())
      cmp = 1;
    else
      cmp = MonomialOrder::compare(h.t[i].e, ge, h.t[i].deg, gdeg);
    if (cmp > 0) {
      r.t.push_back(h.t[i++]);
    } else if (cmp < 0) {
      mpq_class c = g.t[j].c * coef;
      c = -c;
      r.t.push_back({ge, gdeg, std::move(c)});
      ++j;
    } else {
      mpq_class c = h.t[i].c - coef * g.t[j].c;
      if (sgn(c) != 0) r.t.push_back({ge, gdeg, std::move(c)});
      ++i;
      ++j;
    }
  }
  refresh_maxdeg(r);
  return r;
}

/// One reduction step cancelling the leading term of h against g.
LPoly reduce_lead(const LPoly& h, const LPoly& g, int corner) {
  const LTerm& lh = h.t.front();
  const LTerm& lg = g.t.front();
  mpq_class coef = lh.c / lg.c;
  return sub_mul(h, coef, lh.e - lg.e, g, corner);
}

LPoly spoly(const LPoly& f, const LPoly& g, int corner) {
  ExponentVector l = f.t.front().e.lcm(g.t.front().e);
  LPoly a;
  ExponentVector sf = l - f.t.front().e;
  int sd = sf.degree();
  for (const auto& t : f.t) {
    if (t.deg + sd >= corner) continue;
    a.t.push_back({t.e + sf, t.deg + sd, t.c * (g.t.front().c)});
  }
  refresh_maxdeg(a);
  if (a.t.empty()) {
    // The lcm itself lies beyond the corner; the pair is trivially zero.
    return a;
  }
  return sub_mul(a, f.t.front().c, l - g.t.front().e, g, corner);
}

/// Mora's normal form with écart-minimal reducer selection (oldest first
/// on ties); the input h is reduced against `reducers` plus the
/// intermediate polynomials Mora adds to the reducer set.
LPoly nf_mora(LPoly h, const std::vector<const LPoly*>& reducers, int corner) {
  std::vector<const LPoly*> T = reducers;
  std::deque<LPoly> extra;
  while (!h.zero()) {
    const ExponentVector& lm = h.t.front().e;
    const LPoly* best = nullptr;
    for (const LPoly* g : T) {
      if (!g->t.front().e.divides(lm)) continue;
      if (!best || g->ecart() < best->ecart()) best = g;
    }
    if (!best) break;
    if (best->ecart() > h.ecart()) {
      extra.push_back(h);
      T.push_back(&extra.back());
    }
    h = reduce_lead(h, *best, corner);
  }
  return h;
}

/// Full reduction against leading terms; valid only below a corner, where
/// the set of monomials is finite.
LPoly nf_full(LPoly h, const std::vector<const LPoly*>& reducers, int corner) {
  LPoly r;
  while (!h.zero()) {
    const ExponentVector& lm = h.t.front().e;
    const LPoly* div = nullptr;
    for (const LPoly* g : reducers) {
      if (g->t.front().e.divides(lm)) {
        div = g;
        break;
      }
    }
    if (!div) {
      r.t.push_back(h.t.front());
      h.t.erase(h.t.begin());
      continue;
    }
    h = reduce_lead(h, *div, corner);
  }
  refresh_maxdeg(r);
  return r;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

/// Visits every monomial outside the ideal generated by `leads`, which must
/// contain a pure power of each variable.
void for_each_outside(const std::vector<ExponentVector>& leads, int nvars,
                      const std::function<void(const ExponentVector&)>& fn) {
  std::vector<int> bound(nvars, INT_MAX);
  for (const auto& l : leads) {
    int axis;
    if (l.is_zero()) return;  // unit ideal
    if (l.is_pure_power(&axis)) bound[axis] = std::min(bound[axis], l[axis]);
  }
  for (int i = 0; i < nvars; ++i)
    if (bound[i] == INT_MAX) throw std::domain_error("monomial ideal has infinite colength");
  ExponentVector e(nvars);
  std::function<void(int)> rec = [&](int i) {
    if (i == nvars) {
      for (const auto& l : leads)
        if (l.divides(e)) return;
      fn(e);
      return;
    }
    for (int k = 0; k < bound[i]; ++k) {
      e[i] = k;
      rec(i + 1);
    }
    e[i] = 0;
  };
  rec(0);
}

bool has_all_pure_powers(const std::vector<ExponentVector>& leads, int nvars) {
  std::vector<bool> seen(nvars, false);
  for (const auto& l : leads) {
    int axis;
    if (l.is_zero()) return true;
    if (l.is_pure_power(&axis)) seen[axis] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// 1 + the largest degree of a monomial outside the leading ideal (0 for
/// the unit ideal): every monomial of that degree lies in the ideal.
int corner_of(const std::vector<ExponentVector>& leads, int nvars) {
  for (const auto& l : leads)
    if (l.is_zero()) return 0;
  int maxdeg = -1;
  for_each_outside(leads, nvars, [&](const ExponentVector& e) { maxdeg = std::max(maxdeg, e.degree()); });
  return maxdeg + 1;
}

void monomials_of_degree(int nvars, int degree, const std::function<void(const ExponentVector&)>& fn) {
  ExponentVector e(nvars);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars - 1) {
      e[i] = left;
      fn(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (nvars == 0) return;
  rec(0, degree);
}

struct Pair {
  int i, j;
  ExponentVector lcm;
  int deg;
};

}  // namespace

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

bool StandardBasis::is_unit_ideal() const {
  return std::any_of(leading_.begin(), leading_.end(), [](const auto& l) { return l.is_zero(); });
}

bool StandardBasis::in_leading_ideal(const ExponentVector& e) const {
  for (const auto& l : leading_)
    if (l.divides(e)) return true;
  return false;
}

StandardBasis standard_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                             std::optional<int> corner_hint) {
  const int n = order.nvars();
  int corner = corner_hint.value_or(kNoCorner);

  std::vector<LPoly> S;
  std::vector<bool> active, dead;
  std::vector<Pair> pairs;

  auto reducers = [&]() {
    std::vector<const LPoly*> r;
    for (std::size_t k = 0; k < S.size(); ++k)
      if (!dead[k]) r.push_back(&S[k]);
    return r;
  };

  auto active_leads = [&]() {
    std::vector<ExponentVector> l;
    for (std::size_t k = 0; k < S.size(); ++k)
      if (active[k] && !dead[k]) l.push_back(S[k].t.front().e);
    return l;
  };

  auto apply_corner = [&](int c) {
    corner = c;
    for (std::size_t k = 0; k < S.size(); ++k) {
      if (dead[k]) continue;
      truncate(S[k], corner);
      if (S[k].zero()) dead[k] = true;
    }
    std::erase_if(pairs, [&](const Pair& p) { return dead[p.i] || dead[p.j] || p.deg >= corner; });
  };

  // Gebauer–Möller update for a new element at index t.
  auto insert = [&](LPoly h) {
    make_monic(h);
    const int t = static_cast<int>(S.size());
    S.push_back(std::move(h));
    active.push_back(true);
    dead.push_back(false);
    const ExponentVector lt = S[t].t.front().e;

    std::vector<Pair> cand;
    for (int k = 0; k < t; ++k) {
      if (!active[k] || dead[k]) continue;
      ExponentVector l = lt.lcm(S[k].t.front().e);
      cand.push_back({k, t, l, l.degree()});
    }
    // Criterion M: drop pairs whose lcm is a proper multiple of another
    // candidate lcm; for equal lcms keep one, preferring a coprime pair.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
        if (a == b) continue;
        if (!cand[b].lcm.divides(cand[a].lcm)) continue;
        if (cand[b].lcm != cand[a].lcm) {
          drop = true;
        } else {
          bool ca = coprime(lt, S[cand[a].i].t.front().e);
          bool cb = coprime(lt, S[cand[b].i].t.front().e);
          if (cb && !ca) drop = true;
          else if (ca == cb && b < a) drop = true;
        }
      }
      if (!drop) kept.push_back(cand[a]);
    }
    // Product criterion.
    std::erase_if(kept, [&](const Pair& p) { return coprime(lt, S[p.i].t.front().e); });
    // Criterion B on old pairs.
    std::erase_if(pairs, [&](const Pair& p) {
      if (!lt.divides(p.lcm)) return false;
      ExponentVector li = lt.lcm(S[p.i].t.front().e);
      ExponentVector lj = lt.lcm(S[p.j].t.front().e);
      return li != p.lcm && lj != p.lcm;
    });
    for (auto& p : kept)
      if (p.deg < corner) pairs.push_back(p);
    for (int k = 0; k < t; ++k)
      if (active[k] && !dead[k] && lt.divides(S[k].t.front().e)) active[k] = false;

    auto leads = active_leads();
    if (has_all_pure_powers(leads, n)) {
      int c = corner_of(leads, n);
      if (c < corner) apply_corner(c);
    }
  };

  // Generators, largest leading term first, each reduced before insertion.
  std::vector<LPoly> input;
  for (const auto& g : gens) {
    LPoly l = to_local(g, corner);
    if (!l.zero()) input.push_back(std::move(l));
  }
  std::stable_sort(input.begin(), input.end(),
                   [](const LPoly& a, const LPoly& b) { return term_greater(a.t.front(), b.t.front()); });
  for (auto& g : input) {
    truncate(g, corner);
    LPoly h = nf_mora(std::move(g), reducers(), corner);
    if (!h.zero()) insert(std::move(h));
  }

  while (!pairs.empty()) {
    // Normal strategy: lcm of smallest degree, i.e. largest in the order.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      int c = MonomialOrder::compare(pairs[k].lcm, pairs[best].lcm, pairs[k].deg, pairs[best].deg);
      if (c > 0) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (dead[p.i] || dead[p.j]) continue;
    LPoly s = spoly(S[p.i], S[p.j], corner);
    LPoly h = nf_mora(std::move(s), reducers(), corner);
    if (!h.zero()) insert(std::move(h));
  }

  StandardBasis sb;
  sb.order_ = order;
  std::vector<ExponentVector> leads;
  for (std::size_t k = 0; k < S.size(); ++k) {
    if (!active[k] || dead[k]) continue;
    sb.lgens_.push_back(S[k]);
    sb.gens_.push_back(from_local(S[k], n));
    leads.push_back(S[k].t.front().e);
  }
  if (corner == kNoCorner && has_all_pure_powers(leads, n)) corner = corner_of(leads, n);
  if (corner != kNoCorner) {
    sb.corner_ = corner;
    monomials_of_degree(n, corner, [&](const ExponentVector& e) { leads.push_back(e); });
    // Re-truncate: the final corner may be lower than during the run.
    for (std::size_t k = 0; k < sb.lgens_.size();) {
      truncate(sb.lgens_[k], corner);
      if (sb.lgens_[k].zero()) {
        sb.lgens_.erase(sb.lgens_.begin() + static_cast<std::ptrdiff_t>(k));
        sb.gens_.erase(sb.gens_.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        sb.gens_[k] = from_local(sb.lgens_[k], n);
        ++k;
      }
    }
  }
  sb.leading_ = minimalize(std::move(leads));
  return sb;
}

namespace {
std::vector<const LPoly*> pointers(const StandardBasis& sb) {
  std::vector<const LPoly*> r;
  for (const auto& g : sb.local_generators()) r.push_back(&g);
  return r;
}
int corner_or_none(const StandardBasis& sb) { return sb.corner_degree().value_or(kNoCorner); }
}  // namespace

Polynomial normal_form(const Polynomial& p, const StandardBasis& sb) {
  int corner = corner_or_none(sb);
  LPoly h = nf_mora(to_local(p, corner), pointers(sb), corner);
  return from_local(h, sb.nvars());
}

Polynomial reduced_normal_form(const Polynomial& p, const StandardBasis& sb) {
  if (!sb.corner_degree()) throw std::domain_error("reduced normal form needs finite colength");
  int corner = *sb.corner_degree();
  LPoly h = nf_full(to_local(p, corner), pointers(sb), corner);
  return from_local(h, sb.nvars());
}

bool ideal_contains(const StandardBasis& sb, const Polynomial& p) {
  return normal_form(p, sb).is_zero();
}

Colength colength(const StandardBasis& sb) {
  const auto& l = sb.leading_ideal();
  if (!has_all_pure_powers(l, sb.nvars())) return Colength::unbounded();
  std::int64_t count = 0;
  for_each_outside(l, sb.nvars(), [&](const ExponentVector&) { ++count; });
  return Colength::finite(count);
}

std::vector<ExponentVector> standard_monomials(const StandardBasis& sb) {
  const auto& l = sb.leading_ideal();
  if (!has_all_pure_powers(l, sb.nvars())) throw std::domain_error("infinite colength");
  std::vector<ExponentVector> out;
  for_each_outside(l, sb.nvars(), [&](const ExponentVector& e) { out.push_back(e); });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return MonomialOrder::compare(a, b) > 0; });
  return out;
}

bool verify_spair_criterion(const StandardBasis& sb) {
  int corner = corner_or_none(sb);
  auto red = pointers(sb);
  const auto& g = sb.local_generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      LPoly s = spoly(g[i], g[j], corner);
      if (!nf_mora(std::move(s), red, corner).zero()) return false;
    }
  return true;
}

std::shared_ptr<const StandardBasis> StandardBasisCache::get(const std::vector<Polynomial>& gens,
                                                             const MonomialOrder& order,
                                                             std::optional<int> corner_hint) {
  std::vector<std::string> parts;
  for (const auto& g : gens) parts.push_back(g.render());
  std::sort(parts.begin(), parts.end());
  std::ostringstream key;
  key << order.nvars() << "|" << corner_hint.value_or(-1);
  for (const auto& p : parts) key << "|" << p;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key.str());
    if (it != memo_.end()) {
      ++hits_;
      return it->second;
    }
  }
  auto sb = std::make_shared<const StandardBasis>(standard_basis(gens, order, corner_hint));
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(key.str(), std::move(sb)).first->second;
}

std::size_t StandardBasisCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

}  // namespace singspec
