#include "singspec/graded.hpp"

#include <algorithm>

namespace singspec {

void BigradedTable::add(const Rational& alpha, const Rational& gamma, long mult) {
  if (mult == 0) return;
  auto key = [](const BigradedEntry& x) { return std::tie(x.alpha, x.gamma); };
  BigradedEntry e{alpha, gamma, mult};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                             [&](const BigradedEntry& a, const BigradedEntry& b) { return key(a) < key(b); });
  if (it != entries_.end() && it->alpha == alpha && it->gamma == gamma)
    it->mult += mult;
  else
    entries_.insert(it, e);
}

std::map<Rational, std::vector<BigradedEntry>> BigradedTable::blocks() const {
  std::map<Rational, std::vector<BigradedEntry>> out;
  for (const auto& e : entries_) out[e.gamma].push_back(e);
  return out;
}

long BigradedTable::row_sum(const Rational& alpha) const {
  long s = 0;
  for (const auto& e : entries_)
    if (e.alpha == alpha) s += e.mult;
  return s;
}

namespace {

/// Next grid value strictly above λ, or nullopt past the top.
std::optional<Rational> next_value(const FiltrationLadder& L, const Rational& lambda) {
  const auto& v = L.grid().values;
  auto it = std::upper_bound(v.begin(), v.end(), lambda);
  if (it == v.end()) return std::nullopt;
  return *it;
}

long X(const FiltrationLadder& L, const std::optional<Rational>& beta, const std::optional<Rational>& alpha) {
  if (!beta || !alpha) return 0;
  return L.image().intersection_dim(*beta, *alpha);
}

long colength_of(const FiltrationLadder& L, const std::vector<Polynomial>& gens) {
  auto sb = L.cache().get(gens, MonomialOrder(L.nvars()), L.algebra().corner());
  Colength c = colength(*sb);
  if (c.infinite) throw std::logic_error("filtration ideal with infinite colength");
  return static_cast<long>(c.value);
}

void append_monomials(std::vector<Polynomial>& gens, const std::vector<ExponentVector>& mons) {
  for (const auto& m : mons) gens.push_back(Polynomial::monomial(m));
}

void append_shifted(std::vector<Polynomial>& gens, const Polynomial& g, const std::vector<ExponentVector>& mons) {
  for (const auto& m : mons) gens.push_back(g.shifted(m));
}

}  // namespace

long subspace_dim_X(const FiltrationLadder& ladder, const Rational& beta, const Rational& alpha) {
  return ladder.image().intersection_dim(beta, alpha);
}

long subspace_dim_X_colength(const FiltrationLadder& ladder, const Rational& beta, const Rational& alpha) {
  const std::vector<Polynomial> jac = jacobian(ladder.f());
  const Polynomial fe = poly_pow(ladder.f(), ladder.e());
  const auto mon_a = ladder.generators_at(alpha);
  const auto mon_b = ladder.generators_at(beta);
  std::vector<Polynomial> i_beta = jac, v_alpha = jac;
  append_shifted(i_beta, fe, mon_b);
  append_monomials(v_alpha, mon_a);
  std::vector<Polynomial> both = v_alpha;
  append_shifted(both, fe, mon_b);
  return ladder.mu() - colength_of(ladder, i_beta) - colength_of(ladder, v_alpha) + colength_of(ladder, both);
}

long bigraded_dimension(const FiltrationLadder& ladder, const Rational& alpha, const Rational& beta) {
  auto ap = next_value(ladder, alpha);
  auto bp = next_value(ladder, beta);
  long d = (X(ladder, beta, alpha) - X(ladder, beta, ap)) - (X(ladder, bp, alpha) - X(ladder, bp, ap));
  if (d < 0)
    throw AnalysisError(ErrorCode::negative_dim,
                        "negative bigraded dimension at alpha " + alpha.str() + ", beta " + beta.str());
  return d;
}

BigradedTable bigraded_table(const FiltrationLadder& ladder, const Spectrum& missing) {
  BigradedTable t(ladder.nvars(), ladder.e());
  const auto& grid = ladder.grid().values;
  const Rational e(ladder.e());
  for (const auto& row : missing.poly.entries()) {
    long acc = 0;
    // Admissible β = α − γ with γ ≥ e, largest first.
    auto top = std::upper_bound(grid.begin(), grid.end(), row.alpha - e);
    for (auto it = top; it != grid.begin() && acc < row.mult;) {
      --it;
      long d = bigraded_dimension(ladder, row.alpha, *it);
      if (d == 0) continue;
      t.add(row.alpha, row.alpha - *it, d);
      acc += d;
    }
    if (acc != row.mult)
      throw AnalysisError(ErrorCode::incomplete_row, "row " + row.alpha.str() + " reached " + std::to_string(acc) +
                                                         " of " + std::to_string(row.mult));
  }
  return t;
}

BigradedTable bigraded_table_codemode(const FiltrationLadder& ladder, const Spectrum& missing) {
  BigradedTable t(ladder.nvars(), ladder.e());
  const std::size_t g = ladder.size();
  const std::vector<Polynomial> jac = jacobian(ladder.f());
  const Polynomial fe = poly_pow(ladder.f(), ladder.e());
  auto steen = [&](std::size_t q) { return ladder.d1()[q + 1] - ladder.d1()[q]; };

  for (std::size_t p = 0; p < g; ++p) {
    const long s3 = missing.poly.multiplicity(ladder.value(p));
    if (s3 <= 0) continue;
    std::vector<Polynomial> m_next = jac;
    append_monomials(m_next, ladder.generators(p + 1));
    const long base = colength_of(ladder, m_next);
    long last_nonzero = 0;  // FD of the most recent q with FD ≠ 0
    for (std::size_t q = p; q-- > 0;) {
      if (!(ladder.value(q) + Rational(1) <= ladder.value(p)) || steen(q) <= 0) continue;
      std::vector<Polynomial> gens = m_next;
      append_shifted(gens, fe, ladder.generators(q));
      const long fd = base - colength_of(ladder, gens);
      const long gd = fd - last_nonzero;
      if (ladder.value(p) - ladder.value(q) >= Rational(1) && gd != 0)
        t.add(ladder.value(p), ladder.value(p) - ladder.value(q), gd);
      if (fd != 0) last_nonzero = fd;
      if (fd == s3) break;
    }
    if (t.row_sum(ladder.value(p)) != s3)
      throw AnalysisError(ErrorCode::incomplete_row,
                          "compatibility row " + ladder.value(p).str() + " does not reach its multiplicity");
  }
  return t;
}

GradedVerdict check_graded_symmetry(const BigradedTable& table, const Rational& alpha_1) {
  GradedVerdict v;
  const Rational n(table.n());
  v.overall.status = Status::pass;
  for (const auto& [gamma, entries] : table.blocks()) {
    std::vector<Rational> xs;
    for (const auto& e : entries)
      for (long k = 0; k < e.mult; ++k) xs.push_back(e.alpha);
    bool ok = true;
    for (std::size_t i = 0; i < xs.size() && ok; ++i) {
      const Rational& a = xs[i];
      const Rational& b = xs[xs.size() - 1 - i];
      if (a + b != gamma + n) {
        ok = false;
        if (v.overall.status == Status::pass) {
          v.overall.status = Status::fail;
          v.overall.detail = "block " + gamma.str() + ": " + a.str() + " + " + b.str() + " != " + (gamma + n).str();
        }
      }
    }
    v.block_symmetric[gamma] = ok;
  }
  if (table.empty()) return v;

  const Rational amin = table.entries().front().alpha;
  long mult = table.row_sum(amin);
  v.minimal_partner.status = Status::pass;
  if (mult != 1) {
    v.minimal_partner.status = Status::fail;
    v.minimal_partner.detail = "minimal missing number " + amin.str() + " has multiplicity " + std::to_string(mult);
  } else {
    const BigradedEntry& e = table.entries().front();
    Rational partner = e.gamma + n - amin;
    Rational expected = n - alpha_1;
    long pm = 0;
    for (const auto& x : table.entries())
      if (x.gamma == e.gamma && x.alpha == partner) pm = x.mult;
    if (partner != expected || pm != 1) {
      v.minimal_partner.status = Status::fail;
      v.minimal_partner.detail = "partner of " + amin.str() + " is " + partner.str() + ", expected " + expected.str();
    }
  }
  if (v.minimal_partner.status == Status::fail && v.overall.status == Status::pass) {
    v.overall.status = Status::fail;
    v.overall.detail = v.minimal_partner.detail;
  }
  return v;
}

std::optional<Rational> class_level(const FiltrationLadder& ladder, const Polynomial& g) {
  if (ideal_contains(ladder.algebra().jacobian_basis(), g)) return std::nullopt;
  const std::vector<Polynomial> jac = jacobian(ladder.f());
  auto member = [&](std::size_t p) {
    std::vector<Polynomial> gens = jac;
    append_monomials(gens, ladder.generators(p));
    auto sb = ladder.cache().get(gens, MonomialOrder(ladder.nvars()), ladder.algebra().corner());
    return ideal_contains(*sb, g);
  };
  // member(0) holds (Mon contains 1); member(size) fails since g ∉ (∂f).
  std::size_t lo = 0, hi = ladder.size();
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (member(mid))
      lo = mid;
    else
      hi = mid;
  }
  return ladder.value(lo);
}

long briancon_skoda_exponent(const FiltrationLadder& ladder) {
  const StandardBasis& sb = ladder.algebra().jacobian_basis();
  Polynomial power = ladder.f();
  for (long k = 1; k <= ladder.mu() + 1; ++k) {
    if (ideal_contains(sb, power)) return k;
    power = power * ladder.f();
  }
  throw std::logic_error("f is not nilpotent in the Milnor algebra");
}

std::optional<SigmaReport> sigma_and_bs(const FiltrationLadder& ladder_e1, const BigradedTable& table_e1) {
  if (table_e1.empty()) return std::nullopt;
  SigmaReport r;
  r.sigma_f = table_e1.entries().front().gamma;
  for (const auto& e : table_e1.entries()) r.sigma_f = std::min(r.sigma_f, e.gamma);
  const Rational a1 = ladder_e1.alpha_1();
  auto lf = class_level(ladder_e1, ladder_e1.f());
  r.sigma_pp = lf ? *lf - a1 : Rational(0);
  r.bs_bound = ((Rational(ladder_e1.nvars()) - Rational(2) * a1) / r.sigma_f).floor() + 1;
  r.bs_actual = briancon_skoda_exponent(ladder_e1);
  return r;
}

}  // namespace singspec
