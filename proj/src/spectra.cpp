#include "singspec/spectra.hpp"

#include <algorithm>
#include <sstream>

namespace singspec {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::non_isolated: return "NON_ISOLATED";
    case ErrorCode::not_convenient: return "NOT_CONVENIENT";
    case ErrorCode::newton_degenerate: return "NEWTON_DEGENERATE";
    case ErrorCode::swh_guard: return "SWH_GUARD";
    case ErrorCode::negative_mult: return "NEGATIVE_MULT";
    case ErrorCode::negative_dim: return "NEGATIVE_DIM";
    case ErrorCode::incomplete_row: return "INCOMPLETE_ROW";
    case ErrorCode::invalid_config: return "INVALID_CONFIG";
  }
  return "UNKNOWN";
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::non_isolated: return 3;
    case ErrorCode::not_convenient: return 4;
    case ErrorCode::newton_degenerate: return 5;
    case ErrorCode::swh_guard: return 6;
    case ErrorCode::invalid_config: return 2;
    default: return 7;  // internal consistency failures
  }
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::wh: return "wh";
    case Mode::swh: return "swh";
    case Mode::newton: return "newton";
  }
  return "?";
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

Rational WeightVector::degree(const ExponentVector& nu) const {
  Rational s(0);
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * Rational(nu[static_cast<int>(i)]);
  return s;
}

std::optional<WeightVector> homogeneity_weights(const Polynomial& f) {
  const int n = f.nvars();
  std::vector<ExponentVector> pts = f.support();
  // Gauss-Jordan on the m×n system; unique solution needs rank n.
  std::vector<std::vector<Rational>> a;
  for (const auto& p : pts) {
    std::vector<Rational> row;
    for (int j = 0; j < n; ++j) row.emplace_back(p[j]);
    row.emplace_back(1);
    a.push_back(std::move(row));
  }
  std::size_t r = 0;
  for (int col = 0; col < n; ++col) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) return std::nullopt;  // rank deficient
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      Rational c = a[i][col] / a[r][col];
      for (int k = col; k <= n; ++k) a[i][k] -= c * a[r][k];
    }
    ++r;
  }
  for (std::size_t i = r; i < a.size(); ++i)
    if (!a[i][n].is_zero()) return std::nullopt;  // inconsistent
  WeightVector w;
  for (int j = 0; j < n; ++j) {
    Rational v = a[j][n] / a[j][j];
    if (v.sign() <= 0) return std::nullopt;
    w.w.push_back(v);
  }
  return w;
}

ModeChoice detect_mode(const Polynomial& f) {
  if (auto w = homogeneity_weights(f)) return {Mode::wh, w};
  return {Mode::newton, std::nullopt};
}

namespace {

std::shared_ptr<const StandardBasis> jacobian_basis(const Polynomial& f, StandardBasisCache& cache) {
  return cache.get(jacobian(f), MonomialOrder(f.nvars()));
}

long finite_colength(const StandardBasis& sb, const char* what) {
  Colength c = colength(sb);
  if (c.infinite) throw AnalysisError(ErrorCode::non_isolated, std::string(what) + " has infinite colength");
  return static_cast<long>(c.value);
}

}  // namespace

long milnor_number(const Polynomial& f, StandardBasisCache* cache) {
  StandardBasisCache local;
  auto sb = jacobian_basis(f, cache ? *cache : local);
  return finite_colength(*sb, "the Jacobian ideal");
}

long tjurina_number(const Polynomial& f, int e, StandardBasisCache* cache) {
  StandardBasisCache local;
  StandardBasisCache& c = cache ? *cache : local;
  auto sbj = jacobian_basis(f, c);
  finite_colength(*sbj, "the Jacobian ideal");
  std::vector<Polynomial> gens = jacobian(f);
  gens.push_back(poly_pow(f, e));
  auto sb = c.get(gens, MonomialOrder(f.nvars()), sbj->corner_degree());
  return finite_colength(*sb, "(∂f, f^e)");
}

Polynomial weight_one_part(const Polynomial& f, const WeightVector& w) {
  Polynomial out(f.nvars());
  for (const auto& [e, c] : f.terms())
    if (w.degree(e) == Rational(1)) out.add_term(e, c);
  return out;
}

FiltrationLadder FiltrationLadder::build(const Polynomial& f, int e, Mode mode,
                                         const std::optional<WeightVector>& weights, bool force,
                                         std::shared_ptr<StandardBasisCache> cache, int grid_span) {
  if (e < 1) throw AnalysisError(ErrorCode::invalid_config, "e must be a positive integer");
  if (f.nvars() < 1 || f.is_zero()) throw AnalysisError(ErrorCode::invalid_config, "empty germ");
  if (!f.coefficient(ExponentVector(f.nvars())).is_zero())
    throw AnalysisError(ErrorCode::invalid_config, "f(0) must vanish");
  FiltrationLadder L;
  L.f_ = f;
  L.e_ = e;
  L.mode_ = mode;
  L.cache_ = cache ? std::move(cache) : std::make_shared<StandardBasisCache>();
  const int n = f.nvars();
  long mu = milnor_number(f, L.cache_.get());
  if (e > n - 1 && n > 1) L.guards_.warnings.push_back("e exceeds n-1");

  auto check_weights = [&](const WeightVector& w) {
    if (static_cast<int>(w.w.size()) != n)
      throw AnalysisError(ErrorCode::invalid_config, "weight count does not match the variables");
    for (const auto& x : w.w)
      if (x.sign() <= 0) throw AnalysisError(ErrorCode::invalid_config, "weights must be positive");
  };

  switch (mode) {
    case Mode::wh: {
      std::optional<WeightVector> w = weights ? weights : homogeneity_weights(f);
      if (!w) throw AnalysisError(ErrorCode::invalid_config, "f is not weighted homogeneous");
      check_weights(*w);
      for (const auto& p : f.support())
        if (w->degree(p) != Rational(1))
          throw AnalysisError(ErrorCode::invalid_config, "f is not homogeneous for the given weights");
      L.weights_ = w;
      L.np_ = std::make_shared<NewtonPolytope>(NewtonPolytope::from_weights(f.support(), w->w));
      break;
    }
    case Mode::swh: {
      if (!weights) throw AnalysisError(ErrorCode::invalid_config, "swh mode needs weights");
      check_weights(*weights);
      for (const auto& p : f.support())
        if (weights->degree(p) < Rational(1))
          throw AnalysisError(ErrorCode::swh_guard, "a term of f has weight below 1");
      Polynomial f1 = weight_one_part(f, *weights);
      long mu1 = -1;
      if (!f1.is_zero()) {
        try {
          mu1 = milnor_number(f1, L.cache_.get());
        } catch (const AnalysisError&) {
          mu1 = -1;
        }
      }
      if (mu1 < 0) throw AnalysisError(ErrorCode::swh_guard, "weight-one part has no isolated singularity");
      L.guards_.mu_weight_one = mu1;
      if (mu1 != mu)
        throw AnalysisError(ErrorCode::swh_guard, "mu(f) = " + std::to_string(mu) +
                                                      " differs from mu(f_1) = " + std::to_string(mu1));
      L.weights_ = weights;
      L.np_ = std::make_shared<NewtonPolytope>(NewtonPolytope::from_weights(f.support(), weights->w));
      break;
    }
    case Mode::newton: {
      if (!is_convenient(f.support(), n))
        throw AnalysisError(ErrorCode::not_convenient, "Newton mode needs a pure power of every variable");
      L.np_ = std::make_shared<NewtonPolytope>(f.support());
      if (n <= 3) {
        long k = kouchnirenko_mu(*L.np_);
        L.guards_.kouchnirenko = k;
        if (k != mu) {
          std::string msg = "Kouchnirenko number " + std::to_string(k) + " differs from mu = " + std::to_string(mu);
          if (!force) throw AnalysisError(ErrorCode::newton_degenerate, msg);
          L.guards_.unreliable = true;
          L.guards_.warnings.push_back(msg + "; results unreliable");
        }
      } else {
        L.guards_.warnings.push_back("non-degeneracy guard unavailable for n > 3");
      }
      break;
    }
  }

  L.algebra_ = std::make_shared<MilnorAlgebra>(f, L.cache_.get());
  L.vbasis_ = std::make_shared<FilteredBasis>(*L.algebra_, *L.np_);
  L.image_ = std::make_shared<ImageBifiltration>(*L.algebra_, *L.np_, *L.vbasis_, poly_pow(f, e));
  L.grid_ = level_grid(*L.np_, grid_span > 0 ? grid_span : n);
  L.box_bound_ = L.np_->box_bound();

  for (const auto& l : L.vbasis_->levels()) {
    auto i = L.grid_.lower_index(l);
    if (i == L.grid_.values.size() || L.grid_.values[i] != l)
      throw std::logic_error("spectral number " + l.str() + " is not on the level grid");
  }

  // X(bottom, α) counts image rows with V-level ≥ α.
  std::vector<Rational> vlev;
  for (const auto& r : L.image_->rows()) vlev.push_back(r.v_level);
  std::sort(vlev.begin(), vlev.end());
  const long dim_image = static_cast<long>(vlev.size());
  for (const auto& a : L.grid_.values) {
    long dv = L.vbasis_->dim_at_least(a);
    long x = static_cast<long>(vlev.end() - std::lower_bound(vlev.begin(), vlev.end(), a));
    L.d1_.push_back(mu - dv);
    L.d2_.push_back(mu - (dim_image + dv - x));
  }
  L.d1_.push_back(mu);
  L.d2_.push_back(mu - dim_image);
  if (L.d1_.front() != 0 || L.d2_.front() != 0)
    throw std::logic_error("the level grid does not start below the minimal spectral number");
  return L;
}

Rational FiltrationLadder::alpha_1() const { return np_->level(ExponentVector(nvars()), true); }

const std::vector<ExponentVector>& FiltrationLadder::generators(std::size_t p) const {
  auto it = gens_.find(p);
  if (it != gens_.end()) return it->second;
  std::vector<ExponentVector> g;
  if (p < size()) g = generators_at(value(p));
  return gens_.emplace(p, std::move(g)).first->second;
}

std::vector<ExponentVector> FiltrationLadder::generators_at(const Rational& alpha) const {
  return filtration_generators(*np_, alpha, box_bound_);
}

std::vector<Polynomial> monomial_ideal(const std::vector<ExponentVector>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(Polynomial::monomial(g));
  return out;
}

std::pair<std::vector<long>, std::vector<long>> ladder_by_colengths(const FiltrationLadder& ladder) {
  const int n = ladder.nvars();
  const int D = ladder.algebra().corner();
  MonomialOrder order(n);
  std::vector<Polynomial> jac = jacobian(ladder.f());
  Polynomial fe = poly_pow(ladder.f(), ladder.e());
  std::vector<long> d1, d2;
  for (std::size_t p = 0; p <= ladder.size(); ++p) {
    std::vector<Polynomial> m = jac;
    for (auto& g : monomial_ideal(ladder.generators(p))) m.push_back(std::move(g));
    auto sb1 = ladder.cache().get(m, order, D);
    m.push_back(fe);
    auto sb2 = ladder.cache().get(m, order, D);
    d1.push_back(finite_colength(*sb1, "ladder ideal"));
    d2.push_back(finite_colength(*sb2, "ladder ideal"));
  }
  return {d1, d2};
}

namespace {
Spectrum from_differences(const FiltrationLadder& ladder, const std::vector<long>& d, SpectrumRole role) {
  Spectrum s;
  s.role = role;
  s.e = ladder.e();
  for (std::size_t p = 0; p < ladder.size(); ++p) {
    long m = d[p + 1] - d[p];
    if (m < 0) throw AnalysisError(ErrorCode::negative_mult, "ladder is not nondecreasing at " + ladder.value(p).str());
    s.poly.add(ladder.value(p), m);
  }
  return s;
}
}  // namespace

Spectrum steenbrink_spectrum(const FiltrationLadder& ladder) {
  return from_differences(ladder, ladder.d1(), SpectrumRole::steenbrink);
}

Spectrum tjurina_spectrum(const FiltrationLadder& ladder) {
  return from_differences(ladder, ladder.d2(), SpectrumRole::tjurina_e);
}

Spectrum missing_spectrum(const Spectrum& sp, const Spectrum& tsp) {
  Spectrum out;
  out.role = SpectrumRole::missing;
  out.e = tsp.e;
  for (const auto& t : tsp.poly.entries())
    if (sp.poly.multiplicity(t.alpha) < t.mult)
      throw AnalysisError(ErrorCode::negative_mult, "Tjurina multiplicity exceeds Steenbrink at " + t.alpha.str());
  for (const auto& s : sp.poly.entries()) out.poly.add(s.alpha, s.mult - tsp.poly.multiplicity(s.alpha));
  return out;
}

Spectrum wh_spectrum(const WeightVector& w) {
  mpz_class d = 1;
  for (const auto& x : w.w) {
    if (x.sign() <= 0 || x >= Rational(1)) throw std::domain_error("weights must lie in (0, 1)");
    d = lcm(d, x.den());
  }
  if (!d.fits_slong_p()) throw std::overflow_error("weight denominator too large");
  const long dl = d.get_si();
  IntPoly numer{mpz_class(1)}, denom{mpz_class(1)};
  for (const auto& x : w.w) {
    long k = (x * Rational(dl)).floor();
    IntPoly a(dl + 1, mpz_class(0)), b(k + 1, mpz_class(0));
    a[k] = 1;
    a[dl] = -1;
    b[0] = 1;
    b[k] = -1;
    numer = intpoly_mul(numer, a);
    denom = intpoly_mul(denom, b);
  }
  Spectrum s;
  s.poly = puiseux_div(numer, denom, dl);
  return s;
}

Verdict check_symmetry(const Spectrum& sp, int n) {
  Verdict v;
  std::vector<Rational> xs = sp.poly.expanded();
  v.status = Status::pass;
  for (std::size_t i = 0, j = xs.size(); i < xs.size(); ++i) {
    --j;
    if (i > j) break;
    if (xs[i] + xs[j] != Rational(n)) {
      v.status = Status::fail;
      v.detail = xs[i].str() + " + " + xs[j].str() + " != " + std::to_string(n);
      break;
    }
  }
  return v;
}

Rational hertling_gap(const Spectrum& tsp) {
  const auto entries = tsp.poly.entries();
  if (entries.empty()) throw std::domain_error("Hertling gap of an empty spectrum");
  Rational total(static_cast<long>(tsp.poly.total()));
  Rational sum(0);
  for (const auto& e : entries) sum += e.alpha * Rational(static_cast<long>(e.mult));
  Rational mean = sum / total;
  Rational var(0);
  for (const auto& e : entries) {
    Rational d = e.alpha - mean;
    var += d * d * Rational(static_cast<long>(e.mult));
  }
  return var / total - (tsp.poly.max() - tsp.poly.min()) / Rational(12);
}

}  // namespace singspec
