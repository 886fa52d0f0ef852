#include "hirsch/bounds.hpp"

#include <mpfr.h>

#include <map>
#include <stdexcept>

#include "hirsch/errors.hpp"

namespace hirsch {

namespace {

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

unsigned long log2_exact(std::size_t x) {
  unsigned long e = 0;
  while (x > 1) {
    x >>= 1;
    ++e;
  }
  return e;
}

Integer power(std::size_t base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
  ~Real() { mpfr_clear(x_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return x_; }

 private:
  mpfr_t x_;
};

// n^(log2 d + 1) evaluated with every operation rounded in direction `rnd`.
void kk_directed(Real& out, std::size_t n, std::size_t d, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real e(prec), base(prec);
  mpfr_set_ui(e.get(), d, rnd);
  mpfr_log2(e.get(), e.get(), rnd);
  mpfr_add_ui(e.get(), e.get(), 1, rnd);
  mpfr_set_ui(base.get(), n, rnd);
  mpfr_pow(out.get(), base.get(), e.get(), rnd);
}

}  // namespace

std::optional<Integer> known_max_diameter(std::size_t n, std::size_t d) {
  static const std::map<std::pair<std::size_t, std::size_t>, long> table = {
      {{8, 4}, 4},  {{9, 4}, 5},  {{10, 4}, 5}, {{11, 4}, 6}, {{12, 4}, 7},
      {{10, 5}, 5}, {{11, 5}, 6}, {{12, 6}, 6},
  };
  if (n <= d) return std::nullopt;
  if (d == 2) return Integer(static_cast<unsigned long>(n / 2));
  if (d == 3) return Integer(static_cast<unsigned long>(2 * n / 3)) - 1;
  if (const auto it = table.find({n, d}); it != table.end()) return Integer(it->second);
  return std::nullopt;
}

bool kalai_kleitman_at_least(std::size_t n, std::size_t d, const Integer& k) {
  if (n == 0 || d == 0) throw InvalidArgument("n and d must be positive");
  if (is_power_of_two(d)) return power(n, log2_exact(d) + 1) >= k;
  // n^(log2 d) = d^(log2 n)
  if (is_power_of_two(n)) return Integer(static_cast<unsigned long>(n)) * power(d, log2_exact(n)) >= k;
  for (mpfr_prec_t prec = 64; prec <= 8192; prec *= 2) {
    Real lo(prec), hi(prec), target(prec + mpz_sizeinbase(k.get_mpz_t(), 2));
    kk_directed(lo, n, d, prec, MPFR_RNDD);
    kk_directed(hi, n, d, prec, MPFR_RNDU);
    mpfr_set_z(target.get(), k.get_mpz_t(), MPFR_RNDN);
    if (mpfr_cmp(lo.get(), target.get()) >= 0) return true;
    if (mpfr_cmp(hi.get(), target.get()) < 0) return false;
  }
  throw std::runtime_error("bound comparison did not separate");
}

double kalai_kleitman_value(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0) throw InvalidArgument("n and d must be positive");
  Real kk(64);
  kk_directed(kk, n, d, 64, MPFR_RNDU);
  return mpfr_get_d(kk.get(), MPFR_RNDU);
}

Integer linear_subset_bound(std::size_t n, std::size_t d) {
  if (d == 0) throw InvalidArgument("d must be positive");
  return Integer(static_cast<unsigned long>(n)) * power(2, d - 1);
}

BoundTable bound_table(std::size_t n, std::size_t d) {
  if (d < 2 || n <= d) throw InvalidArgument("bounds need n > d >= 2");
  BoundTable t;
  t.n = n;
  t.d = d;
  const Integer nn(static_cast<unsigned long>(n)), dd(static_cast<unsigned long>(d));
  t.lower = Integer((dd - 1) * nn / dd) - (dd - 2);
  if (d >= 3) t.larman = nn * power(2, d - 3);
  t.kalai_kleitman = kalai_kleitman_value(n, d);
  t.known_exact = known_max_diameter(n, d);
  t.hirsch_rhs = nn - dd;
  return t;
}

nlohmann::json to_json(const BoundTable& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["d"] = t.d;
  j["lower"] = t.lower.get_si();
  j["larman"] = t.larman ? nlohmann::json(t.larman->get_si()) : nlohmann::json(nullptr);
  j["kalai_kleitman"] = t.kalai_kleitman;
  j["known_exact"] = t.known_exact ? nlohmann::json(t.known_exact->get_si()) : nlohmann::json(nullptr);
  j["hirsch_rhs"] = t.hirsch_rhs.get_si();
  return j;
}

nlohmann::json hirsch_report(const Polytope& p, const ReportOptions& options) {
  nlohmann::json r;
  const std::size_t n = p.facets.size(), d = p.dim();
  const Classification cls = classify(p.h, p.v, p.inc);
  r["n"] = n;
  r["d"] = d;
  r["bounded"] = p.bounded();
  r["vertex_count"] = p.v.vertices.size();
  r["n_minus_d"] = static_cast<long>(n) - static_cast<long>(d);
  r["simple"] = cls.simple;
  r["simplicial"] = cls.simplicial;
  try {
    const Diameter diam = diameter(p.graph);
    r["diameter"] = diam.value;
    r["satisfies_hirsch"] = diam.value + d <= n;
    r["hirsch_sharp"] = diam.value + d == n;
    r["witness_pair"] = {p.graph.label(diam.u), p.graph.label(diam.v)};
  } catch (const DisconnectedError&) {
    r["diameter"] = nullptr;
    r["satisfies_hirsch"] = nullptr;
    r["hirsch_sharp"] = nullptr;
    r["witness_pair"] = nullptr;
  }
  if (options.nonrevisiting) {
    if (!p.bounded()) {
      r["nonrevisiting"] = nullptr;
    } else {
      const PropertyResult pr = nonrevisiting_property(p, options.budget);
      nlohmann::json j;
      j["status"] = pr.status == SearchStatus::found  ? "holds"
                    : pr.status == SearchStatus::none ? "fails"
                                                      : "inconclusive";
      j["witness"] = pr.witness ? nlohmann::json{p.graph.label(pr.witness->first),
                                                 p.graph.label(pr.witness->second)}
                                : nlohmann::json(nullptr);
      r["nonrevisiting"] = j;
    }
  }
  if (options.monotone) {
    const MonotoneResult m = monotone_eccentricity(p, *options.monotone);
    nlohmann::json j;
    j["optimum"] = p.graph.label(m.optimum);
    j["worst_length"] = m.worst_length;
    j["worst_source"] = p.graph.label(m.worst_source);
    j["minimum"] = p.graph.label(m.minimum);
    j["from_minimum"] = m.from_minimum ? nlohmann::json(*m.from_minimum) : nlohmann::json(nullptr);
    nlohmann::json unreachable = nlohmann::json::array();
    for (auto u : m.unreachable) unreachable.push_back(p.graph.label(u));
    j["unreachable"] = unreachable;
    r["monotone"] = j;
  }
  return r;
}

nlohmann::json hirsch_report(const HPolyhedron& h, const ReportOptions& options) {
  return hirsch_report(analyze(h), options);
}

}  // namespace hirsch
