#include "golomb/cycle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "golomb/error.hpp"
#include "golomb/matrix.hpp"
#include "golomb/simplex.hpp"

namespace golomb {

namespace {

bool in_kernel(const RatMatrix& a, const RatVector& v) {
  for (const auto& x : a * v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool nowhere_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) != 0; });
}

RatVector to_rat(const std::vector<mpz_class>& ints) {
  RatVector out;
  out.reserve(ints.size());
  for (const auto& n : ints) out.emplace_back(n);
  return out;
}

// Points sorted by flat index, λ scaled to Σ|λ| = 1, orientation untouched.
MinimalCycle make_unit_cycle(const ProductGrid& grid, std::vector<GridPoint> points, RatVector lambda) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return grid.index_of(points[a]) < grid.index_of(points[b]); });
  Rat norm = 0;
  for (const auto& l : lambda) norm += abs(l);
  MinimalCycle out{CycleVectorPair{grid, {}, {}}};
  for (auto j : order) {
    out.pair.points.push_back(std::move(points[j]));
    out.pair.lambda.push_back(lambda[j] / norm);
  }
  return out;
}

}  // namespace

FiniteSignedMeasure MinimalCycle::measure() const {
  std::vector<Atom> atoms;
  for (std::size_t j = 0; j < pair.points.size(); ++j) atoms.push_back({pair.points[j], pair.lambda[j]});
  return {pair.grid, std::move(atoms)};
}

MinimalCycle MinimalCycle::canonical() const {
  MinimalCycle out = *this;
  if (!out.pair.lambda.empty() && sgn(out.pair.lambda.front()) < 0) {
    for (auto& l : out.pair.lambda) l = -l;
  }
  return out;
}

FiniteSignedMeasure Decomposition::reconstruct(const ProductGrid& grid) const {
  FiniteSignedMeasure sum(grid);
  for (const auto& term : terms) sum = sum + term.cycle.measure().scaled(term.weight);
  return sum;
}

void validate(const CycleVectorPair& pair) {
  if (pair.points.empty()) throw InputError("cycle-vector pair has no points");
  if (pair.points.size() != pair.lambda.size()) throw InputError("cycle-vector pair: λ length differs from point count");
  if (!nowhere_zero(pair.lambda)) throw InputError("cycle-vector pair: λ has a zero entry");
  const RatMatrix a = incidence_matrix(pair.points, pair.grid);
  if (!in_kernel(a, pair.lambda)) throw InputError("cycle-vector pair: class sums of λ do not vanish");
}

void validate(const GolombCycle& gc) {
  if (gc.b_part.empty()) throw InputError("Golomb cycle: empty b-part");
  if (gc.b_part.size() != gc.c_part.size()) throw InputError("Golomb cycle: b- and c-parts differ in size");
  for (const auto* part : {&gc.b_part, &gc.c_part}) {
    for (const auto& p : *part) {
      if (!gc.grid.contains(p)) throw InputError("Golomb cycle: point outside the grid");
    }
  }
  const std::set<GridPoint> b_set(gc.b_part.begin(), gc.b_part.end());
  for (const auto& c : gc.c_part) {
    if (b_set.contains(c)) throw InputError("Golomb cycle: a point occurs in both the b- and c-part");
  }
  for (std::size_t axis = 0; axis < gc.grid.dimension(); ++axis) {
    std::vector<std::size_t> b_coords;
    std::vector<std::size_t> c_coords;
    for (const auto& p : gc.b_part) b_coords.push_back(p[axis]);
    for (const auto& p : gc.c_part) c_coords.push_back(p[axis]);
    std::sort(b_coords.begin(), b_coords.end());
    std::sort(c_coords.begin(), c_coords.end());
    if (b_coords != c_coords) {
      throw InputError("Golomb cycle: axis " + std::to_string(axis) + " coordinates are not a permutation");
    }
  }
}

std::optional<RatVector> find_cycle_vector(std::span<const GridPoint> points, const ProductGrid& grid) {
  if (points.empty()) return std::nullopt;
  const auto basis = kernel_basis(incidence_matrix(points, grid));
  RatVector v(points.size());
  for (const auto& b : basis) {
    // Multipliers that would cancel an existing coordinate.
    std::set<Rat> forbidden;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (sgn(v[j]) != 0 && sgn(b[j]) != 0) forbidden.insert(-v[j] / b[j]);
    }
    Rat c = 1;
    while (forbidden.contains(c)) c += 1;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * b[j];
  }
  if (!nowhere_zero(v)) return std::nullopt;
  return v;
}

IntegerCertificate integer_certificate(const RatVector& lambda) {
  if (lambda.empty() || !nowhere_zero(lambda)) throw InputError("integer certificate: λ must be nowhere zero");
  return {primitive_integer_vector(lambda)};
}

GolombCycle to_golomb_form(std::span<const GridPoint> points, const ProductGrid& grid,
                           const IntegerCertificate& cert) {
  if (cert.entries.size() != points.size()) throw InputError("certificate length differs from point count");
  const RatVector as_rat = to_rat(cert.entries);
  validate(CycleVectorPair{grid, {points.begin(), points.end()}, as_rat});

  GolombCycle gc{grid, {}, {}};
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto& n = cert.entries[j];
    auto& part = n > 0 ? gc.b_part : gc.c_part;
    const unsigned long reps = mpz_class(abs(n)).get_ui();
    for (unsigned long r = 0; r < reps; ++r) part.push_back(points[j]);
  }
  return gc;
}

CertifiedPoints from_golomb_form(const GolombCycle& gc) {
  validate(gc);
  CertifiedPoints out;
  std::map<GridPoint, std::size_t> slot;
  auto add = [&](const GridPoint& p, int delta) {
    auto [it, inserted] = slot.try_emplace(p, out.points.size());
    if (inserted) {
      out.points.push_back(p);
      out.certificate.entries.emplace_back(0);
    }
    out.certificate.entries[it->second] += delta;
  };
  for (const auto& b : gc.b_part) add(b, +1);
  for (const auto& c : gc.c_part) add(c, -1);
  return out;
}

bool is_minimal(std::span<const GridPoint> points, const ProductGrid& grid) {
  if (points.empty()) return false;
  const auto basis = kernel_basis(incidence_matrix(points, grid));
  return basis.size() == 1 && nowhere_zero(basis.front());
}

MinimalCycle normalize_minimal(std::span<const GridPoint> points, const ProductGrid& grid) {
  if (points.empty()) throw InputError("normalize_minimal: empty point set");
  const auto basis = kernel_basis(incidence_matrix(points, grid));
  if (basis.size() != 1 || !nowhere_zero(basis.front())) {
    throw InputError("normalize_minimal: points do not form a minimal projection cycle");
  }
  return make_unit_cycle(grid, {points.begin(), points.end()}, basis.front()).canonical();
}

MinimalCycle extract_extreme_cycle(const FiniteSignedMeasure& mu) {
  if (mu.empty()) throw InputError("extract_extreme_cycle: zero measure");
  if (!is_orthogonal(mu)) throw InputError("extract_extreme_cycle: measure is not orthogonal");

  const auto support = mu.support();
  const std::size_t m = support.size();
  const IncidenceSystem sys = incidence_system(support, mu.grid());
  const std::size_t rows = sys.rows.size();

  LpProblem lp;
  lp.sense = Sense::kMinimize;
  lp.objective.assign(m, Rat(0));
  lp.constraints = RatMatrix(rows + 1, m);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(sys.matrix(r, j)) != 0) lp.constraints(r, j) = sgn(mu.atoms()[j].mass);
    }
  }
  for (std::size_t j = 0; j < m; ++j) lp.constraints(rows, j) = 1;
  lp.relations.assign(rows + 1, Relation::kEqual);
  lp.rhs.assign(rows + 1, Rat(0));
  lp.rhs[rows] = 1;
  lp.lower.assign(m, Rat(0));
  lp.upper.assign(m, std::nullopt);

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw std::logic_error("extract_extreme_cycle: sign-compatible cycle LP is infeasible");
  }
  std::vector<GridPoint> points;
  RatVector lambda;
  for (std::size_t j = 0; j < m; ++j) {
    if (sgn(sol.primal[j]) == 0) continue;
    points.push_back(support[j]);
    lambda.push_back(sgn(mu.atoms()[j].mass) * sol.primal[j]);
  }
  MinimalCycle cycle = make_unit_cycle(mu.grid(), std::move(points), std::move(lambda));
  if (!is_minimal(cycle.points(), cycle.grid())) {
    throw std::logic_error("extract_extreme_cycle: LP vertex is not a minimal cycle");
  }
  return cycle;
}

Decomposition decompose(const FiniteSignedMeasure& mu) {
  if (!is_orthogonal(mu)) throw InputError("decompose: measure is not orthogonal");
  if (total_variation(mu) != 1) throw InputError("decompose: total variation must be 1");

  Decomposition out;
  FiniteSignedMeasure rest = mu;
  while (!rest.empty()) {
    MinimalCycle cycle = extract_extreme_cycle(rest);
    std::optional<Rat> t;
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      Rat ratio = abs(rest.mass_at(cycle.points()[j]) / cycle.lambda()[j]);
      if (!t || ratio < *t) t = std::move(ratio);
    }
    rest = rest - cycle.measure().scaled(*t);
    out.terms.push_back({*t, std::move(cycle)});
  }
  return out;
}

}  // namespace golomb
