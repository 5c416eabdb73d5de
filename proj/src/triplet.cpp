#include "projzero/triplet.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "projzero/errors.hpp"

namespace projzero {

namespace {

Vector random_linear(const Field& field, std::size_t nvars, std::mt19937_64& rng) {
  Vector c;
  c.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    if (field.is_finite())
      c.push_back(field.from_int(static_cast<long long>(rng() % field.characteristic())));
    else
      c.push_back(field.from_int(static_cast<long long>(rng() % 7) - 3));
  }
  return c;
}

}  // namespace

Matrix l_map(const Form& l, const DegreePiece& lower, const DegreePiece& upper) {
  Matrix M(l.field(), lower.standard_monomials.size(), upper.standard_monomials.size());
  for (std::size_t i = 0; i < lower.standard_monomials.size(); ++i) {
    Form image = Form::monomial(l.field(), lower.standard_monomials[i], l.field().one()) * l;
    Vector row = upper.standard_coordinates(image);
    for (std::size_t j = 0; j < row.size(); ++j) M(i, j) = row[j];
  }
  return M;
}

bool is_surjective(const Form& l, const DegreePiece& lower, const DegreePiece& upper) {
  if (l.is_zero() || l.degree() != 1) return false;
  return rank(l_map(l, lower, upper)) == upper.hf;
}

std::vector<Vector> normalized_linear_forms(const Field& field, std::size_t nvars) {
  if (!field.is_finite()) throw Error(ExitCode::input_error, "exhaustive search needs a finite field");
  const std::uint64_t p = field.characteristic();
  std::uint64_t total = 0, block = 1;
  for (std::size_t i = 0; i < nvars; ++i, block *= p) {
    total += block;
    if (total > 1000000) throw Error(ExitCode::input_error, "too many linear forms for exhaustive search");
  }
  std::vector<Vector> out;
  for (std::size_t lead = 0; lead < nvars; ++lead) {
    std::size_t tail = nvars - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < tail; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Vector c = zero_vector(field, nvars);
      c[lead] = field.one();
      std::uint64_t x = code;
      for (std::size_t k = nvars; k-- > lead + 1;) {
        c[k] = field.element(x % p);
        x /= p;
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

Form find_surjective_linear(const Ring& ring, const DegreePiece& lower, const DegreePiece& upper,
                            const SurjectionStrategy& strategy) {
  if (upper.hf == 0 || lower.hf < upper.hf)
    throw std::invalid_argument("find_surjective_linear needs hf(d) >= hf(d+1) > 0");
  if (strategy.kind == SurjectionStrategy::Kind::exhaustive) {
    auto forms = normalized_linear_forms(ring.field, ring.nvars());
    for (const auto& c : forms) {
      Form l = Form::linear(ring.field, c);
      if (is_surjective(l, lower, upper)) return l;
    }
    throw NoSurjectionFound(forms.size(), "every normalized linear form fails in degree " + std::to_string(lower.d));
  }
  std::mt19937_64 rng(strategy.seed);
  for (std::size_t trial = 0; trial < strategy.max_trials; ++trial) {
    Vector c = random_linear(ring.field, ring.nvars(), rng);
    Form l = Form::linear(ring.field, c);
    if (is_surjective(l, lower, upper)) return l;
  }
  throw NoSurjectionFound(strategy.max_trials, "random linear forms fail in degree " + std::to_string(lower.d));
}

std::vector<Matrix> multiplication_matrices(const std::vector<Form>& E, const Form& l, const DegreePiece& upper) {
  const Field field = l.field();
  const std::size_t m = E.size();
  if (m != upper.hf) throw RankDeficientBasis("basis size does not match hf(d+1)");
  Matrix N(field, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    Vector row = upper.standard_coordinates(E[i] * l);
    for (std::size_t k = 0; k < m; ++k) N(i, k) = row[k];
  }
  Matrix Ninv;
  try {
    Ninv = inverse(N);
  } catch (const std::domain_error&) {
    throw RankDeficientBasis("the forms l * e_i are dependent");
  }
  std::vector<Matrix> A;
  const std::size_t n = l.nvars();
  for (std::size_t j = 0; j < n; ++j) {
    Form xj = Form::monomial(field, Monomial::variable(n, j), field.one());
    Matrix X(field, m, m);
    for (std::size_t i = 0; i < m; ++i) {
      Vector row = upper.standard_coordinates(xj * E[i]);
      for (std::size_t k = 0; k < m; ++k) X(i, k) = row[k];
    }
    A.push_back(X * Ninv);
  }
  return A;
}

BuiltTriplet build_triplet(const IdealPresentation& I, const TripletOptions& options) {
  const unsigned cap = options.max_degree.value_or(default_max_degree(I));
  std::optional<HilbertScan> scan;
  unsigned start = options.min_degree;
  if (options.policy == DegreePolicy::certified_stable) {
    scan = hilbert_scan(I, cap);
    if (scan->artinian) throw Error(ExitCode::input_error, "artinian quotient: no triplet exists");
    start = std::max(start, *scan->stabilization_degree);
  }
  if (options.linear && (options.linear->degree() != 1 || options.linear->nvars() != I.ring.nvars() ||
                         !(options.linear->field() == I.ring.field)))
    throw Error(ExitCode::input_error, "the given l is not a linear form of the ring");

  std::map<unsigned, DegreePiece> pieces;
  auto piece = [&](unsigned d) -> const DegreePiece& {
    auto it = pieces.find(d);
    if (it == pieces.end()) it = pieces.emplace(d, ideal_piece(I, d)).first;
    return it->second;
  };
  auto hf_upto = [&](unsigned d) {
    std::vector<std::size_t> hf;
    for (unsigned k = 0; k <= d; ++k) hf.push_back(piece(k).hf);
    return hf;
  };

  bool qualified = false;
  std::size_t trials = 0;
  for (unsigned d = start; d <= cap; ++d) {
    const DegreePiece& lower = piece(d);
    const DegreePiece& upper = piece(d + 1);
    if (upper.hf == 0) throw Error(ExitCode::input_error, "artinian quotient: no triplet exists");
    if (lower.hf < upper.hf) continue;
    qualified = true;
    Form l;
    if (options.linear) {
      ++trials;
      if (!is_surjective(*options.linear, lower, upper)) continue;
      l = *options.linear;
    } else {
      try {
        SurjectionStrategy s = options.strategy;
        s.seed += d;
        l = find_surjective_linear(I.ring, lower, upper, s);
      } catch (const NoSurjectionFound& e) {
        trials += e.trials();
        continue;
      }
    }

    Triplet t;
    t.ring = I.ring;
    t.degree = d;
    t.l = l;
    const std::size_t m = upper.hf;
    Matrix L = l_map(l, lower, upper);
    std::vector<std::size_t> rows = rref(L.transpose()).pivots;
    std::vector<Form> E;
    Matrix N(I.ring.field, m, m);
    for (std::size_t i = 0; i < m; ++i) {
      t.E.push_back(lower.standard_monomials[rows[i]]);
      E.push_back(Form::monomial(I.ring.field, t.E.back(), I.ring.field.one()));
      for (std::size_t k = 0; k < m; ++k) N(i, k) = L(rows[i], k);
      t.F.push_back(upper.from_standard(L.row_vector(rows[i]), I.ring.field));
    }
    t.image_basis = upper.standard_monomials;
    t.image_inverse = inverse(N);
    t.A = multiplication_matrices(E, l, upper);
    t.base_degree = lower.hf == m ? d : d + 1;
    t.hf_prefix = hf_upto(d + 1);
    t.surjective_certified = lower.hf == upper.hf;
    if (scan) t.stabilization_degree = scan->stabilization_degree;
    return {std::move(t), lower, upper, scan};
  }
  if (!qualified) throw CapExceeded(static_cast<int>(cap), hf_upto(cap + 1));
  throw NoSurjectionFound(trials, "no degree up to " + std::to_string(cap) + " admits a surjective linear form");
}

std::pair<Monomial, Monomial> split_monomial(const Monomial& m, unsigned base_degree, const MonomialOrder& order) {
  if (m.degree() < base_degree)
    throw DegreeTooLow("monomial of degree " + std::to_string(m.degree()) + " is below degree " +
                       std::to_string(base_degree));
  std::vector<unsigned> b(m.nvars(), 0);
  unsigned left = base_degree;
  const auto& ranking = order.ranking();
  for (std::size_t k = ranking.size(); k-- > 0 && left > 0;) {
    std::size_t v = ranking[k];
    unsigned take = std::min(m[v], left);
    b[v] = take;
    left -= take;
  }
  Monomial bm(std::move(b));
  return {bm.quotient_of(m), bm};
}

BaseCoordinates macaulay_base(const Triplet& t, const DegreePiece& lower, const DegreePiece& upper) {
  const Field field = t.ring.field;
  if (t.base_degree == t.degree) {
    return [&lower, field](const Monomial& b) {
      return lower.standard_coordinates(Form::monomial(field, b, field.one()));
    };
  }
  return [&upper, &t, field](const Monomial& b) {
    return t.image_inverse.left_multiply(upper.standard_coordinates(Form::monomial(field, b, field.one())));
  };
}

FastNormalForm fast_normal_form(const Form& f, const Triplet& t, const BaseCoordinates& base, PowerSchedule schedule) {
  const Field field = t.ring.field;
  if (f.degree() < t.base_degree)
    throw DegreeTooLow("form of degree " + std::to_string(f.degree()) + " is below degree " +
                       std::to_string(t.base_degree));
  FastNormalForm out;
  out.degree = f.degree();
  out.power = f.degree() - t.degree;
  out.coordinates = zero_vector(field, t.size());
  std::map<std::pair<std::size_t, unsigned>, Matrix> powers;
  auto power_of = [&](std::size_t j, unsigned e) -> const Matrix& {
    auto key = std::make_pair(j, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Matrix P;
    if (schedule == PowerSchedule::binary) {
      P = t.A[j].pow(e);
    } else {
      P = t.A[j];
      for (unsigned k = 1; k < e; ++k) P = P * t.A[j];
    }
    return powers.emplace(key, std::move(P)).first->second;
  };
  for (const auto& [m, c] : f.terms()) {
    auto [a, b] = split_monomial(m, t.base_degree, t.ring.order);
    Vector v = base(b);
    for (std::size_t j = 0; j < a.nvars(); ++j)
      if (a[j] != 0) v = power_of(j, a[j]).left_multiply(v);
    for (std::size_t i = 0; i < v.size(); ++i) out.coordinates[i] += c * v[i];
  }
  return out;
}

Form expand(const FastNormalForm& nf, const Triplet& t) {
  const Field field = t.ring.field;
  Form combo(field, t.ring.nvars(), t.degree);
  for (std::size_t i = 0; i < t.size(); ++i) combo.add_term(t.E[i], nf.coordinates[i]);
  return combo * t.l.pow(nf.power);
}

}  // namespace projzero
