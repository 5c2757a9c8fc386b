#include <schur/oracle.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace schur {

namespace {

// q^e for canonical q: numerator and denominator stay coprime under powers.
Rat rat_pow_ui(const Rat& q, unsigned long e) {
  Rat out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(q.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(q.get_mpq_t()), e);
  return out;
}

Rat rat_pow(const Rat& q, const Int& e) {
  const Int mag = abs(e);
  Rat out = rat_pow_ui(q, to_ulong(mag, "evaluation exponent"));
  if (e < 0) out = 1 / out;
  return out;
}

Rat evaluate(const Character& x, const std::vector<Rat>& point) {
  Rat sum = 0;
  for (const auto& [w, mult] : x.terms()) {
    Rat term = mult;
    for (std::size_t i = 0; i < w.rank(); ++i) term *= rat_pow(point[i], w[i]);
    sum += term;
  }
  return sum;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

std::vector<Rat> random_point(std::size_t n, std::mt19937_64& rng) {
  std::vector<long> pool(49);
  std::iota(pool.begin(), pool.end(), 2);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Rat> point;
  point.reserve(n);
  for (std::size_t i = 0; i < n; ++i) point.emplace_back(pool[i]);
  return point;
}

std::string point_str(const std::vector<Rat>& point) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) os << ',';
    os << point[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace

Rat alternant_eval(const DominantWeight& a, const std::vector<Rat>& point) {
  const std::size_t n = a.rank();
  if (!a.is_polynomial()) {
    throw PreconditionError("alternant: weight must be polynomial, got " + to_string(a.weight()));
  }
  if (point.size() != n) throw PreconditionError("alternant: point size must equal the rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (point[i] == 0) throw PreconditionError("alternant: point entries must be nonzero");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (point[i] == point[j]) {
        throw PreconditionError("alternant: point entries must be pairwise distinct");
      }
    }
  }
  std::vector<std::vector<Rat>> num(n, std::vector<Rat>(n));
  std::vector<std::vector<Rat>> den(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned long shift = static_cast<unsigned long>(n - 1 - j);
      num[i][j] = rat_pow(point[i], a[j] + shift);
      den[i][j] = rat_pow_ui(point[i], shift);
    }
  }
  return determinant(std::move(num)) / determinant(std::move(den));
}

OracleReport verify_chi_against_alternant(const DominantWeight& a, unsigned trials,
                                          std::uint64_t seed) {
  OracleReport report;
  report.identity = "alternant_agreement";
  std::mt19937_64 rng(seed);
  const Character chi = weyl_character(a);
  for (unsigned t = 0; t < trials; ++t) {
    const std::vector<Rat> point = random_point(a.rank(), rng);
    const Rat lhs = evaluate(chi, point);
    const Rat rhs = alternant_eval(a, point);
    ++report.checked;
    if (lhs != rhs) {
      report.failures.push_back(
          {"a=" + to_string(a.weight()) + ", point=" + point_str(point), rhs.get_str(),
           lhs.get_str()});
    }
  }
  return report;
}

Int dimension_via_product(const DominantWeight& a) {
  const std::size_t n = a.rank();
  Rat prod = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long gap = static_cast<long>(j - i);
      prod *= Rat(a[i] - a[j] + gap) / Rat(gap);
    }
  }
  prod.canonicalize();
  if (prod.get_den() != 1) {
    throw std::logic_error("Weyl dimension product is not integral for " + to_string(a.weight()));
  }
  return prod.get_num();
}

namespace {

using Sweep = std::vector<DominantWeight>;

// All polynomial dominant weights of rank n with degree up to max_degree.
Sweep degree_sweep(std::size_t n, unsigned long max_degree) {
  Sweep out;
  for (unsigned long r = 0; r <= max_degree; ++r) {
    Sweep layer = lambda_plus(n, r);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

void fail(OracleReport& rep, std::string inputs, std::string expected, std::string got) {
  rep.failures.push_back({std::move(inputs), std::move(expected), std::move(got)});
}

std::mt19937_64 seeded(const SuiteOptions& opt, std::uint64_t salt) {
  return std::mt19937_64(opt.seed * 1000003ULL + salt);
}

OracleReport check_padic_reconstruction(const SuiteOptions& opt) {
  OracleReport rep{"padic_reconstruction", 0, {}};
  for (std::size_t n = 1; n <= opt.max_n; ++n) {
    for (const DominantWeight& a : degree_sweep(n, opt.max_degree)) {
      for (const Int& p : opt.primes) {
        PAdicDecomposition dec = p_adic_decompose(a, p);
        ++rep.checked;
        if (dec.reconstruct() != a.weight()) {
          fail(rep, "a=" + to_string(a.weight()) + ", p=" + p.get_str(), to_string(a.weight()),
               to_string(dec.reconstruct()));
          continue;
        }
        for (const DominantWeight& digit : dec.digits) {
          if (!is_column_regular(digit, p)) {
            fail(rep, "a=" + to_string(a.weight()) + ", p=" + p.get_str(),
                 "column regular digits", "digit " + to_string(digit.weight()));
          }
        }
      }
    }
  }
  return rep;
}

OracleReport check_orbit_size_law(const SuiteOptions& opt) {
  OracleReport rep{"orbit_size_law", 0, {}};
  for (std::size_t n = 1; n <= std::min<std::size_t>(opt.max_n, 4); ++n) {
    for (const DominantWeight& a : degree_sweep(n, std::min(opt.max_degree, 8ul))) {
      Int stabilizer = 1;
      std::size_t run = 1;
      for (std::size_t i = 1; i <= n; ++i) {
        if (i < n && a[i] == a[i - 1]) {
          ++run;
        } else {
          stabilizer *= factorial(run);
          run = 1;
        }
      }
      const Int orbit_size = static_cast<long>(weyl_orbit(a).size());
      ++rep.checked;
      if (orbit_size * stabilizer != factorial(n)) {
        fail(rep, "a=" + to_string(a.weight()), factorial(n).get_str(),
             Int(orbit_size * stabilizer).get_str());
      }
    }
  }
  return rep;
}

OracleReport check_dominance_partial_order(const SuiteOptions& opt) {
  OracleReport rep{"dominance_partial_order", 0, {}};
  std::mt19937_64 rng = seeded(opt, 3);
  for (std::size_t n = 2; n <= std::min<std::size_t>(opt.max_n, 5); ++n) {
    const Sweep layer = lambda_plus(n, std::min(opt.max_degree, 12ul));
    if (layer.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, layer.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const DominantWeight& x = layer[pick(rng)];
      const DominantWeight& y = layer[pick(rng)];
      const DominantWeight& z = layer[pick(rng)];
      ++rep.checked;
      if (!dominance_leq(x, x)) {
        fail(rep, "x=" + to_string(x.weight()), "x <= x", "not reflexive");
      }
      if (dominance_leq(x, y) && dominance_leq(y, x) && x != y) {
        fail(rep, "x=" + to_string(x.weight()) + ", y=" + to_string(y.weight()), "x == y",
             "antisymmetry violated");
      }
      if (dominance_leq(x, y) && dominance_leq(y, z) && !dominance_leq(x, z)) {
        fail(rep,
             "x=" + to_string(x.weight()) + ", y=" + to_string(y.weight()) +
                 ", z=" + to_string(z.weight()),
             "x <= z", "transitivity violated");
      }
    }
  }
  return rep;
}

OracleReport check_w0(const SuiteOptions& opt) {
  OracleReport rep{"w0_involution", 0, {}};
  for (std::size_t n = 1; n <= opt.max_n; ++n) {
    for (const DominantWeight& a : degree_sweep(n, std::min(opt.max_degree, 8ul))) {
      const std::vector<Weight> orbit = weyl_orbit(a);
      const Weight rev = w0_apply(a);
      ++rep.checked;
      if (degree(rev) != degree(a.weight())) {
        fail(rep, "a=" + to_string(a.weight()), degree(a.weight()).get_str(),
             degree(rev).get_str());
      }
      if (std::find(orbit.begin(), orbit.end(), rev) == orbit.end()) {
        fail(rep, "a=" + to_string(a.weight()), "w0(a) in orbit", to_string(rev));
      }
      if (w0_apply(rev) != a.weight()) {
        fail(rep, "a=" + to_string(a.weight()), "w0 involutive", to_string(w0_apply(rev)));
      }
    }
  }
  return rep;
}

OracleReport check_regular_shift(const SuiteOptions& opt) {
  OracleReport rep{"steinberg_shift_regular", 0, {}};
  for (const Int& p : opt.primes) {
    for (unsigned long m = 1; int_pow(p, m) <= 9; ++m) {
      const Int P = int_pow(p, m);
      for (std::size_t n = 2; n <= std::min<std::size_t>(opt.max_n, 3); ++n) {
        const Weight st = (P - 1) * delta(n);
        for (const DominantWeight& lam : box_partitions(n, P.get_ui() - 1)) {
          ++rep.checked;
          const DominantWeight shifted(st + w0_apply(lam));
          if (!in_Xm(shifted, p, m)) {
            fail(rep, "lam=" + to_string(lam.weight()) + ", p=" + p.get_str() +
                     ", m=" + std::to_string(m),
                 "column p^m regular", to_string(shifted.weight()));
          }
        }
      }
    }
  }
  return rep;
}

OracleReport check_chi_symmetry(const SuiteOptions& opt) {
  OracleReport rep{"chi_weyl_symmetry", 0, {}};
  std::mt19937_64 rng = seeded(opt, 6);
  for (std::size_t n = 2; n <= std::min<std::size_t>(opt.max_n, 4); ++n) {
    for (const DominantWeight& a : degree_sweep(n, opt.max_degree)) {
      const Character chi = weyl_character(a);
      if (chi.terms().empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, chi.terms().size() - 1);
      for (int trial = 0; trial < 4; ++trial) {
        auto it = chi.terms().begin();
        std::advance(it, pick(rng));
        std::vector<Int> permuted = it->first.entries();
        std::shuffle(permuted.begin(), permuted.end(), rng);
        const Weight image{std::vector<Int>(permuted)};
        ++rep.checked;
        if (chi.multiplicity(image) != it->second) {
          fail(rep, "a=" + to_string(a.weight()) + ", w=" + to_string(it->first),
               it->second.get_str(), chi.multiplicity(image).get_str());
        }
      }
    }
  }
  return rep;
}

OracleReport check_chi_highest_weight(const SuiteOptions& opt) {
  OracleReport rep{"chi_highest_weight", 0, {}};
  for (std::size_t n = 1; n <= opt.max_n; ++n) {
    for (const DominantWeight& a : degree_sweep(n, opt.max_degree)) {
      const Character chi = weyl_character(a);
      ++rep.checked;
      if (chi.multiplicity(a) != 1) {
        fail(rep, "a=" + to_string(a.weight()), "1", chi.multiplicity(a).get_str());
      }
      for (const auto& [w, mult] : chi.terms()) {
        std::vector<Int> sorted = w.entries();
        std::sort(sorted.begin(), sorted.end(), std::greater<Int>());
        if (!dominance_leq(Weight(std::move(sorted)), a)) {
          fail(rep, "a=" + to_string(a.weight()), "support below a", to_string(w));
        }
      }
    }
  }
  return rep;
}

OracleReport check_weyl_dimension(const SuiteOptions& opt) {
  OracleReport rep{"weyl_dimension_product", 0, {}};
  for (std::size_t n = 1; n <= opt.max_n; ++n) {
    for (const DominantWeight& a : degree_sweep(n, opt.max_degree)) {
      ++rep.checked;
      const Int via_tableaux = weyl_character(a).dimension();
      const Int via_product = dimension_via_product(a);
      if (via_tableaux != via_product) {
        fail(rep, "a=" + to_string(a.weight()), via_product.get_str(), via_tableaux.get_str());
      }
    }
  }
  return rep;
}

void check_brauer_instance(OracleReport& rep, const DominantWeight& lam, const Weight& nu) {
  const Character lhs = weyl_character(lam) * orbit_sum(nu);
  Character rhs(lam.rank());
  for (const auto& [sign, w] : brauer_expand(lam, nu)) {
    rhs = rhs + Int(sign) * weyl_character(w);
  }
  ++rep.checked;
  if (lhs != rhs) {
    fail(rep, "lam=" + to_string(lam.weight()) + ", nu=" + to_string(nu), "equal characters",
         "difference has " + std::to_string((lhs - rhs).terms().size()) + " terms");
  }
}

OracleReport check_brauer_general(const SuiteOptions& opt) {
  OracleReport rep{"brauer_identity", 0, {}};
  const unsigned long budget = std::min(opt.max_degree, 14ul);
  for (std::size_t n = 2; n <= std::min<std::size_t>(opt.max_n, 3); ++n) {
    for (unsigned long rl = 0; rl <= budget; ++rl) {
      for (const DominantWeight& lam : lambda_plus(n, rl)) {
        for (unsigned long rn = 0; rn + rl <= budget; ++rn) {
          for (const DominantWeight& nu : lambda_plus(n, rn)) {
            check_brauer_instance(rep, lam, nu);
          }
        }
      }
    }
  }
  return rep;
}

OracleReport check_brauer_regime(const SuiteOptions& opt) {
  OracleReport rep{"brauer_dominant_regime", 0, {}};
  for (const Int& p : opt.primes) {
    for (std::size_t n = 2; n <= std::min<std::size_t>(opt.max_n, 3); ++n) {
      const DominantWeight st((p - 1) * delta(n));
      for (const DominantWeight& nu : box_partitions(n, p.get_ui() - 1)) {
        check_brauer_instance(rep, st, nu);
        const auto expansion = brauer_expand(st, nu);
        ++rep.checked;
        if (expansion.size() != weyl_orbit(nu).size()) {
          fail(rep, "p=" + p.get_str() + ", nu=" + to_string(nu.weight()),
               std::to_string(weyl_orbit(nu).size()) + " summands",
               std::to_string(expansion.size()) + " summands");
        }
        std::vector<DominantWeight> reps;
        for (const auto& [sign, w] : expansion) {
          if (sign != +1) {
            fail(rep, "p=" + p.get_str() + ", nu=" + to_string(nu.weight()), "all signs +1",
                 "sign " + std::to_string(sign) + " at " + to_string(w.weight()));
          }
          reps.push_back(w);
        }
        std::sort(reps.begin(), reps.end());
        if (std::adjacent_find(reps.begin(), reps.end()) != reps.end()) {
          fail(rep, "p=" + p.get_str() + ", nu=" + to_string(nu.weight()), "distinct summands",
               "repeat found");
        }
      }
    }
  }
  return rep;
}

OracleReport check_twist_dimension(const SuiteOptions& opt) {
  OracleReport rep{"twist_dimension_multiplicative", 0, {}};
  std::mt19937_64 rng = seeded(opt, 10);
  for (std::size_t n = 2; n <= opt.max_n; ++n) {
    const Sweep sweep = degree_sweep(n, std::min(opt.max_degree, 6ul));
    std::uniform_int_distribution<std::size_t> pick(0, sweep.size() - 1);
    std::uniform_int_distribution<long> pick_k(1, 9);
    for (int trial = 0; trial < 25; ++trial) {
      const DominantWeight& a = sweep[pick(rng)];
      const DominantWeight& b = sweep[pick(rng)];
      const Int k = pick_k(rng);
      const Character x = weyl_character(a);
      const Character y = weyl_character(b);
      ++rep.checked;
      const Int lhs = (x * frobenius_twist(y, k)).dimension();
      if (lhs != x.dimension() * y.dimension()) {
        fail(rep,
             "a=" + to_string(a.weight()) + ", b=" + to_string(b.weight()) +
                 ", k=" + k.get_str(),
             Int(x.dimension() * y.dimension()).get_str(), lhs.get_str());
      }
    }
  }
  return rep;
}

OracleReport check_twist_homomorphism(const SuiteOptions& opt) {
  OracleReport rep{"twist_ring_homomorphism", 0, {}};
  std::mt19937_64 rng = seeded(opt, 11);
  for (std::size_t n = 2; n <= opt.max_n; ++n) {
    const Sweep sweep = degree_sweep(n, std::min(opt.max_degree, 6ul));
    std::uniform_int_distribution<std::size_t> pick(0, sweep.size() - 1);
    std::uniform_int_distribution<long> pick_k(2, 5);
    for (int trial = 0; trial < 15; ++trial) {
      const Character x = weyl_character(sweep[pick(rng)]);
      const Character y = weyl_character(sweep[pick(rng)]);
      const Int k = pick_k(rng);
      ++rep.checked;
      if (frobenius_twist(x * y, k) != frobenius_twist(x, k) * frobenius_twist(y, k)) {
        fail(rep, "k=" + k.get_str(), "twist multiplicative", "mismatch");
      }
      if (frobenius_twist(x + y, k) != frobenius_twist(x, k) + frobenius_twist(y, k)) {
        fail(rep, "k=" + k.get_str(), "twist additive", "mismatch");
      }
      if (frobenius_twist(frobenius_twist(x, k), k) != frobenius_twist(x, k * k)) {
        fail(rep, "k=" + k.get_str(), "twist composes", "mismatch");
      }
    }
  }
  return rep;
}

OracleReport check_zhat_dimension(const SuiteOptions& opt) {
  OracleReport rep{"zhat_dimension", 0, {}};
  std::mt19937_64 rng = seeded(opt, 12);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (std::size_t n = 2; n <= opt.max_n; ++n) {
    for (const Int& p : opt.primes) {
      const Int expected = int_pow(p, static_cast<unsigned long>(n * (n - 1) / 2));
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Int> entries(n);
        for (Int& e : entries) e = entry(rng);
        const Weight lam{std::vector<Int>(entries)};
        ++rep.checked;
        const Int got = zhat_character(lam, p).dimension();
        if (got != expected) {
          fail(rep, "lam=" + to_string(lam) + ", p=" + p.get_str(), expected.get_str(),
               got.get_str());
        }
      }
    }
  }
  return rep;
}

OracleReport check_alternant(const SuiteOptions& opt) {
  OracleReport rep{"alternant_agreement", 0, {}};
  std::mt19937_64 salt = seeded(opt, 13);
  for (std::size_t n = 1; n <= std::min<std::size_t>(opt.max_n, 4); ++n) {
    for (const DominantWeight& a : degree_sweep(n, std::min(opt.max_degree, 10ul))) {
      OracleReport sub = verify_chi_against_alternant(a, 5, salt());
      rep.checked += sub.checked;
      rep.failures.insert(rep.failures.end(), sub.failures.begin(), sub.failures.end());
      ++rep.checked;
      const Int via_product = dimension_via_product(a);
      const Int via_tableaux = weyl_character(a).dimension();
      if (via_product != via_tableaux) {
        fail(rep, "a=" + to_string(a.weight()), via_product.get_str(), via_tableaux.get_str());
      }
    }
  }
  return rep;
}

}  // namespace

std::vector<OracleReport> run_suite(const SuiteOptions& opt) {
  if (opt.max_n == 0) throw PreconditionError("suite: max_n must be at least 1");
  for (const Int& p : opt.primes) {
    if (p < 2) throw PreconditionError("suite: moduli must be at least 2");
  }
  std::vector<OracleReport> reports;
  reports.push_back(check_padic_reconstruction(opt));
  reports.push_back(check_orbit_size_law(opt));
  reports.push_back(check_dominance_partial_order(opt));
  reports.push_back(check_w0(opt));
  reports.push_back(check_regular_shift(opt));
  reports.push_back(check_chi_symmetry(opt));
  reports.push_back(check_chi_highest_weight(opt));
  reports.push_back(check_weyl_dimension(opt));
  reports.push_back(check_brauer_general(opt));
  reports.push_back(check_brauer_regime(opt));
  reports.push_back(check_twist_dimension(opt));
  reports.push_back(check_twist_homomorphism(opt));
  reports.push_back(check_zhat_dimension(opt));
  reports.push_back(check_alternant(opt));
  return reports;
}

}  // namespace schur
