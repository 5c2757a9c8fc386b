#include <schur/character.hpp>

#include <algorithm>
#include <string>

namespace schur {

namespace {

void require_same_rank(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw PreconditionError(std::string(op) + ": rank mismatch (" + std::to_string(a) + " vs " +
                            std::to_string(b) + ")");
  }
}

void add_into(std::map<Weight, Int>& terms, const Weight& w, const Int& mult) {
  auto it = terms.find(w);
  if (it == terms.end()) {
    if (mult != 0) terms.emplace(w, mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) terms.erase(it);
}

}  // namespace

Character::Character(std::size_t rank) : rank_(rank) {
  if (rank == 0) throw PreconditionError("character: rank must be at least 1");
}

Character::Character(std::size_t rank, std::map<Weight, Int> terms) : Character(rank) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.rank() != rank) {
      throw PreconditionError("character term " + to_string(it->first) + " has rank " +
                              std::to_string(it->first.rank()) + ", expected " +
                              std::to_string(rank));
    }
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
  terms_ = std::move(terms);
}

Int Character::dimension() const {
  Int sum = 0;
  for (const auto& [w, mult] : terms_) sum += mult;
  return sum;
}

Int Character::multiplicity(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

Character operator+(const Character& a, const Character& b) {
  require_same_rank(a.rank_, b.rank_, "character addition");
  std::map<Weight, Int> terms = a.terms_;
  for (const auto& [w, mult] : b.terms_) add_into(terms, w, mult);
  return Character(a.rank_, std::move(terms));
}

Character operator-(const Character& a, const Character& b) {
  require_same_rank(a.rank_, b.rank_, "character subtraction");
  std::map<Weight, Int> terms = a.terms_;
  for (const auto& [w, mult] : b.terms_) add_into(terms, w, -mult);
  return Character(a.rank_, std::move(terms));
}

Character operator*(const Character& a, const Character& b) {
  require_same_rank(a.rank_, b.rank_, "character multiplication");
  std::map<Weight, Int> terms;
  for (const auto& [wa, ma] : a.terms_) {
    for (const auto& [wb, mb] : b.terms_) add_into(terms, wa + wb, ma * mb);
  }
  return Character(a.rank_, std::move(terms));
}

Character operator*(const Int& c, const Character& a) {
  std::map<Weight, Int> terms;
  if (c != 0) {
    terms = a.terms_;
    for (auto& [w, mult] : terms) mult *= c;
  }
  return Character(a.rank_, std::move(terms));
}

Character exponential(const Weight& a) {
  std::map<Weight, Int> terms;
  terms.emplace(a, 1);
  return Character(a.rank(), std::move(terms));
}

Character orbit_sum(const Weight& a) {
  std::map<Weight, Int> terms;
  for (const Weight& w : weyl_orbit(a)) terms.emplace(w, 1);
  return Character(a.rank(), std::move(terms));
}

SignedChi dot_normalize(const Weight& v) {
  const std::size_t n = v.rank();
  std::vector<Int> shifted = (v + delta(n)).entries();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (shifted[i] == shifted[j]) return SignedChi{};
    }
  }
  int inversions = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (shifted[i] < shifted[j]) ++inversions;
    }
  }
  std::sort(shifted.begin(), shifted.end(), std::greater<Int>());
  SignedChi out;
  out.sign = inversions % 2 == 0 ? 1 : -1;
  out.rep.emplace(Weight(std::move(shifted)) - delta(n));
  return out;
}

namespace {

// Weight multiset of all semistandard tableaux of shape `a` (a partition of
// at most n rows) filled from 1..n: rows weakly increase, columns strictly
// increase. With the per-cell bounds below every partial filling completes,
// so the walk is linear in the number of tableaux.
Character chi_polynomial(const DominantWeight& a) {
  const std::size_t n = a.rank();
  std::vector<unsigned long> shape;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] > 0) shape.push_back(to_ulong(a[i], "tableau row length"));
  }
  std::map<Weight, Int> terms;
  if (shape.empty()) {
    terms.emplace(Weight(std::vector<Int>(n, Int(0))), 1);
    return Character(n, std::move(terms));
  }

  struct Cell {
    std::size_t row;
    unsigned long col;
    std::size_t max_entry;  // n minus the number of cells below in the column
  };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (unsigned long c = 0; c < shape[r]; ++c) {
      std::size_t below = 0;
      for (std::size_t rr = r + 1; rr < shape.size(); ++rr) {
        if (shape[rr] > c) ++below;
      }
      cells.push_back({r, c, n - below});
    }
  }

  std::vector<std::vector<std::size_t>> fill(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) fill[r].assign(shape[r], 0);
  std::vector<unsigned long> content(n, 0);

  auto record = [&] {
    std::vector<Int> entries(n);
    for (std::size_t i = 0; i < n; ++i) entries[i] = static_cast<long>(content[i]);
    add_into(terms, Weight(std::move(entries)), 1);
  };

  auto walk = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      record();
      return;
    }
    const Cell& cell = cells[idx];
    std::size_t lo = cell.row + 1;
    if (cell.col > 0) lo = std::max(lo, fill[cell.row][cell.col - 1]);
    if (cell.row > 0) lo = std::max(lo, fill[cell.row - 1][cell.col] + 1);
    for (std::size_t v = lo; v <= cell.max_entry; ++v) {
      fill[cell.row][cell.col] = v;
      ++content[v - 1];
      self(self, idx + 1);
      --content[v - 1];
    }
  };
  walk(walk, 0);
  return Character(n, std::move(terms));
}

Character chi_dominant(const DominantWeight& a) {
  if (a.is_polynomial()) return chi_polynomial(a);
  // Determinant twist: chi(a) = chi(a - a_n * omega) * e^(a_n * omega).
  const Int last = a[a.rank() - 1];
  const Weight shift = last * omega(a.rank());
  return chi_polynomial(DominantWeight(a.weight() - shift)) * exponential(shift);
}

}  // namespace

Character weyl_character(const Weight& v) {
  SignedChi nf = dot_normalize(v);
  if (nf.sign == 0) return Character(v.rank());
  Character chi = chi_dominant(*nf.rep);
  return nf.sign > 0 ? chi : Int(-1) * chi;
}

Character frobenius_twist(const Character& x, const Int& factor) {
  if (factor < 1) throw PreconditionError("frobenius twist: factor must be at least 1");
  std::map<Weight, Int> terms;
  for (const auto& [w, mult] : x.terms()) terms.emplace(factor * w, mult);
  return Character(x.rank(), std::move(terms));
}

std::vector<std::pair<int, DominantWeight>> brauer_expand(const DominantWeight& lam,
                                                          const Weight& nu) {
  require_same_rank(lam.rank(), nu.rank(), "brauer expansion");
  std::vector<std::pair<int, DominantWeight>> out;
  for (const Weight& mu : weyl_orbit(nu)) {
    SignedChi nf = dot_normalize(lam.weight() + mu);
    if (nf.sign != 0) out.emplace_back(nf.sign, *nf.rep);
  }
  return out;
}

Character zhat_character(const Weight& lam, const Int& p) {
  if (p < 2) throw PreconditionError("zhat character: p must be at least 2");
  const std::size_t n = lam.rank();
  const Weight st = (p - 1) * delta(n);
  return exponential(lam - st) * weyl_character(st);
}

}  // namespace schur
