#include <schur/weight.hpp>

#include <algorithm>
#include <sstream>

namespace schur {

namespace {

void require_same_rank(const Weight& a, const Weight& b, const char* op) {
  if (a.rank() != b.rank()) {
    throw PreconditionError(std::string(op) + ": rank mismatch (" + std::to_string(a.rank()) +
                            " vs " + std::to_string(b.rank()) + ")");
  }
}

bool weakly_decreasing(const std::vector<Int>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] < v[i + 1]) return false;
  }
  return true;
}

}  // namespace

Weight::Weight(std::vector<Int> entries) : entries_(std::move(entries)) {}

Weight::Weight(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long e : entries) entries_.emplace_back(e);
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                      b.entries_.end());
}

Weight operator+(const Weight& a, const Weight& b) {
  require_same_rank(a, b, "weight addition");
  std::vector<Int> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = a[i] + b[i];
  return Weight(std::move(out));
}

Weight operator-(const Weight& a, const Weight& b) {
  require_same_rank(a, b, "weight subtraction");
  std::vector<Int> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = a[i] - b[i];
  return Weight(std::move(out));
}

Weight operator*(const Int& c, const Weight& a) {
  std::vector<Int> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = c * a[i];
  return Weight(std::move(out));
}

DominantWeight::DominantWeight(Weight w) : w_(std::move(w)) {
  if (w_.rank() == 0) throw PreconditionError("dominant weight: rank must be at least 1");
  if (!weakly_decreasing(w_.entries())) {
    throw PreconditionError("not dominant: " + to_string(w_));
  }
}

DominantWeight::DominantWeight(std::initializer_list<long> entries)
    : DominantWeight(Weight(entries)) {}

bool DominantWeight::is_polynomial() const { return schur::is_polynomial(w_); }

Weight delta(std::size_t n) {
  if (n == 0) throw PreconditionError("delta: rank must be at least 1");
  std::vector<Int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<long>(n - 1 - i);
  return Weight(std::move(out));
}

Weight omega(std::size_t n) {
  if (n == 0) throw PreconditionError("omega: rank must be at least 1");
  return Weight(std::vector<Int>(n, Int(1)));
}

Weight epsilon(std::size_t n, std::size_t i) {
  if (n == 0) throw PreconditionError("epsilon: rank must be at least 1");
  if (i < 1 || i > n) {
    throw PreconditionError("epsilon: index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(n));
  }
  std::vector<Int> out(n, Int(0));
  out[i - 1] = 1;
  return Weight(std::move(out));
}

Int degree(const Weight& a) {
  Int sum = 0;
  for (const Int& e : a.entries()) sum += e;
  return sum;
}

bool is_dominant(const Weight& a) { return weakly_decreasing(a.entries()); }

bool is_polynomial(const Weight& a) {
  for (const Int& e : a.entries()) {
    if (e < 0) return false;
  }
  return true;
}

Int breadth(const DominantWeight& a) { return a[0]; }

bool dominance_leq(const Weight& a, const Weight& b) {
  require_same_rank(a, b, "dominance comparison");
  Int sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    sa += a[i];
    sb += b[i];
    if (i + 1 < a.rank() && sa > sb) return false;
  }
  return sa == sb;
}

Weight w0_apply(const Weight& a) {
  std::vector<Int> out(a.entries().rbegin(), a.entries().rend());
  return Weight(std::move(out));
}

std::vector<Weight> weyl_orbit(const Weight& a) {
  std::vector<Int> v = a.entries();
  std::sort(v.begin(), v.end(), std::greater<Int>());
  std::vector<Weight> orbit;
  do {
    orbit.emplace_back(v);
  } while (std::prev_permutation(v.begin(), v.end()));
  return orbit;
}

bool is_column_regular(const DominantWeight& a, const Int& l) {
  if (l < 2) throw PreconditionError("column regularity: modulus must be at least 2");
  const std::size_t n = a.rank();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (a[i] - a[i + 1] >= l) return false;
  }
  return a[n - 1] < l;
}

bool in_Xm(const DominantWeight& a, const Int& p, unsigned long m) {
  if (p < 2) throw PreconditionError("X_m membership: p must be at least 2");
  if (m < 1) throw PreconditionError("X_m membership: m must be at least 1");
  return is_column_regular(a, int_pow(p, m));
}

Weight PAdicDecomposition::reconstruct() const {
  if (digits.empty()) throw PreconditionError("p-adic reconstruction: no digits");
  Weight sum(std::vector<Int>(digits.front().rank(), Int(0)));
  Int scale = 1;
  for (const DominantWeight& d : digits) {
    sum = sum + scale * d.weight();
    scale *= base;
  }
  return sum;
}

// The digit weights are read off the difference vector d_i = a_i - a_{i+1}
// (d_n = a_n): expanding each d_i in base p and resumming suffixes yields
// exactly the column p-regular digits, and base-p uniqueness of the d_i
// expansions gives uniqueness of the weight decomposition.
PAdicDecomposition p_adic_decompose(const DominantWeight& a, const Int& p) {
  if (p < 2) throw PreconditionError("p-adic decomposition: p must be at least 2");
  if (!a.is_polynomial()) {
    throw PreconditionError("p-adic decomposition requires a polynomial weight, got " +
                            to_string(a.weight()));
  }
  const std::size_t n = a.rank();
  std::vector<Int> diff(n);
  for (std::size_t i = 0; i + 1 < n; ++i) diff[i] = a[i] - a[i + 1];
  diff[n - 1] = a[n - 1];

  std::vector<std::vector<Int>> diff_digits(n);
  std::size_t levels = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int v = diff[i];
    do {
      diff_digits[i].push_back(v % p);
      v /= p;
    } while (v > 0);
    levels = std::max(levels, diff_digits[i].size());
  }

  PAdicDecomposition out;
  out.base = p;
  for (std::size_t j = 0; j < levels; ++j) {
    std::vector<Int> entries(n);
    Int suffix = 0;
    for (std::size_t i = n; i-- > 0;) {
      suffix += j < diff_digits[i].size() ? diff_digits[i][j] : Int(0);
      entries[i] = suffix;
    }
    out.digits.emplace_back(Weight(std::move(entries)));
  }
  while (out.digits.size() > 1 && degree(out.digits.back()) == 0) out.digits.pop_back();
  return out;
}

Int p_adic_breadth(const DominantWeight& a, const Int& p) {
  PAdicDecomposition dec = p_adic_decompose(a, p);
  Int best = 0;
  for (const DominantWeight& d : dec.digits) best = std::max(best, breadth(d));
  return best;
}

namespace {

void extend_partition(std::vector<Int>& prefix, std::size_t n, const Int& remaining,
                      const Int& max_part, std::vector<DominantWeight>& out) {
  if (prefix.size() == n) {
    if (remaining == 0) out.emplace_back(Weight(prefix));
    return;
  }
  // Entries still to place must be able to absorb the remaining degree.
  const Int slots = static_cast<long>(n - prefix.size());
  for (Int part = std::min(max_part, remaining); part * slots >= remaining; --part) {
    prefix.push_back(part);
    extend_partition(prefix, n, remaining - part, part, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DominantWeight> lambda_plus(std::size_t n, unsigned long r) {
  if (n == 0) throw PreconditionError("lambda_plus: rank must be at least 1");
  std::vector<DominantWeight> out;
  std::vector<Int> prefix;
  extend_partition(prefix, n, Int(r), Int(r), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DominantWeight> box_partitions(std::size_t n, unsigned long max_part) {
  if (n == 0) throw PreconditionError("box_partitions: rank must be at least 1");
  std::vector<DominantWeight> out;
  std::vector<Int> prefix;
  // Enumerate weakly decreasing tuples directly, largest first entry down.
  struct Rec {
    std::size_t n;
    std::vector<DominantWeight>& out;
    void go(std::vector<Int>& prefix, const Int& cap) {
      if (prefix.size() == n) {
        out.emplace_back(Weight(prefix));
        return;
      }
      for (Int part = cap; part >= 0; --part) {
        prefix.push_back(part);
        go(prefix, part);
        prefix.pop_back();
      }
    }
  } rec{n, out};
  rec.go(prefix, Int(static_cast<long>(max_part)));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Weight& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (i) os << ',';
    os << a[i].get_str();
  }
  os << ')';
  return os.str();
}

Weight parse_weight(const std::string& text) {
  std::string s = text;
  auto trim = [](std::string& t) {
    const char* ws = " \t\r\n";
    const auto b = t.find_first_not_of(ws);
    if (b == std::string::npos) {
      t.clear();
      return;
    }
    t = t.substr(b, t.find_last_not_of(ws) - b + 1);
  };
  trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw std::invalid_argument("empty weight literal: \"" + text + "\"");

  std::vector<Int> entries;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    trim(tok);
    try {
      entries.emplace_back(tok, 10);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad weight entry \"" + tok + "\" in \"" + text + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Weight(std::move(entries));
}

}  // namespace schur
