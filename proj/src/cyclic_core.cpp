#include "kzdisk/cyclic_core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace kzdisk {

std::string_view to_string(CoverErrorCode code) {
  switch (code) {
    case CoverErrorCode::DegreeTooSmall: return "degree_too_small";
    case CoverErrorCode::ExponentOutOfRange: return "exponent_out_of_range";
    case CoverErrorCode::NotCoprime: return "not_coprime";
    case CoverErrorCode::SumNotDivisible: return "sum_not_divisible";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  return v == Verdict::TotallyDegenerate ? "TotallyDegenerate" : "Inconclusive";
}

std::string CoverParams::to_string() const {
  std::ostringstream os;
  os << n_ << ':' << a_[0] << ',' << a_[1] << ',' << a_[2] << ',' << a_[3];
  return os.str();
}

CoverParams validate_params(int n, std::array<int, 4> a) {
  if (n < 2) {
    throw CoverError(CoverErrorCode::DegreeTooSmall,
                     "cover degree N=" + std::to_string(n) + " must be at least 2");
  }
  for (int x : a) {
    if (x <= 0 || x >= n) {
      throw CoverError(CoverErrorCode::ExponentOutOfRange,
                       "branching exponent " + std::to_string(x) + " outside (0, " +
                           std::to_string(n) + ")");
    }
  }
  int g = n;
  for (int x : a) g = std::gcd(g, x);
  if (g != 1) {
    throw CoverError(CoverErrorCode::NotCoprime,
                     "gcd(N, a1..a4) = " + std::to_string(g) + ", expected 1");
  }
  const int sum = a[0] + a[1] + a[2] + a[3];
  if (sum % n != 0) {
    throw CoverError(CoverErrorCode::SumNotDivisible,
                     "exponent sum " + std::to_string(sum) + " is not 0 mod " + std::to_string(n));
  }
  return CoverParams(n, a);
}

namespace {

int parse_int(std::string_view s) {
  int value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

CoverParams parse_cover(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("cover must look like N:a1,a2,a3,a4");
  }
  const int n = parse_int(text.substr(0, colon));
  std::array<int, 4> a{};
  std::string_view rest = text.substr(colon + 1);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    const auto comma = rest.find(',');
    if ((mu < 3) == (comma == std::string_view::npos)) {
      throw std::invalid_argument("cover must list exactly four exponents");
    }
    a[mu] = parse_int(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return validate_params(n, a);
}

int genus(const CoverParams& p) {
  int gcd_sum = 0;
  for (int x : p.exponents()) gcd_sum += std::gcd(x, p.degree());
  // gcd_sum is even: sum a_mu = 0 mod N forces an even number of odd terms.
  return p.degree() + 1 - gcd_sum / 2;
}

std::array<int, 4> ramification_orders(const CoverParams& p) {
  std::array<int, 4> d{};
  for (std::size_t mu = 0; mu < 4; ++mu) d[mu] = p.degree() / std::gcd(p.exponents()[mu], p.degree());
  return d;
}

int EigenspaceDims::total() const { return std::accumulate(dims.begin(), dims.end(), 0); }

EigenspaceDims eigenspace_dims(const CoverParams& p) {
  const int n = p.degree();
  EigenspaceDims out;
  out.dims.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    // sum of fractional parts <i a_mu / N>, scaled by N; always a multiple of N
    int scaled = 0;
    for (int x : p.exponents()) scaled += (i * x) % n;
    out.dims.push_back(scaled / n - 1);
  }
  return out;
}

std::optional<int> square_root_index(const CoverParams& p) {
  const int n = p.degree();
  for (int m = 0; m < n; ++m) {
    const bool ok = std::all_of(p.exponents().begin(), p.exponents().end(), [&](int x) {
      const int t = 2 * m * x;
      return t % n == 0 && (t / n) % 2 == 1;
    });
    if (ok) return m;
  }
  return std::nullopt;
}

RootOfUnitySpectrum::RootOfUnitySpectrum(int order, std::vector<int> exponents)
    : order_(order), exponents_(std::move(exponents)) {
  if (order_ < 1) throw std::invalid_argument("spectrum order must be positive");
  if (exponents_.empty()) throw std::invalid_argument("spectrum must be nonempty");
  for (int e : exponents_) {
    if (e < 0 || e >= order_) {
      throw std::invalid_argument("spectrum exponent " + std::to_string(e) + " outside [0, " +
                                  std::to_string(order_) + ")");
    }
  }
  std::sort(exponents_.begin(), exponents_.end());
  if (exponents_.front() != 0) {
    throw std::invalid_argument("spectrum must contain exponent 0 (the constant function)");
  }
}

RootOfUnitySpectrum mqplus_spectrum(const CoverParams& p) {
  const auto j = square_root_index(p);
  if (!j) {
    throw DomainError("cover " + p.to_string() +
                      " is not orientable: the pillowcase differential has no square root");
  }
  const int n = p.degree();
  const auto dims = eigenspace_dims(p);
  std::vector<int> exps;
  for (int i = 1; i < n; ++i) {
    const int e = ((i - *j) % n + n) % n;
    exps.insert(exps.end(), static_cast<std::size_t>(dims.at(i)), e);
  }
  return RootOfUnitySpectrum(n, std::move(exps));
}

namespace {

void check_index_set(std::span<const int> idx, int g) {
  std::vector<int> sorted(idx.begin(), idx.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("index set has repeated entries");
  }
  for (int i : sorted) {
    if (i < 1 || i > g) {
      throw std::invalid_argument("index " + std::to_string(i) + " outside 1.." + std::to_string(g));
    }
  }
}

long long exponent_sum(const RootOfUnitySpectrum& s, std::span<const int> idx) {
  long long total = 0;
  for (int i : idx) total += s.exponent(i);
  return total;
}

bool forced_unchecked(const RootOfUnitySpectrum& s, std::span<const int> rows,
                      std::span<const int> cols) {
  const long long n = s.order();
  const long long v = static_cast<long long>(cols.size()) * exponent_sum(s, rows) +
                      static_cast<long long>(rows.size()) * exponent_sum(s, cols);
  return v % n != 0;
}

// Calls fn on every k-subset of {1..g}; stops early when fn returns false.
template <class Fn>
bool all_subsets(int g, int k, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    if (!fn(std::span<const int>(idx))) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == g - k + pos + 1) --pos;
    if (pos < 0) return true;
    ++idx[static_cast<std::size_t>(pos)];
    for (int t = pos + 1; t < k; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
}

bool every_minor_forced(const RootOfUnitySpectrum& s, int k) {
  const int g = s.size();
  return all_subsets(g, k, [&](std::span<const int> rows) {
    return all_subsets(g, k, [&](std::span<const int> cols) { return forced_unchecked(s, rows, cols); });
  });
}

}  // namespace

bool forced_zero_minor(const RootOfUnitySpectrum& s, std::span<const int> rows,
                       std::span<const int> cols) {
  if (rows.size() != cols.size() || rows.empty()) {
    throw std::invalid_argument("minor index sets must be nonempty and of equal size");
  }
  check_index_set(rows, s.size());
  check_index_set(cols, s.size());
  return forced_unchecked(s, rows, cols);
}

int corollary_rank_bound(const RootOfUnitySpectrum& s) {
  const int g = s.size();
  // g - k decreases in k, so the first qualifying k from the top wins.
  for (int k = g - 1; k >= 1; --k) {
    if (every_minor_forced(s, k)) return g - k;
  }
  return g;
}

bool full_determinant_forced(const RootOfUnitySpectrum& s) { return every_minor_forced(s, s.size()); }

std::vector<std::pair<int, int>> allowed_support(const RootOfUnitySpectrum& s) {
  std::vector<std::pair<int, int>> out;
  const int g = s.size();
  for (int i = 1; i <= g; ++i) {
    for (int k = 1; k <= g; ++k) {
      if ((s.exponent(i) + s.exponent(k)) % s.order() == 0) out.emplace_back(i, k);
    }
  }
  return out;
}

namespace {

// Kuhn's augmenting paths; g is tiny so the O(V E) bound is irrelevant.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(int n) : adj_(static_cast<std::size_t>(n)), match_right_(static_cast<std::size_t>(n), -1) {}

  void add_edge(int left, int right) { adj_[static_cast<std::size_t>(left)].push_back(right); }

  int solve() {
    int size = 0;
    for (int u = 0; u < static_cast<int>(adj_.size()); ++u) {
      std::vector<char> seen(adj_.size(), 0);
      if (augment(u, seen)) ++size;
    }
    return size;
  }

 private:
  bool augment(int u, std::vector<char>& seen) {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      auto& mark = seen[static_cast<std::size_t>(v)];
      if (mark) continue;
      mark = 1;
      auto& owner = match_right_[static_cast<std::size_t>(v)];
      if (owner < 0 || augment(owner, seen)) {
        owner = u;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_right_;
};

}  // namespace

RankBoundReport structural_rank_bound(const RootOfUnitySpectrum& s) {
  const int g = s.size();
  BipartiteMatcher matcher(g);
  for (auto [i, k] : allowed_support(s)) matcher.add_edge(i - 1, k - 1);

  RankBoundReport r;
  r.genus = g;
  r.structural_rank = matcher.solve();
  r.corollary_bound = corollary_rank_bound(s);
  r.full_determinant_forced = full_determinant_forced(s);
  r.verdict = r.structural_rank == 1 ? Verdict::TotallyDegenerate : Verdict::Inconclusive;
  r.trivial_torus = g == 1;
  return r;
}

RankBoundReport degeneracy_verdict(const CoverParams& p) {
  return structural_rank_bound(mqplus_spectrum(p));
}

std::vector<double> teichmuller_spectrum(std::span<const double> kz, int sigma) {
  if (kz.empty()) throw std::invalid_argument("need at least lambda_1");
  if (sigma < 1) throw std::invalid_argument("number of zeros sigma must be >= 1");
  if (kz.front() != 1.0) throw std::invalid_argument("lambda_1 must equal 1");
  for (std::size_t i = 1; i < kz.size(); ++i) {
    if (!(kz[i] <= kz[i - 1])) throw std::invalid_argument("exponents must be non-increasing");
  }
  if (!(kz.back() >= 0.0)) throw std::invalid_argument("exponents must be nonnegative");

  std::vector<double> positive;
  for (double l : kz) positive.push_back(1.0 + l);
  positive.insert(positive.end(), static_cast<std::size_t>(sigma - 1), 1.0);
  for (std::size_t i = kz.size(); i-- > 1;) positive.push_back(1.0 - kz[i]);

  std::vector<double> out = positive;
  out.push_back(0.0);
  for (double v : positive) out.push_back(v == 0.0 ? 0.0 : -v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace kzdisk
