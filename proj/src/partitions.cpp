#include "partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "error.hpp"

namespace iwb {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (long x : parts_) {
    if (x < 2) throw Error(Status::InvalidArgument, "partition parts must be >= 2");
    weight_ += x;
  }
}

Partition Partition::operator*(const Partition& other) const {
  std::vector<long> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(merged), std::greater<>());
  Partition out;
  out.parts_ = std::move(merged);
  out.weight_ = weight_ + other.weight_;
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (a.weight_ != b.weight_) return a.weight_ <=> b.weight_;
  std::size_t n = std::min(a.parts_.size(), b.parts_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.parts_[i] != b.parts_[i]) return b.parts_[i] <=> a.parts_[i];
  return a.parts_.size() <=> b.parts_.size();
}

bool grevlex_less(const Partition& a, const Partition& b) { return a < b; }

bool contains(const Partition& lam, const Partition& mu) {
  // Both sorted descending: a merge walk.
  std::size_t i = 0;
  for (long x : mu.parts()) {
    while (i < lam.parts().size() && lam[i] > x) ++i;
    if (i == lam.parts().size() || lam[i] != x) return false;
    ++i;
  }
  return true;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

nlohmann::json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const nlohmann::json& j) {
  try {
    return Partition(j.get<std::vector<long>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Status::ParseError, e.what());
  }
}

std::vector<Partition> partitions_min2(long n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long left, long max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (long x = std::min(left, max_part); x >= 2; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;  // descending first part first: ascending grevlex
}

namespace {

using Pattern = std::vector<long>;

// Patterns whose smallest part is x.
std::vector<Pattern> patterns_with_min(long x) {
  std::vector<Pattern> v = {
      {x, x, x},
      {x + 1, x, x},
      {x + 1, x + 1, x},
      {x + 2, x + 1, x},
      {x + 2, x + 2, x},
      {x + 3, x + 3, x, x},
      {x + 4, x + 3, x, x},
      {x + 4, x + 3, x + 1, x},
      {x + 4, x + 4, x + 1, x},
      {x + 6, x + 5, x + 3, x + 1, x},
  };
  if (x >= 3) v.push_back({x + 2, x, x});
  if (x == 2) {
    v.push_back({5, 4, 2, 2});
    v.push_back({7, 6, 4, 2, 2});
    v.push_back({7, 7, 4, 2, 2});
    v.push_back({9, 8, 6, 4, 2, 2});
  }
  return v;
}

const std::vector<Pattern>& cached_patterns(long x) {
  static std::map<long, std::vector<Pattern>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(x);
  if (it == cache.end()) it = cache.emplace(x, patterns_with_min(x)).first;
  return it->second;
}

// Multiplicities of parts, indexed by part value.
bool hits(const std::vector<int>& mult, const Pattern& pat) {
  std::map<long, int> need;
  for (long y : pat) ++need[y];
  for (const auto& [y, k] : need)
    if (y >= static_cast<long>(mult.size()) || mult[y] < k) return false;
  return true;
}

}  // namespace

std::vector<Partition> forbidden_patterns(long max_weight) {
  std::vector<Partition> out;
  for (long x = 2; 3 * x <= max_weight; ++x)
    for (const auto& pat : patterns_with_min(x)) {
      Partition p(pat);
      if (p.weight() <= max_weight) out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool avoids_all(const Partition& lam) {
  if (lam.empty()) return true;
  std::vector<int> mult(static_cast<std::size_t>(lam[0]) + 7, 0);
  for (long x : lam.parts()) ++mult[x];
  for (long x = lam.parts().back(); x <= lam[0]; ++x) {
    if (mult[x] == 0) continue;
    for (const auto& pat : cached_patterns(x))
      if (hits(mult, pat)) return false;
  }
  return true;
}

std::vector<Partition> enumerate_P(long n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<long> cur;
  std::vector<int> mult(static_cast<std::size_t>(n) + 8, 0);
  // Parts are added in decreasing order, so a pattern is complete exactly
  // when its smallest part is placed: only patterns with minimum x need
  // checking after adding x.
  std::function<void(long, long)> rec = [&](long left, long max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (long x = std::min(left, max_part); x >= 2; --x) {
      if (left - x == 1) continue;
      cur.push_back(x);
      ++mult[x];
      bool ok = true;
      for (const auto& pat : cached_patterns(x))
        if (hits(mult, pat)) {
          ok = false;
          break;
        }
      if (ok) rec(left - x, x);
      --mult[x];
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

const char* name(PClass c) {
  switch (c) {
    case PClass::A: return "A";
    case PClass::B: return "B";
    case PClass::C: return "C";
    case PClass::D: return "D";
    case PClass::E: return "E";
  }
  return "?";
}

PClass classify(const Partition& lam) {
  if (!avoids_all(lam)) throw Error(Status::NotInP, to_string(lam) + " contains a forbidden pattern");
  const auto& v = lam.parts();
  const std::size_t m = v.size();
  if (m == 0 || v[m - 1] > 2) return PClass::A;
  if (m == 1) return PClass::B;
  if (v[m - 2] > 3) return PClass::B;
  if (v[m - 2] == 3) return PClass::C;
  if (m == 2) return PClass::D;
  if (v[m - 3] > 4) return PClass::D;
  if (v[m - 3] == 4) return PClass::E;
  throw Error(Status::Internal, "no class for " + to_string(lam));
}

long CountTable::count(PClass c, long n, long m) const {
  if (n < 0 || m < 0 || n > n_max || m > n) return 0;
  return cls[n][m][static_cast<std::size_t>(c)];
}

long CountTable::p(long n, long m) const {
  long s = 0;
  for (PClass c : kPClasses) s += count(c, n, m);
  return s;
}

long CountTable::total(long n) const {
  long s = 0;
  for (long m = 0; m <= n; ++m) s += p(n, m);
  return s;
}

CountTable count_table(long n_max) {
  if (n_max < 0) throw Error(Status::InvalidArgument, "n_max must be >= 0");
  CountTable t;
  t.n_max = n_max;
  t.cls.resize(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    t.cls[n].assign(static_cast<std::size_t>(n) + 1, {0, 0, 0, 0, 0});
    for (const auto& lam : enumerate_P(n)) ++t.cls[n][lam.length()][static_cast<std::size_t>(classify(lam))];
  }
  return t;
}

CheckItems recursion_check(long n_max) {
  const CountTable t = count_table(n_max);
  auto a = [&](long n, long m) { return t.count(PClass::A, n, m); };
  auto b = [&](long n, long m) { return t.count(PClass::B, n, m); };
  auto c = [&](long n, long m) { return t.count(PClass::C, n, m); };
  auto d = [&](long n, long m) { return t.count(PClass::D, n, m); };
  auto e = [&](long n, long m) { return t.count(PClass::E, n, m); };

  struct Rule {
    const char* name;
    std::function<long(long, long)> lhs, rhs;
  };
  const Rule rules[] = {
      {"a(n,m) = a(n-m,m)+b(n-m,m)+c(n-m,m)+d(n-m,m)", a,
       [&](long n, long m) { return a(n - m, m) + b(n - m, m) + c(n - m, m) + d(n - m, m); }},
      {"b(n,m) = a(n-m-1,m-1) - d(n-2m,m-1)", b,
       [&](long n, long m) { return a(n - m - 1, m - 1) - d(n - 2 * m, m - 1); }},
      {"c(n,m) = b(n-2m+1,m-1) + d(n-2m,m-1)", c,
       [&](long n, long m) { return b(n - 2 * m + 1, m - 1) + d(n - 2 * m, m - 1); }},
      {"d(n,m) = b(n-m,m-1) - e(n-2m+1,m-1)", d,
       [&](long n, long m) { return b(n - m, m - 1) - e(n - 2 * m + 1, m - 1); }},
      {"e(n,m) = c(n-m,m-1)", e, [&](long n, long m) { return c(n - m, m - 1); }},
  };

  CheckItems out;
  for (const auto& r : rules) {
    CheckItem item{r.name, true, "holds for n <= " + std::to_string(n_max)};
    for (long n = 0; n <= n_max && item.passed; ++n)
      for (long m = 0; m <= n; ++m) {
        // a(0,0) is the base set {[]}; the identity there is circular.
        if (n == 0 && m == 0) continue;
        long l = r.lhs(n, m), rr = r.rhs(n, m);
        if (l != rr) {
          item.passed = false;
          item.detail = "fails at (n,m)=(" + std::to_string(n) + "," + std::to_string(m) + "): " +
                        std::to_string(l) + " vs " + std::to_string(rr);
          break;
        }
      }
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<Partition> mourtada_basis(long s, long n) {
  if (s < 2) throw Error(Status::InvalidArgument, "s must be >= 2");
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long left, long max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (long x = std::min(left, max_part); x >= 2; --x) {
      // new last part x sits at index i+s-1 relative to cur[i]
      std::size_t k = cur.size();
      if (k + 1 >= static_cast<std::size_t>(s) && cur[k + 1 - s] - x < 2) continue;
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace iwb
