#include "ratjones/classify.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <mutex>
#include <unordered_map>

#include "ratjones/tangle.hpp"

namespace ratjones {

std::string_view to_string(ResultKind k) {
  switch (k) {
    case ResultKind::TemplateI: return "TemplateI";
    case ResultKind::TemplateII: return "TemplateII";
    case ResultKind::Pivot: return "Pivot";
    default: return "Unexplained";
  }
}

std::optional<std::pair<KnotClass, KnotClass>> closure_classes(const SeqPair& pair) {
  try {
    const Rat a = eval_cf(pair.first), b = eval_cf(pair.second);
    if (a.p() % 2 == 0 || b.p() % 2 == 0) return std::nullopt;
    return std::make_pair(knot_class_of(a), knot_class_of(b));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Overflow) return std::nullopt;
    throw;
  }
}

bool witness_matches(const TemplateInstance& w, const KnotClass& a, const KnotClass& b) {
  SeqPair pair;
  try {
    pair = generate(w);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotPivotEquivalent || e.kind() == ErrorKind::InvalidArgument) return false;
    throw;
  }
  const auto classes = closure_classes(pair);
  if (!classes) return false;
  return (classes->first == a && classes->second == b) || (classes->first == b && classes->second == a);
}

TemplateInstance mirror_instance(const TemplateInstance& w) {
  auto neg = [](IntSeq s) {
    for (auto& x : s) x = checked::neg(x);
    return s;
  };
  TemplateInstance m = w;
  m.base = neg(w.base);
  m.ds = neg(w.ds);
  m.ms = neg(w.ms);
  for (auto& s : m.seqs) s = neg(s);
  return m;
}

namespace {

// Integer continued-fraction matrices with wraparound arithmetic. Every
// entry is a polynomial in the sequence entries, so a value that truly fits
// in 64 bits is computed exactly; hits are re-verified with checked arithmetic.
struct M2 {
  std::uint64_t a = 1, b = 0, c = 0, d = 1;
};

inline M2 mul(const M2& x, const M2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline M2 twist(std::int64_t n) { return {static_cast<std::uint64_t>(n), ~std::uint64_t{0}, 1, 0}; }

M2 cf_matrix(const IntSeq& seq) {
  M2 m;
  for (std::int64_t n : seq) m = mul(m, twist(n));
  return m;
}

IntSeq negated(IntSeq s) {
  for (auto& x : s) x = -x;
  return s;
}

// 0, 1, -1, 2, -2, ...
std::vector<std::int64_t> value_order(int bound) {
  std::vector<std::int64_t> v{0};
  for (int x = 1; x <= bound; ++x) {
    v.push_back(x);
    v.push_back(-x);
  }
  return v;
}

// 0, 1, ..., bound, -1, ..., -bound
std::vector<std::int64_t> base_value_order(int bound) {
  std::vector<std::int64_t> v;
  for (int x = 0; x <= bound; ++x) v.push_back(x);
  for (int x = 1; x <= bound; ++x) v.push_back(-x);
  return v;
}

std::vector<IntSeq> sequences_of_length(int len, int bound) {
  const auto vals = base_value_order(bound);
  std::vector<IntSeq> out;
  if (len <= 0) return out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
  while (true) {
    IntSeq s;
    for (auto i : idx) s.push_back(vals[i]);
    out.push_back(std::move(s));
    int pos = len - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == vals.size()) idx[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return out;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
  return r;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
  return r;
}

std::uint64_t sat_pow(std::uint64_t a, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = sat_mul(r, a);
  return r;
}

struct Ordinal {
  std::uint64_t stratum = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t base = 0;
  std::uint64_t leaf = 0;
  friend bool operator<(const Ordinal& x, const Ordinal& y) {
    if (x.stratum != y.stratum) return x.stratum < y.stratum;
    if (x.base != y.base) return x.base < y.base;
    return x.leaf < y.leaf;
  }
};

struct TargetRef {
  std::size_t index;
  bool mirrored;
};

std::uint64_t pair_key(std::int64_t p, std::int64_t q1, std::int64_t q2) {
  if (q1 > q2) std::swap(q1, q2);
  return (static_cast<std::uint64_t>(p) << 42) | (static_cast<std::uint64_t>(q1) << 21) |
         static_cast<std::uint64_t>(q2);
}

// Canonical q of the class of p/q without throwing; 0 when gcd(p, q) != 1.
std::int64_t canonical_q(std::int64_t p, std::int64_t q) {
  std::int64_t r = q % p;
  if (r < 0) r += p;
  if (gcd(p, r) != 1) return 0;
  if (p == 1) return 0;
  const std::int64_t inv = mod_inverse(r, p);
  return std::min(r, inv);
}

class Search {
 public:
  Search(const std::vector<std::pair<KnotClass, KnotClass>>& pairs, const SearchBudget& budget, unsigned jobs)
      : pairs_(pairs),
        budget_(budget),
        jobs_(std::max(1u, jobs)),
        best_(pairs.size()),
        found_(pairs.size()),
        witness_(pairs.size()) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& [a, b] = pairs[i];
      if (a.p != b.p || a == b || a.p >= (1 << 21)) continue;
      max_det_ = std::max(max_det_, a.p);
      const KnotClass ma = mirror_class(a), mb = mirror_class(b);
      lookup_[pair_key(a.p, a.q, b.q)].push_back({i, false});
      lookup_[pair_key(a.p, ma.q, mb.q)].push_back({i, true});
    }
    det_ok_.assign(static_cast<std::size_t>(max_det_) + 1, 0);
    for (const auto& [a, b] : pairs) {
      if (a.p <= max_det_) det_ok_[static_cast<std::size_t>(a.p)] = 1;
    }
  }

  std::vector<ClassificationResult> run() {
    std::vector<ClassificationResult> results(pairs_.size());
    if (budget_.empty() || lookup_.empty()) return results;
    values_ = value_order(budget_.max_param);
    std::uint64_t stratum = 0;
    for (int k = 1; k <= budget_.max_k; ++k) {
      for (int len = 1; len <= budget_.max_base_len; ++len) {
        if (all_found()) break;
        run_template_one(stratum++, k, len);
      }
    }
    for (int k = 0; k <= budget_.max_k; ++k) {
      for (int len = 1; len <= budget_.max_base_len; ++len) {
        if (all_found()) break;
        run_template_two(stratum++, k, len);
      }
    }
    if (!all_found()) build_pivot_pool();
    for (int k = 1; k <= budget_.max_k; ++k) {
      if (all_found()) break;
      run_pivot(stratum++, k);
    }
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (!found_[i]) continue;
      results[i].witness = witness_[i];
      switch (witness_[i].kind) {
        case TemplateKind::TemplateI: results[i].kind = ResultKind::TemplateI; break;
        case TemplateKind::TemplateII: results[i].kind = ResultKind::TemplateII; break;
        default: results[i].kind = ResultKind::Pivot; break;
      }
    }
    return results;
  }

 private:
  bool all_found() const {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (!found_[i] && lookup_has(i)) return false;
    }
    return true;
  }

  bool lookup_has(std::size_t i) const {
    const auto& [a, b] = pairs_[i];
    return a.p == b.p && !(a == b) && a.p < (1 << 21);
  }

  // A base index can be skipped once every target still open in this stratum
  // already holds a witness from an earlier base.
  bool can_skip(std::uint64_t stratum, std::uint64_t base) {
    std::lock_guard lock(mutex_);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (!lookup_has(i)) continue;
      if (!found_[i]) return false;
      if (best_[i].stratum == stratum && best_[i].base > base) return false;
    }
    return true;
  }

  template <class MakeInstance>
  void leaf(const M2& ma, const M2& mb, const Ordinal& ord, const MakeInstance& make) {
    const auto pa = static_cast<std::int64_t>(ma.a), pb = static_cast<std::int64_t>(mb.a);
    const std::int64_t p = pa < 0 ? -pa : pa;
    if (p <= 0 || p > max_det_ || !det_ok_[static_cast<std::size_t>(p)]) return;
    if (pb != pa && pb != -pa) return;
    const std::int64_t qa = canonical_q(p, pa < 0 ? -static_cast<std::int64_t>(ma.c) : static_cast<std::int64_t>(ma.c));
    const std::int64_t qb = canonical_q(p, pb < 0 ? -static_cast<std::int64_t>(mb.c) : static_cast<std::int64_t>(mb.c));
    if (qa == 0 || qb == 0 || qa == qb) return;
    const auto it = lookup_.find(pair_key(p, qa, qb));
    if (it == lookup_.end()) return;
    for (const TargetRef& ref : it->second) {
      {
        std::lock_guard lock(mutex_);
        if (found_[ref.index] && !(ord < best_[ref.index])) continue;
      }
      TemplateInstance inst = make();
      if (ref.mirrored) inst = mirror_instance(inst);
      const auto& [a, b] = pairs_[ref.index];
      if (!witness_matches(inst, a, b)) continue;
      std::lock_guard lock(mutex_);
      if (!found_[ref.index] || ord < best_[ref.index]) {
        found_[ref.index] = true;
        best_[ref.index] = ord;
        witness_[ref.index] = std::move(inst);
      }
    }
  }

  std::uint64_t width() const { return values_.size(); }

  // --- Template I -------------------------------------------------------------

  void run_template_one(std::uint64_t stratum, int k, int len) {
    const auto bases = sequences_of_length(len, budget_.max_entry);
    const std::uint64_t work = sat_mul(bases.size(), sat_mul(sat_pow(2, k + 1), sat_pow(width(), k)));
    if (work > budget_.max_stratum_work) return;
    parallel_for(bases.size(), jobs_, [&](std::size_t bi) {
      if (can_skip(stratum, bi)) return;
      const IntSeq& n = bases[bi];
      const M2 blocks[2] = {cf_matrix(n), cf_matrix(seq_star(n))};
      std::vector<std::int64_t> ds(static_cast<std::size_t>(k));
      std::vector<StarFlag> eps(static_cast<std::size_t>(k) + 1);
      std::uint64_t leaf_no = 0;
      auto make = [&] {
        TemplateInstance t;
        t.kind = TemplateKind::TemplateI;
        t.base = n;
        t.ds = IntSeq(ds.begin(), ds.end());
        t.eps = eps;
        return t;
      };
      // A is built left to right, B right to left.
      auto dfs = [&](auto&& self, int j, const M2& a, const M2& b) -> void {
        if (j > k) {
          leaf(a, b, {stratum, bi, leaf_no++}, make);
          return;
        }
        for (std::int64_t d : values_) {
          ds[static_cast<std::size_t>(j - 1)] = d;
          const M2 td = twist(d);
          const M2 a1 = mul(a, td);
          for (int f = 0; f < 2; ++f) {
            eps[static_cast<std::size_t>(j)] = f ? StarFlag::Star : StarFlag::One;
            self(self, j + 1, mul(a1, blocks[f]), mul(blocks[f], mul(td, b)));
          }
        }
      };
      for (int f = 0; f < 2; ++f) {
        eps[0] = f ? StarFlag::Star : StarFlag::One;
        dfs(dfs, 1, blocks[f], blocks[f]);
      }
    });
  }

  // --- Template II ------------------------------------------------------------

  void run_template_two(std::uint64_t stratum, int k, int len) {
    const auto bases = sequences_of_length(len, budget_.max_entry);
    const std::uint64_t per_block = sat_mul(4, width());
    const std::uint64_t work =
        sat_mul(bases.size(), sat_mul(sat_pow(per_block, k + 1), sat_pow(width(), k)));
    if (work > budget_.max_stratum_work) return;
    parallel_for(bases.size(), jobs_, [&](std::size_t bi) {
      if (can_skip(stratum, bi)) return;
      const IntSeq& n = bases[bi];
      const IntSeq n_star = seq_star(n);
      if (n_star == n) return;
      // arrow(x, e) and -arrow(x, f) for x = n (A) and x = n* (B)
      const M2 fwd_a = cf_matrix(n), bwd_a = cf_matrix(seq_reverse(n));
      const M2 nfwd_a = cf_matrix(negated(n)), nbwd_a = cf_matrix(negated(seq_reverse(n)));
      const M2 fwd_b = cf_matrix(n_star), bwd_b = cf_matrix(seq_reverse(n_star));
      const M2 nfwd_b = cf_matrix(negated(n_star)), nbwd_b = cf_matrix(negated(seq_reverse(n_star)));
      const M2 head_a[2] = {fwd_a, bwd_a}, tail_a[2] = {nfwd_a, nbwd_a};
      const M2 head_b[2] = {fwd_b, bwd_b}, tail_b[2] = {nfwd_b, nbwd_b};

      std::vector<std::int64_t> ds(static_cast<std::size_t>(k)), ms(static_cast<std::size_t>(k) + 1);
      std::vector<ArrowFlag> ae(static_cast<std::size_t>(k) + 1), ap(static_cast<std::size_t>(k) + 1);
      std::uint64_t leaf_no = 0;
      auto make = [&] {
        TemplateInstance t;
        t.kind = TemplateKind::TemplateII;
        t.base = n;
        t.ds = IntSeq(ds.begin(), ds.end());
        t.ms = IntSeq(ms.begin(), ms.end());
        t.arrows_eps = ae;
        t.arrows_phi = ap;
        return t;
      };
      auto dfs = [&](auto&& self, int j, const M2& a, const M2& b) -> void {
        if (j > k) {
          leaf(a, b, {stratum, bi, leaf_no++}, make);
          return;
        }
        auto blocks = [&](const M2& a0, const M2& b0) {
          for (int e = 0; e < 2; ++e) {
            ae[static_cast<std::size_t>(j)] = e ? ArrowFlag::Backward : ArrowFlag::Forward;
            const M2 a1 = mul(a0, head_a[e]), b1 = mul(b0, head_b[e]);
            for (int f = 0; f < 2; ++f) {
              ap[static_cast<std::size_t>(j)] = f ? ArrowFlag::Backward : ArrowFlag::Forward;
              for (std::int64_t m : values_) {
                ms[static_cast<std::size_t>(j)] = m;
                const M2 tm = twist(m);
                self(self, j + 1, mul(mul(a1, tm), tail_a[f]), mul(mul(b1, tm), tail_b[f]));
              }
            }
          }
        };
        if (j == 0) {
          blocks(M2{}, M2{});
          return;
        }
        for (std::int64_t d : values_) {
          ds[static_cast<std::size_t>(j - 1)] = d;
          const M2 td = twist(d);
          blocks(mul(a, td), mul(b, td));
        }
      };
      dfs(dfs, 0, M2{}, M2{});
    });
  }

  // --- Pivoting pairs -----------------------------------------------------------

  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
  }

  static std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  }

  static std::uint64_t eval_mod(const LaurentU& p, std::uint64_t x) {
    const std::uint64_t x_inv = powmod(x, kPrime - 2);
    std::uint64_t sum = 0;
    for (const auto& t : p.terms()) {
      const std::uint64_t base = t.exp >= 0 ? x : x_inv;
      const std::uint64_t pw = powmod(base, static_cast<std::uint64_t>(t.exp >= 0 ? t.exp : -t.exp));
      const std::int64_t c = t.coef.re;
      const std::uint64_t cm = c >= 0 ? static_cast<std::uint64_t>(c) % kPrime
                                      : kPrime - (static_cast<std::uint64_t>(-c) % kPrime);
      sum = (sum + mulmod(cm, pw)) % kPrime;
    }
    return sum;
  }

  // Partitions all base sequences with nonzero α into pivot classes.
  void build_pivot_pool() {
    if (pool_built_) return;
    pool_built_ = true;
    for (int len = 1; len <= budget_.max_base_len; ++len) {
      for (auto& s : sequences_of_length(len, budget_.max_entry)) pool_.push_back(std::move(s));
    }
    std::vector<LaurentU> alphas(pool_.size());
    parallel_for(pool_.size(), jobs_, [&](std::size_t i) { alphas[i] = alpha_of(pool_[i]); });
    constexpr std::uint64_t x1 = 1'000'003, x2 = 998'244'353;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash;
    std::vector<std::uint64_t> keys(pool_.size());
    parallel_for(pool_.size(), jobs_, [&](std::size_t i) {
      if (alphas[i].is_zero()) return;
      const LaurentU bar = bar_u(alphas[i]);
      std::uint64_t key = 0;
      for (std::uint64_t x : {x1, x2}) {
        const std::uint64_t num = eval_mod(alphas[i], x), den = eval_mod(bar, x);
        const std::uint64_t r = den == 0 ? kPrime : mulmod(num, powmod(den, kPrime - 2));
        key = key * 0x9E3779B97F4A7C15ULL + r;
      }
      keys[i] = key;
    });
    class_of_.assign(pool_.size(), -1);
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      if (alphas[i].is_zero()) continue;
      auto& candidates = by_hash[keys[i]];
      for (std::size_t rep : candidates) {
        if (bar_u(alphas[rep]) * alphas[i] == alphas[rep] * bar_u(alphas[i])) {
          class_of_[i] = class_of_[rep];
          break;
        }
      }
      if (class_of_[i] < 0) {
        class_of_[i] = static_cast<int>(classes_.size());
        classes_.emplace_back();
        candidates.push_back(i);
      }
      classes_[static_cast<std::size_t>(class_of_[i])].push_back(i);
    }
    pool_blocks_.resize(pool_.size());
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      pool_blocks_[i] = {cf_matrix(pool_[i]), cf_matrix(seq_star(pool_[i]))};
    }
  }

  void run_pivot(std::uint64_t stratum, int k) {
    std::uint64_t work = 0;
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      if (class_of_[i] < 0) continue;
      const std::uint64_t size = classes_[static_cast<std::size_t>(class_of_[i])].size();
      work = sat_add(work, sat_mul(sat_pow(size, k), sat_mul(sat_pow(2, k + 1), sat_pow(width(), k))));
    }
    if (work > budget_.max_stratum_work) return;
    parallel_for(pool_.size(), jobs_, [&](std::size_t bi) {
      if (class_of_[bi] < 0 || can_skip(stratum, bi)) return;
      const auto& members = classes_[static_cast<std::size_t>(class_of_[bi])];
      if (members.size() < 2) return;  // every instance would repeat one block
      std::vector<std::size_t> chosen(static_cast<std::size_t>(k) + 1, bi);
      std::vector<std::int64_t> ds(static_cast<std::size_t>(k));
      std::vector<StarFlag> eps(static_cast<std::size_t>(k) + 1);
      std::uint64_t leaf_no = 0;
      auto make = [&] {
        TemplateInstance t;
        t.kind = TemplateKind::Pivot;
        for (std::size_t c : chosen) t.seqs.push_back(pool_[c]);
        t.ds = IntSeq(ds.begin(), ds.end());
        t.eps = eps;
        return t;
      };
      auto dfs = [&](auto&& self, int j, const M2& a, const M2& b) -> void {
        if (j > k) {
          const bool all_same = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return c == bi; });
          if (!all_same) leaf(a, b, {stratum, bi, leaf_no}, make);
          ++leaf_no;
          return;
        }
        for (std::size_t c : members) {
          chosen[static_cast<std::size_t>(j)] = c;
          const auto& blocks = pool_blocks_[c];
          for (std::int64_t d : values_) {
            ds[static_cast<std::size_t>(j - 1)] = d;
            const M2 td = twist(d);
            const M2 a1 = mul(a, td);
            for (int f = 0; f < 2; ++f) {
              eps[static_cast<std::size_t>(j)] = f ? StarFlag::Star : StarFlag::One;
              self(self, j + 1, mul(a1, blocks[f]), mul(blocks[f], mul(td, b)));
            }
          }
        }
      };
      const auto& first = pool_blocks_[bi];
      for (int f = 0; f < 2; ++f) {
        eps[0] = f ? StarFlag::Star : StarFlag::One;
        dfs(dfs, 1, first[f], first[f]);
      }
    });
  }

  const std::vector<std::pair<KnotClass, KnotClass>>& pairs_;
  SearchBudget budget_;
  unsigned jobs_;
  std::vector<Ordinal> best_;
  std::vector<char> found_;
  std::vector<TemplateInstance> witness_;
  std::unordered_map<std::uint64_t, std::vector<TargetRef>> lookup_;
  std::vector<char> det_ok_;
  std::int64_t max_det_ = 0;
  std::vector<std::int64_t> values_;
  std::mutex mutex_;

  bool pool_built_ = false;
  std::vector<IntSeq> pool_;
  std::vector<int> class_of_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::array<M2, 2>> pool_blocks_;
};

}  // namespace

std::vector<ClassificationResult> classify_pairs(const std::vector<std::pair<KnotClass, KnotClass>>& pairs,
                                                 const SearchBudget& budget, unsigned jobs) {
  Search search(pairs, budget, jobs);
  return search.run();
}

ClassificationResult classify_pair(const KnotClass& a, const KnotClass& b, const SearchBudget& budget,
                                   unsigned jobs) {
  return classify_pairs({{a, b}}, budget, jobs).front();
}

std::vector<ClassifiedGroup> classify_groups(const std::vector<CoincidenceGroup>& groups, const SearchBudget& budget,
                                             unsigned jobs) {
  std::vector<std::pair<KnotClass, KnotClass>> pairs;
  std::vector<std::pair<std::size_t, std::pair<int, int>>> where;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& members = groups[g].members;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        pairs.emplace_back(members[i], members[j]);
        where.push_back({g, {static_cast<int>(i), static_cast<int>(j)}});
      }
    }
  }
  const auto results = classify_pairs(pairs, budget, jobs);
  std::vector<ClassifiedGroup> out;
  for (const auto& g : groups) out.push_back({g, {}});
  for (std::size_t r = 0; r < results.size(); ++r) {
    out[where[r].first].pairs.emplace_back(where[r].second, results[r]);
  }
  return out;
}

}  // namespace ratjones
