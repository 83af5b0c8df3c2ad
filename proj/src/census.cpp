#include "ratjones/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "ratjones/jones.hpp"

namespace ratjones {

unsigned default_jobs() {
  if (const char* env = std::getenv("JONES_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<KnotClass> classes_of_det(std::int64_t p) {
  std::vector<KnotClass> out;
  for (std::int64_t q = 1; q < p; ++q) {
    if (gcd(p, q) != 1) continue;
    const KnotClass k = schubert_canonical(p, q);
    if (k.q == q) out.push_back(k);
  }
  return out;
}

std::vector<KnotClass> enumerate_classes(std::int64_t max_det) {
  std::vector<KnotClass> out;
  for (std::int64_t p = 3; p < max_det; p += 2) {
    auto shard = classes_of_det(p);
    out.insert(out.end(), shard.begin(), shard.end());
  }
  return out;
}

namespace {

std::vector<std::int64_t> odd_dets(std::int64_t max_det) {
  std::vector<std::int64_t> dets;
  for (std::int64_t p = 3; p < max_det; p += 2) dets.push_back(p);
  return dets;
}

std::vector<CensusEntry> census_shard(std::int64_t p) {
  std::vector<CensusEntry> out;
  for (const KnotClass& k : classes_of_det(p)) {
    CensusEntry e;
    e.knot = k;
    e.jones = jones_knot(k.p, k.q);
    e.span = jones_span(e.jones);
    e.det = std::llabs(eval_int(e.jones, -1));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CoincidenceGroup> shard_groups(const std::vector<CensusEntry>& shard) {
  std::map<std::string, std::vector<const CensusEntry*>> by_poly;
  for (const auto& e : shard) by_poly[to_string(e.jones)].push_back(&e);
  std::vector<CoincidenceGroup> out;
  for (const auto& [text, members] : by_poly) {
    if (members.size() < 2) continue;
    const LaurentT& v = members.front()->jones;
    if (text > to_string(bar_t(v))) continue;  // the mirror group is kept instead
    CoincidenceGroup g;
    g.det = members.front()->knot.p;
    g.jones = v;
    g.span = members.front()->span;
    for (const auto* m : members) g.members.push_back(m->knot);
    std::sort(g.members.begin(), g.members.end());
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<CensusEntry> compute_census(std::int64_t max_det, unsigned jobs) {
  const auto dets = odd_dets(max_det);
  std::vector<std::vector<CensusEntry>> shards(dets.size());
  parallel_for(dets.size(), jobs, [&](std::size_t i) { shards[i] = census_shard(dets[i]); });
  std::vector<CensusEntry> out;
  for (auto& s : shards) std::move(s.begin(), s.end(), std::back_inserter(out));
  return out;
}

std::vector<bool> CoincidenceGroup::amphicheiral_members() const {
  std::vector<bool> flags;
  for (const auto& m : members) flags.push_back(m.amphicheiral);
  return flags;
}

bool CoincidenceGroup::has_amphicheiral() const {
  return std::any_of(members.begin(), members.end(), [](const KnotClass& k) { return k.amphicheiral; });
}

std::vector<CoincidenceGroup> group_coincidences(const std::vector<CensusEntry>& entries) {
  std::vector<CoincidenceGroup> out;
  std::size_t i = 0;
  while (i < entries.size()) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].knot.p == entries[i].knot.p) ++j;
    const std::vector<CensusEntry> shard(entries.begin() + static_cast<std::ptrdiff_t>(i),
                                         entries.begin() + static_cast<std::ptrdiff_t>(j));
    auto groups = shard_groups(shard);
    std::move(groups.begin(), groups.end(), std::back_inserter(out));
    i = j;
  }
  std::stable_sort(out.begin(), out.end(), [](const CoincidenceGroup& a, const CoincidenceGroup& b) {
    if (a.det != b.det) return a.det < b.det;
    return to_string(a.jones) < to_string(b.jones);
  });
  return out;
}

std::vector<CoincidenceGroup> find_coincidences(std::int64_t max_det, unsigned jobs) {
  const auto dets = odd_dets(max_det);
  std::vector<std::vector<CoincidenceGroup>> shards(dets.size());
  parallel_for(dets.size(), jobs, [&](std::size_t i) { shards[i] = shard_groups(census_shard(dets[i])); });
  std::vector<CoincidenceGroup> out;
  for (auto& s : shards) std::move(s.begin(), s.end(), std::back_inserter(out));
  std::stable_sort(out.begin(), out.end(), [](const CoincidenceGroup& a, const CoincidenceGroup& b) {
    if (a.det != b.det) return a.det < b.det;
    return to_string(a.jones) < to_string(b.jones);
  });
  return out;
}

CoincidenceGroup mirror_group(const CoincidenceGroup& g) {
  CoincidenceGroup m = g;
  m.jones = bar_t(g.jones);
  for (auto& k : m.members) k = mirror_class(k);
  std::sort(m.members.begin(), m.members.end());
  return m;
}

}  // namespace ratjones
