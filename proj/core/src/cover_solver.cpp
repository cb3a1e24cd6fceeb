#include "odcode/cover_solver.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace odcode {

bool hits_all(const VertexSet& s, const std::vector<VertexSet>& edges) {
  return std::all_of(edges.begin(), edges.end(), [&](const VertexSet& e) { return e.intersects(s); });
}

VertexSet greedy_cover(const Clutter& c) {
  VertexSet chosen(c.n);
  std::vector<const VertexSet*> open;
  for (const auto& e : c.edges) open.push_back(&e.members);
  std::vector<std::size_t> freq(c.n);
  while (!open.empty()) {
    std::fill(freq.begin(), freq.end(), 0);
    for (const auto* e : open) e->for_each([&](Vertex v) { ++freq[v]; });
    Vertex best = 0;
    for (Vertex v = 1; v < c.n; ++v) {
      if (freq[v] > freq[best]) best = v;
    }
    chosen.set(best);
    std::erase_if(open, [&](const VertexSet* e) { return e->test(best); });
  }
  return chosen;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Clutter& c, bool enumerate, std::size_t cap)
      : n_(c.n), enumerate_(enumerate), cap_(cap), edges_(c.edge_sets()), freq_(c.n) {}

  CoverResult run(const Clutter& c) {
    best_witness_ = greedy_cover(c);
    best_ = best_witness_.count();
    search(c.f1, VertexSet(n_));

    CoverResult r;
    r.value = best_;
    r.witness = best_witness_;
    r.nodes_explored = nodes_;
    if (enumerate_) {
      std::sort(optima_.begin(), optima_.end(), size_lex_less);
      if (!optima_.empty()) r.witness = optima_.front();
      r.all_optima = std::move(optima_);
      r.truncated = truncated_;
    }
    return r;
  }

 private:
  void record(const VertexSet& s) {
    const std::size_t size = s.count();
    if (size < best_) {
      best_ = size;
      best_witness_ = s;
      optima_.clear();
      truncated_ = false;
    }
    if (!enumerate_ || size != best_) return;
    if (optima_.size() < cap_) {
      optima_.push_back(s);
    } else {
      truncated_ = true;
    }
  }

  // Live edges after removing excluded vertices, or nullopt when one of them
  // became empty.
  std::optional<std::vector<VertexSet>> live_edges(const VertexSet& chosen, const VertexSet& excluded) const {
    std::vector<VertexSet> live;
    for (const auto& e : edges_) {
      if (e.intersects(chosen)) continue;
      VertexSet eff = e - excluded;
      if (eff.empty()) return std::nullopt;
      live.push_back(std::move(eff));
    }
    return live;
  }

  // Excludes a vertex whose live edges all contain another live vertex. Only
  // used when a single optimum is wanted, since it discards tied covers.
  bool dominated_vertex(const std::vector<VertexSet>& live, VertexSet& excluded) const {
    std::vector<VertexSet> incidence(n_, VertexSet(live.size()));
    VertexSet active(n_);
    for (std::size_t i = 0; i < live.size(); ++i) {
      live[i].for_each([&](Vertex v) {
        incidence[v].set(i);
        active.set(v);
      });
    }
    bool changed = false;
    active.for_each([&](Vertex a) {
      if (changed) return;
      active.for_each([&](Vertex b) {
        if (changed || a == b || excluded.test(b)) return;
        if (!incidence[a].is_subset_of(incidence[b])) return;
        if (incidence[a] == incidence[b] && a < b) return;
        excluded.set(a);
        changed = true;
      });
    });
    return changed;
  }

  void search(VertexSet chosen, VertexSet excluded) {
    ++nodes_;
    std::vector<VertexSet> live;
    while (true) {
      auto next = live_edges(chosen, excluded);
      if (!next) return;
      live = std::move(*next);
      bool forced = false;
      for (const auto& e : live) {
        if (e.count() == 1) {
          chosen.set(e.first());
          forced = true;
        }
      }
      if (forced) continue;
      if (!enumerate_ && dominated_vertex(live, excluded)) continue;
      break;
    }
    if (live.empty()) {
      record(chosen);
      return;
    }
    std::stable_sort(live.begin(), live.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.count() < b.count(); });

    std::size_t packing = 0;
    VertexSet used(n_);
    for (const auto& e : live) {
      if (!e.intersects(used)) {
        used |= e;
        ++packing;
      }
    }
    const std::size_t lb = chosen.count() + packing;
    // While still collecting optima, ties with the incumbent stay open.
    const bool collecting = enumerate_ && !truncated_;
    if (collecting ? lb > best_ : lb >= best_) return;

    std::fill(freq_.begin(), freq_.end(), 0);
    for (const auto& e : live) e.for_each([&](Vertex v) { ++freq_[v]; });
    Vertex pick = VertexSet::npos;
    live.front().for_each([&](Vertex v) {
      if (pick == VertexSet::npos || freq_[v] > freq_[pick]) pick = v;
    });

    VertexSet with = chosen;
    with.set(pick);
    search(with, excluded);
    excluded.set(pick);
    search(chosen, excluded);
  }

  std::size_t n_;
  bool enumerate_;
  std::size_t cap_;
  std::vector<VertexSet> edges_;
  std::vector<std::size_t> freq_;
  std::size_t best_ = 0;
  VertexSet best_witness_;
  std::vector<VertexSet> optima_;
  bool truncated_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CoverResult min_cover(const Clutter& c, bool enumerate, std::size_t cap) {
  if (enumerate && cap == 0) throw std::invalid_argument("enumeration cap must be positive");
  BranchAndBound bb(c, enumerate, cap);
  CoverResult r = bb.run(c);
  const auto edges = c.edge_sets();
  if (r.witness.count() != r.value || !hits_all(r.witness, edges)) {
    throw std::logic_error("cover solver produced an invalid witness");
  }
  return r;
}

std::size_t tau_q_rose(std::size_t n, std::size_t q) {
  if (q < 2 || q >= n) throw std::invalid_argument("q-rose needs 2 <= q < n");
  return n - q + 1;
}

}  // namespace odcode
