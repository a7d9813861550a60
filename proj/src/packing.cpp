#include "gcon/detail/packing.hpp"

#include <algorithm>
#include <array>

namespace gcon::detail {

namespace {

// Two internally disjoint S-trees can only compete for non-terminal vertices
// and for edges joining two terminals. A block records that footprint for
// one inclusion-minimal tree; every tree contains some block's footprint.
struct Block {
  Mask inner;  // non-terminal vertices
  Mask links;  // terminal-terminal edges
  Mask tree;   // a spanning tree realizing the block
};

class BlockEnumerator {
 public:
  BlockEnumerator(const SearchGraph& g, const Mask& terminals)
      : g_(g), terminals_(terminals), others_(g.vertices & ~terminals), links_(g.induced_edges(terminals)) {
    for_each_bit(terminals_, [&](std::size_t t) { terminal_list_.push_back(static_cast<int>(t)); });
    root_ = terminal_list_.front();
  }

  std::vector<Block> run() {
    Mask ext;
    for (int t : terminal_list_) ext |= g_.adj[t];
    extend(Mask{}, ext & others_, Mask{});
    return std::move(blocks_);
  }

 private:
  void extend(const Mask& inner, Mask ext, Mask excluded) {
    if (process(inner)) return;  // supersets of a link-free block are dominated
    while (ext.any()) {
      const std::size_t v = first_bit(ext);
      ext.reset(v);
      Mask grown = inner;
      grown.set(v);
      extend(grown, (ext | (g_.adj[v] & others_)) & ~grown & ~excluded, excluded);
      excluded.set(v);
    }
  }

  // Connectivity of the graph on terminals + inner whose terminal-terminal
  // edges are restricted to `links`.
  Mask reach(const Mask& inner, const Mask& links, int from) const {
    Mask seen;
    seen.set(from);
    Mask frontier = seen;
    const Mask members = terminals_ | inner;
    while (frontier.any()) {
      Mask next;
      for_each_bit(frontier, [&](std::size_t v) {
        if (terminals_.test(v)) {
          next |= g_.adj[v] & inner;
          for_each_bit(g_.inc[v] & links, [&](std::size_t e) { next.set(g_.other(static_cast<int>(e), static_cast<int>(v))); });
        } else {
          next |= g_.adj[v] & members;
        }
      });
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool connected(const Mask& inner, const Mask& links) const {
    const Mask seen = reach(inner, links, root_);
    return ((terminals_ | inner) & ~seen).none();
  }

  bool minimal(const Mask& inner, const Mask& links) const {
    bool ok = true;
    for_each_bit(inner, [&](std::size_t x) {
      if (!ok) return;
      Mask less = inner;
      less.reset(x);
      if (connected(less, links)) ok = false;
    });
    return ok;
  }

  void add(const Mask& inner, const Mask& links) {
    if (!minimal(inner, links)) return;
    const Mask allowed = g_.induced_edges(terminals_ | inner) & ~(links_ & ~links);
    blocks_.push_back({inner, links, pruned_spanning_tree(g_, root_, allowed, terminals_)});
  }

  // Returns true when the inner vertices alone connect all terminals.
  bool process(const Mask& inner) {
    std::array<int, kMaxSearchBits> comp{};
    int count = 0;
    Mask assigned;
    for (int t : terminal_list_) {
      if (assigned.test(t)) continue;
      const Mask part = reach(inner, Mask{}, t) & terminals_;
      for_each_bit(part, [&](std::size_t s) { comp[s] = count; });
      assigned |= part;
      ++count;
    }
    if (count == 1) {
      add(inner, Mask{});
      return true;
    }

    std::vector<int> candidates;
    for_each_bit(links_, [&](std::size_t e) {
      if (comp[g_.ends[e].u] != comp[g_.ends[e].v]) candidates.push_back(static_cast<int>(e));
    });
    std::array<int, kMaxSearchBits> parent{};
    for (int i = 0; i < count; ++i) parent[i] = i;
    link_trees(inner, candidates, 0, parent, comp, Mask{}, count - 1);
    return false;
  }

  // Spanning trees of the component graph whose edges are terminal links.
  void link_trees(const Mask& inner, const std::vector<int>& candidates, std::size_t at,
                  std::array<int, kMaxSearchBits> parent, const std::array<int, kMaxSearchBits>& comp,
                  const Mask& picked, int missing) {
    if (missing == 0) {
      add(inner, picked);
      return;
    }
    if (candidates.size() - at < static_cast<std::size_t>(missing)) return;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    const int e = candidates[at];
    const int a = find(comp[g_.ends[e].u]);
    const int b = find(comp[g_.ends[e].v]);
    if (a != b) {
      auto joined = parent;
      joined[a] = b;
      Mask with = picked;
      with.set(e);
      link_trees(inner, candidates, at + 1, joined, comp, with, missing - 1);
    }
    link_trees(inner, candidates, at + 1, parent, comp, picked, missing);
  }

  const SearchGraph& g_;
  Mask terminals_;
  Mask others_;
  Mask links_;
  std::vector<int> terminal_list_;
  int root_ = 0;
  std::vector<Block> blocks_;
};

class KappaSearch {
 public:
  KappaSearch(const SearchGraph& g, const Mask& terminals, int cap)
      : g_(g), terminals_(terminals), others_(g.vertices & ~terminals), links_(g.induced_edges(terminals)),
        root_(static_cast<int>(first_bit(terminals))), cap_(cap) {
    for_each_bit(terminals_, [&](std::size_t t) { terminal_list_.push_back(static_cast<int>(t)); });
  }

  Packing run() {
    if (cap_ <= 0) return {};
    if ((terminals_ & ~g_.reach(Mask{}.set(root_), g_.edges)).any()) return {};
    blocks_ = BlockEnumerator(g_, terminals_).run();
    by_vertex_.assign(g_.n, {});
    by_link_.assign(g_.m, {});
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      for_each_bit(blocks_[i].inner, [&](std::size_t v) { by_vertex_[v].push_back(static_cast<int>(i)); });
      for_each_bit(blocks_[i].links, [&](std::size_t e) { by_link_[e].push_back(static_cast<int>(i)); });
    }
    search(Mask{}, Mask{});
    return {best_, best_trees_};
  }

 private:
  void record() {
    const int count = static_cast<int>(chosen_.size());
    if (count > best_) {
      best_ = count;
      best_trees_ = chosen_;
    }
    if (best_ >= cap_) done_ = true;
  }

  void take(const Block& b, const Mask& used_vertices, const Mask& used_links) {
    chosen_.push_back(b.tree);
    search(used_vertices | b.inner, used_links | b.links);
    chosen_.pop_back();
  }

  void search(const Mask& used_vertices, const Mask& used_links) {
    record();
    if (done_) return;
    const int count = static_cast<int>(chosen_.size());

    const Mask free_edges = g_.induced_edges(terminals_ | (others_ & ~used_vertices)) & ~used_links;
    if ((terminals_ & ~g_.reach(Mask{}.set(root_), free_edges)).any()) return;
    if (count + 1 > best_) {
      chosen_.push_back(pruned_spanning_tree(g_, root_, free_edges, terminals_));
      record();
      chosen_.pop_back();
      if (done_) return;
    }

    // Each further tree needs its own free vertex or link at every terminal.
    int pivot = -1;
    std::size_t slack = kMaxSearchBits * 2;
    for (int t : terminal_list_) {
      std::size_t avail = (g_.adj[t] & others_ & ~used_vertices).count() + (g_.inc[t] & links_ & ~used_links).count();
      if (avail < slack) {
        slack = avail;
        pivot = t;
      }
    }
    if (count + static_cast<int>(slack) <= best_) return;

    const Mask near = g_.adj[pivot] & others_ & ~used_vertices;
    if (near.any()) {
      const std::size_t y = first_bit(near);
      for (int i : by_vertex_[y]) {
        const Block& b = blocks_[i];
        if ((b.inner & used_vertices).none() && (b.links & used_links).none()) {
          take(b, used_vertices, used_links);
          if (done_) return;
        }
      }
      Mask dropped = used_vertices;
      dropped.set(y);
      search(dropped, used_links);
    } else {
      const std::size_t f = first_bit(g_.inc[pivot] & links_ & ~used_links);
      for (int i : by_link_[f]) {
        const Block& b = blocks_[i];
        if ((b.inner & used_vertices).none() && (b.links & used_links).none()) {
          take(b, used_vertices, used_links);
          if (done_) return;
        }
      }
      Mask dropped = used_links;
      dropped.set(f);
      search(used_vertices, dropped);
    }
  }

  const SearchGraph& g_;
  Mask terminals_;
  Mask others_;
  Mask links_;
  std::vector<int> terminal_list_;
  int root_;
  int cap_;
  std::vector<Block> blocks_;
  std::vector<std::vector<int>> by_vertex_;
  std::vector<std::vector<int>> by_link_;
  std::vector<Mask> chosen_;
  std::vector<Mask> best_trees_;
  int best_ = 0;
  bool done_ = false;
};

class LambdaSearch {
 public:
  LambdaSearch(const SearchGraph& g, const Mask& terminals, int cap)
      : g_(g), terminals_(terminals), root_(static_cast<int>(first_bit(terminals))), cap_(cap) {
    for_each_bit(terminals_, [&](std::size_t t) { terminal_list_.push_back(static_cast<int>(t)); });
  }

  Packing run() {
    if (cap_ <= 0) return {};
    search(g_.edges);
    return {best_, best_trees_};
  }

 private:
  void record() {
    const int count = static_cast<int>(chosen_.size());
    if (count > best_) {
      best_ = count;
      best_trees_ = chosen_;
    }
    if (best_ >= cap_) done_ = true;
  }

  void search(const Mask& residual) {
    record();
    if (done_) return;
    const int count = static_cast<int>(chosen_.size());

    const Mask reached = g_.reach(Mask{}.set(root_), residual);
    if ((terminals_ & ~reached).any()) return;
    if (count + 1 > best_) {
      chosen_.push_back(pruned_spanning_tree(g_, root_, residual, terminals_));
      record();
      chosen_.pop_back();
      if (done_) return;
    }

    // Every tree spends an edge at each terminal and |S|-1 edges overall.
    int pivot = -1;
    std::size_t slack = kMaxSearchBits;
    for (int t : terminal_list_) {
      std::size_t d = (g_.inc[t] & residual).count();
      if (d < slack) {
        slack = d;
        pivot = t;
      }
    }
    const std::size_t budget = (g_.induced_edges(reached) & residual).count() / (terminal_list_.size() - 1);
    if (count + static_cast<int>(std::min(slack, budget)) <= best_) return;

    const int anchor = static_cast<int>(first_bit(g_.inc[pivot] & residual));
    visit_minimal_trees(g_, terminals_, residual, anchor, [&](const Mask& tree, const Mask&) {
      chosen_.push_back(tree);
      search(residual & ~tree);
      chosen_.pop_back();
      return !done_;
    });
    if (done_) return;
    Mask rest = residual;
    rest.reset(anchor);
    search(rest);
  }

  const SearchGraph& g_;
  Mask terminals_;
  std::vector<int> terminal_list_;
  int root_;
  int cap_;
  std::vector<Mask> chosen_;
  std::vector<Mask> best_trees_;
  int best_ = 0;
  bool done_ = false;
};

}  // namespace

Packing max_kappa_packing(const SearchGraph& g, const Mask& terminals, int cap) {
  return KappaSearch(g, terminals, cap).run();
}

Packing max_lambda_packing(const SearchGraph& g, const Mask& terminals, int cap) {
  return LambdaSearch(g, terminals, cap).run();
}

}  // namespace gcon::detail
