#pragma once

// Domain data model: substrate networks, bulk catalogs and virtual network
// requests. All types are immutable value types once constructed; invariant
// violations are reported as data by validate(), not as exceptions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vnerab {

struct SubstrateNode {
  int id = 0;
  double capacity = 0.0;  // B_i
};

struct SubstrateArc {
  int tail = 0;  // i
  int head = 0;  // j
  double capacity = 0.0;  // K_ij
};

// Directed physical substrate. Antiparallel arcs (i,j) and (j,i) are distinct
// and both allowed; parallel arcs and self-loops are invalid.
class SubstrateNetwork {
 public:
  SubstrateNetwork() = default;
  SubstrateNetwork(std::vector<SubstrateNode> nodes, std::vector<SubstrateArc> arcs)
      : nodes_(std::move(nodes)), arcs_(std::move(arcs)) {
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
      index_.emplace(nodes_[n].id, n);
    }
    out_.resize(nodes_.size());
    in_.resize(nodes_.size());
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
      auto t = node_index(arcs_[a].tail);
      auto h = node_index(arcs_[a].head);
      if (t && h && *t != *h) {
        out_[*t].push_back(a);
        in_[*h].push_back(a);
      }
    }
  }

  const std::vector<SubstrateNode>& nodes() const { return nodes_; }
  const std::vector<SubstrateArc>& arcs() const { return arcs_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  std::optional<std::size_t> node_index(int id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Arc indices leaving / entering the node at position n.
  const std::vector<std::size_t>& out_arcs(std::size_t n) const { return out_[n]; }
  const std::vector<std::size_t>& in_arcs(std::size_t n) const { return in_[n]; }

 private:
  std::vector<SubstrateNode> nodes_;
  std::vector<SubstrateArc> arcs_;
  std::unordered_map<int, std::size_t> index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

struct Bulk {
  double size = 0.0;
  double cost = 0.0;
};

// Rentable capacity bulks for nodes (U, alpha) and links (Q, beta). Sizes are
// strictly increasing and unit costs non-increasing with size (economies of
// scale).
struct BulkCatalog {
  std::vector<Bulk> node_bulks;
  std::vector<Bulk> link_bulks;
};

struct VirtualNode {
  int id = 0;
  double requirement = 0.0;            // t^r_v
  std::vector<int> locality;           // substrate node ids; may be empty
};

// One VN request: nodes, dense traffic matrix (row-major over node positions)
// and profit. An empty locality set is legal data; the request then cannot be
// accepted.
class VnRequest {
 public:
  VnRequest() = default;
  VnRequest(int id, std::vector<VirtualNode> nodes, std::vector<double> traffic,
            double profit)
      : id_(id), nodes_(std::move(nodes)), traffic_(std::move(traffic)), profit_(profit) {}

  int id() const { return id_; }
  const std::vector<VirtualNode>& nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }
  double profit() const { return profit_; }

  // Demand between node positions v and w; zero when the matrix is absent or
  // malformed.
  double demand(std::size_t v, std::size_t w) const {
    const std::size_t k = nodes_.size();
    if (v >= k || w >= k || traffic_.size() != k * k) return 0.0;
    return traffic_[v * k + w];
  }

  const std::vector<double>& traffic() const { return traffic_; }

  std::optional<std::size_t> vnode_index(int id) const {
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
      if (nodes_[v].id == id) return v;
    }
    return std::nullopt;
  }

 private:
  int id_ = 0;
  std::vector<VirtualNode> nodes_;
  std::vector<double> traffic_;  // k*k, diagonal zero
  double profit_ = 0.0;
};

struct Instance {
  SubstrateNetwork substrate;
  BulkCatalog catalog;
  std::vector<VnRequest> requests;
};

// One positive-demand ordered pair (v,w) of a request; v,w are node positions.
struct Commodity {
  std::size_t v = 0;
  std::size_t w = 0;
  double demand = 0.0;
};

// The request's commodities in lexicographic (v,w) position order.
inline std::vector<Commodity> commodities(const VnRequest& req) {
  std::vector<Commodity> out;
  const std::size_t k = req.node_count();
  for (std::size_t v = 0; v < k; ++v) {
    for (std::size_t w = 0; w < k; ++w) {
      if (v == w) continue;
      const double d = req.demand(v, w);
      if (d > 0.0) out.push_back({v, w, d});
    }
  }
  return out;
}

namespace detail {

inline void check_bulks(const std::vector<Bulk>& bulks, const std::string& what,
                        std::vector<std::string>& out) {
  if (bulks.empty()) {
    out.push_back(what + ": bulk list is empty");
    return;
  }
  for (std::size_t b = 0; b < bulks.size(); ++b) {
    if (!(bulks[b].size > 0.0)) {
      out.push_back(what + ": bulk " + std::to_string(b) + " has non-positive size");
    }
    if (bulks[b].cost < 0.0) {
      out.push_back(what + ": bulk " + std::to_string(b) + " has negative cost");
    }
  }
  for (std::size_t b = 1; b < bulks.size(); ++b) {
    if (!(bulks[b].size > bulks[b - 1].size)) {
      out.push_back(what + ": sizes not strictly increasing at position " + std::to_string(b));
    }
  }
  // Economies of scale: unit cost non-increasing with size.
  for (std::size_t a = 0; a < bulks.size(); ++a) {
    for (std::size_t b = a + 1; b < bulks.size(); ++b) {
      if (bulks[a].size <= 0.0 || bulks[b].size <= 0.0) continue;
      const double ra = bulks[a].cost / bulks[a].size;
      const double rb = bulks[b].cost / bulks[b].size;
      if (rb > ra + 1e-12) {
        out.push_back(what + ": unit cost increases with size (bulk " + std::to_string(a) +
                      " vs " + std::to_string(b) + ")");
      }
    }
  }
}

}  // namespace detail

// Returns one entry per violated invariant; empty means valid. Pure function.
inline std::vector<std::string> validate(const Instance& inst) {
  std::vector<std::string> out;
  const auto& net = inst.substrate;

  std::unordered_map<int, int> id_count;
  for (const auto& n : net.nodes()) {
    ++id_count[n.id];
    if (n.capacity < 0.0) {
      out.push_back("substrate node " + std::to_string(n.id) + ": negative capacity");
    }
  }
  for (const auto& [id, c] : id_count) {
    if (c > 1) out.push_back("substrate node id " + std::to_string(id) + " is duplicated");
  }

  std::unordered_map<long long, int> pair_count;
  for (const auto& a : net.arcs()) {
    if (a.tail == a.head) {
      out.push_back("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                    "): self-loop");
    }
    if (a.capacity < 0.0) {
      out.push_back("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                    "): negative capacity");
    }
    if (!net.node_index(a.tail)) {
      out.push_back("arc references unknown tail node " + std::to_string(a.tail));
    }
    if (!net.node_index(a.head)) {
      out.push_back("arc references unknown head node " + std::to_string(a.head));
    }
    const long long key = static_cast<long long>(a.tail) * 2000003LL + a.head;
    if (++pair_count[key] == 2) {
      out.push_back("parallel arcs on pair (" + std::to_string(a.tail) + "," +
                    std::to_string(a.head) + ")");
    }
  }

  detail::check_bulks(inst.catalog.node_bulks, "node catalog", out);
  detail::check_bulks(inst.catalog.link_bulks, "link catalog", out);

  for (const auto& req : inst.requests) {
    const std::string tag = "request " + std::to_string(req.id());
    if (req.node_count() < 1) out.push_back(tag + ": has no virtual nodes");
    if (req.profit() < 0.0) out.push_back(tag + ": negative profit");
    const std::size_t k = req.node_count();
    if (req.traffic().size() != k * k) {
      out.push_back(tag + ": traffic matrix is not " + std::to_string(k) + "x" +
                    std::to_string(k));
    } else {
      for (std::size_t v = 0; v < k; ++v) {
        if (req.demand(v, v) != 0.0) {
          out.push_back(tag + ": traffic diagonal nonzero at node position " + std::to_string(v));
        }
        for (std::size_t w = 0; w < k; ++w) {
          if (req.demand(v, w) < 0.0) {
            out.push_back(tag + ": negative demand (" + std::to_string(v) + "," +
                          std::to_string(w) + ")");
          }
        }
      }
    }
    std::unordered_map<int, int> vid_count;
    for (const auto& vn : req.nodes()) {
      if (++vid_count[vn.id] == 2) {
        out.push_back(tag + ": duplicate virtual node id " + std::to_string(vn.id));
      }
      if (vn.requirement < 0.0) {
        out.push_back(tag + ": virtual node " + std::to_string(vn.id) +
                      " has negative requirement");
      }
      for (int loc : vn.locality) {
        if (!net.node_index(loc)) {
          out.push_back(tag + ": virtual node " + std::to_string(vn.id) +
                        " locality names unknown substrate node " + std::to_string(loc));
        }
      }
    }
  }
  return out;
}

}  // namespace vnerab
