#include "fdim/difference_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "fdim/errors.hpp"

namespace fibdim {

bool is_anti_divisible(std::span<const std::int64_t> dset) {
  for (std::size_t i = 0; i < dset.size(); ++i) {
    for (std::size_t j = 0; j < dset.size(); ++j) {
      if (i != j && dset[j] % dset[i] == 0) return false;
    }
  }
  return true;
}

Graph difference_graph(std::size_t n, std::span<const std::int64_t> dset) {
  for (auto d : dset) {
    if (d < 1 || static_cast<std::size_t>(d) >= std::max<std::size_t>(n, 1)) {
      throw InvalidInput("difference " + std::to_string(d) + " outside [1, " +
                         std::to_string(n) + " - 1]");
    }
  }
  if (!is_anti_divisible(dset)) throw InvalidInput("difference set is not anti-divisible");
  Graph g(n);
  for (auto d : dset) {
    for (std::size_t i = 0; i + static_cast<std::size_t>(d) < n; ++i) {
      g.add_edge(i, i + static_cast<std::size_t>(d));
    }
  }
  return g;
}

bool check_difference_certificate(const Graph& g, const DifferenceCertificate& cert) {
  const std::size_t n = g.node_count();
  if (cert.n != n || cert.position.size() != n) return false;
  std::vector<std::int64_t> sorted = cert.position;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i] != static_cast<std::int64_t>(i + 1)) return false;
  }
  for (auto d : cert.dset) {
    if (d < 1 || d >= static_cast<std::int64_t>(n)) return false;
  }
  if (!is_anti_divisible(cert.dset)) return false;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const auto diff = std::abs(cert.position[u] - cert.position[v]);
      const bool in_d =
          std::find(cert.dset.begin(), cert.dset.end(), diff) != cert.dset.end();
      if (in_d != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

namespace {

enum class Status : char { unknown, in, out };

class OrderingSearch {
 public:
  explicit OrderingSearch(const Graph& g)
      : g_(g), n_(g.node_count()), status_(n_, Status::unknown), at_(n_), used_(n_, 0) {}

  bool run() { return place(0); }

  DifferenceCertificate certificate() const {
    DifferenceCertificate cert;
    cert.n = n_;
    cert.position.assign(n_, 0);
    for (std::size_t k = 0; k < n_; ++k) {
      cert.position[at_[k]] = static_cast<std::int64_t>(k + 1);
    }
    for (std::size_t d = 1; d < n_; ++d) {
      if (status_[d] == Status::in) cert.dset.push_back(static_cast<std::int64_t>(d));
    }
    return cert;
  }

 private:
  bool divides_conflict(std::size_t d) const {
    for (std::size_t e = 1; e < n_; ++e) {
      if (e != d && status_[e] == Status::in && (d % e == 0 || e % d == 0)) return true;
    }
    return false;
  }

  // Every placed node must still be able to reach its degree.
  bool degrees_feasible(std::size_t placed) const {
    for (std::size_t j = 0; j < placed; ++j) {
      std::size_t sure = 0, maybe = 0;
      for (std::size_t d = 1; d < n_; ++d) {
        for (std::size_t k : {j + d, j - d}) {
          if (k >= n_) continue;
          if (status_[d] == Status::in) {
            ++sure;
          } else if (status_[d] == Status::unknown) {
            ++maybe;
          }
        }
      }
      const std::size_t deg = g_.degree(at_[j]);
      if (deg < sure || deg > sure + maybe) return false;
    }
    return true;
  }

  bool place(std::size_t k) {
    if (k == n_) return n_ < 2 || at_[0] < at_[n_ - 1];
    for (NodeId u = 0; u < n_; ++u) {
      if (used_[u]) continue;
      std::vector<std::size_t> fixed;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const std::size_t d = k - j;
        const Status want = g_.adjacent(u, at_[j]) ? Status::in : Status::out;
        if (status_[d] == Status::unknown) {
          if (want == Status::in && divides_conflict(d)) {
            ok = false;
          } else {
            status_[d] = want;
            fixed.push_back(d);
          }
        } else if (status_[d] != want) {
          ok = false;
        }
      }
      at_[k] = u;
      if (ok && degrees_feasible(k + 1)) {
        used_[u] = 1;
        if (place(k + 1)) return true;
        used_[u] = 0;
      }
      for (auto d : fixed) status_[d] = Status::unknown;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Status> status_;
  std::vector<NodeId> at_;
  std::vector<char> used_;
};

}  // namespace

std::optional<DifferenceCertificate> is_difference_graph(const Graph& g, std::size_t cap) {
  if (g.node_count() > cap) {
    throw CapExceeded("difference-graph search is capped at " + std::to_string(cap) +
                      " nodes, graph has " + std::to_string(g.node_count()));
  }
  OrderingSearch search(g);
  if (!search.run()) return std::nullopt;
  DifferenceCertificate cert = search.certificate();
  if (!check_difference_certificate(g, cert)) {
    throw InternalError("difference-graph search produced an invalid certificate");
  }
  return cert;
}

}  // namespace fibdim
