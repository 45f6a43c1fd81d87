// Exact root-system and Weyl-chamber arithmetic for the simple types A-G.
//
// Conventions (Bourbaki numbering throughout):
//   cartan[i][j] = <alpha_j, alpha_i^vee>, so column j is alpha_j written in
//   fundamental-weight coordinates.  Weights are stored in fundamental-weight
//   coordinates; roots in simple-root coordinates.  A cocharacter is stored by
//   its pairings with the simple roots (the weighted-Dynkin convention), which
//   identifies it with a weight of the dual root system (transposed Cartan).

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsq/rational.hpp"

namespace hsq {

using Root = std::vector<int>;     // simple-root coordinates
using Weight = std::vector<Rat>;   // fundamental-weight coordinates
using Cochar = std::vector<long long>;  // pairings with simple roots

struct RootSystem {
  char family = 'A';
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<int> d;                    // (alpha_i, alpha_i)/2, integer-scaled
  std::vector<Root> pos;                 // positive roots

  std::string name() const { return std::string(1, family) + std::to_string(rank); }

  // <alpha (coords c), alpha_i^vee>
  int pairing_simple_covee(const Root& c, int i) const {
    int s = 0;
    for (int j = 0; j < rank; ++j) s += c[j] * cartan[i][j];
    return s;
  }

  // (alpha, alpha)/2 for alpha with coords c
  int half_norm(const Root& c) const {
    long long s = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        s += (long long)c[i] * c[j] * cartan[i][j] * d[i];
    return (int)(s / 2);
  }

  // coroot of alpha in simple-coroot coordinates
  Root coroot(const Root& c) const {
    int da = half_norm(c);
    Root e(rank);
    for (int i = 0; i < rank; ++i) {
      int num = c[i] * d[i];
      if (num % da != 0) throw std::logic_error("non-integral coroot");
      e[i] = num / da;
    }
    return e;
  }

  // <weight w, alpha^vee> for alpha with coroot coords e
  Rat pair_weight_coroot(const Weight& w, const Root& e) const {
    Rat s(0);
    for (int i = 0; i < rank; ++i) s += w[i] * Rat(e[i]);
    return s;
  }

  // degree of root c under cocharacter h
  long long degree(const Root& c, const Cochar& h) const {
    long long s = 0;
    for (int i = 0; i < rank; ++i) s += (long long)c[i] * h[i];
    return s;
  }
};

namespace detail {

inline std::vector<std::pair<int,int>> chain_edges(int n) {
  std::vector<std::pair<int,int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return e;
}

// Builds cartan + d from an edge list with per-node half-norms.
// For an edge (i,j): cartan[i][j] = -(d_j ... ) derived from (a_i,a_j) = -lcm?
// We instead set (alpha_i, alpha_j) = -max(d_i, d_j) for adjacent nodes, the
// standard relation for the simple types, giving
//   cartan[i][j] = 2(a_i,a_j)/(a_i,a_i) = -max(d_i,d_j)/d_i.
inline void fill_cartan(RootSystem& rs, const std::vector<std::pair<int,int>>& edges) {
  int n = rs.rank;
  rs.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) rs.cartan[i][i] = 2;
  for (auto [i, j] : edges) {
    int m = std::max(rs.d[i], rs.d[j]);
    rs.cartan[i][j] = -m / rs.d[i];
    rs.cartan[j][i] = -m / rs.d[j];
  }
}

inline void generate_positive_roots(RootSystem& rs) {
  int n = rs.rank;
  std::set<Root> known;
  std::vector<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root a(n, 0);
    a[i] = 1;
    known.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& a : frontier) {
      for (int i = 0; i < n; ++i) {
        // root-string: alpha + alpha_i is a root iff p - <alpha,alpha_i^vee> > 0,
        // p = depth of the string below alpha (those roots are already known).
        int p = 0;
        Root down = a;
        while (true) {
          down[i] -= 1;
          bool neg = false, allz = true;
          for (int v : down) { if (v < 0) neg = true; if (v != 0) allz = false; }
          if (allz || neg || !known.count(down)) break;
          ++p;
        }
        if (p - rs.pairing_simple_covee(a, i) > 0) {
          Root up = a;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  rs.pos.assign(known.begin(), known.end());
  std::sort(rs.pos.begin(), rs.pos.end(), [](const Root& a, const Root& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });
}

} // namespace detail

inline size_t expected_positive_roots(char family, int rank) {
  switch (family) {
    case 'A': return (size_t)rank * (rank + 1) / 2;
    case 'B':
    case 'C': return (size_t)rank * rank;
    case 'D': return (size_t)rank * (rank - 1);
    case 'E': return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

inline bool valid_simple_type(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
  }
  return false;
}

inline const RootSystem& build_root_system(char family, int rank) {
  static std::map<std::pair<char,int>, std::unique_ptr<RootSystem>> cache;
  auto key = std::make_pair(family, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  if (!valid_simple_type(family, rank))
    throw std::invalid_argument("not a valid simple type: " + std::string(1, family) +
                                std::to_string(rank));

  auto rs = std::make_unique<RootSystem>();
  rs->family = family;
  rs->rank = rank;
  std::vector<std::pair<int,int>> edges;
  switch (family) {
    case 'A':
      rs->d.assign(rank, 1);
      edges = detail::chain_edges(rank);
      break;
    case 'B':  // alpha_rank short
      rs->d.assign(rank, 2);
      rs->d[rank - 1] = 1;
      edges = detail::chain_edges(rank);
      break;
    case 'C':  // alpha_rank long
      rs->d.assign(rank, 1);
      rs->d[rank - 1] = 2;
      edges = detail::chain_edges(rank);
      break;
    case 'D':
      rs->d.assign(rank, 1);
      edges = detail::chain_edges(rank - 1);
      edges.push_back({rank - 3, rank - 1});
      break;
    case 'E':
      rs->d.assign(rank, 1);
      // chain 1-3-4-5-...-rank, node 2 attached to node 4 (Bourbaki)
      edges.push_back({0, 2});
      for (int i = 2; i + 1 < rank; ++i) edges.push_back({i, i + 1});
      edges.push_back({1, 3});
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      rs->d = {2, 2, 1, 1};
      edges = detail::chain_edges(4);
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      rs->d = {1, 3};
      edges = detail::chain_edges(2);
      break;
  }
  detail::fill_cartan(*rs, edges);
  detail::generate_positive_roots(*rs);
  if (rs->pos.size() != expected_positive_roots(family, rank))
    throw std::logic_error("positive-root count mismatch for " + rs->name());

  auto& slot = cache[key];
  slot = std::move(rs);
  return *slot;
}

// ---- dominant-chamber arithmetic -------------------------------------------

// Repeated simple reflections at negative coordinates; the Weyl element is
// deliberately not tracked (only the dominant representative is well-defined).
inline Weight make_dominant(const RootSystem& rs, Weight w) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (w[i] < Rat(0)) {
        Rat wi = w[i];
        for (int j = 0; j < rs.rank; ++j) w[j] -= wi * Rat(rs.cartan[j][i]);
        moved = true;
      }
    }
  }
  return w;
}

// Same ascent on the coweight side (dual system = transposed Cartan).
inline Cochar make_dominant_cochar(const RootSystem& rs, Cochar v) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (v[i] < 0) {
        long long vi = v[i];
        for (int j = 0; j < rs.rank; ++j) v[j] -= vi * rs.cartan[i][j];
        moved = true;
      }
    }
  }
  return v;
}

// h-element of the principal sl2 of the standard Levi on `nodes`:
// the sum of positive coroots of the Levi subsystem, conjugated dominant.
inline Cochar principal_h(const RootSystem& rs, const std::vector<int>& nodes) {
  std::vector<char> in(rs.rank, 0);
  for (int i : nodes) {
    if (i < 0 || i >= rs.rank) throw std::out_of_range("principal_h: bad node");
    in[i] = 1;
  }
  std::vector<long long> e_sum(rs.rank, 0);
  for (const Root& a : rs.pos) {
    bool inside = true;
    for (int i = 0; i < rs.rank; ++i)
      if (a[i] != 0 && !in[i]) { inside = false; break; }
    if (!inside) continue;
    Root e = rs.coroot(a);
    for (int i = 0; i < rs.rank; ++i) e_sum[i] += e[i];
  }
  Cochar v(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) v[i] += e_sum[j] * rs.cartan[j][i];
  return make_dominant_cochar(rs, v);
}

// All roots (positive and negative) bucketed by degree under h.
struct Grading {
  std::map<long long, std::vector<Root>> by_degree;
  int count(long long deg) const {
    auto it = by_degree.find(deg);
    return it == by_degree.end() ? 0 : (int)it->second.size();
  }
  size_t total() const {
    size_t n = 0;
    for (auto& [d, v] : by_degree) n += v.size();
    return n;
  }
};

inline Grading grade_roots(const RootSystem& rs, const Cochar& h) {
  Grading g;
  for (const Root& a : rs.pos) {
    long long deg = rs.degree(a, h);
    g.by_degree[deg].push_back(a);
    Root neg(a);
    for (int& v : neg) v = -v;
    g.by_degree[-deg].push_back(neg);
  }
  return g;
}

// ---- Weyl dimension formula -------------------------------------------------

// dim V(lambda) = prod_{a>0} <lambda+rho, a^vee> / <rho, a^vee>, evaluated
// exactly via prime-exponent bookkeeping so intermediate products stay small.
inline long long weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  for (const Rat& c : lambda)
    if (c < Rat(0)) throw std::invalid_argument("weyl_dimension: not dominant");
  std::map<long long, long long> expo;  // prime -> exponent
  auto mul = [&](long long v, int sign) {
    for (long long p = 2; p * p <= v; ++p)
      while (v % p == 0) { expo[p] += sign; v /= p; }
    if (v > 1) expo[v] += sign;
  };
  for (const Root& a : rs.pos) {
    Root e = rs.coroot(a);
    Rat num(0), den(0);
    for (int i = 0; i < rs.rank; ++i) {
      num += (lambda[i] + Rat(1)) * Rat(e[i]);
      den += Rat(e[i]);
    }
    Rat f = num / den;
    mul(f.num, +1);
    if (f.den != 1) mul(f.den, -1);
  }
  long long dim = 1;
  for (auto& [p, k] : expo) {
    if (k < 0) throw std::logic_error("weyl_dimension: non-integral result");
    for (long long i = 0; i < k; ++i) dim *= p;
  }
  return dim;
}

// Highest weight of the dual representation: -w0(lambda) = dominant rep of -lambda.
inline Weight dual_weight(const RootSystem& rs, const Weight& lambda) {
  Weight neg(lambda);
  for (Rat& c : neg) c = -c;
  return make_dominant(rs, neg);
}

// ---- Dynkin-diagram combinatorics -------------------------------------------

// Connected components of a node subset, each classified as a simple type.
struct DiagramComponent {
  char family;
  int rank;
  std::vector<int> nodes;  // ambient node indices, in diagram order
  bool made_of_short = false;  // all nodes short in a non-simply-laced ambient
};

inline std::vector<DiagramComponent> classify_subdiagram(const RootSystem& rs,
                                                         const std::vector<int>& nodes) {
  std::vector<char> in(rs.rank, 0);
  for (int i : nodes) in[i] = 1;
  auto adjacent = [&](int i, int j) { return i != j && rs.cartan[i][j] != 0; };

  std::vector<DiagramComponent> comps;
  std::vector<char> seen(rs.rank, 0);
  for (int start : nodes) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = 1;
    for (size_t q = 0; q < comp.size(); ++q)
      for (int j : nodes)
        if (!seen[j] && adjacent(comp[q], j)) { seen[j] = 1; comp.push_back(j); }
    std::sort(comp.begin(), comp.end());

    DiagramComponent c;
    c.nodes = comp;
    c.rank = (int)comp.size();
    int maxd = *std::max_element(rs.d.begin(), rs.d.end());
    c.made_of_short = maxd > 1;
    for (int i : comp)
      if (rs.d[i] == maxd) c.made_of_short = false;

    int doubles = 0, triples = 0, forks = 0, shorts = 0;
    for (int i : comp) {
      if (rs.d[i] < maxd) ++shorts;
      int deg = 0;
      for (int j : comp)
        if (adjacent(i, j)) ++deg;
      if (deg >= 3) ++forks;
      for (int j : comp)
        if (adjacent(i, j) && i < j) {
          int m = rs.cartan[i][j] * rs.cartan[j][i];
          if (m == 2) ++doubles;
          if (m == 3) ++triples;
        }
    }
    if (triples) c.family = 'G';
    else if (doubles) {
      if (c.rank == 2) c.family = 'B';          // B2 = C2, normalized to 'B'
      else if (shorts == 1) c.family = 'B';
      else if (shorts == c.rank - 1) c.family = 'C';
      else c.family = 'F';
    } else if (forks) {
      std::vector<int> arms;
      for (int i : comp) {
        int deg = 0;
        for (int j : comp) if (adjacent(i, j)) ++deg;
        if (deg < 3) continue;
        for (int j : comp)
          if (adjacent(i, j)) {
            int len = 1, prev = i, cur = j;
            while (true) {
              int nxt = -1;
              for (int k : comp)
                if (k != prev && adjacent(cur, k)) { nxt = k; break; }
              if (nxt < 0) break;
              prev = cur; cur = nxt; ++len;
            }
            arms.push_back(len);
          }
        break;
      }
      std::sort(arms.begin(), arms.end());
      c.family = (arms.size() == 3 && arms[1] == 1) ? 'D' : 'E';
    } else {
      c.family = 'A';
    }
    comps.push_back(c);
  }
  std::sort(comps.begin(), comps.end(), [](const DiagramComponent& a, const DiagramComponent& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.nodes < b.nodes;
  });
  return comps;
}

// Type of a closed subsystem given by a set of roots (e.g. the degree-zero
// part of a grading): finds the subsystem's simple roots and classifies the
// resulting diagram.  Components made entirely of short ambient roots are
// flagged, mirroring classify_subdiagram.
inline std::vector<DiagramComponent> subsystem_type(const RootSystem& rs,
                                                    const std::vector<Root>& roots) {
  // positive members (first nonzero coordinate positive)
  std::vector<Root> pos;
  for (const Root& a : roots) {
    for (int v : a) {
      if (v > 0) { pos.push_back(a); break; }
      if (v < 0) break;
    }
  }
  std::set<Root> posset(pos.begin(), pos.end());
  // simple = not a sum of two positive members
  std::vector<Root> simple;
  for (const Root& a : pos) {
    bool decomposable = false;
    for (const Root& b : pos) {
      if (b == a) continue;
      Root cdiff(a);
      bool nonneg = true;
      for (int i = 0; i < rs.rank; ++i) {
        cdiff[i] -= b[i];
        if (cdiff[i] < 0) nonneg = false;
      }
      if (nonneg && posset.count(cdiff)) { decomposable = true; break; }
    }
    if (!decomposable) simple.push_back(a);
  }
  int n = (int)simple.size();
  // synthetic rank-system over the subsystem's simple roots
  RootSystem sub;
  sub.family = rs.family;
  sub.rank = n;
  sub.cartan.assign(n, std::vector<int>(n, 0));
  sub.d.assign(n, 1);
  int maxd = 1;
  for (int i = 0; i < n; ++i) {
    sub.d[i] = rs.half_norm(simple[i]);
    maxd = std::max(maxd, sub.d[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // <alpha_j, alpha_i^vee> = (alpha_i, alpha_j)/d_i
      long long ip = 0;
      for (int x = 0; x < rs.rank; ++x)
        for (int y = 0; y < rs.rank; ++y)
          ip += (long long)simple[i][x] * simple[j][y] * rs.cartan[x][y] * rs.d[x];
      sub.cartan[i][j] = (int)(ip / sub.d[i]);
    }
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  auto comps = classify_subdiagram(sub, all);
  int ambient_maxd = *std::max_element(rs.d.begin(), rs.d.end());
  for (auto& c : comps) {
    c.made_of_short = ambient_maxd > 1;
    for (int i : c.nodes)
      if (sub.d[i] == ambient_maxd) c.made_of_short = false;
  }
  return comps;
}

// Plain-text dump, one root per line in simple-root coordinates (for diffing).
inline std::string dump_root_system(const RootSystem& rs) {
  std::string out = rs.name() + " positive roots (" + std::to_string(rs.pos.size()) + ")\n";
  for (const Root& a : rs.pos) {
    for (int i = 0; i < rs.rank; ++i) {
      if (i) out += ' ';
      out += std::to_string(a[i]);
    }
    out += '\n';
  }
  return out;
}

} // namespace hsq
