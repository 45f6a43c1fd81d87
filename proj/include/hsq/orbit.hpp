// Nilpotent-orbit descriptors and the sl2-grading data they induce.
//
// Classical orbits are typed partitions; the Levi L (centralizer of the
// h-element) is computed from h-eigenvalue multiplicities on the defining
// representation, the reductive centralizer G_iota from part multiplicities,
// and u/u+ as the degree-one piece of gl(V), Sym^2 V or wedge^2 V.
// Exceptional orbits are principal-in-Levi labels backed by the orbit tables
// in the data directory; their h-elements and gradings are recomputed from
// the root system.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsq/group.hpp"
#include "hsq/partition.hpp"
#include "hsq/rep.hpp"
#include "hsq/rootsys.hpp"

namespace hsq {

// one Levi-type component of an exceptional orbit label; short = tilde-marked
struct LeviComp {
  char family;
  int rank;
  bool short_roots = false;
  friend bool operator<(const LeviComp& a, const LeviComp& b) {
    return std::tie(a.family, a.rank, a.short_roots) < std::tie(b.family, b.rank, b.short_roots);
  }
  friend bool operator==(const LeviComp& a, const LeviComp& b) {
    return std::tie(a.family, a.rank, a.short_roots) == std::tie(b.family, b.rank, b.short_roots);
  }
};

struct OrbitLabel {
  enum Kind { ClassicalK, LeviK };
  Kind kind = ClassicalK;
  Partition part;               // ClassicalK
  std::vector<LeviComp> levi;   // LeviK, sorted; empty = trivial orbit
  std::vector<int> nodes;       // LeviK: explicit simple-node subset when pinned

  static OrbitLabel classical(Partition p) {
    OrbitLabel o;
    o.kind = ClassicalK;
    o.part = std::move(p);
    return o;
  }
  static OrbitLabel levi_label(std::vector<LeviComp> comps, std::vector<int> nodes = {}) {
    OrbitLabel o;
    o.kind = LeviK;
    o.levi = std::move(comps);
    std::sort(o.levi.begin(), o.levi.end());
    o.nodes = std::move(nodes);
    return o;
  }

  bool is_trivial(int ambient_n) const {
    if (kind == LeviK) return levi.empty();
    for (int p : part.parts)
      if (p != 1) return false;
    return true;
  }

  std::string str() const {
    if (kind == ClassicalK) {
      bool triv = true;
      for (int p : part.parts) triv &= (p == 1);
      if (triv && !part.parts.empty()) return "1";
      return part.str();
    }
    if (levi.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < levi.size(); ++i) {
      if (i) s += "+";
      if (levi[i].short_roots) s += "~";
      s += std::string(1, levi[i].family) + std::to_string(levi[i].rank);
    }
    return s;
  }

  friend bool operator==(const OrbitLabel& a, const OrbitLabel& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == ClassicalK) return a.part == b.part;
    return a.levi == b.levi;
  }
  friend bool operator<(const OrbitLabel& a, const OrbitLabel& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == ClassicalK) return a.part < b.part;
    return a.levi < b.levi;
  }
};

// ---- classical ambient types -------------------------------------------------

enum class Ambient { gl, sp, so };

inline char ambient_char(Ambient a) {
  return a == Ambient::gl ? 'A' : a == Ambient::sp ? 'C' : 'B';
}

// eigenvalue -> multiplicity of the h-element on the defining space
inline std::map<int,int> eigen_mults(const Partition& p) { return p.h_values(); }

// L = centralizer of h: one GL factor per positive eigenvalue (tagged by the
// eigenvalue), plus the sp/so factor on the zero eigenspace.
inline Group levi_of_partition(Ambient amb, const Partition& p) {
  auto m = eigen_mults(p);
  Group L;
  std::vector<std::pair<int,int>> pos;  // (eigenvalue, mult), descending
  for (auto it = m.rbegin(); it != m.rend(); ++it)
    if (it->first > 0) pos.push_back(*it);
  if (amb == Ambient::gl) {
    // all eigenvalues, descending, each a GL factor
    for (auto it = m.rbegin(); it != m.rend(); ++it)
      L.factors.push_back({GK::GL, it->second, it->first});
  } else {
    for (auto [e, mult] : pos) L.factors.push_back({GK::GL, mult, e});
    int z = m.count(0) ? m.at(0) : 0;
    if (z > 0)
      L.factors.push_back({amb == Ambient::sp ? GK::Sp : GK::SO, z, 0});
  }
  return L;
}

// G_iota: one factor per distinct part, tagged by the part.
// gl: GL_a; sp: Sp_a for odd parts, O_a for even; so: O_a for odd, Sp_a for even.
inline Group centralizer_of_partition(Ambient amb, const Partition& p) {
  Group G;
  for (auto [part, a] : p.exponents()) {
    if (amb == Ambient::gl) {
      G.factors.push_back({GK::GL, a, part});
    } else {
      bool symplectic_factor = (amb == Ambient::sp) == (part % 2 == 1);
      if (symplectic_factor) {
        G.factors.push_back({GK::Sp, a, part});
      } else {
        GroupFactor f{GK::SO, a, part};
        f.disconnected = true;  // O_a reduced to its identity component
        G.factors.push_back(f);
      }
    }
  }
  return G;
}

// degree-1 dimension straight from the eigenvalue grading (oracle-style count)
inline long long deg1_count(Ambient amb, const Partition& p) {
  auto m = eigen_mults(p);
  auto get = [&](int e) { return m.count(e) ? m.at(e) : 0; };
  long long dim = 0;
  if (amb == Ambient::gl) {
    for (auto& [e, mult] : m) dim += (long long)mult * get(e - 1);
  } else {
    for (auto& [e, mult] : m)
      if (e <= 0) dim += (long long)mult * get(1 - e);
  }
  return dim;
}

// u/u+ as a representation expression over centralizer_of_partition(amb, p).
inline RepExpr u_mod_uplus_partition(Ambient amb, const Partition& p) {
  Group c = centralizer_of_partition(amb, p);
  auto exps = p.exponents();
  auto factor_of_part = [&](int part) {
    for (size_t i = 0; i < c.factors.size(); ++i)
      if (c.factors[i].tag == part) return (int)i;
    throw std::logic_error("factor_of_part");
  };
  auto eigs_of = [&](int part) {
    std::vector<int> v;
    for (int e = part - 1; e >= 1 - part; e -= 2) v.push_back(e);
    return v;
  };
  auto has_eig = [&](int part, int e) { return e <= part - 1 && e >= 1 - part && (part - 1 - e) % 2 == 0; };

  RepExpr u;
  if (amb == Ambient::gl) {
    for (auto [pp, pa] : exps)
      for (auto [qq, qa] : exps) {
        int count = 0;
        for (int a : eigs_of(pp))
          if (has_eig(qq, a - 1)) ++count;
        if (!count) continue;
        Summand s;
        RLabel lp{factor_of_part(pp), LK::std};
        RLabel lq{factor_of_part(qq), LK::std};
        lq.dual = true;
        if (lp.factor == lq.factor) throw std::logic_error("same-part gl overlap");
        s.comps = {lp, lq};
        u.terms.push_back({s, count});
      }
  } else {
    for (size_t i = 0; i < exps.size(); ++i)
      for (size_t j = i; j < exps.size(); ++j) {
        auto [pp, pa] = exps[i];
        auto [qq, qa] = exps[j];
        int count = 0;
        for (int a : eigs_of(pp))
          if (a <= 0 && has_eig(qq, 1 - a)) ++count;
        for (int a : eigs_of(qq))
          if (i != j && a <= 0 && has_eig(pp, 1 - a)) ++count;
        if (!count) continue;
        if (i == j) throw std::logic_error("same-part sp/so overlap");
        Summand s;
        RLabel lp{factor_of_part(pp), LK::std};
        RLabel lq{factor_of_part(qq), LK::std};
        s.comps = {lp, lq};
        u.terms.push_back({s, count});
      }
  }
  return canonicalize(u);
}

// ---- exceptional ambients ----------------------------------------------------

// All simple-node subsets of `rs` realizing the given component multiset.
inline std::vector<std::vector<int>> levi_subsets(const RootSystem& rs,
                                                  const std::vector<LeviComp>& want) {
  std::vector<LeviComp> target = want;
  std::sort(target.begin(), target.end());
  std::vector<std::vector<int>> hits;
  for (unsigned mask = 0; mask < (1u << rs.rank); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < rs.rank; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    if (nodes.empty() != target.empty()) continue;
    auto comps = classify_subdiagram(rs, nodes);
    std::vector<LeviComp> got;
    for (auto& cc : comps) got.push_back({cc.family, cc.rank, cc.made_of_short});
    std::sort(got.begin(), got.end());
    if (got == target) hits.push_back(nodes);
  }
  return hits;
}

// Dominant h for a Levi-type orbit label; ambiguous labels must carry nodes.
inline Cochar exceptional_h(const RootSystem& rs, const OrbitLabel& o) {
  if (o.kind != OrbitLabel::LeviK) throw std::invalid_argument("exceptional_h: not a Levi label");
  if (!o.nodes.empty()) return principal_h(rs, o.nodes);
  auto subsets = levi_subsets(rs, o.levi);
  if (subsets.empty()) throw std::invalid_argument("no Levi of type " + o.str() + " in " + rs.name());
  Cochar h = principal_h(rs, subsets[0]);
  for (size_t i = 1; i < subsets.size(); ++i)
    if (principal_h(rs, subsets[i]) != h)
      throw std::invalid_argument("ambiguous Levi label " + o.str() + " in " + rs.name() +
                                  " (needs explicit nodes)");
  return h;
}

} // namespace hsq
