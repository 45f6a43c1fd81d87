// Reductive group descriptors up to root type.
//
// Factors keep their presentation (GL_6, Spin_7, Sp_4, ...) for printing and
// for the restriction rule base; equality of quadruples goes through the
// canonical root-type key, which identifies isogenous forms (Sp_2 = SL_2,
// SO_6 = SL_4, ...) and drops central tori, matching the one-representative-
// per-root-type convention of the tables.

#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "hsq/rootsys.hpp"

namespace hsq {

enum class GK { GL, SL, PGL, Sp, SO, Spin, O, E, F, G, Torus, Trivial };

inline std::string gk_name(GK k) {
  switch (k) {
    case GK::GL: return "GL";
    case GK::SL: return "SL";
    case GK::PGL: return "PGL";
    case GK::Sp: return "Sp";
    case GK::SO: return "SO";
    case GK::Spin: return "Spin";
    case GK::O: return "O";
    case GK::E: return "E";
    case GK::F: return "F";
    case GK::G: return "G";
    case GK::Torus: return "T";
    case GK::Trivial: return "1";
  }
  return "?";
}

struct GroupFactor {
  GK kind = GK::Trivial;
  int n = 0;        // defining size: GL_n, Sp_n (n even), SO_n / Spin_n; rank for E/F/G
  int tag = 0;      // embedding bookkeeping (e.g. the partition part it centralizes)
  bool disconnected = false;  // O_n recorded as SO_n with this flag

  std::string str() const {
    if (kind == GK::Trivial) return "1";
    if (kind == GK::Torus) return "GL_1";
    std::string s = (kind == GK::E || kind == GK::F || kind == GK::G)
                        ? gk_name(kind) + std::to_string(n)
                        : gk_name(kind) + "_" + std::to_string(n);
    return s;
  }

  // simple root type, or ('T', torus rank), or ('1', 0)
  std::pair<char,int> root_type() const {
    switch (kind) {
      case GK::GL:
      case GK::SL:
      case GK::PGL:
        if (n <= 1) return {kind == GK::GL ? 'T' : '1', kind == GK::GL ? 1 : 0};
        return {'A', n - 1};
      case GK::Sp:
        if (n <= 0) return {'1', 0};
        if (n == 2) return {'A', 1};
        return {'C', n / 2};
      case GK::SO:
      case GK::Spin:
      case GK::O: {
        if (n <= 1) return {'1', 0};
        if (n == 2) return {'T', 1};
        if (n == 3) return {'A', 1};
        if (n == 4) return {'A', 0};  // splits; handled by canonical_factors()
        if (n == 5) return {'C', 2};
        if (n == 6) return {'A', 3};
        if (n % 2 == 1) return {'B', (n - 1) / 2};
        return {'D', n / 2};
      }
      case GK::E: return {'E', n};
      case GK::F: return {'F', 4};
      case GK::G: return {'G', 2};
      case GK::Torus: return {'T', 1};
      case GK::Trivial: return {'1', 0};
    }
    return {'1', 0};
  }

  // reductive rank of the factor (GL_n counts its center)
  int reductive_rank() const {
    switch (kind) {
      case GK::GL: return n;
      case GK::SL:
      case GK::PGL: return n - 1;
      case GK::Sp: return n / 2;
      case GK::SO:
      case GK::Spin:
      case GK::O: return n / 2;
      case GK::E: return n;
      case GK::F: return 4;
      case GK::G: return 2;
      case GK::Torus: return 1;
      case GK::Trivial: return 0;
    }
    return 0;
  }
};

struct Group {
  std::vector<GroupFactor> factors;
  int torus = 0;  // extra central torus rank beyond the factors

  Group() = default;
  explicit Group(GroupFactor f) { if (f.kind != GK::Trivial) factors.push_back(f); }

  static Group trivial() { return Group(); }
  static Group single(GK k, int n, int tag = 0) {
    Group g;
    if (k == GK::Torus) { g.torus = 1; return g; }
    if (k != GK::Trivial && n > 0) g.factors.push_back({k, n, tag});
    return g;
  }

  bool is_trivial() const { return factors.empty() && torus == 0; }

  Group& operator*=(const Group& o) {
    for (auto& f : o.factors) factors.push_back(f);
    torus += o.torus;
    return *this;
  }
  friend Group operator*(Group a, const Group& b) { a *= b; return a; }

  int reductive_rank() const {
    int r = torus;
    for (auto& f : factors) r += f.reductive_rank();
    return r;
  }

  std::string str() const {
    if (factors.empty() && torus == 0) return "1";
    std::string s;
    // group equal consecutive factors as powers
    std::vector<std::pair<std::string,int>> runs;
    for (auto& f : factors) {
      std::string fs = f.str();
      if (!runs.empty() && runs.back().first == fs) runs.back().second++;
      else runs.push_back({fs, 1});
    }
    for (int i = 0; i < torus; ++i) {
      if (!runs.empty() && runs.back().first == "GL_1") runs.back().second++;
      else runs.push_back({"GL_1", 1});
    }
    for (size_t i = 0; i < runs.size(); ++i) {
      if (i) s += "x";
      s += runs[i].first;
      if (runs[i].second > 1) s += "^" + std::to_string(runs[i].second);
    }
    return s;
  }
};

// canonical simple factors: (family, rank, tag), sorted; tori dropped.
// SO_4-likes split into two A_1's; disconnectedness is not part of the key.
inline std::vector<std::array<int,3>> canonical_factors(const Group& g, bool keep_tags) {
  std::vector<std::array<int,3>> out;
  for (auto& f : g.factors) {
    int tag = keep_tags ? f.tag : 0;
    if ((f.kind == GK::SO || f.kind == GK::Spin || f.kind == GK::O) && f.n == 4) {
      out.push_back({'A', 1, tag});
      out.push_back({'A', 1, tag});
      continue;
    }
    auto [fam, rk] = f.root_type();
    if (fam == '1' || fam == 'T') continue;
    if (fam == 'B' && rk == 2) fam = 'C';  // B2 = C2
    out.push_back({fam, rk, tag});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// canonical torus rank (number of GL_1 / SO_2 factors plus explicit torus)
inline int torus_rank(const Group& g) {
  int r = g.torus;
  for (auto& f : g.factors) {
    auto [fam, rk] = f.root_type();
    if (fam == 'T') r += rk;
    if (f.kind == GK::GL && f.n >= 2) r += 1;
  }
  return r;
}

inline bool same_root_type(const Group& a, const Group& b) {
  return canonical_factors(a, false) == canonical_factors(b, false);
}

} // namespace hsq
