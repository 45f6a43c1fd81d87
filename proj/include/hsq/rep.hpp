// Formal symplectic-representation expressions over a group's factors.
//
// A summand is a tensor product of one label per (distinct) factor; an
// expression is a multiset of summands.  T(tau) = tau (+) tau^vee is parse /
// print sugar and is always expanded in canonical form.  Torus twists
// (determinant powers, GL_1 characters) are carried exactly but dropped from
// the table-equality key; they do participate in multiplicity-freeness.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hsq/group.hpp"
#include "hsq/partition.hpp"
#include "hsq/rational.hpp"
#include "hsq/rootsys.hpp"

namespace hsq {

enum class LK { one, std, wedge, sym, spin, hspinp, hspinm, named };

struct RLabel {
  int factor = 0;
  LK kind = LK::one;
  int k = 1;            // wedge/sym degree
  bool dual = false;
  Rat twist = Rat(0);   // det^twist / character charge
  std::vector<Rat> named_wt;

  friend bool operator==(const RLabel& a, const RLabel& b) {
    return a.factor == b.factor && a.kind == b.kind && a.k == b.k && a.dual == b.dual &&
           a.twist == b.twist && a.named_wt == b.named_wt;
  }
};

struct Summand {
  std::vector<RLabel> comps;  // sorted by factor index, at most one per factor
};

struct RepExpr {
  std::vector<std::pair<Summand,int>> terms;  // summand -> multiplicity

  bool is_zero() const { return terms.empty(); }
  static RepExpr zero() { return RepExpr{}; }
};

// ---- highest weights ---------------------------------------------------------

// The root system a factor's weights live in, already reduced through the
// low-rank coincidences (SO_3 -> A_1, SO_5 -> C_2, SO_6 -> A_3); nullptr for
// torus-like factors and for SO_4, which splits and is handled separately.
inline const RootSystem* factor_system(const GroupFactor& f) {
  auto [fam, rk] = f.root_type();
  if (fam == '1' || fam == 'T') return nullptr;
  if (f.kind == GK::GL || f.kind == GK::SL || f.kind == GK::PGL)
    return &build_root_system('A', f.n - 1);
  if (f.kind == GK::Sp) return f.n == 2 ? &build_root_system('A', 1) : &build_root_system('C', f.n / 2);
  if (f.kind == GK::SO || f.kind == GK::Spin || f.kind == GK::O) {
    switch (f.n) {
      case 3: return &build_root_system('A', 1);
      case 4: return nullptr;
      case 5: return &build_root_system('C', 2);
      case 6: return &build_root_system('A', 3);
      default:
        return f.n % 2 ? &build_root_system('B', (f.n - 1) / 2)
                       : &build_root_system('D', f.n / 2);
    }
  }
  return &build_root_system(fam, rk);
}

// highest weight of a label in factor_system coordinates (before dualizing)
inline Weight base_weight(const GroupFactor& f, const RLabel& l) {
  const RootSystem* rs = factor_system(f);
  if (!rs) return {};
  Weight w(rs->rank, Rat(0));
  bool ortho = f.kind == GK::SO || f.kind == GK::Spin || f.kind == GK::O;
  switch (l.kind) {
    case LK::one: break;
    case LK::std:
      if (f.kind == GK::G) w[0] = Rat(1);                   // 7-dim fundamental
      else if (f.kind == GK::E && f.n == 7) w[6] = Rat(1);  // 56-dim
      else if (f.kind == GK::E && f.n == 6) w[0] = Rat(1);  // 27-dim
      else if (f.kind == GK::F) w[3] = Rat(1);              // 26-dim
      else if (ortho && f.n == 3) w[0] = Rat(2);            // SO_3: adjoint of SL_2
      else if (ortho && f.n == 5) w[1] = Rat(1);            // SO_5: second fundamental of Sp_4
      else if (ortho && f.n == 6) w[1] = Rat(1);            // SO_6: wedge^2 of SL_4
      else w[0] = Rat(1);
      break;
    case LK::wedge:
      if (l.k > rs->rank) throw std::invalid_argument("wedge degree exceeds rank");
      w[l.k - 1] = Rat(1);  // for Sp this is the fundamental (primitive) piece
      break;
    case LK::sym:
      w[0] = Rat(l.k);
      break;
    case LK::spin:
      if (!ortho || f.n % 2 == 0) throw std::invalid_argument("spin needs odd orthogonal factor");
      if (f.n == 3) w[0] = Rat(1);
      else if (f.n == 5) w[0] = Rat(1);
      else w[rs->rank - 1] = Rat(1);
      break;
    case LK::hspinp:
      if (!ortho || f.n % 2 == 1) throw std::invalid_argument("half-spin needs even orthogonal factor");
      if (f.n == 6) w[0] = Rat(1);
      else w[rs->rank - 1] = Rat(1);
      break;
    case LK::hspinm:
      if (!ortho || f.n % 2 == 1) throw std::invalid_argument("half-spin needs even orthogonal factor");
      if (f.n == 6) w[2] = Rat(1);
      else w[rs->rank - 2] = Rat(1);
      break;
    case LK::named:
      if ((int)l.named_wt.size() != rs->rank) throw std::invalid_argument("named weight rank mismatch");
      w = l.named_wt;
      break;
  }
  return w;
}

inline Weight label_weight(const GroupFactor& f, const RLabel& l) {
  const RootSystem* rs = factor_system(f);
  if (!rs) return {};
  Weight w = base_weight(f, l);
  if (l.dual) w = dual_weight(*rs, w);
  return w;
}

inline long long label_dim(const GroupFactor& f, const RLabel& l) {
  const RootSystem* rs = factor_system(f);
  if (!rs) {
    bool so4 = (f.kind == GK::SO || f.kind == GK::Spin || f.kind == GK::O) && f.n == 4;
    if (!so4) return 1;
    switch (l.kind) {
      case LK::one: return 1;
      case LK::std: return 4;
      case LK::hspinp:
      case LK::hspinm: return 2;
      default: throw std::invalid_argument("unsupported label on SO_4");
    }
  }
  return weyl_dimension(*rs, label_weight(f, l));
}

inline long long summand_dim(const Group& g, const Summand& s) {
  long long d = 1;
  for (auto& c : s.comps) d *= label_dim(g.factors.at(c.factor), c);
  return d;
}

inline long long dimension(const Group& g, const RepExpr& e) {
  long long d = 0;
  for (auto& [s, m] : e.terms) d += m * summand_dim(g, s);
  return d;
}

// <lambda, 2 rho^vee>: parity decides the Frobenius-Schur indicator of a
// self-dual irreducible (odd = symplectic, even = orthogonal).
inline long long two_rho_pairing(const RootSystem& rs, const Weight& w) {
  Rat s(0);
  for (const Root& a : rs.pos) {
    Root e = rs.coroot(a);
    for (int i = 0; i < rs.rank; ++i) s += w[i] * Rat(e[i]);
  }
  if (s.den != 1) throw std::logic_error("two_rho_pairing: non-integral");
  return s.num;
}

// ---- canonical form ----------------------------------------------------------

namespace detail {

inline std::string weight_str(const Weight& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].str();
  }
  return s + "]";
}

} // namespace detail

// one canonical component: factor root type + tag + dominant weight (+ charge)
struct CanonComp {
  char fam;
  int rank;
  int tag;
  std::string weight;
  std::string charge;  // empty when charges are dropped

  friend bool operator<(const CanonComp& a, const CanonComp& b) {
    return std::tie(a.fam, a.rank, a.tag, a.weight, a.charge) <
           std::tie(b.fam, b.rank, b.tag, b.weight, b.charge);
  }
  friend bool operator==(const CanonComp& a, const CanonComp& b) {
    return std::tie(a.fam, a.rank, a.tag, a.weight, a.charge) ==
           std::tie(b.fam, b.rank, b.tag, b.weight, b.charge);
  }
  std::string str() const {
    return std::string(1, fam) + std::to_string(rank) +
           (tag ? "#" + std::to_string(tag) : "") + weight +
           (charge.empty() ? "" : "@" + charge);
  }
};

// Canonical components of one label, in the factor's *canonical* type.
// SO_3-likes become A_1 (weights doubled), SO_5 -> C_2, SO_6 -> A_3, and
// SO_4 splits into two A_1 components.
inline std::vector<CanonComp> canon_components(const GroupFactor& f, const RLabel& l,
                                               bool with_charge) {
  std::vector<CanonComp> out;
  auto charge_str = [&]() { return with_charge && l.twist != Rat(0) ? l.twist.str() : std::string(); };
  auto [fam, rk] = f.root_type();
  bool ortho = f.kind == GK::SO || f.kind == GK::Spin || f.kind == GK::O;

  if (fam == '1') return out;  // finite factor: only the trivial character
  if (fam == 'T') {
    if (with_charge) {
      // character of a torus factor: record as rank-0 component with charge
      Rat q = l.twist;
      if (l.kind == LK::std) q += l.dual ? Rat(-1) : Rat(1);
      if (!q.is_zero()) out.push_back({'T', 0, f.tag, "[]", q.str()});
    }
    return out;
  }

  if (ortho && f.n == 4) {  // D_2 = A_1 x A_1; the two wings get tags tag and -(tag+1)
    auto a1w = [&](int m) {
      Weight w{Rat(m)};
      return detail::weight_str(w);
    };
    switch (l.kind) {
      case LK::one: break;
      case LK::std:
        out.push_back({'A', 1, f.tag, a1w(1), charge_str()});
        out.push_back({'A', 1, -(f.tag + 1), a1w(1), charge_str()});
        break;
      case LK::hspinp:
        out.push_back({'A', 1, f.tag, a1w(1), charge_str()});
        break;
      case LK::hspinm:
        out.push_back({'A', 1, -(f.tag + 1), a1w(1), charge_str()});
        break;
      default:
        throw std::invalid_argument("unsupported label on SO_4");
    }
    return out;
  }

  const RootSystem* rs = factor_system(f);
  if (!rs) return out;
  Weight w = label_weight(f, l);

  bool zero = true;
  for (auto& c : w) if (!c.is_zero()) zero = false;
  if (zero) {
    if (with_charge && l.twist != Rat(0)) out.push_back({'T', 0, f.tag, "[]", l.twist.str()});
    return out;
  }

  char cfam = rs->family;
  int crank = rs->rank;
  if (cfam == 'B' && crank == 2) cfam = 'C';
  out.push_back({cfam, crank, f.tag, detail::weight_str(w), charge_str()});
  return out;
}

struct CanonRep {
  std::vector<std::pair<std::vector<CanonComp>,int>> terms;  // sorted
  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto& [cs, m] : terms) {
      if (!s.empty()) s += "+";
      if (m > 1) s += std::to_string(m) + "*";
      if (cs.empty()) s += "1";
      for (size_t i = 0; i < cs.size(); ++i) {
        if (i) s += "*";
        s += cs[i].str();
      }
    }
    return s;
  }
};

// Canonicalization of a full expression.  `flips` applies the D-type diagram
// automorphism to the given factor indices (half-spin sign swap); the caller
// minimizing over flips and permutations of identical factors implements the
// outer-automorphism and factor-relabeling freedom of the tables.
inline CanonRep canon_rep(const Group& g, const RepExpr& e, bool with_charge,
                          const std::vector<int>& hspin_flip = {}) {
  CanonRep out;
  std::map<std::vector<CanonComp>, int> acc;
  for (auto& [s, m] : e.terms) {
    std::vector<CanonComp> cs;
    for (auto& l : s.comps) {
      RLabel lab = l;
      if (std::find(hspin_flip.begin(), hspin_flip.end(), l.factor) != hspin_flip.end()) {
        if (lab.kind == LK::hspinp) lab.kind = LK::hspinm;
        else if (lab.kind == LK::hspinm) lab.kind = LK::hspinp;
        else if (lab.kind == LK::named) {
          auto& f = g.factors.at(l.factor);
          const RootSystem* rs = factor_system(f);
          if (rs && rs->family == 'D')
            std::swap(lab.named_wt[rs->rank - 1], lab.named_wt[rs->rank - 2]);
        }
      }
      auto comps = canon_components(g.factors.at(l.factor), lab, with_charge);
      for (auto& c : comps) cs.push_back(c);
    }
    std::sort(cs.begin(), cs.end());
    acc[cs] += m;
  }
  for (auto& [cs, m] : acc)
    if (m != 0) out.terms.push_back({cs, m});
  return out;
}

// ---- structural operations ---------------------------------------------------

inline RepExpr canonicalize(const RepExpr& e) {
  std::map<std::string, std::pair<Summand,int>> acc;
  for (auto& [s, m] : e.terms) {
    Summand t = s;
    std::sort(t.comps.begin(), t.comps.end(), [](const RLabel& a, const RLabel& b) {
      return a.factor < b.factor;
    });
    // drop trivial components with no twist
    t.comps.erase(std::remove_if(t.comps.begin(), t.comps.end(), [](const RLabel& l) {
      return l.kind == LK::one && l.twist == Rat(0);
    }), t.comps.end());
    std::ostringstream key;
    for (auto& c : t.comps)
      key << c.factor << "|" << (int)c.kind << "|" << c.k << "|" << c.dual << "|"
          << c.twist.str() << "|" << detail::weight_str(c.named_wt) << ";";
    auto [it, fresh] = acc.try_emplace(key.str(), std::make_pair(t, 0));
    it->second.second += m;
  }
  RepExpr out;
  for (auto& [k, sm] : acc)
    if (sm.second != 0) out.terms.push_back(sm);
  return out;
}

inline RepExpr rep_sum(const RepExpr& a, const RepExpr& b) {
  RepExpr e = a;
  for (auto& t : b.terms) e.terms.push_back(t);
  return canonicalize(e);
}

inline Summand dual_summand(const Summand& s) {
  Summand d = s;
  for (auto& c : d.comps) {
    c.dual = !c.dual;
    c.twist = -c.twist;
  }
  return d;
}

inline RepExpr dualize(const RepExpr& e) {
  RepExpr d;
  for (auto& [s, m] : e.terms) d.terms.push_back({dual_summand(s), m});
  return canonicalize(d);
}

// tau (+) tau^vee
inline RepExpr t_of(const RepExpr& tau) { return rep_sum(tau, dualize(tau)); }

// Decides whether the expression carries a symplectic structure: summands
// pair off with their duals, and unpaired self-dual summands must have
// Frobenius-Schur indicator -1 (product over tensor components).
inline bool is_symplectic(const Group& g, const RepExpr& e) {
  auto canon_of = [&](const Summand& s) {
    RepExpr one;
    one.terms.push_back({s, 1});
    return canon_rep(g, one, true).str();
  };
  std::map<std::string, std::pair<Summand,int>> pool;
  for (auto& [s, m] : canonicalize(e).terms) {
    auto key = canon_of(s);
    auto [it, fresh] = pool.try_emplace(key, std::make_pair(s, 0));
    it->second.second += m;
  }
  for (auto& [key, sm] : pool) {
    if (sm.second == 0) continue;
    auto dkey = canon_of(dual_summand(sm.first));
    if (dkey == key) {
      // self-dual: copies pair off two by two; an odd leftover must carry an
      // intrinsic symplectic form (Frobenius-Schur indicator -1)
      if (sm.second % 2 == 0) continue;
      long long parity = 0;
      bool has_nontrivial = false;
      for (auto& c : sm.first.comps) {
        const GroupFactor& f = g.factors.at(c.factor);
        const RootSystem* rs = factor_system(f);
        if (!rs) {
          bool so4 = (f.kind == GK::SO || f.kind == GK::Spin || f.kind == GK::O) && f.n == 4;
          if (!so4) continue;
          if (c.kind == LK::hspinp || c.kind == LK::hspinm) { parity += 1; has_nontrivial = true; }
          if (c.kind == LK::std) { parity += 2; has_nontrivial = true; }
          continue;
        }
        Weight w = label_weight(f, c);
        bool zero = true;
        for (auto& x : w) if (!x.is_zero()) zero = false;
        if (zero) continue;
        has_nontrivial = true;
        parity += two_rho_pairing(*rs, w);
      }
      if (!has_nontrivial) return false;       // trivial summand: no symplectic form
      if (parity % 2 == 0) return false;       // orthogonal
      continue;
    }
    auto it = pool.find(dkey);
    if (it == pool.end() || it->second.second != sm.second) return false;
    sm.second = 0;
    it->second.second = 0;
  }
  return true;
}

// all multiplicities one, charges taken into account
inline bool is_multiplicity_free(const Group& g, const RepExpr& e) {
  auto c = canon_rep(g, e, true);
  for (auto& [cs, m] : c.terms)
    if (m > 1) return false;
  return true;
}

} // namespace hsq
