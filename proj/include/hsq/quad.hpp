// Quadruples (G, H, iota, rho_H) and their canonical equality keys.
//
// Two quadruples are the same table entry when they agree up to isogeny,
// central tori, relabeling of identical H-factors, and (type D) the outer
// automorphism.  The canonical key serializes the root-type data minimized
// over those symmetries.  H-factors of a nontrivial classical orbit carry the
// partition part they centralize as a tag, which keeps, say, the two SL_2's
// of an (3^2,1^2)-centralizer apart.

#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hsq/group.hpp"
#include "hsq/orbit.hpp"
#include "hsq/parse.hpp"
#include "hsq/rep.hpp"

namespace hsq {

struct Quad {
  Group G, H;
  OrbitLabel iota;
  RepExpr rho;

  std::string str() const {
    return "(" + G.str() + "," + H.str() + "," + iota.str() + "," + print_rep(H, rho) + ")";
  }
};

namespace detail {

// can an H-factor of this shape sit inside a centralizer factor of that shape?
inline bool embeddable(const GroupFactor& h, const GroupFactor& c) {
  auto [hf, hr] = h.root_type();
  auto [cf, cr] = c.root_type();
  if (hf == '1' || hf == 'T') return true;
  if (hf == cf && hr == cr) return true;
  auto ortho = [](GK k) { return k == GK::SO || k == GK::Spin || k == GK::O; };
  auto linear = [](GK k) { return k == GK::GL || k == GK::SL || k == GK::PGL; };
  if (h.kind == GK::Sp && linear(c.kind) && h.n <= c.n) return true;
  if (linear(h.kind) && linear(c.kind) && h.n <= c.n) return true;
  if (ortho(h.kind) && ortho(c.kind) && h.n <= c.n) return true;
  if (h.kind == GK::Sp && c.kind == GK::Sp && h.n <= c.n) return true;
  if (h.kind == GK::G && ortho(c.kind) && c.n >= 7) return true;    // G2 in SO_7
  if (h.kind == GK::Sp && h.n == 2 && (ortho(c.kind) && c.n >= 3)) return true;
  if (linear(h.kind) && h.n == 2 && ((ortho(c.kind) && c.n >= 3) || c.kind == GK::Sp)) return true;
  return false;
}

} // namespace detail

// Attach centralizer tags to the H-factors of a classical-orbit quadruple:
// H-factors are matched, in the order written, to the centralizer factors of
// iota in descending part order.  Trivial orbits and exceptional labels leave
// tags at zero.
inline void assign_orbit_tags(Quad& q) {
  if (q.iota.kind != OrbitLabel::ClassicalK) return;
  bool trivial = true;
  for (int p : q.iota.part.parts) trivial &= (p == 1);
  if (trivial) return;
  if (q.G.factors.size() != 1) return;
  auto kind = q.G.factors[0].kind;
  Ambient amb = kind == GK::Sp ? Ambient::sp
              : (kind == GK::SO || kind == GK::Spin) ? Ambient::so
              : Ambient::gl;
  Group cent = centralizer_of_partition(amb, q.iota.part);
  size_t ci = 0;
  for (auto& hf : q.H.factors) {
    auto [fam, rk] = hf.root_type();
    if (fam == 'T' || fam == '1') continue;
    while (ci < cent.factors.size() && !detail::embeddable(hf, cent.factors[ci])) ++ci;
    if (ci >= cent.factors.size())
      throw std::invalid_argument("H does not embed in the centralizer of " + q.iota.str() +
                                  ": " + q.H.str());
    hf.tag = cent.factors[ci].tag;
    ++ci;
  }
}

// ---- canonical key -------------------------------------------------------

namespace detail {

struct CanonFactorRef {
  char fam;
  int rank;
  int tag;
  int orig;  // index into H.factors
  friend bool operator<(const CanonFactorRef& a, const CanonFactorRef& b) {
    return std::tie(a.fam, a.rank, a.tag, a.orig) < std::tie(b.fam, b.rank, b.tag, b.orig);
  }
};

inline std::string serialize_key(const Group& G, const OrbitLabel& iota, const Group& H,
                                 const std::vector<int>& order,
                                 const std::vector<int>& flips, const RepExpr& rho) {
  std::ostringstream os;
  for (auto& f : canonical_factors(G, false)) os << (char)f[0] << f[1] << ".";
  os << "|" << iota.str() << "|";
  // H factors in canonical order
  std::vector<CanonFactorRef> refs;
  for (int idx : order) {
    auto& f = H.factors[idx];
    auto [fam, rk] = f.root_type();
    if (fam == '1' || fam == 'T') continue;
    if (fam == 'B' && rk == 2) fam = 'C';
    if ((f.kind == GK::SO || f.kind == GK::Spin || f.kind == GK::O) && f.n == 4) {
      os << "A1#" << f.tag << ".A1#" << f.tag << ".";
      continue;
    }
    os << fam << rk << "#" << f.tag << ".";
  }
  os << "|";
  // rho with factors renamed to canonical slots
  Group g2 = H;
  std::vector<int> slot(H.factors.size(), 0);
  int next = 1;
  for (int idx : order) slot[idx] = next++;
  for (size_t i = 0; i < g2.factors.size(); ++i) g2.factors[i].tag = slot[i] * 64 + g2.factors[i].tag;
  RepExpr r2;
  for (auto& [s, m] : rho.terms) {
    Summand s2 = s;
    r2.terms.push_back({s2, m});
  }
  os << canon_rep(g2, r2, false, flips).str();
  return os.str();
}

} // namespace detail

// canonical key string for table equality
inline std::string canonical_key(const Quad& q0) {
  Quad q = q0;
  assign_orbit_tags(q);
  // candidate orderings of H factors: identical (fam,rank,tag) blocks permute
  std::vector<detail::CanonFactorRef> refs;
  for (int i = 0; i < (int)q.H.factors.size(); ++i) {
    auto& f = q.H.factors[i];
    auto [fam, rk] = f.root_type();
    if (fam == '1' || fam == 'T') continue;
    if (fam == 'B' && rk == 2) fam = 'C';
    refs.push_back({fam, rk, f.tag, i});
  }
  std::sort(refs.begin(), refs.end());
  // block structure
  std::vector<std::pair<int,int>> blocks;  // [begin, end)
  for (int i = 0; i < (int)refs.size();) {
    int j = i;
    while (j < (int)refs.size() && refs[j].fam == refs[i].fam && refs[j].rank == refs[i].rank &&
           refs[j].tag == refs[i].tag)
      ++j;
    blocks.push_back({i, j});
    i = j;
  }
  // D-type factors eligible for half-spin flips (including SO_4 wings)
  std::vector<int> dfactors;
  for (int i = 0; i < (int)q.H.factors.size(); ++i) {
    auto& f = q.H.factors[i];
    if ((f.kind == GK::SO || f.kind == GK::Spin || f.kind == GK::O) && f.n >= 4 && f.n % 2 == 0)
      dfactors.push_back(i);
  }

  std::string best;
  std::vector<detail::CanonFactorRef> work = refs;
  // enumerate permutations block by block (blocks are tiny)
  std::vector<std::vector<std::vector<int>>> blockperms;
  for (auto [b, e] : blocks) {
    std::vector<int> base;
    for (int i = b; i < e; ++i) base.push_back(refs[i].orig);
    std::sort(base.begin(), base.end());
    std::vector<std::vector<int>> perms;
    do perms.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    blockperms.push_back(perms);
  }
  std::vector<size_t> pick(blocks.size(), 0);
  while (true) {
    std::vector<int> order;
    for (size_t bi = 0; bi < blocks.size(); ++bi)
      for (int idx : blockperms[bi][pick[bi]]) order.push_back(idx);
    for (unsigned fmask = 0; fmask < (1u << dfactors.size()); ++fmask) {
      std::vector<int> flips;
      for (size_t d = 0; d < dfactors.size(); ++d)
        if (fmask & (1u << d)) flips.push_back(dfactors[d]);
      std::string key = detail::serialize_key(q.G, q.iota, q.H, order, flips, q.rho);
      if (best.empty() || key < best) best = key;
    }
    // advance
    size_t bi = 0;
    while (bi < pick.size()) {
      if (++pick[bi] < blockperms[bi].size()) break;
      pick[bi] = 0;
      ++bi;
    }
    if (bi == pick.size()) break;
    if (pick.empty()) break;
  }
  if (blocks.empty()) {
    std::string key = detail::serialize_key(q.G, q.iota, q.H, {}, {}, q.rho);
    if (best.empty() || key < best) best = key;
  }
  return best;
}

} // namespace hsq
