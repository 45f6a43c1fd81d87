// Knowledge bases transcribed from the source tables: summary tables with
// duals and evidence, classification tables with derived columns, spherical
// pairs, the coisotropic catalog, exceptional orbit data, restriction rules,
// reductive-dual pairs with Whittaker annotations, and assorted flags.
//
// Files are line-oriented UTF-8, tab-separated, one entry per line, '#' for
// comments, with a schema version header on line 1.  Parametrized families
// are stored symbolically (rank variables n,m,k,a,b plus constraints) and
// instantiated over a rank window on demand.

#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hsq/quad.hpp"

namespace hsq {

struct KbError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- raw TSV ------------------------------------------------------------

struct TsvFile {
  std::string name;
  std::string version;
  std::vector<std::pair<int, std::vector<std::string>>> rows;  // line no -> fields
};

inline TsvFile load_tsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw KbError("cannot open " + path.string());
  TsvFile f;
  f.name = path.filename().string();
  std::string line;
  int lineno = 0;
  bool sawVersion = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!sawVersion && line.find("hsq-kb") != std::string::npos) {
        f.version = line;
        sawVersion = true;
      }
      continue;
    }
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
      if (c == '\t') {
        fields.push_back(cur);
        cur.clear();
      } else cur += c;
    }
    fields.push_back(cur);
    f.rows.push_back({lineno, fields});
  }
  if (!sawVersion)
    throw KbError(path.string() + ": missing schema version header");
  return f;
}

// ---- symbolic rows --------------------------------------------------------

struct TableRowS {
  std::string table;
  int row = 0;
  std::string delta, ev1, ev2, dual, constraints;
};

struct DetailRowS {
  std::string table;
  int row = 0;
  std::string delta, L, u, hprime, restr, constraints, flags;
};

struct SphericalPairS {       // H' and flags for H inside L
  std::string L, H, embed, hprime, flags, note;
};

struct CoisotropicS {         // admissible rho for a group shape
  std::string H, rho, flags, note;  // flags: af (anomaly-free), nc (stab not connected)
};

struct RestrictionRuleS {     // one label branching rule
  std::string from, to, embed, label, result, note;
};

struct OrbitDataS {           // exceptional orbit: Levi label backed by nodes
  std::string ambient, label, nodes, lsemi, gi, u, flags, note;
};

struct OrbitListS {           // plain Bala-Carter label inventory
  std::string ambient, label, lsemi, gi, spherical;
};

struct ReductiveDualS {
  std::string L, H, rho;            // the reductive side
  std::string hhat, iotahat, rhohat;  // dual-side data inside L-hat
  std::string ev, wann, constraints, note;
};

// classification verdicts for gl odd/even decomposition shapes
struct NilShapeS {
  std::string family, odd_class, even_class, levi_spherical, coisotropic, note;
};

struct KB {
  std::filesystem::path dir;
  std::vector<TableRowS> tables;
  std::vector<DetailRowS> details;
  std::vector<SphericalPairS> sphericals;
  std::vector<CoisotropicS> coisotropics;
  std::vector<RestrictionRuleS> restrictions;
  std::vector<OrbitDataS> orbit_data;
  std::vector<OrbitListS> orbit_lists;
  std::vector<ReductiveDualS> reductive_duals;
  std::vector<NilShapeS> nil_shapes;
};

inline void require_fields(const TsvFile& f, const std::pair<int, std::vector<std::string>>& row,
                           size_t n) {
  if (row.second.size() < n)
    throw KbError(f.name + ":" + std::to_string(row.first) + ": expected " + std::to_string(n) +
                  " fields, got " + std::to_string(row.second.size()));
}

inline KB load_kb(const std::filesystem::path& dir) {
  KB kb;
  kb.dir = dir;
  auto get = [&](const std::vector<std::string>& v, size_t i) {
    return i < v.size() ? v[i] : std::string();
  };

  for (const char* t : {"b2c2", "g2", "f4", "e6", "e7", "e8", "a", "b", "c", "d"}) {
    auto f = load_tsv(dir / "tables" / (std::string(t) + ".tsv"));
    for (auto& r : f.rows) {
      require_fields(f, r, 5);
      TableRowS row;
      row.table = t;
      row.row = std::stoi(r.second[0]);
      row.delta = r.second[1];
      row.ev1 = r.second[2];
      row.ev2 = r.second[3];
      row.dual = r.second[4];
      row.constraints = get(r.second, 5);
      kb.tables.push_back(row);
    }
  }
  for (const char* t : {"b2c2", "g2", "a2n", "a2n1", "e8"}) {
    auto f = load_tsv(dir / "tables" / (std::string(t) + "_detail.tsv"));
    for (auto& r : f.rows) {
      require_fields(f, r, 6);
      DetailRowS row;
      row.table = t;
      row.row = std::stoi(r.second[0]);
      row.delta = r.second[1];
      row.L = r.second[2];
      row.u = r.second[3];
      row.hprime = r.second[4];
      row.restr = r.second[5];
      row.constraints = get(r.second, 6);
      row.flags = get(r.second, 7);
      kb.details.push_back(row);
    }
  }
  {
    auto f = load_tsv(dir / "spherical_pairs.tsv");
    for (auto& r : f.rows) {
      require_fields(f, r, 4);
      kb.sphericals.push_back({r.second[0], r.second[1], r.second[2], r.second[3],
                               get(r.second, 4), get(r.second, 5)});
    }
  }
  {
    auto f = load_tsv(dir / "coisotropic.tsv");
    for (auto& r : f.rows) {
      require_fields(f, r, 2);
      kb.coisotropics.push_back({r.second[0], r.second[1], get(r.second, 2), get(r.second, 3)});
    }
  }
  {
    auto f = load_tsv(dir / "restriction_rules.tsv");
    for (auto& r : f.rows) {
      require_fields(f, r, 5);
      kb.restrictions.push_back({r.second[0], r.second[1], r.second[2], r.second[3], r.second[4],
                                 get(r.second, 5)});
    }
  }
  {
    auto f = load_tsv(dir / "orbit_data.tsv");
    for (auto& r : f.rows) {
      require_fields(f, r, 6);
      kb.orbit_data.push_back({r.second[0], r.second[1], r.second[2], r.second[3], r.second[4],
                               r.second[5], get(r.second, 6), get(r.second, 7)});
    }
  }
  {
    auto f = load_tsv(dir / "orbit_lists.tsv");
    for (auto& r : f.rows) {
      require_fields(f, r, 2);
      kb.orbit_lists.push_back({r.second[0], r.second[1], get(r.second, 2), get(r.second, 3),
                                get(r.second, 4)});
    }
  }
  {
    auto f = load_tsv(dir / "reductive_duals.tsv");
    for (auto& r : f.rows) {
      require_fields(f, r, 6);
      kb.reductive_duals.push_back({r.second[0], r.second[1], r.second[2], r.second[3],
                                    r.second[4], r.second[5], get(r.second, 6), get(r.second, 7),
                                    get(r.second, 8), get(r.second, 9)});
    }
  }
  {
    auto f = load_tsv(dir / "nil_shapes.tsv");
    for (auto& r : f.rows) {
      require_fields(f, r, 5);
      kb.nil_shapes.push_back({r.second[0], r.second[1], r.second[2], r.second[3], r.second[4],
                               get(r.second, 5)});
    }
  }
  return kb;
}

// ---- instantiation ---------------------------------------------------------

// thrown by instantiation when a substitution makes a row degenerate
struct InstInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Quad make_quad(Parser::QuadrupleText t) {
  Quad q;
  q.G = t.G;
  q.H = t.H;
  q.iota = t.iota;
  q.rho = t.rho;
  return q;
}

// validity of a concrete quadruple: partition totals and type constraints
inline bool quad_valid(const Quad& q) {
  if (q.G.factors.empty()) return false;
  if (q.iota.kind == OrbitLabel::ClassicalK) {
    if (q.G.factors.size() != 1) return false;
    auto& f = q.G.factors[0];
    long long size = f.n;
    if (q.iota.part.total() != size) return false;
    char amb = f.kind == GK::Sp ? 'C'
             : (f.kind == GK::SO || f.kind == GK::Spin) ? (f.n % 2 ? 'B' : 'D')
             : 'A';
    if (!q.iota.part.valid_for(amb)) return false;
  }
  return true;
}

struct InstRow {
  const TableRowS* src = nullptr;
  Env env;
  Quad delta, dual;
  std::string ev1, ev2;
};

// window: per-family cap on the defining size of the ambient group
struct RankWindow {
  int lo = 1, hi = 8;
  long long size_cap(GK kind) const {
    switch (kind) {
      case GK::GL:
      case GK::SL: return hi;
      case GK::Sp: return 2 * hi;
      case GK::SO:
      case GK::Spin: return 2 * hi + 1;
      default: return hi;
    }
  }
};

inline bool within_window(const Quad& q, const RankWindow& w) {
  if (q.G.factors.size() != 1) return true;
  auto& f = q.G.factors[0];
  if (f.kind == GK::E || f.kind == GK::F || f.kind == GK::G) return true;
  return f.n >= 1 && f.n <= w.size_cap(f.kind);
}

// try one substitution; nullopt when the instance is degenerate
inline std::optional<InstRow> instantiate_row(const TableRowS& r, const Env& env,
                                              const RankWindow& w) {
  try {
    Parser pc(r.constraints, &env);
    if (!r.constraints.empty() && !pc.eval_constraints()) return std::nullopt;
    Parser pd(r.delta, &env);
    Quad delta = make_quad(pd.parse_quadruple());
    pd.expect_end();
    Parser ph(r.dual, &env);
    Quad dual = make_quad(ph.parse_quadruple());
    ph.expect_end();
    if (!quad_valid(delta) || !quad_valid(dual)) return std::nullopt;
    if (!within_window(delta, w) || !within_window(dual, w)) return std::nullopt;
    InstRow out;
    out.src = &r;
    out.env = env;
    out.delta = delta;
    out.dual = dual;
    out.ev1 = r.ev1;
    out.ev2 = r.ev2;
    return out;
  } catch (const ParseError&) {
    return std::nullopt;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// all instantiations of one symbolic row within the window
inline std::vector<InstRow> instantiate(const TableRowS& r, const RankWindow& w) {
  std::set<char> vars;
  for (const std::string* s : {&r.delta, &r.dual, &r.constraints}) {
    Parser p(*s);
    for (char c : p.free_vars()) vars.insert(c);
  }
  std::vector<char> vs(vars.begin(), vars.end());
  long long cap = 2 * w.hi + 2;
  std::vector<InstRow> out;
  std::vector<long long> vals(vs.size(), 0);
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == vs.size()) {
      Env env;
      for (size_t j = 0; j < vs.size(); ++j) env[vs[j]] = vals[j];
      if (auto inst = instantiate_row(r, env, w)) out.push_back(std::move(*inst));
      return;
    }
    for (long long v = 0; v <= cap; ++v) {
      vals[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

} // namespace hsq
