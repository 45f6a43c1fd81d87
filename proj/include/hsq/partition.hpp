// Partitions as nilpotent-orbit labels for the classical types.

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace hsq {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }

  void normalize() {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (int v : parts)
      if (v < 0) throw std::invalid_argument("negative partition part");
  }

  int total() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
  }
  bool empty() const { return parts.empty(); }

  // exponent form (p_1^{a_1},...), p_1 > p_2 > ...
  std::vector<std::pair<int,int>> exponents() const {
    std::vector<std::pair<int,int>> e;
    for (int v : parts) {
      if (!e.empty() && e.back().first == v) e.back().second++;
      else e.push_back({v, 1});
    }
    return e;
  }

  int mult(int p) const {
    int m = 0;
    for (int v : parts) m += (v == p);
    return m;
  }

  bool all_same_parity() const {  // "even" orbit in the grading sense
    for (int v : parts)
      if ((v & 1) != (parts[0] & 1)) return false;
    return true;
  }

  // sl2 h-eigenvalues on the defining space: each part p contributes
  // p-1, p-3, ..., 1-p.
  std::map<int,int> h_values() const {
    std::map<int,int> m;
    for (int p : parts)
      for (int v = p - 1; v >= 1 - p; v -= 2) m[v]++;
    return m;
  }

  // sp_2n: odd parts with even multiplicity; so_m: even parts with even multiplicity
  bool valid_for(char ambient) const {
    if (ambient == 'C') {
      for (auto [p, a] : exponents())
        if (p % 2 == 1 && a % 2 == 1) return false;
    } else if (ambient == 'B' || ambient == 'D') {
      for (auto [p, a] : exponents())
        if (p % 2 == 0 && a % 2 == 1) return false;
    }
    return true;
  }

  std::string str() const {
    if (parts.empty()) return "()";
    if (parts.size() == 1 && parts[0] == 1) return "(1)";
    std::string s = "(";
    auto e = exponents();
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e[i].first);
      if (e[i].second > 1) s += "^" + std::to_string(e[i].second);
    }
    s += ")";
    return s;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) { out.emplace_back(cur); return; }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

} // namespace hsq
