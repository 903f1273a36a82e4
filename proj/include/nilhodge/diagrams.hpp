#pragma once

// Partitions and signed Young diagrams: the combinatorial parameter space
// for nilpotent conjugacy classes of the classical groups, together with
// the closure order computed through iterated diagram reduction.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilhodge {

using Partition = std::vector<size_t>;  // weakly decreasing, positive parts

inline bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

inline size_t partition_size(const Partition& p) {
  size_t n = 0;
  for (size_t x : p) n += x;
  return n;
}

inline std::vector<Partition> partitions_of(size_t n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, size_t rest, size_t maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (size_t k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Dominance (closure) order on partitions of the same size.
inline bool dominance_leq(const Partition& a, const Partition& b) {
  if (partition_size(a) != partition_size(b)) return false;
  size_t sa = 0, sb = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

enum class BoxSign { Plus, Minus, Blank };

inline BoxSign flip(BoxSign s) {
  if (s == BoxSign::Plus) return BoxSign::Minus;
  if (s == BoxSign::Minus) return BoxSign::Plus;
  return BoxSign::Blank;
}

// One row: its length and the label of its first box.  Signs alternate
// along a row; a Blank leading label means the whole row is unlabeled.
struct SignedRow {
  size_t len = 0;
  BoxSign lead = BoxSign::Blank;

  friend auto operator<=>(const SignedRow&, const SignedRow&) = default;

  size_t plus_boxes() const {
    if (lead == BoxSign::Plus) return (len + 1) / 2;
    if (lead == BoxSign::Minus) return len / 2;
    return 0;
  }
  size_t minus_boxes() const {
    if (lead == BoxSign::Plus) return len / 2;
    if (lead == BoxSign::Minus) return (len + 1) / 2;
    return 0;
  }
  size_t blank_boxes() const { return lead == BoxSign::Blank ? len : 0; }
};

// Canonical row order: longer first; among equal lengths '+' rows, then
// '-' rows, then blank rows.
inline bool row_before(const SignedRow& a, const SignedRow& b) {
  if (a.len != b.len) return a.len > b.len;
  return static_cast<int>(a.lead) < static_cast<int>(b.lead);
}

struct SignedDiagram {
  std::vector<SignedRow> rows;
  int very_even_tag = 0;  // 0 = none; 1/2 = the two SO-orbits of a very even shape

  friend auto operator<=>(const SignedDiagram&, const SignedDiagram&) = default;

  void canonicalize() { std::sort(rows.begin(), rows.end(), row_before); }

  size_t boxes() const {
    size_t n = 0;
    for (const auto& r : rows) n += r.len;
    return n;
  }
  bool well_formed() const {
    if (rows.empty()) return false;
    for (const auto& r : rows)
      if (r.len == 0) return false;
    return std::is_sorted(rows.begin(), rows.end(), row_before);
  }
};

inline Partition shape_of(const SignedDiagram& d) {
  Partition p;
  for (const auto& r : d.rows) p.push_back(r.len);
  std::sort(p.rbegin(), p.rend());
  return p;
}

// Signature (s+, s-): signed boxes counted by their label, blank boxes
// contributing half to each side (their total count is always even).
struct DiagramSignature {
  size_t plus = 0, minus = 0;
  friend auto operator<=>(const DiagramSignature&, const DiagramSignature&) = default;
  bool leq(const DiagramSignature& o) const {
    return plus <= o.plus && minus <= o.minus;
  }
};

inline DiagramSignature diagram_signature(const SignedDiagram& d) {
  size_t bp = 0, bm = 0, b0 = 0;
  for (const auto& r : d.rows) {
    bp += r.plus_boxes();
    bm += r.minus_boxes();
    b0 += r.blank_boxes();
  }
  if (b0 % 2 != 0)
    throw std::invalid_argument("diagram_signature: odd number of blank boxes");
  return DiagramSignature{bp + b0 / 2, bm + b0 / 2};
}

// Reduction: delete the last box of every row (empty rows disappear).
inline SignedDiagram reduce(const SignedDiagram& d) {
  SignedDiagram r;
  for (const auto& row : d.rows)
    if (row.len > 1) r.rows.push_back(SignedRow{row.len - 1, row.lead});
  r.canonicalize();
  return r;
}

// Closure order for real classes: Y1 <= Y2 iff every iterated reduction
// of Y1 has componentwise-smaller signature than that of Y2.
inline bool dokovic_leq(const SignedDiagram& a, const SignedDiagram& b) {
  if (a.very_even_tag != b.very_even_tag &&
      a.very_even_tag != 0 && b.very_even_tag != 0 && shape_of(a) == shape_of(b))
    return false;
  SignedDiagram x = a, y = b;
  while (!x.rows.empty()) {
    if (!diagram_signature(x).leq(diagram_signature(y))) return false;
    x = reduce(x);
    y = reduce(y);
  }
  return true;
}

enum class GroupKind {
  SpC,   // sp(2m, C): unsigned, odd parts with even multiplicity
  OC,    // so(n, C), full orthogonal group: unsigned, even parts with even multiplicity
  SOC,   // so(n, C), SO-conjugacy: very even shapes split into two classes
  SpR,   // sp(2m, R): even rows signed, odd rows blank with even multiplicity
  Opq,   // so(p, q): odd rows signed, even rows blank with even multiplicity
};

struct GroupSpec {
  GroupKind kind;
  size_t p = 0, q = 0;  // SpC/SpR: p = m; OC/SOC: p = n; Opq: (p, q)

  size_t space_dim() const {
    switch (kind) {
      case GroupKind::SpC:
      case GroupKind::SpR: return 2 * p;
      case GroupKind::OC:
      case GroupKind::SOC: return p;
      case GroupKind::Opq: return p + q;
    }
    throw std::logic_error("GroupSpec: bad kind");
  }
  bool is_complex() const { return kind == GroupKind::SpC || kind == GroupKind::OC || kind == GroupKind::SOC; }
};

inline std::map<size_t, size_t> multiplicities(const Partition& p) {
  std::map<size_t, size_t> m;
  for (size_t x : p) ++m[x];
  return m;
}

inline bool very_even(const Partition& p) {
  for (size_t x : p)
    if (x % 2 != 0) return false;
  return true;
}

inline bool admissible_shape(const Partition& p, const GroupSpec& g) {
  if (!is_partition(p) || partition_size(p) != g.space_dim()) return false;
  for (auto [len, mult] : multiplicities(p)) {
    switch (g.kind) {
      case GroupKind::SpC:
      case GroupKind::SpR:
        if (len % 2 == 1 && mult % 2 != 0) return false;
        break;
      case GroupKind::OC:
      case GroupKind::SOC:
      case GroupKind::Opq:
        if (len % 2 == 0 && mult % 2 != 0) return false;
        break;
    }
  }
  return true;
}

inline bool admissible(const SignedDiagram& d, const GroupSpec& g) {
  if (!admissible_shape(shape_of(d), g)) return false;
  std::map<size_t, size_t> blank_mult;
  for (const auto& r : d.rows) {
    bool want_signed = false;
    switch (g.kind) {
      case GroupKind::SpC:
      case GroupKind::OC:
      case GroupKind::SOC:
        want_signed = false;  // complex classes carry no labels
        if (r.lead != BoxSign::Blank) return false;
        continue;
      case GroupKind::SpR: want_signed = (r.len % 2 == 0); break;
      case GroupKind::Opq: want_signed = (r.len % 2 == 1); break;
    }
    if (want_signed) {
      if (r.lead == BoxSign::Blank) return false;
    } else {
      if (r.lead != BoxSign::Blank) return false;
      ++blank_mult[r.len];
    }
  }
  for (auto [len, mult] : blank_mult)
    if (mult % 2 != 0) return false;
  if (g.kind == GroupKind::Opq &&
      diagram_signature(d) != DiagramSignature{g.p, g.q})
    return false;
  if (d.very_even_tag != 0 &&
      !(g.kind == GroupKind::SOC && very_even(shape_of(d))))
    return false;
  return true;
}

// Closure order dispatching on the group: complex classes use dominance,
// real classes the signature criterion.
inline bool closure_leq(const SignedDiagram& a, const SignedDiagram& b,
                        const GroupSpec& g) {
  if (g.is_complex()) {
    Partition pa = shape_of(a), pb = shape_of(b);
    if (g.kind == GroupKind::SOC && pa == pb && a.very_even_tag != b.very_even_tag)
      return false;
    return dominance_leq(pa, pb);
  }
  return dokovic_leq(a, b);
}

// All admissible diagrams for the group, canonically ordered.
inline std::vector<SignedDiagram> enumerate_admissible(const GroupSpec& g) {
  std::vector<SignedDiagram> out;
  for (const auto& shape : partitions_of(g.space_dim())) {
    if (!admissible_shape(shape, g)) continue;
    if (g.is_complex()) {
      SignedDiagram d;
      for (size_t len : shape) d.rows.push_back(SignedRow{len, BoxSign::Blank});
      d.canonicalize();
      if (g.kind == GroupKind::SOC && very_even(shape)) {
        d.very_even_tag = 1;
        out.push_back(d);
        d.very_even_tag = 2;
        out.push_back(d);
      } else {
        out.push_back(d);
      }
      continue;
    }
    // real form: distribute leading signs over the rows that carry them
    std::vector<std::pair<size_t, size_t>> signed_groups;  // (len, mult)
    std::vector<SignedRow> fixed;
    bool ok = true;
    for (auto [len, mult] : multiplicities(shape)) {
      bool want_signed = g.kind == GroupKind::SpR ? (len % 2 == 0) : (len % 2 == 1);
      if (want_signed) {
        signed_groups.emplace_back(len, mult);
      } else {
        if (mult % 2 != 0) { ok = false; break; }
        for (size_t i = 0; i < mult; ++i) fixed.push_back(SignedRow{len, BoxSign::Blank});
      }
    }
    if (!ok) continue;
    std::vector<SignedDiagram> partial{SignedDiagram{fixed, 0}};
    for (auto [len, mult] : signed_groups) {
      std::vector<SignedDiagram> next;
      for (size_t plus = 0; plus <= mult; ++plus)
        for (const auto& base : partial) {
          SignedDiagram d = base;
          for (size_t i = 0; i < mult; ++i)
            d.rows.push_back(SignedRow{len, i < plus ? BoxSign::Plus : BoxSign::Minus});
          next.push_back(std::move(d));
        }
      partial = std::move(next);
    }
    for (auto& d : partial) {
      d.canonicalize();
      if (admissible(d, g)) out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- text format: rows as "3+ 2 2 1-"; very even tags as suffix ".I"/".II"

inline std::string to_text(const SignedDiagram& d) {
  SignedDiagram c = d;
  c.canonicalize();
  std::string s;
  for (size_t i = 0; i < c.rows.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c.rows[i].len);
    if (c.rows[i].lead == BoxSign::Plus) s += '+';
    if (c.rows[i].lead == BoxSign::Minus) s += '-';
  }
  if (c.very_even_tag == 1) s += " .I";
  if (c.very_even_tag == 2) s += " .II";
  return s;
}

inline SignedDiagram parse_diagram(const std::string& text) {
  SignedDiagram d;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == ".I") { d.very_even_tag = 1; continue; }
    if (tok == ".II") { d.very_even_tag = 2; continue; }
    SignedRow r;
    size_t pos = 0;
    try {
      r.len = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_diagram: bad row '" + tok + "'");
    }
    if (pos + 1 == tok.size() && tok[pos] == '+') r.lead = BoxSign::Plus;
    else if (pos + 1 == tok.size() && tok[pos] == '-') r.lead = BoxSign::Minus;
    else if (pos != tok.size())
      throw std::invalid_argument("parse_diagram: bad row '" + tok + "'");
    if (r.len == 0) throw std::invalid_argument("parse_diagram: zero-length row");
    d.rows.push_back(r);
  }
  if (d.rows.empty()) throw std::invalid_argument("parse_diagram: no rows");
  d.canonicalize();
  return d;
}

// ---- Hasse diagram (transitive reduction) of a finite poset

template <class T, class Leq>
std::vector<std::pair<size_t, size_t>> hasse_edges(const std::vector<T>& items,
                                                   Leq leq) {
  std::vector<std::pair<size_t, size_t>> edges;  // (upper, lower): covers
  size_t n = items.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j || !leq(items[j], items[i]) || leq(items[i], items[j])) continue;
      bool cover = true;
      for (size_t k = 0; k < n && cover; ++k) {
        if (k == i || k == j) continue;
        if (leq(items[j], items[k]) && leq(items[k], items[i]) &&
            !(leq(items[k], items[j])) && !(leq(items[i], items[k])))
          cover = false;
      }
      if (cover) edges.emplace_back(i, j);
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Deterministic DOT rendering; edges point from a class to the classes in
// the boundary of its closure.
inline std::string dot_graph(const std::vector<std::string>& labels,
                             const std::vector<std::pair<size_t, size_t>>& edges,
                             const std::string& title = "closure") {
  std::string s = "digraph \"" + title + "\" {\n";
  s += "  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t i = 0; i < labels.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"" + labels[i] + "\"];\n";
  for (auto [u, v] : edges)
    s += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace nilhodge
