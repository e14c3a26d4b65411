#include "cogrowth/structure.hpp"

#include <algorithm>

#include "cogrowth/errors.hpp"
#include "cogrowth/families.hpp"

namespace cogrowth {

namespace {

/// Membership bitmap of the principal two-sided ideal S^1 s S^1: closure of
/// {s} under left and right multiplication by every element.
std::vector<bool> principal_ideal(const TableEngine& T, std::size_t s) {
  const std::size_t m = T.order();
  std::vector<bool> in(m, false);
  std::vector<std::size_t> work{s};
  in[s] = true;
  while (!work.empty()) {
    const std::size_t u = work.back();
    work.pop_back();
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t v : {T.product_index(a, u), T.product_index(u, a)}) {
        if (!in[v]) {
          in[v] = true;
          work.push_back(v);
        }
      }
    }
  }
  return in;
}

}  // namespace

FiniteStructureReport finite_structure(const SemigroupEngine& E) {
  const TableEngine* T = E.as_table();
  if (!T)
    throw DomainError("finite_structure requires a finite_table engine, got " +
                      to_string(E.kind()));
  const std::size_t m = T->order();

  FiniteStructureReport rep;
  rep.order = m;

  // below[s][t]: s lies in the ideal of t, i.e. s <=_J t.
  std::vector<std::vector<bool>> below(m);
  for (std::size_t t = 0; t < m; ++t) {
    const std::vector<bool> ideal = principal_ideal(*T, t);
    for (std::size_t s = 0; s < m; ++s) {
      if (below[s].empty()) below[s].assign(m, false);
      below[s][t] = ideal[s];
    }
  }

  // J-classes by mutual domination, in order of smallest member.
  rep.class_of.assign(m, static_cast<std::size_t>(-1));
  for (std::size_t s = 0; s < m; ++s) {
    if (rep.class_of[s] != static_cast<std::size_t>(-1)) continue;
    const std::size_t c = rep.j_classes.size();
    rep.j_classes.emplace_back();
    for (std::size_t t = s; t < m; ++t) {
      if (rep.class_of[t] == static_cast<std::size_t>(-1) && below[s][t] &&
          below[t][s]) {
        rep.class_of[t] = c;
        rep.j_classes[c].push_back(t);
      }
    }
  }
  const std::size_t nc = rep.j_classes.size();
  rep.j_leq.assign(nc, std::vector<bool>(nc, false));
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = 0; b < nc; ++b)
      rep.j_leq[a][b] = below[rep.j_classes[a][0]][rep.j_classes[b][0]];

  // The kernel is the class below every class; a finite semigroup has
  // exactly one (products of two minimal classes would lie below both).
  std::size_t kernel = nc;
  for (std::size_t a = 0; a < nc; ++a) {
    bool minimum = true;
    for (std::size_t b = 0; b < nc && minimum; ++b) minimum = rep.j_leq[a][b];
    if (minimum) {
      kernel = a;
      break;
    }
  }
  if (kernel == nc)
    throw Error("finite_structure: no minimum J-class found; table is not associative?");
  rep.minimal_ideal = rep.j_classes[kernel];
  rep.is_simple = nc == 1;

  // Left reversibility: principal right ideals sS^1 pairwise intersect.
  std::vector<std::vector<bool>> right_ideal(m, std::vector<bool>(m, false));
  for (std::size_t s = 0; s < m; ++s) {
    right_ideal[s][s] = true;
    for (std::size_t a = 0; a < m; ++a) right_ideal[s][T->product_index(s, a)] = true;
  }
  rep.left_reversible = true;
  for (std::size_t s = 0; s < m && rep.left_reversible; ++s)
    for (std::size_t t = s + 1; t < m && rep.left_reversible; ++t) {
      bool meet = false;
      for (std::size_t v = 0; v < m && !meet; ++v)
        meet = right_ideal[s][v] && right_ideal[t][v];
      rep.left_reversible = meet;
    }

  // Klawe: whenever sx = sy there is t with xt = yt.
  std::vector<std::vector<bool>> equalizable(m, std::vector<bool>(m, false));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t t = 0; t < m; ++t)
        if (T->product_index(x, t) == T->product_index(y, t)) {
          equalizable[x][y] = true;
          break;
        }
  rep.klawe = true;
  for (std::size_t s = 0; s < m && rep.klawe; ++s)
    for (std::size_t x = 0; x < m && rep.klawe; ++x)
      for (std::size_t y = 0; y < m && rep.klawe; ++y)
        if (T->product_index(s, x) == T->product_index(s, y) && !equalizable[x][y])
          rep.klawe = false;

  // Right cancellativity: columns are injective.
  rep.right_cancellative = true;
  for (std::size_t x = 0; x < m && rep.right_cancellative; ++x)
    for (std::size_t t1 = 0; t1 < m && rep.right_cancellative; ++t1)
      for (std::size_t t2 = t1 + 1; t2 < m; ++t2)
        if (T->product_index(t1, x) == T->product_index(t2, x)) {
          rep.right_cancellative = false;
          rep.right_cancellation_witness = {x, t1, t2};
          break;
        }
  return rep;
}

}  // namespace cogrowth
