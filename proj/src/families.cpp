#include "cogrowth/families.hpp"

#include <algorithm>
#include <limits>

#include "cogrowth/errors.hpp"
#include "cogrowth/rewriting.hpp"

namespace cogrowth {

namespace {

constexpr ElementId kNoId = std::numeric_limits<ElementId>::max();

void check_cap_value(std::size_t cap) {
  if (cap == 0) throw UsageError("element cap must be positive");
  if (cap >= kNoId) throw UsageError("element cap must fit in 32-bit ids");
}

std::string letter_name(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

GeneratorChoice letter_choice(std::size_t rank,
                              const std::vector<ElementId>& targets) {
  GeneratorChoice X;
  for (std::size_t i = 0; i < rank; ++i) {
    X.symbols.push_back(letter_name(i));
    X.targets.push_back(targets[i]);
    X.definitions.push_back({static_cast<GenIndex>(i)});
  }
  return X;
}

}  // namespace

FreeEngine::FreeEngine(std::size_t rank, bool monoid, std::size_t cap)
    : rank_(rank), monoid_(monoid), cap_(cap), high_water_(rank + 1) {
  if (rank_ < 1 || rank_ > 26)
    throw UsageError("free engine: rank must be between 1 and 26");
  check_cap_value(cap_);
  if (cap_ <= rank_) throw UsageError("free engine: cap too small for the letters");
}

ElementId FreeEngine::mul(ElementId s, ElementId t) {
  // Decode t into letters, least significant first (word length can reach the
  // cap for rank 1, so no fixed-size buffer).
  static thread_local std::vector<std::uint32_t> letters;
  letters.clear();
  for (std::uint64_t v = t; v != 0; v = (v - 1) / rank_)
    letters.push_back(static_cast<std::uint32_t>((v - 1) % rank_));
  std::size_t len = letters.size();
  std::uint64_t acc = s;
  while (len > 0) {
    acc = acc * rank_ + letters[--len] + 1;
    if (acc >= cap_)
      throw ResourceError("free engine: element cap of " + std::to_string(cap_) +
                          " exceeded");
  }
  high_water_ = std::max(high_water_, static_cast<std::size_t>(acc) + 1);
  return static_cast<ElementId>(acc);
}

std::string FreeEngine::canonical(ElementId s) const {
  if (s == 0) return "1";
  std::string out;
  for (std::uint64_t v = s; v != 0; v = (v - 1) / rank_)
    out.push_back(static_cast<char>('a' + (v - 1) % rank_));
  std::reverse(out.begin(), out.end());
  return out;
}

FreeCommutativeEngine::FreeCommutativeEngine(std::size_t rank, bool monoid,
                                             std::size_t cap)
    : rank_(rank), monoid_(monoid), cap_(cap) {
  if (rank_ < 1 || rank_ > 26)
    throw UsageError("free commutative engine: rank must be between 1 and 26");
  check_cap_value(cap_);
  intern_exponents(std::vector<std::uint32_t>(rank_, 0));
}

ElementId FreeCommutativeEngine::intern_exponents(std::vector<std::uint32_t> e) {
  auto it = index_.find(e);
  if (it != index_.end()) return it->second;
  if (exps_.size() >= cap_)
    throw ResourceError("free commutative engine: element cap of " +
                        std::to_string(cap_) + " exceeded");
  ElementId id = static_cast<ElementId>(exps_.size());
  index_.emplace(e, id);
  exps_.push_back(std::move(e));
  return id;
}

ElementId FreeCommutativeEngine::mul(ElementId s, ElementId t) {
  const auto& a = exps_.at(s);
  const auto& b = exps_.at(t);
  std::vector<std::uint32_t> sum(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(a[i]) + b[i];
    if (v > std::numeric_limits<std::uint32_t>::max())
      throw ResourceError("free commutative engine: exponent overflow");
    sum[i] = static_cast<std::uint32_t>(v);
  }
  return intern_exponents(std::move(sum));
}

std::string FreeCommutativeEngine::canonical(ElementId s) const {
  const auto& e = exps_.at(s);
  std::string out;
  for (std::size_t i = 0; i < rank_; ++i)
    out.append(e[i], static_cast<char>('a' + i));
  return out.empty() ? "1" : out;
}

IntegerLatticeEngine::IntegerLatticeEngine(std::size_t dim, std::size_t cap)
    : dim_(dim), cap_(cap) {
  if (dim_ < 1) throw UsageError("integer lattice: dimension must be positive");
  check_cap_value(cap_);
  intern_point(std::vector<Int>(dim_, 0));
}

ElementId IntegerLatticeEngine::intern_point(const std::vector<Int>& p) {
  if (p.size() != dim_) throw UsageError("integer lattice: wrong tuple size");
  std::string key = "(";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) key += ",";
    key += p[i].get_str();
  }
  key += ")";
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  if (coords_.size() >= cap_)
    throw ResourceError("integer lattice: element cap of " + std::to_string(cap_) +
                        " exceeded");
  ElementId id = static_cast<ElementId>(coords_.size());
  index_.emplace(key, id);
  coords_.push_back(p);
  keys_.push_back(std::move(key));
  return id;
}

ElementId IntegerLatticeEngine::mul(ElementId s, ElementId t) {
  const auto& a = coords_.at(s);
  const auto& b = coords_.at(t);
  std::vector<Int> sum(dim_);
  for (std::size_t i = 0; i < dim_; ++i) sum[i] = a[i] + b[i];
  return intern_point(sum);
}

TableEngine::TableEngine(std::vector<std::vector<std::size_t>> rows, std::size_t cap)
    : order_(rows.size()), cap_(cap) {
  if (order_ == 0) throw UsageError("finite table: order must be positive");
  if (order_ > 512) throw UsageError("finite table: order above 512 is not supported");
  check_cap_value(cap_);
  table_.resize(order_ * order_);
  for (std::size_t i = 0; i < order_; ++i) {
    if (rows[i].size() != order_)
      throw UsageError("finite table: row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(order_));
    for (std::size_t j = 0; j < order_; ++j) {
      std::size_t v = rows[i][j];
      if (v < 1 || v > order_)
        throw UsageError("finite table: entry at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") out of range");
      table_[i * order_ + j] = static_cast<std::uint32_t>(v - 1);
    }
  }
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) {
      const std::size_t ij = product_index(i, j);
      for (std::size_t k = 0; k < order_; ++k)
        if (product_index(ij, k) != product_index(i, product_index(j, k)))
          throw UsageError("finite table: not associative at (" + std::to_string(i + 1) +
                           "," + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                           ")");
    }
  for (std::size_t e = 0; e < order_; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < order_ && ok; ++x)
      ok = product_index(e, x) == x && product_index(x, e) == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  elem_to_id_.assign(order_, kNoId);
  if (identity_) {
    // Id 0 is the identity element itself.
    id_to_elem_.push_back(static_cast<std::int64_t>(*identity_));
    elem_to_id_[*identity_] = kIdentityId;
  } else {
    id_to_elem_.push_back(-1);  // virtual basepoint
  }
}

ElementId TableEngine::intern_element(std::size_t i) {
  if (i >= order_) throw UsageError("finite table: element index out of range");
  if (elem_to_id_[i] != kNoId) return elem_to_id_[i];
  if (id_to_elem_.size() >= cap_)
    throw ResourceError("finite table: element cap of " + std::to_string(cap_) +
                        " exceeded");
  ElementId id = static_cast<ElementId>(id_to_elem_.size());
  elem_to_id_[i] = id;
  id_to_elem_.push_back(static_cast<std::int64_t>(i));
  return id;
}

ElementId TableEngine::mul(ElementId s, ElementId t) {
  if (s == kIdentityId) return t;
  if (t == kIdentityId) return s;
  const std::size_t i = static_cast<std::size_t>(id_to_elem_.at(s));
  const std::size_t j = static_cast<std::size_t>(id_to_elem_.at(t));
  return intern_element(product_index(i, j));
}

std::string TableEngine::canonical(ElementId s) const {
  const std::int64_t e = id_to_elem_.at(s);
  if (e < 0) return "1";
  return "e" + std::to_string(e + 1);
}

Family make_free(std::size_t rank, bool monoid, std::size_t cap) {
  auto E = std::make_shared<FreeEngine>(rank, monoid, cap);
  std::vector<ElementId> targets;
  for (std::size_t i = 0; i < rank; ++i) targets.push_back(E->letter_id(i));
  return {E, letter_choice(rank, targets)};
}

Family make_free_commutative(std::size_t rank, bool monoid, std::size_t cap) {
  auto E = std::make_shared<FreeCommutativeEngine>(rank, monoid, cap);
  std::vector<ElementId> targets;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<std::uint32_t> unit(rank, 0);
    unit[i] = 1;
    targets.push_back(E->intern_exponents(std::move(unit)));
  }
  return {E, letter_choice(rank, targets)};
}

Family make_bicyclic_family(std::size_t cap) {
  auto E = make_bicyclic(cap);
  GeneratorChoice X;
  X.symbols = {"b", "c"};
  X.targets = {E->intern_word("b"), E->intern_word("c")};
  X.definitions = {{0}, {1}};
  return {E, X};
}

Family make_integer_lattice(std::size_t dim, std::vector<LatticeGenerator> gens,
                            std::size_t cap) {
  auto E = std::make_shared<IntegerLatticeEngine>(dim, cap);
  if (gens.empty()) {
    // Symmetric nearest-neighbour defaults: +e1, -e1, +e2, -e2, ...
    if (2 * dim > 26)
      throw UsageError("integer lattice: default generators need dimension <= 13");
    for (std::size_t i = 0; i < dim; ++i)
      for (int sign : {+1, -1}) {
        LatticeGenerator g;
        g.name = letter_name(gens.size());
        g.coords.assign(dim, 0);
        g.coords[i] = sign;
        gens.push_back(std::move(g));
      }
  }
  GeneratorChoice X;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const LatticeGenerator& g = gens[i];
    if (g.coords.size() != dim)
      throw UsageError("integer lattice: generator '" + g.name + "' has " +
                       std::to_string(g.coords.size()) + " coordinates, expected " +
                       std::to_string(dim));
    if (std::all_of(g.coords.begin(), g.coords.end(),
                    [](const Int& v) { return sgn(v) == 0; }))
      throw UsageError("integer lattice: generator '" + g.name + "' is the zero vector");
    X.symbols.push_back(g.name);
    X.targets.push_back(E->intern_point(g.coords));
    X.definitions.push_back({static_cast<GenIndex>(i)});
  }
  if (X.symbols.empty()) throw UsageError("integer lattice: no generators");
  return {E, X};
}

Family make_finite_table(std::vector<std::vector<std::size_t>> rows, std::size_t cap) {
  auto E = std::make_shared<TableEngine>(std::move(rows), cap);
  GeneratorChoice X;
  for (std::size_t i = 0; i < E->order(); ++i) {
    X.symbols.push_back("e" + std::to_string(i + 1));
    X.targets.push_back(E->intern_element(i));
    X.definitions.push_back({static_cast<GenIndex>(i)});
  }
  return {E, X};
}

}  // namespace cogrowth
