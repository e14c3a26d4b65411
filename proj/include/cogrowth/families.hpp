#pragma once

#include <unordered_map>
#include <vector>

#include "cogrowth/engine.hpp"
#include "cogrowth/numeric.hpp"

namespace cogrowth {

/// Free semigroup or monoid on up to 26 letters a, b, c, ... Ids are k-ary
/// heap numbers (empty word 0, child(w, i) = w*k + i + 1), so no storage is
/// kept per element and interning is pure arithmetic.
class FreeEngine final : public SemigroupEngine {
public:
  FreeEngine(std::size_t rank, bool monoid, std::size_t cap);

  EngineKind kind() const override { return EngineKind::free_semigroup; }
  bool is_monoid() const override { return monoid_; }
  ElementId mul(ElementId s, ElementId t) override;
  std::string canonical(ElementId s) const override;
  std::size_t size() const override { return high_water_; }
  std::size_t cap() const override { return cap_; }
  std::optional<bool> right_indegree_bounded() const override { return true; }

  std::size_t rank() const { return rank_; }
  ElementId letter_id(std::size_t i) const { return static_cast<ElementId>(i) + 1; }

private:
  std::size_t rank_;
  bool monoid_;
  std::size_t cap_;
  std::size_t high_water_;  // max assigned id + 1
};

/// Free commutative semigroup or monoid; elements are exponent vectors and
/// canonical forms are sorted words like "aabbb".
class FreeCommutativeEngine final : public SemigroupEngine {
public:
  FreeCommutativeEngine(std::size_t rank, bool monoid, std::size_t cap);

  EngineKind kind() const override { return EngineKind::free_commutative; }
  bool is_monoid() const override { return monoid_; }
  ElementId mul(ElementId s, ElementId t) override;
  std::string canonical(ElementId s) const override;
  std::size_t size() const override { return exps_.size(); }
  std::size_t cap() const override { return cap_; }
  std::optional<bool> right_indegree_bounded() const override { return true; }

  ElementId intern_exponents(std::vector<std::uint32_t> e);

private:
  struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
      std::size_t h = v.size();
      for (std::uint32_t x : v) h = h * 1000003u + x + 0x9e3779b9u;
      return h;
    }
  };

  std::size_t rank_;
  bool monoid_;
  std::size_t cap_;
  std::vector<std::vector<std::uint32_t>> exps_;
  std::unordered_map<std::vector<std::uint32_t>, ElementId, VecHash> index_;
};

/// The group Z^d as a monoid engine; elements are exact integer tuples with
/// canonical form "(x1,...,xd)".
class IntegerLatticeEngine final : public SemigroupEngine {
public:
  IntegerLatticeEngine(std::size_t dim, std::size_t cap);

  EngineKind kind() const override { return EngineKind::integer_lattice; }
  bool is_monoid() const override { return true; }
  ElementId mul(ElementId s, ElementId t) override;
  std::string canonical(ElementId s) const override { return keys_.at(s); }
  std::size_t size() const override { return coords_.size(); }
  std::size_t cap() const override { return cap_; }
  std::optional<bool> right_indegree_bounded() const override { return true; }

  std::size_t dim() const { return dim_; }
  ElementId intern_point(const std::vector<Int>& p);
  const std::vector<Int>& point(ElementId s) const { return coords_.at(s); }

private:
  std::size_t dim_;
  std::size_t cap_;
  std::vector<std::vector<Int>> coords_;
  std::vector<std::string> keys_;  // canonical forms, doubling as index keys
  std::unordered_map<std::string, ElementId> index_;
};

/// A finite semigroup given by its full multiplication table. Rows use
/// 1-based element indices; associativity is verified exhaustively at
/// construction and the identity, when present, is detected. Elements
/// display as "e1".."em".
class TableEngine final : public SemigroupEngine {
public:
  TableEngine(std::vector<std::vector<std::size_t>> rows, std::size_t cap);

  EngineKind kind() const override { return EngineKind::finite_table; }
  bool is_monoid() const override { return identity_.has_value(); }
  ElementId mul(ElementId s, ElementId t) override;
  std::string canonical(ElementId s) const override;
  std::size_t size() const override { return id_to_elem_.size(); }
  std::size_t cap() const override { return cap_; }
  std::optional<bool> right_indegree_bounded() const override { return true; }
  const TableEngine* as_table() const override { return this; }

  std::size_t order() const { return order_; }
  /// 0-based product lookup straight from the table; no interning.
  std::size_t product_index(std::size_t i, std::size_t j) const {
    return table_[i * order_ + j];
  }
  std::optional<std::size_t> identity_index() const { return identity_; }
  ElementId intern_element(std::size_t i);

private:
  std::size_t order_;
  std::size_t cap_;
  std::vector<std::uint32_t> table_;
  std::optional<std::size_t> identity_;
  std::vector<std::int64_t> id_to_elem_;     // id -> element index, -1 for basepoint
  std::vector<ElementId> elem_to_id_;        // element index -> id or kNoId
};

struct Family {
  EnginePtr engine;
  GeneratorChoice choice;
};

Family make_free(std::size_t rank, bool monoid, std::size_t cap);
Family make_free_commutative(std::size_t rank, bool monoid, std::size_t cap);
Family make_bicyclic_family(std::size_t cap);

struct LatticeGenerator {
  std::string name;
  std::vector<Int> coords;
};

/// Generators default to +/- unit vector pairs named a, b, c, ... when
/// `gens` is empty. Zero vectors are rejected.
Family make_integer_lattice(std::size_t dim, std::vector<LatticeGenerator> gens,
                            std::size_t cap);

/// The default choice takes every element as a generator.
Family make_finite_table(std::vector<std::vector<std::size_t>> rows, std::size_t cap);

}  // namespace cogrowth
