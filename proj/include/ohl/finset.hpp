#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ohl/error.hpp"

namespace ohl {

using Atom = std::uint32_t;

// A finite set presented as a flat tuple shape. Elements are encoded
// row-major (mixed radix), so the last atom varies fastest.
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::vector<std::size_t> shape);

  static FinSet atom(std::size_t n) { return FinSet({n}); }
  static FinSet unit() { return FinSet(); }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t arity() const { return shape_.size(); }
  // Saturates at SIZE_MAX for shapes whose product does not fit.
  std::size_t size() const { return size_; }
  bool overflows() const { return overflow_; }

  std::size_t encode(std::span<const std::size_t> tuple) const;
  std::size_t encode(std::span<const Atom> tuple) const;
  std::vector<std::size_t> decode(std::size_t index) const;
  void decode_into(std::size_t index, Atom* out) const;

  friend bool operator==(const FinSet& a, const FinSet& b) { return a.shape_ == b.shape_; }

 private:
  std::vector<std::size_t> shape_;
  std::size_t size_ = 1;
  bool overflow_ = false;
};

FinSet product(std::span<const FinSet> factors);
FinSet product(const FinSet& a, const FinSet& b);

struct FinFn {
  FinSet dom;
  FinSet cod;
  std::vector<std::size_t> table;

  FinFn() = default;
  FinFn(FinSet d, FinSet c, std::vector<std::size_t> t);

  std::size_t operator()(std::size_t x) const { return table[x]; }
  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }

  friend bool operator==(const FinFn& a, const FinFn& b) {
    return a.dom == b.dom && a.cod == b.cod && a.table == b.table;
  }
};

FinFn identity_fn(const FinSet& x);
FinFn compose_fn(const FinFn& f, const FinFn& g);  // g after f
FinFn product_fn(const FinFn& f, const FinFn& g);
std::optional<FinFn> inverse_fn(const FinFn& f);

// Function between tuple shapes that copies atoms: output atom k is input
// atom sources[k]. Diagonals, projections, swaps and 1×Δ×1 are all of this form.
FinFn reindex(const FinSet& in, const std::vector<std::size_t>& sources);
FinFn diagonal(const FinSet& x);                       // x -> x × x
FinFn bang(const FinSet& x);                           // x -> 1
FinFn swap_fn(const FinSet& a, const FinSet& b);       // a × b -> b × a
FinFn constant_fn(const FinSet& x, const FinSet& y, std::size_t value);

// Subset of an ambient tuple shape, members kept as sorted atom tuples.
class SubsetApex {
 public:
  SubsetApex() : SubsetApex(FinSet()) {}
  // The full ambient set.
  explicit SubsetApex(const FinSet& ambient);
  SubsetApex(FinSet ambient, std::vector<Atom> tuples);  // tuples must be sorted and distinct
  // Explicit member count; needed for arity zero, where the empty tuple may or may not be a member.
  SubsetApex(FinSet ambient, std::vector<Atom> tuples, std::size_t count);

  const FinSet& ambient() const { return ambient_; }
  std::size_t arity() const { return ambient_.arity(); }
  std::size_t size() const { return count_; }
  std::span<const Atom> tuple(std::size_t i) const {
    return {data_->data() + i * arity(), arity()};
  }
  std::vector<std::size_t> decoded(std::size_t i) const;
  std::optional<std::size_t> find(std::span<const Atom> t) const;
  // Ambient flat indices; only meaningful when the ambient size fits.
  std::vector<std::size_t> members() const;
  FinSet as_set() const { return FinSet::atom(count_); }
  const std::vector<Atom>& raw() const { return *data_; }
  bool same_storage(const SubsetApex& o) const { return data_ == o.data_; }

  friend bool operator==(const SubsetApex& a, const SubsetApex& b) {
    return a.ambient_ == b.ambient_ && (a.data_ == b.data_ || *a.data_ == *b.data_);
  }

 private:
  FinSet ambient_;
  std::shared_ptr<const std::vector<Atom>> data_;
  std::size_t count_ = 0;
};

// All pairs (i, j) with g(i) == m(j), i-major then j ascending.
std::vector<std::pair<std::size_t, std::size_t>> matching_pairs(
    std::span<const std::size_t> g, std::span<const std::size_t> m, std::size_t cod_size);

struct Pullback {
  SubsetApex apex;
  FinFn p1;
  FinFn p2;
};

Pullback pullback(const FinFn& g, const FinFn& m);

}  // namespace ohl
