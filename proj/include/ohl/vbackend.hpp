#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ohl/finset.hpp"

namespace ohl {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using IntMatrix = DenseMatrix<std::int64_t>;

// Finite commutative semiring used for matrix entries: F_p or the Booleans.
struct Semiring {
  enum class Kind { prime_field, boolean };
  Kind kind = Kind::prime_field;
  std::int64_t p = 2;

  static Semiring field(std::int64_t p);
  static Semiring boolean() { return Semiring{Kind::boolean, 2}; }

  std::int64_t reduce(std::int64_t x) const {
    if (kind == Kind::boolean) return x != 0 ? 1 : 0;
    x %= p;
    return x < 0 ? x + p : x;
  }
  std::string name() const;
  friend bool operator==(const Semiring&, const Semiring&) = default;
};

// Matrices over a finite semiring. A morphism n -> m is an n×m matrix acting
// on row vectors, so composition "a then b" is the product a·b.
class MatBackend {
 public:
  using Obj = std::size_t;
  using Mor = IntMatrix;

  explicit MatBackend(Semiring s = Semiring::field(2)) : sr_(s) {}
  const Semiring& semiring() const { return sr_; }

  Obj unit_obj() const { return 1; }
  Obj tensor_obj(Obj a, Obj b) const { return a * b; }
  bool obj_eq(Obj a, Obj b) const { return a == b; }

  Mor id(Obj n) const { return Mor::Identity(Eigen::Index(n), Eigen::Index(n)); }
  Obj dom(const Mor& a) const { return static_cast<Obj>(a.rows()); }
  Obj cod(const Mor& a) const { return static_cast<Obj>(a.cols()); }
  Mor compose(const Mor& a, const Mor& b) const;
  Mor tensor(const Mor& a, const Mor& b) const;
  Mor braiding(Obj n, Obj m) const;
  bool eq(const Mor& a, const Mor& b) const;
  std::size_t hash(const Mor& a) const;
  bool is_id(const Mor& a) const { return a.rows() == a.cols() && eq(a, id(dom(a))); }

  Mor reduce(Mor a) const {
    return a.unaryExpr([this](std::int64_t x) { return sr_.reduce(x); });
  }
  Mor from_rows(Obj rows, Obj cols, const std::vector<std::int64_t>& data) const;

  Obj direct_sum(std::span<const Obj> objs) const;
  std::vector<Mor> injections(std::span<const Obj> objs) const;

  std::string show(const Mor& a) const;
  std::string show_obj(Obj n) const { return std::to_string(n); }
  std::string name() const { return "mat(" + sr_.name() + ")"; }

 private:
  Semiring sr_;
};

// Finite sets and functions, cartesian product as tensor.
class FinSetBackend {
 public:
  using Obj = FinSet;
  using Mor = FinFn;

  Obj unit_obj() const { return FinSet(); }
  Obj tensor_obj(const Obj& a, const Obj& b) const { return product(a, b); }
  bool obj_eq(const Obj& a, const Obj& b) const { return a == b; }

  Mor id(const Obj& x) const { return identity_fn(x); }
  const Obj& dom(const Mor& f) const { return f.dom; }
  const Obj& cod(const Mor& f) const { return f.cod; }
  Mor compose(const Mor& a, const Mor& b) const;
  Mor tensor(const Mor& a, const Mor& b) const { return product_fn(a, b); }
  Mor braiding(const Obj& a, const Obj& b) const { return swap_fn(a, b); }
  bool eq(const Mor& a, const Mor& b) const { return a == b; }
  std::size_t hash(const Mor& a) const;
  bool is_id(const Mor& a) const { return a.dom == a.cod && a == identity_fn(a.dom); }

  Obj direct_sum(std::span<const Obj> objs) const;
  std::vector<Mor> injections(std::span<const Obj> objs) const;

  std::string show(const Mor& a) const;
  std::string show_obj(const Obj& x) const;
  std::string name() const { return "finset"; }
};

struct Unit {
  friend bool operator==(Unit, Unit) { return true; }
};

// One object, one morphism; Span|V over it is plain Span.
class TrivialBackend {
 public:
  using Obj = Unit;
  using Mor = Unit;

  Obj unit_obj() const { return {}; }
  Obj tensor_obj(Obj, Obj) const { return {}; }
  bool obj_eq(Obj, Obj) const { return true; }
  Mor id(Obj) const { return {}; }
  Obj dom(Mor) const { return {}; }
  Obj cod(Mor) const { return {}; }
  Mor compose(Mor, Mor) const { return {}; }
  Mor tensor(Mor, Mor) const { return {}; }
  Mor braiding(Obj, Obj) const { return {}; }
  bool eq(Mor, Mor) const { return true; }
  std::size_t hash(Mor) const { return 0; }
  bool is_id(Mor) const { return true; }
  std::string show(Mor) const { return "*"; }
  std::string show_obj(Obj) const { return "*"; }
  std::string name() const { return "trivial"; }
};

template <class V>
concept HasDirectSum = requires(const V& v, std::span<const typename V::Obj> objs) {
  v.direct_sum(objs);
  v.injections(objs);
};

template <class V>
struct KanExtension {
  std::vector<typename V::Obj> objs;         // indexed by Y
  std::vector<typename V::Mor> injections;   // indexed by S: A_s -> Lan(A)(g s)
};

// Left Kan extension of an S-indexed family along g: S -> Y, computed as the
// direct sum over each fiber.
template <class V>
KanExtension<V> left_kan_along_function(const V& v, const FinFn& g, const std::vector<typename V::Obj>& a) {
  if constexpr (!HasDirectSum<V>) {
    throw Error(Errc::UnsupportedBackend, "backend has no direct sums");
  } else {
    if (a.size() != g.dom.size()) throw Error(Errc::ShapeMismatch, "family length differs from |S|");
    KanExtension<V> out;
    std::vector<std::vector<std::size_t>> fibers(g.cod.size());
    for (std::size_t s = 0; s < g.dom.size(); ++s) fibers[g(s)].push_back(s);
    out.injections.resize(g.dom.size(), v.id(v.unit_obj()));
    for (const auto& fib : fibers) {
      std::vector<typename V::Obj> parts;
      for (std::size_t s : fib) parts.push_back(a[s]);
      out.objs.push_back(v.direct_sum(parts));
      auto inj = v.injections(parts);
      for (std::size_t k = 0; k < fib.size(); ++k) out.injections[fib[k]] = inj[k];
    }
    return out;
  }
}

}  // namespace ohl
