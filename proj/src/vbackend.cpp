#include "ohl/vbackend.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <sstream>

namespace ohl {

Semiring Semiring::field(std::int64_t p) {
  if (p < 2) throw Error(Errc::OutOfBounds, "characteristic must be at least 2");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error(Errc::OutOfBounds, "F_p needs a prime p, got " + std::to_string(p));
  return Semiring{Kind::prime_field, p};
}

std::string Semiring::name() const { return kind == Kind::boolean ? "bool" : "F_" + std::to_string(p); }

MatBackend::Mor MatBackend::compose(const Mor& a, const Mor& b) const {
  if (a.cols() != b.rows())
    throw Error(Errc::ShapeMismatch, "cannot compose " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                         " with " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  return reduce(a * b);
}

MatBackend::Mor MatBackend::tensor(const Mor& a, const Mor& b) const {
  Mor k = Eigen::kroneckerProduct(a, b);
  return reduce(std::move(k));
}

MatBackend::Mor MatBackend::braiding(Obj n, Obj m) const {
  Mor s = Mor::Zero(Eigen::Index(n * m), Eigen::Index(n * m));
  for (Obj i = 0; i < n; ++i)
    for (Obj j = 0; j < m; ++j) s(Eigen::Index(i * m + j), Eigen::Index(j * n + i)) = 1;
  return s;
}

bool MatBackend::eq(const Mor& a, const Mor& b) const {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

std::size_t MatBackend::hash(const Mor& a) const {
  std::size_t h = std::size_t(a.rows()) * 1000003u + std::size_t(a.cols());
  for (Eigen::Index i = 0; i < a.size(); ++i) h = h * 31u + std::size_t(a.data()[i]);
  return h;
}

MatBackend::Mor MatBackend::from_rows(Obj rows, Obj cols, const std::vector<std::int64_t>& data) const {
  if (data.size() != rows * cols) throw Error(Errc::ShapeMismatch, "matrix data length differs from rows*cols");
  Mor a = Mor::Zero(Eigen::Index(rows), Eigen::Index(cols));
  for (std::size_t k = 0; k < data.size(); ++k) a.data()[k] = data[k];
  return reduce(std::move(a));
}

MatBackend::Obj MatBackend::direct_sum(std::span<const Obj> objs) const {
  Obj n = 0;
  for (Obj d : objs) n += d;
  return n;
}

std::vector<MatBackend::Mor> MatBackend::injections(std::span<const Obj> objs) const {
  const Obj total = direct_sum(objs);
  std::vector<Mor> out;
  Obj off = 0;
  for (Obj d : objs) {
    Mor m = Mor::Zero(Eigen::Index(d), Eigen::Index(total));
    m.block(0, Eigen::Index(off), Eigen::Index(d), Eigen::Index(d)).setIdentity();
    out.push_back(std::move(m));
    off += d;
  }
  return out;
}

std::string MatBackend::show(const Mor& a) const {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (i) os << ";";
    for (Eigen::Index j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
  }
  os << "]";
  return os.str();
}

FinSetBackend::Mor FinSetBackend::compose(const Mor& a, const Mor& b) const {
  if (!(a.cod == b.dom)) throw Error(Errc::ShapeMismatch, "function codomain differs from next domain");
  return compose_fn(a, b);
}

std::size_t FinSetBackend::hash(const Mor& a) const {
  std::size_t h = a.dom.size() * 1000003u + a.cod.size();
  for (std::size_t v : a.table) h = h * 31u + v;
  return h;
}

FinSetBackend::Obj FinSetBackend::direct_sum(std::span<const Obj> objs) const {
  std::size_t n = 0;
  for (const auto& x : objs) n += x.size();
  return FinSet::atom(n);
}

std::vector<FinSetBackend::Mor> FinSetBackend::injections(std::span<const Obj> objs) const {
  FinSet total = direct_sum(objs);
  std::vector<Mor> out;
  std::size_t off = 0;
  for (const auto& x : objs) {
    std::vector<std::size_t> t(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) t[i] = off + i;
    out.emplace_back(x, total, std::move(t));
    off += x.size();
  }
  return out;
}

std::string FinSetBackend::show_obj(const Obj& x) const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < x.arity(); ++k) os << (k ? "x" : "") << x.shape()[k];
  os << "}";
  return os.str();
}

std::string FinSetBackend::show(const Mor& a) const {
  std::ostringstream os;
  os << show_obj(a.dom) << "->" << show_obj(a.cod) << "[";
  for (std::size_t i = 0; i < a.table.size(); ++i) os << (i ? " " : "") << a.table[i];
  os << "]";
  return os.str();
}

}  // namespace ohl
