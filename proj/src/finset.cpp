#include "ohl/finset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ohl {

const char* errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::CodMismatch: return "CodMismatch";
    case Errc::FeetMismatch: return "FeetMismatch";
    case Errc::FamMismatch: return "FamMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ComponentShapeError: return "ComponentShapeError";
    case Errc::TriangleViolation: return "TriangleViolation";
    case Errc::FactorizationViolation: return "FactorizationViolation";
    case Errc::BoundaryMismatch: return "BoundaryMismatch";
    case Errc::NotMonic: return "NotMonic";
    case Errc::UnsupportedBackend: return "UnsupportedBackend";
    case Errc::NotFirm: return "NotFirm";
    case Errc::NotBimodule: return "NotBimodule";
    case Errc::NotAGroupoid: return "NotAGroupoid";
    case Errc::NotOverX2: return "NotOverX2";
    case Errc::OutOfBounds: return "OutOfBounds";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

FinSet::FinSet(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  size_ = 1;
  bool zero = false;
  for (std::size_t n : shape_) zero = zero || n == 0;
  if (zero) {
    size_ = 0;
    return;
  }
  for (std::size_t n : shape_) {
    if (size_ > kMax / n) {
      size_ = kMax;
      overflow_ = true;
      return;
    }
    size_ *= n;
  }
}

std::size_t FinSet::encode(std::span<const std::size_t> t) const {
  if (t.size() != shape_.size()) throw Error(Errc::ShapeMismatch, "tuple arity differs from shape");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] >= shape_[k]) throw Error(Errc::ShapeMismatch, "tuple entry out of range");
    idx = idx * shape_[k] + t[k];
  }
  return idx;
}

std::size_t FinSet::encode(std::span<const Atom> t) const {
  if (t.size() != shape_.size()) throw Error(Errc::ShapeMismatch, "tuple arity differs from shape");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < t.size(); ++k) idx = idx * shape_[k] + t[k];
  return idx;
}

std::vector<std::size_t> FinSet::decode(std::size_t index) const {
  std::vector<std::size_t> t(shape_.size());
  for (std::size_t k = shape_.size(); k-- > 0;) {
    t[k] = index % shape_[k];
    index /= shape_[k];
  }
  return t;
}

void FinSet::decode_into(std::size_t index, Atom* out) const {
  for (std::size_t k = shape_.size(); k-- > 0;) {
    out[k] = static_cast<Atom>(index % shape_[k]);
    index /= shape_[k];
  }
}

FinSet product(std::span<const FinSet> factors) {
  std::vector<std::size_t> shape;
  for (const auto& f : factors) shape.insert(shape.end(), f.shape().begin(), f.shape().end());
  return FinSet(std::move(shape));
}

FinSet product(const FinSet& a, const FinSet& b) {
  const FinSet fs[2] = {a, b};
  return product(fs);
}

FinFn::FinFn(FinSet d, FinSet c, std::vector<std::size_t> t)
    : dom(std::move(d)), cod(std::move(c)), table(std::move(t)) {
  if (table.size() != dom.size()) throw Error(Errc::ShapeMismatch, "table length differs from domain size");
  for (std::size_t v : table)
    if (v >= cod.size()) throw Error(Errc::ShapeMismatch, "table entry outside codomain");
}

bool FinFn::injective() const {
  std::vector<char> seen(cod.size(), 0);
  for (std::size_t v : table) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool FinFn::surjective() const {
  std::vector<char> seen(cod.size(), 0);
  for (std::size_t v : table) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

FinFn identity_fn(const FinSet& x) {
  std::vector<std::size_t> t(x.size());
  std::iota(t.begin(), t.end(), std::size_t{0});
  return FinFn(x, x, std::move(t));
}

FinFn compose_fn(const FinFn& f, const FinFn& g) {
  if (f.cod.size() != g.dom.size()) throw Error(Errc::CodMismatch, "codomain of f is not the domain of g");
  std::vector<std::size_t> t(f.table.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
  return FinFn(f.dom, g.cod, std::move(t));
}

FinFn product_fn(const FinFn& f, const FinFn& g) {
  const std::size_t m = g.dom.size(), n = g.cod.size();
  std::vector<std::size_t> t(f.dom.size() * m);
  for (std::size_t i = 0; i < f.dom.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = f.table[i] * n + g.table[j];
  return FinFn(product(f.dom, g.dom), product(f.cod, g.cod), std::move(t));
}

std::optional<FinFn> inverse_fn(const FinFn& f) {
  if (f.dom.size() != f.cod.size() || !f.bijective()) return std::nullopt;
  std::vector<std::size_t> t(f.cod.size());
  for (std::size_t i = 0; i < f.table.size(); ++i) t[f.table[i]] = i;
  return FinFn(f.cod, f.dom, std::move(t));
}

FinFn reindex(const FinSet& in, const std::vector<std::size_t>& sources) {
  std::vector<std::size_t> shape;
  for (std::size_t s : sources) {
    if (s >= in.arity()) throw Error(Errc::ShapeMismatch, "reindex source out of range");
    shape.push_back(in.shape()[s]);
  }
  FinSet out(std::move(shape));
  std::vector<std::size_t> t(in.size());
  std::vector<std::size_t> tuple, img(sources.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    tuple = in.decode(i);
    for (std::size_t k = 0; k < sources.size(); ++k) img[k] = tuple[sources[k]];
    t[i] = out.encode(std::span<const std::size_t>(img));
  }
  return FinFn(in, out, std::move(t));
}

FinFn diagonal(const FinSet& x) {
  std::vector<std::size_t> src;
  for (int rep = 0; rep < 2; ++rep)
    for (std::size_t k = 0; k < x.arity(); ++k) src.push_back(k);
  return reindex(x, src);
}

FinFn bang(const FinSet& x) { return FinFn(x, FinSet(), std::vector<std::size_t>(x.size(), 0)); }

FinFn swap_fn(const FinSet& a, const FinSet& b) {
  std::vector<std::size_t> src;
  for (std::size_t k = 0; k < b.arity(); ++k) src.push_back(a.arity() + k);
  for (std::size_t k = 0; k < a.arity(); ++k) src.push_back(k);
  return reindex(product(a, b), src);
}

FinFn constant_fn(const FinSet& x, const FinSet& y, std::size_t value) {
  return FinFn(x, y, std::vector<std::size_t>(x.size(), value));
}

SubsetApex::SubsetApex(const FinSet& ambient) : ambient_(ambient) {
  if (ambient.overflows()) throw Error(Errc::ShapeMismatch, "full apex too large");
  auto data = std::make_shared<std::vector<Atom>>(ambient.size() * ambient.arity());
  for (std::size_t i = 0; i < ambient.size(); ++i) ambient.decode_into(i, data->data() + i * ambient.arity());
  count_ = ambient.size();
  data_ = std::move(data);
}

SubsetApex::SubsetApex(FinSet ambient, std::vector<Atom> tuples) : ambient_(std::move(ambient)) {
  const std::size_t a = ambient_.arity();
  if (a == 0) {
    if (!tuples.empty()) throw Error(Errc::ShapeMismatch, "unit apex carries no atoms");
    // Arity zero: the only possible member is the empty tuple; use ambient as the full set.
    count_ = 1;
  } else {
    if (tuples.size() % a != 0) throw Error(Errc::ShapeMismatch, "tuple data not a multiple of arity");
    count_ = tuples.size() / a;
  }
  data_ = std::make_shared<const std::vector<Atom>>(std::move(tuples));
}

SubsetApex::SubsetApex(FinSet ambient, std::vector<Atom> tuples, std::size_t count)
    : ambient_(std::move(ambient)), count_(count) {
  const std::size_t a = ambient_.arity();
  if (a == 0 ? (count > 1 || !tuples.empty()) : tuples.size() != count * a)
    throw Error(Errc::ShapeMismatch, "member count inconsistent with tuple data");
  data_ = std::make_shared<const std::vector<Atom>>(std::move(tuples));
}

std::vector<std::size_t> SubsetApex::decoded(std::size_t i) const {
  auto t = tuple(i);
  return {t.begin(), t.end()};
}

std::optional<std::size_t> SubsetApex::find(std::span<const Atom> t) const {
  const std::size_t a = arity();
  if (t.size() != a) return std::nullopt;
  if (a == 0) return count_ == 1 ? std::optional<std::size_t>(0) : std::nullopt;
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto m = tuple(mid);
    if (std::lexicographical_compare(m.begin(), m.end(), t.begin(), t.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count_ && std::equal(t.begin(), t.end(), tuple(lo).begin())) return lo;
  return std::nullopt;
}

std::vector<std::size_t> SubsetApex::members() const {
  std::vector<std::size_t> out(count_);
  for (std::size_t i = 0; i < count_; ++i) out[i] = ambient_.encode(tuple(i));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> matching_pairs(std::span<const std::size_t> g,
                                                                std::span<const std::size_t> m,
                                                                std::size_t cod_size) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (cod_size <= 4 * (g.size() + m.size()) + 1024) {
    // Counting sort of m by value.
    std::vector<std::size_t> start(cod_size + 1, 0);
    for (std::size_t v : m) ++start[v + 1];
    for (std::size_t y = 0; y < cod_size; ++y) start[y + 1] += start[y];
    std::vector<std::size_t> order(m.size());
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (std::size_t j = 0; j < m.size(); ++j) order[fill[m[j]]++] = j;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t k = start[g[i]]; k < start[g[i] + 1]; ++k) out.emplace_back(i, order[k]);
    return out;
  }
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m[a] < m[b]; });
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto lo = std::lower_bound(order.begin(), order.end(), g[i], [&](std::size_t j, std::size_t v) { return m[j] < v; });
    for (; lo != order.end() && m[*lo] == g[i]; ++lo) out.emplace_back(i, *lo);
  }
  return out;
}

Pullback pullback(const FinFn& g, const FinFn& m) {
  if (!(g.cod == m.cod)) throw Error(Errc::CodMismatch, "pullback legs have different codomains");
  auto pairs = matching_pairs(g.table, m.table, g.cod.size());
  FinSet amb = product(g.dom, m.dom);
  std::vector<Atom> data(pairs.size() * amb.arity());
  std::vector<std::size_t> t1, t2;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    Atom* out = data.data() + k * amb.arity();
    g.dom.decode_into(pairs[k].first, out);
    m.dom.decode_into(pairs[k].second, out + g.dom.arity());
    t1.push_back(pairs[k].first);
    t2.push_back(pairs[k].second);
  }
  SubsetApex apex(amb, std::move(data), pairs.size());
  FinSet p = apex.as_set();
  return {apex, FinFn(p, g.dom, std::move(t1)), FinFn(p, m.dom, std::move(t2))};
}

}  // namespace ohl
