#include "ohl/span.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ohl {

Span make_span(FinSet left, SubsetApex apex, FinSet right, std::vector<std::size_t> f,
               std::vector<std::size_t> g) {
  FinSet s = apex.as_set();
  FinFn ff(s, left, std::move(f));
  FinFn gg(s, right, std::move(g));
  return Span{std::move(left), std::move(right), std::move(apex), std::move(ff), std::move(gg), false};
}

Span make_span(FinSet left, std::size_t n, FinSet right, std::vector<std::size_t> f, std::vector<std::size_t> g) {
  return make_span(std::move(left), SubsetApex(FinSet::atom(n)), std::move(right), std::move(f), std::move(g));
}

Span identity_span(const FinSet& x) {
  Span s{x, x, SubsetApex(x), identity_fn(x), identity_fn(x), true};
  s.f.dom = s.apex.as_set();
  s.g.dom = s.apex.as_set();
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> composite_pairs(const Span& a, const Span& b) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (a.identity) {
    for (std::size_t q = 0; q < b.size(); ++q) out.emplace_back(b.f(q), q);
    return out;
  }
  if (b.identity) {
    for (std::size_t s = 0; s < a.size(); ++s) out.emplace_back(s, a.g(s));
    return out;
  }
  return matching_pairs(a.g.table, b.f.table, a.right.size());
}

Span compose_spans(const Span& a, const Span& b) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  return compose_spans(a, b, pairs);
}

Span compose_spans(const Span& a, const Span& b, std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (!(a.right == b.left)) throw Error(Errc::FeetMismatch, "right foot of first span is not the left foot of second");
  pairs = composite_pairs(a, b);
  if (a.identity) return b;
  if (b.identity) return a;
  const std::size_t aa = a.apex.arity(), ba = b.apex.arity();
  std::vector<std::size_t> shape = a.apex.ambient().shape();
  shape.insert(shape.end(), b.apex.ambient().shape().begin(), b.apex.ambient().shape().end());
  std::vector<Atom> data(pairs.size() * (aa + ba));
  std::vector<std::size_t> f(pairs.size()), g(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [s, q] = pairs[k];
    auto ts = a.apex.tuple(s);
    auto tq = b.apex.tuple(q);
    std::copy(ts.begin(), ts.end(), data.begin() + k * (aa + ba));
    std::copy(tq.begin(), tq.end(), data.begin() + k * (aa + ba) + aa);
    f[k] = a.f(s);
    g[k] = b.g(q);
  }
  SubsetApex apex(FinSet(std::move(shape)), std::move(data), pairs.size());
  return make_span(a.left, std::move(apex), b.right, std::move(f), std::move(g));
}

Span tensor_spans(const Span& a, const Span& b) {
  const std::size_t aa = a.apex.arity(), ba = b.apex.arity();
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::size_t> shape = a.apex.ambient().shape();
  shape.insert(shape.end(), b.apex.ambient().shape().begin(), b.apex.ambient().shape().end());
  std::vector<Atom> data(n * m * (aa + ba));
  std::vector<std::size_t> f(n * m), g(n * m);
  const std::size_t bl = b.left.size(), br = b.right.size();
  for (std::size_t s = 0; s < n; ++s) {
    auto ts = a.apex.tuple(s);
    for (std::size_t t = 0; t < m; ++t) {
      const std::size_t k = s * m + t;
      auto tt = b.apex.tuple(t);
      std::copy(ts.begin(), ts.end(), data.begin() + k * (aa + ba));
      std::copy(tt.begin(), tt.end(), data.begin() + k * (aa + ba) + aa);
      f[k] = a.f(s) * bl + b.f(t);
      g[k] = a.g(s) * br + b.g(t);
    }
  }
  SubsetApex apex(FinSet(std::move(shape)), std::move(data), n * m);
  Span out = make_span(product(a.left, b.left), std::move(apex), product(a.right, b.right), std::move(f), std::move(g));
  out.identity = a.identity && b.identity;
  return out;
}

Span braiding_span(const FinSet& x, const FinSet& y) {
  FinSet xy = product(x, y);
  FinFn sw = swap_fn(x, y);
  Span s = make_span(xy, SubsetApex(xy), sw.cod, identity_fn(xy).table, sw.table);
  return s;
}

Span reverse_span(const Span& a) {
  return Span{a.right, a.left, a.apex, a.g, a.f, a.identity};
}

Span from_function(const FinFn& h, Direction d) {
  SubsetApex apex(h.dom);
  std::vector<std::size_t> id(h.dom.size());
  std::iota(id.begin(), id.end(), std::size_t{0});
  if (d == Direction::co) return make_span(h.dom, std::move(apex), h.cod, std::move(id), h.table);
  return make_span(h.cod, std::move(apex), h.dom, h.table, std::move(id));
}

bool same_span(const Span& a, const Span& b) {
  return a.left == b.left && a.right == b.right && a.apex == b.apex && a.f.table == b.f.table &&
         a.g.table == b.g.table;
}

bool is_invertible_span(const Span& a) { return a.f.bijective() && a.g.bijective(); }

SpanMap make_span_map(Span src, Span tgt, std::vector<std::size_t> u) {
  if (!(src.left == tgt.left) || !(src.right == tgt.right))
    throw Error(Errc::FeetMismatch, "span map between spans with different feet");
  FinFn uu(src.apex.as_set(), tgt.apex.as_set(), std::move(u));
  for (std::size_t s = 0; s < src.size(); ++s)
    if (tgt.f(uu(s)) != src.f(s) || tgt.g(uu(s)) != src.g(s))
      throw Error(Errc::TriangleViolation, "leg triangle fails at apex element " + std::to_string(s));
  return SpanMap{std::move(src), std::move(tgt), std::move(uu)};
}

ClassMatching match_by_class(const std::vector<std::size_t>& class_a, const std::vector<std::size_t>& class_b) {
  ClassMatching out;
  out.map.assign(class_a.size(), 0);
  std::map<std::size_t, std::vector<std::size_t>> buckets;
  for (std::size_t j = 0; j < class_b.size(); ++j) buckets[class_b[j]].push_back(j);
  std::map<std::size_t, std::size_t> used;
  for (std::size_t i = 0; i < class_a.size(); ++i) {
    auto it = buckets.find(class_a[i]);
    std::size_t& k = used[class_a[i]];
    if (it == buckets.end() || k >= it->second.size()) {
      if (!out.unmatched_a) out.unmatched_a = i;
      continue;
    }
    out.map[i] = it->second[k++];
  }
  for (const auto& [c, members] : buckets) {
    std::size_t k = used.count(c) ? used[c] : 0;
    if (k < members.size() && (!out.unmatched_b || members[k] < *out.unmatched_b)) out.unmatched_b = members[k];
    if (members.size() > 1) out.ambiguous.push_back(members);
  }
  return out;
}

namespace {

// Joint class ids for the (left, right) leg pairs of two spans.
void leg_classes(const Span& a, const Span& b, std::vector<std::size_t>& ca, std::vector<std::size_t>& cb) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
  auto id = [&](std::size_t x, std::size_t y) {
    auto [it, fresh] = ids.try_emplace({x, y}, ids.size());
    return it->second;
  };
  ca.resize(a.size());
  cb.resize(b.size());
  for (std::size_t s = 0; s < a.size(); ++s) ca[s] = id(a.f(s), a.g(s));
  for (std::size_t s = 0; s < b.size(); ++s) cb[s] = id(b.f(s), b.g(s));
}

}  // namespace

std::optional<SpanMap> spans_isomorphic(const Span& a, const Span& b) {
  if (!(a.left == b.left) || !(a.right == b.right)) throw Error(Errc::FeetMismatch, "spans_isomorphic on different feet");
  std::vector<std::size_t> ca, cb;
  leg_classes(a, b, ca, cb);
  auto m = match_by_class(ca, cb);
  if (!m.ok()) return std::nullopt;
  return make_span_map(a, b, m.map);
}

bool has_monic_leg(const Span& b) { return b.f.injective() || b.g.injective(); }

std::optional<SpanMap> unique_map_to_monic(const Span& a, const Span& b) {
  if (!(a.left == b.left) || !(a.right == b.right)) throw Error(Errc::FeetMismatch, "unique_map_to_monic on different feet");
  const bool left_monic = b.f.injective();
  if (!left_monic && !b.g.injective()) throw Error(Errc::NotMonic, "target span has no injective leg");
  const FinFn& leg = left_monic ? b.f : b.g;
  const FinFn& src_leg = left_monic ? a.f : a.g;
  std::vector<std::size_t> back(leg.cod.size(), SIZE_MAX);
  for (std::size_t t = 0; t < b.size(); ++t) back[leg(t)] = t;
  std::vector<std::size_t> u(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    std::size_t t = back[src_leg(s)];
    if (t == SIZE_MAX || b.f(t) != a.f(s) || b.g(t) != a.g(s)) return std::nullopt;
    u[s] = t;
  }
  return make_span_map(a, b, std::move(u));
}

std::optional<SpanMap> unique_map_by_legs(const Span& a, const Span& b) {
  if (!(a.left == b.left) || !(a.right == b.right)) throw Error(Errc::FeetMismatch, "unique_map_by_legs on different feet");
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> back;
  for (std::size_t t = 0; t < b.size(); ++t)
    if (!back.emplace(std::make_pair(b.f(t), b.g(t)), t).second)
      throw Error(Errc::NotMonic, "target span legs are not jointly injective");
  std::vector<std::size_t> u(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    auto it = back.find({a.f(s), a.g(s)});
    if (it == back.end()) return std::nullopt;
    u[s] = it->second;
  }
  return make_span_map(a, b, std::move(u));
}

}  // namespace ohl
