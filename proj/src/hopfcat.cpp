#include "ohl/hopfcat.hpp"

namespace ohl {

FinSet x_power(std::size_t n, std::size_t k) { return FinSet(std::vector<std::size_t>(k, n)); }

Span x2_mult_span(std::size_t n) {
  FinSet x3 = x_power(n, 3);
  return make_span(x_power(n, 4), SubsetApex(x3), x_power(n, 2), reindex(x3, {0, 1, 1, 2}).table,
                   reindex(x3, {0, 2}).table);
}
Span x2_unit_span(std::size_t n) {
  FinSet x = FinSet::atom(n);
  return make_span(FinSet(), SubsetApex(x), x_power(n, 2), bang(x).table, diagonal(x).table);
}
Span x2_local_comult_span(std::size_t n) {
  FinSet x2 = x_power(n, 2);
  return make_span(x2, SubsetApex(x2), x_power(n, 4), identity_fn(x2).table, reindex(x2, {0, 1, 0, 1}).table);
}
Span x2_local_counit_span(std::size_t n) {
  FinSet x2 = x_power(n, 2);
  return make_span(x2, SubsetApex(x2), FinSet(), identity_fn(x2).table, bang(x2).table);
}
Span x2_cocomposition_span(std::size_t n) {
  FinSet x3 = x_power(n, 3);
  return make_span(x_power(n, 2), SubsetApex(x3), x_power(n, 4), reindex(x3, {0, 2}).table,
                   reindex(x3, {0, 1, 1, 2}).table);
}
Span x2_coidentity_span(std::size_t n) {
  FinSet x = FinSet::atom(n);
  return make_span(x_power(n, 2), SubsetApex(x), FinSet(), diagonal(x).table, bang(x).table);
}
Span x2_antipode_span(std::size_t n) {
  FinSet x2 = x_power(n, 2);
  return make_span(x2, SubsetApex(x2), x2, identity_fn(x2).table, reindex(x2, {1, 0}).table);
}

// ---------------------------------------------------------------- groupoids

namespace {

GroupoidData finish(FinSet objects, FinSet arrows, std::vector<std::size_t> src, std::vector<std::size_t> tgt,
                    const std::function<std::size_t(std::size_t, std::size_t)>& compose) {
  GroupoidData g;
  g.objects = std::move(objects);
  g.arrows = std::move(arrows);
  g.src = std::move(src);
  g.tgt = std::move(tgt);
  const std::size_t na = g.arrows.size(), no = g.objects.size();
  if (g.src.size() != na || g.tgt.size() != na) throw Error(Errc::NotAGroupoid, "source/target tables have the wrong length");
  for (std::size_t a = 0; a < na; ++a)
    if (g.src[a] >= no || g.tgt[a] >= no) throw Error(Errc::NotAGroupoid, "arrow endpoint out of range");
  FinSet amb = product(g.arrows, g.arrows);
  std::vector<Atom> tuples;
  std::vector<Atom> buf(amb.arity());
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b)
      if (g.tgt[a] == g.src[b]) {
        amb.decode_into(a * na + b, buf.data());
        tuples.insert(tuples.end(), buf.begin(), buf.end());
        std::size_t c = compose(a, b);
        if (c >= na || g.src[c] != g.src[a] || g.tgt[c] != g.tgt[b])
          throw Error(Errc::NotAGroupoid, "composite of " + std::to_string(a) + " and " + std::to_string(b) +
                                              " has the wrong endpoints");
        g.comp.push_back(c);
      }
  const std::size_t count = g.comp.size();
  g.composable = SubsetApex(amb, std::move(tuples), count);
  auto comp = [&](std::size_t a, std::size_t b) { return compose(a, b); };
  // identities: the arrow e_x with e_x;g = g for all g out of x
  g.ident.assign(no, SIZE_MAX);
  for (std::size_t x = 0; x < no; ++x)
    for (std::size_t e = 0; e < na && g.ident[x] == SIZE_MAX; ++e) {
      if (g.src[e] != x || g.tgt[e] != x) continue;
      bool ok = true;
      for (std::size_t a = 0; a < na && ok; ++a) {
        if (g.src[a] == x && comp(e, a) != a) ok = false;
        if (g.tgt[a] == x && comp(a, e) != a) ok = false;
      }
      if (ok) g.ident[x] = e;
    }
  for (std::size_t x = 0; x < no; ++x)
    if (g.ident[x] == SIZE_MAX) throw Error(Errc::NotAGroupoid, "object " + std::to_string(x) + " has no identity");
  g.inv.assign(na, SIZE_MAX);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na && g.inv[a] == SIZE_MAX; ++b)
      if (g.src[b] == g.tgt[a] && g.tgt[b] == g.src[a] && comp(a, b) == g.ident[g.src[a]] &&
          comp(b, a) == g.ident[g.tgt[a]])
        g.inv[a] = b;
  for (std::size_t a = 0; a < na; ++a)
    if (g.inv[a] == SIZE_MAX) throw Error(Errc::NotAGroupoid, "arrow " + std::to_string(a) + " has no inverse");
  validate_groupoid(g);
  return g;
}

}  // namespace

GroupoidData make_groupoid(std::size_t objects, std::size_t arrows, std::vector<std::size_t> src,
                           std::vector<std::size_t> tgt, const std::function<std::size_t(std::size_t, std::size_t)>& compose) {
  return finish(FinSet::atom(objects), FinSet::atom(arrows), std::move(src), std::move(tgt), compose);
}

GroupoidData codiscrete_groupoid(std::size_t n) {
  FinSet x2 = x_power(n, 2);
  std::vector<std::size_t> src(n * n), tgt(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      src[a * n + b] = a;
      tgt[a * n + b] = b;
    }
  return finish(FinSet::atom(n), x2, src, tgt, [n](std::size_t g, std::size_t h) { return (g / n) * n + h % n; });
}

GroupoidData cyclic_group(std::size_t k) {
  return make_groupoid(1, k, std::vector<std::size_t>(k, 0), std::vector<std::size_t>(k, 0),
                       [k](std::size_t a, std::size_t b) { return (a + b) % k; });
}

void validate_groupoid(const GroupoidData& g) {
  const std::size_t na = g.arrows.size();
  std::vector<std::size_t> table(na * na, SIZE_MAX);
  for (std::size_t i = 0; i < g.composable.size(); ++i) {
    auto t = g.composable.decoded(i);
    std::size_t a = g.arrows.encode(std::span<const std::size_t>(t.data(), g.arrows.arity()));
    std::size_t b = g.arrows.encode(std::span<const std::size_t>(t.data() + g.arrows.arity(), g.arrows.arity()));
    table[a * na + b] = g.comp[i];
  }
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      if (g.tgt[a] != g.src[b]) continue;
      for (std::size_t c = 0; c < na; ++c) {
        if (g.tgt[b] != g.src[c]) continue;
        if (table[table[a * na + b] * na + c] != table[a * na + table[b * na + c]])
          throw Error(Errc::NotAGroupoid, "composition is not associative at (" + std::to_string(a) + "," +
                                              std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }
}

GroupoidSpanStructures groupoid_structures(const GroupoidData& g) {
  validate_groupoid(g);
  SpanT sv;
  Structures<TrivialBackend> st(sv);
  auto fam = [](const FinSet& x) { return SpanT::Fam{x, std::vector<Unit>(x.size())}; };
  auto cell = [&](const Span& s) { return sv.make_cell(fam(s.left), fam(s.right), s, std::vector<Unit>(s.size())); };
  const FinSet& g1 = g.arrows;
  FinSet g11 = product(g1, g1);
  Span mu = make_span(g11, g.composable, g1, g.composable.members(), g.comp);
  Span eta = make_span(FinSet(), SubsetApex(g.objects), g1, bang(g.objects).table, g.ident);
  Span delta = from_function(diagonal(g1));
  Span eps = from_function(bang(g1));
  Span s = make_span(g1, SubsetApex(g1), g1, identity_fn(g1).table, g.inv);

  GroupoidSpanStructures out;
  SpanT::Fam carrier = fam(g1);
  out.monoid = MonoidData<TrivialBackend>{carrier, cell(mu), cell(eta)};
  out.trivial_comonoid = ComonoidData<TrivialBackend>{carrier, cell(delta), cell(eps)};
  out.groupoid_comonoid = ComonoidData<TrivialBackend>{carrier, cell(reverse_span(mu)), cell(reverse_span(eta))};
  auto& b = out.bimonoid;
  b.monoid = out.monoid;
  b.comonoid = out.trivial_comonoid;
  auto legs = [&](const BoundaryPair<TrivialBackend>& bp, const char* name) {
    auto t = table_from_legs(bp.src, bp.tgt);
    if (!t) throw Error(Errc::BoundaryMismatch, std::string("no map of spans for ") + name);
    return *t;
  };
  b.theta = legs(st.theta_boundary(b.monoid, b.comonoid), "theta");
  b.theta0 = legs(st.theta0_boundary(b.monoid, b.comonoid), "theta0");
  b.chi = legs(st.chi_boundary(b.monoid, b.comonoid), "chi");
  b.chi0 = legs(st.chi0_boundary(b.monoid, b.comonoid), "chi0");
  out.antipode.s = cell(s);
  out.antipode.tau1 = legs(st.tau1_boundary(b, out.antipode.s), "tau1");
  out.antipode.tau2 = legs(st.tau2_boundary(b, out.antipode.s), "tau2");
  out.frobenius = FrobeniusData<TrivialBackend>{out.monoid, out.groupoid_comonoid};
  return out;
}

// ---------------------------------------------------------------- generators

HopfVCat<FinSetBackend> groupoid_hopf_vcat(const GroupoidData& g) {
  const std::size_t n = g.objects.size(), na = g.arrows.size();
  // local numbering of arrows inside each hom-set
  std::vector<std::size_t> local(na), count(n * n, 0);
  for (std::size_t a = 0; a < na; ++a) local[a] = count[g.src[a] * n + g.tgt[a]]++;
  std::vector<std::vector<std::size_t>> arrows_of(n * n);
  for (std::size_t a = 0; a < na; ++a) arrows_of[g.src[a] * n + g.tgt[a]].push_back(a);
  std::vector<std::size_t> table(na * na, SIZE_MAX);
  for (std::size_t i = 0; i < g.composable.size(); ++i) {
    auto t = g.composable.decoded(i);
    std::size_t a = g.arrows.encode(std::span<const std::size_t>(t.data(), g.arrows.arity()));
    std::size_t b = g.arrows.encode(std::span<const std::size_t>(t.data() + g.arrows.arity(), g.arrows.arity()));
    table[a * na + b] = g.comp[i];
  }

  HopfVCat<FinSetBackend> h;
  h.n = n;
  for (std::size_t k = 0; k < n * n; ++k) h.homs.push_back(FinSet::atom(count[k]));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto& ab = arrows_of[x * n + y];
        const auto& bc = arrows_of[y * n + z];
        std::vector<std::size_t> t;
        for (std::size_t a : ab)
          for (std::size_t b : bc) t.push_back(local[table[a * na + b]]);
        h.m.push_back(FinFn(product(h.homs[x * n + y], h.homs[y * n + z]), h.homs[x * n + z], t));
      }
  for (std::size_t x = 0; x < n; ++x) h.u.push_back(FinFn(FinSet(), h.homs[x * n + x], {local[g.ident[x]]}));
  std::vector<FinFn> s;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const FinSet& hom = h.homs[x * n + y];
      h.delta.push_back(diagonal(hom));
      h.eps.push_back(bang(hom));
      std::vector<std::size_t> t;
      for (std::size_t a : arrows_of[x * n + y]) t.push_back(local[g.inv[a]]);
      s.push_back(FinFn(hom, h.homs[y * n + x], t));
    }
  h.s = std::move(s);
  return h;
}

HopfVCat<MatBackend> group_algebra_hopf(const MatBackend& v, std::size_t k) {
  using M = IntMatrix;
  const auto K = Eigen::Index(k);
  HopfVCat<MatBackend> h;
  h.n = 1;
  h.homs = {k};
  M m = M::Zero(K * K, K), u = M::Zero(1, K), d = M::Zero(K, K * K), e = M::Ones(K, 1), s = M::Zero(K, K);
  for (Eigen::Index g = 0; g < K; ++g) {
    for (Eigen::Index x = 0; x < K; ++x) m(g * K + x, (g + x) % K) = 1;
    d(g, g * K + g) = 1;
    s(g, (K - g) % K) = 1;
  }
  u(0, 0) = 1;
  h.m = {v.reduce(m)};
  h.u = {v.reduce(u)};
  h.delta = {v.reduce(d)};
  h.eps = {v.reduce(e)};
  h.s = std::vector<M>{v.reduce(s)};
  return h;
}

FrobVCat<MatBackend> group_algebra_frobenius(const MatBackend& v, std::size_t k) {
  using M = IntMatrix;
  const auto K = Eigen::Index(k);
  FrobVCat<MatBackend> c;
  c.n = 1;
  c.homs = {k};
  M m = M::Zero(K * K, K), u = M::Zero(1, K), d = M::Zero(K, K * K), e = M::Zero(K, 1);
  for (Eigen::Index g = 0; g < K; ++g) {
    for (Eigen::Index x = 0; x < K; ++x) m(g * K + x, (g + x) % K) = 1;
    for (Eigen::Index x = 0; x < K; ++x) d(g, x * K + (g - x + K) % K) = 1;
  }
  u(0, 0) = 1;
  e(0, 0) = 1;
  c.m = {v.reduce(m)};
  c.u = {v.reduce(u)};
  c.comlt = {v.reduce(d)};
  c.couni = {v.reduce(e)};
  return c;
}

FrobVCat<MatBackend> mat_frobenius_example(const MatBackend& v, std::size_t max_n) {
  using M = IntMatrix;
  using I = Eigen::Index;
  FrobVCat<MatBackend> c;
  const std::size_t n = max_n;
  c.n = n;
  auto dim = [](std::size_t a) { return I(a + 1); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) c.homs.push_back(std::size_t(dim(a) * dim(b)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x) {
        const I da = dim(a), db = dim(b), dc = dim(x);
        // e_{ij} ⊗ e_{jl} -> e_{il}
        M m = M::Zero(da * db * db * dc, da * dc);
        for (I i = 0; i < da; ++i)
          for (I j = 0; j < db; ++j)
            for (I l = 0; l < dc; ++l) m((i * db + j) * (db * dc) + (j * dc + l), i * dc + l) = 1;
        c.m.push_back(v.reduce(m));
        // e_{il} -> Σ_t e_{it} ⊗ e_{tl}
        M d = M::Zero(da * dc, da * db * db * dc);
        for (I i = 0; i < da; ++i)
          for (I l = 0; l < dc; ++l)
            for (I t = 0; t < db; ++t) d(i * dc + l, (i * db + t) * (db * dc) + (t * dc + l)) = 1;
        c.comlt.push_back(v.reduce(d));
      }
  for (std::size_t a = 0; a < n; ++a) {
    const I da = dim(a);
    M u = M::Zero(1, da * da), e = M::Zero(da * da, 1);
    for (I i = 0; i < da; ++i) {
      u(0, i * da + i) = 1;
      e(i * da + i, 0) = 1;
    }
    c.u.push_back(v.reduce(u));
    c.couni.push_back(v.reduce(e));
  }
  return c;
}

template class Bridge<MatBackend>;
template class Bridge<FinSetBackend>;
template class Bridge<TrivialBackend>;

}  // namespace ohl
