#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ohl/hopfcat.hpp"

using namespace ohl;

namespace {

using Tuple = std::vector<std::size_t>;

std::string failures(const CheckReport& r) {
  std::string out;
  for (const auto& rec : r.records)
    if (!rec.pass) out += describe(rec) + "\n";
  return out;
}

template <class V>
bool same_arrays(const V& v, const std::vector<typename V::Mor>& a, const std::vector<typename V::Mor>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!v.eq(a[i], b[i])) return false;
  return true;
}

template <class V>
void check_roundtrip(const V& v, const HopfVCat<V>& h, const HopfVCat<V>& back) {
  CHECK(back.n == h.n);
  REQUIRE(back.homs.size() == h.homs.size());
  for (std::size_t i = 0; i < h.homs.size(); ++i) CHECK(v.obj_eq(back.homs[i], h.homs[i]));
  CHECK(same_arrays(v, back.m, h.m));
  CHECK(same_arrays(v, back.u, h.u));
  CHECK(same_arrays(v, back.delta, h.delta));
  CHECK(same_arrays(v, back.eps, h.eps));
  REQUIRE(back.s.has_value() == h.s.has_value());
  if (h.s) CHECK(same_arrays(v, *back.s, *h.s));
}

// Full generic verdict for a bridged Hopf V-category.
template <class V>
CheckReport generic_hopf(const Structures<V>& st, const HopfBridge<V>& hb) {
  CheckReport r;
  r.append(st.check_strict_monoid(hb.bimonoid.monoid));
  r.append(st.check_strict_comonoid(hb.bimonoid.comonoid));
  r.append(st.check_oplax_bimonoid(hb.bimonoid));
  if (hb.antipode) r.append(st.check_oplax_hopf(hb.bimonoid, *hb.antipode));
  return r;
}

}  // namespace

TEST_CASE("groupoid construction") {
  auto g = codiscrete_groupoid(3);
  CHECK(g.arrows.size() == 9);
  CHECK(g.composable.size() == 27);
  CHECK(g.ident == Tuple{0, 4, 8});
  CHECK(g.inv[1] == 3);  // (0,1) inverts to (1,0)
  auto z = cyclic_group(4);
  CHECK(z.inv == Tuple{0, 3, 2, 1});
  CHECK(z.ident == Tuple{0});
  // no identity
  CHECK_THROWS_AS(make_groupoid(1, 2, {0, 0}, {0, 0}, [](std::size_t, std::size_t) { return std::size_t(1); }), Error);
  // wrong endpoints
  CHECK_THROWS_AS(make_groupoid(2, 2, {0, 1}, {0, 1}, [](std::size_t, std::size_t) { return std::size_t(1); }), Error);
  // not associative: a Latin square with identity 0 that is not a group
  std::vector<std::vector<std::size_t>> t{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    make_groupoid(1, 5, Tuple(5, 0), Tuple(5, 0), [&](std::size_t a, std::size_t b) { return t[a][b]; });
    FAIL("expected NotAGroupoid");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAGroupoid);
    CHECK(std::string(e.what()).find("associative") != std::string::npos);
  }
}

TEST_CASE("groupoids are Hopf Set-categories") {
  FinSetBackend v;
  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    auto h = groupoid_hopf_vcat(codiscrete_groupoid(n));
    auto r = check_hopf_vcat(v, h);
    CHECK_MESSAGE(r.passed(), failures(r));
  }
  for (std::size_t k : {2, 3, 4}) {
    auto r = check_hopf_vcat(v, groupoid_hopf_vcat(cyclic_group(k)));
    CHECK_MESSAGE(r.passed(), failures(r));
  }
  // without the antipode the semi-Hopf part still passes
  auto h = groupoid_hopf_vcat(cyclic_group(3));
  h.s.reset();
  CHECK(check_semi_hopf_vcat(v, h).passed());
  auto r = check_hopf_vcat(v, h);
  CHECK_FALSE(r.passed("antipode.present"));
}

TEST_CASE("group algebras are one-object Hopf categories") {
  for (std::int64_t p : {2, 3}) {
    MatBackend v(Semiring::field(p));
    for (std::size_t k : {2, 3}) {
      CAPTURE(p);
      CAPTURE(k);
      auto h = group_algebra_hopf(v, k);
      auto r = check_hopf_vcat(v, h);
      CHECK_MESSAGE(r.passed(), failures(r));
    }
  }
  MatBackend f3(Semiring::field(3));
  auto h = group_algebra_hopf(f3, 2);
  // F3[Z/2]: g·g = e, δ(g) = g ⊗ g, s(g) = g
  CHECK(f3.show(h.m[0]) == "[1 0;0 1;0 1;1 0]");
  REQUIRE(h.s);
  CHECK(f3.show((*h.s)[0]) == "[1 0;0 1]");

  MatBackend f2(Semiring::field(2));
  auto z3 = group_algebra_hopf(f2, 3);
  z3.s = std::vector<IntMatrix>{f2.id(3)};
  auto r = check_hopf_vcat(f2, z3);
  CHECK(r.passed("hax.mult"));
  CHECK_FALSE(r.passed("antipode.left"));
  CHECK_FALSE(r.passed("antipode.right"));
  REQUIRE(r.find("antipode.left")->cex);
  CHECK(r.find("antipode.left")->cex->element == Tuple{0, 0});
}

TEST_CASE("matrix Frobenius category") {
  for (std::int64_t p : {2, 3}) {
    MatBackend v(Semiring::field(p));
    auto c = mat_frobenius_example(v, 3);
    CHECK(c.n == 3);
    CHECK(c.homs == std::vector<std::size_t>{1, 2, 3, 2, 4, 6, 3, 6, 9});
    auto r = check_frobenius_vcat(v, c);
    CHECK_MESSAGE(r.passed(), failures(r));
  }
  MatBackend v(Semiring::field(2));
  auto c = mat_frobenius_example(v, 2);
  // Δ_{1,2,1}(e₁₁) = e₁₁ ⊗ e₁₁ + e₁₂ ⊗ e₂₁
  CHECK(v.show(c.comlt[detail::idx3(2, 0, 1, 0)]) == "[1 0 0 1]");
  // ε_2 on the matrix units of Mat_{2,2}
  CHECK(v.show(c.couni[1]) == "[1;0;0;1]");
  CHECK(v.show(c.u[1]) == "[1 0 0 1]");

  auto g = group_algebra_frobenius(v, 2);
  CHECK(check_frobenius_vcat(v, g).passed());
  auto broken = g;
  broken.comlt[0](0, 0) = 0;  // drop the summand e ⊗ e of Δ(e)
  auto rb = check_frobenius_vcat(v, broken);
  CHECK_FALSE(rb.passed("frob.left"));
  CHECK_FALSE(rb.passed("vopcat.counit-left"));
}

TEST_CASE("Hopf categories bridge to oplax Hopf monoids") {
  SUBCASE("codiscrete groupoids over finite sets") {
    FinSetBackend v;
    SpanV<FinSetBackend> sv(v);
    Structures<FinSetBackend> st(sv);
    Bridge<FinSetBackend> br(st);
    for (std::size_t n = 1; n <= 3; ++n) {
      CAPTURE(n);
      auto h = groupoid_hopf_vcat(codiscrete_groupoid(n));
      auto hb = br.hopfcat_to_spanv(h);
      auto r = generic_hopf(st, hb);
      CHECK_MESSAGE(r.passed(), failures(r));
      check_roundtrip(v, h, br.spanv_to_hopfcat(hb.bimonoid, hb.antipode));
    }
  }
  SUBCASE("group algebras over prime fields") {
    for (std::int64_t p : {2, 3}) {
      MatBackend v(Semiring::field(p));
      SpanV<MatBackend> sv(v);
      Structures<MatBackend> st(sv);
      Bridge<MatBackend> br(st);
      for (std::size_t k : {2, 3}) {
        CAPTURE(p);
        CAPTURE(k);
        auto h = group_algebra_hopf(v, k);
        auto hb = br.hopfcat_to_spanv(h);
        auto r = generic_hopf(st, hb);
        CHECK_MESSAGE(r.passed(), failures(r));
        check_roundtrip(v, h, br.spanv_to_hopfcat(hb.bimonoid, hb.antipode));
      }
    }
  }
}

TEST_CASE("direct and generic verdicts agree on mutations") {
  MatBackend v(Semiring::field(2));
  SpanV<MatBackend> sv(v);
  Structures<MatBackend> st(sv);
  Bridge<MatBackend> br(st);
  auto base = group_algebra_hopf(v, 3);
  std::vector<std::pair<const char*, HopfVCat<MatBackend>>> cases;
  {
    auto h = base;
    h.s = std::vector<IntMatrix>{v.id(3)};
    cases.emplace_back("identity antipode", h);
  }
  {
    auto h = base;
    h.m[0](4, 2) = 0;
    h.m[0](4, 1) = 1;
    cases.emplace_back("multiplication", h);
  }
  {
    auto h = base;
    h.delta[0](1, 4) = 0;
    cases.emplace_back("comultiplication", h);
  }
  {
    auto h = base;
    h.eps[0](2, 0) = 0;
    cases.emplace_back("counit", h);
  }
  {
    auto h = base;
    h.u[0](0, 0) = 0;
    h.u[0](0, 1) = 1;
    cases.emplace_back("unit", h);
  }
  cases.emplace_back("none", base);
  for (const auto& [name, h] : cases) {
    CAPTURE(name);
    bool direct = check_hopf_vcat(v, h).passed();
    bool generic = generic_hopf(st, br.hopfcat_to_spanv(h)).passed();
    CHECK(direct == generic);
    CHECK(direct == (std::string(name) == "none"));
  }
}

TEST_CASE("Frobenius categories bridge to Frobenius monoids") {
  for (std::int64_t p : {2, 3}) {
    CAPTURE(p);
    MatBackend v(Semiring::field(p));
    SpanV<MatBackend> sv(v);
    Structures<MatBackend> st(sv);
    Bridge<MatBackend> br(st);
    auto c = mat_frobenius_example(v, 3);
    auto d = br.frobcat_to_spanv(c);
    CHECK(st.check_strict_monoid(d.monoid).passed());
    CHECK(st.check_strict_comonoid(d.comonoid).passed());
    auto r = st.check_frobenius(d);
    CHECK_MESSAGE(r.passed(), failures(r));
    CHECK(st.check_strict_comonoid(br.vopcat_as_comonoid(c)).passed());
  }
}

TEST_CASE("broken comultiplication fails at the same index in both checks") {
  MatBackend v(Semiring::field(2));
  SpanV<MatBackend> sv(v);
  Structures<MatBackend> st(sv);
  Bridge<MatBackend> br(st);
  auto c = mat_frobenius_example(v, 2);
  // drop the t = 1 summand of Δ_{1,2,1}
  c.comlt[detail::idx3(2, 0, 1, 0)](0, 3) = 0;

  // all failing (x,y,z,w) of the first Frobenius law, evaluated here
  std::set<Tuple> bad;
  const std::size_t n = 2;
  using detail::idx2;
  using detail::idx3;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          auto mid = v.compose(c.m[idx3(n, x, y, z)], c.comlt[idx3(n, x, w, z)]);
          auto l = v.compose(v.tensor(c.comlt[idx3(n, x, w, y)], v.id(c.homs[idx2(n, y, z)])),
                             v.tensor(v.id(c.homs[idx2(n, x, w)]), c.m[idx3(n, w, y, z)]));
          if (!v.eq(l, mid)) bad.insert({x, y, z, w});
        }
  REQUIRE_FALSE(bad.empty());

  auto direct = check_frobenius_vcat(v, c);
  REQUIRE_FALSE(direct.passed("frob.left"));
  CHECK(direct.find("frob.left")->cex->element == *bad.begin());

  auto d = br.frobcat_to_spanv(c);
  auto generic = st.check_frobenius(d);
  REQUIRE_FALSE(generic.passed("frobenius.left"));
  const auto& cex = *generic.find("frobenius.left")->cex;
  // recover (x,y,z,w) from the legs (x,y,y,z) -> (x,w,w,z) of the reported element
  auto id = sv.identity(d.monoid.carrier);
  auto lhs = sv.compose(sv.tensor(d.comonoid.lcm, id), sv.tensor(id, d.monoid.mlt));
  auto mid = sv.compose(d.monoid.mlt, d.comonoid.lcm);
  const Span& side = cex.cell == "frobenius.left.lhs" ? lhs.span : mid.span;
  std::vector<Atom> key(cex.element.begin(), cex.element.end());
  auto at = side.apex.find(key);
  REQUIRE(at);
  Tuple l = side.left.decode(side.f(*at)), r = side.right.decode(side.g(*at));
  Tuple xyzw{l[0], l[1], l[3], r[1]};
  CHECK(bad.count(xyzw) == 1);
}

TEST_CASE("backward bridge recognizes the X2 shape structurally") {
  SpanT sv;
  Structures<TrivialBackend> st(sv);
  Bridge<TrivialBackend> br(st);
  auto gs = groupoid_structures(codiscrete_groupoid(2));
  auto h = br.spanv_to_hopfcat(gs.bimonoid, gs.antipode);
  CHECK(h.n == 2);
  CHECK(h.m.size() == 8);
  CHECK(h.s->size() == 4);

  auto z2 = groupoid_structures(cyclic_group(2));
  try {
    br.spanv_to_hopfcat(z2.bimonoid, std::nullopt);
    FAIL("expected NotOverX2");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotOverX2);
  }
  // X × X carrier with the wrong multiplication span
  auto b = gs.bimonoid;
  b.monoid.mlt = sv.compose(sv.tensor(sv.identity(b.monoid.carrier), b.monoid.uni), b.monoid.mlt);
  b.monoid.mlt = sv.compose(sv.braiding(b.monoid.carrier, b.monoid.carrier), gs.bimonoid.monoid.mlt);
  CHECK_THROWS_AS(br.spanv_to_hopfcat(b, std::nullopt), Error);
}

TEST_CASE("V-functors bridge to oplax monoid morphisms") {
  FinSetBackend v;
  SpanV<FinSetBackend> sv(v);
  Structures<FinSetBackend> st(sv);
  Bridge<FinSetBackend> br(st);
  auto run = [&](const HopfVCat<FinSetBackend>& a, const HopfVCat<FinSetBackend>& b, const VFunctorData<FinSetBackend>& f) {
    bool direct = check_vfunctor(v, a.n, a.m, a.u, b.n, b.m, b.u, f).passed();
    auto fb = br.vfunctor_to_spanv(a.n, a.homs, a.m, a.u, b.n, b.homs, b.m, b.u, f);
    bool generic = st.check_oplax_monoid_morphism(fb.src, fb.tgt, fb.morphism).passed();
    CHECK(direct == generic);
    return direct;
  };
  auto commutes_with_antipode = [&](const HopfVCat<FinSetBackend>& a, const HopfVCat<FinSetBackend>& b,
                                    const VFunctorData<FinSetBackend>& f) {
    for (std::size_t x = 0; x < a.n; ++x)
      for (std::size_t y = 0; y < a.n; ++y) {
        auto l = v.compose((*a.s)[detail::idx2(a.n, x, y)], f.comp[detail::idx2(a.n, y, x)]);
        auto r = v.compose(f.comp[detail::idx2(a.n, x, y)], (*b.s)[detail::idx2(b.n, f.f(x), f.f(y))]);
        if (!v.eq(l, r)) return false;
      }
    return true;
  };

  auto c2 = groupoid_hopf_vcat(codiscrete_groupoid(2)), c3 = groupoid_hopf_vcat(codiscrete_groupoid(3));
  std::vector<FinFn> to_c3;
  VFunctorData<FinSetBackend> ident{identity_fn(FinSet::atom(2)), {}};
  for (const auto& hom : c2.homs) ident.comp.push_back(v.id(hom));
  CHECK(run(c2, c2, ident));
  CHECK(commutes_with_antipode(c2, c2, ident));

  VFunctorData<FinSetBackend> emb{FinFn(FinSet::atom(2), FinSet::atom(3), {2, 0}), {}};
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) emb.comp.push_back(FinFn(c2.homs[x * 2 + y], FinSet::atom(1), {0}));
  CHECK(run(c2, c3, emb));
  CHECK(commutes_with_antipode(c2, c3, emb));

  auto z2 = groupoid_hopf_vcat(cyclic_group(2)), z3 = groupoid_hopf_vcat(cyclic_group(3));
  VFunctorData<FinSetBackend> triv{identity_fn(FinSet::atom(1)), {FinFn(FinSet::atom(2), FinSet::atom(2), {0, 0})}};
  CHECK(run(z2, z2, triv));
  CHECK(commutes_with_antipode(z2, z2, triv));
  VFunctorData<FinSetBackend> shift{identity_fn(FinSet::atom(1)), {FinFn(FinSet::atom(3), FinSet::atom(3), {1, 2, 0})}};
  CHECK_FALSE(run(z3, z3, shift));
  VFunctorData<FinSetBackend> neg{identity_fn(FinSet::atom(1)), {FinFn(FinSet::atom(3), FinSet::atom(3), {0, 2, 1})}};
  CHECK(run(z3, z3, neg));
  CHECK(commutes_with_antipode(z3, z3, neg));
}

TEST_CASE("Frobenius functors") {
  MatBackend v(Semiring::field(3));
  auto c = mat_frobenius_example(v, 2);
  VFunctorData<MatBackend> id{identity_fn(FinSet::atom(2)), {}};
  for (auto d : c.homs) id.comp.push_back(v.id(d));
  auto r = check_frobenius_vfunctor(v, c, c, id);
  CHECK_MESSAGE(r.passed(), failures(r));
  CHECK(r.records.size() == 4);
  auto twice = id;
  for (auto& m : twice.comp) m = v.reduce(2 * m);
  auto rb = check_frobenius_vfunctor(v, c, c, twice);
  CHECK_FALSE(rb.passed("vfunctor.mult"));
  CHECK_FALSE(rb.passed("vfunctor.unit"));
}

TEST_CASE("opposite categories") {
  FinSetBackend v;
  auto h = groupoid_hopf_vcat(codiscrete_groupoid(3));
  auto o = opposite_vcat(v, h);
  CHECK(check_hopf_vcat(v, o).passed());
  // inversion is an isomorphism H -> H^op that is the identity on objects
  VFunctorData<FinSetBackend> inv{identity_fn(FinSet::atom(3)), *h.s};
  CHECK(check_vfunctor(v, h.n, h.m, h.u, o.n, o.m, o.u, inv).passed());

  auto s3 = make_groupoid(1, 6, Tuple(6, 0), Tuple(6, 0), [](std::size_t a, std::size_t b) {
    std::vector<std::vector<std::size_t>> p{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<std::size_t> c(3);
    for (std::size_t i = 0; i < 3; ++i) c[i] = p[b][p[a][i]];
    return std::size_t(std::find(p.begin(), p.end(), c) - p.begin());
  });
  auto hs = groupoid_hopf_vcat(s3);
  auto os = opposite_vcat(v, hs);
  CHECK(check_hopf_vcat(v, os).passed());
  VFunctorData<FinSetBackend> same{identity_fn(FinSet::atom(1)), {v.id(hs.homs[0])}};
  CHECK_FALSE(check_vfunctor(v, 1, hs.m, hs.u, 1, os.m, os.u, same).passed());
  VFunctorData<FinSetBackend> sinv{identity_fn(FinSet::atom(1)), *hs.s};
  CHECK(check_vfunctor(v, 1, hs.m, hs.u, 1, os.m, os.u, sinv).passed());

  MatBackend f3(Semiring::field(3));
  auto ga = group_algebra_hopf(f3, 3);
  CHECK(check_hopf_vcat(f3, opposite_vcat(f3, ga)).passed());
}

TEST_CASE("shape errors in enriched data") {
  FinSetBackend v;
  auto h = groupoid_hopf_vcat(codiscrete_groupoid(2));
  h.m.pop_back();
  CHECK_THROWS_AS(check_semi_hopf_vcat(v, h), Error);
}
