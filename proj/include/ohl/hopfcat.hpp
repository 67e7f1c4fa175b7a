#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ohl/structures.hpp"

namespace ohl {

// ---------------------------------------------------------------- groupoids

// A finite groupoid. Arrows form a FinSet so that the codiscrete groupoid on
// X can use the shape X × X directly.
struct GroupoidData {
  FinSet objects;
  FinSet arrows;
  std::vector<std::size_t> src, tgt;  // per arrow
  std::vector<std::size_t> ident;     // per object
  std::vector<std::size_t> inv;       // per arrow
  SubsetApex composable;              // pairs (g, h) with tgt g = src h, over arrows × arrows
  std::vector<std::size_t> comp;      // g then h, aligned with composable
};

GroupoidData codiscrete_groupoid(std::size_t n);
GroupoidData cyclic_group(std::size_t k);             // one object, Z/k
GroupoidData make_groupoid(std::size_t objects, std::size_t arrows, std::vector<std::size_t> src,
                           std::vector<std::size_t> tgt, const std::function<std::size_t(std::size_t, std::size_t)>& compose);
// Throws NotAGroupoid with the first violated law.
void validate_groupoid(const GroupoidData& g);

struct GroupoidSpanStructures {
  MonoidData<TrivialBackend> monoid;
  ComonoidData<TrivialBackend> trivial_comonoid;
  ComonoidData<TrivialBackend> groupoid_comonoid;
  OplaxBimonoidData<TrivialBackend> bimonoid;
  AntipodeData<TrivialBackend> antipode;
  FrobeniusData<TrivialBackend> frobenius;
};

GroupoidSpanStructures groupoid_structures(const GroupoidData& g);

// X^k with the row-major codec.
FinSet x_power(std::size_t n, std::size_t k);

// The spans of the X × X structures, generated from the codec.
Span x2_mult_span(std::size_t n);           // X^4 <-1Δ1- X^3 -π13-> X^2
Span x2_unit_span(std::size_t n);           // 1 <-!- X -Δ-> X^2
Span x2_local_comult_span(std::size_t n);   // X^2 <-id- X^2 -Δ-> X^4
Span x2_local_counit_span(std::size_t n);   // X^2 <-id- X^2 -!-> 1
Span x2_cocomposition_span(std::size_t n);  // X^2 <-π13- X^3 -1Δ1-> X^4
Span x2_coidentity_span(std::size_t n);     // X^2 <-Δ- X -!-> 1
Span x2_antipode_span(std::size_t n);       // X^2 <-id- X^2 -sw-> X^2

// 2-cell table between canonical boundaries, read off from the legs alone.
template <class V>
std::optional<CellTable> table_from_legs(const VCell1<V>& src, const VCell1<V>& tgt) {
  std::optional<SpanMap> w;
  if (has_monic_leg(tgt.span))
    w = unique_map_to_monic(src.span, tgt.span);
  else
    w = unique_map_by_legs(src.span, tgt.span);
  if (!w) return std::nullopt;
  return w->u.table;
}

// ---------------------------------------------------------------- enriched categories

template <class V>
struct HopfVCat {
  std::size_t n = 0;                        // objects 0..n-1
  std::vector<typename V::Obj> homs;        // H_{x,y} at x*n+y
  std::vector<typename V::Mor> m;           // m_{xyz} at (x*n+y)*n+z
  std::vector<typename V::Mor> u;           // u_x
  std::vector<typename V::Mor> delta;       // δ_{xy}
  std::vector<typename V::Mor> eps;         // ε_{xy}
  std::optional<std::vector<typename V::Mor>> s;  // s_{xy}: H_{x,y} -> H_{y,x}
};

template <class V>
struct FrobVCat {
  std::size_t n = 0;
  std::vector<typename V::Obj> homs;
  std::vector<typename V::Mor> m, u;
  std::vector<typename V::Mor> comlt;  // Δ_{xyz}: H_{x,z} -> H_{x,y} ⊗ H_{y,z}
  std::vector<typename V::Mor> couni;  // ε_x: H_{x,x} -> I
};

template <class V>
struct VFunctorData {
  FinFn f;                               // objects
  std::vector<typename V::Mor> comp;     // F_{xy}: H_{x,y} -> K_{fx,fy}
};

namespace detail {

inline std::size_t idx2(std::size_t n, std::size_t x, std::size_t y) { return x * n + y; }
inline std::size_t idx3(std::size_t n, std::size_t x, std::size_t y, std::size_t z) { return (x * n + y) * n + z; }

template <class V>
struct Equations {
  const V& v;
  CheckReport& r;
  // First failing index per record.
  void run(const std::string& id, std::size_t arity, std::size_t n,
           const std::function<std::optional<std::string>(const std::vector<std::size_t>&)>& eq) {
    std::vector<std::size_t> t(arity, 0);
    std::size_t total = 1;
    for (std::size_t k = 0; k < arity; ++k) total *= n;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t k = arity; k-- > 0;) {
        t[k] = c % n;
        c /= n;
      }
      std::optional<std::string> bad;
      try {
        bad = eq(t);
      } catch (const Error& e) {
        bad = std::string(e.what());
      }
      if (bad) {
        r.add(id, Counterexample{id, t, *bad});
        return;
      }
    }
    r.add(id, std::nullopt);
  }
  std::optional<std::string> same(const typename V::Mor& a, const typename V::Mor& b) const {
    if (v.eq(a, b)) return std::nullopt;
    return v.show(a) + " != " + v.show(b);
  }
};

}  // namespace detail

template <class V>
void check_vcat_laws(const V& v, std::size_t n, const std::vector<typename V::Obj>& homs,
                     const std::vector<typename V::Mor>& m, const std::vector<typename V::Mor>& u, CheckReport& r) {
  using detail::idx2;
  using detail::idx3;
  detail::Equations<V> e{v, r};
  e.run("vcat.assoc", 4, n, [&](const std::vector<std::size_t>& t) {
    auto [x, y, z, w] = std::array<std::size_t, 4>{t[0], t[1], t[2], t[3]};
    auto l = v.compose(v.tensor(m[idx3(n, x, y, z)], v.id(homs[idx2(n, z, w)])), m[idx3(n, x, z, w)]);
    auto rr = v.compose(v.tensor(v.id(homs[idx2(n, x, y)]), m[idx3(n, y, z, w)]), m[idx3(n, x, y, w)]);
    return e.same(l, rr);
  });
  e.run("vcat.unit-left", 2, n, [&](const std::vector<std::size_t>& t) {
    auto h = homs[idx2(n, t[0], t[1])];
    return e.same(v.compose(v.tensor(u[t[0]], v.id(h)), m[idx3(n, t[0], t[0], t[1])]), v.id(h));
  });
  e.run("vcat.unit-right", 2, n, [&](const std::vector<std::size_t>& t) {
    auto h = homs[idx2(n, t[0], t[1])];
    return e.same(v.compose(v.tensor(v.id(h), u[t[1]]), m[idx3(n, t[0], t[1], t[1])]), v.id(h));
  });
}

template <class V>
CheckReport check_semi_hopf_vcat(const V& v, const HopfVCat<V>& h) {
  using detail::idx2;
  using detail::idx3;
  const std::size_t n = h.n;
  if (h.homs.size() != n * n || h.m.size() != n * n * n || h.u.size() != n || h.delta.size() != n * n ||
      h.eps.size() != n * n)
    throw Error(Errc::ShapeMismatch, "Hopf V-category arrays have the wrong lengths");
  CheckReport r;
  check_vcat_laws(v, n, h.homs, h.m, h.u, r);
  detail::Equations<V> e{v, r};
  auto id = [&](std::size_t x, std::size_t y) { return v.id(h.homs[idx2(n, x, y)]); };
  e.run("local.coassoc", 2, n, [&](const std::vector<std::size_t>& t) {
    const auto& d = h.delta[idx2(n, t[0], t[1])];
    return e.same(v.compose(d, v.tensor(d, id(t[0], t[1]))), v.compose(d, v.tensor(id(t[0], t[1]), d)));
  });
  e.run("local.counit", 2, n, [&](const std::vector<std::size_t>& t) -> std::optional<std::string> {
    const auto& d = h.delta[idx2(n, t[0], t[1])];
    const auto& c = h.eps[idx2(n, t[0], t[1])];
    if (auto bad = e.same(v.compose(d, v.tensor(c, id(t[0], t[1]))), id(t[0], t[1]))) return bad;
    return e.same(v.compose(d, v.tensor(id(t[0], t[1]), c)), id(t[0], t[1]));
  });
  e.run("hax.mult", 3, n, [&](const std::vector<std::size_t>& t) {
    auto [x, y, z] = std::array<std::size_t, 3>{t[0], t[1], t[2]};
    auto hxy = h.homs[idx2(n, x, y)], hyz = h.homs[idx2(n, y, z)];
    auto l = v.compose(h.m[idx3(n, x, y, z)], h.delta[idx2(n, x, z)]);
    auto mid = v.tensor(v.tensor(v.id(hxy), v.braiding(hxy, hyz)), v.id(hyz));
    auto rr = v.compose(v.compose(v.tensor(h.delta[idx2(n, x, y)], h.delta[idx2(n, y, z)]), mid),
                        v.tensor(h.m[idx3(n, x, y, z)], h.m[idx3(n, x, y, z)]));
    return e.same(l, rr);
  });
  e.run("hax.unit", 1, n, [&](const std::vector<std::size_t>& t) {
    return e.same(v.compose(h.u[t[0]], h.delta[idx2(n, t[0], t[0])]), v.tensor(h.u[t[0]], h.u[t[0]]));
  });
  e.run("hax.counit-mult", 3, n, [&](const std::vector<std::size_t>& t) {
    return e.same(v.compose(h.m[idx3(n, t[0], t[1], t[2])], h.eps[idx2(n, t[0], t[2])]),
                  v.tensor(h.eps[idx2(n, t[0], t[1])], h.eps[idx2(n, t[1], t[2])]));
  });
  e.run("hax.counit-unit", 1, n, [&](const std::vector<std::size_t>& t) {
    return e.same(v.compose(h.u[t[0]], h.eps[idx2(n, t[0], t[0])]), v.id(v.unit_obj()));
  });
  return r;
}

template <class V>
CheckReport check_hopf_vcat(const V& v, const HopfVCat<V>& h) {
  using detail::idx2;
  using detail::idx3;
  CheckReport r = check_semi_hopf_vcat(v, h);
  if (!h.s) {
    r.add("antipode.present", Counterexample{"antipode", {}, "no antipode given"});
    return r;
  }
  const std::size_t n = h.n;
  const auto& s = *h.s;
  detail::Equations<V> e{v, r};
  e.run("antipode.left", 2, n, [&](const std::vector<std::size_t>& t) {
    auto [x, y] = std::array<std::size_t, 2>{t[0], t[1]};
    auto l = v.compose(v.compose(h.delta[idx2(n, x, y)], v.tensor(v.id(h.homs[idx2(n, x, y)]), s[idx2(n, x, y)])),
                       h.m[idx3(n, x, y, x)]);
    return e.same(l, v.compose(h.eps[idx2(n, x, y)], h.u[x]));
  });
  e.run("antipode.right", 2, n, [&](const std::vector<std::size_t>& t) {
    auto [x, y] = std::array<std::size_t, 2>{t[0], t[1]};
    auto l = v.compose(v.compose(h.delta[idx2(n, x, y)], v.tensor(s[idx2(n, x, y)], v.id(h.homs[idx2(n, x, y)]))),
                       h.m[idx3(n, y, x, y)]);
    return e.same(l, v.compose(h.eps[idx2(n, x, y)], h.u[y]));
  });
  return r;
}

template <class V>
void check_vopcat_laws(const V& v, std::size_t n, const std::vector<typename V::Obj>& homs,
                       const std::vector<typename V::Mor>& d, const std::vector<typename V::Mor>& c, CheckReport& r) {
  using detail::idx2;
  using detail::idx3;
  detail::Equations<V> e{v, r};
  e.run("vopcat.coassoc", 4, n, [&](const std::vector<std::size_t>& t) {
    auto [x, y, z, w] = std::array<std::size_t, 4>{t[0], t[1], t[2], t[3]};
    auto l = v.compose(d[idx3(n, x, y, w)], v.tensor(v.id(homs[idx2(n, x, y)]), d[idx3(n, y, z, w)]));
    auto rr = v.compose(d[idx3(n, x, z, w)], v.tensor(d[idx3(n, x, y, z)], v.id(homs[idx2(n, z, w)])));
    return e.same(l, rr);
  });
  e.run("vopcat.counit-left", 2, n, [&](const std::vector<std::size_t>& t) {
    auto hh = homs[idx2(n, t[0], t[1])];
    return e.same(v.compose(d[idx3(n, t[0], t[0], t[1])], v.tensor(c[t[0]], v.id(hh))), v.id(hh));
  });
  e.run("vopcat.counit-right", 2, n, [&](const std::vector<std::size_t>& t) {
    auto hh = homs[idx2(n, t[0], t[1])];
    return e.same(v.compose(d[idx3(n, t[0], t[1], t[1])], v.tensor(v.id(hh), c[t[1]])), v.id(hh));
  });
}

template <class V>
CheckReport check_frobenius_vcat(const V& v, const FrobVCat<V>& c) {
  using detail::idx2;
  using detail::idx3;
  const std::size_t n = c.n;
  if (c.homs.size() != n * n || c.m.size() != n * n * n || c.u.size() != n || c.comlt.size() != n * n * n ||
      c.couni.size() != n)
    throw Error(Errc::ShapeMismatch, "Frobenius V-category arrays have the wrong lengths");
  CheckReport r;
  check_vcat_laws(v, n, c.homs, c.m, c.u, r);
  check_vopcat_laws(v, n, c.homs, c.comlt, c.couni, r);
  detail::Equations<V> e{v, r};
  auto id = [&](std::size_t x, std::size_t y) { return v.id(c.homs[idx2(n, x, y)]); };
  // (x, y, z, w): A_{x,y} ⊗ A_{y,z} -> A_{x,w} ⊗ A_{w,z}
  e.run("frob.left", 4, n, [&](const std::vector<std::size_t>& t) {
    auto [x, y, z, w] = std::array<std::size_t, 4>{t[0], t[1], t[2], t[3]};
    auto mid = v.compose(c.m[idx3(n, x, y, z)], c.comlt[idx3(n, x, w, z)]);
    auto l = v.compose(v.tensor(c.comlt[idx3(n, x, w, y)], id(y, z)), v.tensor(id(x, w), c.m[idx3(n, w, y, z)]));
    return e.same(l, mid);
  });
  e.run("frob.right", 4, n, [&](const std::vector<std::size_t>& t) {
    auto [x, y, z, w] = std::array<std::size_t, 4>{t[0], t[1], t[2], t[3]};
    auto mid = v.compose(c.m[idx3(n, x, y, z)], c.comlt[idx3(n, x, w, z)]);
    auto rr = v.compose(v.tensor(id(x, y), c.comlt[idx3(n, y, w, z)]), v.tensor(c.m[idx3(n, x, y, w)], id(w, z)));
    return e.same(rr, mid);
  });
  return r;
}

// Functor between V-categories given by their (n, homs, m, u).
template <class V>
CheckReport check_vfunctor(const V& v, std::size_t n, const std::vector<typename V::Mor>& m,
                           const std::vector<typename V::Mor>& u, std::size_t n2,
                           const std::vector<typename V::Mor>& m2, const std::vector<typename V::Mor>& u2,
                           const VFunctorData<V>& f) {
  using detail::idx2;
  using detail::idx3;
  CheckReport r;
  detail::Equations<V> e{v, r};
  e.run("vfunctor.mult", 3, n, [&](const std::vector<std::size_t>& t) {
    auto [x, y, z] = std::array<std::size_t, 3>{t[0], t[1], t[2]};
    auto l = v.compose(m[idx3(n, x, y, z)], f.comp[idx2(n, x, z)]);
    auto rr = v.compose(v.tensor(f.comp[idx2(n, x, y)], f.comp[idx2(n, y, z)]), m2[idx3(n2, f.f(x), f.f(y), f.f(z))]);
    return e.same(l, rr);
  });
  e.run("vfunctor.unit", 1, n, [&](const std::vector<std::size_t>& t) {
    return e.same(v.compose(u[t[0]], f.comp[idx2(n, t[0], t[0])]), u2[f.f(t[0])]);
  });
  return r;
}

template <class V>
CheckReport check_frobenius_vfunctor(const V& v, const FrobVCat<V>& a, const FrobVCat<V>& b, const VFunctorData<V>& f) {
  using detail::idx2;
  using detail::idx3;
  CheckReport r = check_vfunctor(v, a.n, a.m, a.u, b.n, b.m, b.u, f);
  detail::Equations<V> e{v, r};
  const std::size_t n = a.n;
  e.run("vfunctor.comult", 3, n, [&](const std::vector<std::size_t>& t) {
    auto [x, y, z] = std::array<std::size_t, 3>{t[0], t[1], t[2]};
    auto l = v.compose(f.comp[idx2(n, x, z)], b.comlt[idx3(b.n, f.f(x), f.f(y), f.f(z))]);
    auto rr = v.compose(a.comlt[idx3(n, x, y, z)], v.tensor(f.comp[idx2(n, x, y)], f.comp[idx2(n, y, z)]));
    return e.same(l, rr);
  });
  e.run("vfunctor.counit", 1, n, [&](const std::vector<std::size_t>& t) {
    return e.same(v.compose(f.comp[idx2(n, t[0], t[0])], b.couni[f.f(t[0])]), a.couni[t[0]]);
  });
  return r;
}

// ---------------------------------------------------------------- generators

HopfVCat<FinSetBackend> groupoid_hopf_vcat(const GroupoidData& g);
HopfVCat<MatBackend> group_algebra_hopf(const MatBackend& v, std::size_t k);        // F_p[Z/k]
FrobVCat<MatBackend> group_algebra_frobenius(const MatBackend& v, std::size_t k);   // F_p[Z/k], ε(g) = δ_{g,e}
FrobVCat<MatBackend> mat_frobenius_example(const MatBackend& v, std::size_t max_n);

// ---------------------------------------------------------------- bridges

template <class V>
struct X2Cells {
  VFam<V> carrier;
  MonoidData<V> monoid;         // groupoid monoid with components m_{xyz}, u_x
  ComonoidData<V> comonoid;     // trivial comonoid with components δ_{xy}, ε_{xy}
};

template <class V>
struct HopfBridge {
  OplaxBimonoidData<V> bimonoid;
  std::optional<AntipodeData<V>> antipode;
};

template <class V>
class Bridge {
 public:
  using Obj = typename V::Obj;
  using Mor = typename V::Mor;

  explicit Bridge(const Structures<V>& st) : st_(st), sv_(st.sv()) {}

  VFam<V> graph(std::size_t n, const std::vector<Obj>& homs) const { return sv_.fam(x_power(n, 2), homs); }

  VCell1<V> multiplication(std::size_t n, const VFam<V>& h, const std::vector<Mor>& m) const {
    return sv_.make_cell(sv_.tensor(h, h), h, x2_mult_span(n), m);
  }
  VCell1<V> unit(std::size_t n, const VFam<V>& h, const std::vector<Mor>& u) const {
    return sv_.make_cell(sv_.unit_fam(), h, x2_unit_span(n), u);
  }
  VCell1<V> local_comult(std::size_t n, const VFam<V>& h, const std::vector<Mor>& d) const {
    return sv_.make_cell(h, sv_.tensor(h, h), x2_local_comult_span(n), d);
  }
  VCell1<V> local_counit(std::size_t n, const VFam<V>& h, const std::vector<Mor>& e) const {
    return sv_.make_cell(h, sv_.unit_fam(), x2_local_counit_span(n), e);
  }
  VCell1<V> cocomposition(std::size_t n, const VFam<V>& h, const std::vector<Mor>& d) const {
    return sv_.make_cell(h, sv_.tensor(h, h), x2_cocomposition_span(n), d);
  }
  VCell1<V> coidentity(std::size_t n, const VFam<V>& h, const std::vector<Mor>& e) const {
    return sv_.make_cell(h, sv_.unit_fam(), x2_coidentity_span(n), e);
  }
  VCell1<V> antipode_cell(std::size_t n, const VFam<V>& h, const std::vector<Mor>& s) const {
    return sv_.make_cell(h, h, x2_antipode_span(n), s);
  }

  // Structure cells are read off the legs; factorization is left to the checkers.
  HopfBridge<V> hopfcat_to_spanv(const HopfVCat<V>& h) const {
    VFam<V> g = graph(h.n, h.homs);
    MonoidData<V> mon{g, multiplication(h.n, g, h.m), unit(h.n, g, h.u)};
    ComonoidData<V> com{g, local_comult(h.n, g, h.delta), local_counit(h.n, g, h.eps)};
    HopfBridge<V> out{OplaxBimonoidData<V>{mon, com, {}, {}, {}, {}}, std::nullopt};
    auto& b = out.bimonoid;
    b.theta = leg_table(st_.theta_boundary(mon, com), "theta");
    b.theta0 = leg_table(st_.theta0_boundary(mon, com), "theta0");
    b.chi = leg_table(st_.chi_boundary(mon, com), "chi");
    b.chi0 = leg_table(st_.chi0_boundary(mon, com), "chi0");
    if (h.s) {
      AntipodeData<V> a{antipode_cell(h.n, g, *h.s), {}, {}};
      a.tau1 = leg_table(st_.tau1_boundary(b, a.s), "tau1");
      a.tau2 = leg_table(st_.tau2_boundary(b, a.s), "tau2");
      out.antipode = std::move(a);
    }
    return out;
  }

  HopfVCat<V> spanv_to_hopfcat(const OplaxBimonoidData<V>& b, const std::optional<AntipodeData<V>>& a) const {
    const VFam<V>& g = b.monoid.carrier;
    if (g.index.arity() != 2 || g.index.shape()[0] != g.index.shape()[1])
      throw Error(Errc::NotOverX2, "carrier is not indexed by X × X");
    const std::size_t n = g.index.shape()[0];
    HopfVCat<V> h;
    h.n = n;
    h.homs = g.objs;
    h.m = read_back(b.monoid.mlt, x2_mult_span(n), "multiplication");
    h.u = read_back(b.monoid.uni, x2_unit_span(n), "unit");
    h.delta = read_back(b.comonoid.lcm, x2_local_comult_span(n), "comultiplication");
    h.eps = read_back(b.comonoid.lcu, x2_local_counit_span(n), "counit");
    if (a) h.s = read_back(a->s, x2_antipode_span(n), "antipode");
    return h;
  }

  FrobeniusData<V> frobcat_to_spanv(const FrobVCat<V>& c) const {
    VFam<V> g = graph(c.n, c.homs);
    return FrobeniusData<V>{MonoidData<V>{g, multiplication(c.n, g, c.m), unit(c.n, g, c.u)},
                            vopcat_as_comonoid(c)};
  }
  FrobVCat<V> spanv_to_frobcat(const FrobeniusData<V>& d) const {
    const VFam<V>& g = d.monoid.carrier;
    if (g.index.arity() != 2 || g.index.shape()[0] != g.index.shape()[1])
      throw Error(Errc::NotOverX2, "carrier is not indexed by X × X");
    const std::size_t n = g.index.shape()[0];
    FrobVCat<V> c;
    c.n = n;
    c.homs = g.objs;
    c.m = read_back(d.monoid.mlt, x2_mult_span(n), "multiplication");
    c.u = read_back(d.monoid.uni, x2_unit_span(n), "unit");
    c.comlt = read_back(d.comonoid.lcm, x2_cocomposition_span(n), "cocomposition");
    c.couni = read_back(d.comonoid.lcu, x2_coidentity_span(n), "coidentity");
    return c;
  }
  ComonoidData<V> vopcat_as_comonoid(const FrobVCat<V>& c) const {
    VFam<V> g = graph(c.n, c.homs);
    return ComonoidData<V>{g, cocomposition(c.n, g, c.comlt), coidentity(c.n, g, c.couni)};
  }

  // ^id α^{f×f} with phi and phi0 read from the legs.
  struct FunctorBridge {
    MonoidData<V> src, tgt;
    OplaxMorphismData<V> morphism;
  };
  FunctorBridge vfunctor_to_spanv(std::size_t n, const std::vector<Obj>& homs, const std::vector<Mor>& m,
                                  const std::vector<Mor>& u, std::size_t n2, const std::vector<Obj>& homs2,
                                  const std::vector<Mor>& m2, const std::vector<Mor>& u2, const VFunctorData<V>& f) const {
    VFam<V> g = graph(n, homs), k = graph(n2, homs2);
    MonoidData<V> a{g, multiplication(n, g, m), unit(n, g, u)};
    MonoidData<V> b{k, multiplication(n2, k, m2), unit(n2, k, u2)};
    FinSet x2 = x_power(n, 2);
    FinFn ff = product_fn(f.f, f.f);
    if (!(ff.cod == x_power(n2, 2))) throw Error(Errc::ShapeMismatch, "object map has the wrong codomain");
    VCell1<V> cell = sv_.make_cell(g, k, make_span(x2, SubsetApex(x2), x_power(n2, 2), identity_fn(x2).table, ff.table),
                                   f.comp);
    OplaxMorphismData<V> d{cell, leg_table(st_.phi_boundary(a, b, cell), "phi"),
                           leg_table(st_.phi0_boundary(a, b, cell), "phi0"), {}, {}};
    return FunctorBridge{a, b, d};
  }

 private:
  CellTable leg_table(const BoundaryPair<V>& bp, const std::string& name) const {
    auto t = table_from_legs(bp.src, bp.tgt);
    if (!t) throw Error(Errc::BoundaryMismatch, "no map of spans for " + name);
    return *t;
  }

  // Components read from a cell whose span agrees with the generated template
  // up to relabeling of the apex.
  std::vector<Mor> read_back(const VCell1<V>& c, const Span& tmpl, const std::string& what) const {
    if (!(c.span.left == tmpl.left) || !(c.span.right == tmpl.right))
      throw Error(Errc::NotOverX2, what + ": feet differ from the X × X template");
    std::optional<SpanMap> w = spans_isomorphic(tmpl, c.span);
    if (!w) throw Error(Errc::NotOverX2, what + ": span differs from the X × X template");
    std::vector<Mor> out;
    for (std::size_t s = 0; s < tmpl.size(); ++s) out.push_back(c.alpha[w->u(s)]);
    return out;
  }

  const Structures<V>& st_;
  const SpanV<V>& sv_;
};

// Opposite V-category: H^op_{x,y} = H_{y,x}, composition through the braiding.
template <class V>
HopfVCat<V> opposite_vcat(const V& v, const HopfVCat<V>& h) {
  using detail::idx2;
  using detail::idx3;
  const std::size_t n = h.n;
  HopfVCat<V> o;
  o.n = n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) o.homs.push_back(h.homs[idx2(n, y, x)]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        o.m.push_back(v.compose(v.braiding(h.homs[idx2(n, y, x)], h.homs[idx2(n, z, y)]), h.m[idx3(n, z, y, x)]));
  o.u = h.u;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      o.delta.push_back(h.delta[idx2(n, y, x)]);
      o.eps.push_back(h.eps[idx2(n, y, x)]);
    }
  if (h.s) {
    std::vector<typename V::Mor> s;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) s.push_back((*h.s)[idx2(n, y, x)]);
    o.s = std::move(s);
  }
  return o;
}

extern template class Bridge<MatBackend>;
extern template class Bridge<FinSetBackend>;
extern template class Bridge<TrivialBackend>;

}  // namespace ohl
