#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ohl/spanv.hpp"

namespace ohl {

// Apex map of a 2-cell over the canonical enumeration of its canonically
// built source 1-cell.
using CellTable = std::vector<std::size_t>;

template <class V>
struct MonoidData {
  VFam<V> carrier;
  VCell1<V> mlt;  // A⊗A -> A
  VCell1<V> uni;  // I -> A
};

template <class V>
struct ComonoidData {
  VFam<V> carrier;
  VCell1<V> lcm;  // A -> A⊗A
  VCell1<V> lcu;  // A -> I
};

template <class V>
struct OplaxBimonoidData {
  MonoidData<V> monoid;
  ComonoidData<V> comonoid;
  CellTable theta, theta0, chi, chi0;
};

template <class V>
struct AntipodeData {
  VCell1<V> s;
  CellTable tau1, tau2;
};

template <class V>
struct FrobeniusData {
  MonoidData<V> monoid;
  ComonoidData<V> comonoid;
};

template <class V>
struct MoritaContextData {
  VCell1<V> p, q;
  VCell2<V> mu, tau;  // qp => 1, pq => 1
};

template <class V>
struct OplaxModuleData {
  VFam<V> carrier;
  VCell1<V> rho;  // X⊗M -> X
  CellTable xi, xi0;
};

template <class V>
struct OplaxMorphismData {
  VCell1<V> f;
  CellTable phi, phi0;  // monoid part
  CellTable psi, psi0;  // comonoid part (bimonoid morphisms only)
};

template <class V>
struct ModuleMorphismData {
  VCell1<V> f;     // X -> Y
  CellTable phi;   // rho_X ; f => (f⊗1) ; rho_Y
};

template <class V>
struct BoundaryPair {
  VCell1<V> src, tgt;
};

// Result of validating a table against its boundaries.
template <class V>
struct CheckedCell {
  std::optional<VCell2<V>> cell;
  std::optional<Counterexample> cex;
  bool ok() const { return cell.has_value(); }
};

// Which product a Morita context lives in.
enum class ContextProduct { bicategory, convolution };

template <class V>
class Structures {
 public:
  using SV = SpanV<V>;
  using Fam = VFam<V>;
  using Cell1 = VCell1<V>;
  using Cell2 = VCell2<V>;
  using Checked = CheckedCell<V>;
  using Monoid = MonoidData<V>;
  using Comonoid = ComonoidData<V>;
  using Bimonoid = OplaxBimonoidData<V>;

  // An oplax monoid morphism with possibly missing structure cells.
  struct OplaxMor {
    Monoid src, tgt;
    Cell1 f;
    std::optional<Cell2> phi, phi0;
  };

  // Context for Morita computations: a product on 1-cells and on 2-cells.
  struct Context {
    ContextProduct kind = ContextProduct::bicategory;
    std::optional<Bimonoid> bi;
  };

  explicit Structures(SV sv = SV{}) : sv_(std::move(sv)) {}
  const SV& sv() const { return sv_; }

  Checked checked(const Cell1& src, const Cell1& tgt, const CellTable& t, const std::string& name) const {
    if (auto bad = sv_.validate_2cell(src, tgt, t, name)) return Checked{std::nullopt, bad};
    return Checked{sv_.make_2cell(src, tgt, t), std::nullopt};
  }

  // ---- monoids
  Monoid unit_monoid() const {
    Fam i = sv_.unit_fam();
    return Monoid{i, sv_.identity(i), sv_.identity(i)};
  }
  Comonoid unit_comonoid() const {
    Fam i = sv_.unit_fam();
    return Comonoid{i, sv_.identity(i), sv_.identity(i)};
  }

  Monoid tensor_monoid(const Monoid& a, const Monoid& b) const {
    Cell1 perm = sv_.permutation({a.carrier, b.carrier, a.carrier, b.carrier}, {0, 2, 1, 3});
    return Monoid{sv_.tensor(a.carrier, b.carrier), sv_.compose(perm, sv_.tensor(a.mlt, b.mlt)),
                  sv_.tensor(a.uni, b.uni)};
  }
  Comonoid tensor_comonoid(const Comonoid& a, const Comonoid& b) const {
    Cell1 perm = sv_.permutation({a.carrier, a.carrier, b.carrier, b.carrier}, {0, 2, 1, 3});
    return Comonoid{sv_.tensor(a.carrier, b.carrier), sv_.compose(sv_.tensor(a.lcm, b.lcm), perm),
                    sv_.tensor(a.lcu, b.lcu)};
  }

  CheckReport check_strict_monoid(const Monoid& d, const std::string& prefix = "monoid") const {
    CheckReport r;
    Cell1 id = sv_.identity(d.carrier);
    r.add(prefix + ".assoc", shape_or_iso([&] { return sv_.compose(sv_.tensor(d.mlt, id), d.mlt); },
                                          [&] { return sv_.compose(sv_.tensor(id, d.mlt), d.mlt); }, prefix + ".assoc"));
    r.add(prefix + ".unit-left",
          shape_or_iso([&] { return sv_.compose(sv_.tensor(d.uni, id), d.mlt); }, [&] { return id; }, prefix + ".unit-left"));
    r.add(prefix + ".unit-right",
          shape_or_iso([&] { return sv_.compose(sv_.tensor(id, d.uni), d.mlt); }, [&] { return id; }, prefix + ".unit-right"));
    return r;
  }

  CheckReport check_strict_comonoid(const Comonoid& d, const std::string& prefix = "comonoid") const {
    CheckReport r;
    Cell1 id = sv_.identity(d.carrier);
    r.add(prefix + ".coassoc", shape_or_iso([&] { return sv_.compose(d.lcm, sv_.tensor(d.lcm, id)); },
                                            [&] { return sv_.compose(d.lcm, sv_.tensor(id, d.lcm)); }, prefix + ".coassoc"));
    r.add(prefix + ".counit-left", shape_or_iso([&] { return sv_.compose(d.lcm, sv_.tensor(d.lcu, id)); },
                                                [&] { return id; }, prefix + ".counit-left"));
    r.add(prefix + ".counit-right", shape_or_iso([&] { return sv_.compose(d.lcm, sv_.tensor(id, d.lcu)); },
                                                 [&] { return id; }, prefix + ".counit-right"));
    return r;
  }

  // ---- oplax morphisms
  BoundaryPair<V> phi_boundary(const Monoid& a, const Monoid& b, const Cell1& f) const {
    return {sv_.compose(a.mlt, f), sv_.compose(sv_.tensor(f, f), b.mlt)};
  }
  BoundaryPair<V> phi0_boundary(const Monoid& a, const Monoid& b, const Cell1& f) const {
    return {sv_.compose(a.uni, f), b.uni};
  }

  OplaxMor identity_oplax(const Monoid& a) const {
    Cell1 id = sv_.identity(a.carrier);
    return OplaxMor{a, a, id, sv_.id2(a.mlt), sv_.id2(a.uni)};
  }

  OplaxMor compose_oplax(const OplaxMor& p, const OplaxMor& q) const {
    OplaxMor out{p.src, q.tgt, sv_.compose(p.f, q.f), std::nullopt, std::nullopt};
    if (p.phi && q.phi)
      out.phi = sv_.vcomp(sv_.whisker_right(*p.phi, q.f), sv_.whisker_left(sv_.tensor(p.f, p.f), *q.phi));
    if (p.phi0 && q.phi0) out.phi0 = sv_.vcomp(sv_.whisker_right(*p.phi0, q.f), *q.phi0);
    return out;
  }

  OplaxMor tensor_oplax(const OplaxMor& p, const OplaxMor& q) const {
    Monoid s = tensor_monoid(p.src, q.src), t = tensor_monoid(p.tgt, q.tgt);
    OplaxMor out{s, t, sv_.tensor(p.f, q.f), std::nullopt, std::nullopt};
    if (p.phi && q.phi) {
      Cell1 perm = sv_.permutation({p.src.carrier, q.src.carrier, p.src.carrier, q.src.carrier}, {0, 2, 1, 3});
      out.phi = sv_.whisker_left(perm, sv_.tensor2(*p.phi, *q.phi));
    }
    if (p.phi0 && q.phi0) out.phi0 = sv_.tensor2(*p.phi0, *q.phi0);
    return out;
  }

  std::optional<Counterexample> oplax_assoc(const OplaxMor& p, const std::string& name) const {
    const Cell1 ida = sv_.identity(p.src.carrier);
    const Cell2 idf = sv_.id2(p.f);
    Cell2 l = sv_.vcomp(sv_.whisker_left(sv_.tensor(p.src.mlt, ida), *p.phi),
                        sv_.whisker_right(sv_.tensor2(*p.phi, idf), p.tgt.mlt));
    Cell2 r = sv_.vcomp(sv_.whisker_left(sv_.tensor(ida, p.src.mlt), *p.phi),
                        sv_.whisker_right(sv_.tensor2(idf, *p.phi), p.tgt.mlt));
    return sv_.compare(l, r, name);
  }

  std::optional<Counterexample> oplax_unit(const OplaxMor& p, const std::string& name) const {
    const Cell1 ida = sv_.identity(p.src.carrier);
    const Cell2 idf = sv_.id2(p.f);
    Cell2 l = sv_.vcomp(sv_.whisker_left(sv_.tensor(p.src.uni, ida), *p.phi),
                        sv_.whisker_right(sv_.tensor2(*p.phi0, idf), p.tgt.mlt));
    if (auto bad = sv_.compare(l, sv_.id2(p.f), name + ".left")) return bad;
    Cell2 r = sv_.vcomp(sv_.whisker_left(sv_.tensor(ida, p.src.uni), *p.phi),
                        sv_.whisker_right(sv_.tensor2(idf, *p.phi0), p.tgt.mlt));
    return sv_.compare(r, sv_.id2(p.f), name + ".right");
  }

  // alpha: P.f => Q.f is a monoidal 2-cell (multiplication part).
  std::optional<Counterexample> monoidal_mult(const OplaxMor& p, const OplaxMor& q, const Cell2& alpha,
                                              const std::string& name) const {
    Cell2 l = sv_.vcomp(*p.phi, sv_.hcomp(sv_.tensor2(alpha, alpha), sv_.id2(p.tgt.mlt)));
    Cell2 r = sv_.vcomp(sv_.hcomp(sv_.id2(p.src.mlt), alpha), *q.phi);
    return sv_.compare(l, r, name);
  }
  std::optional<Counterexample> monoidal_unit(const OplaxMor& p, const OplaxMor& q, const Cell2& alpha,
                                              const std::string& name) const {
    Cell2 r = sv_.vcomp(sv_.hcomp(sv_.id2(p.src.uni), alpha), *q.phi0);
    return sv_.compare(*p.phi0, r, name);
  }

  CheckReport check_oplax_monoid_morphism(const Monoid& a, const Monoid& b, const OplaxMorphismData<V>& d) const {
    CheckReport r;
    auto bp = phi_boundary(a, b, d.f);
    auto b0 = phi0_boundary(a, b, d.f);
    Checked phi = checked(bp.src, bp.tgt, d.phi, "phi");
    Checked phi0 = checked(b0.src, b0.tgt, d.phi0, "phi0");
    OplaxMor p{a, b, d.f, phi.cell, phi0.cell};
    r.add("morph.assoc", phi.ok() ? oplax_assoc(p, "morph.assoc") : phi.cex);
    r.add("morph.unit", !phi.ok() ? phi.cex : !phi0.ok() ? phi0.cex : oplax_unit(p, "morph.unit"));
    return r;
  }

  // ---- oplax bimonoids
  BoundaryPair<V> theta_boundary(const Monoid& m, const Comonoid& c) const {
    return {sv_.compose(m.mlt, c.lcm), sv_.compose(sv_.tensor(c.lcm, c.lcm), tensor_monoid(m, m).mlt)};
  }
  BoundaryPair<V> theta0_boundary(const Monoid& m, const Comonoid& c) const {
    return {sv_.compose(m.uni, c.lcm), sv_.tensor(m.uni, m.uni)};
  }
  BoundaryPair<V> chi_boundary(const Monoid& m, const Comonoid& c) const {
    return {sv_.compose(m.mlt, c.lcu), sv_.tensor(c.lcu, c.lcu)};
  }
  BoundaryPair<V> chi0_boundary(const Monoid& m, const Comonoid& c) const {
    return {sv_.compose(m.uni, c.lcu), sv_.identity(sv_.unit_fam())};
  }

  struct BimonoidCells {
    Checked theta, theta0, chi, chi0;
  };
  BimonoidCells cells(const Bimonoid& b) const {
    auto t = theta_boundary(b.monoid, b.comonoid), t0 = theta0_boundary(b.monoid, b.comonoid);
    auto c = chi_boundary(b.monoid, b.comonoid), c0 = chi0_boundary(b.monoid, b.comonoid);
    return {checked(t.src, t.tgt, b.theta, "theta"), checked(t0.src, t0.tgt, b.theta0, "theta0"),
            checked(c.src, c.tgt, b.chi, "chi"), checked(c0.src, c0.tgt, b.chi0, "chi0")};
  }

  OplaxMor comult_oplax(const Bimonoid& b, const BimonoidCells& c) const {
    return OplaxMor{b.monoid, tensor_monoid(b.monoid, b.monoid), b.comonoid.lcm, c.theta.cell, c.theta0.cell};
  }
  OplaxMor counit_oplax(const Bimonoid& b, const BimonoidCells& c) const {
    return OplaxMor{b.monoid, unit_monoid(), b.comonoid.lcu, c.chi.cell, c.chi0.cell};
  }

  // The unique structure cells when each target has a monic leg and the
  // induced map factorizes.
  std::optional<std::array<CellTable, 4>> infer_unique_structure_cells(const Monoid& m, const Comonoid& c) const {
    std::array<BoundaryPair<V>, 4> bs{theta_boundary(m, c), theta0_boundary(m, c), chi_boundary(m, c),
                                      chi0_boundary(m, c)};
    std::array<CellTable, 4> out;
    for (std::size_t k = 0; k < 4; ++k) {
      auto t = infer_cell(bs[k].src, bs[k].tgt);
      if (!t) return std::nullopt;
      out[k] = std::move(*t);
    }
    return out;
  }

  std::optional<CellTable> infer_cell(const Cell1& src, const Cell1& tgt) const {
    if (!has_monic_leg(tgt.span)) return std::nullopt;
    if (!(src.span.left == tgt.span.left) || !(src.span.right == tgt.span.right)) return std::nullopt;
    auto w = unique_map_to_monic(src.span, tgt.span);
    if (!w) return std::nullopt;
    if (sv_.validate_2cell(src, tgt, w->u.table, "inferred")) return std::nullopt;
    return w->u.table;
  }

  CheckReport check_oplax_bimonoid(const Bimonoid& b) const {
    CheckReport r;
    BimonoidCells c = cells(b);
    const OplaxMor dd = comult_oplax(b, c), ee = counit_oplax(b, c);
    const OplaxMor id = identity_oplax(b.monoid);
    auto need = [](std::initializer_list<const Checked*> xs) -> std::optional<Counterexample> {
      for (const Checked* x : xs)
        if (!x->ok()) return x->cex;
      return std::nullopt;
    };

    auto guarded = [&](const std::string& idn, std::initializer_list<const Checked*> deps,
                       const std::function<std::optional<Counterexample>()>& body) {
      if (auto bad = need(deps)) {
        r.add(idn, bad, "structure cell invalid");
        return;
      }
      try {
        r.add(idn, body());
      } catch (const Error& e) {
        r.add(idn, Counterexample{idn, {}, e.what()});
      }
    };

    guarded("ax1", {&c.theta}, [&] { return oplax_assoc(dd, "ax1"); });
    guarded("ax2", {&c.theta, &c.theta0}, [&] { return oplax_unit(dd, "ax2"); });
    guarded("ax3", {&c.chi}, [&] { return oplax_assoc(ee, "ax3"); });
    guarded("ax4", {&c.chi, &c.chi0}, [&] { return oplax_unit(ee, "ax4"); });

    // coassociativity as a monoidal 2-cell
    auto coassoc = [&](bool mult, const std::string& name) -> std::optional<Counterexample> {
      OplaxMor p = compose_oplax(dd, tensor_oplax(dd, id));
      OplaxMor q = compose_oplax(dd, tensor_oplax(id, dd));
      auto alpha = sv_.cells_isomorphic(p.f, q.f);
      if (!alpha) return sv_.iso_failure(p.f, q.f, name);
      return mult ? monoidal_mult(p, q, *alpha, name) : monoidal_unit(p, q, *alpha, name);
    };
    guarded("ax5", {&c.theta}, [&] { return coassoc(true, "ax5"); });
    guarded("ax6", {&c.theta0}, [&] { return coassoc(false, "ax6"); });

    // counit laws as monoidal 2-cells
    auto counit = [&](bool right, bool mult, const std::string& name) -> std::optional<Counterexample> {
      OplaxMor p = compose_oplax(dd, right ? tensor_oplax(id, ee) : tensor_oplax(ee, id));
      auto alpha = sv_.cells_isomorphic(p.f, id.f);
      if (!alpha) return sv_.iso_failure(p.f, id.f, name);
      return mult ? monoidal_mult(p, id, *alpha, name) : monoidal_unit(p, id, *alpha, name);
    };
    guarded("ax7", {&c.theta, &c.chi}, [&] { return counit(true, true, "ax7"); });
    guarded("ax8", {&c.theta0, &c.chi0}, [&] { return counit(true, false, "ax8"); });
    guarded("ax9", {&c.theta, &c.chi}, [&] { return counit(false, true, "ax9"); });
    guarded("ax10", {&c.theta0, &c.chi0}, [&] { return counit(false, false, "ax10"); });
    return r;
  }

  CheckReport check_oplax_bimonoid_morphism(const Bimonoid& a, const Bimonoid& b, const OplaxMorphismData<V>& d) const {
    CheckReport r = check_oplax_monoid_morphism(a.monoid, b.monoid, d);
    auto bp = phi_boundary(a.monoid, b.monoid, d.f);
    auto b0 = phi0_boundary(a.monoid, b.monoid, d.f);
    Checked phi = checked(bp.src, bp.tgt, d.phi, "phi");
    Checked phi0 = checked(b0.src, b0.tgt, d.phi0, "phi0");
    OplaxMor ff{a.monoid, b.monoid, d.f, phi.cell, phi0.cell};
    auto ps = psi_boundary(a, b, d.f), ps0 = psi0_boundary(a, b, d.f);
    Checked psi = checked(ps.src, ps.tgt, d.psi, "psi");
    Checked psi0 = checked(ps0.src, ps0.tgt, d.psi0, "psi0");
    BimonoidCells ca = cells(a), cb = cells(b);
    auto run = [&](const std::string& idn, std::initializer_list<const Checked*> deps,
                   const std::function<std::optional<Counterexample>()>& body) {
      for (const Checked* x : deps)
        if (!x->ok()) {
          r.add(idn, x->cex, "structure cell invalid");
          return;
        }
      r.add(idn, body());
    };
    run("bimorph.psi-mult", {&phi, &psi, &ca.theta, &cb.theta}, [&] {
      OplaxMor p = compose_oplax(comult_oplax(a, ca), tensor_oplax(ff, ff));
      OplaxMor q = compose_oplax(ff, comult_oplax(b, cb));
      return monoidal_mult(p, q, *psi.cell, "bimorph.psi-mult");
    });
    run("bimorph.psi-unit", {&phi0, &psi, &ca.theta0, &cb.theta0}, [&] {
      OplaxMor p = compose_oplax(comult_oplax(a, ca), tensor_oplax(ff, ff));
      OplaxMor q = compose_oplax(ff, comult_oplax(b, cb));
      return monoidal_unit(p, q, *psi.cell, "bimorph.psi-unit");
    });
    run("bimorph.psi0-mult", {&phi, &psi0, &ca.chi, &cb.chi}, [&] {
      OplaxMor q = compose_oplax(ff, counit_oplax(b, cb));
      return monoidal_mult(counit_oplax(a, ca), q, *psi0.cell, "bimorph.psi0-mult");
    });
    run("bimorph.psi0-unit", {&phi0, &psi0, &ca.chi0, &cb.chi0}, [&] {
      OplaxMor q = compose_oplax(ff, counit_oplax(b, cb));
      return monoidal_unit(counit_oplax(a, ca), q, *psi0.cell, "bimorph.psi0-unit");
    });
    return r;
  }

  BoundaryPair<V> psi_boundary(const Bimonoid& a, const Bimonoid& b, const Cell1& f) const {
    return {sv_.compose(a.comonoid.lcm, sv_.tensor(f, f)), sv_.compose(f, b.comonoid.lcm)};
  }
  BoundaryPair<V> psi0_boundary(const Bimonoid& a, const Bimonoid& b, const Cell1& f) const {
    return {a.comonoid.lcu, sv_.compose(f, b.comonoid.lcu)};
  }

  // ---- convolution
  Cell1 convolution(const Comonoid& c, const Monoid& m, const Cell1& f, const Cell1& g) const {
    return sv_.compose_all({c.lcm, sv_.tensor(f, g), m.mlt});
  }
  Cell1 convolution_unit(const Comonoid& c, const Monoid& m) const { return sv_.compose(c.lcu, m.uni); }
  Cell2 convolution2(const Comonoid& c, const Monoid& m, const Cell2& a, const Cell2& b) const {
    return sv_.hcomp(sv_.hcomp(sv_.id2(c.lcm), sv_.tensor2(a, b)), sv_.id2(m.mlt));
  }

  Context bicategory() const { return Context{}; }
  Context convolution_context(const Bimonoid& b) const { return Context{ContextProduct::convolution, b}; }

  Cell1 product(const Context& k, const Cell1& a, const Cell1& b) const {
    if (k.kind == ContextProduct::bicategory) return sv_.compose(b, a);
    return convolution(k.bi->comonoid, k.bi->monoid, a, b);
  }
  Cell2 product2(const Context& k, const Cell2& a, const Cell2& b) const {
    if (k.kind == ContextProduct::bicategory) return sv_.hcomp(b, a);
    return convolution2(k.bi->comonoid, k.bi->monoid, a, b);
  }

  // ---- Morita contexts
  struct MoritaAnalysis {
    CheckReport report;
    std::optional<Cell2> alpha, beta;  // p => pqp, q => qpq
  };

  MoritaAnalysis analyze_morita(const Context& k, const MoritaContextData<V>& ctx) const {
    MoritaAnalysis out;
    CheckReport& r = out.report;
    const Cell2 idp = sv_.id2(ctx.p), idq = sv_.id2(ctx.q);
    auto safe = [&](const std::string& idn, const std::function<std::optional<Counterexample>()>& body) {
      try {
        r.add(idn, body());
      } catch (const Error& e) {
        r.add(idn, Counterexample{idn, {}, e.what()});
      }
    };
    const Cell2 p_mu = product2(k, idp, ctx.mu), tau_p = product2(k, ctx.tau, idp);
    const Cell2 q_tau = product2(k, idq, ctx.tau), mu_q = product2(k, ctx.mu, idq);
    safe("morita.axiom-p", [&] { return sv_.compare(p_mu, tau_p, "morita.axiom-p"); });
    safe("morita.axiom-q", [&] { return sv_.compare(q_tau, mu_q, "morita.axiom-q"); });
    auto firm = [&](const Cell2& c, const std::string& idn) -> std::optional<Counterexample> {
      if (c.u.bijective()) return std::nullopt;
      if (!c.u.injective()) {
        for (std::size_t s = 0; s < c.u.dom.size(); ++s)
          for (std::size_t t = s + 1; t < c.u.dom.size(); ++t)
            if (c.u(s) == c.u(t))
              return Counterexample{idn, c.src->span.apex.decoded(t),
                                    "identified with " + tuple_str(c.src->span.apex.decoded(s))};
      }
      std::vector<bool> hit(c.u.cod.size(), false);
      for (std::size_t x : c.u.table) hit[x] = true;
      for (std::size_t t = 0; t < hit.size(); ++t)
        if (!hit[t]) return Counterexample{idn + ".target", c.tgt->span.apex.decoded(t), "not in the image"};
      return Counterexample{idn, {}, "not invertible"};
    };
    r.add("firm.p-mu", firm(p_mu, "firm.p-mu"));
    r.add("firm.tau-p", firm(tau_p, "firm.tau-p"));
    r.add("firm.q-tau", firm(q_tau, "firm.q-tau"));
    r.add("firm.mu-q", firm(mu_q, "firm.mu-q"));
    if (!r.passed()) return out;

    try {
      out.alpha = sv_.invert(sv_.retarget(p_mu, ctx.p));
      out.beta = sv_.invert(sv_.retarget(q_tau, ctx.q));
    } catch (const Error& e) {
      r.add("firm.unitors", Counterexample{"firm.unitors", {}, e.what()});
      return out;
    }
    const Cell2& alpha = *out.alpha;
    const Cell2& beta = *out.beta;
    safe("lemma.i", [&] { return sv_.compare(product2(k, idq, alpha), product2(k, beta, idp), "lemma.i"); });
    safe("lemma.ii", [&] { return sv_.compare(product2(k, alpha, idq), product2(k, idp, beta), "lemma.ii"); });
    safe("lemma.iii", [&] {
      Cell2 l = sv_.vcomp(alpha, product2(k, alpha, sv_.id2(product(k, ctx.q, ctx.p))));
      Cell2 rr = sv_.vcomp(alpha, product2(k, sv_.id2(product(k, ctx.p, ctx.q)), alpha));
      return sv_.compare(l, rr, "lemma.iii");
    });
    return out;
  }

  CheckReport check_oplax_inverse(const Context& k, const MoritaContextData<V>& ctx) const {
    return analyze_morita(k, ctx).report;
  }

  // phi: q => q' and psi: q' => q from two firm contexts sharing p.
  struct UniquenessIso {
    Cell2 phi, psi;
    std::optional<Counterexample> psi_phi, phi_psi;
    bool ok() const { return !psi_phi && !phi_psi; }
  };

  UniquenessIso morita_uniqueness_iso(const Context& k, const MoritaContextData<V>& c1,
                                      const MoritaContextData<V>& c2) const {
    MoritaAnalysis a1 = analyze_morita(k, c1), a2 = analyze_morita(k, c2);
    if (!a1.report.passed() || !a2.report.passed())
      throw Error(Errc::NotFirm, "uniqueness needs two firm contexts");
    auto build = [&](const MoritaContextData<V>& x, const MoritaAnalysis& ax, const MoritaContextData<V>& y,
                     const MoritaAnalysis& ay) {
      const Cell2 idq = sv_.id2(x.q);
      Cell2 mid = product2(k, product2(k, idq, *ay.alpha), idq);
      Cell2 last = product2(k, product2(k, x.mu, sv_.id2(y.q)), y.tau);
      return sv_.retarget(sv_.vcomp_all({*ax.beta, mid, last}), y.q);
    };
    UniquenessIso out{build(c1, a1, c2, a2), build(c2, a2, c1, a1), std::nullopt, std::nullopt};
    out.psi_phi = sv_.compare(sv_.vcomp(out.phi, out.psi), sv_.id2(c1.q), "uniqueness.psi-phi");
    out.phi_psi = sv_.compare(sv_.vcomp(out.psi, out.phi), sv_.id2(c2.q), "uniqueness.phi-psi");
    return out;
  }

  // ---- antipodes
  BoundaryPair<V> tau1_boundary(const Bimonoid& b, const Cell1& s) const {
    return {convolution(b.comonoid, b.monoid, sv_.identity(b.monoid.carrier), s),
            convolution_unit(b.comonoid, b.monoid)};
  }
  BoundaryPair<V> tau2_boundary(const Bimonoid& b, const Cell1& s) const {
    return {convolution(b.comonoid, b.monoid, s, sv_.identity(b.monoid.carrier)),
            convolution_unit(b.comonoid, b.monoid)};
  }

  std::optional<MoritaContextData<V>> antipode_context(const Bimonoid& b, const AntipodeData<V>& a,
                                                       CheckReport* r = nullptr) const {
    auto b1 = tau1_boundary(b, a.s), b2 = tau2_boundary(b, a.s);
    Checked t1 = checked(b1.src, b1.tgt, a.tau1, "tau1");
    Checked t2 = checked(b2.src, b2.tgt, a.tau2, "tau2");
    if (r) {
      r->add("antipode.tau1", t1.cex);
      r->add("antipode.tau2", t2.cex);
    }
    if (!t1.ok() || !t2.ok()) return std::nullopt;
    return MoritaContextData<V>{sv_.identity(b.monoid.carrier), a.s, *t2.cell, *t1.cell};
  }

  CheckReport check_oplax_hopf(const Bimonoid& b, const AntipodeData<V>& a) const {
    CheckReport r;
    auto ctx = antipode_context(b, a, &r);
    if (!ctx) return r;
    r.append(check_oplax_inverse(convolution_context(b), *ctx));
    return r;
  }

  // ---- fusion
  Cell1 fusion_cell(const Bimonoid& b) const {
    Cell1 id = sv_.identity(b.monoid.carrier);
    return sv_.compose(sv_.tensor(id, b.comonoid.lcm), sv_.tensor(b.monoid.mlt, id));
  }

  CheckReport check_bimodule_endo(const Bimonoid& b, const Cell1& g, const std::string& prefix) const {
    CheckReport r;
    Cell1 id = sv_.identity(b.monoid.carrier);
    Cell1 act = sv_.tensor(b.monoid.mlt, id);
    Cell1 coact = sv_.tensor(id, b.comonoid.lcm);
    r.add(prefix + ".linear", shape_or_iso([&] { return sv_.compose(sv_.tensor(id, g), act); },
                                           [&] { return sv_.compose(act, g); }, prefix + ".linear"));
    r.add(prefix + ".colinear", shape_or_iso([&] { return sv_.compose(g, coact); },
                                             [&] { return sv_.compose(coact, sv_.tensor(g, id)); }, prefix + ".colinear"));
    return r;
  }

  CheckReport check_fusion_inverse(const Bimonoid& b, const Cell1& candidate) const {
    CheckReport r = check_bimodule_endo(b, candidate, "bimodule");
    if (!r.passed()) return r;
    Cell1 c = fusion_cell(b);
    Cell1 one = sv_.identity(c.dom);
    auto mu = infer_cell(sv_.compose(c, candidate), one);
    auto tau = infer_cell(sv_.compose(candidate, c), one);
    r.add("fusion.mu", mu ? std::nullopt
                          : std::optional<Counterexample>(Counterexample{"fusion.mu", {}, "no 2-cell into the identity"}));
    r.add("fusion.tau", tau ? std::nullopt
                            : std::optional<Counterexample>(Counterexample{"fusion.tau", {}, "no 2-cell into the identity"}));
    if (!mu || !tau) return r;
    MoritaContextData<V> ctx{c, candidate, sv_.make_2cell(sv_.compose(c, candidate), one, *mu),
                             sv_.make_2cell(sv_.compose(candidate, c), one, *tau)};
    r.append(check_oplax_inverse(bicategory(), ctx));
    return r;
  }

  // F(f) = (1⊗δ);(1⊗f⊗1);(m⊗1) and G(g) = (j⊗1);g;(1⊗ε)
  Cell1 convolution_to_endo(const Bimonoid& b, const Cell1& f) const {
    Cell1 id = sv_.identity(b.monoid.carrier);
    return sv_.compose_all(
        {sv_.tensor(id, b.comonoid.lcm), sv_.tensor_all({id, f, id}), sv_.tensor(b.monoid.mlt, id)});
  }
  Cell1 endo_to_convolution(const Bimonoid& b, const Cell1& g) const {
    if (!check_bimodule_endo(b, g, "endo").passed())
      throw Error(Errc::NotBimodule, "not a bimodule-bicomodule endomorphism");
    Cell1 id = sv_.identity(b.monoid.carrier);
    return sv_.compose_all({sv_.tensor(b.monoid.uni, id), g, sv_.tensor(id, b.comonoid.lcu)});
  }

  // ---- Frobenius
  struct FrobeniusResult {
    CheckReport report;
    std::optional<Cell2> witness_left, witness_right;  // (δ⊗1);(1⊗m) => m;δ, (1⊗δ);(m⊗1) => m;δ
  };
  FrobeniusResult analyze_frobenius(const FrobeniusData<V>& d) const {
    FrobeniusResult out;
    Cell1 id = sv_.identity(d.monoid.carrier);
    Cell1 mid = sv_.compose(d.monoid.mlt, d.comonoid.lcm);
    Cell1 l = sv_.compose(sv_.tensor(d.comonoid.lcm, id), sv_.tensor(id, d.monoid.mlt));
    Cell1 r = sv_.compose(sv_.tensor(id, d.comonoid.lcm), sv_.tensor(d.monoid.mlt, id));
    out.witness_left = sv_.cells_isomorphic(l, mid);
    out.witness_right = sv_.cells_isomorphic(r, mid);
    out.report.add("frobenius.left", out.witness_left ? std::nullopt : sv_.iso_failure(l, mid, "frobenius.left"));
    out.report.add("frobenius.right", out.witness_right ? std::nullopt : sv_.iso_failure(r, mid, "frobenius.right"));
    return out;
  }
  CheckReport check_frobenius(const FrobeniusData<V>& d) const { return analyze_frobenius(d).report; }

  // ---- oplax modules
  BoundaryPair<V> xi_boundary(const Monoid& m, const Fam& x, const Cell1& rho) const {
    Cell1 idx = sv_.identity(x), idm = sv_.identity(m.carrier);
    return {sv_.compose(sv_.tensor(idx, m.mlt), rho), sv_.compose(sv_.tensor(rho, idm), rho)};
  }
  BoundaryPair<V> xi0_boundary(const Monoid& m, const Fam& x, const Cell1& rho) const {
    return {sv_.compose(sv_.tensor(sv_.identity(x), m.uni), rho), sv_.identity(x)};
  }

  CheckReport check_oplax_module(const OplaxModuleData<V>& mod, const Monoid& m, const std::string& prefix = "module") const {
    CheckReport r;
    auto bx = xi_boundary(m, mod.carrier, mod.rho), bx0 = xi0_boundary(m, mod.carrier, mod.rho);
    Checked xi = checked(bx.src, bx.tgt, mod.xi, "xi"), xi0 = checked(bx0.src, bx0.tgt, mod.xi0, "xi0");
    const Cell1 idx = sv_.identity(mod.carrier), idm = sv_.identity(m.carrier);
    if (!xi.ok()) {
      r.add(prefix + ".assoc", xi.cex, "structure cell invalid");
    } else {
      Cell2 l = sv_.vcomp(sv_.whisker_left(sv_.tensor_all({idx, m.mlt, idm}), *xi.cell),
                          sv_.whisker_right(sv_.tensor2(*xi.cell, sv_.id2(idm)), mod.rho));
      Cell2 rr = sv_.vcomp(sv_.whisker_left(sv_.tensor_all({idx, idm, m.mlt}), *xi.cell),
                           sv_.whisker_left(sv_.tensor_all({mod.rho, idm, idm}), *xi.cell));
      r.add(prefix + ".assoc", sv_.compare(l, rr, prefix + ".assoc"));
    }
    if (!xi.ok() || !xi0.ok()) {
      r.add(prefix + ".unit", xi.ok() ? xi0.cex : xi.cex, "structure cell invalid");
    } else {
      Cell2 l = sv_.vcomp(sv_.whisker_left(sv_.tensor_all({idx, m.uni, idm}), *xi.cell),
                          sv_.whisker_right(sv_.tensor2(*xi0.cell, sv_.id2(idm)), mod.rho));
      r.add(prefix + ".unit", sv_.compare(l, sv_.id2(mod.rho), prefix + ".unit"));
    }
    return r;
  }

  // Table of the canonical isomorphism between two 1-cells.
  CellTable coherence_table(const Cell1& a, const Cell1& b) const { return sv_.coherence(a, b).u.table; }

  OplaxModuleData<V> regular_module(const Monoid& m) const {
    OplaxModuleData<V> out{m.carrier, m.mlt, {}, {}};
    auto bx = xi_boundary(m, m.carrier, m.mlt), bx0 = xi0_boundary(m, m.carrier, m.mlt);
    out.xi = coherence_table(bx.src, bx.tgt);
    out.xi0 = coherence_table(bx0.src, bx0.tgt);
    return out;
  }

  OplaxModuleData<V> unit_module(const Bimonoid& b) const {
    BimonoidCells c = cells(b);
    if (!c.chi.ok() || !c.chi0.ok()) throw Error(Errc::BoundaryMismatch, "invalid chi or chi0");
    Fam i = sv_.unit_fam();
    OplaxModuleData<V> out{i, b.comonoid.lcu, {}, {}};
    auto bx = xi_boundary(b.monoid, i, out.rho), bx0 = xi0_boundary(b.monoid, i, out.rho);
    out.xi = sv_.retarget(sv_.resource(bx.src, *c.chi.cell), bx.tgt).u.table;
    out.xi0 = sv_.retarget(sv_.resource(bx0.src, *c.chi0.cell), bx0.tgt).u.table;
    return out;
  }

  // rho_XY = (1⊗1⊗δ);(1⊗σ_{Y,M}⊗1);(rho_X⊗rho_Y)
  Cell1 tensor_action(const Bimonoid& b, const OplaxModuleData<V>& x, const OplaxModuleData<V>& y) const {
    const Fam& m = b.monoid.carrier;
    Cell1 idx = sv_.identity(x.carrier), idy = sv_.identity(y.carrier), idm = sv_.identity(m);
    return sv_.compose_all({sv_.tensor_all({idx, idy, b.comonoid.lcm}),
                            sv_.tensor_all({idx, sv_.braiding(y.carrier, m), idm}), sv_.tensor(x.rho, y.rho)});
  }

  OplaxModuleData<V> tensor_modules(const Bimonoid& b, const OplaxModuleData<V>& x, const OplaxModuleData<V>& y) const {
    BimonoidCells c = cells(b);
    const Monoid& mon = b.monoid;
    const Fam& m = mon.carrier;
    Cell1 rho = tensor_action(b, x, y);
    Fam xy = sv_.tensor(x.carrier, y.carrier);
    OplaxModuleData<V> out{xy, rho, {}, {}};
    auto bx = xi_boundary(mon, xy, rho), bx0 = xi0_boundary(mon, xy, rho);
    auto ax = xi_boundary(mon, x.carrier, x.rho), ax0 = xi0_boundary(mon, x.carrier, x.rho);
    auto ay = xi_boundary(mon, y.carrier, y.rho), ay0 = xi0_boundary(mon, y.carrier, y.rho);
    Cell2 xix = sv_.make_2cell(ax.src, ax.tgt, x.xi), xiy = sv_.make_2cell(ay.src, ay.tgt, y.xi);
    Cell2 xi0x = sv_.make_2cell(ax0.src, ax0.tgt, x.xi0), xi0y = sv_.make_2cell(ay0.src, ay0.tgt, y.xi0);
    if (!c.theta.ok() || !c.theta0.ok()) throw Error(Errc::BoundaryMismatch, "invalid theta or theta0");
    Cell1 idxy = sv_.identity(xy);
    Cell1 shuffle_act = sv_.compose(sv_.tensor_all({sv_.identity(x.carrier), sv_.braiding(y.carrier, m), sv_.identity(m)}),
                                    sv_.tensor(x.rho, y.rho));
    // multiplication part: theta, then the two actions separately
    Cell2 s1 = sv_.hcomp(sv_.tensor2(sv_.id2(idxy), *c.theta.cell), sv_.id2(shuffle_act));
    Cell1 pre = sv_.compose(sv_.tensor_all({idxy, b.comonoid.lcm, b.comonoid.lcm}),
                            sv_.permutation({x.carrier, y.carrier, m, m, m, m}, {0, 2, 4, 1, 3, 5}));
    Cell2 s2 = sv_.whisker_left(pre, sv_.tensor2(xix, xiy));
    out.xi = sv_.retarget(sv_.resource(bx.src, sv_.vcomp(s1, s2)), bx.tgt).u.table;
    Cell2 t1 = sv_.hcomp(sv_.tensor2(sv_.id2(idxy), *c.theta0.cell), sv_.id2(shuffle_act));
    Cell2 t2 = sv_.tensor2(xi0x, xi0y);
    out.xi0 = sv_.retarget(sv_.resource(bx0.src, sv_.vcomp(t1, t2)), bx0.tgt).u.table;
    return out;
  }

  BoundaryPair<V> module_morphism_boundary(const Monoid& m, const OplaxModuleData<V>& x, const OplaxModuleData<V>& y,
                                           const Cell1& f) const {
    return {sv_.compose(x.rho, f), sv_.compose(sv_.tensor(f, sv_.identity(m.carrier)), y.rho)};
  }

  CheckReport check_module_morphism(const Monoid& m, const OplaxModuleData<V>& x, const OplaxModuleData<V>& y,
                                    const ModuleMorphismData<V>& d) const {
    CheckReport r;
    auto bd = module_morphism_boundary(m, x, y, d.f);
    Checked phi = checked(bd.src, bd.tgt, d.phi, "phi");
    auto ax = xi_boundary(m, x.carrier, x.rho), ax0 = xi0_boundary(m, x.carrier, x.rho);
    auto ay = xi_boundary(m, y.carrier, y.rho), ay0 = xi0_boundary(m, y.carrier, y.rho);
    Checked xi = checked(ax.src, ax.tgt, x.xi, "xi_X"), zeta = checked(ay.src, ay.tgt, y.xi, "xi_Y");
    Checked xi0 = checked(ax0.src, ax0.tgt, x.xi0, "xi0_X"), zeta0 = checked(ay0.src, ay0.tgt, y.xi0, "xi0_Y");
    const Cell1 idx = sv_.identity(x.carrier), idm = sv_.identity(m.carrier);
    for (const Checked* c : {&phi, &xi, &zeta})
      if (!c->ok()) {
        r.add("modmorph.assoc", c->cex, "structure cell invalid");
        break;
      }
    if (!r.find("modmorph.assoc")) {
      Cell2 l = sv_.vcomp_all({sv_.whisker_right(*xi.cell, d.f), sv_.whisker_left(sv_.tensor(x.rho, idm), *phi.cell),
                               sv_.whisker_right(sv_.tensor2(*phi.cell, sv_.id2(idm)), y.rho)});
      Cell2 rr = sv_.vcomp(sv_.whisker_left(sv_.tensor(idx, m.mlt), *phi.cell),
                           sv_.whisker_left(sv_.tensor_all({d.f, idm, idm}), *zeta.cell));
      r.add("modmorph.assoc", sv_.compare(l, rr, "modmorph.assoc"));
    }
    for (const Checked* c : {&phi, &xi0, &zeta0})
      if (!c->ok()) {
        r.add("modmorph.unit", c->cex, "structure cell invalid");
        break;
      }
    if (!r.find("modmorph.unit")) {
      Cell2 l = sv_.vcomp(sv_.whisker_left(sv_.tensor(idx, m.uni), *phi.cell), sv_.whisker_left(d.f, *zeta0.cell));
      r.add("modmorph.unit", sv_.compare(l, sv_.whisker_right(*xi0.cell, d.f), "modmorph.unit"));
    }
    return r;
  }

  // alpha: f => g between module morphisms (f, phi) and (g, psi)
  CheckReport check_module_transformation(const Monoid& m, const OplaxModuleData<V>& x, const OplaxModuleData<V>& y,
                                          const ModuleMorphismData<V>& f, const ModuleMorphismData<V>& g,
                                          const Cell2& alpha) const {
    CheckReport r;
    auto bf = module_morphism_boundary(m, x, y, f.f), bg = module_morphism_boundary(m, x, y, g.f);
    Checked phi = checked(bf.src, bf.tgt, f.phi, "phi"), psi = checked(bg.src, bg.tgt, g.phi, "psi");
    if (!phi.ok() || !psi.ok()) {
      r.add("modtrans", phi.ok() ? psi.cex : phi.cex, "structure cell invalid");
      return r;
    }
    Cell2 l = sv_.vcomp(*phi.cell, sv_.whisker_right(sv_.tensor2(alpha, sv_.id2(sv_.identity(m.carrier))), y.rho));
    Cell2 rr = sv_.vcomp(sv_.whisker_left(x.rho, alpha), *psi.cell);
    r.add("modtrans", sv_.compare(l, rr, "modtrans"));
    return r;
  }

  ModuleMorphismData<V> tensor_module_morphisms(const Bimonoid& b, const OplaxModuleData<V>& x,
                                                const OplaxModuleData<V>& x2, const ModuleMorphismData<V>& f,
                                                const OplaxModuleData<V>& y, const OplaxModuleData<V>& y2,
                                                const ModuleMorphismData<V>& g) const {
    const Monoid& mon = b.monoid;
    const Fam& m = mon.carrier;
    auto bf = module_morphism_boundary(mon, x, x2, f.f), bg = module_morphism_boundary(mon, y, y2, g.f);
    Cell2 phi = sv_.make_2cell(bf.src, bf.tgt, f.phi), psi = sv_.make_2cell(bg.src, bg.tgt, g.phi);
    Cell1 ff = sv_.tensor(f.f, g.f);
    Cell1 pre = sv_.compose(sv_.tensor_all({sv_.identity(x.carrier), sv_.identity(y.carrier), b.comonoid.lcm}),
                            sv_.tensor_all({sv_.identity(x.carrier), sv_.braiding(y.carrier, m), sv_.identity(m)}));
    Cell2 t = sv_.whisker_left(pre, sv_.tensor2(phi, psi));
    auto bd = module_morphism_boundary(mon, tensor_modules(b, x, y), tensor_modules(b, x2, y2), ff);
    return ModuleMorphismData<V>{ff, sv_.retarget(sv_.resource(bd.src, t), bd.tgt).u.table};
  }

  bool is_strict_module_morphism(const Monoid& m, const OplaxModuleData<V>& x, const OplaxModuleData<V>& y,
                                 const ModuleMorphismData<V>& d) const {
    auto bd = module_morphism_boundary(m, x, y, d.f);
    auto iso = sv_.cells_isomorphic(bd.src, bd.tgt);
    if (!iso || sv_.validate_2cell(bd.src, bd.tgt, d.phi, "phi")) return false;
    return sv_.equal(sv_.make_2cell(bd.src, bd.tgt, d.phi), *iso);
  }

 private:
  template <class L, class R>
  std::optional<Counterexample> shape_or_iso(L lhs, R rhs, const std::string& name) const {
    try {
      Cell1 a = lhs(), b = rhs();
      return sv_.iso_failure(a, b, name);
    } catch (const Error& e) {
      return Counterexample{name, {}, e.what()};
    }
  }

  SV sv_;
};

extern template class Structures<MatBackend>;
extern template class Structures<FinSetBackend>;
extern template class Structures<TrivialBackend>;

}  // namespace ohl
