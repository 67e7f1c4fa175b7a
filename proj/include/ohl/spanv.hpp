#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ohl/report.hpp"
#include "ohl/span.hpp"
#include "ohl/vbackend.hpp"

namespace ohl {

// 0-cell of Span|V: a family of V-objects indexed by a finite set.
template <class V>
struct VFam {
  FinSet index;
  std::vector<typename V::Obj> objs;
};

// 1-cell: a span of index sets with one V-morphism per apex element,
// alpha[s]: M_{f s} -> N_{g s}.
template <class V>
struct VCell1 {
  VFam<V> dom;
  VFam<V> cod;
  Span span;
  std::vector<typename V::Mor> alpha;

  bool identity() const { return span.identity; }
  std::size_t size() const { return span.size(); }
};

// 2-cell: a map of apexes u with alpha_s = beta_{u s}.
template <class V>
struct VCell2 {
  std::shared_ptr<const VCell1<V>> src;
  std::shared_ptr<const VCell1<V>> tgt;
  FinFn u;

  const VCell1<V>& source() const { return *src; }
  const VCell1<V>& target() const { return *tgt; }
};

struct SpanVOptions {
  // Largest number of target-side bijections tried when a 2-cell comparison
  // meets fibers with several indistinguishable elements.
  std::size_t search_bound = 40320;
};

template <class V>
class SpanV {
 public:
  using Obj = typename V::Obj;
  using Mor = typename V::Mor;
  using Fam = VFam<V>;
  using Cell1 = VCell1<V>;
  using Cell2 = VCell2<V>;

  explicit SpanV(V v = V{}, SpanVOptions opt = {}) : v_(std::move(v)), opt_(opt) {}

  const V& backend() const { return v_; }
  const SpanVOptions& options() const { return opt_; }

  // ---- 0-cells
  Fam fam(FinSet index, std::vector<Obj> objs) const {
    if (objs.size() != index.size()) throw Error(Errc::ShapeMismatch, "family length differs from index size");
    return Fam{std::move(index), std::move(objs)};
  }
  Fam unit_fam() const { return Fam{FinSet(), {v_.unit_obj()}}; }
  bool is_unit(const Fam& m) const { return m.index.arity() == 0 && m.objs.size() == 1 && v_.obj_eq(m.objs[0], v_.unit_obj()); }
  bool fam_eq(const Fam& a, const Fam& b) const {
    if (!(a.index == b.index) || a.objs.size() != b.objs.size()) return false;
    for (std::size_t i = 0; i < a.objs.size(); ++i)
      if (!v_.obj_eq(a.objs[i], b.objs[i])) return false;
    return true;
  }
  Fam tensor(const Fam& a, const Fam& b) const {
    Fam out{product(a.index, b.index), {}};
    out.objs.reserve(a.objs.size() * b.objs.size());
    for (const auto& x : a.objs)
      for (const auto& y : b.objs) out.objs.push_back(v_.tensor_obj(x, y));
    return out;
  }
  Fam tensor_all(const std::vector<Fam>& fs) const {
    Fam out = unit_fam();
    for (const auto& f : fs) out = tensor(out, f);
    return out;
  }

  // ---- 1-cells
  Cell1 make_cell(Fam dom, Fam cod, Span span, std::vector<Mor> alpha) const {
    if (!(span.left == dom.index) || !(span.right == cod.index))
      throw Error(Errc::FamMismatch, "span feet differ from the family index sets");
    if (alpha.size() != span.size()) throw Error(Errc::ComponentShapeError, "one component per apex element required");
    bool all_id = span.identity;
    for (std::size_t s = 0; s < alpha.size(); ++s) {
      if (!v_.obj_eq(v_.dom(alpha[s]), dom.objs[span.f(s)]) || !v_.obj_eq(v_.cod(alpha[s]), cod.objs[span.g(s)]))
        throw Error(Errc::ComponentShapeError, "component at apex element " + tuple_str(span.apex.decoded(s)) +
                                                   " has the wrong domain or codomain");
      if (all_id && !v_.is_id(alpha[s])) all_id = false;
    }
    span.identity = all_id;
    return Cell1{std::move(dom), std::move(cod), std::move(span), std::move(alpha)};
  }

  Cell1 identity(const Fam& m) const {
    Span s = identity_span(m.index);
    std::vector<Mor> alpha;
    alpha.reserve(m.objs.size());
    for (const auto& x : m.objs) alpha.push_back(v_.id(x));
    return Cell1{m, m, std::move(s), std::move(alpha)};
  }

  // a then b
  Cell1 compose(const Cell1& a, const Cell1& b) const {
    if (!fam_eq(a.cod, b.dom)) throw Error(Errc::FamMismatch, "codomain family of first cell differs from domain of second");
    if (a.identity()) return b;
    if (b.identity()) return a;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    Span s = compose_spans(a.span, b.span, pairs);
    std::vector<Mor> alpha;
    alpha.reserve(pairs.size());
    for (auto [i, j] : pairs) alpha.push_back(v_.compose(a.alpha[i], b.alpha[j]));
    return Cell1{a.dom, b.cod, std::move(s), std::move(alpha)};
  }
  Cell1 compose_all(const std::vector<Cell1>& cs) const {
    Cell1 out = cs.at(0);
    for (std::size_t i = 1; i < cs.size(); ++i) out = compose(out, cs[i]);
    return out;
  }

  Cell1 tensor(const Cell1& a, const Cell1& b) const {
    Span s = tensor_spans(a.span, b.span);
    std::vector<Mor> alpha;
    alpha.reserve(a.size() * b.size());
    for (const auto& x : a.alpha)
      for (const auto& y : b.alpha) alpha.push_back(v_.tensor(x, y));
    return Cell1{tensor(a.dom, b.dom), tensor(a.cod, b.cod), std::move(s), std::move(alpha)};
  }
  Cell1 tensor_all(const std::vector<Cell1>& cs) const {
    Cell1 out = cs.at(0);
    for (std::size_t i = 1; i < cs.size(); ++i) out = tensor(out, cs[i]);
    return out;
  }

  Cell1 braiding(const Fam& m, const Fam& n) const {
    if (is_unit(m) || is_unit(n)) return identity(tensor(m, n));
    Span s = braiding_span(m.index, n.index);
    std::vector<Mor> alpha;
    alpha.reserve(s.size());
    for (const auto& x : m.objs)
      for (const auto& y : n.objs) alpha.push_back(v_.braiding(x, y));
    return Cell1{tensor(m, n), tensor(n, m), std::move(s), std::move(alpha)};
  }

  // Rearranges tensor factors: output position i receives input factor perm[i].
  // Realized by adjacent braidings in bubble-sort order.
  Cell1 permutation(const std::vector<Fam>& factors, const std::vector<std::size_t>& perm) const {
    std::vector<std::size_t> cur(factors.size());
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = i;
    auto current_fams = [&] {
      std::vector<Fam> fs;
      for (std::size_t c : cur) fs.push_back(factors[c]);
      return fs;
    };
    Cell1 out = identity(tensor_all(factors));
    for (std::size_t i = 0; i < perm.size(); ++i) {
      std::size_t j = static_cast<std::size_t>(std::find(cur.begin(), cur.end(), perm[i]) - cur.begin());
      if (j >= cur.size() || j < i) throw Error(Errc::ShapeMismatch, "not a permutation");
      for (; j > i; --j) {
        auto fs = current_fams();
        std::vector<Fam> pre(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(j - 1));
        std::vector<Fam> post(fs.begin() + static_cast<std::ptrdiff_t>(j + 1), fs.end());
        Cell1 step = tensor(tensor(identity(tensor_all(pre)), braiding(fs[j - 1], fs[j])), identity(tensor_all(post)));
        out = compose(out, step);
        std::swap(cur[j - 1], cur[j]);
      }
    }
    return out;
  }

  Cell1 reverse(const Cell1& a) const {
    // Only meaningful when every component is an identity-shaped morphism
    // that can be read backwards; used for the trivial backend.
    return Cell1{a.cod, a.dom, reverse_span(a.span), a.alpha};
  }

  bool same_cell(const Cell1& a, const Cell1& b) const {
    if (&a == &b) return true;
    if (!same_span(a.span, b.span) || !fam_eq(a.dom, b.dom) || !fam_eq(a.cod, b.cod)) return false;
    for (std::size_t s = 0; s < a.alpha.size(); ++s)
      if (!v_.eq(a.alpha[s], b.alpha[s])) return false;
    return true;
  }

  // ---- matching of isomorphic 1-cells
  struct CellMatching {
    ClassMatching m;
    std::vector<std::size_t> class_a, class_b;
  };

  CellMatching match_cells(const Cell1& a, const Cell1& b) const {
    if (!(a.span.left == b.span.left) || !(a.span.right == b.span.right))
      throw Error(Errc::FeetMismatch, "matching cells with different feet");
    struct KeyHash {
      std::size_t operator()(const std::tuple<std::size_t, std::size_t, std::size_t>& k) const {
        return std::get<0>(k) * 1000003u ^ std::get<1>(k) * 10007u ^ std::get<2>(k);
      }
    };
    std::unordered_map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<std::pair<std::size_t, const Mor*>>,
                       KeyHash>
        reps;
    std::size_t next = 0;
    auto cls = [&](const Cell1& c, std::size_t s) {
      auto& list = reps[{c.span.f(s), c.span.g(s), v_.hash(c.alpha[s])}];
      for (const auto& [id, m] : list)
        if (v_.eq(*m, c.alpha[s])) return id;
      list.emplace_back(next, &c.alpha[s]);
      return next++;
    };
    CellMatching out;
    out.class_a.resize(a.size());
    out.class_b.resize(b.size());
    for (std::size_t s = 0; s < a.size(); ++s) out.class_a[s] = cls(a, s);
    for (std::size_t s = 0; s < b.size(); ++s) out.class_b[s] = cls(b, s);
    out.m = match_by_class(out.class_a, out.class_b);
    return out;
  }

  std::optional<Cell2> cells_isomorphic(const Cell1& a, const Cell1& b) const {
    if (!(a.span.left == b.span.left) || !(a.span.right == b.span.right)) return std::nullopt;
    if (!fam_eq(a.dom, b.dom) || !fam_eq(a.cod, b.cod)) return std::nullopt;
    auto cm = match_cells(a, b);
    if (!cm.m.ok()) return std::nullopt;
    return Cell2{std::make_shared<const Cell1>(a), std::make_shared<const Cell1>(b),
                 FinFn(a.span.apex.as_set(), b.span.apex.as_set(), cm.m.map)};
  }

  static std::string legs_str(const Span& s, std::size_t i) {
    return tuple_str(s.left.decode(s.f(i))) + " -> " + tuple_str(s.right.decode(s.g(i)));
  }

  // Why two cells fail to be isomorphic, as a counterexample.
  std::optional<Counterexample> iso_failure(const Cell1& a, const Cell1& b, const std::string& what) const {
    if (!(a.span.left == b.span.left) || !(a.span.right == b.span.right) || !fam_eq(a.dom, b.dom) || !fam_eq(a.cod, b.cod))
      return Counterexample{what, {}, "boundary families differ"};
    auto cm = match_cells(a, b);
    if (cm.m.unmatched_a)
      return Counterexample{what + ".lhs", a.span.apex.decoded(*cm.m.unmatched_a),
                            "no matching element on the other side (legs " + legs_str(a.span, *cm.m.unmatched_a) + ")"};
    if (cm.m.unmatched_b)
      return Counterexample{what + ".rhs", b.span.apex.decoded(*cm.m.unmatched_b),
                            "no matching element on the other side (legs " + legs_str(b.span, *cm.m.unmatched_b) + ")"};
    return std::nullopt;
  }

  Cell2 coherence(const Cell1& a, const Cell1& b) const {
    auto c = cells_isomorphic(a, b);
    if (!c) {
      auto why = iso_failure(a, b, "boundary");
      throw Error(Errc::BoundaryMismatch,
                  "1-cells are not isomorphic" + (why ? " at " + tuple_str(why->element) + " " + why->detail : std::string()));
    }
    return *c;
  }

  bool invertible_cell1(const Cell1& a) const { return is_invertible_span(a.span); }

  // ---- 2-cells
  std::optional<Counterexample> validate_2cell(const Cell1& src, const Cell1& tgt, const std::vector<std::size_t>& u,
                                               const std::string& name) const {
    if (!(src.span.left == tgt.span.left) || !(src.span.right == tgt.span.right) || !fam_eq(src.dom, tgt.dom) ||
        !fam_eq(src.cod, tgt.cod))
      return Counterexample{name, {}, "boundary 1-cells have different ends"};
    if (u.size() != src.size())
      return Counterexample{name, {}, "table has " + std::to_string(u.size()) + " entries, source apex has " +
                                          std::to_string(src.size())};
    for (std::size_t s = 0; s < src.size(); ++s) {
      if (u[s] >= tgt.size())
        return Counterexample{name, src.span.apex.decoded(s), "image index out of range"};
      if (tgt.span.f(u[s]) != src.span.f(s) || tgt.span.g(u[s]) != src.span.g(s))
        return Counterexample{name, src.span.apex.decoded(s), "TriangleViolation: legs not preserved"};
      if (!v_.eq(src.alpha[s], tgt.alpha[u[s]]))
        return Counterexample{name, src.span.apex.decoded(s),
                              "FactorizationViolation: " + v_.show(src.alpha[s]) + " != " + v_.show(tgt.alpha[u[s]])};
    }
    return std::nullopt;
  }

  Cell2 make_2cell(const Cell1& src, const Cell1& tgt, std::vector<std::size_t> u) const {
    if (auto bad = validate_2cell(src, tgt, u, "2-cell")) {
      Errc code = bad->detail.rfind("Triangle", 0) == 0 ? Errc::TriangleViolation
                  : bad->detail.rfind("Factorization", 0) == 0 ? Errc::FactorizationViolation
                                                              : Errc::BoundaryMismatch;
      throw Error(code, "at " + tuple_str(bad->element) + ": " + bad->detail);
    }
    return Cell2{std::make_shared<const Cell1>(src), std::make_shared<const Cell1>(tgt),
                 FinFn(src.span.apex.as_set(), tgt.span.apex.as_set(), std::move(u))};
  }

  Cell2 id2(const Cell1& a) const {
    auto p = std::make_shared<const Cell1>(a);
    return Cell2{p, p, identity_fn(a.span.apex.as_set())};
  }

  // phi then psi; inserts the canonical isomorphism when the middle cells
  // are isomorphic but not literally equal.
  Cell2 vcomp(const Cell2& phi, const Cell2& psi) const {
    if (phi.tgt == psi.src || same_cell(*phi.tgt, *psi.src))
      return Cell2{phi.src, psi.tgt, compose_fn(phi.u, psi.u)};
    Cell2 iso = coherence(*phi.tgt, *psi.src);
    return Cell2{phi.src, psi.tgt, compose_fn(compose_fn(phi.u, iso.u), psi.u)};
  }
  Cell2 vcomp_all(const std::vector<Cell2>& cs) const {
    Cell2 out = cs.at(0);
    for (std::size_t i = 1; i < cs.size(); ++i) out = vcomp(out, cs[i]);
    return out;
  }

  // phi: a => a', psi: b => b' gives a;b => a';b'.
  Cell2 hcomp(const Cell2& phi, const Cell2& psi) const {
    const Cell1 &a = *phi.src, &ap = *phi.tgt, &b = *psi.src, &bp = *psi.tgt;
    Cell1 src = compose(a, b);
    Cell1 tgt = compose(ap, bp);
    auto sp = composite_pairs(a.span, b.span);
    std::vector<std::pair<std::size_t, std::size_t>> tp;
    if (!ap.identity() && !bp.identity()) tp = composite_pairs(ap.span, bp.span);
    std::vector<std::size_t> u(sp.size());
    for (std::size_t k = 0; k < sp.size(); ++k) {
      const std::size_t s = phi.u(sp[k].first), q = psi.u(sp[k].second);
      if (ap.identity()) {
        u[k] = q;
      } else if (bp.identity()) {
        u[k] = s;
      } else {
        auto it = std::lower_bound(tp.begin(), tp.end(), std::make_pair(s, q));
        u[k] = static_cast<std::size_t>(it - tp.begin());
      }
    }
    return Cell2{std::make_shared<const Cell1>(std::move(src)), std::make_shared<const Cell1>(std::move(tgt)),
                 FinFn(FinSet::atom(sp.size()), FinSet::atom(tgt_size(ap, bp)), std::move(u))};
  }

  Cell2 whisker_left(const Cell1& a, const Cell2& phi) const { return hcomp(id2(a), phi); }
  Cell2 whisker_right(const Cell2& phi, const Cell1& b) const { return hcomp(phi, id2(b)); }
  // a ; phi ; b
  Cell2 whisker(const Cell1& a, const Cell2& phi, const Cell1& b) const { return hcomp(hcomp(id2(a), phi), id2(b)); }

  Cell2 tensor2(const Cell2& phi, const Cell2& psi) const {
    Cell1 src = tensor(*phi.src, *psi.src);
    Cell1 tgt = tensor(*phi.tgt, *psi.tgt);
    const std::size_t m = psi.src->size(), mp = psi.tgt->size();
    std::vector<std::size_t> u(phi.src->size() * m);
    for (std::size_t s = 0; s < phi.src->size(); ++s)
      for (std::size_t t = 0; t < m; ++t) u[s * m + t] = phi.u(s) * mp + psi.u(t);
    FinSet a = src.span.apex.as_set(), b = tgt.span.apex.as_set();
    return Cell2{std::make_shared<const Cell1>(std::move(src)), std::make_shared<const Cell1>(std::move(tgt)),
                 FinFn(a, b, std::move(u))};
  }

  std::optional<Cell2> invert(const Cell2& phi) const {
    auto inv = inverse_fn(phi.u);
    if (!inv) return std::nullopt;
    return Cell2{phi.tgt, phi.src, *inv};
  }

  Cell2 retarget(const Cell2& phi, const Cell1& tgt) const { return vcomp(phi, coherence(*phi.tgt, tgt)); }
  Cell2 resource(const Cell1& src, const Cell2& phi) const { return vcomp(coherence(src, *phi.src), phi); }

  // Equality of 2-cells up to the canonical matching of their boundaries:
  // returns the first source element where no matching makes them agree.
  std::optional<Counterexample> compare(const Cell2& phi, const Cell2& psi, const std::string& name = "2-cell") const {
    if (auto bad = iso_failure(*phi.src, *psi.src, name + ".source")) return bad;
    if (auto bad = iso_failure(*phi.tgt, *psi.tgt, name + ".target")) return bad;
    auto ms = match_cells(*phi.src, *psi.src);
    auto mt = match_cells(*phi.tgt, *psi.tgt);

    auto attempt = [&](const std::vector<std::size_t>& bmap) -> std::optional<std::size_t> {
      std::map<std::pair<std::size_t, std::size_t>, long> count;
      for (std::size_t s = 0; s < phi.src->size(); ++s) ++count[{ms.class_a[s], bmap[phi.u(s)]}];
      for (std::size_t s = 0; s < psi.src->size(); ++s) --count[{ms.class_b[s], psi.u(s)}];
      for (std::size_t s = 0; s < phi.src->size(); ++s)
        if (count[{ms.class_a[s], bmap[phi.u(s)]}] != 0) return s;
      for (const auto& [k, c] : count)
        if (c != 0) return std::size_t{0};
      return std::nullopt;
    };

    std::vector<std::size_t> bmap = mt.m.map;
    auto first = attempt(bmap);
    if (!first) return std::nullopt;

    if (!mt.m.ambiguous.empty()) {
      // Target fibers with several equal-signature elements: try other pairings.
      // Group a-side elements of each ambiguous class by the b-side class.
      std::vector<std::vector<std::size_t>> a_side;
      for (const auto& cls : mt.m.ambiguous) {
        std::vector<std::size_t> as;
        for (std::size_t b : cls)
          for (std::size_t a = 0; a < bmap.size(); ++a)
            if (bmap[a] == b) as.push_back(a);
        a_side.push_back(std::move(as));
      }
      std::vector<std::vector<std::size_t>> perms = mt.m.ambiguous;
      std::size_t tried = 1;
      while (tried < opt_.search_bound) {
        // odometer over permutations of each class
        std::size_t c = 0;
        for (; c < perms.size(); ++c) {
          if (std::next_permutation(perms[c].begin(), perms[c].end())) break;
        }
        if (c == perms.size()) break;
        for (std::size_t k = 0; k < perms.size(); ++k)
          for (std::size_t i = 0; i < a_side[k].size(); ++i) bmap[a_side[k][i]] = perms[k][i];
        ++tried;
        if (!attempt(bmap)) return std::nullopt;
      }
      bmap = mt.m.map;
    }

    const std::size_t s = *first;
    std::string detail;
    if (s < phi.src->size()) {
      const std::size_t rhs_elem = ms.m.map[s];
      detail = "lhs sends it to " + tuple_str(psi.tgt->span.apex.decoded(bmap[phi.u(s)])) + ", rhs to " +
               tuple_str(psi.tgt->span.apex.decoded(psi.u(rhs_elem)));
      return Counterexample{name, phi.src->span.apex.decoded(s), detail};
    }
    return Counterexample{name, {}, "pasted 2-cells differ"};
  }

  bool equal(const Cell2& phi, const Cell2& psi) const { return !compare(phi, psi).has_value(); }

  // A 2-cell is an identity (up to coherence) when it agrees with the
  // canonical isomorphism between its boundaries.
  bool is_identity(const Cell2& phi) const {
    auto iso = cells_isomorphic(*phi.src, *phi.tgt);
    return iso && equal(phi, *iso);
  }

  // ---- forgetful functor to Span
  static const FinSet& forget(const Fam& m) { return m.index; }
  static const Span& forget(const Cell1& a) { return a.span; }
  static SpanMap forget(const Cell2& phi) { return SpanMap{phi.src->span, phi.tgt->span, phi.u}; }

 private:
  static std::size_t tgt_size(const Cell1& ap, const Cell1& bp) {
    if (ap.identity()) return bp.size();
    if (bp.identity()) return ap.size();
    return composite_pairs(ap.span, bp.span).size();
  }

  V v_;
  SpanVOptions opt_;
};

extern template class SpanV<MatBackend>;
extern template class SpanV<FinSetBackend>;
extern template class SpanV<TrivialBackend>;

using SpanT = SpanV<TrivialBackend>;

}  // namespace ohl
