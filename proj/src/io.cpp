#include "ohl/io.hpp"

#include <cstdio>
#include <map>

#include "ohl/hopfcat.hpp"

namespace ohl::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw Error(Errc::SchemaError, (path.empty() ? std::string("document") : path) + ": " + msg);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path, "missing field '" + key + "'");
  return *it;
}

const json* optional_field(const json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::size_t nat(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) schema(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> nats(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of non-negative integers");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(nat(j[i], sub(path, i)));
  return out;
}

std::string str(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

const json& array_of(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  if (j.size() != n) schema(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  return j;
}

// ---------------------------------------------------------------- backend codecs

template <class V>
struct Codec;

template <>
struct Codec<TrivialBackend> {
  static constexpr bool has_components = false;
  TrivialBackend v;
  Unit obj(const json&, const std::string&) const { return {}; }
  Unit mor(const json&, const std::string&) const { return {}; }
  static ordered_json obj_out(const Unit&) { return nullptr; }
  static ordered_json mor_out(const Unit&) { return nullptr; }
};

template <>
struct Codec<FinSetBackend> {
  static constexpr bool has_components = true;
  FinSetBackend v;
  FinSet obj(const json& j, const std::string& path) const { return FinSet(nats(j, path)); }
  FinFn mor(const json& j, const std::string& path) const {
    FinSet d(nats(field(j, "dom", path), sub(path, "dom")));
    FinSet c(nats(field(j, "cod", path), sub(path, "cod")));
    auto t = nats(field(j, "table", path), sub(path, "table"));
    if (t.size() != d.size()) schema(sub(path, "table"), "length differs from the domain size");
    for (std::size_t x : t)
      if (x >= c.size()) schema(sub(path, "table"), "entry out of range");
    return FinFn(d, c, t);
  }
  static ordered_json obj_out(const FinSet& x) { return x.shape(); }
  static ordered_json mor_out(const FinFn& f) {
    ordered_json j;
    j["dom"] = f.dom.shape();
    j["cod"] = f.cod.shape();
    j["table"] = f.table;
    return j;
  }
};

template <>
struct Codec<MatBackend> {
  static constexpr bool has_components = true;
  MatBackend v;
  std::size_t obj(const json& j, const std::string& path) const { return nat(j, path); }
  IntMatrix mor(const json& j, const std::string& path) const {
    std::size_t r = nat(field(j, "rows", path), sub(path, "rows"));
    std::size_t c = nat(field(j, "cols", path), sub(path, "cols"));
    const json& d = field(j, "data", path);
    if (!d.is_array() || d.size() != r * c) schema(sub(path, "data"), "expected rows*cols integers");
    std::vector<std::int64_t> data;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!d[i].is_number_integer()) schema(sub(sub(path, "data"), i), "expected an integer");
      data.push_back(d[i].get<std::int64_t>());
    }
    return v.from_rows(r, c, data);
  }
  static ordered_json obj_out(std::size_t n) { return n; }
  static ordered_json mor_out(const IntMatrix& a) {
    ordered_json j;
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    std::vector<std::int64_t> d(a.data(), a.data() + a.size());
    j["data"] = d;
    return j;
  }
};

// ---------------------------------------------------------------- Span|V documents

template <class V>
class Loader {
 public:
  using Fam = VFam<V>;
  using Cell1 = VCell1<V>;

  Loader(const json& doc, const SpanV<V>& sv, const Codec<V>& codec) : doc_(doc), sv_(sv), codec_(codec) {}

  Fam fam(const std::string& name) const {
    const json& fams = field(doc_, "families", "");
    const std::string path = sub("families", name);
    const json& f = field(fams, name, "families");
    FinSet index(nats(field(f, "index", path), sub(path, "index")));
    std::vector<typename V::Obj> objs;
    if constexpr (Codec<V>::has_components) {
      const json& o = array_of(field(f, "objects", path), index.size(), sub(path, "objects"));
      for (std::size_t i = 0; i < o.size(); ++i) objs.push_back(codec_.obj(o[i], sub(sub(path, "objects"), i)));
    } else {
      objs.assign(index.size(), typename V::Obj{});
    }
    return sv_.fam(index, objs);
  }

  Fam fams(const json& names, const std::string& path) const {
    if (!names.is_array()) schema(path, "expected a list of family names");
    if (names.empty()) return sv_.unit_fam();
    std::vector<Fam> parts;
    for (std::size_t i = 0; i < names.size(); ++i) parts.push_back(fam(str(names[i], sub(path, i))));
    return sv_.tensor_all(parts);
  }

  Cell1 cell(const std::string& name) const {
    const json& cells = field(doc_, "cells", "");
    const std::string path = sub("cells", name);
    const json& c = field(cells, name, "cells");
    Fam dom = fams(field(c, "dom", path), sub(path, "dom"));
    Fam cod = fams(field(c, "cod", path), sub(path, "cod"));
    std::size_t n = nat(field(c, "apex", path), sub(path, "apex"));
    auto left = nats(field(c, "left", path), sub(path, "left"));
    auto right = nats(field(c, "right", path), sub(path, "right"));
    if (left.size() != n || right.size() != n) schema(path, "leg tables must have one entry per apex element");
    for (std::size_t i = 0; i < n; ++i)
      if (left[i] >= dom.index.size() || right[i] >= cod.index.size()) schema(sub(path, i), "leg value out of range");
    if (const json* id = optional_field(c, "identity"); id && id->is_boolean() && id->get<bool>()) {
      Cell1 out = sv_.identity(dom);
      if (!sv_.fam_eq(dom, cod) || out.span.f.table != left || out.span.g.table != right)
        schema(path, "identity flag on a cell that is not an identity");
      return out;
    }
    std::vector<typename V::Mor> alpha;
    if constexpr (Codec<V>::has_components) {
      const json& a = array_of(field(c, "alpha", path), n, sub(path, "alpha"));
      for (std::size_t i = 0; i < n; ++i) alpha.push_back(codec_.mor(a[i], sub(sub(path, "alpha"), i)));
    } else {
      alpha.assign(n, typename V::Mor{});
    }
    return sv_.make_cell(dom, cod, make_span(dom.index, n, cod.index, left, right), alpha);
  }

  MonoidData<V> monoid(const json& j, const std::string& path) const {
    return {fam(str(field(j, "carrier", path), sub(path, "carrier"))),
            cell(str(field(j, "mult", path), sub(path, "mult"))), cell(str(field(j, "unit", path), sub(path, "unit")))};
  }
  ComonoidData<V> comonoid(const json& j, const std::string& path) const {
    return {fam(str(field(j, "carrier", path), sub(path, "carrier"))),
            cell(str(field(j, "comult", path), sub(path, "comult"))),
            cell(str(field(j, "counit", path), sub(path, "counit")))};
  }
  CellTable table(const json& j, const std::string& path) const { return nats(j, path); }

 private:
  const json& doc_;
  const SpanV<V>& sv_;
  const Codec<V>& codec_;
};

template <class V>
class Writer {
 public:
  explicit Writer(const Codec<V>& codec) : codec_(codec) {}

  void family(const std::string& name, const VFam<V>& f) {
    ordered_json j;
    j["index"] = f.index.shape();
    if constexpr (Codec<V>::has_components) {
      ordered_json objs = ordered_json::array();
      for (const auto& o : f.objs) objs.push_back(codec_.obj_out(o));
      j["objects"] = objs;
    }
    fams_[name] = j;
  }

  void cell(const std::string& name, const VCell1<V>& c, const std::vector<std::string>& dom,
            const std::vector<std::string>& cod) {
    ordered_json j;
    j["dom"] = dom;
    j["cod"] = cod;
    j["apex"] = c.span.size();
    j["left"] = c.span.f.table;
    j["right"] = c.span.g.table;
    if (c.identity()) j["identity"] = true;
    if constexpr (Codec<V>::has_components) {
      ordered_json a = ordered_json::array();
      for (const auto& m : c.alpha) a.push_back(codec_.mor_out(m));
      j["alpha"] = a;
    }
    cells_[name] = j;
  }

  ordered_json families() const { return fams_; }
  ordered_json cells() const { return cells_; }

 private:
  const Codec<V>& codec_;
  ordered_json fams_ = ordered_json::object(), cells_ = ordered_json::object();
};

// ---------------------------------------------------------------- enriched documents

template <class V>
std::vector<typename V::Obj> read_objs(const Codec<V>& codec, const json& doc, const char* key, std::size_t n) {
  std::vector<typename V::Obj> out;
  if constexpr (!Codec<V>::has_components) {
    out.assign(n, typename V::Obj{});
  } else {
    const json& a = array_of(field(doc, key, ""), n, key);
    for (std::size_t i = 0; i < n; ++i) out.push_back(codec.obj(a[i], sub(key, i)));
  }
  return out;
}

template <class V>
std::vector<typename V::Mor> read_mors(const Codec<V>& codec, const json& doc, const char* key, std::size_t n) {
  std::vector<typename V::Mor> out;
  if constexpr (!Codec<V>::has_components) {
    out.assign(n, typename V::Mor{});
  } else {
    const json& a = array_of(field(doc, key, ""), n, key);
    for (std::size_t i = 0; i < n; ++i) out.push_back(codec.mor(a[i], sub(key, i)));
  }
  return out;
}

template <class V, class Vec>
ordered_json write_array(const Codec<V>& codec, const Vec& xs, bool objects) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, typename V::Obj>) {
      a.push_back(codec.obj_out(x));
    } else {
      a.push_back(codec.mor_out(x));
    }
  }
  (void)objects;
  return a;
}

// ---------------------------------------------------------------- checks per kind

template <class V>
CheckReport run_kind(const json& doc, const std::string& kind, const Codec<V>& codec, const RunOptions& opt) {
  SpanV<V> sv(codec.v, SpanVOptions{opt.search_bound});
  Structures<V> st(sv);
  Loader<V> ld(doc, sv, codec);
  CheckReport r;
  auto tables = [&](const json& j, const std::string& path, const std::vector<std::string>& keys) {
    std::map<std::string, CellTable> out;
    for (const auto& k : keys) out[k] = ld.table(field(j, k, path), sub(path, k));
    return out;
  };
  auto bimonoid = [&] {
    OplaxBimonoidData<V> b;
    b.monoid = ld.monoid(field(doc, "monoid", ""), "monoid");
    b.comonoid = ld.comonoid(field(doc, "comonoid", ""), "comonoid");
    auto t = tables(field(doc, "two_cells", ""), "two_cells", {"theta", "theta0", "chi", "chi0"});
    b.theta = t["theta"];
    b.theta0 = t["theta0"];
    b.chi = t["chi"];
    b.chi0 = t["chi0"];
    return b;
  };
  if (kind == "bimonoid" || kind == "hopf") {
    auto b = bimonoid();
    std::optional<AntipodeData<V>> a;
    if (kind == "hopf") {
      const json& aj = field(doc, "antipode", "");
      auto t = tables(aj, "antipode", {"tau1", "tau2"});
      a = AntipodeData<V>{ld.cell(str(field(aj, "s", "antipode"), "antipode.s")), t["tau1"], t["tau2"]};
    }
    r.append(st.check_strict_monoid(b.monoid));
    r.append(st.check_strict_comonoid(b.comonoid));
    r.append(st.check_oplax_bimonoid(b));
    if (a) r.append(st.check_oplax_hopf(b, *a));
  } else if (kind == "frobenius") {
    FrobeniusData<V> d{ld.monoid(field(doc, "monoid", ""), "monoid"), ld.comonoid(field(doc, "comonoid", ""), "comonoid")};
    r.append(st.check_strict_monoid(d.monoid));
    r.append(st.check_strict_comonoid(d.comonoid));
    r.append(st.check_frobenius(d));
  } else if (kind == "module") {
    auto m = ld.monoid(field(doc, "monoid", ""), "monoid");
    const json& mj = field(doc, "module", "");
    auto t = tables(mj, "module", {"xi", "xi0"});
    OplaxModuleData<V> mod{ld.fam(str(field(mj, "carrier", "module"), "module.carrier")),
                           ld.cell(str(field(mj, "action", "module"), "module.action")), t["xi"], t["xi0"]};
    r.append(st.check_strict_monoid(m));
    r.append(st.check_oplax_module(mod, m));
  } else if (kind == "morphism") {
    auto a = ld.monoid(field(doc, "source", ""), "source");
    auto b = ld.monoid(field(doc, "target", ""), "target");
    const json& mj = field(doc, "morphism", "");
    auto t = tables(mj, "morphism", {"phi", "phi0"});
    OplaxMorphismData<V> d{ld.cell(str(field(mj, "cell", "morphism"), "morphism.cell")), t["phi"], t["phi0"], {}, {}};
    r.append(st.check_strict_monoid(a), "source.");
    r.append(st.check_strict_monoid(b), "target.");
    r.append(st.check_oplax_monoid_morphism(a, b, d));
  } else if (kind == "hopfcat") {
    const std::size_t n = nat(field(doc, "objects", ""), "objects");
    HopfVCat<V> h;
    h.n = n;
    h.homs = read_objs(codec, doc, "homs", n * n);
    h.m = read_mors(codec, doc, "m", n * n * n);
    h.u = read_mors(codec, doc, "u", n);
    h.delta = read_mors(codec, doc, "delta", n * n);
    h.eps = read_mors(codec, doc, "eps", n * n);
    if (optional_field(doc, "s")) h.s = read_mors(codec, doc, "s", n * n);
    r = h.s ? check_hopf_vcat(codec.v, h) : check_semi_hopf_vcat(codec.v, h);
    Bridge<V> br(st);
    auto hb = br.hopfcat_to_spanv(h);
    r.append(st.check_strict_monoid(hb.bimonoid.monoid), "span.");
    r.append(st.check_strict_comonoid(hb.bimonoid.comonoid), "span.");
    r.append(st.check_oplax_bimonoid(hb.bimonoid), "span.");
    if (hb.antipode) r.append(st.check_oplax_hopf(hb.bimonoid, *hb.antipode), "span.");
  } else if (kind == "frobcat") {
    const std::size_t n = nat(field(doc, "objects", ""), "objects");
    FrobVCat<V> c;
    c.n = n;
    c.homs = read_objs(codec, doc, "homs", n * n);
    c.m = read_mors(codec, doc, "m", n * n * n);
    c.u = read_mors(codec, doc, "u", n);
    c.comlt = read_mors(codec, doc, "comlt", n * n * n);
    c.couni = read_mors(codec, doc, "couni", n);
    r = check_frobenius_vcat(codec.v, c);
    Bridge<V> br(st);
    auto d = br.frobcat_to_spanv(c);
    r.append(st.check_strict_monoid(d.monoid), "span.");
    r.append(st.check_strict_comonoid(d.comonoid), "span.");
    r.append(st.check_frobenius(d), "span.");
  } else {
    schema("kind", "unknown structure kind '" + kind + "'");
  }
  return r;
}

Semiring parse_semiring(const json& j) {
  std::string s = str(j, "backend.semiring");
  if (s == "bool") return Semiring::boolean();
  if (s.rfind("F_", 0) == 0) {
    std::int64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoll(s.substr(2), &used);
      if (used != s.size() - 2) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      schema("backend.semiring", "expected \"bool\" or \"F_p\"");
    }
    if (p > 97) throw Error(Errc::OutOfBounds, "characteristic above 97");
    return Semiring::field(p);
  }
  schema("backend.semiring", "expected \"bool\" or \"F_p\"");
}

// ---------------------------------------------------------------- generators

ordered_json header(const std::string& kind, const ordered_json& backend) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["backend"] = backend;
  return j;
}

ordered_json mat_backend(std::int64_t p) {
  ordered_json b;
  b["kind"] = "mat";
  b["semiring"] = "F_" + std::to_string(p);
  return b;
}

template <class V>
ordered_json hopf_document(const Codec<V>& codec, const OplaxBimonoidData<V>& b, const AntipodeData<V>& a,
                           const ordered_json& backend) {
  Writer<V> w(codec);
  w.family("A", b.monoid.carrier);
  w.cell("mult", b.monoid.mlt, {"A", "A"}, {"A"});
  w.cell("unit", b.monoid.uni, {}, {"A"});
  w.cell("comult", b.comonoid.lcm, {"A"}, {"A", "A"});
  w.cell("counit", b.comonoid.lcu, {"A"}, {});
  w.cell("antipode", a.s, {"A"}, {"A"});
  ordered_json j = header("hopf", backend);
  j["families"] = w.families();
  j["cells"] = w.cells();
  j["monoid"] = {{"carrier", "A"}, {"mult", "mult"}, {"unit", "unit"}};
  j["comonoid"] = {{"carrier", "A"}, {"comult", "comult"}, {"counit", "counit"}};
  j["two_cells"] = {{"theta", b.theta}, {"theta0", b.theta0}, {"chi", b.chi}, {"chi0", b.chi0}};
  j["antipode"] = {{"s", "antipode"}, {"tau1", a.tau1}, {"tau2", a.tau2}};
  return j;
}

template <class V>
ordered_json hopfcat_document(const Codec<V>& codec, const HopfVCat<V>& h, const ordered_json& backend) {
  ordered_json j = header("hopfcat", backend);
  j["objects"] = h.n;
  j["homs"] = write_array(codec, h.homs, true);
  j["m"] = write_array(codec, h.m, false);
  j["u"] = write_array(codec, h.u, false);
  j["delta"] = write_array(codec, h.delta, false);
  j["eps"] = write_array(codec, h.eps, false);
  if (h.s) j["s"] = write_array(codec, *h.s, false);
  return j;
}

template <class V>
ordered_json frobcat_document(const Codec<V>& codec, const FrobVCat<V>& c, const ordered_json& backend) {
  ordered_json j = header("frobcat", backend);
  j["objects"] = c.n;
  j["homs"] = write_array(codec, c.homs, true);
  j["m"] = write_array(codec, c.m, false);
  j["u"] = write_array(codec, c.u, false);
  j["comlt"] = write_array(codec, c.comlt, false);
  j["couni"] = write_array(codec, c.couni, false);
  return j;
}

void bound(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::OutOfBounds, what);
}

Semiring demo_field(std::int64_t p) {
  bound(p >= 2 && p <= 97, "p must lie in 2..97");
  return Semiring::field(p);
}

}  // namespace

json parse_structure(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

RunResult run_structure(const json& doc, const RunOptions& opt) {
  if (!doc.is_object()) schema("", "expected a JSON object");
  const json& ver = field(doc, "schema_version", "");
  if (!ver.is_number_integer() || ver.get<std::int64_t>() != kSchemaVersion)
    schema("schema_version", "unsupported schema version");
  RunResult out;
  out.kind = str(field(doc, "kind", ""), "kind");
  const json& backend = field(doc, "backend", "");
  const std::string bk = str(field(backend, "kind", "backend"), "backend.kind");
  try {
    if (bk == "trivial") {
      out.backend = "trivial";
      out.report = run_kind(doc, out.kind, Codec<TrivialBackend>{}, opt);
    } else if (bk == "finset") {
      out.backend = "finset";
      out.report = run_kind(doc, out.kind, Codec<FinSetBackend>{}, opt);
    } else if (bk == "mat") {
      Semiring s = parse_semiring(field(backend, "semiring", "backend"));
      out.backend = "mat/" + s.name();
      out.report = run_kind(doc, out.kind, Codec<MatBackend>{MatBackend(s)}, opt);
    } else {
      schema("backend.kind", "expected trivial, finset or mat");
    }
  } catch (const json::exception& e) {
    throw Error(Errc::SchemaError, e.what());
  }
  return out;
}

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ordered_json report_json(const RunResult& r, const std::string& digest, const std::optional<std::string>& timestamp) {
  ordered_json j;
  j["tool"] = "ohl";
  j["version"] = kToolVersion;
  j["schema_version"] = kSchemaVersion;
  j["input_digest"] = "fnv1a64:" + digest;
  j["kind"] = r.kind;
  j["backend"] = r.backend;
  const std::size_t failed = r.report.failures();
  j["summary"] = {{"status", failed == 0 ? "pass" : "fail"},
                  {"records", r.report.records.size()},
                  {"passed", r.report.records.size() - failed},
                  {"failed", failed}};
  ordered_json recs = ordered_json::array();
  for (const auto& rec : r.report.records) {
    ordered_json x;
    x["id"] = rec.id;
    x["status"] = rec.pass ? "pass" : "fail";
    if (rec.cex) x["counterexample"] = {{"cell", rec.cex->cell}, {"element", rec.cex->element}, {"detail", rec.cex->detail}};
    if (!rec.note.empty()) x["note"] = rec.note;
    recs.push_back(x);
  }
  j["records"] = recs;
  if (timestamp) j["timestamp"] = *timestamp;
  return j;
}

std::string report_text(const RunResult& r) {
  std::string s;
  for (const auto& rec : r.report.records) s += describe(rec) + "\n";
  const std::size_t n = r.report.records.size(), failed = r.report.failures();
  s += r.kind + " (" + r.backend + "): " + std::to_string(n - failed) + "/" + std::to_string(n) + " passed" +
       (failed ? ", " + std::to_string(failed) + " failed" : "") + "\n";
  return s;
}

ordered_json demo_structure(const std::string& name, const DemoParams& p) {
  if (name == "x2") {
    bound(p.size >= 1 && p.size <= 4, "--size must lie in 1..4");
    const std::size_t n = p.size;
    SpanT sv;
    Structures<TrivialBackend> st(sv);
    Bridge<TrivialBackend> br(st);
    HopfVCat<TrivialBackend> h;
    h.n = n;
    h.homs.assign(n * n, Unit{});
    h.m.assign(n * n * n, Unit{});
    h.u.assign(n, Unit{});
    h.delta.assign(n * n, Unit{});
    h.eps.assign(n * n, Unit{});
    h.s = std::vector<Unit>(n * n);
    auto hb = br.hopfcat_to_spanv(h);
    return hopf_document(Codec<TrivialBackend>{}, hb.bimonoid, *hb.antipode, {{"kind", "trivial"}});
  }
  if (name == "groupoid") {
    bound(p.size >= 1 && p.size <= 4, "--size must lie in 1..4");
    return hopfcat_document(Codec<FinSetBackend>{}, groupoid_hopf_vcat(codiscrete_groupoid(p.size)),
                            {{"kind", "finset"}});
  }
  if (name == "group-hopf") {
    bound(p.group == "z2" || p.group == "z3", "--group must be z2 or z3");
    MatBackend v(demo_field(p.p));
    return hopfcat_document(Codec<MatBackend>{v}, group_algebra_hopf(v, p.group == "z2" ? 2 : 3), mat_backend(p.p));
  }
  if (name == "mat") {
    bound(p.max_n >= 1 && p.max_n <= 4, "--max-n must lie in 1..4");
    MatBackend v(demo_field(p.p));
    return frobcat_document(Codec<MatBackend>{v}, mat_frobenius_example(v, p.max_n), mat_backend(p.p));
  }
  throw Error(Errc::OutOfBounds, "unknown demo '" + name + "' (x2, groupoid, group-hopf, mat)");
}

}  // namespace ohl::io
