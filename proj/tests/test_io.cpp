#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ohl/hopfcat.hpp"
#include "ohl/io.hpp"

using namespace ohl;
using io::json;

namespace {

// The diagonal monoid and comonoid on a two-element set, as a document.
json x_document(const std::string& kind) {
  json d;
  d["schema_version"] = 1;
  d["kind"] = kind;
  d["backend"] = {{"kind", "trivial"}};
  d["families"]["X"] = {{"index", {2}}};
  auto cell = [](json dom, json cod, json l, json r) {
    return json{{"dom", dom}, {"cod", cod}, {"apex", 2}, {"left", l}, {"right", r}};
  };
  d["cells"]["mult"] = cell({"X", "X"}, {"X"}, {0, 3}, {0, 1});
  d["cells"]["unit"] = cell(json::array(), {"X"}, {0, 0}, {0, 1});
  d["cells"]["comult"] = cell({"X"}, {"X", "X"}, {0, 1}, {0, 3});
  d["cells"]["counit"] = cell({"X"}, json::array(), {0, 1}, {0, 0});
  d["monoid"] = {{"carrier", "X"}, {"mult", "mult"}, {"unit", "unit"}};
  d["comonoid"] = {{"carrier", "X"}, {"comult", "comult"}, {"counit", "counit"}};
  return d;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::OutOfBounds;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("FNV-1a digests match the published test vectors") {
  CHECK(io::fnv1a64("") == "cbf29ce484222325");
  CHECK(io::fnv1a64("a") == "af63dc4c8601ec8c");
  CHECK(io::fnv1a64("foobar") == "85944171f73967e8");
}

TEST_CASE("parse and schema errors") {
  CHECK(code_of([] { io::parse_structure("{\"schema_version\": 1,"); }) == Errc::ParseError);
  CHECK(code_of([] { io::run_structure(json::array()); }) == Errc::SchemaError);
  json d = x_document("frobenius");
  d["schema_version"] = 2;
  CHECK(code_of([&] { io::run_structure(d); }) == Errc::SchemaError);

  d = x_document("frobenius");
  d["cells"]["mult"]["left"][1] = 7;
  CHECK(message_of([&] { io::run_structure(d); }).find("cells.mult") != std::string::npos);

  d = x_document("frobenius");
  d["cells"]["mult"].erase("apex");
  CHECK(message_of([&] { io::run_structure(d); }).find("missing field 'apex'") != std::string::npos);

  d = x_document("frobenius");
  d["kind"] = "quasigroup";
  CHECK(code_of([&] { io::run_structure(d); }) == Errc::SchemaError);

  d = x_document("frobenius");
  d["backend"] = {{"kind", "mat"}, {"semiring", "F_4"}};
  CHECK(code_of([&] { io::run_structure(d); }) == Errc::OutOfBounds);
  d["backend"] = {{"kind", "mat"}, {"semiring", "Z"}};
  CHECK(code_of([&] { io::run_structure(d); }) == Errc::SchemaError);
  // a matrix document needs components on every family
  d["backend"] = {{"kind", "mat"}, {"semiring", "F_2"}};
  CHECK(message_of([&] { io::run_structure(d); }).find("families.X") != std::string::npos);
}

TEST_CASE("Frobenius document on a set") {
  auto r = io::run_structure(x_document("frobenius"));
  CHECK(r.kind == "frobenius");
  CHECK(r.backend == "trivial");
  CHECK(r.report.passed());
  CHECK(r.report.find("frobenius.left"));
  CHECK(r.report.find("comonoid.coassoc"));

  json d = x_document("frobenius");
  d["cells"]["comult"]["right"] = {0, 2};
  auto bad = io::run_structure(d).report;
  CHECK_FALSE(bad.passed("comonoid.counit-left"));
  CHECK_FALSE(bad.passed());
  // a cell of the wrong type is an input error, not a failed axiom
  d["cells"]["comult"]["cod"] = {"X"};
  d["cells"]["comult"]["right"] = {0, 1};
  CHECK(code_of([&] { io::run_structure(d); }) == Errc::FamMismatch);
}

TEST_CASE("module and morphism documents") {
  SpanT sv;
  Structures<TrivialBackend> st(sv);
  json base = x_document("module");
  // tables computed by the library for the same data
  FinSet x = FinSet::atom(2);
  auto fam = SpanT::Fam{x, std::vector<Unit>(2)};
  auto cell = [&](const Span& s) {
    return sv.make_cell(SpanT::Fam{s.left, std::vector<Unit>(s.left.size())},
                        SpanT::Fam{s.right, std::vector<Unit>(s.right.size())}, s, std::vector<Unit>(s.size()));
  };
  MonoidData<TrivialBackend> m{fam, cell(from_function(diagonal(x), Direction::contra)),
                               cell(from_function(bang(x), Direction::contra))};
  auto reg = st.regular_module(m);

  SUBCASE("regular module") {
    json d = base;
    d["module"] = {{"carrier", "X"}, {"action", "mult"}, {"xi", reg.xi}, {"xi0", reg.xi0}};
    auto r = io::run_structure(d);
    CHECK(r.report.passed());
    CHECK(r.report.find("module.assoc"));
    d["module"]["xi"][0] = 1;
    auto bad = io::run_structure(d).report;
    CHECK_FALSE(bad.passed("module.assoc"));
    REQUIRE(bad.find("module.assoc")->cex);
  }
  SUBCASE("identity morphism") {
    json d = base;
    d["kind"] = "morphism";
    d["cells"]["id"] = {{"dom", {"X"}}, {"cod", {"X"}}, {"apex", 2}, {"left", {0, 1}}, {"right", {0, 1}},
                        {"identity", true}};
    SpanT::Cell1 id = sv.identity(fam);
    auto pb = st.phi_boundary(m, m, id), p0 = st.phi0_boundary(m, m, id);
    d["source"] = d["monoid"];
    d["target"] = d["monoid"];
    d["morphism"] = {{"cell", "id"}, {"phi", st.coherence_table(pb.src, pb.tgt)},
                     {"phi0", st.coherence_table(p0.src, p0.tgt)}};
    auto r = io::run_structure(d);
    CHECK(r.report.passed());
    CHECK(r.report.find("source.monoid.assoc"));
    CHECK(r.report.find("morph.unit"));
    d["cells"]["id"]["right"] = {1, 0};
    CHECK(code_of([&] { io::run_structure(d); }) == Errc::SchemaError);
  }
}

TEST_CASE("demo generators") {
  io::DemoParams p;
  p.size = 2;
  auto x2 = io::run_structure(json::parse(io::demo_structure("x2", p).dump()));
  CHECK(x2.kind == "hopf");
  CHECK(x2.report.passed());
  for (int k = 1; k <= 10; ++k) CHECK(x2.report.passed("ax" + std::to_string(k)));
  CHECK(x2.report.passed("antipode.tau1"));

  auto g = io::run_structure(json::parse(io::demo_structure("groupoid", p).dump()));
  CHECK(g.backend == "finset");
  CHECK(g.report.passed());
  CHECK(g.report.find("span.ax10"));

  p.group = "z3";
  p.p = 3;
  auto h = io::run_structure(json::parse(io::demo_structure("group-hopf", p).dump()));
  CHECK(h.backend == "mat/F_3");
  CHECK(h.report.passed());

  p.p = 2;
  p.max_n = 3;
  auto m = io::run_structure(json::parse(io::demo_structure("mat", p).dump()));
  CHECK(m.kind == "frobcat");
  CHECK(m.report.passed());
  CHECK(m.report.find("span.frobenius.left"));

  io::DemoParams bad;
  bad.size = 5;
  CHECK(code_of([&] { io::demo_structure("x2", bad); }) == Errc::OutOfBounds);
  bad = {};
  bad.p = 101;
  CHECK(code_of([&] { io::demo_structure("mat", bad); }) == Errc::OutOfBounds);
  bad.p = 9;
  CHECK(code_of([&] { io::demo_structure("group-hopf", bad); }) == Errc::OutOfBounds);
  bad = {};
  bad.group = "z4";
  CHECK(code_of([&] { io::demo_structure("group-hopf", bad); }) == Errc::OutOfBounds);
  CHECK(code_of([&] { io::demo_structure("torus", {}); }) == Errc::OutOfBounds);
}

TEST_CASE("reports are deterministic and carry a summary") {
  const std::string text = io::demo_structure("x2", {}).dump(2);
  auto r1 = io::run_structure(io::parse_structure(text));
  auto r2 = io::run_structure(io::parse_structure(text));
  auto j1 = io::report_json(r1, io::fnv1a64(text), std::nullopt).dump(2);
  auto j2 = io::report_json(r2, io::fnv1a64(text), std::nullopt).dump(2);
  CHECK(j1 == j2);
  auto j = io::report_json(r1, io::fnv1a64(text), std::string("2026-01-01T00:00:00Z"));
  CHECK(j["summary"]["status"] == "pass");
  CHECK(j["summary"]["records"] == r1.report.records.size());
  CHECK(j["input_digest"] == "fnv1a64:" + io::fnv1a64(text));
  CHECK(j.back() == "2026-01-01T00:00:00Z");

  json d = json::parse(text);
  d["two_cells"]["theta0"][0] = 1;
  auto bad = io::run_structure(d);
  auto jb = io::report_json(bad, "0", std::nullopt);
  CHECK(jb["summary"]["status"] == "fail");
  bool named = false;
  for (const auto& rec : jb["records"])
    if (rec["id"] == "ax2") named = rec["status"] == "fail" && rec["counterexample"]["cell"] == "theta0";
  CHECK(named);
  const std::string t = io::report_text(bad);
  CHECK(t.find("ax2: FAIL") != std::string::npos);
  CHECK(t.find("failed") != std::string::npos);
}
