#include "report.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "curvelattice/errors.hpp"
#include "curvelattice/parse.hpp"

namespace cl::report {

const char* const kPairingNote =
    "pairing: (P.Q) drops common factors C of Z_P, Z_Q from the gcd and adds the C-part of "
    "X_P Z_P Y_Q - X_Q Z_Q Y_P; equal to the plain gcd formula when Z_P, Z_Q are coprime";
const char* const kScaleNote =
    "toric scale: decompositions are reported on s^2 g (same curve) with s chosen so that the "
    "cube roots lambda^3 = s^2 mu lie in Q(w)";
const char* const kHyperellipticNote =
    "hyperelliptic sum taken over i = 1..floor((e-1)/2), the range that agrees with mw_rank for x^2 + y^e";

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

json rat_map(const std::map<Rat, int>& m) {
  json j = json::object();
  for (auto& [a, v] : m) j[to_string(a)] = v;
  return j;
}

std::vector<std::string> vars_of(const json& doc) {
  if (!doc.contains("vars")) return kXYZ;
  auto v = doc.at("vars").get<std::vector<std::string>>();
  if (v.size() != 3) throw UsageError("\"vars\" must list three names");
  return v;
}

PointKind kind_from(const std::string& s) {
  if (s == "node") return PointKind::Node;
  if (s == "cusp") return PointKind::Cusp;
  throw UsageError("unknown singularity kind \"" + s + "\"");
}

Monomial monomial_from(const json& j) {
  auto v = j.get<std::vector<int>>();
  if (v.size() != 3) throw UsageError("a derivative multi-index has three entries");
  return Monomial(v.begin(), v.end());
}

Rat rat_from(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw UsageError("expected an integer or a rational string");
}

int int_field(const json& doc, const char* key, int dflt) {
  return doc.contains(key) ? doc.at(key).get<int>() : dflt;
}

}  // namespace

json envelope(const std::string& command, json body, const std::vector<std::string>& deviations) {
  body["schema"] = kSchema;
  body["command"] = command;
  body["deviations"] = deviations;
  return body;
}

json error_report(const std::string& command, const std::string& kind, const std::string& message) {
  json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  return envelope(command, j, {});
}

json to_json(const Rat& q) { return to_string(q); }

json to_json(const QMatrix& m) {
  json j = json::array();
  for (auto& row : m) {
    json r = json::array();
    for (auto& x : row) r.push_back(x.get_den() == 1 ? json(x.get_num().get_si()) : json(to_string(x)));
    j.push_back(r);
  }
  return j;
}

json to_json(const IntMatrix& m) { return json(m); }

json to_json(const Spectrum& s) {
  json j = json::object();
  for (auto& [a, v] : s)
    if (v) j[to_string(a)] = v;
  return j;
}

json to_json(const CurveProfile& p) {
  json pts = json::array();
  for (auto& c : p.points) pts.push_back({{"point", c.point.str()}, {"kind", to_string(c.kind)}});
  json cls = json::array();
  for (auto& c : p.clusters)
    cls.push_back({{"minpoly", c.minpoly.str("s")},
                   {"coords", {c.coords[0].str("s"), c.coords[1].str("s"), c.coords[2].str("s")}},
                   {"kind", to_string(c.kind)},
                   {"size", c.size()}});
  return {{"poly", p.g.str()}, {"degree", p.degree}, {"components", p.components},
          {"points", pts},     {"clusters", cls},    {"cusps", p.cusp_count()},
          {"nodes", p.node_count()}};
}

json to_json(const DefectRow& r) {
  return {{"l", r.l}, {"h", r.h}, {"delta", r.delta}, {"form_degree", r.form_degree}, {"rank_method", r.rank_method}};
}

json to_json(const AlexanderPoly& a) {
  json d = json::object();
  for (auto& [alpha, row] : a.defects) d[to_string(alpha)] = to_json(row);
  return {{"alexander", a.str()}, {"orders", rat_map(a.orders)}, {"defects", d}, {"degree", a.total_degree()}};
}

json to_json(const RankReport& r) {
  json j{{"applicable", r.applicable}, {"e", r.e}};
  if (!r.applicable) {
    j["reason"] = r.reason;
    j["obstruction"] = rat_map(r.obstruction);
    return j;
  }
  j["rank"] = r.rank;
  j["contributions"] = rat_map(r.contributions);
  j["rank_from_defects"] = r.rank_from_defects;
  j["formulas_agree"] = r.formulas_agree;
  j["order_at_one"] = r.order_at_one;
  return j;
}

json to_json(const QuasiToricPoint& p) {
  return {{"X", p.X.str()}, {"Y", p.Y.str()}, {"Z", p.Z.str()}, {"g", p.g.str()},
          {"vars", p.g.vars()}, {"k", p.k}, {"n", p.n}};
}

json to_json(const ToricSearch& s) {
  json pts = json::array();
  for (auto& p : s.points) pts.push_back(to_json(p));
  json conics = json::array();
  for (auto& q : s.conics) conics.push_back(q.str());
  return {{"scale", s.scale.str()},         {"points", pts},
          {"count", s.points.size()},       {"conics", conics},
          {"field_exhausted", s.field_exhausted}, {"complete_in_field", s.complete_in_field()},
          {"note", s.note}};
}

json to_json(const Table1Result& r) {
  auto strs = [](const std::vector<MPoly>& v) {
    std::vector<std::string> out;
    for (auto& p : v) out.push_back(p.str());
    return out;
  };
  const auto& pr = r.params;
  return {{"f", r.f.str()},
          {"g", r.g.str()},
          {"F", r.F.str()},
          {"params",
           {{"k", pr.k}, {"seed", pr.seed}, {"u", pr.u.str()}, {"f1p", pr.f1p.str()}, {"f2p", pr.f2p.str()},
            {"f_free", strs(pr.f_free)}, {"g_free", strs(pr.g_free)}}}};
}

json to_json(const WeierstrassData& w) { return {{"A", w.A.str()}, {"B", w.B.str()}, {"k", w.k}}; }

json to_json(const FiberReport& f) {
  auto val = [](int v) { return v == kInfiniteValuation ? json("inf") : json(v); };
  json places = json::array();
  for (auto& p : f.places)
    places.push_back({{"factor", p.factor}, {"degree", p.degree}, {"vA", val(p.vA)}, {"vB", val(p.vB)},
                      {"vDisc", val(p.vDisc)}});
  json j{{"irreducible", f.irreducible}, {"places", places}};
  if (!f.irreducible) j["failing_place"] = f.failing_place;
  return j;
}

json to_json(const ShortVectors& s) {
  return {{"min_norm", to_json(s.min_norm)}, {"count", s.count}, {"vectors", s.vectors}};
}

json to_json(const LatticeEvidence& e) {
  return {{"rank", e.rank}, {"det", to_json(e.det)}, {"min_norm", to_json(e.min_norm)},
          {"kissing", e.kissing}, {"tuple", e.str()}};
}

json to_json(const Diagonalization& d) {
  json e = json::array(), r = json::array();
  for (auto& x : d.entries) e.push_back(to_string(x));
  for (auto& x : d.reduced) r.push_back(to_string(x));
  return {{"entries", e}, {"reduced", r}, {"transform", to_json(d.transform)}};
}

json to_json(const QEquivalence& q) {
  json h = json::object();
  for (auto& [p, ab] : q.hasse) h[to_string(p)] = {ab.first, ab.second};
  json j{{"equivalent", q.equivalent},
         {"signature", {q.signature_a, q.signature_b}},
         {"discriminant", {to_string(q.disc_a), to_string(q.disc_b)}},
         {"hasse", h}};
  if (!q.equivalent) j["reason"] = q.reason;
  if (q.witness_prime) j["witness_prime"] = q.witness_prime->get_si();
  return j;
}

json to_json(const ZariskiSide& s) {
  return {{"name", s.name},
          {"source", s.source},
          {"degree", s.degree},
          {"cusps", s.cusps},
          {"nodes", s.nodes},
          {"other", s.other},
          {"components", s.components},
          {"alexander", s.alexander_str()},
          {"alexander_orders", rat_map(s.alexander)},
          {"delta_sixth", s.delta_sixth},
          {"predicted_rank", s.predicted_rank},
          {"gram", to_json(s.gram)}};
}

json to_json(const ZariskiCertificate& c) {
  json j{{"verdict", c.verdict},       {"certified", c.certified},
         {"reason", c.reason},         {"a", to_json(c.a)},
         {"b", to_json(c.b)},          {"q_equivalence", to_json(c.qe)},
         {"assumptions", c.assumptions}};
  if (!c.diag_a.entries.empty()) j["a"]["diagonalization"] = to_json(c.diag_a);
  if (!c.diag_b.entries.empty()) j["b"]["diagonalization"] = to_json(c.diag_b);
  return j;
}

json read_document(const std::string& path_or_inline) {
  std::string text = path_or_inline;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) {
    std::ifstream in(path_or_inline);
    if (!in) throw UsageError("cannot read " + path_or_inline);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(path_or_inline + ": " + e.what());
  }
}

CurveProfile curve_from_json(const json& doc) {
  if (!doc.contains("poly")) throw UsageError("curve document needs \"poly\"");
  auto vars = vars_of(doc);
  MPoly g = parse_poly(doc.at("poly").get<std::string>(), vars);
  bool declared = doc.contains("components");
  int r = int_field(doc, "components", 1);
  if (!doc.contains("singularities")) return CurveProfile::detect(g, r, declared);
  std::vector<ClassifiedPoint> pts;
  for (auto& s : doc.at("singularities")) {
    auto c = s.at("point").get<std::vector<std::string>>();
    if (c.size() != 3) throw UsageError("a point has three coordinates");
    ClassifiedPoint cp;
    cp.point = ProjPoint(parse_cyclo(c[0]), parse_cyclo(c[1]), parse_cyclo(c[2]));
    const json& k = s.at("kind");
    if (k.is_string()) {
      cp.kind = kind_from(k.get<std::string>());
    } else {
      cp.kind = PointKind::Custom;
      for (auto& cond : k.at("custom")) {
        CustomCondition cc;
        cc.alpha = rat_from(cond.at("alpha"));
        for (auto& d : cond.at("derivs")) cc.derivs.push_back(monomial_from(d));
        cp.custom.push_back(cc);
      }
    }
    pts.push_back(cp);
  }
  return CurveProfile::with_points(g, pts, r, declared);
}

QuasiToricPoint point_from_json(const json& doc) {
  auto vars = vars_of(doc);
  auto get = [&](const char* key) {
    if (!doc.contains(key)) throw UsageError(std::string("decomposition document needs \"") + key + "\"");
    return parse_poly(doc.at(key).get<std::string>(), vars);
  };
  return QuasiToricPoint::make(get("X"), get("Y"), get("Z"), get("g"));
}

std::vector<QuasiToricPoint> points_from_json(const json& doc) {
  const json& list = doc.is_object() && doc.contains("points") ? doc.at("points") : doc;
  if (!list.is_array()) throw UsageError("expected a list of decomposition documents");
  std::vector<QuasiToricPoint> out;
  for (auto& p : list) out.push_back(point_from_json(p));
  return out;
}

QMatrix gram_from_json(const json& doc) {
  const json& rows = doc.is_object() && doc.contains("gram") ? doc.at("gram") : doc;
  if (!rows.is_array()) throw UsageError("expected a Gram matrix");
  QMatrix m;
  for (auto& row : rows) {
    if (!row.is_array()) throw UsageError("Gram rows must be arrays");
    std::vector<Rat> r;
    for (auto& x : row) r.push_back(rat_from(x));
    m.push_back(r);
  }
  return m;
}

ZariskiSide side_from_json(const json& doc) {
  std::string kind = doc.value("kind", "");
  std::string name = doc.value("name", kind);
  if (kind == "fixture") {
    ZariskiSide s;
    s.name = name;
    s.degree = doc.at("degree").get<int>();
    s.cusps = int_field(doc, "cusps", 0);
    s.nodes = int_field(doc, "nodes", 0);
    s.other = int_field(doc, "other", 0);
    s.components = int_field(doc, "components", 1);
    for (auto& [a, o] : doc.at("alexander").items()) s.alexander[parse_rat(a)] = o.get<int>();
    s.delta_sixth = doc.at("delta_sixth").get<int>();
    s.predicted_rank = doc.at("predicted_rank").get<int>();
    return side_from_fixture(s, gram_from_json(doc.at("gram")));
  }
  if (kind == "table1") {
    auto r = table1_construct(sample_table1_params(doc.at("k").get<int>(), doc.at("seed").get<std::uint64_t>()));
    auto p = table1_point(r);
    return side_from_curve(name, CurveProfile::detect(r.F), {p, omega(p)});
  }
  if (kind == "curve") return side_from_curve(name, curve_from_json(doc.at("curve")), points_from_json(doc.at("points")));
  throw UsageError("side \"kind\" must be fixture, table1 or curve");
}

std::array<int, 2> infer_weights(const MPoly& f) {
  if (f.nvars() != 2 || f.is_zero()) throw UsageError("expected a nonzero polynomial in two variables");
  for (int s = 2; s <= 256; ++s)
    for (int w1 = s - 1; w1 >= 1; --w1) {
      int w2 = s - w1;
      if (std::gcd(w1, w2) == 1 && f.is_weighted_homogeneous({w1, w2})) return {w1, w2};
    }
  throw UsageError("no weights make f quasi-homogeneous; pass --weights");
}

}  // namespace cl::report
