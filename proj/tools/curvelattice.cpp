#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>

#include "curvelattice/errors.hpp"
#include "curvelattice/parse.hpp"
#include "report.hpp"

using namespace cl;
using report::json;

namespace {

const std::vector<std::string> kXY{"x", "y"};

struct CurveArgs {
  std::string g, curve;

  void attach(CLI::App* sub) {
    sub->add_option("--g", g, "ternary form in x, y, z");
    sub->add_option("--curve", curve, "curve document (path or inline JSON)");
  }
  CurveProfile profile() const {
    if (g.empty() == curve.empty()) throw UsageError("pass exactly one of --g and --curve");
    if (!g.empty()) return CurveProfile::detect(parse_poly(g, {"x", "y", "z"}));
    return report::curve_from_json(report::read_document(curve));
  }
};

WeightedPoly weighted(const std::string& f, const std::string& weights) {
  MPoly p = parse_poly(f, kXY);
  std::array<int, 2> w;
  if (weights.empty()) {
    w = report::infer_weights(p);
  } else {
    auto parts = CLI::detail::split(weights, ',');
    if (parts.size() != 2) throw UsageError("--weights takes two integers, e.g. 3,2");
    try {
      w = {std::stoi(parts[0]), std::stoi(parts[1])};
    } catch (const std::exception&) {
      throw UsageError("--weights takes two integers, e.g. 3,2");
    }
  }
  return WeightedPoly::make(p, w);
}

bool any_quasi(const std::vector<QuasiToricPoint>& pts) {
  for (auto& p : pts)
    if (p.n > 0) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvelattice: spectra, quasiadjunction defects, Mordell-Weil ranks and height lattices of plane curves"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  std::string field = "Q(w)", out;
  int threads = 1;
  app.add_option("--seed", seed, "seed for Table 1 parameters and line selection");
  app.add_option("--field", field, "coefficient field; only Q(w)");
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_option("--threads", threads, "worker threads (computation is single-threaded)")->check(CLI::PositiveNumber);

  std::string command;
  std::function<json()> run;
  std::vector<std::string> deviations;
  auto set = [&](CLI::App* sub, const std::string& name, std::function<json()> fn) {
    sub->callback([&, name, fn] {
      command = name;
      run = fn;
    });
  };

  // spectrum
  std::string f, weights;
  auto* sp = app.add_subcommand("spectrum", "spectrum of a quasi-homogeneous f(x, y)");
  sp->add_option("--f", f, "polynomial in x, y")->required();
  sp->add_option("--weights", weights, "w1,w2 (inferred when omitted)");
  set(sp, "spectrum", [&] {
    auto wp = weighted(f, weights);
    return json{{"spectrum", report::to_json(spectrum(wp))},
                {"weights", wp.weights},
                {"wdeg", wp.wdeg},
                {"milnor_number", report::to_json(wp.milnor_number())}};
  });

  CurveArgs curve;
  auto* sg = app.add_subcommand("singular", "singular locus and classification");
  curve.attach(sg);
  set(sg, "singular", [&] { return report::to_json(curve.profile()); });

  std::string alpha;
  auto* df = app.add_subcommand("defects", "quasiadjunction defects delta_alpha");
  curve.attach(df);
  df->add_option("--alpha", alpha, "a single alpha; all k/d otherwise");
  set(df, "defects", [&] {
    auto p = curve.profile();
    json rows = json::object();
    if (!alpha.empty()) {
      Rat a = parse_rat(alpha);
      rows[to_string(a)] = report::to_json(defect(p, a));
    } else {
      for (int k = 1; k < p.degree; ++k) rows[to_string(ratio(k, p.degree))] = report::to_json(defect(p, ratio(k, p.degree)));
    }
    return json{{"degree", p.degree}, {"defects", rows}};
  });

  auto* al = app.add_subcommand("alexander", "Alexander polynomial from the defects");
  curve.attach(al);
  set(al, "alexander", [&] { return report::to_json(alexander(curve.profile())); });

  int hyper_e = 0;
  auto* mw = app.add_subcommand("mwrank", "Mordell-Weil rank prediction");
  curve.attach(mw);
  mw->add_option("--f", f, "polynomial in x, y");
  mw->add_option("--weights", weights, "w1,w2 (inferred when omitted)");
  mw->add_option("--hyperelliptic", hyper_e, "e for y^2 = x^e + g instead of --f");
  set(mw, "mwrank", [&] {
    auto p = curve.profile();
    if (hyper_e > 0) {
      if (!f.empty()) throw UsageError("--f and --hyperelliptic are exclusive");
      deviations.push_back(report::kHyperellipticNote);
      return report::to_json(mw_rank_hyperelliptic(hyper_e, p));
    }
    if (f.empty()) throw UsageError("mwrank needs --f or --hyperelliptic");
    return report::to_json(mw_rank(weighted(f, weights), p));
  });

  auto* tor = app.add_subcommand("toric", "quasi-toric decompositions");
  tor->require_subcommand(1);
  auto* tf = tor->add_subcommand("find", "toric decompositions of a sextic");
  curve.attach(tf);
  set(tf, "toric find", [&] {
    auto s = find_toric_sextic(curve.profile());
    if (s.scale != CycloNum(1)) deviations.push_back(report::kScaleNote);
    return report::to_json(s);
  });
  std::string point_doc, points_doc;
  auto* tv = tor->add_subcommand("verify", "check Y^2 = X^3 + Z^6 g and the degrees");
  tv->add_option("--point", point_doc, "decomposition document")->required();
  set(tv, "toric verify", [&] {
    auto p = report::point_from_json(report::read_document(point_doc));
    auto v = verify_decomposition(p);
    json j{{"ok", v.ok}, {"point", report::to_json(p)}};
    if (v.ok) j["height"] = height(p);
    else j["violation"] = v.violation;
    return j;
  });
  auto* tg = tor->add_subcommand("gram", "height pairing Gram matrix");
  tg->add_option("--points", points_doc, "list of decomposition documents")->required();
  set(tg, "toric gram", [&] {
    auto pts = report::points_from_json(report::read_document(points_doc));
    if (any_quasi(pts)) deviations.push_back(report::kPairingNote);
    auto G = gram(pts);
    auto L = generated_lattice(to_qmatrix(G.entries));
    json lat{{"rank", L.gram.size()}, {"gram", report::to_json(L.gram)}};
    if (!L.gram.empty() && L.gram.size() <= kMaxEnumerationRank) {
      auto id = identify(L.gram);
      lat["identify"] = {{"tag", id.tag}, {"evidence", report::to_json(id.evidence)}};
    }
    return json{{"gram", report::to_json(G.entries)}, {"size", G.size()}, {"lattice", lat}};
  });
  auto* to = tor->add_subcommand("orbit", "the mu6 orbit of a point");
  to->add_option("--point", point_doc, "decomposition document")->required();
  set(to, "toric orbit", [&] {
    json pts = json::array();
    for (auto& q : mu6_orbit(report::point_from_json(report::read_document(point_doc)))) pts.push_back(report::to_json(q));
    return json{{"points", pts}};
  });

  int k = 2;
  auto* t1 = app.add_subcommand("table1", "seeded Table 1 construction of degree 6k");
  t1->add_option("--k", k, "k >= 1");
  set(t1, "table1", [&] {
    auto r = table1_construct(sample_table1_params(k, seed));
    auto p = table1_point(r);
    auto G = gram({p, omega(p)});
    deviations.push_back(report::kPairingNote);
    auto v = verify_decomposition(p);
    json j = report::to_json(r);
    j["point"] = report::to_json(p);
    j["verified"] = v.ok;
    j["height"] = height(p);
    j["gram"] = report::to_json(G.entries);
    return j;
  });

  auto* we = app.add_subcommand("weier", "Weierstrass fibration checks");
  we->require_subcommand(1);
  auto* wc = we->add_subcommand("check", "minimality and the no-reducible-fibers criterion");
  std::string A, B;
  int wk = 0;
  wc->add_option("--g", curve.g, "ternary form of degree 6k; restricted to a seeded line");
  wc->add_option("--A", A, "A(t)");
  wc->add_option("--B", B, "B(t)");
  wc->add_option("--k", wk, "k for --A/--B");
  set(wc, "weier check", [&] {
    WeierstrassData w;
    if (!curve.g.empty()) {
      if (!A.empty() || !B.empty()) throw UsageError("--g excludes --A/--B");
      w = from_curve(parse_poly(curve.g, {"x", "y", "z"}), seed);
    } else {
      if (B.empty() || wk < 1) throw UsageError("weier check needs --g, or --B and --k (with optional --A)");
      w = WeierstrassData::make(parse_poly(A.empty() ? "0" : A, {"t"}), parse_poly(B, {"t"}), wk);
    }
    json j{{"model", report::to_json(w)}, {"minimal", is_minimal(w)}};
    if (j["minimal"]) {
      auto fr = fiber_report(w);
      j["fibers"] = report::to_json(fr);
      for (auto& d : fr.deviations) deviations.push_back(d);
    }
    return j;
  });

  auto* la = app.add_subcommand("lattice", "lattice analytics on Gram matrices");
  la->require_subcommand(1);
  std::string gdoc, adoc, bdoc;
  auto gram_in = [&] { return report::gram_from_json(report::read_document(gdoc)); };
  auto* lm = la->add_subcommand("minvec", "shortest vectors");
  lm->add_option("--gram", gdoc, "Gram matrix document")->required();
  set(lm, "lattice minvec", [&] { return report::to_json(shortest_vectors(gram_in())); });
  auto* li = la->add_subcommand("id", "root lattice identification by invariants");
  li->add_option("--gram", gdoc, "Gram matrix document")->required();
  set(li, "lattice id", [&] {
    auto id = identify(gram_in());
    return json{{"tag", id.tag}, {"evidence", report::to_json(id.evidence)}};
  });
  auto* ld = la->add_subcommand("diag", "diagonalization over Q");
  ld->add_option("--gram", gdoc, "Gram matrix document")->required();
  set(ld, "lattice diag", [&] { return report::to_json(diagonalize(gram_in())); });
  auto* lq = la->add_subcommand("qequiv", "Q-equivalence via Hasse invariants");
  lq->add_option("--a", adoc, "Gram matrix document")->required();
  lq->add_option("--b", bdoc, "Gram matrix document")->required();
  set(lq, "lattice qequiv", [&] {
    return report::to_json(q_equivalent(report::gram_from_json(report::read_document(adoc)),
                                        report::gram_from_json(report::read_document(bdoc))));
  });

  auto* zr = app.add_subcommand("zariski", "certificate that two curves form a Zariski pair");
  zr->add_option("--a", adoc, "side document")->required();
  zr->add_option("--b", bdoc, "side document")->required();
  set(zr, "zariski", [&] {
    auto a = report::side_from_json(report::read_document(adoc));
    auto b = report::side_from_json(report::read_document(bdoc));
    if (a.source == "computed" || b.source == "computed") deviations.push_back(report::kPairingNote);
    return report::to_json(zariski_certificate(a, b));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  json doc;
  int rc = 0;
  try {
    if (field != "Q(w)") throw UsageError("--field: only Q(w) is supported");
    doc = report::envelope(command, run(), deviations);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    doc = report::error_report(command, "UsageError", e.what());
    rc = 1;
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    doc = report::error_report(command, e.kind(), e.what());
    rc = 2;
  } catch (const json::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    doc = report::error_report(command, "UsageError", e.what());
    rc = 1;
  }

  std::string text = doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(out);
    if (!o) {
      std::cerr << "cannot write " << out << "\n";
      return 1;
    }
    o << text;
  }
  return rc;
}
