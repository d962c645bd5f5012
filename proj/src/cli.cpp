#include "ips/cli.hpp"

#include <algorithm>
#include <set>

#include <CLI11.hpp>

#include "ips/bounds.hpp"
#include "ips/constructions.hpp"
#include "ips/packing.hpp"
#include "ips/search.hpp"

namespace ips::cli {

namespace {

constexpr int kDecimalDigits = 18;

CommandResult usage(const std::string& message) {
  return {kUsage, {{"error", message}}, message};
}

CommandResult document_error(const std::string& message) {
  return {kUsage, {{"error", message}}, message};
}

Json interval_json(const RationalInterval& x) {
  return {{"low", rational_string(x.low())},
          {"high", rational_string(x.high())},
          {"low_decimal", to_decimal(x.low(), kDecimalDigits, Rounding::Down)},
          {"high_decimal", to_decimal(x.high(), kDecimalDigits, Rounding::Up)}};
}

Json point_json(const PlanarPoint& p) {
  return {{"x", rational_string(p.x)}, {"y", rational_string(p.y_coeff)}};
}

Json indices_json(const std::vector<std::size_t>& v) { return Json(v); }

std::vector<std::uint32_t> kept_masks(const std::vector<PointRole>& roles) {
  std::set<std::uint32_t> masks;
  for (const auto& r : roles)
    if (r.kind != RoleKind::Apex) masks.insert(r.mask);
  return {masks.begin(), masks.end()};
}

Json roles_json(const std::vector<PointRole>& roles) {
  Json out = Json::array();
  for (const auto& r : roles) {
    switch (r.kind) {
      case RoleKind::LinePlus: out.push_back("+" + std::to_string(r.mask)); break;
      case RoleKind::LineMinus: out.push_back("-" + std::to_string(r.mask)); break;
      case RoleKind::Apex: out.push_back("apex"); break;
    }
  }
  return out;
}

}  // namespace

CommandResult run_construct(const ConstructArgs& a) {
  try {
    if (a.prime) {
      if (a.k || a.trim || a.dilate) return usage("--prime takes --m, --n, --d, --unique-min only");
      if (!a.m || !a.n || !a.d) return usage("--prime needs --m, --n and --d");
      if (*a.m < 3) return usage("--m must be at least 3");
      if (*a.n < *a.m + 1) return usage("--n must exceed --m");
      if (*a.d < 1) return usage("--d must be positive");
      const auto r = prime_set(*a.m, *a.n, *a.d, a.unique_min);
      Json prov = {{"generator", "prime_set"},
                   {"k", r.k},
                   {"subsets", kept_masks(r.kept)},
                   {"roles", roles_json(r.kept)},
                   {"dilation", r.dilation.get_str()},
                   {"m", r.target_dim},
                   {"s", r.simplex_side.get_str()},
                   {"d", *a.d},
                   {"unique_min", a.unique_min},
                   {"min_distance_unique", r.min_distance_unique}};
      return {kOk, distance_matrix_to_json({r.matrix, std::move(prov)}), {}};
    }
    if (a.m || a.n || a.d || a.unique_min) return usage("--m, --n, --d, --unique-min need --prime");
    if (!a.k) return usage("construct needs --k or --prime");
    if (*a.k < 1 || *a.k > 16) return usage("--k must be in 1..16");
    Construction c = construction1(*a.k);
    if (a.trim) c = trim(c, *a.trim);
    if (a.dilate) {
      if (*a.dilate < 1) return usage("--dilate must be positive");
      c = dilate(c, Integer(*a.dilate));
    }
    Json prov = {{"generator", "construction1"},
                 {"k", *a.k},
                 {"subsets", kept_masks(c.roles)},
                 {"roles", roles_json(c.roles)},
                 {"dilation", c.dilation.get_str()}};
    return {kOk, planar_to_json({c.set, std::move(prov)}), {}};
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  }
}

CommandResult run_verify(const Json& document, std::optional<long> expected_dim) {
  const auto format = document.is_object() ? document.value("format", std::string()) : "";
  try {
    if (format == kPlanarFormat) {
      const auto doc = planar_from_json(document);
      const auto report = verify_integral_set(doc.set);
      const long dim = report.full_dimensional ? 2 : 1;
      Json out = {{"format", format},
                  {"n", doc.set.size()},
                  {"integral", report.is_integral},
                  {"full_dimensional", report.full_dimensional},
                  {"dimension", dim}};
      Json failures = Json::array();
      for (const auto& f : report.failures)
        failures.push_back({{"i", f.i}, {"j", f.j}, {"dist_squared", rational_string(f.dist_squared)}});
      out["failures"] = std::move(failures);
      bool ok = report.is_integral && report.full_dimensional;
      if (report.is_integral) {
        out["diameter"] = report.diameter.get_str();
        out["min_distance"] = report.min_distance.get_str();
        Integer g = 0;
        for (const auto& x : report.distance_multiset)
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        out["gcd"] = g.get_str();
        out["prime"] = g == 1;
      }
      if (ok) out["characteristic"] = characteristic(doc.set).get_str();
      if (expected_dim) {
        out["expected_dimension"] = *expected_dim;
        ok = ok && *expected_dim == dim;
      }
      out["verified"] = ok;
      return {ok ? kOk : kValidationFailure, std::move(out), {}};
    }
    if (format == kDistanceMatrixFormat) {
      const auto doc = distance_matrix_from_json(document);
      const auto v = realizable_dim(doc.matrix);
      Json out = {{"format", format},
                  {"n", doc.matrix.size()},
                  {"integral", true},
                  {"gram_rank", v.gram_rank},
                  {"psd", v.psd},
                  {"realizable", v.dimension.has_value()},
                  {"diameter", doc.matrix.diameter().get_str()},
                  {"min_distance", doc.matrix.min_distance().get_str()},
                  {"gcd", doc.matrix.gcd().get_str()},
                  {"prime", doc.matrix.gcd() == 1}};
      bool ok = v.full_dim_in.has_value();
      if (v.dimension) out["dimension"] = *v.dimension;
      if (expected_dim) {
        out["expected_dimension"] = *expected_dim;
        ok = ok && v.dimension == Eigen::Index{*expected_dim};
      }
      out["verified"] = ok;
      return {ok ? kOk : kValidationFailure, std::move(out), {}};
    }
  } catch (const DocumentError& e) {
    return document_error(e.what());
  }
  return document_error("unknown document format \"" + format + "\"");
}

CommandResult run_bounds(const BoundsArgs& a) {
  try {
    const BoundsConstants k = constants();
    Json out;
    out["cutoffs"] = {{"n", k.cutoffs.n},
                      {"diameter", k.cutoffs.diameter.get_str()},
                      {"t", k.cutoffs.t}};
    out["constants"] = {{"beta", interval_json(k.beta)},
                        {"gamma2", interval_json(k.gamma2)},
                        {"lambda_min", interval_json(k.lambda_min)},
                        {"gamma", interval_json(k.gamma)},
                        {"limit_constant", interval_json(limit_constant())}};
    const Rational reference = Rational::parse(kBetaReferenceBound);
    const bool beta_above = k.beta.low() > reference;
    out["beta_reference"] = {{"value", rational_string(reference)},
                             {"decimal", to_decimal(reference, 5, Rounding::Down)},
                             {"certified_beta_exceeds_reference", beta_above}};
    Json flags = Json::array();
    if (beta_above)
      flags.push_back({{"id", "beta-exceeds-reference-bound"},
                       {"detail", "the certified beta interval lies above " +
                                      to_decimal(reference, 5, Rounding::Down) +
                                      "; gamma is computed from the certified beta"}});
    out["flags"] = std::move(flags);
    const Rational five_elevenths(5, 11);
    out["checks"] = {
        {"gamma_exceeds_5_11", k.gamma.low() > five_elevenths},
        {"segment_length_at_t", interval_json(min_segment_length(k.cutoffs.t))},
        {"segment_exceeds_cutoff_diameter", segment_length_exceeds(k.cutoffs.t, k.cutoffs.diameter)}};

    if (a.diameter) {
      Integer dia;
      if (dia.set_str(*a.diameter, 10) != 0 || dia < 1) return usage("--diameter must be a positive integer");
      const Cutoffs c = cutoffs_for_diameter(dia);
      out["custom_cutoffs"] = {{"n", c.n},
                               {"diameter", c.diameter.get_str()},
                               {"t", c.t},
                               {"gamma", interval_json(gamma_for_cutoffs(c))}};
    }

    if (a.all) {
      Json pps = Json::array();
      for (long kk = 2; kk <= 30; ++kk) {
        const auto b = pps_bounds(kk);
        pps.push_back({{"k", kk}, {"lower", interval_json(b.lower)}, {"upper", interval_json(b.upper)}});
      }
      out["pps_bounds"] = std::move(pps);
      Json env = Json::array();
      for (long kk : {21491L, 21492L, 30000L, 100000L, 1000000L})
        env.push_back({{"k", kk}, {"holds", beta_envelope_holds(kk, k.cutoffs.n)}});
      out["beta_envelope"] = std::move(env);
      Json dl = Json::array();
      for (long n : {4L, 123L, 21491L, 21492L, 100000L})
        dl.push_back({{"n", n}, {"lower", interval_json(diameter_lower(n))}});
      out["diameter_lower"] = std::move(dl);
    }

    bool consistent = true;
    if (a.known_values) {
      std::map<long, Integer> table;
      try {
        table = load_known_values(*a.known_values);
      } catch (const std::runtime_error& e) {
        return usage(e.what());
      }
      Json rows = Json::array();
      for (const auto& [n, d] : table) {
        Json row = {{"n", n}, {"diameter", d.get_str()}};
        bool ok = true;
        if (n >= 4) {
          const auto lower = diameter_lower(n);
          row["lower"] = interval_json(lower);
          ok = ok && Rational(d) >= lower.low();
        }
        if (n <= 7 && d <= 50) {
          const auto s = min_diameter(static_cast<int>(n), d.get_si());
          const bool match = s.result && s.result->min_diameter == d;
          row["search_verified"] = match;
          ok = ok && match;
        }
        row["consistent"] = ok;
        consistent = consistent && ok;
        rows.push_back(std::move(row));
      }
      out["known_values"] = std::move(rows);
    }
    return {consistent ? kOk : kValidationFailure, std::move(out), {}};
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  }
}

CommandResult run_pack(const PackArgs& a) {
  if (a.k < 2) return usage("--k must be at least 2");
  if (a.restarts < 1 || a.iterations < 1) return usage("--restarts and --iters must be positive");
  PackingOptions o;
  o.seed = a.seed;
  o.restarts = a.restarts;
  o.iterations = a.iterations;
  o.jobs = std::max(1u, a.jobs);
  const Packing p = pps_solve(a.k, o);
  const auto check = pps_validate(p);
  const auto bounds = pps_bounds(a.k);
  const Rational objective{mpq_class(check.min_pairwise)};
  const bool within = bounds.lower.low() <= objective && objective <= bounds.upper.high();
  Json points = Json::array();
  for (Eigen::Index i = 0; i < p.coordinates.cols(); ++i)
    points.push_back({p.coordinates(0, i), p.coordinates(1, i)});
  Json out = {{"format", "ips-packing/1"},
              {"k", a.k},
              {"seed", a.seed},
              {"restarts", a.restarts},
              {"iterations", a.iterations},
              {"min_pairwise", check.min_pairwise},
              {"points", std::move(points)},
              {"in_square", check.in_square},
              {"bounds", {{"lower", interval_json(bounds.lower)}, {"upper", interval_json(bounds.upper)}}},
              {"within_bounds", within}};
  return {check.in_square && within ? kOk : kValidationFailure, std::move(out), {}};
}

CommandResult run_search(const SearchArgs& a) {
  try {
    if (a.unit4) {
      const auto sets = enumerate_unit4(a.bmax);
      Json docs = Json::array();
      std::size_t counterexamples = 0;
      for (const auto& m : sets) {
        const bool collinear = has_collinear_triple_with_unit_pair(m);
        counterexamples += collinear ? 0 : 1;
        docs.push_back({{"entries", distance_matrix_to_json({m, {}})["entries"]},
                        {"collinear_with_unit_pair", collinear}});
      }
      Json out = {{"bmax", a.bmax},
                  {"count", sets.size()},
                  {"counterexamples", counterexamples},
                  {"sets", std::move(docs)}};
      return {counterexamples == 0 ? kOk : kValidationFailure, std::move(out), {}};
    }
    const auto s = min_diameter(a.n, a.bmax, std::max(1u, a.jobs));
    Json out = {{"n", s.n}, {"bmax", s.bound}, {"nodes_explored", s.nodes_explored}};
    if (!s.result) {
      out["found"] = false;
      return {kNotFound, std::move(out), {}};
    }
    out["found"] = true;
    out["min_diameter"] = s.result->min_diameter.get_str();
    out["witness"] = distance_matrix_to_json(
        {s.result->witness, {{"generator", "min_diameter"}, {"n", s.n}, {"bmax", s.bound}}});
    return {kOk, std::move(out), {}};
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  }
}

CommandResult run_classify(const Json& document, std::optional<long> radius) {
  PlanarDocument doc;
  try {
    doc = planar_from_json(document);
  } catch (const DocumentError& e) {
    return document_error(e.what());
  }
  Json out = {{"n", doc.set.size()}};
  UnitSetClassification verdict;
  try {
    verdict = classify_unit_set(doc.set);
  } catch (const std::invalid_argument& e) {
    out["verdict"] = "rejected";
    out["reason"] = e.what();
    return {kValidationFailure, std::move(out), {}};
  }
  if (const auto* v = std::get_if<Violation>(&verdict)) {
    out["verdict"] = "violation";
    out["reason"] = v->reason;
    out["witness"] = indices_json(v->witness);
    return {kValidationFailure, std::move(out), {}};
  }
  const auto& f = std::get<FacherVerdict>(verdict);
  out["verdict"] = "facher";
  out["line_points"] = indices_json(f.line_points);
  out["apex"] = f.apex;
  out["unit_pair"] = {f.unit_pair.first, f.unit_pair.second};
  if (radius) {
    try {
      const auto m = bounded_maximality(doc.set, *radius);
      if (const auto* e = std::get_if<Extendable>(&m))
        out["maximality"] = {{"verdict", "extendable"}, {"point", point_json(e->point)}, {"radius_bound", *radius}};
      else
        out["maximality"] = {{"verdict", "maximal_within"}, {"radius_bound", *radius}};
    } catch (const std::invalid_argument& e) {
      return usage(e.what());
    }
  }
  return {kOk, std::move(out), {}};
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact tools for integral point sets", "ips"};
  app.require_subcommand(1);

  ConstructArgs ca;
  int k = 0, m = 0, n = 0;
  std::size_t trim_n = 0;
  long dilate_p = 0, d = 0;
  std::string out_path;
  auto* construct = app.add_subcommand("construct", "Build a point set or prime distance matrix");
  auto* k_opt = construct->add_option("--k", k, "construction parameter k");
  auto* trim_opt = construct->add_option("--trim", trim_n, "keep this many points");
  auto* dilate_opt = construct->add_option("--dilate", dilate_p, "scale by this integer");
  construct->add_flag("--prime", ca.prime, "emit a prime set in dimension m");
  auto* m_opt = construct->add_option("--m", m, "target dimension");
  auto* n_opt = construct->add_option("--n", n, "number of points");
  auto* d_opt = construct->add_option("--d", d, "distance that must occur");
  construct->add_flag("--unique-min", ca.unique_min, "d is the unique minimum distance");
  construct->add_option("--out", out_path, "also write the document here");

  std::string input;
  long dim = 0;
  auto* verify = app.add_subcommand("verify", "Check a point-set or distance-matrix document");
  verify->add_option("input", input, "document path")->required();
  auto* dim_opt = verify->add_option("--dim", dim, "expected dimension");

  BoundsArgs ba;
  std::string known;
  auto* bounds = app.add_subcommand("bounds", "Certified constants");
  bounds->add_flag("--all", ba.all, "include packing bounds and sampled checks");
  auto* known_opt = bounds->add_option("--known-values", known, "CSV n,diameter");
  std::string diameter;
  auto* diameter_opt = bounds->add_option("--diameter", diameter, "derive cutoffs for this diameter");

  PackArgs pa;
  auto* pack = app.add_subcommand("pack", "Max-min packing in the unit square");
  pack->add_option("--k", pa.k, "number of points")->required();
  pack->add_option("--seed", pa.seed, "random seed");
  pack->add_option("--restarts", pa.restarts, "independent starts");
  pack->add_option("--iters", pa.iterations, "iterations per start");
  pack->add_option("--jobs", pa.jobs, "worker threads");
  pack->add_option("--out", out_path, "also write the packing here");

  SearchArgs sa;
  std::string emit_path;
  auto* search = app.add_subcommand("search", "Exhaustive least-diameter search");
  auto* sn_opt = search->add_option("--n", sa.n, "number of points");
  search->add_option("--bmax", sa.bmax, "largest distance considered")->required();
  search->add_option("--jobs", sa.jobs, "worker threads");
  search->add_flag("--unit4", sa.unit4, "enumerate 4-point sets with a unit distance");
  search->add_option("--emit", emit_path, "write the witness matrix here");

  long radius = 0;
  auto* classify = app.add_subcommand("classify", "Structure of a set with a unit distance");
  classify->add_option("input", input, "point-set document")->required();
  auto* radius_opt = classify->add_option("--radius", radius, "bounded one-point extension check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kOk, Json::object(), app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {kOk, Json::object(), app.help()};
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  auto load = [&](const std::string& path) { return read_json_file(path); };
  CommandResult result;
  try {
    if (construct->parsed()) {
      if (k_opt->count()) ca.k = k;
      if (trim_opt->count()) ca.trim = trim_n;
      if (dilate_opt->count()) ca.dilate = dilate_p;
      if (m_opt->count()) ca.m = m;
      if (n_opt->count()) ca.n = n;
      if (d_opt->count()) ca.d = d;
      result = run_construct(ca);
    } else if (verify->parsed()) {
      result = run_verify(load(input), dim_opt->count() ? std::optional<long>(dim) : std::nullopt);
    } else if (bounds->parsed()) {
      if (known_opt->count()) ba.known_values = known;
      if (diameter_opt->count()) ba.diameter = diameter;
      result = run_bounds(ba);
    } else if (pack->parsed()) {
      result = run_pack(pa);
    } else if (search->parsed()) {
      if (!sa.unit4 && !sn_opt->count()) return usage("search needs --n or --unit4");
      if (sa.unit4 && sn_opt->count()) return usage("--unit4 does not take --n");
      result = run_search(sa);
    } else if (classify->parsed()) {
      result = run_classify(load(input),
                            radius_opt->count() ? std::optional<long>(radius) : std::nullopt);
    }
  } catch (const DocumentError& e) {
    return document_error(e.what());
  }

  try {
    if (!out_path.empty() && result.exit_code != kUsage)
      write_text_file(out_path, dump_document(result.report));
    if (!emit_path.empty() && result.report.contains("witness"))
      write_text_file(emit_path, dump_document(result.report["witness"]));
  } catch (const std::runtime_error& e) {
    return usage(e.what());
  }
  return result;
}

}  // namespace ips::cli
