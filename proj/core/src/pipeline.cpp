#include "latdeform/pipeline.hpp"

#include "json_detail.hpp"
#include "latdeform/chipfiring.hpp"
#include "latdeform/deformation.hpp"
#include "latdeform/digraph.hpp"
#include "latdeform/errors.hpp"
#include "latdeform/groebner.hpp"
#include "latdeform/json_io.hpp"
#include "latdeform/laplacianize.hpp"
#include "latdeform/scarf.hpp"

namespace latdeform {

using jsondetail::Json;

namespace {

RunResult ok(std::string output) {
  return RunResult{std::move(output), kExitOk};
}

RunResult run_laplacianize(const PipelineConfig&, const std::string& input) {
  BasisInput in = parse_basis_input(input);
  Lattice l = lattice_from_input(in);
  LaplacianPresentation lp = laplacianize(l);
  return ok(laplacianize_document(lp, l.index()));
}

RunResult run_superstabilize(const PipelineConfig& cfg,
                             const std::string& input) {
  IntMat q = parse_integer_laplacian(input);
  if (cfg.config_vector.empty()) {
    throw SchemaError("superstabilize requires --config");
  }
  IntVec c = parse_vector_text(cfg.config_vector);
  if (static_cast<int>(c.size()) != q.rows()) {
    throw SchemaError("config length must match the Laplacian size");
  }
  if (!away_nonnegative(c)) {
    throw SchemaError("config must be nonnegative away from vertex 0");
  }
  IntVec sigma = left_kernel_sigma(to_rat(q));
  StabilizeResult r = superstabilize(q, sigma, c);
  return ok(superstabilize_document(r));
}

RunResult run_grobner(const PipelineConfig& cfg, const std::string& input) {
  IntMat q = parse_integer_laplacian(input);
  WeightedDigraph g = digraph_from_laplacian(to_rat(q));
  IntVec sigma = left_kernel_sigma(to_rat(q));
  TermOrder order = spanning_tree_order(g);
  MarkedGB gb = grobner_basis(q, sigma, order);
  std::optional<bool> spairs;
  if (cfg.check_spairs) {
    spairs = spair_check(gb);
    if (!*spairs) throw Error("an S-pair did not reduce to zero");
  }
  return ok(grobner_document(gb, spairs));
}

RunResult run_deform(const PipelineConfig& cfg, const std::string& input) {
  if (cfg.delta <= 0) throw SchemaError("delta must be positive");
  if (cfg.levels < 1) throw SchemaError("levels must be at least 1");
  BasisInput in = parse_basis_input(input);
  Lattice l = lattice_from_input(in);
  if (cfg.levels == 1) {
    return ok(deformation_document(deform(l, cfg.delta)));
  }
  return ok(stable_sequence_document(
      stable_deformation_sequence(l, cfg.delta, cfg.levels)));
}

RunResult run_resolve(const PipelineConfig& cfg, const std::string& input) {
  if (cfg.delta <= 0) throw SchemaError("delta must be positive");
  BasisInput in = parse_basis_input(input);
  Lattice l = lattice_from_input(in);
  LaplacianPresentation lp = laplacianize(l);
  DeformationResult dr =
      deform_presentation(to_rat(lp.q), lp.sigma, cfg.delta);

  int n = lp.q.rows() - 1;
  int nvars = n + 1;
  WeightedDigraph g(nvars, lp.edges);
  TermOrder order = spanning_tree_order(g);
  MarkedGB gb = grobner_basis(dr.scaled_gen, lp.sigma, order);
  std::vector<IntVec> mingens = initial_ideal_mingens(gb);
  MonomialScarf ms = scarf_complex_monomial(mingens, nvars);

  IntMat basis_gen(n, nvars);
  IntMat basis_orig(n, nvars);
  for (int i = 0; i < n; ++i) {
    basis_gen.set_row(i, dr.scaled_gen.row(i + 1));
    basis_orig.set_row(i, lp.q.row(i + 1));
  }
  Lattice lgen = Lattice::from_basis(basis_gen);
  std::vector<IntVec> seeds;
  for (const MarkedBinomial& b : gb.binomials) seeds.push_back(b.u);
  QuotientScarf qs = scarf_complex_lattice(lgen, seeds);
  if (!scarf_shift_check(qs, ms)) {
    throw Error("scarf face counts disagree with the initial ideal");
  }
  QuotientScarf def = relabel_degenerate(qs, basis_gen, basis_orig);
  FreeComplex fc = free_complex(def);
  if (!dd_zero(fc, cfg.field)) {
    throw Error("free complex differential does not square to zero");
  }
  if (!check_exactness(def, fc, cfg.field)) {
    throw NonGenericResult("free complex is not exact");
  }
  std::vector<int> homology = quotient_homology(fc, cfg.field);
  std::vector<int> ranks;
  for (const auto& degs : fc.degrees) {
    ranks.push_back(static_cast<int>(degs.size()));
  }
  std::vector<int> betti = minimize_complex(fc, cfg.field);
  Int standard = standard_monomial_count(mingens, nvars);

  Json j;
  j["delta"] = jsondetail::write_rat(cfg.delta);
  j["field"] = cfg.field.rationals
                   ? std::string("rationals")
                   : "prime:" + std::to_string(cfg.field.prime);
  j["index"] = jsondetail::write_int(l.index());
  j["index_gen"] = jsondetail::write_int(lgen.index());
  j["standard_count"] = jsondetail::write_int(standard);
  j["q"] = jsondetail::write_int_mat(lp.q);
  j["sigma"] = jsondetail::write_int_vec(lp.sigma);
  j["q_gen"] = jsondetail::write_rat_mat(dr.q_gen);
  j["lambda"] = jsondetail::write_int(dr.lambda);
  j["scaled_gen"] = jsondetail::write_int_mat(dr.scaled_gen);
  j["step_count"] = static_cast<int>(dr.steps.size());
  Json steps = Json::array();
  for (const DeformationStep& s : dr.steps) {
    Json sj;
    sj["r"] = s.r;
    sj["x"] = jsondetail::write_int_vec(s.x);
    sj["i"] = s.i;
    sj["j"] = s.j;
    sj["epsilon"] = jsondetail::write_rat(s.epsilon);
    sj["lambda_r"] = jsondetail::write_int(s.lambda_r);
    steps.push_back(sj);
  }
  j["steps"] = steps;
  Json dist;
  dist["norm_sq"] = jsondetail::write_rat(dr.distance.norm_sq);
  dist["sqrt_decimal"] = dr.distance.decimal;
  j["distance"] = dist;
  j["grobner_count"] = static_cast<int>(gb.binomials.size());
  Json mg = Json::array();
  for (const IntVec& m : mingens) mg.push_back(jsondetail::write_int_vec(m));
  j["initial_mingens"] = mg;
  j["f_monomial"] = ms.f_vector();
  j["f_quotient"] = def.f_vector();
  j["shift_check"] = true;
  j["euler"] = euler_characteristic(def);
  j["exact"] = true;
  j["homology"] = homology;
  j["ranks"] = ranks;
  j["betti"] = betti;
  Json faces = Json::array();
  for (size_t dim = 0; dim < def.faces_by_dim.size(); ++dim) {
    for (const QuotientFace& f : def.faces_by_dim[dim]) {
      Json fj;
      fj["dim"] = static_cast<int>(dim);
      Json pts = Json::array();
      for (const IntVec& p : f.points) {
        pts.push_back(jsondetail::write_int_vec(p));
      }
      fj["points"] = pts;
      Json lps = Json::array();
      for (const IntVec& p : f.label_points) {
        lps.push_back(jsondetail::write_int_vec(p));
      }
      fj["label_points"] = lps;
      fj["label"] = jsondetail::write_int_vec(f.label);
      faces.push_back(fj);
    }
  }
  j["faces"] = faces;
  return ok(jsondetail::dump(j));
}

RunResult run_demo_pitfall(const PipelineConfig& cfg, const std::string&) {
  int k = cfg.pitfall_k;
  if (k < 1) throw SchemaError("k must be at least 1");
  IntMat gens(3, 4);
  gens.set_row(0, IntVec{Int(k), Int(-(k + 2)), Int(1), Int(1)});
  gens.set_row(1, IntVec{Int(1), Int(k), Int(-(k + 2)), Int(1)});
  gens.set_row(2, IntVec{Int(1), Int(1), Int(k), Int(-(k + 2))});
  Lattice l = Lattice::from_generators(gens);
  IntVec candidate{Int(-(k + 1)), Int(2), Int(k + 1), Int(-2)};
  bool member = l.member(candidate);

  TermOrder order = descending_index_order(4);
  std::vector<IntVec> leads;
  for (int r = 0; r < 3; ++r) {
    IntVec u = gens.row(r);
    IntVec plus = positive_part(u);
    IntVec minus = negative_part(u);
    leads.push_back(order.greater(plus, minus) ? plus : minus);
  }
  IntVec monomial = positive_part(candidate);
  std::vector<bool> divisible;
  bool any = false;
  for (const IntVec& lead : leads) {
    bool d = vec_leq(lead, monomial);
    divisible.push_back(d);
    any = any || d;
  }

  Json j;
  j["k"] = k;
  j["generators"] = jsondetail::write_int_mat(gens);
  j["candidate"] = jsondetail::write_int_vec(candidate);
  j["candidate_in_lattice"] = member;
  j["monomial"] = jsondetail::write_int_vec(monomial);
  Json lj = Json::array();
  for (const IntVec& lead : leads) lj.push_back(jsondetail::write_int_vec(lead));
  j["leading_monomials"] = lj;
  j["divisible"] = divisible;
  j["divisible_by_any"] = any;
  if (member && !any) {
    j["conclusion"] =
        "the candidate exponent lies in the exponent lattice, yet its "
        "monomial is divisible by no leading monomial of the listed "
        "binomials: the binomials generate a proper subideal, and the "
        "full lattice ideal appears only after saturation";
  } else {
    j["conclusion"] = "unexpected: the pitfall did not reproduce";
    throw Error("pitfall demo failed: membership or divisibility "
                "deviated from the expected pattern");
  }
  return ok(jsondetail::dump(j));
}

}  // namespace

RunResult run(const PipelineConfig& cfg, const std::string& input) {
  try {
    if (!cfg.field.rationals && cfg.field.prime < 2) {
      throw SchemaError("prime field modulus must be at least 2");
    }
    if (cfg.command == "laplacianize") return run_laplacianize(cfg, input);
    if (cfg.command == "superstabilize") {
      return run_superstabilize(cfg, input);
    }
    if (cfg.command == "grobner") return run_grobner(cfg, input);
    if (cfg.command == "deform") return run_deform(cfg, input);
    if (cfg.command == "resolve") return run_resolve(cfg, input);
    if (cfg.command == "demo-pitfall") return run_demo_pitfall(cfg, input);
    throw SchemaError("unknown command \"" + cfg.command + "\"");
  } catch (const Error& e) {
    return RunResult{error_document(e.what(), e.exit_code()),
                     e.exit_code()};
  } catch (const std::exception& e) {
    return RunResult{error_document(e.what(), kExitError), kExitError};
  }
}

std::string version_fingerprint() {
  return "latdeform 1.0.0\n"
         "binomial-scan: lex ascending over 0<=x<=sigma with x_0=0\n"
         "marking: graded reverse-lex, permutation tie-break\n"
         "tree-order: reversed breadth-first levels toward vertex 0, "
         "index ties ascending\n"
         "violation-pick: lex-first witness, then smallest zero index\n"
         "choose-j: smallest index with a differing chip ratio\n"
         "epsilon-rule: half of min(sign-flip ratio bound, "
         "delta / (|q_hat|_1 * (n+1) * prod sigma))\n"
         "level-scale: epsilon * 2^-level\n"
         "edge-sweep: coefficient radius doubling from 2 until settled\n"
         "minimize-order: lowest homological degree, then row-major\n"
         "field-default: rationals\n";
}

}  // namespace latdeform
