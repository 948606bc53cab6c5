#include "latdeform/json_io.hpp"

#include "json_detail.hpp"
#include "latdeform/digraph.hpp"
#include "latdeform/errors.hpp"

namespace latdeform {

using jsondetail::Json;

BasisInput parse_basis_input(const std::string& text) {
  Json j = jsondetail::parse_text(text);
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  BasisInput in;
  if (j.contains("basis")) {
    in.rows = jsondetail::read_int_mat(j.at("basis"));
    in.generators = false;
  } else if (j.contains("generators")) {
    in.rows = jsondetail::read_int_mat(j.at("generators"));
    in.generators = true;
  } else {
    throw SchemaError("expected a \"basis\" or \"generators\" field");
  }
  return in;
}

Lattice lattice_from_input(const BasisInput& in) {
  return in.generators ? Lattice::from_generators(in.rows)
                       : Lattice::from_basis(in.rows);
}

IntMat parse_integer_laplacian(const std::string& text) {
  Json j = jsondetail::parse_text(text);
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  IntMat q;
  if (j.contains("laplacian")) {
    q = jsondetail::read_int_mat(j.at("laplacian"));
  } else if (j.contains("edges")) {
    int n = jsondetail::read_small_int(jsondetail::field(j, "n"));
    if (n <= 0) throw SchemaError("\"n\" must be positive");
    const Json& edges = jsondetail::field(j, "edges");
    if (!edges.is_array()) throw SchemaError("\"edges\" must be an array");
    q = IntMat(n, n);
    for (const Json& e : edges) {
      if (!e.is_array() || e.size() != 3) {
        throw SchemaError("each edge must be [src, dst, weight]");
      }
      int src = jsondetail::read_small_int(e[0]);
      int dst = jsondetail::read_small_int(e[1]);
      Int w = jsondetail::read_int(e[2]);
      if (src < 0 || src >= n || dst < 0 || dst >= n || src == dst) {
        throw SchemaError("edge endpoints out of range");
      }
      if (w <= 0) throw SchemaError("edge weight must be positive");
      q.at(src, dst) -= w;
      q.at(src, src) += w;
    }
  } else {
    throw SchemaError("expected a \"laplacian\" or \"edges\" field");
  }
  if (q.rows() != q.cols()) throw SchemaError("laplacian must be square");
  if (!is_laplacian_matrix(to_rat(q))) {
    throw SchemaError("matrix is not a Laplacian");
  }
  return q;
}

IntVec parse_vector_text(const std::string& text) {
  Json j = jsondetail::parse_text(text);
  if (!j.is_array()) throw SchemaError("expected a JSON array");
  return jsondetail::read_int_vec(j);
}

std::string laplacianize_document(const LaplacianPresentation& lp,
                                  const Int& index) {
  Json j;
  j["q"] = jsondetail::write_int_mat(lp.q);
  j["sigma"] = jsondetail::write_int_vec(lp.sigma);
  Json edges = Json::array();
  for (const WeightedEdge& e : lp.edges) {
    edges.push_back(Json::array({e.src, e.dst,
                                 jsondetail::write_rat(e.weight)}));
  }
  j["edges"] = edges;
  j["index"] = jsondetail::write_int(index);
  return jsondetail::dump(j);
}

std::string superstabilize_document(const StabilizeResult& r) {
  Json j;
  j["final"] = jsondetail::write_int_vec(r.final);
  j["script"] = jsondetail::write_int_vec(r.script);
  return jsondetail::dump(j);
}

std::string grobner_document(const MarkedGB& gb,
                             std::optional<bool> spairs_ok) {
  Json j;
  Json bins = Json::array();
  for (const MarkedBinomial& b : gb.binomials) {
    Json e;
    e["u"] = jsondetail::write_int_vec(b.u);
    e["x"] = jsondetail::write_int_vec(b.x);
    e["leading"] = b.plus_leading ? "+" : "-";
    bins.push_back(e);
  }
  j["binomials"] = bins;
  j["count"] = static_cast<int>(gb.binomials.size());
  j["nvars"] = gb.nvars;
  j["order_ascending"] = gb.order.ascending;
  j["sigma"] = jsondetail::write_int_vec(gb.sigma);
  if (spairs_ok) j["spairs_ok"] = *spairs_ok;
  return jsondetail::dump(j);
}

namespace {

Json step_json(const DeformationStep& s) {
  Json j;
  j["r"] = s.r;
  j["q_r"] = jsondetail::write_rat_mat(s.q_r);
  j["lambda_r"] = jsondetail::write_int(s.lambda_r);
  j["x"] = jsondetail::write_int_vec(s.x);
  j["i"] = s.i;
  j["j"] = s.j;
  j["epsilon"] = jsondetail::write_rat(s.epsilon);
  return j;
}

Json deformation_json(const DeformationResult& r) {
  Json j;
  j["q0"] = jsondetail::write_rat_mat(r.q0);
  j["q_gen"] = jsondetail::write_rat_mat(r.q_gen);
  j["sigma"] = jsondetail::write_int_vec(r.sigma);
  j["lambda"] = jsondetail::write_int(r.lambda);
  j["scaled_gen"] = jsondetail::write_int_mat(r.scaled_gen);
  Json steps = Json::array();
  for (const DeformationStep& s : r.steps) steps.push_back(step_json(s));
  j["steps"] = steps;
  j["step_count"] = static_cast<int>(r.steps.size());
  Json dist;
  dist["norm_sq"] = jsondetail::write_rat(r.distance.norm_sq);
  dist["sqrt_decimal"] = r.distance.decimal;
  j["distance"] = dist;
  return j;
}

}  // namespace

std::string deformation_document(const DeformationResult& r) {
  return jsondetail::dump(deformation_json(r));
}

std::string stable_sequence_document(
    const std::vector<DeformationResult>& levels) {
  Json j;
  Json arr = Json::array();
  for (const DeformationResult& r : levels) {
    arr.push_back(deformation_json(r));
  }
  j["levels"] = arr;
  j["level_count"] = static_cast<int>(levels.size());
  j["templates_match"] = true;
  return jsondetail::dump(j);
}

std::string error_document(const std::string& message, int exit_code) {
  static const char* kinds[] = {"ok", "error", "schema",
                                "not-strongly-connected",
                                "not-finite-index", "non-generic-result"};
  Json j;
  Json e;
  e["code"] = exit_code;
  e["kind"] = (exit_code >= 0 && exit_code <= 5) ? kinds[exit_code]
                                                 : "error";
  e["message"] = message;
  j["error"] = e;
  return jsondetail::dump(j);
}

}  // namespace latdeform
