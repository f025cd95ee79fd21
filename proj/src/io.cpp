#include "gmew/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gmew/tensor.hpp"

namespace gmew {

namespace {

using nlohmann::json;

std::vector<std::pair<std::string, std::string>> parse_fields(const std::string& body) {
  // Comma-separated key=value pairs; a comma token without '=' continues the
  // previous value (so lambdas=0.5,0.3,0.2 parses as one field).
  std::vector<std::pair<std::string, std::string>> fields;
  std::stringstream ss(body);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      if (fields.empty())
        throw ParseError("descriptor: expected key=value near '" + token + "'");
      fields.back().second += "," + token;
    } else {
      fields.emplace_back(token.substr(0, eq), token.substr(eq + 1));
    }
  }
  return fields;
}

struct Descriptor {
  std::string family;
  std::vector<std::pair<std::string, std::string>> fields;

  bool has(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return true;
    return false;
  }
  std::string get(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return v;
    throw ParseError("descriptor: missing field '" + key + "' for family '" + family + "'");
  }
  int get_int(const std::string& key) const {
    try {
      return std::stoi(get(key));
    } catch (const std::logic_error&) {
      throw ParseError("descriptor: field '" + key + "' is not an integer");
    }
  }
  double get_double(const std::string& key) const {
    try {
      return std::stod(get(key));
    } catch (const std::logic_error&) {
      throw ParseError("descriptor: field '" + key + "' is not a number");
    }
  }
  std::vector<double> get_list(const std::string& key) const {
    std::vector<double> out;
    std::stringstream ss(get(key));
    std::string token;
    while (std::getline(ss, token, ',')) {
      try {
        out.push_back(std::stod(token));
      } catch (const std::logic_error&) {
        throw ParseError("descriptor: bad number '" + token + "' in '" + key + "'");
      }
    }
    return out;
  }
};

Descriptor parse_descriptor(const std::string& text) {
  const auto colon = text.find(':');
  Descriptor d;
  d.family = text.substr(0, colon);
  if (d.family.empty()) throw ParseError("descriptor: empty family name");
  if (colon != std::string::npos && d.family != "graph")
    d.fields = parse_fields(text.substr(colon + 1));
  return d;
}

Graph parse_graph(const Descriptor& d) {
  if (d.family == "cluster") return cluster_graph(d.get_int("n"));
  // graph:1-2,2-3 with 1-based vertex labels.
  std::vector<std::pair<int, int>> edges;
  int max_vertex = 0;
  for (const auto& [key, value] : d.fields) {
    const std::string edge = value.empty() ? key : key + "=" + value;
    const auto dash = edge.find('-');
    if (dash == std::string::npos)
      throw ParseError("graph descriptor: bad edge '" + edge + "'");
    try {
      const int u = std::stoi(edge.substr(0, dash));
      const int v = std::stoi(edge.substr(dash + 1));
      if (u < 1 || v < 1) throw ParseError("graph descriptor: vertices are 1-based");
      edges.emplace_back(u - 1, v - 1);
      max_vertex = std::max({max_vertex, u, v});
    } catch (const std::logic_error&) {
      throw ParseError("graph descriptor: bad edge '" + edge + "'");
    }
  }
  if (edges.empty()) throw ParseError("graph descriptor: no edges");
  return make_graph(max_vertex, edges);
}

// graph descriptors put raw edges where key=value pairs would go; reparse.
Descriptor parse_graph_descriptor(const std::string& text) {
  const auto colon = text.find(':');
  Descriptor d;
  d.family = text.substr(0, colon);
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string token;
    while (std::getline(ss, token, ','))
      d.fields.emplace_back(token, "");
  }
  return d;
}

SingletParams singlet_params_from(const Descriptor& d) {
  const double a = d.get_double("a");
  const double theta = d.has("theta") ? d.get_double("theta") : 1.5707963267948966;
  if (d.has("b")) return SingletParams{a, d.get_double("b"), theta};
  return singlet_params(a, theta);
}

}  // namespace

PureState make_state(const std::string& descriptor, std::int64_t dense_limit) {
  const Descriptor d = parse_descriptor(descriptor);
  if (d.family == "w") return w_state(d.get_int("n"));
  if (d.family == "ghz") return ghz_state(d.get_int("d"), d.get_int("n"));
  if (d.family == "schmidt") return schmidt_state(d.get_list("lambdas"), d.get_int("n"));
  if (d.family == "singlet4") return singlet4_state(singlet_params_from(d));
  if (d.family == "singlet6") return singlet6_state();
  if (d.family == "cluster" || d.family == "graph") {
    const Graph g = d.family == "cluster" ? cluster_graph(d.get_int("n"))
                                          : parse_graph(parse_graph_descriptor(descriptor));
    if ((std::int64_t{1} << g.n) > dense_limit)
      throw std::length_error("make_state: graph state exceeds the dense limit");
    return graph_state_dense(g);
  }
  throw ParseError("descriptor: unknown family '" + d.family + "'");
}

double ConstructedWitness::trace() const {
  return std::visit([](const auto& w) { return w.trace(); }, witness);
}

double ConstructedWitness::target_expectation() const {
  if (const auto* lw = std::get_if<LiftedWitness>(&witness)) return lw->target_expectation();
  return std::get<DiagonalGraphWitness>(witness).target_expectation();
}

double ConstructedWitness::noise_tolerance() const {
  if (const auto* lw = std::get_if<LiftedWitness>(&witness)) return white_noise_tolerance(*lw);
  return std::get<DiagonalGraphWitness>(witness).noise_tolerance();
}

std::int64_t ConstructedWitness::dim() const {
  if (const auto* lw = std::get_if<LiftedWitness>(&witness)) return lw->dim();
  return std::int64_t{1} << std::get<DiagonalGraphWitness>(witness).n();
}

std::size_t ConstructedWitness::block_count() const {
  if (const auto* lw = std::get_if<LiftedWitness>(&witness)) return lw->blocks.size();
  return std::get<DiagonalGraphWitness>(witness).class_counts().size();
}

Mat ConstructedWitness::dense(std::int64_t dense_limit) const {
  if (const auto* lw = std::get_if<LiftedWitness>(&witness)) return lw->dense(dense_limit);
  const auto& dgw = std::get<DiagonalGraphWitness>(witness);
  if ((std::int64_t{1} << dgw.n()) > dense_limit)
    throw std::length_error("ConstructedWitness::dense: dimension exceeds dense limit");
  return dgw.dense();
}

ConstructedWitness make_witness(const std::string& descriptor,
                                const std::string& method,
                                std::int64_t dense_limit) {
  if (method != "analytic" && method != "lift")
    throw ParseError("make_witness: method must be 'analytic' or 'lift'");
  const Descriptor d = parse_descriptor(descriptor);

  if (d.family == "cluster" || d.family == "graph") {
    if (method == "analytic") {
      if (d.family == "graph")
        throw ParseError("graph targets have no closed form; use method 'lift'");
      return {descriptor, method, cluster_witness(d.get_int("n"))};
    }
    const Graph g = d.family == "cluster" ? cluster_graph(d.get_int("n"))
                                          : parse_graph(parse_graph_descriptor(descriptor));
    if ((std::int64_t{1} << g.n) > dense_limit)
      throw std::length_error("make_witness: graph lift exceeds the dense limit");
    const PureState psi = graph_state_dense(g);
    const TaggedVectorSet s = harvest(psi, graph_bew_family(g));
    return {descriptor, method, assemble(psi, s, group(s))};
  }

  if (method == "lift") {
    const PureState psi = make_state(descriptor, dense_limit);
    if (psi.dim() > dense_limit)
      throw std::length_error("make_witness: lift exceeds the dense limit");
    return {descriptor, method, lift_state(psi)};
  }
  if (d.family == "w") return {descriptor, method, w_witness(d.get_int("n"))};
  if (d.family == "ghz") {
    const int dd = d.get_int("d");
    return {descriptor, method,
            schmidt_witness(std::vector<double>(dd, 1.0 / dd), d.get_int("n"))};
  }
  if (d.family == "schmidt")
    return {descriptor, method, schmidt_witness(d.get_list("lambdas"), d.get_int("n"))};
  if (d.family == "singlet4")
    return {descriptor, method, singlet4_witness(singlet_params_from(d))};
  if (d.family == "singlet6") return {descriptor, method, singlet6_witness()};
  throw ParseError("descriptor: unknown family '" + d.family + "'");
}

std::string state_to_json(const PureState& state) {
  json j;
  j["dims"] = state.dims();
  json amps = json::array();
  for (std::int64_t i = 0; i < state.dim(); ++i)
    amps.push_back({state.amps()[i].real(), state.amps()[i].imag()});
  j["amps"] = std::move(amps);
  return j.dump();
}

PureState state_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("state JSON: ") + e.what());
  }
  if (!j.contains("dims") || !j.contains("amps"))
    throw ParseError("state JSON: need 'dims' and 'amps'");
  std::vector<int> dims = j["dims"].get<std::vector<int>>();
  const auto& amps = j["amps"];
  Vec v(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = cxd(amps[i][0].get<double>(), amps[i][1].get<double>());
  return PureState(std::move(dims), std::move(v));
}

PureState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return state_from_json_text(ss.str());
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string witness_to_json(const ConstructedWitness& w, std::int64_t serialize_limit) {
  json j;
  j["format"] = "gmew-witness-v1";
  j["descriptor"] = w.descriptor;
  j["method"] = w.method;
  json summary;
  summary["blocks"] = w.block_count();
  summary["trace"] = w.trace();
  summary["target_expectation"] = w.target_expectation();
  summary["noise_tolerance"] = w.noise_tolerance();
  summary["dim"] = w.dim();

  if (const auto* lw = std::get_if<LiftedWitness>(&w.witness)) {
    j["kind"] = "lifted";
    j["gme"] = lw->gme;
    if (!lw->tag.empty()) j["tag"] = lw->tag;
    if (lw->dim() <= serialize_limit) {
      j["target"] = json::parse(state_to_json(lw->target));
      json blocks = json::array();
      for (const WitnessBlock& blk : lw->blocks) {
        json basis = json::array();
        for (const SpVec& b : blk.basis) {
          const Vec bd = Vec(b);
          json vec = json::array();
          for (Eigen::Index i = 0; i < bd.size(); ++i)
            vec.push_back({bd[i].real(), bd[i].imag()});
          basis.push_back(std::move(vec));
        }
        blocks.push_back({{"c", blk.coeff}, {"basis", std::move(basis)}});
      }
      j["blocks"] = std::move(blocks);
    } else {
      j["blocks_omitted"] = true;
      json dims = json::array();
      for (const WitnessBlock& blk : lw->blocks)
        dims.push_back({{"c", blk.coeff}, {"dim", blk.dim()}});
      j["block_summary"] = std::move(dims);
    }
  } else {
    const auto& dgw = std::get<DiagonalGraphWitness>(w.witness);
    j["kind"] = "graph-diagonal";
    j["n"] = dgw.n();
    json coeffs = json::array(), counts = json::array();
    for (int k = 1; k <= dgw.max_class(); ++k) {
      coeffs.push_back(dgw.class_coeff(k));
      counts.push_back(dgw.class_counts()[k - 1]);
    }
    j["class_coeffs"] = std::move(coeffs);
    j["class_counts"] = std::move(counts);
  }
  j["summary"] = std::move(summary);
  return j.dump(2);
}

std::string witness_summary(const ConstructedWitness& w) {
  std::ostringstream os;
  os << "witness " << w.descriptor << " (" << w.method << ")\n";
  os << "  dim: " << w.dim() << "\n";
  if (const auto* lw = std::get_if<LiftedWitness>(&w.witness)) {
    os << "  m (blocks): " << lw->blocks.size() << "\n  c_k / dim(V_k):";
    const std::size_t shown = std::min<std::size_t>(lw->blocks.size(), 12);
    for (std::size_t k = 0; k < shown; ++k)
      os << " " << lw->blocks[k].coeff << "/" << lw->blocks[k].dim();
    if (shown < lw->blocks.size()) os << " ...";
    os << "\n";
    if (!lw->gme) os << "  tag: " << lw->tag << " (not certified GME)\n";
  } else {
    const auto& dgw = std::get<DiagonalGraphWitness>(w.witness);
    os << "  classes (k, coeff, |V_k|):";
    for (int k = 1; k <= dgw.max_class(); ++k)
      os << " (" << k << ", " << dgw.class_coeff(k) << ", "
         << dgw.class_counts()[k - 1] << ")";
    os << "\n";
  }
  os << "  trace: " << w.trace() << "\n";
  os << "  target expectation: " << w.target_expectation() << "\n";
  os << "  white-noise tolerance: " << w.noise_tolerance() << "\n";
  return os.str();
}

}  // namespace gmew
