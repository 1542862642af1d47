#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "inddom/duality.hpp"
#include "inddom/instance.hpp"
#include "inddom/params.hpp"
#include "inddom/search.hpp"

namespace {

using inddom::Rational;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitCheckFailed = 4;
constexpr int kExitViolations = 5;

std::uint64_t column_cap() {
  if (const char* env = std::getenv("INDDOM_COLUMN_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "ignoring malformed INDDOM_COLUMN_CAP\n";
  }
  return inddom::kDefaultColumnCap;
}

json rational_array(const inddom::RationalVector& v) {
  json a = json::array();
  for (const Rational& r : v) a.push_back(inddom::rat_to_string(r));
  return a;
}

json witness_json(const std::string& kind, const inddom::ParamResult& res) {
  if (res.witness_set)
    return std::vector<int>(res.witness_set->begin(), res.witness_set->end());
  if (res.witness_vertex_vector) return rational_array(*res.witness_vertex_vector);
  if (res.witness_f) return *res.witness_f;
  if (res.witness_pair) {
    json p;
    if (kind == "gamma_cup_w") {
      p["f1"] = res.witness_pair->first;
      p["f2"] = res.witness_pair->second;
    } else {
      p["g"] = res.witness_pair->first;
      p["f"] = res.witness_pair->second;
    }
    return p;
  }
  return nullptr;
}

const inddom::Graph& need_second(const inddom::Instance& inst) {
  if (!inst.second_graph)
    throw inddom::ParseError("field \"edges2\" required for this kind");
  return *inst.second_graph;
}

const inddom::Partition& need_partition(const inddom::Instance& inst) {
  if (!inst.partition || !inst.partition->is_full())
    throw inddom::ParseError("field \"parts\" must be a full partition for this kind");
  return *inst.partition;
}

int cmd_compute(const std::string& file, const std::string& kind) {
  inddom::Instance inst = inddom::load_instance(file);
  const inddom::Graph& g = inst.graph;
  const inddom::WeightVector& w = inst.weights;
  const std::uint64_t cap = column_cap();

  inddom::ParamResult res;
  if (kind == "alpha_w")
    res = inddom::alpha_w(g, w);
  else if (kind == "gamma_w")
    res = inddom::gamma_w(g, w);
  else if (kind == "gamma_tilde")
    res = inddom::gamma_tilde(g);
  else if (kind == "alpha_cap_w")
    res = inddom::alpha_cap_w(g, need_second(inst), w, cap);
  else if (kind == "alpha_cap_star_w")
    res = inddom::alpha_cap_star_w(g, need_second(inst), w, cap);
  else if (kind == "gamma_cup_w")
    res = inddom::gamma_cup_w(g, need_second(inst), w);
  else if (kind == "nu_w")
    res = inddom::nu_w(g, need_partition(inst), w, cap);
  else if (kind == "nu_star_w")
    res = inddom::nu_star_w(g, need_partition(inst), w, cap);
  else if (kind == "gamma_w_partition")
    res = inddom::gamma_w_partition(g, need_partition(inst), w);
  else if (kind == "tau_w")
    res = inddom::tau_w(g, need_partition(inst), w);
  else
    throw inddom::ParseError("unknown kind: " + kind);

  json out;
  out["kind"] = kind;
  if (!res.feasible) {
    out["value"] = nullptr;
    out["feasible"] = false;
  } else {
    out["value"] = inddom::rat_to_string(res.value);
    out["witness"] = witness_json(kind, res);
    if (res.relaxed_value)
      out["relaxed_value"] = inddom::rat_to_string(*res.relaxed_value);
  }
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int cmd_certify(const std::string& file) {
  inddom::Instance inst = inddom::load_instance(file);
  const inddom::Partition& p = need_partition(inst);
  inddom::DominationCertificate cert;
  try {
    cert = inddom::build_domination_certificate(inst.graph, p, inst.weights,
                                                column_cap());
  } catch (const inddom::InternalCheckFailed& e) {
    std::cerr << e.what() << "\n";
    return kExitCheckFailed;
  }
  auto bad = inddom::verify_certificate(inst.graph, p, inst.weights, cert,
                                        cert.bound);
  std::cout << inddom::certificate_to_json(cert) << "\n";
  if (!bad.empty()) {
    for (const std::string& b : bad) std::cerr << b << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& cert_file) {
  inddom::Instance inst = inddom::load_instance(file);
  const inddom::Partition& p = need_partition(inst);
  std::ifstream in(cert_file);
  if (!in) throw inddom::ParseError("cannot open file: " + cert_file);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  inddom::DominationCertificate cert = inddom::certificate_from_json(text);
  auto bad = inddom::verify_certificate(inst.graph, p, inst.weights, cert,
                                        cert.bound);
  json out;
  out["violations"] = bad;
  std::cout << out.dump() << "\n";
  return bad.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_search(const inddom::SearchConfig& config, bool serial) {
  inddom::SearchReport rep = serial ? inddom::run_search_serial(config)
                                    : inddom::run_search_parallel(config);
  std::cout << rep.to_json() << "\n";
  return rep.violations.empty() ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"independence-domination duality toolkit"};
  app.require_subcommand(1);

  std::string file, kind, cert_file;

  CLI::App* compute = app.add_subcommand("compute", "compute a graph parameter");
  compute->add_option("--kind", kind, "parameter name")->required();
  compute->add_option("file", file, "instance file")->required();

  CLI::App* certify =
      app.add_subcommand("certify", "build and verify a domination certificate");
  certify->add_option("file", file, "instance file")->required();

  CLI::App* verify = app.add_subcommand("verify", "verify a certificate file");
  verify->add_option("file", file, "instance file")->required();
  verify->add_option("certificate", cert_file, "certificate file")->required();

  inddom::SearchConfig config;
  std::string mode = "pair";
  std::string edge_prob = "1/2";
  bool serial = false;
  CLI::App* search = app.add_subcommand("search", "randomized conjecture search");
  search->add_option("--seed", config.seed, "rng seed");
  search->add_option("--count", config.count, "instances to test")
      ->check(CLI::PositiveNumber);
  search->add_option("--max-n", config.max_n, "max vertex count")
      ->check(CLI::Range(1, 16));
  search->add_option("--edge-prob", edge_prob, "edge probability p/q");
  search->add_option("--max-weight", config.max_weight, "max vertex weight")
      ->check(CLI::NonNegativeNumber);
  search->add_option("--mode", mode, "pair|partition")
      ->check(CLI::IsMember({"pair", "partition"}));
  search->add_flag("--serial", serial, "use the serial reference evaluator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(file, kind);
    if (certify->parsed()) return cmd_certify(file);
    if (verify->parsed()) return cmd_verify(file, cert_file);
    if (search->parsed()) {
      Rational p = inddom::rat_from_string(edge_prob);
      if (p < 0 || p > 1)
        throw inddom::ParseError("--edge-prob must lie in [0,1]");
      config.edge_prob_num = p.get_num().get_si();
      config.edge_prob_den = p.get_den().get_si();
      config.mode = mode == "pair" ? inddom::SearchMode::Pair
                                   : inddom::SearchMode::Partition;
      config.cap = column_cap();
      return cmd_search(config, serial);
    }
  } catch (const inddom::CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const inddom::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const inddom::ModelError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
