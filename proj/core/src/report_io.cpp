#include "cec/report_io.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cec {

using ordered_json = nlohmann::ordered_json;

namespace {

Rational rational_from_json(const ordered_json& v, const std::string& key) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw std::invalid_argument("key '" + key +
                              "': expected integer or \"a/b\" string");
}

template <typename T>
T require(const ordered_json& obj, const std::string& key) {
  if (!obj.contains(key))
    throw std::invalid_argument("missing key '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument("key '" + key + "' has the wrong type");
  }
}

}  // namespace

ScenarioFile parse_scenario(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario is not valid JSON: ") +
                                e.what());
  }

  ScenarioFile sf;
  Scenario& sc = sf.scenario;

  if (!doc.contains("machines") || !doc["machines"].is_array())
    throw std::invalid_argument("missing key 'machines'");
  sc.N = static_cast<int>(doc["machines"].size());
  sc.s.assign(sc.N, Rational(0));
  sc.sigma.assign(sc.N, 0);
  std::vector<bool> seen(sc.N + 1, false);
  for (const auto& m : doc["machines"]) {
    int id = require<int>(m, "id");
    if (id < 1 || id > sc.N || seen[id])
      throw std::invalid_argument("key 'machines': ids must be 1..N, unique");
    seen[id] = true;
    if (!m.contains("speed"))
      throw std::invalid_argument("missing key 'speed'");
    sc.s[id - 1] = rational_from_json(m.at("speed"), "speed");
    sc.sigma[id - 1] = m.contains("storage") ? require<int>(m, "storage") : 1;
  }

  if (!doc.contains("code")) throw std::invalid_argument("missing key 'code'");
  const auto& code = doc["code"];
  sc.L = require<int>(code, "L");
  sc.q = require<std::int64_t>(code, "q");
  sc.r = require<std::int64_t>(code, "r");
  sc.Z = sc.sum_sigma();
  if (code.contains("Z")) sc.Z = require<int>(code, "Z");
  if (code.contains("prime")) sf.prime = require<std::uint64_t>(code, "prime");

  if (!doc.contains("timeline") || !doc["timeline"].is_array())
    throw std::invalid_argument("missing key 'timeline'");
  for (const auto& ev : doc["timeline"]) {
    AvailabilitySet a;
    a.t = require<int>(ev, "t");
    for (int id : require<std::vector<int>>(ev, "available"))
      a.available.insert(id);
    sc.events.push_back(std::move(a));
  }

  if (doc.contains("seed")) sf.seed = require<std::uint64_t>(doc, "seed");
  return sf;
}

ScenarioFile load_scenario(const std::string& path) {
  return parse_scenario(read_file(path));
}

std::string report_to_json(const ScenarioFile& sf,
                           const std::vector<StepReport>& steps,
                           bool executed) {
  ordered_json doc;
  doc["prime"] = sf.prime;
  doc["mode"] = executed ? "run" : "plan";
  doc["steps"] = ordered_json::array();
  for (const auto& st : steps) {
    ordered_json j;
    j["t"] = st.t;
    j["feasible"] = st.feasible;
    if (st.feasible) {
      j["k_star"] = st.k_star;
      j["c_hat"] = st.c_hat.str();
      j["mu"] = ordered_json::array();
      for (const auto& v : st.mu.mu) j["mu"].push_back(v.str());
      j["per_machine_time"] = ordered_json::array();
      for (const auto& v : st.per_machine_time)
        j["per_machine_time"].push_back(v.str());
      j["F"] = st.F;
      j["exact_rows"] = st.rows.exact;
      j["assignments"] = ordered_json::array();
      for (int f = 1; f <= st.F; ++f) {
        ordered_json a;
        a["f"] = f;
        a["alpha"] = st.plan.alphas[f - 1].str();
        a["row_start"] = st.rows.first(f);
        a["row_end"] = st.rows.last(f);
        a["cs_indices"] = st.plan.sets[f - 1];
        j["assignments"].push_back(std::move(a));
      }
      if (st.executed) j["decode_ok"] = st.decode_ok;
    }
    doc["steps"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string report_to_csv(const std::vector<StepReport>& steps) {
  std::ostringstream out;
  out << "step,f,alpha,row_start,row_end,cs_indices\n";
  for (const auto& st : steps) {
    if (!st.feasible) continue;
    for (int f = 1; f <= st.F; ++f) {
      out << st.t << ',' << f << ',' << st.plan.alphas[f - 1].str() << ','
          << st.rows.first(f) << ',' << st.rows.last(f) << ',';
      const auto& set = st.plan.sets[f - 1];
      for (std::size_t i = 0; i < set.size(); ++i)
        out << (i ? ";" : "") << set[i];
      out << '\n';
    }
  }
  return out.str();
}

std::vector<StepReport> report_from_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text);
  std::vector<StepReport> steps;
  for (const auto& j : doc.at("steps")) {
    StepReport st;
    st.t = j.at("t").get<int>();
    st.feasible = j.at("feasible").get<bool>();
    if (!st.feasible) {
      steps.push_back(std::move(st));
      continue;
    }
    st.k_star = j.at("k_star").get<int>();
    st.c_hat = Rational::parse(j.at("c_hat").get<std::string>());
    for (const auto& v : j.at("mu"))
      st.mu.mu.push_back(Rational::parse(v.get<std::string>()));
    for (const auto& v : j.at("per_machine_time"))
      st.per_machine_time.push_back(Rational::parse(v.get<std::string>()));
    st.F = j.at("F").get<int>();
    st.rows.exact = j.at("exact_rows").get<bool>();
    st.rows.boundaries.push_back(0);
    for (const auto& a : j.at("assignments")) {
      st.plan.alphas.push_back(
          Rational::parse(a.at("alpha").get<std::string>()));
      st.plan.sets.push_back(a.at("cs_indices").get<std::vector<int>>());
      st.rows.boundaries.push_back(a.at("row_end").get<std::int64_t>());
    }
    st.plan.F = st.F;
    if (j.contains("decode_ok")) {
      st.executed = true;
      st.decode_ok = j.at("decode_ok").get<bool>();
    }
    steps.push_back(std::move(st));
  }
  return steps;
}

FieldMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  std::int64_t q = 0, r = 0;
  if (!(in >> q >> r) || q <= 0 || r <= 0)
    throw std::invalid_argument("matrix file must start with 'q r'");
  FieldMatrix X(q, r);
  for (std::int64_t i = 0; i < q * r; ++i) {
    std::int64_t v;
    if (!(in >> v))
      throw std::invalid_argument("matrix file truncated at entry " +
                                  std::to_string(i));
    X.a[i] = static_cast<Fp>(v < 0 ? -v : v);
  }
  return X;
}

FieldMatrix random_matrix(std::uint64_t seed, std::int64_t q, std::int64_t r,
                          Fp p) {
  std::mt19937_64 rng(seed);
  FieldMatrix X(q, r);
  for (auto& v : X.a) v = rng() % p;
  return X;
}

std::vector<std::vector<Fp>> random_vectors(std::uint64_t seed,
                                            std::size_t count, std::int64_t r,
                                            Fp p) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::vector<Fp>> out(count, std::vector<Fp>(r, 0));
  for (auto& w : out)
    for (auto& v : w) v = rng() % p;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

}  // namespace cec
