#include "sumsets/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumsets/decomposer.hpp"
#include "sumsets/monomials.hpp"
#include "sumsets/verifiers.hpp"

namespace sumsets::cli {

using Json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Instance parsing

const nlohmann::json& require_field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::int64_t as_integer(const nlohmann::json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError("field '" + path + "': expected an integer");
  return v.get<std::int64_t>();
}

std::vector<FieldVector> parse_points(const nlohmann::json& doc, const char* key,
                                      std::uint32_t q, std::size_t n) {
  const auto& list = require_field(doc, key);
  if (!list.is_array()) throw ParseError(std::string("field '") + key + "': expected an array");
  std::vector<FieldVector> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = std::string(key) + "[" + std::to_string(i) + "]";
    const auto& tuple = list[i];
    if (!tuple.is_array()) throw ParseError("field '" + path + "': expected an array");
    if (tuple.size() != n) {
      throw ValidationError("field '" + path + "': expected " + std::to_string(n) +
                            " coordinates, got " + std::to_string(tuple.size()));
    }
    std::vector<Elem> coords(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::string cpath = path + "[" + std::to_string(j) + "]";
      const auto c = as_integer(tuple[j], cpath);
      if (c < 0 || c >= static_cast<std::int64_t>(q)) {
        throw ValidationError("field '" + cpath + "': coordinate " + std::to_string(c) +
                              " outside [0, " + std::to_string(q) + ")");
      }
      coords[j] = static_cast<Elem>(c);
    }
    out.emplace_back(q, std::move(coords));
  }
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError(std::string("field '") + key + "': duplicate entry");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Report helpers

Json big(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(x);
  }
  return x.str();
}

Json to_json(const FieldVector& v) {
  Json out = Json::array();
  for (auto c : v.coords()) out.push_back(c);
  return out;
}

Json to_json(const PointSet& set) {
  Json out = Json::array();
  for (const auto& v : set) out.push_back(to_json(v));
  return out;
}

std::string to_text(const FieldVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string to_text(const PointSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += " ";
    out += to_text(set[i]);
  }
  return out + "}";
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest(const Json& inputs) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(inputs.dump())));
  return std::string("fnv1a64:") + buf;
}

Json instance_json(const Instance& inst) {
  Json out;
  out["q"] = inst.q;
  out["n"] = inst.n;
  out["S"] = to_json(inst.s);
  out["T"] = to_json(inst.t);
  return out;
}

struct Report {
  std::string command;
  std::vector<std::string> args;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<InvariantCheck> checks;
  std::vector<std::string> table;  // human-readable lines

  void check(InvariantCheck c) { checks.push_back(std::move(c)); }
  void checks_from(std::vector<InvariantCheck> cs) {
    for (auto& c : cs) checks.push_back(std::move(c));
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

Json checks_json(const std::vector<InvariantCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back({{"name", c.name}, {"lhs", c.lhs}, {"relation", c.relation},
                   {"rhs", c.rhs}, {"passed", c.passed}});
  }
  return out;
}

Json certificate_json(const Decomposition& r, bool with_clp) {
  const Certificate& c = r.certificate;
  Json pivots = Json::array();
  for (std::size_t k = 0; k < c.pivots.size(); ++k) {
    pivots.push_back({{"row", c.pivots[k].row}, {"col", c.pivots[k].col},
                      {"sum", to_json(c.pivot_sums[k])}});
  }
  Json out;
  out["S0"] = to_json(c.s0);
  out["T0"] = to_json(c.t0);
  out["S1"] = to_json(c.s1);
  out["W"] = to_json(c.uncovered);
  out["sumset_size"] = c.sumset_size;
  out["q^n"] = c.space_size;
  out["m_d"] = big(c.m_d);
  out["m_half_d"] = big(c.m_half);
  out["dim_V"] = c.dim_v;
  out["rank_bound"] = c.rank_bound;
  out["cover_size"] = c.cover_size;
  out["matching_size"] = c.matching_size;
  out["pivot_sums_covered"] = c.pivot_sums_covered;
  out["pivots"] = std::move(pivots);
  if (with_clp) {
    Json clp = Json::array();
    for (const auto& k : c.clp_checks) {
      clp.push_back({{"rank", k.rank}, {"term_count", k.term_count},
                     {"reconstructs", k.reconstructs}});
    }
    out["clp"] = std::move(clp);
  }
  return out;
}

Json decomposition_json(const Decomposition& r, bool with_clp = false) {
  Json out;
  out["S_prime"] = to_json(r.s_prime);
  out["T_prime"] = to_json(r.t_prime);
  out["total"] = r.total();
  out["d"] = r.d;
  out["bound"] = big(r.bound);
  out["certificate"] = certificate_json(r, with_clp);
  return out;
}

void decomposition_table(const Decomposition& r, std::vector<std::string>& table) {
  const Certificate& c = r.certificate;
  table.push_back("d            " + std::to_string(r.d));
  table.push_back("S'           " + to_text(r.s_prime));
  table.push_back("T'           " + to_text(r.t_prime));
  table.push_back("|S'|+|T'|    " + std::to_string(r.total()) + "  (bound " + r.bound.str() + ")");
  table.push_back("|S+T|        " + std::to_string(c.sumset_size));
  table.push_back("dim V        " + std::to_string(c.dim_v) + "  (m_d = " + c.m_d.str() + ")");
  table.push_back("cover        " + std::to_string(c.cover_size) + " lines, |S0| = " +
                  std::to_string(c.s0.size()) + ", |T0| = " + std::to_string(c.t0.size()));
  table.push_back("|W|          " + std::to_string(c.uncovered.size()));
}

// ---------------------------------------------------------------------------
// Subcommands

struct Options {
  std::string input;
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::optional<std::int64_t> d;
  std::uint64_t cap = Limits{}.enumeration_cap;
  std::size_t search_cap = Limits{}.search_cap;
  bool json_only = false;
  bool clp = false;
  bool oracle = false;
  std::size_t growth = 0;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  double p = 0.5;
};

Limits limits_of(const Options& o) { return {o.cap, o.search_cap}; }

DecomposeOptions decompose_options(const Options& o) {
  return {o.d, limits_of(o), o.clp};
}

void check_degree(const Options& o, std::uint32_t q, std::size_t n) {
  if (o.d && (*o.d < 0 || *o.d > static_cast<std::int64_t>((q - 1) * n))) {
    throw ValidationError("--d must lie in [0, " + std::to_string((q - 1) * n) + "]");
  }
}

void run_bound(const Options& o, Report& rep) {
  const PrimeField field = make_field(o.q);
  if (o.n < 1) throw ValidationError("--n must be at least 1");
  const auto q = field.q();
  const auto n = static_cast<std::size_t>(o.n);
  check_degree(o, q, n);
  rep.inputs = {{"q", q}, {"n", n}};

  const CountTable table(q, n);
  const DegreeChoice best = choose_degree(q, n);
  const BigInt capset = capset_bound_M(q, n);
  Json rows = Json::array();
  rep.table.push_back("d    count    m_d    2m_{d/2}+q^n-m_d");
  for (std::int64_t d = 0; d <= table.max_degree(); ++d) {
    const BigInt b = decomposition_bound(table, d);
    rows.push_back({{"d", d}, {"count", big(table.count_at(d))}, {"m_d", big(table.m(d))},
                    {"bound", big(b)}});
    rep.table.push_back(std::to_string(d) + "    " + table.count_at(d).str() + "    " +
                        table.m(d).str() + "    " + b.str());
  }
  rep.outputs["degrees"] = std::move(rows);
  rep.outputs["M"] = big(capset);
  rep.outputs["chosen_d"] = best.d;
  rep.outputs["chosen_bound"] = big(best.bound);
  rep.table.push_back("M(F_q^n) = " + capset.str());
  rep.table.push_back("chosen d = " + std::to_string(best.d) + ", bound " + best.bound.str());
  if (o.d) {
    rep.outputs["requested_d"] = *o.d;
    rep.outputs["requested_bound"] = big(decomposition_bound(table, *o.d));
  }
  if (o.growth > 0) {
    Json growth = Json::array();
    const auto values = growth_estimate(q, o.growth);
    for (std::size_t k = 0; k < values.size(); ++k) {
      growth.push_back({{"n", k + 1}, {"root", values[k].str(30)}});
    }
    rep.outputs["growth"] = std::move(growth);
  }
  rep.check({"min_d bound <= M(F_q^n)", best.bound.str(), "<=", capset.str(),
             best.bound <= capset});
}

void run_decompose(const Options& o, const Instance& inst, Report& rep) {
  check_degree(o, inst.q, inst.n);
  rep.inputs = instance_json(inst);
  if (o.d) rep.inputs["d"] = *o.d;
  const Decomposition r = decompose(inst.s, inst.t, decompose_options(o));
  rep.outputs = decomposition_json(r, o.clp);
  decomposition_table(r, rep.table);
  rep.checks_from(check_decomposition(inst.s, inst.t, r));
}

void run_verify(const Instance& inst, Report& rep) {
  if (!inst.s_prime || !inst.t_prime) {
    throw ParseError("verify needs fields 'S_prime' and 'T_prime'");
  }
  rep.inputs = instance_json(inst);
  rep.inputs["S_prime"] = to_json(*inst.s_prime);
  rep.inputs["T_prime"] = to_json(*inst.t_prime);
  const bool ok = verify_decomposition(inst.s, inst.t, *inst.s_prime, *inst.t_prime);
  rep.outputs["verified"] = ok;
  rep.outputs["total"] = inst.s_prime->size() + inst.t_prime->size();
  rep.table.push_back(std::string("verified     ") + (ok ? "yes" : "no"));
  rep.check({"S' in S, T' in T, (S'+T) u (S+T') = S+T", ok ? "true" : "false", "==", "true", ok});
}

void run_symmetric(const Options& o, const Instance& inst, Report& rep) {
  check_degree(o, inst.q, inst.n);
  rep.inputs = {{"q", inst.q}, {"n", inst.n}, {"S", to_json(inst.s)}};
  const SymmetricDecomposition r = symmetric_decomposition(inst.s, decompose_options(o));
  rep.outputs["subset"] = to_json(r.subset);
  rep.outputs["size"] = r.subset.size();
  rep.outputs["decomposition"] = decomposition_json(r.decomposition);
  rep.table.push_back("S'           " + to_text(r.subset));
  rep.table.push_back("|S'|         " + std::to_string(r.subset.size()) + "  (bound " +
                      r.decomposition.bound.str() + ")");
  const bool covers = sumset(r.subset, inst.s) == sumset(inst.s, inst.s);
  rep.check({"S' subset of S", r.subset.is_subset_of(inst.s) ? "true" : "false", "==", "true",
             r.subset.is_subset_of(inst.s)});
  rep.check({"S'+S = S+S", covers ? "true" : "false", "==", "true", covers});
  rep.check({"|S'| <= 2m_{d/2} + q^n - m_d", std::to_string(r.subset.size()), "<=",
             r.decomposition.bound.str(), BigInt(r.subset.size()) <= r.decomposition.bound});
  rep.checks_from(check_decomposition(inst.s, inst.s, r.decomposition));
}

void run_check_capset(const Options& o, const Instance& inst, Report& rep) {
  rep.inputs = {{"q", inst.q}, {"n", inst.n}, {"S", to_json(inst.s)}};
  const CapsetReport r = check_capset_bound(inst.s, decompose_options(o));
  rep.outputs["ap_free"] = is_ap_free(inst.s);
  rep.outputs["applicable"] = r.applicable;
  rep.outputs["size"] = r.size;
  rep.outputs["M"] = big(r.bound);
  rep.table.push_back(std::string("applicable   ") + (r.applicable ? "yes" : "no"));
  rep.table.push_back("|S|          " + std::to_string(r.size) + "  (M = " + r.bound.str() + ")");
  rep.checks_from(r.checks);
}

void run_check_sumfree(const Options& o, const Instance& inst, Report& rep) {
  Json s_ord = Json::array();
  Json t_ord = Json::array();
  for (const auto& v : inst.s_ord) s_ord.push_back(to_json(v));
  for (const auto& v : inst.t_ord) t_ord.push_back(to_json(v));
  rep.inputs = {{"q", inst.q}, {"n", inst.n}, {"S_ord", s_ord}, {"T_ord", t_ord}};
  const OrderedPairFamily family(inst.s_ord, inst.t_ord);
  const SumfreeReport r = check_sumfree_bound(family, decompose_options(o));
  rep.outputs["N"] = r.n_pairs;
  rep.outputs["M"] = big(r.bound);
  rep.outputs["witness_total"] = r.witness_total;
  rep.table.push_back("N            " + std::to_string(r.n_pairs) + "  (M = " + r.bound.str() + ")");
  rep.table.push_back("|S'|+|T'|    " + std::to_string(r.witness_total));
  rep.checks_from(r.checks);
}

void run_oracle(const Options& o, const Instance& inst, Report& rep) {
  check_degree(o, inst.q, inst.n);
  rep.inputs = instance_json(inst);
  const OracleResult best = oracle_min_decomposition(inst.s, inst.t, limits_of(o));
  const GreedyResult greedy = greedy_decomposition(inst.s, inst.t);
  const Decomposition theorem = decompose(inst.s, inst.t, decompose_options(o));
  rep.outputs["oracle"] = {{"S_prime", to_json(best.best_s_prime)},
                           {"T_prime", to_json(best.best_t_prime)},
                           {"total", best.best_total}};
  rep.outputs["greedy"] = {{"S_prime", to_json(greedy.s_prime)},
                           {"T_prime", to_json(greedy.t_prime)},
                           {"total", greedy.total()}};
  rep.outputs["theorem"] = {{"total", theorem.total()}, {"d", theorem.d},
                            {"bound", big(theorem.bound)}};
  rep.table.push_back("oracle       " + std::to_string(best.best_total));
  rep.table.push_back("greedy       " + std::to_string(greedy.total()));
  rep.table.push_back("theorem      " + std::to_string(theorem.total()) + "  (bound " +
                      theorem.bound.str() + ")");
  const bool oracle_ok = verify_decomposition(inst.s, inst.t, best.best_s_prime, best.best_t_prime);
  const bool greedy_ok = verify_decomposition(inst.s, inst.t, greedy.s_prime, greedy.t_prime);
  rep.check({"oracle witness covers", oracle_ok ? "true" : "false", "==", "true", oracle_ok});
  rep.check({"greedy witness covers", greedy_ok ? "true" : "false", "==", "true", greedy_ok});
  rep.check({"oracle <= greedy", std::to_string(best.best_total), "<=",
             std::to_string(greedy.total()), best.best_total <= greedy.total()});
  rep.check({"oracle <= theorem", std::to_string(best.best_total), "<=",
             std::to_string(theorem.total()), best.best_total <= theorem.total()});
  rep.checks_from(check_decomposition(inst.s, inst.t, theorem));
}

PointSet random_subset(std::mt19937_64& rng, std::uint32_t q, std::size_t n, std::uint64_t size,
                       double p) {
  std::vector<FieldVector> members;
  for (std::uint64_t i = 0; i < size; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < p) members.push_back(FieldVector::from_index(q, n, i));
  }
  return PointSet(q, n, std::move(members));
}

void run_trials(const Options& o, Report& rep) {
  const PrimeField field = make_field(o.q);
  if (o.n < 1) throw ValidationError("--n must be at least 1");
  if (!(o.p >= 0.0 && o.p <= 1.0)) throw ValidationError("--p must lie in [0, 1]");
  const auto q = field.q();
  const auto n = static_cast<std::size_t>(o.n);
  check_degree(o, q, n);
  rep.inputs = {{"q", q}, {"n", n}, {"count", o.count}, {"seed", o.seed}, {"p", o.p},
                {"oracle", o.oracle}};
  if (o.d) rep.inputs["d"] = *o.d;

  const std::uint64_t size = space_size(q, n, limits_of(o));
  std::mt19937_64 rng(o.seed);
  std::map<std::string, std::size_t> failures;
  std::vector<std::string> order;
  Json trials = Json::array();
  rep.table.push_back("trial  |S|  |T|  |S+T|  d  dimV  cover  |W|  total  bound  ok" +
                      std::string(o.oracle ? "  oracle" : ""));
  for (std::size_t k = 0; k < o.count; ++k) {
    const PointSet s = random_subset(rng, q, n, size, o.p);
    const PointSet t = random_subset(rng, q, n, size, o.p);
    const Decomposition r = decompose(s, t, decompose_options(o));
    const auto checks = check_decomposition(s, t, r);
    bool ok = true;
    for (const auto& c : checks) {
      if (!failures.count(c.name)) order.push_back(c.name);
      failures[c.name] += c.passed ? 0 : 1;
      ok = ok && c.passed;
    }
    const Certificate& c = r.certificate;
    Json row = {{"trial", k}, {"S", to_json(s)}, {"T", to_json(t)}, {"sumset_size", c.sumset_size},
                {"d", r.d}, {"dim_V", c.dim_v}, {"cover_size", c.cover_size},
                {"W_size", c.uncovered.size()}, {"total", r.total()}, {"bound", big(r.bound)},
                {"S_prime", to_json(r.s_prime)}, {"T_prime", to_json(r.t_prime)}, {"ok", ok}};
    std::string line = std::to_string(k) + "  " + std::to_string(s.size()) + "  " +
                       std::to_string(t.size()) + "  " + std::to_string(c.sumset_size) + "  " +
                       std::to_string(r.d) + "  " + std::to_string(c.dim_v) + "  " +
                       std::to_string(c.cover_size) + "  " + std::to_string(c.uncovered.size()) +
                       "  " + std::to_string(r.total()) + "  " + r.bound.str() + "  " +
                       (ok ? "yes" : "NO");
    if (o.oracle) {
      const OracleResult best = oracle_min_decomposition(s, t, limits_of(o));
      row["oracle_total"] = best.best_total;
      line += "  " + std::to_string(best.best_total);
      const std::string name = "oracle <= theorem";
      if (!failures.count(name)) order.push_back(name);
      failures[name] += best.best_total <= r.total() ? 0 : 1;
    }
    trials.push_back(std::move(row));
    rep.table.push_back(std::move(line));
  }
  rep.outputs["trials"] = std::move(trials);
  for (const auto& name : order) {
    rep.check({name + " (failures over trials)", std::to_string(failures[name]), "==", "0",
               failures[name] == 0});
  }
}

void emit(const Report& rep, int status, const Json& error, double elapsed_ms, bool json_only,
          std::ostream& out) {
  Json doc;
  doc["command"] = rep.command;
  doc["args"] = rep.args;
  doc["inputs_digest"] = digest(rep.inputs);
  doc["inputs"] = rep.inputs;
  doc["outputs"] = rep.outputs;
  doc["checks"] = checks_json(rep.checks);
  doc["exit_code"] = status;
  if (!error.is_null()) doc["error"] = error;
  doc["timing"] = {{"elapsed_ms", elapsed_ms}};

  if (!json_only) {
    out << "== " << rep.command << " ==\n";
    for (const auto& line : rep.table) out << line << "\n";
    if (!rep.checks.empty()) {
      out << "-- checks --\n";
      for (const auto& c : rep.checks) {
        out << (c.passed ? "[pass] " : "[FAIL] ") << c.name << ": " << c.lhs << " "
            << c.relation << " " << c.rhs << "\n";
      }
    }
    if (!error.is_null()) out << "error: " << error["message"].get<std::string>() << "\n";
    out << "-- json --\n";
  }
  out << doc.dump(2) << "\n";
}

}  // namespace

Instance parse_instance_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");

  Instance inst;
  const auto q = as_integer(require_field(doc, "q"), "q");
  try {
    inst.q = make_field(q).q();
  } catch (const NotPrime& e) {
    throw ValidationError(std::string("field 'q': ") + e.what());
  }
  const auto n = as_integer(require_field(doc, "n"), "n");
  if (n < 1) throw ValidationError("field 'n': must be at least 1");
  inst.n = static_cast<std::size_t>(n);

  inst.s_ord = parse_points(doc, "S", inst.q, inst.n);
  inst.has_t = doc.contains("T");
  inst.t_ord = inst.has_t ? parse_points(doc, "T", inst.q, inst.n) : inst.s_ord;
  inst.s = PointSet(inst.q, inst.n, inst.s_ord);
  inst.t = PointSet(inst.q, inst.n, inst.t_ord);
  if (doc.contains("S_prime")) inst.s_prime = PointSet(inst.q, inst.n, parse_points(doc, "S_prime", inst.q, inst.n));
  if (doc.contains("T_prime")) inst.t_prime = PointSet(inst.q, inst.n, parse_points(doc, "T_prime", inst.q, inst.n));
  return inst;
}

Instance parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Sumset decompositions over F_q^n via the polynomial method", "sumsets"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json_only, "Print only the JSON report");
  app.add_option("--cap", o.cap, "Refuse to enumerate F_q^n when q^n exceeds this");
  app.add_option("--search-cap", o.search_cap, "Refuse the oracle when |S|+|T| exceeds this");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Instance file (JSON)")->required();
  };
  auto add_degree = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "Override the degree parameter");
  };

  auto* bound = app.add_subcommand("bound", "Monomial counts, M(F_q^n) and the best degree");
  bound->add_option("--q", o.q, "Prime field size")->required();
  bound->add_option("--n", o.n, "Dimension")->required();
  bound->add_option("--growth", o.growth, "Also print M(F_q^k)^{1/k} for k = 1..N");
  add_degree(bound);

  auto* dec = app.add_subcommand("decompose", "Construct S', T' with a certificate");
  add_input(dec);
  add_degree(dec);
  dec->add_flag("--clp", o.clp, "Check the low-rank splitting of every basis matrix");

  auto* ver = app.add_subcommand("verify", "Check a claimed S', T' by enumeration");
  add_input(ver);

  auto* sym = app.add_subcommand("symmetric", "Find S' of S with S'+S = S+S");
  add_input(sym);
  add_degree(sym);

  auto* cap = app.add_subcommand("check-capset", "Check the cap-set bound for an AP-free S");
  add_input(cap);

  auto* sf = app.add_subcommand("check-sumfree", "Check the multicolored sum-free bound");
  add_input(sf);

  auto* ora = app.add_subcommand("oracle", "Exhaustive minimum versus greedy and theorem");
  add_input(ora);
  add_degree(ora);

  auto* tri = app.add_subcommand("trials", "Seeded random decompositions");
  tri->add_option("--q", o.q, "Prime field size")->required();
  tri->add_option("--n", o.n, "Dimension")->required();
  tri->add_option("--count", o.count, "Number of random (S, T) pairs");
  tri->add_option("--seed", o.seed, "Random seed");
  tri->add_option("--p", o.p, "Inclusion probability per point");
  tri->add_flag("--oracle", o.oracle, "Also run the exhaustive oracle");
  add_degree(tri);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  Report rep;
  rep.command = app.get_subcommands().front()->get_name();
  rep.args = args;
  const auto start = std::chrono::steady_clock::now();
  int status = kOk;
  Json error;
  try {
    if (rep.command == "bound") {
      run_bound(o, rep);
    } else if (rep.command == "trials") {
      run_trials(o, rep);
    } else {
      const Instance inst = parse_instance(o.input);
      if (rep.command == "decompose") run_decompose(o, inst, rep);
      else if (rep.command == "verify") run_verify(inst, rep);
      else if (rep.command == "symmetric") run_symmetric(o, inst, rep);
      else if (rep.command == "check-capset") run_check_capset(o, inst, rep);
      else if (rep.command == "check-sumfree") run_check_sumfree(o, inst, rep);
      else if (rep.command == "oracle") run_oracle(o, inst, rep);
    }
    if (!rep.passed()) status = kVerificationFailed;
  } catch (const Error& e) {
    switch (e.category()) {
      case ErrorCategory::InvalidInput: status = kInvalidInput; break;
      case ErrorCategory::ResourceCap: status = kCapRefused; break;
      case ErrorCategory::Verification: status = kVerificationFailed; break;
    }
    error = {{"message", e.what()}};
    err << "error: " << e.what() << "\n";
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(rep, status, error, elapsed, o.json_only, out);
  return status;
}

}  // namespace sumsets::cli
