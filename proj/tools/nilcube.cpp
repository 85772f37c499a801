// Command-line front end. Every command prints one JSON document.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcube/certificates.hpp"
#include "nilcube/composition.hpp"
#include "nilcube/invariants.hpp"
#include "nilcube/linalg.hpp"
#include "nilcube/nilpotency.hpp"
#include "nilcube/tables.hpp"

using json = nlohmann::ordered_json;
using namespace nilcube;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Options {
  unsigned p = 0;
  std::string mdeg;
  std::size_t d = 0;
  std::string format = "json";
  unsigned threads = 1;
  unsigned max_norm = 8;
  std::uint64_t max_words = 20000;
  std::uint64_t max_words_gauss = 5000;
  std::uint64_t seed = 1;
  std::string method = "auto";
  bool check_complete = false;
  bool cross_check = false;
  bool count_only = false;
  bool all_orders = false;
  bool check_eval = false;
};

json word_json(const Word& w) {
  json a = json::array();
  for (Letter x : w) a.push_back(static_cast<int>(x));
  return a;
}

json words_json(const std::vector<Word>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(word_json(w));
  return a;
}

json mdeg_json(const Multidegree& m) {
  json a = json::array();
  for (unsigned c : m.counts()) a.push_back(c);
  return a;
}

json header(const std::string& command, const Options& o) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  j["p"] = o.p;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// One word per line, letters as columns.
void emit_csv(const std::vector<Word>& ws, std::size_t length) {
  for (std::size_t i = 0; i < length; ++i) {
    std::cout << (i ? "," : "") << "l" << i + 1;
  }
  std::cout << '\n';
  for (const auto& w : ws) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::cout << (i ? "," : "") << static_cast<int>(w[i]);
    }
    std::cout << '\n';
  }
}

Multidegree need_mdeg(const Options& o) {
  if (o.mdeg.empty()) throw std::invalid_argument("-m is required");
  return Multidegree::parse(o.mdeg);
}

int cmd_dim(const Options& o) {
  const auto m = need_mdeg(o);
  const auto dim = dim_component(o.p, m);
  json j = header("dim", o);
  j["mdeg"] = mdeg_json(m);
  j["words"] = word_count(m);
  j["dim"] = dim;
  emit(j);
  return kOk;
}

int cmd_basis(const Options& o) {
  const auto m = need_mdeg(o);
  const auto es = echelonize_S(m, FieldSpec(o.p));
  const auto basis = es.minimal_basis();
  if (o.format == "csv") {
    emit_csv(basis, m.norm());
    return kOk;
  }
  json j = header("basis", o);
  j["mdeg"] = mdeg_json(m);
  j["dim"] = basis.size();
  j["basis"] = words_json(basis);
  j["denominator_flag"] = es.denominator_flag();
  emit(j);
  return kOk;
}

int cmd_table(const Options& o) {
  const auto m = need_mdeg(o);
  const auto t = table(o.p, m);
  if (o.format == "csv") {
    emit_csv(t.words, m.norm());
    return kOk;
  }
  json j = header("table", o);
  j["mdeg"] = mdeg_json(m);
  j["source"] = to_string(t.source);
  j["size"] = t.words.size();
  j["words"] = words_json(t.words);
  emit(j);
  return kOk;
}

int cmd_verify_tables(const Options& o) {
  const FieldSpec field(o.p);
  json comps = json::array();
  bool all_ok = true;
  std::size_t skipped = 0;
  std::vector<unsigned> cur;
  std::function<void(unsigned)> rec = [&](unsigned cap) {
    if (!cur.empty()) {
      std::vector<std::vector<unsigned>> orders{cur};
      if (o.all_orders) {
        auto a = cur;
        std::sort(a.begin(), a.end());
        orders.clear();
        do {
          orders.push_back(a);
        } while (std::next_permutation(a.begin(), a.end()));
      }
      for (const auto& ord : orders) {
        const Multidegree m(ord);
        if (word_count(m) > o.max_words) {
          ++skipped;
          continue;
        }
        const auto es = echelonize_S(m, field);
        const auto t = table(o.p, m);
        const auto chk = verify_table(t, es);
        const auto card = cardinality(o.p, m);
        const bool ok = chk.ok() && (!card || *card == t.words.size());
        all_ok = all_ok && ok;
        json c;
        c["mdeg"] = mdeg_json(m);
        c["dim"] = chk.dim;
        c["table_size"] = chk.table_size;
        c["source"] = to_string(t.source);
        c["is_basis"] = chk.is_basis;
        c["minimal"] = chk.equals_minimal;
        c["ok"] = ok;
        comps.push_back(c);
      }
    }
    unsigned norm = 0;
    for (unsigned v : cur) norm += v;
    for (unsigned v = cap; v >= 1; --v) {
      if (norm + v > o.max_norm) continue;
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(3);
  json j = header("verify tables", o);
  j["max_norm"] = o.max_norm;
  j["max_words"] = o.max_words;
  j["checked"] = comps.size();
  j["skipped"] = skipped;
  j["ok"] = all_ok;
  j["components"] = comps;
  emit(j);
  return all_ok ? kOk : kVerifyFailed;
}

int cmd_composition(const Options& o) {
  if (o.d == 0) throw std::invalid_argument("-d is required");
  const auto m = build_Md_rows(o.p, o.d);
  const auto b = B_of(m);
  const bool b_ok = b == B1d(o.p, o.d).words;
  bool ok = b_ok;
  json j = header("composition", o);
  j["d"] = o.d;
  j["rows"] = m.rows.size();
  j["B_size"] = b.size();
  j["B_equals_B1d"] = b_ok;
  if (o.check_complete) {
    const auto rep = check_complete_under_composition(m);
    json c;
    c["complete"] = rep.complete;
    c["leading_words"] = rep.leading_words;
    c["collisions"] = rep.collisions;
    c["failures"] = rep.failures;
    c["first_failure"] =
        rep.first_failure ? word_json(*rep.first_failure) : json(nullptr);
    j["completeness"] = c;
    ok = ok && rep.complete;
  }
  if (o.cross_check) {
    std::size_t mismatches = 0;
    json first = nullptr;
    for (const auto& w : m.space->words()) {
      const bool in_b = std::binary_search(b.begin(), b.end(), w);
      if (classify_highest_term(o.p, w) == in_b) {
        if (mismatches++ == 0) first = word_json(w);
      }
    }
    json c;
    c["words"] = m.space->size();
    c["mismatches"] = mismatches;
    c["first_mismatch"] = first;
    j["pattern_cross_check"] = c;
    ok = ok && mismatches == 0;
  }
  j["ok"] = ok;
  emit(j);
  return ok ? kOk : kVerifyFailed;
}

CertifyMethod parse_method(const std::string& s) {
  if (s == "auto") return CertifyMethod::Auto;
  if (s == "phi_adj") return CertifyMethod::PhiAdj;
  if (s == "phi_k") return CertifyMethod::PhiK;
  if (s == "pruned") return CertifyMethod::PrunedRewrite;
  throw std::invalid_argument("unknown method " + s);
}

json certificate_json(const CertificateReport& r) {
  json j;
  j["d"] = r.d;
  j["independent"] = r.independent;
  j["method"] = to_string(r.method);
  j["candidate_size"] = r.candidate_size;
  j["rank"] = r.rank;
  j["equations"] = r.equations;
  if (!r.prerequisites.empty()) {
    json pre = json::array();
    for (const auto& q : r.prerequisites) pre.push_back(certificate_json(q));
    j["prerequisites"] = pre;
  }
  return j;
}

int cmd_certify(const Options& o) {
  if (o.d == 0) throw std::invalid_argument("-d is required");
  const auto rep = certify_independence(B1d(o.p, o.d), parse_method(o.method));
  json j = header("certify", o);
  j.update(certificate_json(rep));
  emit(j);
  return rep.independent ? kOk : kVerifyFailed;
}

int cmd_nilpotency(const Options& o) {
  if (o.d == 0) throw std::invalid_argument("-d is required");
  const auto rep = C_compute(o.p, o.d, o.max_words_gauss);
  json j = header("nilpotency", o);
  j["d"] = o.d;
  j["C"] = rep.C;
  j["formula"] = o.d >= 2 ? json(C_formula(o.p, o.d)) : json(nullptr);
  j["witness"] = word_json(rep.witness);
  j["witness_mdeg"] = mdeg_json(rep.witness_mdeg);
  j["witness_dim"] = rep.witness_dim;
  j["method"] = to_string(rep.method);
  j["components_checked"] = rep.components_checked;
  j["components_by_gauss"] = rep.components_by_gauss;
  emit(j);
  return kOk;
}

int cmd_gens(const Options& o) {
  if (o.d == 0) throw std::invalid_argument("-d is required");
  const auto sys = full_system(o.p, o.d);
  json j = header("gens", o);
  j["d"] = o.d;
  j["total"] = sys.total();
  j["max_degree"] = sys.max_degree();
  json byd;
  for (const auto& [deg, n] : sys.by_degree()) byd[std::to_string(deg)] = n;
  j["by_degree"] = byd;
  const FieldSpec eval_field(o.p == 0 ? 5 : o.p);
  json vanished = json::array();
  if (!o.count_only) {
    json gens = json::array();
    for (const auto& [m, gs] : sys.groups) {
      for (const auto& g : gs) {
        json e;
        e["mdeg"] = m;
        e["kind"] = g.kind == TraceGenerator::Kind::Sigma ? "sigma" : "trace";
        if (g.kind == TraceGenerator::Kind::Sigma) {
          e["k"] = g.k;
          e["letter"] = g.letter;
        } else {
          e["word"] = word_json(g.word);
        }
        e["text"] = g.to_string();
        gens.push_back(e);
      }
    }
    j["generators"] = gens;
  }
  if (o.check_eval) {
    for (const auto& [m, gs] : sys.groups) {
      for (const auto& g : gs) {
        if (!nonvanishing(g, o.d, eval_field, o.seed)) {
          vanished.push_back(g.to_string());
        }
      }
    }
    json c;
    c["field"] = eval_field.characteristic();
    c["seed"] = o.seed;
    c["draws"] = 100;
    c["vanished_on_all_draws"] = vanished;
    j["evaluation"] = c;
  }
  emit(j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the relatively free algebra with x^3 = 0"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format for word lists")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", o.threads, "Worker cap (work runs on one thread)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for random matrix evaluation");

  auto add_p = [&](CLI::App* c) {
    c->add_option("-p", o.p, "Characteristic (0 or a prime)")->required();
  };
  auto add_m = [&](CLI::App* c) {
    c->add_option("-m", o.mdeg, "Multidegree, e.g. 3,2,1")->required();
  };
  auto add_d = [&](CLI::App* c) {
    c->add_option("-d", o.d, "Number of letters")->required();
  };
  auto fmt = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* dim = app.add_subcommand("dim", "Dimension of one component");
  add_p(dim);
  add_m(dim);
  auto* basis = app.add_subcommand("basis", "Minimal basis by elimination");
  add_p(basis);
  add_m(basis);
  fmt(basis);
  auto* tab = app.add_subcommand("table", "Closed-form basis table");
  add_p(tab);
  add_m(tab);
  fmt(tab);
  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  auto* vt = verify->add_subcommand("tables", "Tables against elimination");
  add_p(vt);
  vt->add_option("--max-norm", o.max_norm, "Largest total degree");
  vt->add_option("--max-words", o.max_words, "Skip larger components");
  vt->add_flag("--all-orders", o.all_orders, "Check every order of entries");
  auto* comp = app.add_subcommand("composition", "The sets M_d");
  add_p(comp);
  add_d(comp);
  comp->add_flag("--check-complete", o.check_complete);
  comp->add_flag("--cross-check-patterns", o.cross_check);
  auto* cert = app.add_subcommand("certify", "Independence of B_{1^d}");
  add_p(cert);
  add_d(cert);
  cert->add_option("--method", o.method, "auto, phi_adj, phi_k or pruned");
  auto* nil = app.add_subcommand("nilpotency", "Nilpotency degree");
  add_p(nil);
  add_d(nil);
  nil->add_option("--max-words", o.max_words_gauss,
                  "Largest component to eliminate");
  auto* gens = app.add_subcommand("gens", "Generators of the invariants");
  add_p(gens);
  add_d(gens);
  gens->add_flag("--count-only", o.count_only);
  gens->add_flag("--check-eval", o.check_eval,
                 "Evaluate every generator at random matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dim) return cmd_dim(o);
    if (*basis) return cmd_basis(o);
    if (*tab) return cmd_table(o);
    if (*vt) return cmd_verify_tables(o);
    if (*comp) return cmd_composition(o);
    if (*cert) return cmd_certify(o);
    if (*nil) return cmd_nilpotency(o);
    if (*gens) return cmd_gens(o);
  } catch (const std::invalid_argument& e) {
    json j;
    j["schema"] = 1;
    j["error"] = e.what();
    emit(j);
    return kUsage;
  } catch (const std::exception& e) {
    json j;
    j["schema"] = 1;
    j["error"] = e.what();
    emit(j);
    return kVerifyFailed;
  }
  return kUsage;
}
