#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curveatlas/audit.hpp"
#include "curveatlas/classifier.hpp"
#include "curveatlas/cubic.hpp"
#include "curveatlas/json_io.hpp"
#include "curveatlas/max_genus.hpp"
#include "curveatlas/picard.hpp"

namespace {

using namespace curveatlas;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitCap = 4;
constexpr int kExitAuditRegression = 5;

void print_family_report_table(const FamilyReport& r) {
  std::cout << "class           : (" << r.a.str() << "," << r.b.str()
            << ") on a degree-" << r.s.str() << " surface\n"
            << "d, g, t         : " << r.d.str() << ", " << r.g.str() << ", "
            << r.t.str() << "\n"
            << "dim W           : " << r.dim_w.str() << "\n";
  std::cout << "h1(I_C(s))      : ";
  if (r.h1_ideal_s.is_known())
    std::cout << r.h1_ideal_s.value().str() << "\n";
  else
    std::cout << "unknown (" << r.h1_ideal_s.reason() << ")\n";
  std::cout << "case            : " << to_string(r.theorem_case);
  if (r.theorem_case == TheoremCase::HypothesisFailed)
    std::cout << " (" << r.failed_condition << ")";
  std::cout << "\n";
  std::cout << "status          : " << to_string(r.status);
  if (!r.status_note.empty()) std::cout << " (" << r.status_note << ")";
  std::cout << "\n";
  std::cout << "critical family : ";
  if (r.critical_family)
    std::cout << to_string(r.critical_family->family) << " (n = "
              << r.critical_family->n.str() << ")\n";
  else
    std::cout << "none\n";
  std::cout << "assumption      : " << r.assumption << "\n";
}

std::string tuple_str(const SevenTuple& t) {
  std::string s = "(" + t.delta.str() + ";";
  for (int i = 0; i < 6; ++i) s += " " + t.m[i].str();
  return s + ")";
}

void print_range_verdict_table(const RangeVerdict& v) {
  std::cout << "d, g                : " << v.d.str() << ", " << v.g.str()
            << "\n"
            << "dim W (s=3)         : " << v.dim_w3.str() << "\n"
            << "in conjecture range : " << (v.in_conjecture_range ? "yes" : "no")
            << "\n";
  std::cout << "proven by           : ";
  if (v.proven.certificates.empty()) {
    std::cout << "none\n";
  } else {
    bool first = true;
    for (const auto& c : v.proven.certificates) {
      if (!first) std::cout << ", ";
      std::cout << cert_name(c);
      if (c.witness) std::cout << " " << tuple_str(*c.witness);
      first = false;
    }
    std::cout << "\n";
  }
  if (!v.proven.skipped_t.empty()) {
    std::cout << "skipped t           :";
    for (const Int& t : v.proven.skipped_t) std::cout << " " << t.str();
    std::cout << "\n";
  }
  std::cout << "existence           : " << to_string(v.existence) << "\n";
  if (v.witness_search_skipped)
    std::cout << "note                : tuple witness search skipped (d too "
                 "large)\n";
}

void print_audit_table(const AuditTranscript& t) {
  std::cout << "audit case " << t.case_id << "\n";
  for (const auto& r : t.rows) {
    std::cout << "  " << r.label << ": computed " << r.computed.str();
    if (r.printed) {
      std::cout << ", printed " << r.printed->str() << " ";
      if (r.flagged)
        std::cout << "[FLAGGED DISCREPANCY]";
      else
        std::cout << (r.matches() ? "[ok]" : "[MISMATCH]");
    }
    std::cout << "\n";
  }
  std::cout << (t.all_unflagged_match() ? "result: PASS" : "result: REGRESSION")
            << "\n";
}

int run_classify(long long s, long long a, long long b, bool as_json) {
  if (s < 4) {
    std::cerr << "classify: --s must be >= 4 (the cubic theory lives under "
                 "'cubic')\n";
    return kExitUsage;
  }
  FamilyReport rep = classify(s, a, b);
  if (as_json)
    std::cout << atlas_record(rep).dump() << "\n";
  else
    print_family_report_table(rep);
  return kExitOk;
}

int run_atlas(long long s_min, long long s_max, long long a_max,
              long long b_max, const std::string& out_path, long long cap) {
  if (s_min < 4 || a_max < 0 || b_max < 0) {
    std::cerr << "atlas: bounds must satisfy s-min >= 4, a-max >= 0, "
                 "b-max >= 0\n";
    return kExitUsage;
  }
  long long s_count = s_max >= s_min ? s_max - s_min + 1 : 0;
  long long cells = s_count * a_max * b_max;
  if (cells > cap) {
    std::cerr << "atlas: grid of " << cells << " cells exceeds cap " << cap
              << "\n";
    return kExitCap;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "atlas: cannot open output file " << out_path << "\n";
    return kExitIo;
  }
  for (long long s = s_min; s <= s_max; ++s) {
    for (long long a = 1; a <= a_max; ++a) {
      for (long long b = 1; b <= b_max; ++b) {
        FamilyReport rep = classify(s, a, b);
        if (rep.theorem_case == TheoremCase::HypothesisFailed) continue;
        out << atlas_record(rep).dump() << "\n";
      }
    }
  }
  out.flush();
  if (!out) {
    std::cerr << "atlas: write failure on " << out_path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_cubic(long long d, long long g, bool as_json) {
  if (d < 1) {
    std::cerr << "cubic: --d must be >= 1\n";
    return kExitUsage;
  }
  RangeVerdict v = range_verdict(d, g);
  if (as_json)
    std::cout << atlas_record(v).dump() << "\n";
  else
    print_range_verdict_table(v);
  return kExitOk;
}

int run_tuples(long long d, long long g, const std::vector<long long>& m6,
               bool as_json) {
  if (d < 1 || d > 2000) {
    std::cerr << "tuples: --d must be between 1 and 2000\n";
    return kExitUsage;
  }
  std::set<long long> filter(m6.begin(), m6.end());
  auto tuples = enumerate_tuples(d, g, filter);
  if (as_json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : tuples) arr.push_back(to_json(t));
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << tuples.size() << " tuple(s) with (d,g) = (" << d << "," << g
              << ")";
    if (!filter.empty()) {
      std::cout << ", m6 in {";
      bool first = true;
      for (long long v : filter) {
        if (!first) std::cout << ",";
        std::cout << v;
        first = false;
      }
      std::cout << "}";
    }
    std::cout << "\n";
    for (const auto& t : tuples) std::cout << "  " << tuple_str(t) << "\n";
  }
  return kExitOk;
}

int run_maxgenus(long long d, long long s, const std::string& fixtures_path,
                 bool as_json) {
  if (d < 1 || s < 2) {
    std::cerr << "maxgenus: requires --d >= 1 and --s >= 2\n";
    return kExitUsage;
  }
  MaxGenusAnswer a;
  try {
    a = fixtures_path.empty()
            ? max_genus(d, s)
            : max_genus(d, s, BRangeFixtures::from_json_file(fixtures_path));
  } catch (const std::runtime_error& e) {
    std::cerr << "maxgenus: " << e.what() << "\n";
    return kExitIo;
  }
  if (as_json) {
    nlohmann::json j = to_json(a);
    j["d"] = d;
    j["s"] = s;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "G(" << d << "," << s << ") = ";
    switch (a.kind) {
      case MaxGenusAnswer::Kind::Exact:
        std::cout << a.value.str() << " (exact, "
                  << (a.regime == GenusRegime::CRange ? "C-range"
                                                      : "extended C-range")
                  << ")\n";
        break;
      case MaxGenusAnswer::Kind::Conjectural:
        std::cout << a.value.str() << " (conjectural: " << a.note << ")\n";
        break;
      case MaxGenusAnswer::Kind::OutOfRange:
        std::cout << "out of range (" << a.note << ")\n";
        break;
    }
  }
  return kExitOk;
}

int run_audit(const std::string& case_name, bool as_json) {
  auto c = audit_case_from_string(case_name);
  if (!c) {
    std::cerr << "audit: unknown case '" << case_name << "'; known cases:";
    for (const auto& n : audit_case_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return kExitUsage;
  }
  AuditTranscript t = audit_case(*c);
  if (as_json)
    std::cout << to_json(t).dump() << "\n";
  else
    print_audit_table(t);
  return t.all_unflagged_match() ? kExitOk : kExitAuditRegression;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "curveatlas: exact integer invariants, component classifications and "
      "range verdicts for space curves on low-degree surfaces"};
  app.require_subcommand(1);

  long long s = 0, a = 0, b = 0, d = 0, g = 0;
  long long s_min = 4, s_max = 4, a_max = 0, b_max = 0;
  long long cap = 10000000;
  std::string out_path, fixtures_path, case_name;
  std::vector<long long> m6;
  bool json_classify = false, table_classify = false;
  bool json_cubic = false, table_cubic = false;
  bool json_tuples = false, table_tuples = false;
  bool json_maxgenus = false, table_maxgenus = false;
  bool json_audit = false, table_audit = false;

  auto* cls = app.add_subcommand(
      "classify", "Classify the class a*f1 + b*f2 on a degree-s surface");
  cls->add_option("--s", s, "surface degree (>= 4)")->required();
  cls->add_option("--a", a, "coefficient of f1")->required();
  cls->add_option("--b", b, "coefficient of f2")->required();
  cls->add_flag("--json", json_classify, "emit JSON");
  cls->add_flag("--table", table_classify, "emit human-readable table");

  auto* atl = app.add_subcommand(
      "atlas", "Sweep a grid and write newline-delimited JSON records for "
               "every class passing the hypothesis gate");
  atl->add_option("--s-min", s_min, "smallest surface degree")->required();
  atl->add_option("--s-max", s_max, "largest surface degree")->required();
  atl->add_option("--a-max", a_max, "largest a")->required();
  atl->add_option("--b-max", b_max, "largest b")->required();
  atl->add_option("--out", out_path, "output path")->required();
  atl->add_option("--cap", cap, "maximum grid cells (default 10^7)");

  auto* cub = app.add_subcommand(
      "cubic", "Range verdict for (d,g) on a smooth cubic surface");
  cub->add_option("--d", d, "degree")->required();
  cub->add_option("--g", g, "genus")->required();
  cub->add_flag("--json", json_cubic, "emit JSON");
  cub->add_flag("--table", table_cubic, "emit human-readable table");

  auto* tup = app.add_subcommand(
      "tuples", "Enumerate 7-tuples (delta, m1..m6) with invariants (d,g)");
  tup->add_option("--d", d, "degree (1..2000)")->required();
  tup->add_option("--g", g, "genus")->required();
  tup->add_option("--m6", m6, "restrict m6 to these values")->delimiter(',');
  tup->add_flag("--json", json_tuples, "emit JSON");
  tup->add_flag("--table", table_tuples, "emit human-readable list");

  auto* mg = app.add_subcommand("maxgenus",
                                "Maximum genus G(d,s) of space curves on no "
                                "surface of degree s-1");
  mg->add_option("--d", d, "degree")->required();
  mg->add_option("--s", s, "surface degree")->required();
  mg->add_option("--fixtures", fixtures_path,
                 "JSON file overriding the built-in B-range value table");
  mg->add_flag("--json", json_maxgenus, "emit JSON");
  mg->add_flag("--table", table_maxgenus, "emit human-readable line");

  auto* aud = app.add_subcommand(
      "audit", "Replay a recorded arithmetic chain and diff it against the "
               "printed values");
  aud->add_option("case", case_name, "case id (e.g. Q12_8)")->required();
  aud->add_flag("--json", json_audit, "emit JSON");
  aud->add_flag("--table", table_audit, "emit human-readable transcript");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cls->parsed()) return run_classify(s, a, b, json_classify);
    if (atl->parsed())
      return run_atlas(s_min, s_max, a_max, b_max, out_path, cap);
    if (cub->parsed()) return run_cubic(d, g, json_cubic);
    if (tup->parsed()) return run_tuples(d, g, m6, json_tuples);
    if (mg->parsed()) return run_maxgenus(d, s, fixtures_path, json_maxgenus);
    if (aud->parsed()) return run_audit(case_name, json_audit);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
