#include "matnum/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "matnum/core.hpp"
#include "matnum/counting.hpp"
#include "matnum/j2_minus_one.hpp"
#include "matnum/j2_plus_one.hpp"
#include "matnum/jn_minus_one.hpp"
#include "matnum/oracle.hpp"
#include "matnum/run_word.hpp"

namespace matnum::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Malformed command-line arguments that CLI11 itself accepted.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certification step reported failure.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, csv, json };

Int parse_int(const std::string& text, const std::string& what) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size() || !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                                           [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError(what + ": '" + text + "' is not an integer");
  return Int(text[0] == '+' ? text.substr(1) : text);
}

std::vector<Int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<Int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_int(item, what));
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

Json json_vec(const IntVec& v) {
  Json arr = Json::array();
  for (const Int& e : v.entries()) arr.push_back(e.str());
  return arr;
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + csv_cell(e);
    return s;
  }
  return v.dump();
}

/// One result record. Text output is free-form lines; csv and json are
/// derived from the named fields.
struct Record {
  std::string kind;
  std::vector<std::pair<std::string, Json>> fields;
  std::vector<std::string> text;
};

void emit(const Record& r, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::text:
      for (const std::string& line : r.text) out << line << '\n';
      break;
    case Format::csv: {
      std::string header, row;
      for (std::size_t i = 0; i < r.fields.size(); ++i) {
        if (i) header += ',', row += ',';
        header += r.fields[i].first;
        row += csv_cell(r.fields[i].second);
      }
      out << header << '\n' << row << '\n';
      break;
    }
    case Format::json: {
      Json doc;
      doc["schema"] = 1;
      doc["kind"] = r.kind;
      for (const auto& [k, v] : r.fields) doc[k] = v;
      out << doc.dump() << '\n';
      break;
    }
  }
}

NumberSystem planar_system(const std::string& name) {
  NumberSystem s = NumberSystem::by_name(name);
  if (!s.is_j2_plus_one() && !s.is_j2_minus_one())
    throw InvalidInput("system '" + name + "' is not supported here (expected j2p1 or j2m1)");
  return s;
}

/// Target from --a/--b or from two positionals given after `--`.
struct PlanarTarget {
  std::optional<std::string> a, b;
  std::vector<std::string> rest;

  void attach(CLI::App* cmd) {
    cmd->add_option("--a", a, "first coordinate");
    cmd->add_option("--b", b, "second coordinate");
    cmd->add_option("coords", rest, "a b (after --, for negative values)");
  }

  std::pair<Int, Int> get() const {
    if (a && b && rest.empty()) return {parse_int(*a, "--a"), parse_int(*b, "--b")};
    if (!a && !b && rest.size() == 2) return {parse_int(rest[0], "a"), parse_int(rest[1], "b")};
    throw UsageError("give the target as --a A --b B or as -- A B");
  }
};

std::string verified_line(const IntVec& value) { return "verified: (" + value.compact_str() + ")"; }

/// Re-evaluates a witness with the generic evaluator; failure is internal.
IntVec certify_word(const NumberSystem& system, const DigitWord& w, const IntVec& target) {
  const IntVec value = evaluate(system, w);
  if (value != target)
    throw InternalError("witness " + w.str() + " evaluates to " + value.str() + ", not " + target.str());
  return value;
}

// Subcommands ----------------------------------------------------------------

struct Common {
  std::string system = "j2p1";
  std::string format = "text";

  Format fmt() const {
    if (format == "text") return Format::text;
    if (format == "csv") return Format::csv;
    return Format::json;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_system, const std::string& default_system = "j2p1") {
  c.system = default_system;
  if (with_system) cmd->add_option("--system", c.system, "j2p1, j2m1 or jNm1")->capture_default_str();
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

Record cmd_eval(const Common& c, const std::string& word, bool run_length) {
  const NumberSystem sys = NumberSystem::by_name(c.system);
  IntVec value(sys.dimension());
  std::string printed;
  if (run_length) {
    const RunWord w = RunWord::parse(word);
    value = RunEvaluator(sys).evaluate(w);
    printed = w.str();
  } else {
    const DigitWord w = DigitWord::parse(word);
    value = evaluate(sys, w);
    printed = w.str();
  }
  return {"eval", {{"system", sys.name()}, {"word", printed}, {"value", json_vec(value)}}, {value.str()}};
}

Record cmd_minlen(const Common& c, const Int& a, const Int& b) {
  const NumberSystem sys = planar_system(c.system);
  const Int h = sys.is_j2_plus_one() ? j2p1::min_length(a, b) : j2m1::min_length(a, b);
  return {"minlen", {{"system", sys.name()}, {"a", a.str()}, {"b", b.str()}, {"min_length", h.str()}}, {h.str()}};
}

Record cmd_witness(const Common& c, const Int& a, const Int& b) {
  const NumberSystem sys = planar_system(c.system);
  const DigitWord w = sys.is_j2_plus_one() ? j2p1::witness(a, b) : j2m1::witness(a, b);
  const IntVec value = certify_word(sys, w, IntVec{a, b});
  return {"witness",
          {{"system", sys.name()},
           {"a", a.str()},
           {"b", b.str()},
           {"word", w.str()},
           {"length", w.size()},
           {"value", json_vec(value)}},
          {w.str(), "length: " + std::to_string(w.size()), verified_line(value)}};
}

Record cmd_weight(const Common& c, const Int& a, const Int& b) {
  const NumberSystem sys = planar_system(c.system);
  if (!sys.is_j2_minus_one()) throw InvalidInput("minimal weight is implemented for j2m1 only");
  const j2m1::WeightClass wc = j2m1::classify_weight(a, b);
  return {"weight",
          {{"system", sys.name()},
           {"a", a.str()},
           {"b", b.str()},
           {"weight", wc.weight.str()},
           {"case", j2m1::to_string(wc.which)}},
          {wc.weight.str()}};
}

Record cmd_weight_witness(const Common& c, const Int& a, const Int& b) {
  const NumberSystem sys = planar_system(c.system);
  if (!sys.is_j2_minus_one()) throw InvalidInput("minimal weight is implemented for j2m1 only");
  const DigitWord w = j2m1::weight_witness(a, b);
  const IntVec value = certify_word(sys, w, IntVec{a, b});
  return {"weight-witness",
          {{"system", sys.name()},
           {"a", a.str()},
           {"b", b.str()},
           {"word", w.str()},
           {"weight", w.weight()},
           {"value", json_vec(value)}},
          {w.str(), "weight: " + std::to_string(w.weight()), verified_line(value)}};
}

Record cmd_count(const Common& c, const Int& a, const Int& b, std::uint64_t k) {
  const NumberSystem sys = planar_system(c.system);
  const Int n = counting::count_reps(sys, a, b, k);
  return {"count",
          {{"system", sys.name()}, {"a", a.str()}, {"b", b.str()}, {"k", k}, {"count", n.str()}},
          {n.str()}};
}

void table_swap_descent(const Int& b, const Int& ell, Format fmt, std::ostream& out) {
  const auto rows = j2p1::swap_descent(b, ell);
  if (fmt == Format::json) {
    Json doc;
    doc["schema"] = 1;
    doc["kind"] = "swap-descent";
    doc["b"] = b.str();
    doc["ell"] = ell.str();
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back({{"word", r.word.str()}, {"value", json_vec(r.value)}});
    doc["rows"] = arr;
    out << doc.dump() << '\n';
    return;
  }
  if (fmt == Format::csv) out << "word,a,b\n";
  for (const auto& r : rows) {
    if (fmt == Format::csv)
      out << r.word.str() << ',' << r.value.compact_str() << '\n';
    else
      out << r.word.str() << ",(" << r.value.compact_str() << ")\n";
  }
}

void table_counts(const Common& c, std::uint64_t k, Format fmt, std::ostream& out) {
  const NumberSystem sys = planar_system(c.system);
  const counting::LaurentTable t = counting::count_table(sys, k);
  if (fmt == Format::json)
    out << t.to_json(sys.name(), k) << '\n';
  else
    out << t.to_csv();
}

void table_thresholds(const Int& b, std::uint64_t n_max, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    Json doc;
    doc["schema"] = 1;
    doc["kind"] = "thresholds";
    doc["b"] = b.str();
    Json arr = Json::array();
    for (std::uint64_t n = 0; n <= n_max; ++n) arr.push_back({{"n", n}, {"term", j2m1::threshold_term(b, n).str()}});
    doc["rows"] = arr;
    out << doc.dump() << '\n';
    return;
  }
  out << "n,term\n";
  for (std::uint64_t n = 0; n <= n_max; ++n) out << n << ',' << j2m1::threshold_term(b, n).str() << '\n';
}

Record cmd_fullrep(std::size_t n, const std::vector<Int>& coords, bool expand, std::size_t expand_limit) {
  if (n == 0) n = coords.size();
  if (coords.size() != n)
    throw InvalidInput("target has " + std::to_string(coords.size()) + " coordinates, expected " + std::to_string(n));
  const IntVec target(coords);
  jn::Builder builder(n);
  const RunWord w = builder.full_representation(target);
  const IntVec value = RunEvaluator(builder.system()).evaluate(w);
  if (value != target) throw InternalError("full representation evaluates to " + value.str());
  Record r{"fullrep",
           {{"n", n}, {"target", json_vec(target)}, {"word", w.str()}, {"length", w.length().str()}},
           {w.str(), "length: " + w.length().str()}};
  if (expand) {
    const DigitWord flat = w.expand(expand_limit);
    if (evaluate(builder.system(), flat) != target) throw InternalError("expanded word does not evaluate to target");
    r.fields.emplace_back("digits", flat.str());
    r.text.push_back(flat.str());
  }
  r.fields.emplace_back("value", json_vec(value));
  r.text.push_back(verified_line(value));
  return r;
}

struct CertifyOptions {
  std::optional<std::size_t> n;
  std::optional<std::int64_t> box;
  std::size_t k_max = 12;
  std::size_t horizon = 14;
  std::int64_t range_a = 20;
  std::int64_t range_b = 4;
};

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Check> run_certify(const CertifyOptions& o) {
  std::vector<Check> checks;
  std::vector<std::pair<std::size_t, std::int64_t>> boxes{{2, 3}, {3, 2}, {4, 1}};
  if (o.n || o.box) {
    if (!o.n || !o.box) throw UsageError("--n and --box go together");
    boxes = {{*o.n, *o.box}};
  }
  for (const auto& [n, box] : boxes) {
    const jn::FullnessReport r = jn::fullness_certificate(n, box);
    checks.push_back({"fullness n=" + std::to_string(n) + " box=" + std::to_string(box), r.ok(),
                      std::to_string(r.certified) + "/" + std::to_string(r.targets) + " certified, max length " +
                          r.max_length.str()});
  }
  for (const NumberSystem& sys : {NumberSystem::j2_plus_one(), NumberSystem::j2_minus_one()}) {
    bool ok = true;
    Int worst = 0;
    for (std::size_t k = 0; k <= o.k_max; ++k) {
      const oracle::NormBoundReport r = oracle::verify_norm_bound(sys, k);
      ok = ok && r.ok;
      worst = std::max(worst, r.max_norm);
    }
    checks.push_back({"norm-bound " + sys.name() + " k<=" + std::to_string(o.k_max), ok,
                      "largest norm " + worst.str()});
  }
  for (const NumberSystem& sys : {NumberSystem::j2_plus_one(), NumberSystem::j2_minus_one()}) {
    const oracle::LengthSweep sweep(sys, o.horizon);
    const auto formula = [&](std::int64_t a, std::int64_t b) {
      return sys.is_j2_plus_one() ? j2p1::min_length(a, b) : j2m1::min_length(a, b);
    };
    std::size_t compared = 0, bad = 0;
    for (const auto& [pt, k] : sweep.reached()) {
      ++compared;
      if (formula(pt.first, pt.second) != Int(k)) ++bad;
    }
    for (std::int64_t b = -o.range_b; b <= o.range_b; ++b)
      for (std::int64_t a = -o.range_a; a <= o.range_a; ++a)
        if (formula(a, b) <= Int(o.horizon) && !sweep.min_length(a, b)) ++bad;
    checks.push_back({"minlen " + sys.name() + " vs oracle horizon " + std::to_string(o.horizon), bad == 0,
                      std::to_string(compared) + " values, " + std::to_string(bad) + " mismatches"});
  }
  {
    const NumberSystem sys = NumberSystem::j2_minus_one();
    std::size_t horizon = 32;
    for (std::int64_t b = -o.range_b; b <= o.range_b; ++b)
      for (std::int64_t a = -o.range_a; a <= o.range_a; ++a)
        horizon = std::max(horizon, j2m1::weight_witness(a, b).size());
    const oracle::WeightSweep sweep(sys, horizon);
    std::size_t bad = 0, compared = 0;
    for (std::int64_t b = -o.range_b; b <= o.range_b; ++b)
      for (std::int64_t a = -o.range_a; a <= o.range_a; ++a) {
        ++compared;
        const auto w = sweep.min_weight(a, b);
        if (!w || Int(*w) != j2m1::min_weight(a, b)) ++bad;
      }
    checks.push_back({"weight j2m1 vs oracle horizon " + std::to_string(horizon), bad == 0,
                      std::to_string(compared) + " targets, " + std::to_string(bad) + " mismatches"});
  }
  return checks;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digit representations in Jordan-block number systems", "matnum"};
  app.require_subcommand(1);

  Common c_eval, c_minlen, c_witness, c_weight, c_wwit, c_count, c_table, c_fullrep, c_certify;
  PlanarTarget t_minlen, t_witness, t_weight, t_wwit, t_count;

  auto* eval = app.add_subcommand("eval", "evaluate a digit word");
  add_common(eval, c_eval, true);
  std::string eval_word;
  bool eval_run = false;
  eval->add_option("word", eval_word, "digits, most significant first")->required();
  eval->add_flag("--run-length", eval_run, "parse the word in run-length form, e.g. \"p*3 (zp)*2\"");

  auto* minlen = app.add_subcommand("minlen", "minimal representation length");
  add_common(minlen, c_minlen, true);
  t_minlen.attach(minlen);

  auto* witness = app.add_subcommand("witness", "a shortest representation");
  add_common(witness, c_witness, true);
  t_witness.attach(witness);

  auto* weight = app.add_subcommand("weight", "minimal number of nonzero digits (j2m1)");
  add_common(weight, c_weight, true, "j2m1");
  t_weight.attach(weight);

  auto* wwit = app.add_subcommand("weight-witness", "a lightest representation (j2m1)");
  add_common(wwit, c_wwit, true, "j2m1");
  t_wwit.attach(wwit);

  auto* count = app.add_subcommand("count", "number of representations of length k");
  add_common(count, c_count, true);
  t_count.attach(count);
  std::uint64_t count_k = 0;
  count->add_option("--k", count_k, "word length")->required();

  auto* table = app.add_subcommand("table", "emit a table: swap-descent, counts or thresholds");
  add_common(table, c_table, true);
  std::string table_kind, table_b = "0", table_ell = "0";
  std::uint64_t table_k = 0, table_n_max = 10;
  table->add_option("kind", table_kind, "swap-descent | counts | thresholds")->required();
  table->add_option("--b", table_b, "second coordinate");
  table->add_option("--ell", table_ell, "number of m digits");
  table->add_option("--k", table_k, "word length");
  table->add_option("--n-max", table_n_max, "last index");

  auto* fullrep = app.add_subcommand("fullrep", "a representation in J_n(-1) with digits {p, z}");
  add_common(fullrep, c_fullrep, false);
  std::size_t full_n = 0;
  std::string full_target;
  std::vector<std::string> full_rest;
  bool full_expand = false;
  std::size_t full_limit = std::size_t{1} << 20;
  fullrep->add_option("--n", full_n, "dimension (default: number of coordinates)");
  fullrep->add_option("--target", full_target, "comma-separated coordinates");
  fullrep->add_option("coords", full_rest, "coordinates (after --)");
  fullrep->add_flag("--expand", full_expand, "also print the plain digit string");
  fullrep->add_option("--expand-limit", full_limit, "longest word --expand will print")->capture_default_str();

  auto* certify = app.add_subcommand("certify", "fullness, norm-bound and oracle agreement checks");
  add_common(certify, c_certify, false);
  CertifyOptions cert;
  certify->add_option("--n", cert.n, "dimension for a single fullness box");
  certify->add_option("--box", cert.box, "half-width of the fullness box");
  certify->add_option("--k-max", cert.k_max, "longest word length in the norm sweep")->capture_default_str();
  certify->add_option("--horizon", cert.horizon, "oracle horizon for length agreement")->capture_default_str();
  certify->add_option("--range-a", cert.range_a, "|a| range for agreement sweeps")->capture_default_str();
  certify->add_option("--range-b", cert.range_b, "|b| range for agreement sweeps")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      emit(cmd_eval(c_eval, eval_word, eval_run), c_eval.fmt(), out);
    } else if (minlen->parsed()) {
      const auto [a, b] = t_minlen.get();
      emit(cmd_minlen(c_minlen, a, b), c_minlen.fmt(), out);
    } else if (witness->parsed()) {
      const auto [a, b] = t_witness.get();
      emit(cmd_witness(c_witness, a, b), c_witness.fmt(), out);
    } else if (weight->parsed()) {
      const auto [a, b] = t_weight.get();
      emit(cmd_weight(c_weight, a, b), c_weight.fmt(), out);
    } else if (wwit->parsed()) {
      const auto [a, b] = t_wwit.get();
      emit(cmd_weight_witness(c_wwit, a, b), c_wwit.fmt(), out);
    } else if (count->parsed()) {
      const auto [a, b] = t_count.get();
      emit(cmd_count(c_count, a, b, count_k), c_count.fmt(), out);
    } else if (table->parsed()) {
      if (table_kind == "swap-descent")
        table_swap_descent(parse_int(table_b, "--b"), parse_int(table_ell, "--ell"), c_table.fmt(), out);
      else if (table_kind == "counts")
        table_counts(c_table, table_k, c_table.fmt(), out);
      else if (table_kind == "thresholds")
        table_thresholds(parse_int(table_b, "--b"), table_n_max, c_table.fmt(), out);
      else
        throw UsageError("unknown table kind '" + table_kind + "' (expected swap-descent, counts or thresholds)");
    } else if (fullrep->parsed()) {
      std::vector<Int> coords;
      if (!full_target.empty() && full_rest.empty())
        coords = parse_int_list(full_target, "--target");
      else if (full_target.empty() && !full_rest.empty())
        for (const std::string& s : full_rest) coords.push_back(parse_int(s, "coordinate"));
      else
        throw UsageError("give the target as --target x1,x2,... or as -- x1 x2 ...");
      emit(cmd_fullrep(full_n, coords, full_expand, full_limit), c_fullrep.fmt(), out);
    } else if (certify->parsed()) {
      const std::vector<Check> checks = run_certify(cert);
      const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& ch) { return ch.pass; });
      if (c_certify.fmt() == Format::json) {
        Json doc;
        doc["schema"] = 1;
        doc["kind"] = "certify";
        Json arr = Json::array();
        for (const Check& ch : checks) arr.push_back({{"check", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
        doc["checks"] = arr;
        doc["pass"] = ok;
        out << doc.dump() << '\n';
      } else {
        if (c_certify.fmt() == Format::csv) out << "check,pass,detail\n";
        for (const Check& ch : checks) {
          if (c_certify.fmt() == Format::csv)
            out << ch.name << ',' << (ch.pass ? "true" : "false") << ",\"" << ch.detail << "\"\n";
          else
            out << '[' << (ch.pass ? "PASS" : "FAIL") << "] " << ch.name << ": " << ch.detail << '\n';
        }
      }
      if (!ok) throw CertificationFailure("certification failed");
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const CertificationFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace matnum::cli
