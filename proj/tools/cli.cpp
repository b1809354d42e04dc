#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "scatfact/closed_forms.hpp"
#include "scatfact/delseq.hpp"
#include "scatfact/error.hpp"
#include "scatfact/explorer.hpp"
#include "scatfact/family.hpp"
#include "scatfact/reconstruct.hpp"
#include "scatfact/spectrum.hpp"

namespace scatfact::cli {

namespace {

using json = nlohmann::ordered_json;

json number(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
    return v.convert_to<std::uint64_t>();
  return v.str();
}

json params_json(const FormulaParams& p) {
  json j = json::object();
  auto put = [&](const char* name, const std::optional<std::size_t>& v) {
    if (v) j[name] = *v;
  };
  put("k", p.k);
  put("c", p.c);
  put("i", p.i);
  put("j", p.j);
  put("n", p.n);
  return j;
}

std::optional<std::size_t> env_max_k() {
  const char* s = std::getenv("SCATFACT_MAX_K");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  unsigned long v = std::strtoul(s, &end, 10);
  if (*end) throw RangeError("SCATFACT_MAX_K must be a natural number");
  return static_cast<std::size_t>(v);
}

struct Options {
  std::string word;
  std::optional<std::size_t> k, c, i, j, n;
  std::string format = "text";
  bool verify = false;
  bool strict = false;
  bool orbits = false;
  unsigned jobs = 0;
  std::string csv;
  std::string positional;
};

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw RangeError(std::string("missing required parameter ") + flag);
  return *v;
}

void print_words(std::ostream& out, const std::vector<BinaryWord>& words, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& w : words) arr.push_back(w.str());
    out << arr.dump() << '\n';
  } else {
    for (const auto& w : words) out << w.str() << '\n';
  }
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const BinaryWord w = BinaryWord::parse(o.word);
  const Spectrum s = spectrum(w, need(o.k, "--k"));
  if (o.format == "json") out << to_json(s) << '\n';
  else if (o.format == "csv") write_csv(out, s);
  else print_words(out, s.words(), "text");
  return kOk;
}

int cmd_card(const Options& o, std::ostream& out) {
  out << spectrum_cardinality(BinaryWord::parse(o.word), need(o.k, "--k")) << '\n';
  return kOk;
}

int cmd_closed_form(const Options& o, std::ostream& out, std::ostream& err) {
  FormulaParams p{o.k, o.c, o.i, o.j, o.n};
  if (o.positional == "remark") {
    const auto r = remark_inequality(need(o.i, "--i"), o.k);
    if (o.format == "json") {
      json j;
      j["formula"] = "remark";
      j["params"] = params_json(p);
      j["sum_below_m"] = number(r.sum_below_m);
      j["sum_below_i"] = number(r.sum_below_i);
      j["positive"] = r.holds();
      out << j.dump() << '\n';
    } else {
      out << "sum j<M " << r.sum_below_m << '\n'
          << "sum j<i " << r.sum_below_i << '\n'
          << (r.holds() ? "positive" : "not positive") << '\n';
    }
    if (o.verify && !r.holds()) {
      err << "remark inequality is not positive for i=" << r.i << '\n';
      return kCheckFailed;
    }
    return kOk;
  }
  const auto id = parse_formula(o.positional);
  if (!id) throw RangeError("unknown formula '" + o.positional + "'");
  const FormulaResult r = evaluate(*id, p);
  std::optional<BigInt> oracle;
  if (o.verify) oracle = oracle_value(*id, p);
  const bool match = !oracle || *oracle == r.value;
  if (o.format == "json") {
    json j;
    j["formula"] = std::string(formula_name(*id));
    j["params"] = params_json(p);
    j["value"] = number(r.value);
    if (oracle) {
      j["oracle"] = number(*oracle);
      j["match"] = match;
    }
    out << j.dump() << '\n';
  } else {
    out << "value " << r.value << '\n';
    if (oracle) out << "oracle " << *oracle << '\n' << (match ? "match" : "mismatch") << '\n';
  }
  if (!match) {
    err << formula_name(*id) << " (" << p.str() << "): formula " << r.value << " != oracle "
        << *oracle << '\n';
    return kCheckFailed;
  }
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<BinaryWord> words;
  BinaryWord source;
  std::size_t length;
  if (o.positional == "alternating") {
    const std::size_t n = need(o.n, "--n");
    length = need(o.k, "--k");
    words = enumerate_distinct(n, length).collect();
    source = alternating_prefix(n);
  } else if (o.positional == "ab-power-a") {
    const std::size_t k = need(o.k, "--k"), c = need(o.c, "--c");
    length = need(o.i, "--i");
    words = enumerate_ab_power_a(k, c, length).collect();
    source = family({.family = Family::ab_power_a, .k = k, .c = c});
  } else {
    throw RangeError("unknown enumeration family '" + o.positional + "' (alternating | ab-power-a)");
  }

  if (o.format == "json") {
    auto sorted = words;
    std::sort(sorted.begin(), sorted.end());
    print_words(out, sorted, "json");
  } else {
    print_words(out, words, "text");
  }

  if (!o.verify) return kOk;
  std::set<BinaryWord> seen(words.begin(), words.end());
  const auto expected = spectrum(source, length).words();
  const bool dupes = seen.size() != words.size();
  const bool equal = std::equal(seen.begin(), seen.end(), expected.begin(), expected.end());
  if (dupes || !equal) {
    err << "check failed: " << words.size() << " emitted, " << seen.size() << " distinct, spectrum has "
        << expected.size() << '\n';
    return kCheckFailed;
  }
  err << "check ok: " << words.size() << " words, no duplicates, equals the spectrum of "
      << source.str() << '\n';
  return kOk;
}

int cmd_reconstruct(const Options& o, std::ostream& out, std::ostream& err) {
  const BinaryWord w = BinaryWord::parse(o.word);
  if (!balance(w).strictly_balanced) throw RangeError("reconstruct: word must be strictly balanced");
  const std::size_t k = w.size() / 2;
  const std::string method = o.positional.empty() ? "general" : o.positional;
  ReconstructionResult r;
  if (method == "general") {
    auto oracle = real_oracle(w, k + 1, false);
    r = reconstruct_general(oracle, k);
  } else if (method == "two-blocks") {
    if (k == 0) {
      r = {BinaryWord{}, 0, ReconstructionMethod::two_blocks};
    } else {
      const std::size_t m = two_block_query_length(k);
      if (m > w.size()) throw RangeError("reconstruct two-blocks: word too short for query length");
      auto oracle = real_oracle(w, m, true);
      r = reconstruct_two_blocks(oracle, k);
    }
  } else {
    throw RangeError("unknown reconstruction method '" + method + "' (general | two-blocks)");
  }
  const bool match = r.word == w;
  if (o.format == "json") {
    json j;
    j["hidden"] = w.str();
    j["recovered"] = r.word.str();
    j["queries"] = r.queries_used;
    j["method"] = std::string(method_name(r.method));
    j["match"] = match;
    out << j.dump() << '\n';
  } else {
    out << "recovered " << r.word.str() << '\n'
        << "queries " << r.queries_used << '\n'
        << "method " << method_name(r.method) << '\n'
        << (match ? "match" : "mismatch") << '\n';
  }
  if (!match && o.strict) {
    err << "reconstruction mismatch: hidden " << w.str() << ", recovered " << r.word.str() << '\n';
    return kCheckFailed;
  }
  return kOk;
}

ExplorerOptions explorer_options(const Options& o) {
  ExplorerOptions e;
  e.jobs = o.jobs;
  e.orbits = o.orbits;
  e.max_k = env_max_k();
  return e;
}

int cmd_explore(const Options& o, std::ostream& out, std::ostream& err) {
  const std::size_t k = need(o.k, "--k");
  const CardinalityReport r = achievable_cardinalities(k, explorer_options(o));
  const ConjectureVerdict gaps = verify_gap_theorems(r);
  if (!o.csv.empty()) {
    std::ofstream f(o.csv);
    if (!f) throw Error("cannot open " + o.csv + " for writing");
    write_report_csv(f, r);
  }
  if (o.format == "json") {
    out << report_to_json(r) << '\n';
  } else if (o.format == "csv") {
    write_report_csv(out, r);
  } else {
    out << "k=" << r.k << " words examined " << r.words_examined
        << (r.orbit_reduced ? " (one per orbit)" : "") << '\n';
    for (const auto& [n, ws] : r.achieved)
      out << "  " << n << "  " << ws.size() << (r.orbit_reduced ? " orbits" : " canonical") << "  "
          << ws.front().str() << '\n';
    out << "missing";
    for (auto n : r.missing) out << ' ' << n;
    out << '\n' << verdict_to_text(gaps);
  }
  if (o.strict && !gaps.holds()) {
    err << verdict_to_text(gaps);
    return kCheckFailed;
  }
  return kOk;
}

int cmd_conjecture(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string& id = o.positional;
  const ExplorerOptions opts = explorer_options(o);
  ConjectureVerdict v;
  if (id == "last-gap") v = check_last_gap_conjecture(need(o.k, "--k"));
  else if (id == "theta") v = check_theta_conjecture(2, need(o.k, "--k"));
  else if (id == "reconstruction") v = check_reconstruction_conjecture(need(o.k, "--k"), opts);
  else if (id == "gaps") v = verify_gap_theorems(need(o.k, "--k"), opts);
  else if (id == "characterizations") v = verify_characterizations(need(o.k, "--k"), opts);
  else if (id == "nk") v = check_nk_families(o.i.value_or(2), need(o.k, "--k"));
  else if (id == "full-spectrum") v = verify_full_spectrum_corollary(o.n.value_or(14));
  else throw RangeError("unknown conjecture id '" + id + "'");
  if (o.format == "json") out << verdict_to_json(v) << '\n';
  else out << verdict_to_text(v);
  if (o.strict && !v.holds()) {
    for (const auto& e : v.entries)
      if (e.status == Status::fails)
        err << v.id << ' ' << e.parameter << ": " << e.claim << " fails for "
            << (e.witness ? e.witness->str() : "?") << " (expected "
            << (e.expected ? std::to_string(*e.expected) : "-") << ", actual "
            << (e.actual ? std::to_string(*e.actual) : "-") << ")\n";
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"scatfact: k-spectra of binary words", "scatfact"};
  app.require_subcommand(1);
  Options o;

  auto add_k = [&](CLI::App* s, const char* help) { return s->add_option("--k", o.k, help); };
  auto add_format = [&](CLI::App* s, std::vector<std::string> allowed) {
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };

  auto* spec = app.add_subcommand("spectrum", "list ScatFact_k(word)");
  spec->add_option("--word", o.word, "word over {a,b}")->required();
  add_k(spec, "factor length")->required();
  add_format(spec, {"text", "json", "csv"});

  auto* card = app.add_subcommand("card", "print |ScatFact_k(word)|");
  card->add_option("--word", o.word, "word over {a,b}")->required();
  add_k(card, "factor length")->required();

  auto* cf = app.add_subcommand("closed-form", "evaluate a cardinality formula");
  std::string formulas;
  for (auto id : all_formulas()) formulas += std::string(formula_name(id)) + " | ";
  cf->add_option("formula", o.positional, formulas + "remark")->required();
  add_k(cf, "k (factor length / l for alternating-prefix)");
  cf->add_option("--c", o.c, "balance c");
  cf->add_option("--i", o.i, "parameter i");
  cf->add_option("--j", o.j, "parameter j (bound for compositions)");
  cf->add_option("--n", o.n, "word length n (parts for compositions)");
  cf->add_flag("--verify", o.verify, "compare with the brute-force oracle");
  add_format(cf, {"text", "json"});

  auto* en = app.add_subcommand("enumerate", "stream distinct scattered factors");
  en->add_option("family", o.positional, "alternating | ab-power-a")->required();
  add_k(en, "factor length l (alternating) or k (ab-power-a)");
  en->add_option("--n", o.n, "alternating prefix length");
  en->add_option("--c", o.c, "c for (ab)^{k-c} a^c");
  en->add_option("--i", o.i, "factor length for ab-power-a");
  en->add_flag("--verify,--check", o.verify, "compare with the spectrum");
  add_format(en, {"text", "json"});

  auto* rc = app.add_subcommand("reconstruct", "rebuild a word from spectrum queries");
  rc->add_option("method", o.positional, "general | two-blocks (default general)");
  rc->add_option("--word", o.word, "hidden strictly balanced word")->required();
  rc->add_flag("--strict", o.strict, "exit 2 on mismatch");
  add_format(rc, {"text", "json"});

  auto* ex = app.add_subcommand("explore-gaps", "achievable cardinalities for |w| = 2k");
  add_k(ex, "half length k")->required();
  ex->add_flag("--orbits", o.orbits, "one word per symmetry orbit");
  ex->add_option("--csv", o.csv, "also write the CSV table to this path");
  ex->add_option("--jobs", o.jobs, "worker threads (default: cores)");
  ex->add_flag("--strict", o.strict, "exit 2 if a gap theorem fails");
  add_format(ex, {"text", "json", "csv"});

  auto* cc = app.add_subcommand("check-conjecture", "run a conjecture or theorem checker");
  std::string ids;
  for (const auto& id : conjecture_ids()) ids += (ids.empty() ? "" : " | ") + id;
  cc->add_option("id", o.positional, ids)->required();
  add_k(cc, "k (upper end for theta)");
  cc->add_option("--i", o.i, "i for nk (default 2)");
  cc->add_option("--n", o.n, "maximum word length for full-spectrum (default 14)");
  cc->add_option("--jobs", o.jobs, "worker threads (default: cores)");
  cc->add_flag("--strict", o.strict, "exit 2 on a counterexample");
  add_format(cc, {"text", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (spec->parsed()) return cmd_spectrum(o, out);
    if (card->parsed()) return cmd_card(o, out);
    if (cf->parsed()) return cmd_closed_form(o, out, err);
    if (en->parsed()) return cmd_enumerate(o, out, err);
    if (rc->parsed()) return cmd_reconstruct(o, out, err);
    if (ex->parsed()) return cmd_explore(o, out, err);
    if (cc->parsed()) return cmd_conjecture(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  err << app.help();
  return kUsage;
}

}  // namespace scatfact::cli
