// xcomplex: command-line front end. Reports go to stdout as JSON, a short
// human summary goes to stderr.
//
// Exit codes: 0 ok, 1 input error, 2 validation failure, 3 cap exceeded,
// 4 internal assertion (or a failed self-check).

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include <CLI11.hpp>

#include "xcomplex/xcomplex.hpp"

namespace {

using namespace xcomplex;
using json = nlohmann::json;

enum Exit { kOk = 0, kInput = 1, kInvalid = 2, kCap = 3, kInternal = 4 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::IndexOutOfRange:
      return kInput;
    case ErrorCode::NotAssociative:
    case ErrorCode::NoIdentityAtZero:
    case ErrorCode::MissingInverse:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NotSubgroup:
    case ErrorCode::NotNormal:
    case ErrorCode::ValidationFailed:
      return kInvalid;
    case ErrorCode::ResultTooLarge:
    case ErrorCode::InstanceTooLarge:
      return kCap;
    case ErrorCode::TargetNotMorphism:
    case ErrorCode::InternalAssertion:
      return kInternal;
  }
  return kInternal;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::InternalAssertion, "SHA-256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

/// An input given as a path or as builtin:NAME.
struct Source {
  std::string input;
  json document;
  std::string sha256;
};

constexpr std::string_view builtin_prefix = "builtin:";

bool is_builtin(const std::string& input) { return input.rfind(builtin_prefix, 0) == 0; }

Source load_presentation_source(const std::string& input) {
  if (is_builtin(input)) {
    auto doc = io::to_json(builtin_space(input.substr(builtin_prefix.size())));
    const auto hash = sha256_hex(doc.dump());
    return {input, std::move(doc), hash};
  }
  const auto text = io::read_file(input);
  return {input, io::parse_json(text, input), sha256_hex(text)};
}

Source load_complex_source(const std::string& input) {
  if (is_builtin(input)) {
    auto doc = io::to_json(builtin_complex(input.substr(builtin_prefix.size())));
    const auto hash = sha256_hex(doc.dump());
    return {input, std::move(doc), hash};
  }
  const auto text = io::read_file(input);
  return {input, io::parse_json(text, input), sha256_hex(text)};
}

struct Options {
  std::string command;
  std::string presentation;
  std::string complex;
  bool enumerate = false;
  bool oracle = false;
  bool euler = false;
  std::optional<std::uint64_t> cap;
  unsigned threads = 1;
};

struct Caps {
  std::uint64_t enumeration = default_enumeration_cap;
  std::uint64_t bruteforce = default_bruteforce_cap;
  std::uint64_t edges = default_edge_budget;
};

Caps resolve_caps(const Options& o) {
  Caps caps;
  std::optional<std::uint64_t> value = o.cap;
  if (!value) {
    if (const char* env = std::getenv("XCOMPLEX_CAP"); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        value = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, std::string("XCOMPLEX_CAP is not a number: ") + env);
      }
    }
  }
  if (value) caps.enumeration = caps.bruteforce = caps.edges = *value;
  return caps;
}

class Run {
 public:
  explicit Run(Options o) : o_(std::move(o)), caps_(resolve_caps(o_)) {
    report_["version"] = version;
    report_["command"] = {{"name", o_.command},
                          {"presentation", o_.presentation},
                          {"complex", o_.complex},
                          {"enumerate", o_.enumerate},
                          {"oracle", o_.oracle},
                          {"euler", o_.euler},
                          {"threads", o_.threads}};
    if (o_.cap) report_["command"]["cap"] = *o_.cap;
    report_["inputs"] = json::object();
    report_["result"] = json::object();
  }

  int execute() {
    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    try {
      code = dispatch();
    } catch (const ValidationError& e) {
      report_["error"] = {{"code", to_string(e.code())}, {"message", e.what()}, {"report", io::to_json(e.report())}};
      summary_ = e.what();
      code = kInvalid;
    } catch (const Error& e) {
      report_["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
      summary_ = e.what();
      code = exit_code_for(e.code());
    } catch (const std::exception& e) {
      report_["error"] = {{"code", "InternalAssertion"}, {"message", e.what()}};
      summary_ = e.what();
      code = kInternal;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report_["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    report_["exit_code"] = code;
    std::cout << report_.dump(2) << "\n";
    std::cerr << o_.command << ": " << summary_ << "\n";
    return code;
  }

 private:
  int dispatch() {
    if (o_.command == "validate") return validate_cmd();
    if (o_.command == "count") return count_cmd();
    if (o_.command == "invariant") return invariant_cmd();
    if (o_.command == "classes") return classes_cmd();
    if (o_.command == "library") return library_cmd();
    if (o_.command == "selfcheck") return selfcheck_cmd();
    throw Error(ErrorCode::ParseError, "unknown command " + o_.command);
  }

  void require_inputs(bool presentation, bool complex) const {
    if (presentation && o_.presentation.empty()) throw Error(ErrorCode::ParseError, "--presentation is required");
    if (complex && o_.complex.empty()) throw Error(ErrorCode::ParseError, "--complex is required");
  }

  json& input(const Source& s, const char* kind) {
    auto& slot = report_["inputs"][kind];
    slot = {{"source", s.input}, {"sha256", s.sha256}};
    return slot;
  }

  CWPresentation load_presentation() {
    const auto src = load_presentation_source(o_.presentation);
    input(src, "presentation");
    auto p = io::presentation_from_json(src.document);
    if (p.name.empty()) p.name = o_.presentation;
    return p;
  }

  FiniteCrossedComplex load_complex() {
    const auto src = load_complex_source(o_.complex);
    input(src, "complex");
    auto data = io::complex_data_from_json(src.document);
    if (data.name.empty()) data.name = o_.complex;
    return FiniteCrossedComplex::create(std::move(data));
  }

  /// Both inputs, each validated (validation failures raise ValidationError).
  std::pair<CWPresentation, FiniteCrossedComplex> load_pair() {
    require_inputs(true, true);
    auto p = load_presentation();
    require_valid(p);
    return {std::move(p), load_complex()};
  }

  int validate_cmd() {
    if (o_.presentation.empty() && o_.complex.empty())
      throw Error(ErrorCode::ParseError, "validate needs --presentation and/or --complex");
    bool ok = true;
    auto& result = report_["result"];
    std::vector<std::string> notes;
    if (!o_.presentation.empty()) {
      const auto src = load_presentation_source(o_.presentation);
      input(src, "presentation");
      const auto report = validate_presentation(io::presentation_from_json(src.document));
      result["presentation"] = io::to_json(report);
      ok = ok && report.ok();
      notes.push_back("presentation " + report.summary());
    }
    if (!o_.complex.empty()) {
      const auto src = load_complex_source(o_.complex);
      input(src, "complex");
      try {
        const auto data = io::complex_data_from_json(src.document);
        const auto report = validate(data);
        result["complex"] = io::to_json(report);
        ok = ok && report.ok();
        notes.push_back("complex " + report.summary());
      } catch (const Error& e) {
        if (exit_code_for(e.code()) != kInvalid) throw;
        result["complex"] = {{"ok", false}, {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
        ok = false;
        notes.push_back(std::string("complex ") + e.what());
      }
    }
    result["ok"] = ok;
    for (const auto& n : notes) summary_ += (summary_.empty() ? "" : "; ") + n;
    return ok ? kOk : kInvalid;
  }

  int count_cmd() {
    const auto [p, c] = load_pair();
    auto& result = report_["result"];
    const BigInt count = count_homs(p, c, {o_.threads});
    result["count"] = count.str();
    summary_ = "#Hom = " + count.str();
    int code = kOk;
    if (o_.enumerate) {
      const auto homs = enumerate_homs(p, c, {o_.threads, caps_.enumeration});
      json list = json::array();
      for (const auto& f : homs) list.push_back(io::to_json(f));
      result["morphisms"] = std::move(list);
    }
    if (o_.oracle) {
      const BigInt oracle = count_homs_bruteforce(p, c, caps_.bruteforce);
      result["oracle"] = oracle.str();
      result["oracle_agrees"] = oracle == count;
      summary_ += ", brute force " + oracle.str();
      if (oracle != count) code = kInternal;
    }
    return code;
  }

  int invariant_cmd() {
    const auto [p, c] = load_pair();
    auto& result = report_["result"];
    const BigInt count = count_homs(p, c, {o_.threads});
    const ExactRational factor = normalization_factor(p, c);
    const ExactRational ia = ExactRational(count) * factor;
    result["count"] = count.str();
    result["normalization"] = to_string(factor);
    result["invariant"] = to_string(ia);
    summary_ = "I = " + to_string(ia);
    if (o_.euler) {
      const auto euler = euler_char_mapping_space(p, c, {o_.threads, caps_.enumeration, true});
      result["euler"] = to_string(euler);
      result["euler_equals_invariant"] = euler == ia;
      summary_ += ", Euler characteristic " + to_string(euler);
      if (euler != ia) return kInternal;
    }
    return kOk;
  }

  int classes_cmd() {
    const auto [p, c] = load_pair();
    const auto classes = homotopy_classes(p, c, {o_.threads, caps_.enumeration, caps_.edges});
    auto& result = report_["result"];
    result["count"] = classes.count();
    result["morphisms"] = classes.morphisms.size();
    result["sizes"] = classes.sizes;
    json reps = json::array();
    for (std::size_t i : classes.representatives) reps.push_back(io::to_json(classes.morphisms[i]));
    result["representatives"] = std::move(reps);
    summary_ = std::to_string(classes.count()) + " homotopy classes among " +
               std::to_string(classes.morphisms.size()) + " morphisms";
    return kOk;
  }

  int library_cmd() {
    auto& result = report_["result"];
    json spaces = json::array();
    for (const auto& name : library_space_names()) {
      const auto p = builtin_space(name);
      std::string cells;
      for (std::size_t n = 0; n < p.cells.size(); ++n) cells += (n ? "," : "") + std::to_string(p.cells[n]);
      spaces.push_back({{"name", name}, {"cells", p.cells}, {"summary", name + " (" + cells + ")"}});
    }
    json complexes = json::array();
    for (const auto& name : library_complex_names()) {
      const auto c = builtin_complex(name);
      std::vector<std::size_t> orders;
      for (std::size_t k = 1; k <= c.length(); ++k) orders.push_back(c.group(k).order());
      complexes.push_back({{"name", name}, {"L", c.length()}, {"orders", orders}});
    }
    summary_ = std::to_string(spaces.size()) + " spaces, " + std::to_string(complexes.size()) + " complexes";
    result["spaces"] = std::move(spaces);
    result["complexes"] = std::move(complexes);
    return kOk;
  }

  int selfcheck_cmd() {
    const auto results = run_selfcheck(o_.threads);
    json list = json::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
      list.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
      if (r.passed) ++passed;
      std::cerr << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.id << " " << r.title << ": " << r.detail << "\n";
    }
    report_["result"]["criteria"] = std::move(list);
    report_["result"]["passed"] = passed;
    report_["result"]["total"] = results.size();
    summary_ = std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed";
    return passed == results.size() ? kOk : kInternal;
  }

  Options o_;
  Caps caps_;
  json report_;
  std::string summary_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morphism counts, homotopy invariants and homotopy classes for finite crossed complexes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(xcomplex::version));
  Options o;
  std::uint64_t cap = 0;

  const auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--presentation,-p", o.presentation, "presentation JSON file or builtin:NAME");
    sub->add_option("--complex,-c", o.complex, "crossed complex JSON file or builtin:NAME");
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", cap, "cap on enumeration, brute force and homotopy edges")->check(CLI::PositiveNumber);
    sub->add_option("--threads,-j", o.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  };

  auto* validate = app.add_subcommand("validate", "check presentation and/or complex documents");
  add_inputs(validate);
  add_common(validate);
  auto* count = app.add_subcommand("count", "count morphisms");
  add_inputs(count);
  add_common(count);
  count->add_flag("--enumerate", o.enumerate, "list every morphism in canonical order");
  count->add_flag("--oracle", o.oracle, "cross-check against brute force");
  auto* invariant = app.add_subcommand("invariant", "compute the homotopy invariant");
  add_inputs(invariant);
  add_common(invariant);
  invariant->add_flag("--euler", o.euler, "also compute the mapping-space Euler characteristic");
  auto* classes = app.add_subcommand("classes", "homotopy classes of morphisms");
  add_inputs(classes);
  add_common(classes);
  auto* library = app.add_subcommand("library", "list builtin spaces and complexes");
  add_common(library);
  auto* selfcheck = app.add_subcommand("selfcheck", "run the acceptance suite");
  add_common(selfcheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInput;
  }
  o.command = app.get_subcommands().front()->get_name();
  for (auto* sub : app.get_subcommands())
    if (sub->count("--cap") > 0) o.cap = cap;

  try {
    return Run(std::move(o)).execute();
  } catch (const xcomplex::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  }
}
