#include "matseq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "matseq/canonical.hpp"
#include "matseq/invariants.hpp"
#include "matseq/json_io.hpp"
#include "matseq/oracle.hpp"
#include "matseq/similarity.hpp"
#include "matseq/triangular.hpp"

namespace matseq::cli {

namespace {

using json_io::Json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedRing:
    case ErrorCode::Char2Unsupported:
    case ErrorCode::TowerTooDeep: return kUnsupported;
    case ErrorCode::InternalInconsistency: return kInconsistent;
    default: return kInputError;
  }
}

struct Options {
  bool verify = false;
  bool ndjson = false;
  std::string method = "flo";
  std::string form;
  bool phi = false, psi = false;
  std::size_t all_words = 0;
  std::vector<std::string> files;
};

MatSeq lift_to_field(const MatSeq& s) {
  return s.ring().kind() == RingKind::Integers ? s.promote(Ring::rationals()) : s;
}

bool is_finite_field(const Ring& r) { return r.kind() == RingKind::PrimeField; }

std::uint64_t oracle_limit() {
  std::uint64_t limit = kOracleMaxPrime;
  if (const char* env = std::getenv("MATSEQ_MAX_P")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') fail(ErrorCode::InvalidInput, std::string("MATSEQ_MAX_P is not a number: ") + env);
    limit = std::min<std::uint64_t>(v, kOracleMaxPrime);
  }
  return limit;
}

[[noreturn]] void mismatch(const std::string& what) {
  fail(ErrorCode::InternalInconsistency, "--verify: " + what + " disagrees with the finite-field oracle");
}

Json triangularization_json(const MatSeq& s, bool decided, const Options& opt) {
  Json j;
  j["triangularizable"] = decided;
  if (decided) {
    auto w = triangularize(s);
    if (!w) fail(ErrorCode::InternalInconsistency, "decision says triangularizable but no witness was found");
    j["g"] = json_io::mat_to_json(w->g.matrix());
  }
  j["reduced_length"] = maximal_reduction(s).reduced_length();
  if (opt.verify && is_finite_field(s.ring())) {
    if (brute_triangularizable(s, oracle_limit()).has_value() != decided) mismatch("triangularizability");
    j["verified"] = true;
  }
  return j;
}

Json do_tri(const std::vector<Json>& docs, const Options& opt) {
  const MatSeq s = json_io::seq_from_json(docs[0]);
  bool decided;
  if (opt.method == "flo") decided = is_triangularizable(s);
  else if (opt.method == "fast") decided = is_triangularizable_fast(s);
  else decided = triangularize(s).has_value();
  return triangularization_json(s, decided, opt);
}

Json do_similar(const std::vector<Json>& docs, const Options& opt) {
  const MatSeq s1 = json_io::seq_from_json(docs[0]), s2 = json_io::seq_from_json(docs[1]);
  auto w = are_similar(s1, s2);
  Json j;
  j["similar"] = w.has_value();
  if (w) {
    j["g"] = json_io::mat_to_json(w->g);
    if (w->fraction_field) j["fraction_field"] = true;
  }
  if (opt.verify && is_finite_field(s1.ring())) {
    if (brute_similar(s1, s2, oracle_limit()).has_value() != w.has_value()) mismatch("similarity");
    j["verified"] = true;
  }
  return j;
}

Json do_classify(const std::vector<Json>& docs, const Options& opt) {
  const MatSeq s = lift_to_field(json_io::seq_from_json(docs[0]));
  Json j;
  j["stable"] = is_stable(s);
  j["semisimple"] = is_semisimple(s);
  j["triangularizable"] = is_triangularizable(s);
  j["commutative"] = is_commutative(s);
  j["reduced_length"] = maximal_reduction(s).reduced_length();
  if (opt.verify && is_finite_field(s.ring())) {
    if (brute_triangularizable(s, oracle_limit()).has_value() != j["triangularizable"].get<bool>())
      mismatch("triangularizability");
    j["verified"] = true;
  }
  return j;
}

Json do_analyze(const std::vector<Json>& docs, const Options& opt) {
  const MatSeq input = json_io::seq_from_json(docs[0]);
  const bool tri = is_triangularizable(input);
  Json j;
  j["ring"] = json_io::ring_to_json(input.ring());
  j["length"] = input.size();
  j["reduced_length"] = maximal_reduction(input).reduced_length();
  j["commutative"] = is_commutative(input);
  j["triangularizable"] = tri;
  const MatSeq s = lift_to_field(input);
  if (s.ring().is_field()) {
    j["stable"] = is_stable(s);
    j["semisimple"] = is_semisimple(s);
    j["tag"] = std::string(to_string(classify(s)));
  } else {
    // no supported fraction field (Q[t])
    j["stable"] = nullptr;
    j["semisimple"] = nullptr;
    j["tag"] = nullptr;
  }
  if (opt.verify && is_finite_field(input.ring())) {
    if (brute_triangularizable(input, oracle_limit()).has_value() != tri) mismatch("triangularizability");
    j["verified"] = true;
  }
  return j;
}

Json do_canon(const std::vector<Json>& docs, const Options&) {
  const MatSeq s = lift_to_field(json_io::seq_from_json(docs[0]));
  const CanonicalResult c = canonicalize(s);
  Json j;
  j["tag"] = std::string(to_string(c.tag));
  Json perm = Json::array();
  for (auto i : c.permutation) perm.push_back(i + 1);
  j["permutation"] = perm;
  j["g"] = json_io::mat_to_json(c.g.matrix());
  j["form"] = json_io::matrices_to_json(c.form);
  if (c.extension) j["extension"] = json_io::ring_to_json(*c.extension);
  return j;
}

std::string index_name(std::initializer_list<std::size_t> idx) {
  std::string out = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + ")";
}

Json do_invariants(const std::vector<Json>& docs, const Options& opt) {
  const MatSeq s = json_io::seq_from_json(docs[0]);
  if (opt.phi) return json_io::phi_to_json(phi_prime(s));
  if (opt.psi) return json_io::psi_to_json(psi_prime(s));
  const std::size_t n = s.size();
  if (opt.all_words > 0) {
    double count = 0, power = 1;
    for (std::size_t len = 1; len <= opt.all_words; ++len) count += (power *= static_cast<double>(n));
    if (count > 1e6) fail(ErrorCode::TooLarge, "--all-words would list more than 10^6 words");
    Json words = Json::array();
    std::vector<std::size_t> word;
    std::function<void()> rec = [&] {
      if (!word.empty()) {
        Json w = Json::array();
        for (auto i : word) w.push_back(i + 1);
        Json entry;
        entry["word"] = w;
        entry["trace"] = json_io::scalar_to_json(trace_word(s, word));
        words.push_back(entry);
      }
      if (word.size() == opt.all_words) return;
      for (std::size_t i = 0; i < n; ++i) {
        word.push_back(i);
        rec();
        word.pop_back();
      }
    };
    rec();
    Json j;
    j["max_length"] = opt.all_words;
    j["words"] = words;
    return j;
  }
  Json j, traces, taus, sigmas, deltas;
  traces = taus = sigmas = deltas = Json::object();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t w1[] = {i}, w2[] = {i, i};
    traces["t" + index_name({i})] = json_io::scalar_to_json(trace_word(s, w1));
    traces["t" + index_name({i, i})] = json_io::scalar_to_json(trace_word(s, w2));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      taus["tau" + index_name({i, k})] = json_io::scalar_to_json(tau(s[i], s[k]));
      sigmas["sigma" + index_name({i, k})] = json_io::scalar_to_json(sigma(s[i], s[k]));
      for (std::size_t l = k + 1; l < n; ++l)
        deltas["Delta" + index_name({i, k, l})] = json_io::scalar_to_json(big_delta(s[i], s[k], s[l]));
    }
  j["traces"] = traces;
  j["tau"] = taus;
  j["sigma"] = sigmas;
  j["Delta"] = deltas;
  return j;
}

Json do_reconstruct(const std::vector<Json>& docs, const Options& opt) {
  if (opt.form == "ss") return json_io::seq_to_json(reconstruct_semisimple(json_io::phi_from_json(docs[0])));
  auto [first, flipped] = reconstruct_triangular(json_io::psi_from_json(docs[0]));
  Json j;
  j["solutions"] = Json::array({json_io::seq_to_json(first), json_io::seq_to_json(flipped)});
  return j;
}

void require_finite_field(const MatSeq& s) {
  if (!is_finite_field(s.ring())) fail(ErrorCode::UnsupportedRing, "the oracle needs GF(p), got " + s.ring().name());
}

Json do_oracle_tri(const std::vector<Json>& docs, const Options&) {
  const MatSeq s = json_io::seq_from_json(docs[0]);
  require_finite_field(s);
  auto g = brute_triangularizable(s, oracle_limit());
  Json j;
  j["triangularizable"] = g.has_value();
  if (g) j["g"] = json_io::mat_to_json(g->matrix());
  return j;
}

Json do_oracle_similar(const std::vector<Json>& docs, const Options&) {
  const MatSeq s1 = json_io::seq_from_json(docs[0]), s2 = json_io::seq_from_json(docs[1]);
  require_finite_field(s1);
  require_finite_field(s2);
  auto g = brute_similar(s1, s2, oracle_limit());
  Json j;
  j["similar"] = g.has_value();
  if (g) j["g"] = json_io::mat_to_json(g->matrix());
  return j;
}

using Handler = std::function<Json(const std::vector<Json>&, const Options&)>;

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) fail(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

// Runs `handler` and converts failures into an exit code plus a diagnostic.
int guarded(const std::function<void()>& body, std::ostream& err, std::string* message = nullptr,
            std::string* code_name = nullptr) {
  try {
    body();
    return kOk;
  } catch (const Error& e) {
    err << "matseq: " << to_string(e.code()) << ": " << e.what() << "\n";
    if (message) *message = e.what();
    if (code_name) *code_name = std::string(to_string(e.code()));
    return exit_code_for(e.code());
  } catch (const Json::exception& e) {
    err << "matseq: InvalidInput: " << e.what() << "\n";
    if (message) *message = e.what();
    if (code_name) *code_name = "InvalidInput";
    return kInputError;
  }
}

int execute(const Handler& handler, std::size_t arity, const Options& opt, std::istream& in, std::ostream& out,
            std::ostream& err) {
  if (!opt.ndjson) {
    if (opt.files.size() != arity) {
      err << "matseq: expected " << arity << " input file(s)\n";
      return kInputError;
    }
    return guarded(
        [&] {
          std::vector<Json> docs;
          for (const auto& f : opt.files) docs.push_back(parse_json(read_source(f, in)));
          out << handler(docs, opt).dump(2) << "\n";
        },
        err);
  }

  // one document per line; two-input verbs read {"a": ..., "b": ...}
  if (opt.files.size() != 1) {
    err << "matseq: --ndjson takes a single input file\n";
    return kInputError;
  }
  std::string text;
  int worst = guarded([&] { text = read_source(opt.files[0], in); }, err);
  if (worst != kOk) return worst;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string message, code_name;
    const int rc = guarded(
        [&] {
          const Json doc = parse_json(line);
          std::vector<Json> docs;
          if (arity == 1) {
            docs.push_back(doc);
          } else {
            if (!doc.is_object() || !doc.contains("a") || !doc.contains("b"))
              fail(ErrorCode::InvalidInput, "line needs {\"a\": ..., \"b\": ...}");
            docs = {doc.at("a"), doc.at("b")};
          }
          out << handler(docs, opt).dump() << "\n";
        },
        err, &message, &code_name);
    if (rc != kOk) {
      Json e;
      e["line"] = line_no;
      e["error"] = code_name;
      e["message"] = message;
      out << e.dump() << "\n";
      worst = std::max(worst, rc);
    }
  }
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decisions, invariants and canonical forms for sequences of 2x2 matrices.", "matseq"};
  app.require_subcommand(1);
  app.footer(
      "Inputs are JSON files (\"-\" reads standard input). Exit codes: 0 decided, 2 input error, "
      "3 unsupported ring or characteristic, 4 internal inconsistency.\n"
      "MATSEQ_MAX_P lowers the largest prime accepted by the brute-force oracle (never above 13).");

  Options opt;
  Handler handler;
  std::size_t arity = 1;

  auto common = [&](CLI::App* sub, std::size_t files, const Handler& h) {
    sub->add_flag("--verify", opt.verify, "over GF(p), also run the brute-force oracle; exit 4 on disagreement");
    sub->add_flag("--ndjson", opt.ndjson, "one input document per line, one output line each");
    sub->add_option("files", opt.files, files == 1 ? "MatSeq JSON file" : "two MatSeq JSON files")->required();
    sub->callback([&, files, h] {
      handler = h;
      arity = files;
    });
  };

  common(app.add_subcommand("analyze", "summary: reduced length, commutativity, triangularizability, stability, "
                                       "semisimplicity and canonical tag"),
         1, do_analyze);

  auto* tri = app.add_subcommand("tri", "decide simultaneous triangularizability; prints a witness g when it exists");
  tri->add_option("--method", opt.method, "flo (sigma/Delta criterion), fast (through the maximal reduction) or "
                                          "construct (build the witness)")
      ->check(CLI::IsMember({"flo", "fast", "construct"}));
  common(tri, 1, do_tri);

  common(app.add_subcommand("similar", "decide simultaneous similarity of two sequences; prints g with g A g^-1 = B"),
         2, do_similar);
  common(app.add_subcommand("classify", "stable, semisimple, triangularizable, commutative, reduced length"), 1,
         do_classify);
  common(app.add_subcommand("canon", "canonical form: tag, 1-based term permutation, conjugator g, form and the "
                                     "quadratic extension used, if any"),
         1, do_canon);

  auto* inv = app.add_subcommand("invariants", "traces, tau, sigma and Delta; or the reduced invariant vectors");
  auto* phi = inv->add_flag("--phi", opt.phi, "reduced invariant vector of a semisimple sequence");
  auto* psi = inv->add_flag("--psi", opt.psi, "traces plus projective Plucker point of a triangularizable sequence");
  auto* words = inv->add_option("--all-words", opt.all_words, "traces of every word of length <= k");
  phi->excludes(psi)->excludes(words);
  psi->excludes(words);
  common(inv, 1, do_invariants);

  auto* rec = app.add_subcommand("reconstruct", "rebuild a sequence from an invariant vector");
  rec->add_option("--form", opt.form, "ss: from {ring, n, values}; tri: from {ring, n, traces, proj}, printing both "
                                      "solutions")
      ->required()
      ->check(CLI::IsMember({"ss", "tri"}));
  common(rec, 1, do_reconstruct);

  auto* oracle = app.add_subcommand("oracle", "brute force over GL2(GF(p)), p <= 13");
  oracle->require_subcommand(1);
  common(oracle->add_subcommand("tri", "search for a triangularizing g"), 1, do_oracle_tri);
  common(oracle->add_subcommand("similar", "search for a conjugator"), 2, do_oracle_similar);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInputError;
  }
  return execute(handler, arity, opt, in, out, err);
}

}  // namespace matseq::cli
