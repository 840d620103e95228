#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace affconj::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational parse_entry(const nlohmann::json& value, const std::string& field) {
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw DocumentError(field + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return Rational::parse(value.dump());
  throw DocumentError(field + ": expected a rational string such as \"3\" or \"-2/5\", got " + value.dump());
}

ordered_json vector_json(const Vector& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : v) arr.push_back(x.to_string());
  return arr;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i)));
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string classify_text(const AffineOperator& f) {
  const auto inv = classify(f);
  std::string out = inv.summary();
  if (inv.has_fixed_point()) out += "\nfixed point: " + to_string(*fixed_point(f));
  return out;
}

ordered_json classify_json(const AffineOperator& f) { return invariant_json(classify(f), fixed_point(f)); }

struct Options {
  bool json = false;
  bool explain = false;
  std::string batch_dir;
  std::vector<std::string> files;
  std::string file_f;
  std::string file_g;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t dim = 6;
  std::uint64_t bound = 3;
  double bias = 0.5;
  std::string name;
};

int cmd_classify(const Options& o, std::ostream& out) {
  std::vector<std::string> files = o.files;
  if (!o.batch_dir.empty()) {
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(o.batch_dir, ec))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
    if (ec) throw DocumentError(o.batch_dir + ": " + ec.message());
    std::sort(files.begin(), files.end());
  }
  if (files.empty()) throw CLI::ValidationError("classify", "no input files");

  // Parse everything first so that a bad file fails the whole run with 2.
  std::vector<OperatorDocument> docs;
  for (const auto& path : files) docs.push_back(load_document(path));

  std::vector<std::future<std::string>> results;
  for (const auto& doc : docs)
    results.push_back(std::async(std::launch::async, [&doc, json = o.json] {
      return json ? classify_json(doc.op).dump(2) : classify_text(doc.op);
    }));

  const bool labelled = files.size() > 1;
  if (o.json && labelled) {
    ordered_json all = ordered_json::object();
    for (std::size_t i = 0; i < files.size(); ++i) all[files[i]] = ordered_json::parse(results[i].get());
    out << all.dump(2) << '\n';
    return kPositive;
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (labelled) out << files[i] << ": ";
    out << results[i].get() << '\n';
  }
  return kPositive;
}

int cmd_conjugate(const Options& o, std::ostream& out) {
  const auto f = load_document(o.file_f);
  const auto g = load_document(o.file_g);
  const bool yes = biregularly_conjugate(f.op, g.op);
  if (o.json) {
    ordered_json j;
    j["conjugate"] = yes;
    j["reason"] = yes ? std::string() : explain_difference(f.op, g.op);
    out << j.dump(2) << '\n';
  } else {
    out << (yes ? "CONJUGATE" : "NOT CONJUGATE") << '\n';
    if (o.explain) {
      if (yes)
        out << "explain: both are " << classify(f.op).summary() << '\n';
      else
        out << "explain: " << explain_difference(f.op, g.op) << '\n';
    }
  }
  return yes ? kPositive : kNegative;
}

int cmd_canon(const Options& o, std::ostream& out) {
  const auto doc = load_document(o.files.at(0));
  const CanonicalForm cf = canonical_form(doc.op);
  OperatorDocument rep{doc.name, cf.representative};
  if (o.json) {
    ordered_json j;
    j["representative"] = document_json(rep);
    j["invariant"] = invariant_json(cf.invariant, fixed_point(cf.representative));
    j["descriptor"] = cf.descriptor;
    out << j.dump(2) << '\n';
  } else {
    out << print_document(rep) << '\n' << cf.descriptor;
  }
  return kPositive;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const auto doc = load_document(o.files.at(0));
  if (auto p = fixed_point(doc.op)) {
    out << "operator has a fixed point p = " << to_string(*p)
        << "; translating by p conjugates it to its linear part x -> Ax, so it is classified by the"
           " similarity class of A and there is nothing to reduce\n";
    return kNegative;
  }
  const ReductionTrace trace = reduce_no_fixed_point(doc.op);
  if (conjugate_by(doc.op, trace.witness) != trace.reduced)
    throw std::logic_error("reduce: witness does not conjugate the operator to the reduced form");
  if (o.json) {
    ordered_json j;
    j["witness"] = {{"linear", matrix_json(trace.witness.linear())}, {"shift", vector_json(trace.witness.shift())}};
    j["reduced"] = document_json({doc.name, trace.reduced});
    j["star_dim"] = trace.star_dim;
    out << j.dump(2) << '\n';
  } else {
    out << "witness h(x) = S x + shift\n"
        << "S = " << trace.witness.linear().to_string() << '\n'
        << "shift = " << to_string(trace.witness.shift()) << '\n'
        << "nonsingular block size = " << trace.star_dim << '\n'
        << "reduced (verified h^-1 f h):\n"
        << print_document({doc.name, trace.reduced}) << '\n';
  }
  return kPositive;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  GenConfig cfg{o.dim, o.bound, o.seed, o.bias};
  const SuiteReport report = run_invariance_suite(std::max<std::size_t>(o.trials, 1), cfg);
  out << (o.json ? report.to_json() + "\n" : report.to_text());
  return report.passed() ? kPositive : kNegative;
}

int cmd_random(const Options& o, std::ostream& out) {
  GenConfig cfg{o.dim, o.bound, o.seed, o.bias};
  OperatorDocument doc{o.name.empty() ? std::nullopt : std::optional<std::string>(o.name),
                       random_affine_operator(cfg)};
  out << print_document(doc) << '\n';
  return kPositive;
}

}  // namespace

OperatorDocument parse_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("document: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document: expected a JSON object");

  OperatorDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw DocumentError("name: expected a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("matrix")) throw DocumentError("matrix: missing");
  if (!j.contains("translation")) throw DocumentError("translation: missing");
  const auto& jm = j["matrix"];
  const auto& jb = j["translation"];
  if (!jm.is_array()) throw DocumentError("matrix: expected an array of rows");
  if (!jb.is_array()) throw DocumentError("translation: expected an array");

  const std::size_t n = jm.size();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_field = "matrix[" + std::to_string(i) + "]";
    if (!jm[i].is_array() || jm[i].size() != n)
      throw DocumentError(row_field + ": expected a row of length " + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k) a(i, k) = parse_entry(jm[i][k], row_field + "[" + std::to_string(k) + "]");
  }
  if (jb.size() != n)
    throw DocumentError("translation: expected length " + std::to_string(n) + ", got " + std::to_string(jb.size()));
  Vector b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = parse_entry(jb[i], "translation[" + std::to_string(i) + "]");
  doc.op = AffineOperator(std::move(a), std::move(b));
  return doc;
}

OperatorDocument load_document(const std::string& path) {
  try {
    return parse_document(read_file(path));
  } catch (const DocumentError& e) {
    if (std::string_view(e.what()).starts_with(path)) throw;
    throw DocumentError(path + ": " + e.what());
  }
}

ordered_json document_json(const OperatorDocument& doc) {
  ordered_json j;
  if (doc.name) j["name"] = *doc.name;
  j["matrix"] = matrix_json(doc.op.matrix());
  j["translation"] = vector_json(doc.op.translation());
  return j;
}

// One matrix row per line; still plain JSON.
std::string print_document(const OperatorDocument& doc) {
  const ordered_json j = document_json(doc);
  std::string out = "{\n";
  if (doc.name) out += "  \"name\": " + j["name"].dump() + ",\n";
  out += "  \"matrix\": [";
  const auto& rows = j["matrix"];
  for (std::size_t i = 0; i < rows.size(); ++i) out += (i ? ",\n    " : "\n    ") + rows[i].dump();
  out += rows.empty() ? "],\n" : "\n  ],\n";
  out += "  \"translation\": " + j["translation"].dump() + "\n}";
  return out;
}

ordered_json poly_json(const Poly& p) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.to_string());
  return {{"text", factored_string(p)}, {"coefficients", coeffs}};
}

ordered_json invariant_json(const BiregularClassInvariant& inv, const std::optional<Vector>& fixed) {
  ordered_json j;
  if (inv.has_fixed_point()) {
    j["case"] = "fixed-point";
    ordered_json chain = ordered_json::array();
    for (const auto& f : inv.fixed_point_case().factors.chain) chain.push_back(poly_json(f));
    j["invariant_factors"] = chain;
    j["fixed_point"] = fixed ? vector_json(*fixed) : ordered_json(nullptr);
  } else {
    const auto& c = inv.no_fixed_point_case();
    j["case"] = "no-fixed-point";
    j["q_star"] = poly_json(c.q_star);
    j["partition"] = c.nil_partition.parts;
  }
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify affine operators x -> Ax + b up to biregular conjugacy"};
  app.name("affconj");
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "Print the complete conjugacy invariant");
  classify_cmd->add_option("files", o.files, "Operator documents (.affop.json)");
  classify_cmd->add_option("--batch", o.batch_dir, "Classify every .json file in a directory");
  classify_cmd->add_flag("--json", o.json, "Machine-readable output");

  auto* conjugate_cmd = app.add_subcommand("conjugate", "Decide biregular conjugacy of two operators");
  conjugate_cmd->add_option("f", o.file_f, "First operator")->required();
  conjugate_cmd->add_option("g", o.file_g, "Second operator")->required();
  conjugate_cmd->add_flag("--explain", o.explain, "Say which invariant differs");
  conjugate_cmd->add_flag("--json", o.json, "Machine-readable output");

  auto* canon_cmd = app.add_subcommand("canon", "Print the canonical representative");
  canon_cmd->add_option("file", o.files, "Operator document")->required()->expected(1);
  canon_cmd->add_flag("--json", o.json, "Machine-readable output");

  auto* reduce_cmd = app.add_subcommand("reduce", "Affine reduction of a fixed-point-free operator");
  reduce_cmd->add_option("file", o.files, "Operator document")->required()->expected(1);
  reduce_cmd->add_flag("--json", o.json, "Machine-readable output");

  auto* selftest_cmd = app.add_subcommand("selftest", "Randomized conjugation-invariance suite");
  selftest_cmd->add_option("trials,--trials", o.trials, "Number of trials")->capture_default_str();
  selftest_cmd->add_option("seed,--seed", o.seed, "Base seed")->capture_default_str();
  selftest_cmd->add_option("--dim", o.dim, "Maximum dimension")->capture_default_str();
  selftest_cmd->add_option("--bound", o.bound, "Coefficient bound")->capture_default_str()->check(CLI::PositiveNumber);
  selftest_cmd->add_option("--bias", o.bias, "Nilpotent-block probability")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  selftest_cmd->add_flag("--json", o.json, "Machine-readable output");

  auto* random_cmd = app.add_subcommand("random", "Emit a generated operator document");
  random_cmd->add_option("--seed", o.seed, "Seed")->capture_default_str();
  random_cmd->add_option("--dim", o.dim, "Dimension")->capture_default_str();
  random_cmd->add_option("--bound", o.bound, "Coefficient bound")->capture_default_str()->check(CLI::PositiveNumber);
  random_cmd->add_option("--bias", o.bias, "Nilpotent-block probability")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  random_cmd->add_option("--name", o.name, "Name stored in the document");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (conjugate_cmd->parsed()) return cmd_conjugate(o, out);
    if (canon_cmd->parsed()) return cmd_canon(o, out);
    if (reduce_cmd->parsed()) return cmd_reduce(o, out);
    if (selftest_cmd->parsed()) return cmd_selftest(o, out);
    if (random_cmd->parsed()) return cmd_random(o, out);
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace affconj::cli
