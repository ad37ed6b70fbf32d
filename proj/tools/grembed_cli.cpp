/*
   Copyright 2026 The grembed Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


// Command-line front end: embeddings, Pluecker coordinates, determinant
// identities, point enumeration and the verification suites.
//
// Exit codes: 0 success, 1 verification failure or degenerate result,
// 2 invalid input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grembed/grembed.hpp"

namespace {

using namespace grembed;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

struct RingFlags {
  std::string kind;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::vector<std::string> vars;

  void attach(CLI::App* app) {
    app->add_option("--ring", kind, "Ring: int, rat, fp, dual, poly")
        ->check(CLI::IsMember({"int", "rat", "fp", "dual", "poly"}));
    app->add_option("--p", p, "Prime for fp and dual rings");
    app->add_option("--q", q, "Shorthand for --ring fp --p Q");
    app->add_option("--vars", vars, "Variable names for the poly ring")->delimiter(',');
  }

  Ring resolve(const std::string& fallback = "fp") const {
    std::string k = kind;
    std::uint64_t prime = p;
    if (q != 0) {
      if (!k.empty() && k != "fp") throw InvalidArgument("--q only selects a prime field");
      k = "fp";
      prime = q;
    }
    if (k.empty()) k = fallback;
    if (k == "int") return Ring::integers();
    if (k == "rat") return Ring::rationals();
    if (k == "poly") return Ring::polynomials(vars);
    if (prime == 0) throw InvalidArgument("--ring " + k + " needs --p");
    return k == "dual" ? Ring::dual_numbers(prime) : Ring::prime_field(prime);
  }
};

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<Json> gather(const std::vector<std::string>& files, const std::vector<std::string>& inline_docs) {
  std::vector<Json> docs;
  for (const auto& f : files) docs.push_back(parse_json(read_source(f)));
  for (const auto& d : inline_docs) docs.push_back(parse_json(d));
  return docs;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(output);
  if (!out) throw InvalidArgument("cannot write " + output);
  out << text << "\n";
}

Json labels_json(const std::string& kind, const std::vector<GrassmannPoint>& sources, std::uint32_t r) {
  Json out = Json::array();
  const auto& p = sources.front();
  if (kind == "tensor" || kind == "tensor-power") {
    std::vector<std::size_t> dims;
    if (kind == "tensor") {
      for (const auto& s : sources) dims.push_back(s.ambient_dim());
    } else {
      dims.assign(r, p.ambient_dim());
    }
    for (const auto& t : tensor_basis(dims)) out.push_back(t.factors);
  } else if (kind == "wedge") {
    for (const auto& w : wedge_basis(p.ambient_dim(), r)) out.push_back(w.entries);
  } else {
    for (const auto& s : sym_basis(p.ambient_dim(), r)) out.push_back(s.exponents);
  }
  return out;
}

std::string labelled_text(const GrassmannPoint& p, const Json& labels) {
  std::ostringstream os;
  os << p.to_string() << "\n";
  for (std::size_t i = 0; i < p.ambient_dim(); ++i) {
    os << "  " << labels[i].dump() << ":";
    for (std::size_t j = 0; j < p.rank(); ++j) os << " " << p.basis()(i, j).to_string();
    if (i + 1 < p.ambient_dim()) os << "\n";
  }
  return os.str();
}

int report_exit(const CheckReport& rep, const std::string& format, const std::string& output) {
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw InvalidArgument("cannot write " + output);
    out << to_json(rep).dump(2) << "\n";
  }
  if (format == "json") {
    std::cout << to_json(rep).dump() << "\n";
  } else {
    std::cout << rep.summary_line() << "\n";
  }
  return rep.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor, exterior and symmetric power embeddings of Grassmannians over exact rings"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  // embed
  auto* embed = app.add_subcommand("embed", "Embed one or more points");
  std::string embed_kind;
  std::uint32_t embed_r = 0;
  std::vector<std::string> embed_inputs, embed_points;
  std::string embed_output;
  embed->add_option("--kind", embed_kind, "tensor, tensor-power, wedge or sym")
      ->required()
      ->check(CLI::IsMember({"tensor", "tensor-power", "wedge", "sym"}));
  embed->add_option("--r", embed_r, "Power (not used by tensor)");
  embed->add_option("--input", embed_inputs, "Point JSON file, '-' for stdin (repeatable)");
  embed->add_option("--point", embed_points, "Inline point JSON (repeatable)");
  embed->add_option("--output", embed_output, "Write result to file");

  // pluecker
  auto* pluecker = app.add_subcommand("pluecker", "Pluecker coordinates of a point");
  std::vector<std::string> pl_inputs, pl_points;
  pluecker->add_option("--input", pl_inputs, "Point JSON file, '-' for stdin");
  pluecker->add_option("--point", pl_points, "Inline point JSON");

  // det-identity
  auto* det = app.add_subcommand("det-identity", "Check a determinant identity");
  std::string det_kind;
  std::uint32_t det_d = 1;
  std::vector<std::string> det_inputs, det_matrices;
  std::vector<std::size_t> det_generic;
  det->add_option("--kind", det_kind, "tensor, sym or wedge")->required()->check(CLI::IsMember({"tensor", "sym", "wedge"}));
  det->add_option("--d", det_d, "Power for sym and wedge");
  det->add_option("--input", det_inputs, "Matrix JSON file (repeatable)");
  det->add_option("--matrix", det_matrices, "Inline matrix JSON (repeatable)");
  det->add_option("--generic", det_generic, "Sizes of generic symbolic matrices over Z[x..] (repeatable)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List every point of Gr(n, m) over a finite ring");
  RingFlags enum_ring;
  enum_ring.attach(enumerate);
  std::size_t enum_n = 0, enum_m = 0;
  bool enum_large = false;
  enumerate->add_option("--n", enum_n, "Ambient dimension")->required();
  enumerate->add_option("--m", enum_m, "Rank")->required();
  enumerate->add_flag("--allow-large", enum_large, "Lift the desk-scale envelope");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  RingFlags ver_ring;
  ver_ring.attach(verify);
  EnumerationSpec ver_spec;
  std::size_t n1 = 0, n2 = 0, m1 = 0, m2 = 0;
  std::string which = "A_r";
  bool expect_failure = false;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  bool symbolic_large = false, no_symbolic = false;
  std::optional<std::size_t> samples;
  std::string ver_output;
  verify->add_option("suite", suite, "tensor-lemma, wedge-lemma, sym-lemma, injectivity, det-identities, corollaries")
      ->required()
      ->check(CLI::IsMember({"tensor-lemma", "wedge-lemma", "sym-lemma", "injectivity", "det-identities", "corollaries"}));
  verify->add_option("--n", ver_spec.n, "Ambient dimension");
  verify->add_option("--m", ver_spec.m, "Rank");
  verify->add_option("--r", ver_spec.r, "Power");
  verify->add_option("--n1", n1, "First factor dimension");
  verify->add_option("--n2", n2, "Second factor dimension");
  verify->add_option("--m1", m1, "First factor rank");
  verify->add_option("--m2", m2, "Second factor rank");
  verify->add_option("--which", which, "Embedding for injectivity: T, T_r, A_r, S_r")
      ->check(CLI::IsMember({"T", "T_r", "A_r", "S_r"}));
  verify->add_flag("--expect-failure", expect_failure, "Require a counterexample witness");
  verify->add_option("--trials", trials, "Random trials (det-identities)");
  verify->add_option("--seed", seed, "Seed for randomized suites");
  verify->add_option("--samples", samples, "Sample this many matrices instead of all (corollaries)");
  verify->add_flag("--allow-large", ver_spec.allow_large, "Lift the desk-scale envelope");
  verify->add_flag("--symbolic-large", symbolic_large, "Include 3x3 generic matrices");
  verify->add_flag("--no-symbolic", no_symbolic, "Skip the generic symbolic cases");
  verify->add_option("--output", ver_output, "Write the JSON report to a file");

  // counterexample
  auto* counter = app.add_subcommand("counterexample", "Sym^r collision over F_p[e] for p | r");
  std::uint64_t ce_p = 0;
  std::uint32_t ce_r = 0;
  std::size_t ce_n = 2;
  std::string ce_output;
  counter->add_option("--p", ce_p, "Prime")->required();
  counter->add_option("--r", ce_r, "Power, a multiple of p")->required();
  counter->add_option("--n", ce_n, "Ambient dimension");
  counter->add_option("--output", ce_output, "Write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (embed->parsed()) {
      std::vector<GrassmannPoint> pts;
      for (const auto& j : gather(embed_inputs, embed_points)) pts.push_back(point_from_json(j));
      if (pts.empty()) throw InvalidArgument("embed needs at least one point");
      if (embed_kind != "tensor" && pts.size() != 1) throw InvalidArgument(embed_kind + " takes exactly one point");
      if (embed_kind != "tensor" && embed_r == 0) throw InvalidArgument("--r is required for " + embed_kind);
      std::optional<GrassmannPoint> image;
      if (embed_kind == "tensor") {
        image = tensor_embed(pts);
      } else if (embed_kind == "tensor-power") {
        image = tensor_power_embed(pts.front(), embed_r);
      } else if (embed_kind == "wedge") {
        image = wedge_embed(pts.front(), embed_r);
      } else {
        image = sym_embed(pts.front(), embed_r);
        const auto& src = pts.front();
        if (src.ring().kind() == RingKind::DualNumbers && src.rank() == 1 && embed_r % src.ring().p() == 0) {
          std::cerr << "note: rank-1 point over " << src.ring().to_string() << " with p | r; in the m = 1 regime "
                    << "Sym^r is not injective, so this image may be shared by other points\n";
        }
      }
      const Json labels = labels_json(embed_kind, pts, embed_r);
      if (format == "json") {
        emit(Json{{"kind", embed_kind}, {"r", embed_r}, {"point", to_json(*image)}, {"labels", labels}}.dump(),
             embed_output);
      } else {
        emit(labelled_text(*image, labels), embed_output);
      }
      return kExitOk;
    }

    if (pluecker->parsed()) {
      auto docs = gather(pl_inputs, pl_points);
      if (docs.size() != 1) throw InvalidArgument("pluecker takes exactly one point");
      GrassmannPoint p = point_from_json(docs.front());
      Json coords = Json::array();
      std::string text;
      for (const auto& [idx, value] : pluecker_coordinates(p)) {
        coords.push_back({{"index", idx.entries}, {"value", to_json(value)}});
        text += Json(idx.entries).dump() + ": " + value.to_string() + "\n";
      }
      if (format == "json") {
        std::cout << Json{{"point", to_json(p)}, {"coordinates", coords}}.dump() << "\n";
      } else {
        std::cout << text;
      }
      return kExitOk;
    }

    if (det->parsed()) {
      std::vector<Matrix> ms;
      for (const auto& j : gather(det_inputs, det_matrices)) ms.push_back(matrix_from_json(j));
      if (!det_generic.empty()) {
        if (!ms.empty()) throw InvalidArgument("use either explicit matrices or --generic");
        ms = generic_matrices(generic_ring(det_generic), det_generic);
      }
      if (ms.empty()) throw InvalidArgument("det-identity needs matrices");
      CheckReport rep;
      if (det_kind == "tensor") {
        rep = check_det_tensor_identity(ms);
      } else {
        if (ms.size() != 1) throw InvalidArgument(det_kind + " identity takes one matrix");
        rep = det_kind == "sym" ? check_det_sym_identity(ms.front(), det_d) : check_det_wedge_identity(ms.front(), det_d);
      }
      return report_exit(rep, format, "");
    }

    if (enumerate->parsed()) {
      EnumerationSpec s;
      s.ring = enum_ring.resolve();
      s.n = enum_n;
      s.m = enum_m;
      s.allow_large = enum_large;
      s.validate();
      std::size_t count = 0;
      for_each_grassmann_point(s.ring, s.n, s.m, [&](const GrassmannPoint& p) {
        ++count;
        if (format == "json") {
          std::cout << to_json(p).dump() << "\n";
        } else {
          std::cout << p.to_string() << "\n";
        }
      });
      if (format != "json") std::cout << "# " << count << " points\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      if (suite != "det-identities") ver_spec.ring = ver_ring.resolve();
      CheckReport rep;
      if (suite == "tensor-lemma" || (suite == "injectivity" && which == "T")) {
        ver_spec.factor_dims = {n1, n2};
        ver_spec.factor_ranks = {m1, m2};
      }
      if (suite == "tensor-lemma") {
        rep = verify_tensor_image_lemma(ver_spec);
      } else if (suite == "wedge-lemma") {
        rep = verify_wedge_image_lemma(ver_spec);
      } else if (suite == "sym-lemma") {
        rep = verify_sym_image_lemma(ver_spec, expect_failure);
      } else if (suite == "injectivity") {
        rep = verify_embedding_injectivity(ver_spec, embedding_from_string(which), expect_failure);
      } else if (suite == "det-identities") {
        DetIdentityOptions opt;
        opt.ring = ver_ring.resolve("int");
        opt.trials = trials;
        opt.seed = seed;
        opt.symbolic = !no_symbolic;
        opt.symbolic_large = symbolic_large;
        rep = verify_det_identities(opt);
      } else {
        // Matrix-level equivalences over a finite ring: tensor pairs of size
        // (n1, n2) when given, otherwise wedge and sym powers of n x n.
        if (n1 && n2) {
          rep = verify_tensor_invertibility(ver_spec.ring, n1, n2);
        } else {
          rep = verify_power_invertibility(ver_spec.ring, Embedding::Wedge, ver_spec.n, ver_spec.r, samples, seed);
          CheckReport sym = verify_power_invertibility(ver_spec.ring, Embedding::Sym, ver_spec.n, ver_spec.r, samples, seed);
          rep.name = "corollaries";
          absorb(rep, sym);
          rep.finalize();
        }
      }
      return report_exit(rep, format, ver_output);
    }

    if (counter->parsed()) {
      return report_exit(run_counterexample(ce_p, ce_r, ce_n), format, ce_output);
    }
  } catch (const DegenerateImage& e) {
    std::cerr << "degenerate image: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
