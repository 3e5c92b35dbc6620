#include "shamsuddin/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "shamsuddin/image.hpp"
#include "shamsuddin/isotropy.hpp"
#include "shamsuddin/simplicity.hpp"
#include "shamsuddin/textio.hpp"

namespace shamsuddin::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string deriv;
  bool json = false;
  bool exit_status = false;
  bool witness = false;
  unsigned max_x_deg = kDefaultPreimageXDegree;
  unsigned max_y_deg = kDefaultPreimageYDegree;
  std::uint64_t seed = 0;
  std::size_t block = 0;  // 1-based; 0 = the only block
  std::string target;
  std::string poly;
  std::string endo;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Runner {
 public:
  Runner(const Options& opts, std::istream& in, std::ostream& out) : opts_(opts), in_(in), out_(out) {}

  int simple(const Derivation& d) {
    const SimplicityVerdict v = is_simple(d);
    json blocks = json::array();
    std::ostringstream text;
    text << "simple: " << bool_str(v.simple) << "\n";
    for (std::size_t i = 0; i < d.blocks().size(); ++i) {
      const Block& blk = d.blocks()[i];
      const BlockSimplicity& bv = v.per_block[i];
      json jb{{"block", i + 1}, {"a", format_unipoly(blk.a)}, {"vars", var_names(blk.vars)}, {"simple", bv.simple}};
      text << "block " << i + 1 << " [" << join(var_names(blk.vars)) << "] a=" << format_unipoly(blk.a) << ": ";
      if (bv.simple) {
        text << "simple\n";
      } else {
        const ParamSolution& w = *bv.witness;
        if (!satisfies_parametric(blk.a, blk.bs, w)) throw VerificationError("ODE witness failed substitution");
        jb["k"] = rationals(w.k);
        jb["z"] = format_unipoly(w.z);
        text << "not simple, k=(" << join(rationals(w.k)) << "), z=" << format_unipoly(w.z) << "\n";
      }
      blocks.push_back(std::move(jb));
    }
    emit({{"command", "simple"}, {"simple", v.simple}, {"blocks", blocks}}, text.str());
    return verdict(v.simple);
  }

  int isotropy(const Derivation& d) {
    const bool trivial = isotropy_is_trivial(d);
    json j{{"command", "isotropy"}, {"trivial", trivial}};
    std::string text = "trivial: " + bool_str(trivial) + "\n";
    if (opts_.witness && !trivial) {
      const auto rho = isotropy_witness(d);
      if (!rho || rho->is_identity() || !commutes(*rho, d)) throw VerificationError("isotropy witness failed verification");
      j["witness"] = format_endo(*rho);
      text += format_endo(*rho) + "\n";
    }
    emit(j, text);
    return verdict(trivial);
  }

  int describe(const Derivation& d) {
    std::size_t block = 0;
    if (opts_.block == 0) {
      if (d.blocks().size() != 1) {
        throw std::invalid_argument("describe needs a single-block derivation or --block <i>");
      }
    } else {
      if (opts_.block > d.blocks().size()) throw std::invalid_argument("--block out of range");
      block = opts_.block - 1;
    }
    const Block& blk = d.blocks()[block];
    const IsotropyDescription desc = isotropy_describe_block(blk.a, blk.bs);
    const std::size_t r = desc.r();
    std::ostringstream text;
    json j{{"command", "describe"}, {"block", block + 1}, {"vars", var_names(blk.vars)}, {"a", format_unipoly(blk.a)},
           {"shift_free", desc.shift_free}};
    text << "block " << block + 1 << " [" << join(var_names(blk.vars)) << "] a=" << format_unipoly(blk.a);
    if (d.blocks().size() > 1) text << " (variables renumbered y1..y" << r << ")";
    text << "\n";
    switch (desc.kind) {
      case IsotropyCase::kAZero: {
        j["case"] = "A_ZERO";
        json hs = json::array();
        text << "case: a = 0\nshift: free (x -> x + p(Y))\n";
        for (std::size_t t = 0; t < r; ++t) {
          hs.push_back(format_unipoly(desc.antiderivatives[t]));
          text << "h" << t + 1 << " = " << format_unipoly(desc.antiderivatives[t]) << "\n";
        }
        j["antiderivatives"] = hs;
        text << "members: x -> x + p(Y), y_t -> h_t(x + p(Y)) + q_t(Y), Y_j = y_j - h_j(x), "
                "p any polynomial, q any automorphism of K[Y]\n";
        break;
      }
      case IsotropyCase::kAConstant:
        j["case"] = "A_CONST";
        text << "case: a constant\nshift: free\n"
                "members: x -> x + c, y_t -> sum_j c_tj y_j + g_t(x), det(c_tj) != 0, g_t the unique polynomial "
                "solution of g' = a g + b_t(x + c) - sum_j c_tj b_j\n";
        break;
      case IsotropyCase::kADegreePositive: {
        j["case"] = "A_DEG_GE_1";
        text << "case: deg a >= 1\nshift: c = 0 forced\n";
        json rows = json::array();
        for (std::size_t t = 0; t < r; ++t) {
          const AffineSpace& row = desc.rows[t];
          json dirs = json::array();
          for (const auto& v : row.basis) dirs.push_back(format_poly(row_poly(v, r)));
          rows.push_back({{"particular", format_poly(row_poly(row.particular, r))}, {"directions", dirs}});
          text << "row " << t + 1 << ": y" << t + 1 << " -> " << format_poly(row_poly(row.particular, r));
          for (const auto& v : row.basis) text << " + s*(" << format_poly(row_poly(v, r)) << ")";
          text << "\n";
        }
        j["rows"] = rows;
        text << "members: rows as above with det(c_tj) != 0\n";
        break;
      }
    }
    const auto sample = sample_isotropy_element(desc, opts_.seed);
    if (sample) {
      if (!commutes(sample->endo, d.block_derivation(block))) throw VerificationError("sampled member failed verification");
      j["sample"] = format_endo(sample->endo);
      text << "sample (seed " << opts_.seed << "): " << format_endo(sample->endo) << "\n";
    } else {
      j["sample"] = nullptr;
      text << "sample (seed " << opts_.seed << "): none\n";
    }
    emit(j, text.str());
    return kExitOk;
  }

  int locally_finite(const TriangularDerivation& d) {
    const bool lf = is_locally_finite(d);
    emit({{"command", "locally-finite"}, {"locally_finite", lf}}, "locally-finite: " + bool_str(lf) + "\n");
    return verdict(lf);
  }

  int mz(const Derivation& d) {
    const MzVerdict v = mz_classify(d);
    json j{{"command", "mz"}, {"verdict", to_string(v.tag)}, {"reason", v.reason}};
    std::string text = std::string("mz: ") + to_string(v.tag) + " (" + v.reason + ")\n";
    if (v.gamma) {
      std::vector<std::string> g;
      for (const auto& c : *v.gamma) g.push_back(c.get_str());
      j["gamma"] = g;
      text += "gamma: (" + join(g) + ")\n";
    } else {
      j["gamma"] = nullptr;
    }
    emit(j, text);
    return kExitOk;
  }

  int preimage(const Derivation& d) {
    const MultiPoly g = parse_poly(opts_.target, d.arity());
    const auto f = preimage_bounded(d, g, opts_.max_x_deg, opts_.max_y_deg);
    json j{{"command", "preimage"}, {"target", format_poly(g)}, {"max_x_deg", opts_.max_x_deg},
           {"max_y_deg", opts_.max_y_deg}};
    std::string text;
    if (f) {
      if (!(apply(d, *f) == g)) throw VerificationError("preimage failed verification");
      j["preimage"] = format_poly(*f);
      text = "preimage: " + format_poly(*f) + "\n";
    } else {
      j["preimage"] = nullptr;
      text = "preimage: none with x-degree <= " + std::to_string(opts_.max_x_deg) +
             " and y-degree <= " + std::to_string(opts_.max_y_deg) + "\n";
    }
    emit(j, text);
    return verdict(f.has_value());
  }

  template <typename D>
  int apply_poly(const D& d) {
    const MultiPoly f = parse_poly(opts_.poly, d.arity());
    const MultiPoly df = apply(d, f);
    emit({{"command", "apply"}, {"poly", format_poly(f)}, {"result", format_poly(df)}},
         "D(f) = " + format_poly(df) + "\n");
    return kExitOk;
  }

  template <typename D>
  int commute(const D& d) {
    const PolyEndo rho = parse_endo(read_source(opts_.endo), d.arity());
    const bool c = commutes(rho, d);
    emit({{"command", "commute"}, {"endo", format_endo(rho)}, {"commutes", c}}, "commutes: " + bool_str(c) + "\n");
    return verdict(c);
  }

  std::string read_source(const std::string& path) {
    if (path == "-") {
      std::ostringstream ss;
      ss << in_.rdbuf();
      return ss.str();
    }
    std::ifstream file(path);
    if (!file) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
  }

 private:
  static std::string bool_str(bool b) { return b ? "true" : "false"; }

  static std::vector<std::string> var_names(const std::vector<std::size_t>& vars) {
    std::vector<std::string> out;
    for (auto v : vars) out.push_back("y" + std::to_string(v));
    return out;
  }

  static std::vector<std::string> rationals(const QVector& v) {
    std::vector<std::string> out;
    for (const auto& c : v) out.push_back(c.to_string());
    return out;
  }

  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
    return out;
  }

  // (c_1..c_r, g_0, g_1, ...) -> sum_j c_j y_j + g(x)
  static MultiPoly row_poly(const QVector& v, std::size_t r) {
    MultiPoly p = MultiPoly::from_uni(r, UniPoly::from_coefficients(QVector(v.begin() + static_cast<std::ptrdiff_t>(r), v.end())));
    for (std::size_t j = 0; j < r; ++j) p += MultiPoly::variable(r, j + 1) * v[j];
    return p;
  }

  int verdict(bool value) const {
    if (!opts_.exit_status) return kExitOk;
    return value ? kExitOk : kExitFalse;
  }

  void emit(const json& j, const std::string& text) {
    if (opts_.json) {
      out_ << j.dump() << "\n";
    } else {
      out_ << text;
    }
  }

  const Options& opts_;
  std::istream& in_;
  std::ostream& out_;
};

void add_common(CLI::App* sub, Options& opts) {
  sub->add_option("input", opts.input, "Derivation file ('-' for stdin)");
  sub->add_option("--deriv", opts.deriv, "Inline derivation, e.g. \"y1: a=x, b=1\"");
  sub->add_flag("--json", opts.json, "Single-line JSON output");
  sub->add_flag("--exit-status", opts.exit_status, "Map boolean verdicts to exit codes (true 0, false 1)");
}

int report(std::ostream& err, std::ostream& out, bool as_json, int code, const std::string& kind,
           const std::string& message, std::optional<std::size_t> position = std::nullopt) {
  err << "error: " << message << "\n";
  if (as_json) {
    json j{{"error", kind}, {"message", message}};
    j["position"] = position ? json(*position) : json(nullptr);
    out << j.dump() << "\n";
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Decision procedures for Shamsuddin derivations of Q[x, y1, ..., yn]", "shamsuddin"};
  app.require_subcommand(1);

  auto* simple = app.add_subcommand("simple", "Decide simplicity; print per-block (k, z) witnesses");
  auto* iso = app.add_subcommand("isotropy", "Decide whether the isotropy group is trivial");
  iso->add_flag("--witness", opts.witness, "Print a verified non-identity element");
  auto* describe = app.add_subcommand("describe", "Describe the isotropy group of one block");
  describe->add_option("--block", opts.block, "Block number (1-based)");
  describe->add_option("--seed", opts.seed, "Seed for the sampled member");
  auto* lf = app.add_subcommand("locally-finite", "Decide local finiteness (triangular input allowed)");
  auto* mz = app.add_subcommand("mz", "Classify Im D as a Mathieu-Zhao subspace");
  auto* pre = app.add_subcommand("preimage", "Search for f with D(f) = target in a degree box");
  pre->add_option("--target", opts.target, "Target polynomial")->required();
  pre->add_option("--max-x-deg", opts.max_x_deg, "Largest x-degree of f");
  pre->add_option("--max-y-deg", opts.max_y_deg, "Largest total y-degree of f");
  auto* app_cmd = app.add_subcommand("apply", "Print D(f)");
  app_cmd->add_option("--poly", opts.poly, "Polynomial f")->required();
  auto* com = app.add_subcommand("commute", "Check that an endomorphism commutes with D");
  com->add_option("--endo", opts.endo, "Endomorphism file ('-' for stdin)")->required();
  for (auto* sub : {simple, iso, describe, lf, mz, pre, app_cmd, com}) add_common(sub, opts);

  std::vector<std::string> argv_store{"shamsuddin"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (opts.input.empty() == opts.deriv.empty()) throw UsageError("give exactly one of <input> or --deriv");
    Runner runner(opts, in, out);
    const std::string text = opts.deriv.empty() ? runner.read_source(opts.input) : opts.deriv;
    const ParsedDerivation parsed = parse_derivation(text);
    const Derivation* d = std::get_if<Derivation>(&parsed);
    auto shamsuddin_only = [&]() -> const Derivation& {
      if (!d) throw std::invalid_argument("this command needs a Shamsuddin derivation (every b in K[x])");
      return *d;
    };
    auto triangular = [&]() { return d ? d->to_triangular() : std::get<TriangularDerivation>(parsed); };

    if (simple->parsed()) return runner.simple(shamsuddin_only());
    if (iso->parsed()) return runner.isotropy(shamsuddin_only());
    if (describe->parsed()) return runner.describe(shamsuddin_only());
    if (lf->parsed()) return runner.locally_finite(triangular());
    if (mz->parsed()) return runner.mz(shamsuddin_only());
    if (pre->parsed()) return runner.preimage(shamsuddin_only());
    if (app_cmd->parsed()) return d ? runner.apply_poly(*d) : runner.apply_poly(triangular());
    if (com->parsed()) return d ? runner.commute(*d) : runner.commute(triangular());
    return kExitParse;
  } catch (const TextError& e) {
    const bool syntax = e.kind() == TextErrorKind::kSyntax;
    return report(err, out, opts.json, syntax ? kExitParse : kExitSemantic, syntax ? "parse" : "semantic", e.what(),
                  e.position());
  } catch (const UsageError& e) {
    return report(err, out, opts.json, kExitParse, "usage", e.what());
  } catch (const VerificationError& e) {
    return report(err, out, opts.json, kExitInternal, "verification", e.what());
  } catch (const std::invalid_argument& e) {
    return report(err, out, opts.json, kExitSemantic, "semantic", e.what());
  }
}

}  // namespace shamsuddin::cli
