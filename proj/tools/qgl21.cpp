// Command-line front end: builds induced modules of the two-parameter quantum
// superalgebra U_{p,q}[gl(2/1)], verifies the defining relations numerically,
// classifies typicality and exports representations as JSON.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>

#include "qgl21/serialize.hpp"
#include "qgl21/sweep.hpp"

namespace {

using namespace qgl21;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;

unsigned env_default_precision() {
  if (const char* env = std::getenv("QGL_PRECISION")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 53) return static_cast<unsigned>(v);
    throw std::invalid_argument("QGL_PRECISION must be an integer >= 53");
  }
  return kDefaultPrecisionBits;
}

Signature parse_signature(const std::string& csv) {
  std::istringstream in(csv);
  std::string part;
  std::vector<Rational> labels;
  while (std::getline(in, part, ',')) labels.push_back(parse_rational(part));
  if (labels.size() != 3)
    throw std::invalid_argument("highest weight must be three comma-separated rationals");
  Signature s{labels[0], labels[1], labels[2]};
  if (!s.dominant())
    throw std::invalid_argument("signature is not dominant (m1 - m2 must be a nonnegative integer)");
  return s;
}

std::array<std::string, 3> parse_constants(const std::string& csv) {
  std::istringstream in(csv);
  std::string part;
  std::vector<std::string> vals;
  while (std::getline(in, part, ',')) vals.push_back(part);
  if (vals.size() != 3)
    throw std::invalid_argument("--a needs three comma-separated decimal values");
  return {vals[0], vals[1], vals[2]};
}

struct BuildArgs {
  std::string hw, p, q, out;
  std::string a = "1,1,1";
  unsigned precision = 0;
  bool quotient = false;
};

template <class S>
int run_build(const BuildArgs& args) {
  Signature global = parse_signature(args.hw);
  Params<S> params = Params<S>::make(args.p, args.q, args.precision);
  Field<S> f = params.field();
  auto astr = parse_constants(args.a);
  std::array<S, 3> a{f.from_decimal(astr[0]), f.from_decimal(astr[1]), f.from_decimal(astr[2])};

  ReprMatrices<S> rep = build_representation(global, params, a);
  Classification c = classify(global);
  if (args.quotient) {
    if (c.kind == TypicalityKind::Typical)
      throw std::invalid_argument("--quotient requires a nontypical signature");
    rep = quotient_representation(rep, c);
  }
  store_document(to_document(rep), args.out);
  std::cout << "built\t" << rep_kind_name(rep.kind) << "\tdim\t" << rep.dimension() << "\t"
            << typicality_name(c.kind) << " (" << to_string(c.factor1) << ", "
            << to_string(c.factor2) << ")\t-> " << args.out << "\n";
  return kExitPass;
}

template <class S>
int run_verify(const json& doc, double tol) {
  ReprMatrices<S> rep = from_document<S>(doc);
  VerifyOptions opt;
  opt.tolerance = tol > 0 ? tol : default_tolerance(rep.params.precision);
  VerificationReport report = verify_representation(rep, opt);
  report.print(std::cout);
  return report.passed() ? kExitPass : kExitVerifyFail;
}

int run_classify(const std::string& hw) {
  Signature global = parse_signature(hw);
  Classification c = classify(global);
  std::cout << typicality_name(c.kind) << " (" << to_string(c.factor1) << ", "
            << to_string(c.factor2) << ")\n";
  return kExitPass;
}

struct ScanArgs {
  long lmax = 0;
  std::string m33_range;
  long samples = 1;
  std::uint64_t seed = 0;
  unsigned precision = 0;
};

template <class S>
int run_scan(const ScanArgs& args) {
  if (args.lmax < 0) throw std::invalid_argument("--lmax must be >= 0");
  if (args.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  std::istringstream in(args.m33_range);
  std::string lo_s, hi_s;
  if (!std::getline(in, lo_s, ',') || !std::getline(in, hi_s, ','))
    throw std::invalid_argument("--m33-range needs two comma-separated integers");
  long lo = std::stol(lo_s), hi = std::stol(hi_s);
  if (lo > hi) throw std::invalid_argument("--m33-range: empty range");

  struct Cell {
    Signature global;
    long m33;
    long diff;
  };
  std::vector<Cell> cells;
  for (long diff = 0; diff <= 2 * args.lmax; ++diff)
    for (long m33 = lo; m33 <= hi; ++m33)
      cells.push_back({Signature{Rational(diff), Rational(0), Rational(m33)}, m33, diff});

  struct Row {
    std::string text;
    bool pass = false;
  };
  std::vector<Row> rows(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    const Cell& cell = cells[i];
    Classification c = classify(cell.global);
    double worst = 0.0;
    bool pass = true;
    std::size_t dim = 0;
    for (long s = 0; s < args.samples; ++s) {
      PqDraw d = draw_pq(args.seed, i * static_cast<std::uint64_t>(args.samples) + s);
      Params<S> params = Params<S>::make(d.p, d.q, args.precision);
      ReprMatrices<S> rep = build_representation(cell.global, params);
      dim = rep.dimension();
      VerifyOptions opt;
      opt.tolerance = params.tolerance;
      opt.cyclicity = false;
      opt.classical = false;
      VerificationReport rpt = verify_representation(rep, opt);
      for (const auto& e : rpt.entries)
        if (e.gating) worst = std::max(worst, e.residual);
      pass = pass && rpt.passed();
    }
    std::ostringstream line;
    char res[32];
    std::snprintf(res, sizeof res, "%.3e", worst);
    line << "[" << to_string(cell.global.m1) << "," << to_string(cell.global.m2) << ","
         << cell.m33 << "]\t" << typicality_name(c.kind) << "\t" << dim << "\t" << cell.diff
         << "\t" << res << "\t" << (pass ? "PASS" : "FAIL");
    rows[i] = {line.str(), pass};
  });

  bool all = true;
  std::cout << "signature\tclass\tdim\tblock2_size\tmax_residual\tstatus\n";
  for (const auto& r : rows) {
    std::cout << r.text << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "scan\tPASS" : "scan\tFAIL") << "\tcells\t" << rows.size() << "\n";
  return all ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"induced representations of the two-parameter quantum superalgebra gl(2/1)"};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "construct a representation and write it as JSON");
  build->add_option("--hw", build_args.hw, "highest weight m13,m23,m33 (rationals)")->required();
  build->add_option("--p", build_args.p, "deformation parameter p > 0")->required();
  build->add_option("--q", build_args.q, "deformation parameter q > 0")->required();
  build->add_option("--a", build_args.a, "free constants a1,a2,a3 (default 1,1,1)");
  build->add_option("--precision", build_args.precision, "mantissa bits (default 128 or QGL_PRECISION)");
  build->add_flag("--quotient", build_args.quotient, "build the irreducible quotient (nontypical only)");
  build->add_option("--out", build_args.out, "output JSON file")->required();

  std::string verify_file;
  double verify_tol = -1.0;
  auto* verify = app.add_subcommand("verify", "check all defining relations on a stored representation");
  verify->add_option("file", verify_file, "representation JSON")->required();
  verify->add_option("--tol", verify_tol, "relative residual tolerance (default by precision)");

  std::string classify_hw;
  auto* classify_cmd = app.add_subcommand("classify", "typicality class of a highest weight");
  classify_cmd->add_option("--hw", classify_hw, "highest weight m13,m23,m33")->required();

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "sweep signatures and random (p,q), verify everything");
  scan->add_option("--lmax", scan_args.lmax, "max l; sweeps m13-m23 = 0..2*lmax with m23 = 0")->required();
  scan->add_option("--m33-range", scan_args.m33_range, "integer m33 range lo,hi")->required();
  scan->add_option("--samples", scan_args.samples, "random (p,q) draws per signature")->required();
  scan->add_option("--seed", scan_args.seed, "RNG seed (default 0)");
  scan->add_option("--precision", scan_args.precision, "mantissa bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitBadInput;
  }

  try {
    if (*build) {
      if (build_args.precision == 0) build_args.precision = env_default_precision();
      return build_args.precision <= 53 ? run_build<double>(build_args)
                                        : run_build<Real>(build_args);
    }
    if (*verify) {
      json doc = load_document(verify_file);
      unsigned precision = document_precision(doc);
      return precision <= 53 ? run_verify<double>(doc, verify_tol)
                             : run_verify<Real>(doc, verify_tol);
    }
    if (*classify_cmd) return run_classify(classify_hw);
    if (*scan) {
      if (scan_args.precision == 0) scan_args.precision = env_default_precision();
      return scan_args.precision <= 53 ? run_scan<double>(scan_args) : run_scan<Real>(scan_args);
    }
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
