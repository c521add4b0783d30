#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qsun/codes.hpp"
#include "qsun/constructions.hpp"
#include "qsun/json_io.hpp"
#include "qsun/sunflower.hpp"

namespace qsun::cli {

namespace {

struct Params {
  std::uint32_t q = 2;
  std::size_t ell = 2;
  std::size_t n = 0;
  std::size_t k = 1;
  std::size_t s = 3;
  std::string kind;
  std::string input = "-";
  std::string mode = "set-like";
  std::string kernel;
  std::string demo;
  unsigned jobs = 1;
  bool allow_large_field = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FieldOptions field_options(const Params& p) {
  return {p.allow_large_field ? kMaxFieldOrder : kDefaultMaxFieldOrder};
}

Field field_for(const Params& p) { return Field::of_order(p.q, field_options(p)); }

std::uint64_t max_subsets() {
  VerifyOptions defaults;
  const char* env = std::getenv("QSUN_MAX_SUBSETS");
  if (env == nullptr || *env == '\0') return defaults.max_subsets;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::char_traits<char>::length(env)) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("QSUN_MAX_SUBSETS is not a non-negative integer: ") + env);
  }
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), {}};
}

FamilyDocument load_family(const Params& p, std::istream& in) {
  Json j;
  try {
    j = Json::parse(read_input(p.input, in));
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return family_from_json(j, field_options(p));
}

SunflowerKind parse_mode(const std::string& mode) {
  if (mode == "set-like") return SunflowerKind::set_like;
  if (mode == "gp") return SunflowerKind::general_position;
  throw InputError("unknown mode " + mode);
}

int cmd_construct(const Params& p, std::ostream& out, std::ostream& err) {
  const Field field = field_for(p);
  Json params{{"q", p.q}};
  std::optional<FamilyDocument> doc;
  if (p.kind == "ik") {
    doc = FamilyDocument{build_ik_family(field).family, std::nullopt};
  } else if (p.kind == "thm") {
    const std::size_t n = p.n == 0 ? 2 * p.ell + 1 : p.n;
    doc = FamilyDocument{build_thm_family(field, p.ell, n).family, std::nullopt};
    params["ell"] = p.ell;
    params["n"] = n;
  } else if (p.kind == "lifted-mrd") {
    doc = FamilyDocument{lift(field_matrix_rep(field, p.ell)), std::nullopt};
    params["ell"] = p.ell;
  } else if (p.kind == "incl-excl") {
    const InclExclReport r = incl_excl_demo(field);
    doc = FamilyDocument{ConstantDimensionFamily(field, 3, 2, {r.u, r.v, r.w}), std::nullopt};
  } else {
    throw InputError("unknown construction " + p.kind);
  }
  doc->provenance = Json{{"construction", p.kind}, {"parameters", params}};
  err << p.kind << ": " << doc->family.size() << " subspaces of dimension " << doc->family.member_dim()
      << " in " << field.describe() << "^" << doc->family.ambient_dim() << "\n";
  out << family_to_json(*doc).dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const Params& p, bool witness_only, std::ostream& out, std::ostream& err, std::istream& in) {
  const SunflowerKind mode = parse_mode(p.mode);
  const FamilyDocument doc = load_family(p, in);
  VerifyOptions options;
  options.jobs = p.jobs;
  options.max_subsets = max_subsets();
  if (!p.kernel.empty()) {
    try {
      options.kernel = subspace_from_json(doc.family.field(), doc.family.ambient_dim(), Json::parse(p.kernel));
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("malformed --kernel: ") + e.what());
    }
  }
  const FreenessCertificate cert = verify_free(doc.family, p.s, mode, options);
  if (cert.is_free()) {
    err << "family of " << doc.family.size() << " is " << to_string(mode) << " " << p.s << "-sunflower-free ("
        << cert.subsets_examined << " subsets examined)\n";
  } else {
    err << to_string(mode) << " " << p.s << "-sunflower at indices";
    for (auto i : cert.witness->indices) err << " " << i;
    err << ", kernel dim " << cert.witness->dims.kernel_dim << ", sum dim " << cert.witness->dims.sum_dim << "\n";
  }
  if (witness_only) {
    out << (cert.witness ? witness_to_json(*cert.witness) : Json(nullptr)).dump(2) << "\n";
  } else {
    out << certificate_to_json(cert).dump(2) << "\n";
  }
  return cert.is_free() ? kExitOk : kExitWitness;
}

int cmd_bound(const Params& p, std::ostream& out, std::ostream& err) {
  if (p.s < 3) throw InputError("bound needs s >= 3");
  if (p.k < 1) throw InputError("bound needs k >= 1");
  if (p.q < 2) throw InputError("bound needs q >= 2");
  const BigInt b = erdos_rado_bound_q(p.q, p.k, p.s);
  err << "prod_{i=1}^" << p.k << " [i(s-1)]_q = " << b << "\n" << kQIntegerAssumption << "\n";
  out << Json{{"q", p.q}, {"k", p.k}, {"s", p.s}, {"bound", b.str()}, {"assumption", kQIntegerAssumption}}.dump(2)
      << "\n";
  return kExitOk;
}

int demo_incl_excl(const Params& p, std::ostream& out, std::ostream& err) {
  const InclExclReport r = incl_excl_demo(field_for(p));
  const bool match = r.sum_dim == 3 && r.naive_rhs == 4 && r.pairwise_equal && r.dim_uv == 1 && r.dim_uvw == 1;
  err << "dim(U+V+W) = " << r.sum_dim << ", naive RHS = " << r.naive_rhs
      << (r.sum_dim != static_cast<std::size_t>(r.naive_rhs) ? ": inclusion-exclusion fails" : "") << "\n";
  out << Json{{"demo", "incl-excl"},
              {"q", p.q},
              {"computed",
               {{"sum_dim", r.sum_dim},
                {"naive_rhs", r.naive_rhs},
                {"pairwise_dims", {r.dim_uv, r.dim_uw, r.dim_vw}},
                {"triple_dim", r.dim_uvw},
                {"pairwise_equal", r.pairwise_equal}}},
              {"expected", {{"sum_dim", 3}, {"naive_rhs", 4}, {"pairwise_dims", {1, 1, 1}}, {"triple_dim", 1}}},
              {"match", match}}
             .dump(2)
      << "\n";
  return match ? kExitOk : kExitWitness;
}

int demo_example4(std::ostream& out, std::ostream& err) {
  const Field f2 = Field::make(2, 1);
  const Example4 ex = example4_triple(f2);
  const std::vector<Subspace> triple{ex.s1, ex.s2, ex.s3};
  const GpReport gp = is_gp_sunflower(triple);
  const IkExample ik = build_ik_family(f2);
  const bool contained = ik.family.find(ex.s1) && ik.family.find(ex.s2) && ik.family.find(ex.s3);
  const bool kernel_is_t = gp.kernel && *gp.kernel == ex.t;
  const bool match = kernel_is_t && gp.dims.kernel_dim == 1 && !gp.is_sunflower && gp.dims.sum_dim == 3 &&
                     gp.dims.general_position_target(3) == 4 && sum(triple) == ex.plane && contained;
  err << "kernel " << (kernel_is_t ? "= T" : "!= T") << ", sum dim " << gp.dims.sum_dim << " < "
      << gp.dims.general_position_target(3) << ", general position: " << (gp.is_sunflower ? "yes" : "no") << "\n";
  out << Json{{"demo", "example4"},
              {"computed",
               {{"kernel", gp.kernel ? subspace_to_json(*gp.kernel) : Json(nullptr)},
                {"kernel_dim", gp.dims.kernel_dim},
                {"sum_dim", gp.dims.sum_dim},
                {"gp_target", gp.dims.general_position_target(3)},
                {"general_position", gp.is_sunflower},
                {"in_ik_family", contained}}},
              {"expected",
               {{"kernel", subspace_to_json(ex.t)},
                {"kernel_dim", 1},
                {"sum_dim", 3},
                {"gp_target", 4},
                {"general_position", false},
                {"in_ik_family", true}}},
              {"match", match}}
             .dump(2)
      << "\n";
  return match ? kExitOk : kExitWitness;
}

int demo_rank_chain(const Params& p, std::ostream& out, std::ostream& err) {
  const std::size_t n = p.n == 0 ? 2 * p.ell + 1 : p.n;
  const ThmConstruction thm = build_thm_family(field_for(p), p.ell, n);
  Json computed;
  bool match = true;
  try {
    const RankChainReport r = verify_thm_rank_chain(thm);
    computed = {{"pair_rank", r.pair_rank},
                {"triple_rank", r.triple_rank},
                {"pairs_checked", r.pairs_checked},
                {"triples_checked", r.triples_checked},
                {"quotient_identities", r.quotient_identities},
                {"nonzero_columns", r.nonzero_columns},
                {"pair_intersection_dim", r.pair_intersection_dim},
                {"triple_intersection_dim", r.triple_intersection_dim}};
    err << r.pairs_checked << " pairs at rank " << r.pair_rank << ", " << r.triples_checked << " triples at rank "
        << r.triple_rank << "\n";
  } catch (const std::logic_error& e) {
    match = false;
    computed = {{"error", e.what()}};
    err << e.what() << "\n";
  }
  out << Json{{"demo", "rank-chain"},
              {"q", p.q},
              {"ell", p.ell},
              {"n", n},
              {"computed", computed},
              {"expected",
               {{"pair_rank", 2 * p.ell},
                {"triple_rank", 2 * p.ell + 1},
                {"pair_intersection_dim", n - 2 * p.ell},
                {"triple_intersection_dim", n - 2 * p.ell - 1}}},
              {"match", match}}
             .dump(2)
      << "\n";
  return match ? kExitOk : kExitWitness;
}

int cmd_demo(const Params& p, std::ostream& out, std::ostream& err) {
  if (p.demo == "incl-excl") return demo_incl_excl(p, out, err);
  if (p.demo == "example4") return demo_example4(out, err);
  if (p.demo == "rank-chain") return demo_rank_chain(p, out, err);
  throw InputError("unknown demo " + p.demo);
}

int cmd_field_info(const Params& p, std::ostream& out, std::ostream& err) {
  const Field f = field_for(p);
  err << f.describe() << "\n";
  Json j = field_to_json(f);
  j["order"] = f.order();
  out << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Params p;
  CLI::App app{"Sunflower-free families of subspaces over finite fields"};
  app.require_subcommand(1);
  app.add_flag("--allow-large-field", p.allow_large_field, "Permit fields up to order 256 (default cap 16)");

  auto* construct = app.add_subcommand("construct", "Build a family and print it as JSON");
  construct->add_option("kind", p.kind, "ik | thm | lifted-mrd | incl-excl")
      ->required()
      ->check(CLI::IsMember({"ik", "thm", "lifted-mrd", "incl-excl"}));
  construct->add_option("--q", p.q, "Field order");
  construct->add_option("--ell", p.ell, "Degree l of the matrix representation");
  construct->add_option("--n", p.n, "Ambient dimension (thm; default 2l+1)");

  auto add_verify_options = [&](CLI::App* cmd) {
    cmd->add_option("input", p.input, "Family document path, or - for stdin");
    cmd->add_option("--s", p.s, "Sunflower size s >= 3");
    cmd->add_option("--mode", p.mode, "set-like | gp")->check(CLI::IsMember({"set-like", "gp"}));
    cmd->add_option("--jobs", p.jobs, "Worker threads; output is identical for every value");
    cmd->add_option("--kernel", p.kernel, "Only accept sunflowers with this kernel (JSON basis rows)");
  };
  auto* verify = app.add_subcommand("verify", "Exhaustively check sunflower-freeness");
  add_verify_options(verify);
  auto* find = app.add_subcommand("find", "Like verify, but print only the witness (or null)");
  add_verify_options(find);

  auto* bound = app.add_subcommand("bound", "Evaluate prod_{i=1}^k [i(s-1)]_q");
  bound->add_option("--q", p.q)->required();
  bound->add_option("--k", p.k)->required();
  bound->add_option("--s", p.s)->required();

  auto* demo = app.add_subcommand("demo", "Recompute a worked example and compare with expected values");
  demo->add_option("name", p.demo, "incl-excl | example4 | rank-chain")->required();
  demo->add_option("--q", p.q);
  demo->add_option("--ell", p.ell);
  demo->add_option("--n", p.n);

  auto* info = app.add_subcommand("field-info", "Show the field F_q used for a given order");
  info->add_option("--q", p.q)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*construct) return cmd_construct(p, out, err);
    if (*verify) return cmd_verify(p, false, out, err, in);
    if (*find) return cmd_verify(p, true, out, err, in);
    if (*bound) return cmd_bound(p, out, err);
    if (*demo) return cmd_demo(p, out, err);
    if (*info) return cmd_field_info(p, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace qsun::cli
