#include "entangle/cli/cli.hpp"

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "entangle/cones/json_io.hpp"
#include "entangle/sandwich/sandwich.hpp"
#include "entangle/symbolic/identities.hpp"
#include "entangle/witness/witness.hpp"

namespace entangle::cli {

namespace fs = std::filesystem;
using cones::Cone;
using cones::Json;

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string corpus;
  std::string report;
  std::size_t guard = 12;
  std::size_t witness_guard = 64;
  bool trace = false;
  bool lp_check = false;
  std::string expect;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  Json details = Json::object();
  std::optional<std::string> certificate;
};

struct CorpusEntry {
  fs::path file;
  Json expected;
};

std::vector<CorpusEntry> read_manifest(const fs::path& dir) {
  const Json m = cones::read_json_file(dir / "manifest.json");
  require(m.contains("cones") && m["cones"].is_array(), "manifest.json needs a 'cones' array");
  std::vector<CorpusEntry> out;
  for (const auto& e : m["cones"]) {
    require(e.contains("file"), "manifest entry without 'file'");
    out.push_back({dir / e["file"].get<std::string>(), e});
  }
  return out;
}

std::string describe(const Cone& c) {
  const bool classical = cones::is_classical(c);
  return std::string(classical ? "classical" : "non-classical") + ", " + std::to_string(c.extreme_rays().size()) +
         " extreme rays in dim " + std::to_string(c.dim());
}

int cmd_classify(const Options& o, Context& ctx) {
  if (!o.corpus.empty()) {
    int code = kVerified;
    Json rows = Json::array();
    for (const auto& e : read_manifest(o.corpus)) {
      const Cone c = cones::load_cone(e.file);
      const bool classical = cones::is_classical(c);
      const std::size_t rays = c.extreme_rays().size();
      bool match = true;
      if (e.expected.contains("classical")) match = match && e.expected["classical"].get<bool>() == classical;
      if (e.expected.contains("extreme_rays")) match = match && e.expected["extreme_rays"].get<std::size_t>() == rays;
      ctx.out << c.name() << ": " << describe(c) << (match ? "" : "  [MISMATCH with manifest]") << "\n";
      rows.push_back({{"name", c.name()}, {"classical", classical}, {"extreme_rays", rays}, {"match", match}});
      if (!match) code = kCheckFailed;
    }
    ctx.details["cones"] = rows;
    return code;
  }
  require(o.inputs.size() == 1, "classify takes one cone file");
  const Cone c = cones::load_cone(o.inputs[0]);
  ctx.out << describe(c) << "\n";
  ctx.details = {{"name", c.name()},
                 {"classical", cones::is_classical(c)},
                 {"extreme_rays", c.extreme_rays().size()},
                 {"ambient_dim", c.dim()}};
  return kVerified;
}

int cmd_dual(const Options& o, Context& ctx) {
  require(o.inputs.size() == 1, "dual takes one cone file");
  const Cone c = cones::load_cone(o.inputs[0]);
  const Cone d = cones::dual(c);
  const bool bipolar = cones::same_rays(cones::dual(d), c);
  ctx.out << d.name() << ": " << describe(d) << "\n";
  ctx.out << "bipolar check: " << (bipolar ? "ok" : "FAILED") << "\n";
  if (!o.output.empty()) cones::write_json_file(o.output, cones::cone_to_json(d));
  ctx.details = {{"dual", cones::cone_to_json(d)}, {"bipolar", bipolar}};
  return bipolar ? kVerified : kCheckFailed;
}

Json sandwich_doc(const sandwich::Construction& con, const sandwich::SandwichReport& rep, bool trace) {
  Json j = sandwich::sandwich_to_json(con.sandwich);
  j["verified"] = rep.ok();
  if (trace) j["trace"] = sandwich::trace_to_json(con.trace);
  return j;
}

std::string kite_str(const sandwich::Kite& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) s += (i ? ", " : "") + k.alpha[i].str();
  return s + ")";
}

int cmd_sandwich(const Options& o, Context& ctx) {
  if (!o.corpus.empty()) {
    int code = kVerified;
    Json rows = Json::array();
    for (const auto& e : read_manifest(o.corpus)) {
      const Cone c = cones::load_cone(e.file);
      if (cones::is_classical(c)) {
        bool refused = false;
        try {
          sandwich::construct_sandwich(c);
        } catch (const sandwich::ClassicalConeError&) {
          refused = true;
        }
        ctx.out << c.name() << ": classical, " << (refused ? "refused" : "NOT refused") << "\n";
        rows.push_back({{"name", c.name()}, {"refused", refused}});
        if (!refused) code = kCheckFailed;
        continue;
      }
      const auto con = sandwich::construct_sandwich(c);
      const auto rep = sandwich::verify_sandwich(c, con.sandwich);
      ctx.out << c.name() << ": kite " << kite_str(con.sandwich.kite) << ", d = " << con.trace.d << ", "
              << (rep.ok() ? "verified" : "FAILED") << "\n";
      rows.push_back({{"name", c.name()}, {"verified", rep.ok()}, {"d", con.trace.d}});
      if (!rep.ok()) code = kCheckFailed;
    }
    ctx.details["cones"] = rows;
    return code;
  }
  require(o.inputs.size() == 1, "sandwich takes one cone file");
  const Cone c = cones::load_cone(o.inputs[0]);
  const auto con = sandwich::construct_sandwich(c);
  const auto rep = sandwich::verify_sandwich(c, con.sandwich);
  ctx.out << "kite alpha = " << kite_str(con.sandwich.kite) << "\n";
  ctx.out << "d = " << con.trace.d << ", face of " << con.trace.face.vertex_indices.size() << " vertices\n";
  ctx.out << "squash*embed = I3: " << (rep.identity ? "ok" : "FAILED") << "\n";
  ctx.out << "embed(kite) in cone: " << (rep.embed_in_cone ? "ok" : "FAILED") << "\n";
  ctx.out << "squash(cone) in blunt square: " << (rep.squash_blunt ? "ok" : "FAILED") << "\n";
  const Json doc = sandwich_doc(con, rep, o.trace);
  if (!o.output.empty()) cones::write_json_file(o.output, doc);
  ctx.details = {{"verified", rep.ok()}, {"failures", rep.failures}};
  return rep.ok() ? kVerified : kCheckFailed;
}

void refuse_classical(const Cone& c) {
  if (cones::is_classical(c)) {
    throw InvalidInput("'" + c.name() + "' is classical: classical factor ⇒ nuclear pair");
  }
}

void print_checks(std::ostream& out, const witness::CertificateChecks& ch) {
  out << "(a) W in C1 max C2: " << (ch.a.pass ? "pass" : "FAIL") << "  " << ch.a.detail << "\n";
  out << "(b) G < 0 on C1 min C2: " << (ch.b.pass ? "pass" : "FAIL") << "  " << ch.b.detail << "\n";
  out << "(c) <G, W> >= 0: " << (ch.c.pass ? "pass" : "FAIL") << "  " << ch.c.detail << "\n";
  out << "(d) consistency: " << (ch.d.pass ? "pass" : "FAIL") << "  " << ch.d.detail << "\n";
}

Json checks_json(const witness::CertificateChecks& ch) {
  return {{"a", ch.a.pass}, {"b", ch.b.pass}, {"c", ch.c.pass}, {"d", ch.d.pass}};
}

void check_guard(const Cone& c1, const Cone& c2, std::size_t guard) {
  require(c1.dim() * c2.dim() <= guard, "tensor dimension " + std::to_string(c1.dim() * c2.dim()) +
                                            " exceeds the guard " + std::to_string(guard));
}

int cmd_witness(const Options& o, Context& ctx) {
  if (!o.corpus.empty()) {
    std::vector<Cone> list;
    std::vector<sandwich::Sandwich> sw;
    for (const auto& e : read_manifest(o.corpus)) {
      Cone c = cones::load_cone(e.file);
      if (cones::is_classical(c)) continue;
      sw.push_back(sandwich::construct_sandwich(c).sandwich);
      list.push_back(std::move(c));
    }
    if (!o.output.empty()) fs::create_directories(o.output);
    int code = kVerified;
    std::size_t passed = 0, total = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = 0; j < list.size(); ++j) {
        if (list[i].dim() * list[j].dim() > o.witness_guard) continue;
        ++total;
        const auto cert = witness::build_witness(list[i], sw[i], list[j], sw[j]);
        bool ok = cert.checks.all();
        if (o.lp_check) {
          const auto lp = witness::lp_cross_check(list[i], list[j], cert.w);
          ok = ok && lp.infeasible && lp.farkas_valid;
        }
        if (ok) ++passed;
        else code = kCheckFailed;
        ctx.out << list[i].name() << " x " << list[j].name() << ": " << (ok ? "pass" : "FAIL " + cert.checks.first_failure())
                << "\n";
        if (!o.output.empty()) {
          cones::write_json_file(fs::path(o.output) / (list[i].name() + "__" + list[j].name() + ".json"),
                                 witness::certificate_to_json(cert));
        }
      }
    }
    ctx.out << passed << "/" << total << " pairs certified\n";
    ctx.details = {{"pairs", total}, {"passed", passed}};
    return code;
  }
  require(o.inputs.size() == 2, "witness takes two cone files");
  const Cone c1 = cones::load_cone(o.inputs[0]);
  const Cone c2 = cones::load_cone(o.inputs[1]);
  refuse_classical(c1);
  refuse_classical(c2);
  check_guard(c1, c2, o.witness_guard);
  const auto s1 = sandwich::construct_sandwich(c1).sandwich;
  const auto s2 = sandwich::construct_sandwich(c2).sandwich;
  const auto cert = witness::build_witness(c1, s1, c2, s2);
  const auto checks = witness::verify_certificate(cert);
  ctx.out << "alpha = " << kite_str(cert.s1.kite) << (cert.sigma_fixed ? " (after sigma fix)" : "") << "\n";
  ctx.out << "beta = " << kite_str(cert.s2.kite) << "\n";
  print_checks(ctx.out, checks);
  bool ok = checks.all();
  ctx.details = {{"checks", checks_json(checks)}, {"sigma_fixed", cert.sigma_fixed}};
  if (o.lp_check) {
    const auto lp = witness::lp_cross_check(c1, c2, cert.w);
    ctx.out << "LP cross-check: " << (lp.infeasible && lp.farkas_valid ? "W not in C1 min C2, Farkas certificate valid" : "FAILED")
            << "\n";
    ok = ok && lp.infeasible && lp.farkas_valid;
    ctx.details["lp_check"] = lp.infeasible && lp.farkas_valid;
  }
  if (!o.output.empty()) {
    cones::write_json_file(o.output, witness::certificate_to_json(cert));
    ctx.certificate = o.output;
  }
  ctx.out << (ok ? "entangleable: certificate verified" : "certificate FAILED: " + checks.first_failure()) << "\n";
  return ok ? kVerified : kCheckFailed;
}

int cmd_verify(const Options& o, Context& ctx) {
  require(o.inputs.size() == 1, "verify takes one certificate file");
  const auto cert = witness::certificate_from_json(cones::read_json_file(o.inputs[0]));
  const auto checks = witness::verify_certificate(cert);
  print_checks(ctx.out, checks);
  ctx.details = {{"checks", checks_json(checks)}};
  ctx.certificate = o.inputs[0];
  if (checks.all()) {
    ctx.out << "certificate verified\n";
    return kVerified;
  }
  ctx.out << "certificate FAILED at check " << checks.first_failure() << "\n";
  return kCheckFailed;
}

int cmd_nuclear(const Options& o, Context& ctx) {
  require(o.inputs.size() == 2, "nuclear-check takes two cone files");
  require(o.expect.empty() || o.expect == "equal" || o.expect == "entangleable",
          "--expect must be 'equal' or 'entangleable'");
  const Cone c1 = cones::load_cone(o.inputs[0]);
  const Cone c2 = cones::load_cone(o.inputs[1]);
  const auto res = cones::nuclear_check(c1, c2, o.guard);
  ctx.out << "max tensor cone has " << res.max_rays << " extreme rays\n";
  ctx.out << (res.equal ? "equal: min and max tensor products coincide (nuclear pair)"
                        : "not equal: entangleable pair")
          << "\n";
  bool ok = true;
  if (res.witness) {
    ok = cones::max_tensor_contains(c1, c2, *res.witness).contains &&
         cones::min_tensor_contains(c1, c2, *res.witness).status == lp::LpStatus::Infeasible;
    ctx.out << "witness ray: " << cones::to_json(*res.witness).dump() << (ok ? "" : "  [inconsistent]") << "\n";
  }
  ctx.details = {{"equal", res.equal}, {"max_rays", res.max_rays}};
  if (!o.expect.empty()) ok = ok && (o.expect == "equal") == res.equal;
  return ok ? kVerified : kCheckFailed;
}

int cmd_identity(const Options&, Context& ctx) {
  const auto id = symbolic::check_magical_identity();
  ctx.out << "f(omega) + R(alpha)R(beta) = " << id.residual << "  (" << id.f_terms << " monomials on each side)\n";
  const auto pos = symbolic::check_weight_positivity();
  for (const auto& f : symbolic::weight_factorizations()) {
    ctx.out << "c" << f.index << " = " << symbolic::factorization_str(f) << ": "
            << (pos.matches[f.index - 1] ? "ok" : "FAILED") << "\n";
  }
  const bool balance = symbolic::check_balance();
  ctx.out << "c1 t1 + c3 t3 = c2 t2 + c4 t4: " << (balance ? "ok" : "FAILED") << "\n";
  const bool ok = id.holds && id.same_support && pos.all() && balance;
  ctx.details = {{"identity", id.holds}, {"support", id.same_support}, {"positivity", pos.all()}, {"balance", balance}};
  return ok ? kVerified : kCheckFailed;
}

int cmd_demo(const Options&, Context& ctx) {
  bool ok = true;
  Json rows = Json::array();
  int i = 1;
  for (const auto& c : qubit_checks()) {
    ctx.out << "(" << i++ << ") " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "  " << c.detail << "\n";
    rows.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    ok = ok && c.pass;
  }
  ctx.details["checks"] = rows;
  return ok ? kVerified : kCheckFailed;
}

using Handler = int (*)(const Options&, Context&);

const char* outcome_name(int code) {
  switch (code) {
    case kVerified: return "verified";
    case kCheckFailed: return "check_failed";
    default: return "error";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for tensor products of polyhedral cones", "cone"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--report", o.report, "write a JSON run report");

  std::map<CLI::App*, Handler> handlers;
  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers[sub] = h;
    return sub;
  };

  auto* classify = add("classify", "properness and classical status of a cone", cmd_classify);
  classify->add_option("cone", o.inputs, "cone file");
  classify->add_option("--corpus", o.corpus, "classify every cone of a corpus manifest");

  auto* dual = add("dual", "dual cone", cmd_dual);
  dual->add_option("cone", o.inputs, "cone file")->required();
  dual->add_option("-o", o.output, "output cone file");

  auto* sw = add("sandwich", "kite-square sandwich of a non-classical cone", cmd_sandwich);
  sw->add_option("cone", o.inputs, "cone file");
  sw->add_option("-o", o.output, "output file");
  sw->add_flag("--trace", o.trace, "include the construction trace");
  sw->add_option("--corpus", o.corpus, "run on every cone of a corpus manifest");

  auto* wt = add("witness", "entanglement witness for two non-classical cones", cmd_witness);
  wt->add_option("cones", o.inputs, "two cone files");
  wt->add_option("-o", o.output, "certificate file (a directory with --corpus)");
  wt->add_option("--guard", o.witness_guard, "largest allowed m1*m2")->capture_default_str();
  wt->add_flag("--lp-check", o.lp_check, "also confirm W is not separable through the membership LP");
  wt->add_option("--corpus", o.corpus, "every ordered pair of non-classical corpus cones");

  auto* vf = add("verify", "re-check a certificate file", cmd_verify);
  vf->add_option("certificate", o.inputs, "certificate file")->required();

  auto* nc = add("nuclear-check", "compare min and max tensor products", cmd_nuclear);
  nc->add_option("cones", o.inputs, "two cone files")->required();
  nc->add_option("--guard", o.guard, "largest allowed m1*m2")->capture_default_str();
  nc->add_option("--expect", o.expect, "equal | entangleable; exit 1 on a different outcome");

  add("identity-check", "symbolic identities behind the witness", cmd_identity);
  add("demo-qubit", "exact checks of the two-qubit example", cmd_demo);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kVerified : kUsage;
  }

  Context ctx{out, err, Json::object(), std::nullopt};
  std::string command;
  int code = kUsage;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    command = sub->get_name();
    try {
      code = handler(o, ctx);
    } catch (const InternalCheckFailed& e) {
      err << "internal check failed: " << e.what() << "\n";
      code = kCheckFailed;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      code = kUsage;
    } catch (const Json::exception& e) {
      err << "error: malformed JSON: " << e.what() << "\n";
      code = kUsage;
    } catch (const fs::filesystem_error& e) {
      err << "error: " << e.what() << "\n";
      code = kUsage;
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (!o.report.empty()) {
    Json rep{{"command", command},
             {"inputs", o.inputs},
             {"outcome", outcome_name(code)},
             {"exit_code", code},
             {"timings", {{"total_ms", ms}}},
             {"certificate", ctx.certificate ? Json(*ctx.certificate) : Json(nullptr)},
             {"details", ctx.details}};
    if (!o.corpus.empty()) rep["corpus"] = o.corpus;
    try {
      cones::write_json_file(o.report, rep);
    } catch (const std::exception& e) {
      err << "error: cannot write report: " << e.what() << "\n";
      return kUsage;
    }
  }
  return code;
}

}  // namespace entangle::cli
